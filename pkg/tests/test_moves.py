from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palbraid.braid import BraidWord, concat, free_reduce, identity
from palbraid.corpus import load_corpus
from palbraid.closure import EquivariantPair, closure_diagram, component_count, parse_pair
from palbraid.errors import FactorizationNotFound, ParseError, PreconditionFailed, StrandMismatch
from palbraid.garside import is_palindromic, words_equal
from palbraid.invariants import alexander, jones
from palbraid.moves import (
    SWAP,
    MoveDescriptor,
    MoveTag,
    apply_move,
    double_stab,
    eq_conjugate,
    format_move,
    parse_move,
    stab_e,
    stab_s,
    swap,
)

from strategies import pairs, words


def W(n, *letters):
    return BraidWord(n, letters)


def P(text):
    return parse_pair(text)


def J(p):
    return jones(closure_diagram(p))


TRIVIAL1 = EquivariantPair(identity(1), identity(1))
TREFOIL = P("2:|1 1 1")


def test_descriptor_validation():
    with pytest.raises(ValueError):
        MoveDescriptor(MoveTag.EQ_CONJUGATE)
    with pytest.raises(ValueError):
        MoveDescriptor(MoveTag.SWAP, sign=1)
    with pytest.raises(ValueError):
        MoveDescriptor.stab("S", "left", 1)
    with pytest.raises(ValueError):
        MoveDescriptor.dstab(2, 1)


@pytest.mark.parametrize(
    "text", ["conj 1 -2", "conj", "stabS first +", "stabE second -", "dstab - +", "swap"]
)
def test_move_text_round_trip(text):
    m = parse_move(text, 3)
    assert format_move(m) == text
    assert parse_move(format_move(m), 3) == m


def test_move_text_errors():
    for bad in ("", "stabS middle +", "dstab +", "twist", "swap now", "stabS first *"):
        with pytest.raises(ParseError):
            parse_move(bad, 3)


def test_eq_conjugate_examples():
    assert eq_conjugate(TREFOIL, identity(2)) == TREFOIL
    q = eq_conjugate(TREFOIL, W(2, 1))
    assert q == EquivariantPair(W(2, 1, 1), W(2, -1, 1, 1, 1, -1))
    assert free_reduce(q.beta) == W(2, 1)
    assert J(q) == J(TREFOIL)
    with pytest.raises(StrandMismatch):
        eq_conjugate(TREFOIL, W(3, 1))


def test_stab_s_examples():
    assert stab_s(TRIVIAL1, "first", 1) == EquivariantPair(W(2, 1), identity(2))
    assert J(stab_s(TRIVIAL1, "first", 1)) == 1
    q = stab_s(TREFOIL, "first", 1)
    assert q == EquivariantPair(W(3, 1), W(3, 2, 2, 2))
    assert J(q) == J(TREFOIL)
    assert is_palindromic(q.alpha) and is_palindromic(q.beta)


def test_stab_s_precondition():
    # sigma_1 on 2 strands: every factorization has sigma_1 in the block
    with pytest.raises(PreconditionFailed):
        stab_s(P("2:1|"), "first", 1)
    # the second component is untouched by a first-side stabilization
    assert stab_s(P("2:|1"), "first", -1) == EquivariantPair(W(3, -1), W(3, 2))


def test_stab_e_examples():
    assert stab_e(TRIVIAL1, "second", -1) == EquivariantPair(identity(2), W(2, -1))
    assert J(stab_e(TRIVIAL1, "second", -1)) == 1
    for sign in (1, -1):
        q = stab_e(TREFOIL, "first", sign)
        assert q == EquivariantPair(W(3, 2 * sign), W(3, 1, 1, 1))
        assert J(q) == J(TREFOIL)
    with pytest.raises(PreconditionFailed):
        stab_e(P("2:|1"), "second", 1)


def test_double_stab_examples():
    q = double_stab(TRIVIAL1, 1, 1)
    assert q == EquivariantPair(W(3, 1), W(3, 2, -1, 2))
    for eps in (1, -1):
        for eta in (1, -1):
            q = double_stab(TRIVIAL1, eps, eta)
            assert q.strands == 3 and J(q) == 1
            assert is_palindromic(q.alpha) and is_palindromic(q.beta)


def test_double_stab_preserves_corpus_links():
    for e in load_corpus():
        p = e.pair()
        a = alexander(p)
        for eps in (1, -1):
            q = double_stab(p, eps, -eps)
            assert alexander(q) == a, e.name
            assert component_count(q) == component_count(p)


def test_swap():
    assert swap(TREFOIL) == EquivariantPair(W(2, 1, 1, 1), identity(2))
    assert swap(swap(TREFOIL)) == TREFOIL
    assert J(swap(TREFOIL)) == J(TREFOIL)


def test_apply_move_dispatch():
    assert apply_move(TREFOIL, MoveDescriptor.conj(W(2, 1))) == eq_conjugate(TREFOIL, W(2, 1))
    assert apply_move(TREFOIL, MoveDescriptor.stab("S", "first", 1)) == stab_s(TREFOIL)
    assert apply_move(TREFOIL, MoveDescriptor.stab("E", "first", 1)) == stab_e(TREFOIL)
    assert apply_move(TRIVIAL1, MoveDescriptor.dstab(1, -1)) == double_stab(TRIVIAL1, 1, -1)
    assert apply_move(TREFOIL, SWAP) == swap(TREFOIL)


def test_factorization_failure_names_the_component(monkeypatch):
    import palbraid.moves as moves_mod
    from palbraid.errors import NotFoundWithinBound

    def give_up(*args, **kwargs):
        raise NotFoundWithinBound("budget exhausted")

    monkeypatch.setattr(moves_mod, "deloup_factorize", give_up)
    with pytest.raises(FactorizationNotFound) as exc:
        stab_s(TREFOIL, "second", 1)
    assert exc.value.which == "second"
    with pytest.raises(FactorizationNotFound) as exc:
        double_stab(TREFOIL, 1, 1)
    assert exc.value.which == "first"


@settings(max_examples=40, deadline=None)
@given(pairs(max_strands=4), words(strands=4, max_len=3), words(strands=4, max_len=3))
def test_eq_conjugate_composes(p, e1, e2):
    if p.strands != 4:
        return
    q1 = eq_conjugate(eq_conjugate(p, e1), e2)
    q2 = eq_conjugate(p, concat(e2, e1))
    assert words_equal(q1.alpha, q2.alpha) and words_equal(q1.beta, q2.beta)


@settings(max_examples=40, deadline=None)
@given(pairs(max_strands=4), st.data())
def test_eq_conjugate_keeps_palindromes(p, data):
    e = data.draw(words(strands=p.strands, max_len=4))
    q = eq_conjugate(p, e)
    assert is_palindromic(q.alpha) and is_palindromic(q.beta)
