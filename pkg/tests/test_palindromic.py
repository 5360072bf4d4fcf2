from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palbraid.braid import BraidWord, embed_e, identity, shift_s
from palbraid.corpus import load_corpus
from palbraid.errors import NotFoundWithinBound, NotPalindromic
from palbraid.garside import words_equal
from palbraid.palindromic import deloup_factorize, is_seed_block, seed_blocks

from strategies import palindromic_words


def W(n, *letters):
    return BraidWord(n, letters)


def test_seed_block_examples():
    assert is_seed_block(W(4, 1, -3))
    assert is_seed_block(identity(4))
    assert not is_seed_block(W(3, 1, 2))
    assert not is_seed_block(W(3, 1, 1))
    assert not is_seed_block(W(5, 1, 3, 1))


def test_seed_blocks_enumeration():
    blocks = seed_blocks(4)
    # subsets of {1,2,3} with gaps >= 2: {}, {1}, {2}, {3}, {1,3}; each letter signed
    assert len(blocks) == 1 + 2 + 2 + 2 + 4
    assert all(is_seed_block(b) for b in blocks)
    assert all(1 not in b.indices() for b in seed_blocks(4, frozenset({1})))


def test_factorize_examples():
    f = deloup_factorize(W(2, 1, 1, 1))
    assert f.x == W(2, 1) and f.block == W(2, 1)
    f = deloup_factorize(W(4, 3, -2, 1, -3, -2, 3))
    assert f.x == W(4, 3, -2) and f.block == W(4, 1, -3)
    assert f.verify(W(4, 3, -2, 1, -3, -2, 3))
    f = deloup_factorize(identity(3))
    assert f.x == identity(3) and f.block == identity(3)


def test_factorize_needs_group_level_search():
    # 2 1 2 = 1 2 1, so x = 1 with block 2 avoids sigma_1 in the block
    f = deloup_factorize(W(3, 2, 1, 2), avoid={1})
    assert f.x == W(3, 1) and f.block == W(3, 2)
    assert f.verify(W(3, 2, 1, 2))


def test_factorize_errors():
    with pytest.raises(NotPalindromic):
        deloup_factorize(W(3, 1, 2))
    # sigma_1 alone on 2 strands: its only factorizations put sigma_1 in the block
    with pytest.raises(NotFoundWithinBound):
        deloup_factorize(W(2, 1), avoid={1})


def test_every_corpus_braid_factorizes():
    for e in load_corpus():
        p = e.pair()
        for w in (p.alpha, p.beta):
            f = deloup_factorize(w, max_x_len=len(w))
            assert f.verify(w)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: palindromic_words(n, 3)))
def test_factorization_verifies_and_lifts(w):
    f = deloup_factorize(w)
    assert is_seed_block(f.block)
    assert words_equal(f.word(), w)
    assert f.shift_s().verify(shift_s(w))
    assert f.embed_e().verify(embed_e(w))
    assert deloup_factorize(shift_s(w)).verify(shift_s(w))
