"""Equivariant Markov moves on pairs of palindromic braids.

Every move takes an :class:`EquivariantPair` and returns a new one whose
equivariant closure is the same strongly involutive link.  Results are left
unreduced so that traces can be replayed letter for letter.

Stabilizations need the component written as ``x * block * reverse(x)``;
they use :func:`palbraid.palindromic.deloup_factorize` with the default bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .braid import BraidWord, concat, embed_e, format_word, generator, inverse, parse_word, reverse, shift_s
from .closure import EquivariantPair
from .errors import FactorizationNotFound, NotFoundWithinBound, ParseError, PreconditionFailed, StrandMismatch
from .palindromic import DeloupFactorization, deloup_factorize

__all__ = [
    "MoveTag",
    "MoveDescriptor",
    "eq_conjugate",
    "stab_s",
    "stab_e",
    "double_stab",
    "swap",
    "apply_move",
    "parse_move",
    "format_move",
]


class MoveTag(enum.Enum):
    EQ_CONJUGATE = "conj"
    STAB_S = "stabS"
    STAB_E = "stabE"
    DOUBLE_STAB = "dstab"
    SWAP = "swap"


_SIDES = ("first", "second")


@dataclass(frozen=True)
class MoveDescriptor:
    tag: MoveTag
    word: BraidWord | None = None
    side: str | None = None
    sign: int | None = None
    epsilon: int | None = None
    eta: int | None = None

    def __post_init__(self):
        need = {
            MoveTag.EQ_CONJUGATE: {"word"},
            MoveTag.STAB_S: {"side", "sign"},
            MoveTag.STAB_E: {"side", "sign"},
            MoveTag.DOUBLE_STAB: {"epsilon", "eta"},
            MoveTag.SWAP: set(),
        }[self.tag]
        for name in ("word", "side", "sign", "epsilon", "eta"):
            present = getattr(self, name) is not None
            if present != (name in need):
                raise ValueError(f"{self.tag.value} move {'needs' if not present else 'takes no'} {name}")
        if self.side is not None and self.side not in _SIDES:
            raise ValueError(f"side must be 'first' or 'second', got {self.side!r}")
        for name in ("sign", "epsilon", "eta"):
            v = getattr(self, name)
            if v is not None and v not in (1, -1):
                raise ValueError(f"{name} must be +1 or -1, got {v!r}")

    def __str__(self) -> str:
        return format_move(self)

    @classmethod
    def conj(cls, word: BraidWord) -> MoveDescriptor:
        return cls(MoveTag.EQ_CONJUGATE, word=word)

    @classmethod
    def stab(cls, kind: str, side: str, sign: int) -> MoveDescriptor:
        tag = MoveTag.STAB_S if kind.upper() == "S" else MoveTag.STAB_E
        return cls(tag, side=side, sign=sign)

    @classmethod
    def dstab(cls, epsilon: int, eta: int) -> MoveDescriptor:
        return cls(MoveTag.DOUBLE_STAB, epsilon=epsilon, eta=eta)


SWAP = MoveDescriptor(MoveTag.SWAP)


def _sign_text(s: int) -> str:
    return "+" if s > 0 else "-"


def format_move(m: MoveDescriptor) -> str:
    if m.tag is MoveTag.EQ_CONJUGATE:
        return f"conj {format_word(m.word)}".rstrip()
    if m.tag in (MoveTag.STAB_S, MoveTag.STAB_E):
        return f"{m.tag.value} {m.side} {_sign_text(m.sign)}"
    if m.tag is MoveTag.DOUBLE_STAB:
        return f"dstab {_sign_text(m.epsilon)} {_sign_text(m.eta)}"
    return "swap"


def _parse_sign(token: str) -> int:
    if token in ("+", "+1", "1"):
        return 1
    if token in ("-", "-1"):
        return -1
    raise ParseError(f"expected + or -, got {token!r}")


def parse_move(text: str, strands: int) -> MoveDescriptor:
    """Parse ``conj <word>``, ``stabS first|second +|-``, ``stabE ...``,
    ``dstab +|- +|-`` or ``swap``; ``strands`` is the pair's strand count."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty move")
    head, rest = tokens[0], tokens[1:]
    try:
        if head == "conj":
            return MoveDescriptor.conj(parse_word(" ".join(rest), strands))
        if head in ("stabS", "stabE"):
            if len(rest) != 2 or rest[0] not in _SIDES:
                raise ParseError(f"usage: {head} first|second +|-")
            return MoveDescriptor.stab(head[-1], rest[0], _parse_sign(rest[1]))
        if head == "dstab":
            if len(rest) != 2:
                raise ParseError("usage: dstab +|- +|-")
            return MoveDescriptor.dstab(_parse_sign(rest[0]), _parse_sign(rest[1]))
        if head == "swap" and not rest:
            return SWAP
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown move {text!r}")


# ---------------------------------------------------------------------------


def eq_conjugate(p: EquivariantPair, e: BraidWord) -> EquivariantPair:
    """(alpha, beta) -> (e alpha rev(e), rev(e)^-1 beta e^-1)."""
    if e.strands != p.strands:
        raise StrandMismatch(f"conjugating word on {e.strands} strands, pair on {p.strands}")
    e_rev = reverse(e)
    return EquivariantPair(
        concat(e, p.alpha, e_rev),
        concat(inverse(e_rev), p.beta, inverse(e)),
    )


def swap(p: EquivariantPair) -> EquivariantPair:
    return EquivariantPair(p.beta, p.alpha)


def _factor(w: BraidWord, which: str, avoid: frozenset[int] = frozenset()) -> DeloupFactorization:
    try:
        return deloup_factorize(w, avoid=avoid)
    except NotFoundWithinBound:
        if not avoid:
            raise FactorizationNotFound(f"no factorization of the {which} component {w}", which) from None
    try:
        deloup_factorize(w, check_palindromic=False)
    except NotFoundWithinBound:
        raise FactorizationNotFound(f"no factorization of the {which} component {w}", which) from None
    gens = ", ".join(f"sigma_{i}" for i in sorted(avoid))
    raise PreconditionFailed(f"every factorization found for the {which} component uses {gens}")


def _stabilize(p: EquivariantPair, side: str, sign: int, kind: str) -> EquivariantPair:
    if side not in _SIDES:
        raise ValueError(f"side must be 'first' or 'second', got {side!r}")
    n = p.strands
    chosen, other = (p.alpha, p.beta) if side == "first" else (p.beta, p.alpha)
    if kind == "S":
        f = _factor(chosen, side, frozenset({1}) if n > 1 else frozenset())
        lift = shift_s
        new_gen = generator(1, n + 1, sign)
    else:
        f = _factor(chosen, side, frozenset({n - 1}) if n > 1 else frozenset())
        lift = embed_e
        new_gen = generator(n, n + 1, sign)
    stabilized = concat(lift(f.x), lift(f.block), new_gen, lift(reverse(f.x)))
    if side == "first":
        return EquivariantPair(stabilized, lift(other))
    return EquivariantPair(lift(other), stabilized)


def stab_s(p: EquivariantPair, side: str = "first", sign: int = 1) -> EquivariantPair:
    """Stabilization of type S on a fixed point: a new leftmost strand.

    The chosen component ``x block rev(x)`` becomes
    ``S(x) S(block) sigma_1^sign S(rev(x))``; the other one is shifted.
    """
    return _stabilize(p, side, sign, "S")


def stab_e(p: EquivariantPair, side: str = "first", sign: int = 1) -> EquivariantPair:
    """Stabilization of type E on a fixed point: a new rightmost strand.

    On an m-strand pair the block must avoid sigma_{m-1}; the inserted
    generator is sigma_m, the new top generator.
    """
    return _stabilize(p, side, sign, "E")


def double_stab(p: EquivariantPair, epsilon: int = 1, eta: int = 1) -> EquivariantPair:
    """Add two strands on the left.

    With alpha = x D rev(x) and beta = y D' rev(y) the result is
    ``(S2(x) S2(D) s1^eps S2(rev x),  s2^eta S2(y) S2(D') s1^-eps S2(rev y) s2^eta)``.
    """
    fa = _factor(p.alpha, "first")
    fb = _factor(p.beta, "second")
    m = p.strands + 2
    s1 = generator(1, m, epsilon)
    s1_inv = generator(1, m, -epsilon)
    s2 = generator(2, m, eta)
    first = concat(shift_s(fa.x, 2), shift_s(fa.block, 2), s1, shift_s(reverse(fa.x), 2))
    second = concat(
        s2, shift_s(fb.x, 2), shift_s(fb.block, 2), s1_inv, shift_s(reverse(fb.x), 2), s2
    )
    return EquivariantPair(first, second)


def apply_move(p: EquivariantPair, m: MoveDescriptor) -> EquivariantPair:
    if m.tag is MoveTag.EQ_CONJUGATE:
        return eq_conjugate(p, m.word)
    if m.tag is MoveTag.STAB_S:
        return stab_s(p, m.side, m.sign)
    if m.tag is MoveTag.STAB_E:
        return stab_e(p, m.side, m.sign)
    if m.tag is MoveTag.DOUBLE_STAB:
        return double_stab(p, m.epsilon, m.eta)
    return swap(p)
