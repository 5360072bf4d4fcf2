"""Word problem in B_n through Garside left normal forms.

Every braid is written uniquely as ``Delta^inf * s_1 ... s_k`` where Delta is
the positive half-twist and the ``s_j`` are permutation braids, none equal to
the identity or to Delta, with every adjacent pair left-weighted: the starting
set of ``s_{j+1}`` is contained in the finishing set of ``s_j``.

Permutation braids are stored as 0-based tuples ``f`` with ``f[p]`` the final
position of the strand that starts at position ``p``.  Strands ``p < q``
cross in the braid iff ``f[p] > f[q]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord, inverse, reverse
from .errors import StrandMismatch

__all__ = [
    "SimpleFactor",
    "NormalForm",
    "normal_form",
    "words_equal",
    "is_identity",
    "is_palindromic",
    "simple_word",
    "half_twist",
]

SimpleFactor = tuple[int, ...]


@lru_cache(maxsize=None)
def _delta(n: int) -> SimpleFactor:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def _sigma(i: int, n: int) -> SimpleFactor:
    f = list(range(n))
    f[i - 1], f[i] = i, i - 1
    return tuple(f)


def _tau(f: SimpleFactor) -> SimpleFactor:
    # conjugation by Delta: sigma_i -> sigma_{n-i}
    n = len(f)
    return tuple(n - 1 - f[n - 1 - p] for p in range(n))


def _inv(f: SimpleFactor) -> list[int]:
    g = [0] * len(f)
    for p, q in enumerate(f):
        g[q] = p
    return g


def starting_set(f: SimpleFactor) -> int:
    """Bitmask of i (bit i-1) such that sigma_i is a prefix of f."""
    mask = 0
    for i in range(1, len(f)):
        if f[i - 1] > f[i]:
            mask |= 1 << (i - 1)
    return mask


def finishing_set(f: SimpleFactor) -> int:
    """Bitmask of i (bit i-1) such that sigma_i is a suffix of f."""
    g = _inv(f)
    mask = 0
    for i in range(1, len(f)):
        if g[i - 1] > g[i]:
            mask |= 1 << (i - 1)
    return mask


def _left_weight(a: SimpleFactor, b: SimpleFactor) -> tuple[SimpleFactor, SimpleFactor]:
    """Slide letters from the front of ``b`` to the back of ``a`` until (a, b) is left-weighted."""
    a_l, b_l = list(a), list(b)
    while True:
        movable = starting_set(tuple(b_l)) & ~finishing_set(tuple(a_l))
        if not movable:
            return tuple(a_l), tuple(b_l)
        i = (movable & -movable).bit_length()
        # a <- a sigma_i : swap the final positions i-1, i
        a_l = [i if q == i - 1 else i - 1 if q == i else q for q in a_l]
        # b <- sigma_i^-1 b : strands entering at i-1, i trade places
        b_l[i - 1], b_l[i] = b_l[i], b_l[i - 1]


@dataclass(frozen=True, order=True)
class NormalForm:
    """Left normal form ``Delta^inf * factors``; equality is braid equality."""

    strands: int
    inf: int
    factors: tuple[SimpleFactor, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def to_word(self) -> BraidWord:
        """A word representing this braid: the half-twist power, then each factor."""
        n = self.strands
        d = half_twist(n)
        letters: list[int] = []
        power = d if self.inf >= 0 else inverse(d)
        for _ in range(abs(self.inf)):
            letters.extend(power.letters)
        for f in self.factors:
            letters.extend(simple_word(f).letters)
        return BraidWord(n, tuple(letters))


def simple_word(f: SimpleFactor) -> BraidWord:
    """The positive word of a permutation braid, always peeling the least starting generator."""
    n = len(f)
    g = list(f)
    letters = []
    while True:
        mask = starting_set(tuple(g))
        if not mask:
            return BraidWord(n, tuple(letters))
        i = (mask & -mask).bit_length()
        letters.append(i)
        g[i - 1], g[i] = g[i], g[i - 1]


def half_twist(n: int) -> BraidWord:
    return simple_word(_delta(n))


def normal_form(w: BraidWord) -> NormalForm:
    n = w.strands
    if n == 1:
        return NormalForm(1, 0, ())
    delta = _delta(n)

    # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); pushing Delta^-1 to the far left
    # twists every earlier factor by tau once.
    raw: list[SimpleFactor] = []
    twists: list[int] = []
    negatives = 0
    for k in w.letters:
        if k > 0:
            raw.append(_sigma(k, n))
        else:
            s = _sigma(-k, n)
            raw.append(tuple(s[delta[p]] for p in range(n)))
            negatives += 1
        twists.append(negatives)
    inf = -negatives
    factors: list[SimpleFactor] = []
    for f, t in zip(raw, twists):
        if (negatives - t) % 2:
            f = _tau(f)
        factors.append(f)
        for j in range(len(factors) - 2, -1, -1):
            factors[j], factors[j + 1] = _left_weight(factors[j], factors[j + 1])

    ident = tuple(range(n))
    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    body = [f for f in factors[lead:] if f != ident]
    return NormalForm(n, inf + lead, tuple(body))


def _check_strands(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise StrandMismatch(f"braids on {u.strands} and {v.strands} strands")


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    _check_strands(u, v)
    return normal_form(u) == normal_form(v)


def is_identity(w: BraidWord) -> bool:
    return normal_form(w).is_identity()


def is_palindromic(w: BraidWord) -> bool:
    """True iff the braid equals its reverse as a group element."""
    return words_equal(w, reverse(w))
