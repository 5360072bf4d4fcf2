"""Factor a palindromic braid as ``x * block * reverse(x)``.

``block`` is a seed block: a product of generators with pairwise distinct
indices at distance at least two, so its letters commute.  Every palindromic
braid has such a factorization, but no algorithm comes with the existence
proof, so :func:`deloup_factorize` searches: letterwise splits first, then
candidate prefixes ``x`` in order of increasing length.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .braid import BraidWord, concat, embed_e, inverse, reverse, shift_s, underlying_permutation
from .errors import NotFoundWithinBound, NotPalindromic
from .garside import NormalForm, is_palindromic, normal_form, words_equal

__all__ = [
    "DeloupFactorization",
    "is_seed_block",
    "seed_blocks",
    "deloup_factorize",
    "DEFAULT_MAX_CANDIDATES",
]

DEFAULT_MAX_CANDIDATES = 50_000


@dataclass(frozen=True)
class DeloupFactorization:
    x: BraidWord
    block: BraidWord

    @property
    def strands(self) -> int:
        return self.x.strands

    def word(self) -> BraidWord:
        return concat(self.x, self.block, reverse(self.x))

    def verify(self, w: BraidWord) -> bool:
        return is_seed_block(self.block) and words_equal(self.word(), w)

    def shift_s(self, times: int = 1) -> DeloupFactorization:
        return DeloupFactorization(shift_s(self.x, times), shift_s(self.block, times))

    def embed_e(self, times: int = 1) -> DeloupFactorization:
        return DeloupFactorization(embed_e(self.x, times), embed_e(self.block, times))


def is_seed_block(w: BraidWord) -> bool:
    idx = sorted(abs(k) for k in w.letters)
    return all(b - a >= 2 for a, b in zip(idx, idx[1:]))


def seed_blocks(strands: int, avoid: frozenset[int] = frozenset()) -> list[BraidWord]:
    """Every seed block on ``strands`` strands, indices ascending, skipping ``avoid``."""
    usable = [i for i in range(1, strands) if i not in avoid]
    out = []
    for size in range(len(usable) + 1):
        for idx in combinations(usable, size):
            if any(b - a < 2 for a, b in zip(idx, idx[1:])):
                continue
            for signs in product((1, -1), repeat=size):
                out.append(BraidWord(strands, tuple(s * i for s, i in zip(signs, idx))))
    return out


def _letterwise(w: BraidWord, avoid: frozenset[int]) -> DeloupFactorization | None:
    letters = w.letters
    for k in range(len(letters) // 2, -1, -1):
        head, tail = letters[:k], letters[len(letters) - k:]
        if head != tail[::-1]:
            continue
        mid = BraidWord(w.strands, letters[k:len(letters) - k])
        if is_seed_block(mid) and not (mid.indices() & avoid):
            return DeloupFactorization(BraidWord(w.strands, head), mid)
    return None


def _prefix_search(strands: int, length: int):
    """Freely reduced words of exactly ``length`` letters, generator order
    1, -1, 2, -2, ..., with their permutation (0-based, start -> end) and exponent sum."""
    gens = [g for i in range(1, strands) for g in (i, -i)]
    letters: list[int] = []
    pos = list(range(strands))  # pos[s]: current position of strand s
    where = list(range(strands))  # where[p]: strand at position p

    def rec(depth: int, expsum: int):
        if depth == length:
            yield tuple(letters), tuple(pos), expsum
            return
        for g in gens:
            if letters and letters[-1] == -g:
                continue
            i = abs(g) - 1
            a, b = where[i], where[i + 1]
            where[i], where[i + 1] = b, a
            pos[a], pos[b] = i + 1, i
            letters.append(g)
            yield from rec(depth + 1, expsum + (1 if g > 0 else -1))
            letters.pop()
            where[i], where[i + 1] = a, b
            pos[a], pos[b] = i, i + 1

    yield from rec(0, 0)


def _perm0(w: BraidWord) -> tuple[int, ...]:
    return tuple(p - 1 for p in underlying_permutation(w).images)


def deloup_factorize(
    w: BraidWord,
    max_x_len: int | None = None,
    *,
    avoid: frozenset[int] | set[int] = frozenset(),
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    check_palindromic: bool = True,
) -> DeloupFactorization:
    """Find ``x`` and a seed block with ``x * block * reverse(x) == w`` in B_n.

    ``avoid`` lists generator indices the block must not use.  ``max_x_len``
    defaults to ``len(w)``; ``max_candidates`` caps the number of prefixes
    tried.  Raises :class:`NotFoundWithinBound` when the budget runs out.
    """
    avoid = frozenset(avoid)
    if check_palindromic and not is_palindromic(w):
        raise NotPalindromic(f"{w} is not palindromic")
    found = _letterwise(w, avoid)
    if found is not None:
        return found

    if max_x_len is None:
        max_x_len = len(w)
    n = w.strands
    # x block reverse(x) has permutation x_perm . block_perm . x_perm^-1 and
    # exponent sum 2 e(x) + e(block): both are checked before any normal form
    targets: dict[tuple, dict[NormalForm, BraidWord]] = {}
    for block in seed_blocks(n, avoid):
        key = (_perm0(block), block.exponent_sum)
        targets.setdefault(key, {}).setdefault(normal_form(block), block)
    w_perm = _perm0(w)
    w_exp = w.exponent_sum

    tried = 0
    for length in range(max_x_len + 1):
        for letters, x_pos, x_exp in _prefix_search(n, length):
            tried += 1
            if tried > max_candidates:
                raise NotFoundWithinBound(
                    f"no factorization of {w} among {max_candidates} prefixes"
                )
            # block_perm = x^-1 then w then x, as maps start -> end
            x_inv = [0] * n
            for s_, p in enumerate(x_pos):
                x_inv[p] = s_
            block_perm = tuple(x_pos[w_perm[x_inv[p]]] for p in range(n))
            candidates = targets.get((block_perm, w_exp - 2 * x_exp))
            if not candidates:
                continue
            x = BraidWord(n, letters)
            core = concat(inverse(x), w, inverse(reverse(x)))
            block = candidates.get(normal_form(core))
            if block is not None:
                return DeloupFactorization(x, block)
    raise NotFoundWithinBound(f"no factorization of {w} with |x| <= {max_x_len}")
