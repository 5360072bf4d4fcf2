"""Braid words in the Artin generators.

A :class:`BraidWord` is a plain syntactic object: a strand count and a tuple
of signed generator indices, ``+i`` for sigma_i and ``-i`` for its inverse.
Nothing here knows about braid relations; group-level equality lives in
:mod:`palbraid.garside`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedToken, OutOfRangeGenerator, StrandMismatch

__all__ = [
    "BraidWord",
    "Permutation",
    "parse_word",
    "format_word",
    "identity",
    "generator",
    "reverse",
    "inverse",
    "concat",
    "free_reduce",
    "shift_s",
    "embed_e",
    "mirror",
    "underlying_permutation",
]


@dataclass(frozen=True)
class BraidWord:
    """A word in sigma_1 .. sigma_{strands-1} and their inverses.

    Words are never reduced implicitly, and the strand count is part of the
    value: the same letters on a different number of strands compare unequal.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise ValueError(f"strand count must be a positive integer, got {self.strands!r}")
        letters = tuple(int(k) for k in self.letters)
        for k in letters:
            if k == 0 or abs(k) >= self.strands:
                raise OutOfRangeGenerator(
                    f"generator {k} does not exist on {self.strands} strands"
                )
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if k > 0 else -1 for k in self.letters)

    def indices(self) -> set[int]:
        return {abs(k) for k in self.letters}


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[p-1]`` is where position ``p`` goes.

    ``p * q`` means "first p, then q", so that the underlying permutation of a
    braid word is multiplicative in word order.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(self) != len(other):
            raise StrandMismatch("permutations act on different sets")
        return Permutation(tuple(other(self(p)) for p in range(1, len(self) + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for p, q in enumerate(self.images, start=1):
            inv[q - 1] = p
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each starting at its least element."""
        seen: set[int] = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            p = self(start)
            while p != start:
                cyc.append(p)
                seen.add(p)
                p = self(p)
            out.append(tuple(cyc))
        return out


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed integers; blank text is the identity.

    >>> parse_word("1 -2 1", 3).letters
    (1, -2, 1)
    """
    letters = []
    for token in text.split():
        try:
            k = int(token)
        except ValueError:
            raise MalformedToken(f"not a signed integer: {token!r}") from None
        letters.append(k)
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(k) for k in w.letters)


def identity(strands: int) -> BraidWord:
    return BraidWord(strands, ())


def generator(i: int, strands: int, sign: int = 1) -> BraidWord:
    return BraidWord(strands, (i if sign > 0 else -i,))


def reverse(w: BraidWord) -> BraidWord:
    """Read the word right to left; letters keep their signs."""
    return BraidWord(w.strands, w.letters[::-1])


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-k for k in reversed(w.letters)))


def mirror(w: BraidWord) -> BraidWord:
    """Flip every crossing."""
    return BraidWord(w.strands, tuple(-k for k in w.letters))


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise ValueError("concat needs at least one word")
    n = words[0].strands
    letters: list[int] = []
    for w in words:
        if w.strands != n:
            raise StrandMismatch(f"cannot concatenate words on {n} and {w.strands} strands")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for k in w.letters:
        if stack and stack[-1] == -k:
            stack.pop()
        else:
            stack.append(k)
    return BraidWord(w.strands, tuple(stack))


def shift_s(w: BraidWord, times: int = 1) -> BraidWord:
    """Add ``times`` strands on the left: sigma_i -> sigma_{i+times}."""
    return BraidWord(
        w.strands + times, tuple(k + times if k > 0 else k - times for k in w.letters)
    )


def embed_e(w: BraidWord, times: int = 1) -> BraidWord:
    """Add ``times`` strands on the right; letters are unchanged."""
    return BraidWord(w.strands + times, w.letters)


def underlying_permutation(w: BraidWord) -> Permutation:
    # pos[s]: current 1-based position of the strand that started at s+1
    # where[p]: 0-based start of the strand now at position p+1
    pos = list(range(1, w.strands + 1))
    where = list(range(w.strands))
    for k in w.letters:
        i = abs(k)
        a, b = where[i - 1], where[i]
        where[i - 1], where[i] = b, a
        pos[a], pos[b] = i + 1, i
    return Permutation(tuple(pos))

