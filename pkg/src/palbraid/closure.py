"""Pairs of palindromic braids and the planar diagram of their closure.

The link underlying the equivariant closure of ``(alpha, beta)`` is the
ordinary braid closure of ``alpha * beta``; :func:`closure_diagram` writes it
as an oriented PD code.

PD conventions: a crossing ``X[a, b, c, d]`` lists its four arc labels
counterclockwise starting from the incoming under-arc, so the under-strand
runs ``a -> c``.  The over-strand runs ``d -> b`` at a positive crossing and
``b -> d`` at a negative one.  Braid strands run upwards; sigma_i is the
positive crossing in which strand i passes over strand i+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .braid import BraidWord, concat, parse_word, format_word, underlying_permutation
from .errors import NotPalindromic, ParseError, StrandMismatch
from .garside import is_palindromic

__all__ = [
    "EquivariantPair",
    "Crossing",
    "LinkDiagram",
    "make_pair",
    "parse_pair",
    "format_pair",
    "closure_word",
    "closure_diagram",
    "component_count",
    "diagram_from_pd",
]


@dataclass(frozen=True)
class EquivariantPair:
    alpha: BraidWord
    beta: BraidWord

    def __post_init__(self):
        if self.alpha.strands != self.beta.strands:
            raise StrandMismatch(
                f"pair components on {self.alpha.strands} and {self.beta.strands} strands"
            )

    @property
    def strands(self) -> int:
        return self.alpha.strands

    def __str__(self) -> str:
        return format_pair(self)


def make_pair(alpha: BraidWord, beta: BraidWord) -> EquivariantPair:
    """Validated constructor: both components must be palindromic braids."""
    if alpha.strands != beta.strands:
        raise StrandMismatch(f"pair components on {alpha.strands} and {beta.strands} strands")
    if not is_palindromic(alpha):
        raise NotPalindromic(f"first component {alpha} is not palindromic", which="first")
    if not is_palindromic(beta):
        raise NotPalindromic(f"second component {beta} is not palindromic", which="second")
    return EquivariantPair(alpha, beta)


def parse_pair(text: str, strands: int | None = None, *, validate: bool = True) -> EquivariantPair:
    """Parse ``"N:ALPHA|BETA"`` (or ``"ALPHA|BETA"`` with ``strands`` given)."""
    body = text
    if ":" in text:
        head, body = text.split(":", 1)
        try:
            strands = int(head)
        except ValueError:
            raise ParseError(f"bad strand count {head!r}") from None
    if strands is None:
        raise ParseError(f"no strand count in {text!r}")
    if body.count("|") != 1:
        raise ParseError(f"expected exactly one '|' in {text!r}")
    a, b = body.split("|")
    alpha, beta = parse_word(a, strands), parse_word(b, strands)
    return make_pair(alpha, beta) if validate else EquivariantPair(alpha, beta)


def format_pair(p: EquivariantPair) -> str:
    return f"{p.strands}:{format_word(p.alpha)}|{format_word(p.beta)}"


def closure_word(p: EquivariantPair) -> BraidWord:
    return concat(p.alpha, p.beta)


def component_count(p: EquivariantPair) -> int:
    return len(underlying_permutation(closure_word(p)).cycles())


@dataclass(frozen=True)
class Crossing:
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def incoming(self) -> tuple[int, int]:
        """(under, over) arcs entering this crossing."""
        return (self.a, self.d if self.sign > 0 else self.b)

    def outgoing(self) -> tuple[int, int]:
        return (self.c, self.b if self.sign > 0 else self.d)


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented PD code plus a count of crossing-free unknotted components."""

    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    @property
    def arc_count(self) -> int:
        return len({x for c in self.crossings for x in c.labels})

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def __len__(self) -> int:
        return len(self.crossings)

    def arc_orientation(self) -> dict[int, tuple[int, int]]:
        """Map each arc label to (index of tail crossing, index of head crossing)."""
        tails: dict[int, int] = {}
        heads: dict[int, int] = {}
        for i, c in enumerate(self.crossings):
            for x in c.outgoing():
                if x in tails:
                    raise ValueError(f"arc {x} leaves two crossings")
                tails[x] = i
            for x in c.incoming():
                if x in heads:
                    raise ValueError(f"arc {x} enters two crossings")
                heads[x] = i
        if tails.keys() != heads.keys():
            raise ValueError("orientation is not consistent along every arc")
        return {x: (tails[x], heads[x]) for x in sorted(tails)}

    def validate(self) -> None:
        counts: dict[int, int] = {}
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise ValueError(f"bad crossing sign {c.sign}")
            for x in c.labels:
                counts[x] = counts.get(x, 0) + 1
        bad = sorted(x for x, k in counts.items() if k != 2)
        if bad:
            raise ValueError(f"arc labels not used exactly twice: {bad}")
        self.arc_orientation()

    def mirror(self) -> LinkDiagram:
        """Flip every crossing, keeping arcs and orientation."""
        out = []
        for c in self.crossings:
            # rotate so the new under-strand (old over-strand) comes first
            if c.sign > 0:
                out.append(Crossing(c.d, c.a, c.b, c.c, -1))
            else:
                out.append(Crossing(c.b, c.c, c.d, c.a, 1))
        return LinkDiagram(tuple(out), self.free_loops)

    def to_text(self) -> str:
        lines = [
            f"X {c.a} {c.b} {c.c} {c.d} {'+' if c.sign > 0 else '-'}" for c in self.crossings
        ]
        if self.free_loops:
            lines.append(f"O {self.free_loops}")
        return "\n".join(lines)


def closure_diagram(p: EquivariantPair | BraidWord) -> LinkDiagram:
    """PD code of the braid closure of ``alpha * beta`` (or of a bare word).

    Arcs are numbered along each component, bottom to top, starting with the
    component through the leftmost strand position.
    """
    w = closure_word(p) if isinstance(p, EquivariantPair) else p
    n = w.strands
    bottom = list(range(n))
    cur = list(bottom)
    nxt: dict[int, int] = {}
    raw = []
    counter = n
    for k in w.letters:
        i = abs(k) - 1
        a, b = cur[i], cur[i + 1]
        c, d = counter, counter + 1
        counter += 2
        nxt[a] = d
        nxt[b] = c
        raw.append((a, b, c, d, 1 if k > 0 else -1))
        cur[i], cur[i + 1] = c, d

    canon = {cur[p]: bottom[p] for p in range(n)}
    free = sum(1 for p in range(n) if cur[p] == bottom[p])

    label: dict[int, int] = {}
    for cycle in underlying_permutation(w).cycles():
        start = bottom[cycle[0] - 1]
        if start not in nxt:
            continue
        s = start
        while True:
            label[s] = len(label) + 1
            s = canon.get(nxt[s], nxt[s])
            if s == start:
                break

    def lab(s: int) -> int:
        return label[canon.get(s, s)]

    crossings = []
    for a, b, c, d, sign in raw:
        a, b, c, d = lab(a), lab(b), lab(c), lab(d)
        if sign > 0:
            crossings.append(Crossing(b, d, c, a, 1))
        else:
            crossings.append(Crossing(a, b, d, c, -1))
    return LinkDiagram(tuple(crossings), free)


def diagram_from_pd(
    pd: Iterable[Sequence[int]], signs: Sequence[int] | None = None, free_loops: int = 0
) -> LinkDiagram:
    """Build an oriented diagram from bare PD 4-tuples.

    Without explicit ``signs``, directions are propagated slot by slot: the
    under-strand enters at slot 0 and leaves at slot 2, an arc leaves one end
    and enters the other, and the over-strand enters at exactly one of slots
    1 and 3.  Components that never pass under anything fall back to running
    from the lower label to the next one.
    """
    tuples = [tuple(int(x) for x in t) for t in pd]
    if signs is not None:
        diagram = LinkDiagram(
            tuple(Crossing(*t, s) for t, s in zip(tuples, signs, strict=True)), free_loops
        )
        diagram.validate()
        return diagram

    ends: dict[int, list[tuple[int, int]]] = {}
    for i, t in enumerate(tuples):
        for slot, x in enumerate(t):
            ends.setdefault(x, []).append((i, slot))
    for x, occ in ends.items():
        if len(occ) != 2:
            raise ValueError(f"arc {x} appears {len(occ)} times")

    entering: dict[tuple[int, int], bool] = {}
    queue: list[tuple[int, int]] = []

    def assign(o: tuple[int, int], value: bool) -> None:
        if o in entering:
            if entering[o] != value:
                raise ValueError(f"inconsistent orientation at crossing {o[0]}")
            return
        entering[o] = value
        queue.append(o)

    def propagate() -> None:
        while queue:
            i, slot = queue.pop()
            value = entering[(i, slot)]
            x = tuples[i][slot]
            for o in ends[x]:
                if o != (i, slot):
                    assign(o, not value)
            if slot in (1, 3):
                assign((i, 4 - slot), not value)

    for i in range(len(tuples)):
        assign((i, 0), True)
        assign((i, 2), False)
    propagate()
    for i, (_, b, _, d) in enumerate(tuples):
        if (i, 1) not in entering:
            assign((i, 1), d == b + 1 or b > d + 1)
            propagate()

    crossings = tuple(
        Crossing(*t, 1 if entering[(i, 3)] else -1) for i, t in enumerate(tuples)
    )
    diagram = LinkDiagram(crossings, free_loops)
    diagram.validate()
    return diagram
