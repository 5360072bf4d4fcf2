"""Bounded bidirectional search for move sequences relating two pairs.

Both endpoints are expanded breadth-first with forward moves only; a pair
reached from both sides proves the endpoints related, since every move has
an inverse move.  Destabilizations never have to be recognized.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .braid import BraidWord
from .closure import EquivariantPair, closure_diagram
from .errors import BraidError, NotFoundWithinBound, ParseError, ReplayError
from .garside import is_palindromic, normal_form
from .invariants import alexander, jones
from .moves import SWAP, MoveDescriptor, apply_move, format_move, parse_move

__all__ = [
    "SearchBudget",
    "MoveTrace",
    "NotFoundWithinBudget",
    "canonical_key",
    "neighbours",
    "find_trace",
    "check_trace",
    "verify_trace",
    "parse_trace",
]

FORWARD = "F"
BACKWARD = "B"


class NotFoundWithinBudget(NotFoundWithinBound):
    """The search budget ran out; says nothing about inequivalence."""


@dataclass(frozen=True)
class SearchBudget:
    max_strands: int
    max_conj_len: int = 3
    max_nodes: int = 100_000

    def __post_init__(self):
        if min(self.max_strands, self.max_conj_len, self.max_nodes) < 1:
            raise ValueError("search budget fields must be positive")

    @classmethod
    def default_for(cls, p: EquivariantPair, q: EquivariantPair) -> SearchBudget:
        return cls(max_strands=max(p.strands, q.strands) + 2)


@dataclass(frozen=True)
class MoveTrace:
    """Moves from ``start`` (F steps in order), then B steps read from the
    meeting pair back to the endpoint: each B step was applied forward on the
    endpoint's side, the last-listed one first."""

    start: EquivariantPair
    steps: tuple[tuple[MoveDescriptor, str], ...] = field(default=())

    def __len__(self) -> int:
        return len(self.steps)

    def forward(self) -> list[MoveDescriptor]:
        return [m for m, d in self.steps if d == FORWARD]

    def backward(self) -> list[MoveDescriptor]:
        return [m for m, d in self.steps if d == BACKWARD]

    def to_text(self) -> str:
        return "\n".join(f"{d} {format_move(m)}" for m, d in self.steps)


def canonical_key(p: EquivariantPair) -> tuple:
    a, b = normal_form(p.alpha), normal_form(p.beta)
    return (p.strands, a.inf, a.factors, b.inf, b.factors)


def _conjugators(strands: int, max_len: int) -> Iterator[BraidWord]:
    gens = [g for i in range(1, strands) for g in (i, -i)]
    layer: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for g in gens:
                if w and w[-1] == -g:
                    continue
                nxt.append(w + (g,))
        for w in nxt:
            yield BraidWord(strands, w)
        layer = nxt


def neighbours(
    p: EquivariantPair, budget: SearchBudget
) -> Iterator[tuple[MoveDescriptor, EquivariantPair]]:
    """Applicable moves in the fixed expansion order: conjugation, S, E,
    double stabilization, swap; generators ascending, + before -."""
    n = p.strands
    for e in _conjugators(n, budget.max_conj_len):
        m = MoveDescriptor.conj(e)
        yield m, apply_move(p, m)
    candidates: list[MoveDescriptor] = []
    if n + 1 <= budget.max_strands:
        for kind in ("S", "E"):
            for side in ("first", "second"):
                for sign in (1, -1):
                    candidates.append(MoveDescriptor.stab(kind, side, sign))
    if n + 2 <= budget.max_strands:
        for eps in (1, -1):
            for eta in (1, -1):
                candidates.append(MoveDescriptor.dstab(eps, eta))
    candidates.append(SWAP)
    for m in candidates:
        try:
            yield m, apply_move(p, m)
        except BraidError:
            continue


def _path(tree: dict, key) -> list[MoveDescriptor]:
    moves = []
    while True:
        _, parent, move = tree[key]
        if parent is None:
            break
        moves.append(move)
        key = parent
    moves.reverse()
    return moves


def find_trace(
    p: EquivariantPair,
    q: EquivariantPair,
    budget: SearchBudget | None = None,
    *,
    check_invariants: bool = False,
) -> MoveTrace:
    """Search for a move sequence from ``p`` to ``q``.

    Raises :class:`NotFoundWithinBudget` when ``budget.max_nodes`` pairs have
    been generated without the two searches meeting.  With
    ``check_invariants`` every generated pair is checked to have the same
    Alexander polynomial and Jones polynomial as its parent.
    """
    budget = budget or SearchBudget.default_for(p, q)
    kp, kq = canonical_key(p), canonical_key(q)
    if kp == kq:
        return MoveTrace(p, ())

    # key -> (pair, parent key, move from parent)
    trees: dict[str, dict] = {FORWARD: {kp: (p, None, None)}, BACKWARD: {kq: (q, None, None)}}
    frontiers = {FORWARD: deque([kp]), BACKWARD: deque([kq])}
    nodes = 2
    side = FORWARD
    while frontiers[FORWARD] or frontiers[BACKWARD]:
        if not frontiers[side]:
            side = BACKWARD if side == FORWARD else FORWARD
        tree, other = trees[side], trees[BACKWARD if side == FORWARD else FORWARD]
        meets = []
        next_frontier: deque = deque()
        for key in frontiers[side]:
            pair = tree[key][0]
            for move, child in neighbours(pair, budget):
                ck = canonical_key(child)
                if ck in tree:
                    continue
                if check_invariants:
                    _assert_same_link(pair, child, move)
                tree[ck] = (child, key, move)
                next_frontier.append(ck)
                nodes += 1
                if ck in other:
                    meets.append(ck)
                if nodes >= budget.max_nodes:
                    break
            if nodes >= budget.max_nodes:
                break
        if meets:
            meet = min(meets)
            fwd = _path(trees[FORWARD], meet)
            bwd = _path(trees[BACKWARD], meet)
            steps = [(m, FORWARD) for m in fwd] + [(m, BACKWARD) for m in reversed(bwd)]
            return MoveTrace(p, tuple(steps))
        if nodes >= budget.max_nodes:
            break
        frontiers[side] = next_frontier
        side = BACKWARD if side == FORWARD else FORWARD
    raise NotFoundWithinBudget(
        f"no trace within {budget.max_nodes} nodes, {budget.max_strands} strands, "
        f"conjugators up to length {budget.max_conj_len}"
    )


def _assert_same_link(before: EquivariantPair, after: EquivariantPair, move) -> None:
    if alexander(before) != alexander(after):
        raise AssertionError(f"{format_move(move)} changed the Alexander polynomial of {before}")
    if len(before.alpha) + len(before.beta) <= 16 and len(after.alpha) + len(after.beta) <= 16:
        if jones(closure_diagram(before)) != jones(closure_diagram(after)):
            raise AssertionError(f"{format_move(move)} changed the Jones polynomial of {before}")


def _replay(
    pair: EquivariantPair,
    moves: list[MoveDescriptor],
    step_ids: list[int],
    reference,
    jones_every: int,
    jones_max_crossings: int,
) -> EquivariantPair:
    for k, (m, idx) in enumerate(zip(moves, step_ids)):
        try:
            pair = apply_move(pair, m)
        except BraidError as exc:
            raise ReplayError(idx, f"{format_move(m)} not applicable: {exc}") from exc
        if not (is_palindromic(pair.alpha) and is_palindromic(pair.beta)):
            raise ReplayError(idx, f"{format_move(m)} produced a non-palindromic component")
        crossings = len(pair.alpha) + len(pair.beta)
        if jones_every and k % jones_every == 0 and crossings <= jones_max_crossings:
            if jones(closure_diagram(pair)) != reference():
                raise ReplayError(idx, f"{format_move(m)} changed the Jones polynomial")
    return pair


def check_trace(
    trace: MoveTrace,
    q: EquivariantPair,
    *,
    jones_every: int = 1,
    jones_max_crossings: int = 18,
) -> None:
    """Replay ``trace`` and raise :class:`ReplayError` on the first problem.

    F steps run from ``trace.start``; B steps run from ``q`` in reverse
    listing order.  Both replays must land on the same canonical key.  Jones
    is compared on every ``jones_every``-th step (0 disables) whenever the
    closure is small enough for the state sum.
    """
    cache: dict[str, object] = {}

    def reference():
        if "v" not in cache:
            cache["v"] = jones(closure_diagram(trace.start))
        return cache["v"]

    fwd_ids = [i for i, (_, d) in enumerate(trace.steps) if d == FORWARD]
    bwd_ids = [i for i, (_, d) in enumerate(trace.steps) if d == BACKWARD]
    a = _replay(trace.start, trace.forward(), fwd_ids, reference, jones_every, jones_max_crossings)
    b = _replay(q, trace.backward()[::-1], bwd_ids[::-1], reference, jones_every, jones_max_crossings)
    if canonical_key(a) != canonical_key(b):
        raise ReplayError(len(trace.steps), "forward and backward replays end at different pairs")


def verify_trace(trace: MoveTrace, q: EquivariantPair, **kwargs) -> bool:
    try:
        check_trace(trace, q, **kwargs)
    except ReplayError:
        return False
    return True


_DELTA = {"stabS": 1, "stabE": 1, "dstab": 2}


def parse_trace(text: str, start: EquivariantPair, end: EquivariantPair) -> MoveTrace:
    """Parse ``F|B <move>`` lines; strand counts are tracked from each endpoint."""
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        direction, _, body = line.partition(" ")
        if direction not in (FORWARD, BACKWARD):
            raise ParseError(f"step must start with F or B: {line!r}", lineno)
        raw.append((lineno, direction, body.strip()))
    steps: list = [None] * len(raw)
    n = start.strands
    for i, (lineno, direction, body) in enumerate(raw):
        if direction == FORWARD:
            steps[i] = (_parse_step(body, n, lineno), FORWARD)
            n += _DELTA.get(body.split()[0], 0) if body else 0
    n = end.strands
    for i in range(len(raw) - 1, -1, -1):
        lineno, direction, body = raw[i]
        if direction == BACKWARD:
            steps[i] = (_parse_step(body, n, lineno), BACKWARD)
            n += _DELTA.get(body.split()[0], 0) if body else 0
    return MoveTrace(start, tuple(steps))


def _parse_step(body: str, strands: int, lineno: int) -> MoveDescriptor:
    try:
        return parse_move(body, strands)
    except ParseError as exc:
        raise ParseError(str(exc), lineno) from None
    except BraidError as exc:
        raise ParseError(str(exc), lineno) from None


