"""Link invariants used to check that moves preserve the closure.

* Kauffman bracket by the full state sum over 2^c smoothings, and the Jones
  polynomial obtained from it (V(unknot) = 1, t = A^-4).
* Alexander polynomial of a braid closure from the reduced Burau matrix.
* Alexander polynomial of a knot diagram from its Wirtinger presentation, a
  route that shares nothing with the Burau one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np
from numba import njit

from .braid import BraidWord
from .closure import EquivariantPair, LinkDiagram, closure_word
from .errors import TooManyCrossings
from .laurent import LaurentPoly

__all__ = [
    "DEFAULT_MAX_CROSSINGS",
    "kauffman_bracket",
    "jones",
    "writhe",
    "burau_reduced",
    "burau_generator",
    "matmul",
    "identity_matrix",
    "determinant",
    "alexander",
    "alexander_from_diagram",
    "normalize_alexander",
    "diagram_components",
]

DEFAULT_MAX_CROSSINGS = 24


def writhe(d: LinkDiagram) -> int:
    return d.writhe


def _loop_delta_powers(max_power: int) -> list[LaurentPoly]:
    d = LaurentPoly({2: -1, -2: -1}, var="A")
    out = [LaurentPoly.constant(1, "A")]
    for _ in range(max_power):
        out.append(out[-1] * d)
    return out


@njit(cache=True)
def _count_states(cross: np.ndarray, n_labels: int) -> np.ndarray:  # pragma: no cover - jitted
    c = cross.shape[0]
    hist = np.zeros((c + 1, n_labels + 1), dtype=np.int64)
    parent = np.empty(n_labels, dtype=np.int64)
    for state in range(1 << c):
        for x in range(n_labels):
            parent[x] = x
        b_count = 0
        for j in range(c):
            if (state >> j) & 1:
                b_count += 1
                p0, p1, p2, p3 = cross[j, 0], cross[j, 3], cross[j, 1], cross[j, 2]
            else:
                p0, p1, p2, p3 = cross[j, 0], cross[j, 1], cross[j, 2], cross[j, 3]
            for u, v in ((p0, p1), (p2, p3)):
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                if u != v:
                    parent[u] = v
        loops = 0
        for x in range(n_labels):
            if parent[x] == x:
                loops += 1
        hist[b_count, loops] += 1
    return hist


def _state_histogram(d: LinkDiagram) -> dict[tuple[int, int], int]:
    """Count smoothing states by (#A - #B, #loops through crossings)."""
    c = len(d.crossings)
    if c == 0:
        return {(0, 0): 1}
    index: dict[int, int] = {}
    cross = np.array(
        [[index.setdefault(lab, len(index)) for lab in x.labels] for x in d.crossings],
        dtype=np.int64,
    )
    counts = _count_states(cross, len(index))
    return {
        (c - 2 * b, loops): int(counts[b, loops])
        for b, loops in zip(*np.nonzero(counts))
    }


def kauffman_bracket(d: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """Unnormalized bracket, <unknot> = 1, <O u D> = (-A^2 - A^-2)<D>.

    Every one of the 2^c states is visited: the A-smoothing joins slots
    (0,1),(2,3) of a crossing, the B-smoothing (0,3),(1,2), and loops are
    counted by union-find on arc labels.
    """
    c = len(d.crossings)
    if c > max_crossings:
        raise TooManyCrossings(f"{c} crossings exceeds the state-sum bound {max_crossings}")
    hist = _state_histogram(d)
    max_loops = max(lp for _, lp in hist) + d.free_loops
    powers = _loop_delta_powers(max(0, max_loops - 1))
    result = LaurentPoly((), var="A")
    for (shift, loops), k in hist.items():
        total_loops = loops + d.free_loops
        if total_loops == 0:
            result = result + LaurentPoly({shift: k}, var="A")
        else:
            result = result + LaurentPoly({shift: k}, var="A") * powers[total_loops - 1]
    return result


def jones(d: LinkDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """Jones polynomial in t; half-integer exponents for even component counts."""
    br = kauffman_bracket(d, max_crossings)
    w = d.writhe
    # (-A^3)^(-w) <D>, then t = A^-4
    normalized = br.shift(-3 * w) * (-1 if w % 2 else 1)
    return normalized.substitute_power(Fraction(-1, 4), var="t")


# ---------------------------------------------------------------------------
# matrices over Z[t, t^-1]

Matrix = list[list[LaurentPoly]]

_ZERO = LaurentPoly()
_ONE = LaurentPoly.constant(1)


def _t(e: int = 1, c: int = 1) -> LaurentPoly:
    return LaurentPoly({e: c})


def identity_matrix(size: int) -> Matrix:
    return [[_ONE if i == j else _ZERO for j in range(size)] for i in range(size)]


def matmul(x: Matrix, y: Matrix) -> Matrix:
    size = len(x)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = _ZERO
            for k in range(size):
                if x[i][k] and y[k][j]:
                    acc = acc + x[i][k] * y[k][j]
            row.append(acc)
        out.append(row)
    return out


def burau_generator(i: int, strands: int, sign: int = 1) -> Matrix:
    """Reduced Burau image of sigma_i^sign, an (n-1) x (n-1) matrix."""
    size = strands - 1
    m = identity_matrix(size)
    k = i - 1  # row/column of sigma_i
    if sign > 0:
        m[k][k] = _t(1, -1)
        if k > 0:
            m[k - 1][k] = _t(1)
        if k < size - 1:
            m[k + 1][k] = _ONE
    else:
        m[k][k] = _t(-1, -1)
        if k > 0:
            m[k - 1][k] = _ONE
        if k < size - 1:
            m[k + 1][k] = _t(-1)
    return m


def burau_reduced(w: BraidWord) -> Matrix:
    m = identity_matrix(w.strands - 1)
    for k in w.letters:
        m = matmul(m, burau_generator(abs(k), w.strands, 1 if k > 0 else -1))
    return m


def determinant(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    a = [list(row) for row in m]
    size = len(a)
    if size == 0:
        return _ONE
    sign = 1
    prev = _ONE
    for k in range(size - 1):
        if not a[k][k]:
            for r in range(k + 1, size):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[-1][-1] * sign


def normalize_alexander(p: LaurentPoly) -> LaurentPoly:
    """Multiply by +-t^k: symmetric when the exponent span allows, p(1) > 0
    (or lowest coefficient > 0 when p(1) = 0)."""
    if p.is_zero():
        return LaurentPoly()
    centre = (p.min_exp() + p.max_exp()) / 2
    p = p.shift(-centre) if centre.denominator == 1 else p.shift(-p.min_exp())
    value = p.at_one()
    if value < 0 or (value == 0 and p.coeff(p.min_exp()) < 0):
        p = -p
    return LaurentPoly(p.terms, var="t")


def alexander(p: EquivariantPair | BraidWord) -> LaurentPoly:
    """det(Burau(closure) - I) / (1 + t + ... + t^(n-1)), normalized."""
    w = closure_word(p) if isinstance(p, EquivariantPair) else p
    n = w.strands
    m = burau_reduced(w)
    for i in range(n - 1):
        m[i][i] = m[i][i] - 1
    det = determinant(m)
    divisor = LaurentPoly({e: 1 for e in range(n)})
    return normalize_alexander(det.exact_div(divisor))


def diagram_components(d: LinkDiagram) -> int:
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        for u, v in ((c.a, c.c), (c.b, c.d)):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return len({find(x) for x in parent}) + d.free_loops


def alexander_from_diagram(d: LinkDiagram) -> LaurentPoly:
    """Alexander polynomial of a knot diagram via Fox calculus on Wirtinger arcs."""
    if diagram_components(d) != 1:
        raise ValueError("alexander_from_diagram needs a knot diagram")
    if not d.crossings:
        return LaurentPoly.constant(1)
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in d.crossings:
        parent[find(c.b)] = find(c.d)  # the over-strand is one Wirtinger arc
        find(c.a)
        find(c.c)
    arcs = sorted({find(x) for x in parent})
    col = {a: i for i, a in enumerate(arcs)}
    size = len(d.crossings)
    if len(arcs) != size:
        raise ValueError("diagram has a component with no under-crossing")
    rows: Matrix = []
    for c in d.crossings:
        row = [_ZERO] * size
        over, under_in, under_out = col[find(c.b)], col[find(c.a)], col[find(c.c)]
        if c.sign > 0:
            # x_out = x_over^-1 x_in x_over
            entries = ((over, _t(1) - 1), (under_in, _ONE), (under_out, _t(1, -1)))
        else:
            # x_out = x_over x_in x_over^-1
            entries = ((over, 1 - _t(1)), (under_in, _t(1)), (under_out, -_ONE))
        for j, v in entries:
            row[j] = row[j] + v
        rows.append(row)
    minor = [r[:-1] for r in rows[:-1]]
    return normalize_alexander(determinant(minor))
