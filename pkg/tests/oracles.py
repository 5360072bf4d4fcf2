"""Independent oracles used by the test-suite.

None of these import the code paths they check: the rewriting oracle knows
only the braid relators, the state-sum oracle only the smoothing rules.
"""

from __future__ import annotations

from itertools import product


def _free_reduce(letters):
    out = []
    for k in letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def braid_relators(n):
    rels = []
    for i in range(1, n):
        for j in range(i + 1, n):
            if j == i + 1:
                rels.append((i, j, i, -j, -i, -j))
            else:
                rels.append((i, j, -i, -j))
    return rels


def _rewrite_rules(n):
    """All u -> v^-1 with u v a cyclic rotation of a relator or its inverse."""
    rules: dict[tuple, set] = {}
    for r in braid_relators(n):
        for word in (r, tuple(-k for k in reversed(r))):
            for s in range(len(word)):
                rot = word[s:] + word[:s]
                for cut in range(1, len(rot) + 1):
                    u, v = rot[:cut], rot[cut:]
                    rules.setdefault(u, set()).add(tuple(-k for k in reversed(v)))
    return rules


def reduced_words(n, max_len):
    gens = [g for i in range(1, n) for g in (i, -i)]
    layer = [()]
    out = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for g in gens:
                if w and w[-1] == -g:
                    continue
                nxt.append(w + (g,))
        out.extend(nxt)
        layer = nxt
    return out


class RewritingOracle:
    """Union-find over the ball of freely reduced words of length <= max_len.

    Two words are joined when one is obtained from the other by replacing a
    piece of a relator with the inverse of the complementary piece, followed
    by free reduction.  Joined words are certainly equal in B_n; the test
    asserting agreement with the normal form also checks that the ball is
    large enough to join every equal pair it is asked about.
    """

    def __init__(self, n, max_len):
        self.n = n
        self.max_len = max_len
        rules = _rewrite_rules(n)
        max_u = max(len(u) for u in rules)
        words = reduced_words(n, max_len)
        self.index = {w: i for i, w in enumerate(words)}
        parent = list(range(len(words)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for w, i in self.index.items():
            for start in range(len(w)):
                for ln in range(1, min(max_u, len(w) - start) + 1):
                    reps = rules.get(w[start:start + ln])
                    if not reps:
                        continue
                    for rep in reps:
                        new = _free_reduce(w[:start] + rep + w[start + ln:])
                        j = self.index.get(new)
                        if j is not None:
                            a, b = find(i), find(j)
                            if a != b:
                                parent[a] = b
        self._find = find

    def class_of(self, letters):
        return self._find(self.index[_free_reduce(tuple(letters))])

    def equal(self, u, v):
        return self.class_of(u) == self.class_of(v)


def all_words(n, max_len):
    gens = [g for i in range(1, n) for g in (i, -i)]
    for ln in range(max_len + 1):
        yield from product(gens, repeat=ln)


def bracket_by_states(crossings, free_loops=0):
    """Kauffman bracket {A-exponent: coeff} by recursion over smoothings.

    ``crossings`` are 4-tuples of arc labels; the A-smoothing joins slots
    (0,1),(2,3), the B-smoothing (0,3),(1,2).  Loops are counted with a plain
    graph walk.  Deliberately written without any of the package's code.
    """
    from collections import Counter

    c = len(crossings)
    totals: Counter = Counter()
    for state in product((0, 1), repeat=c):
        adj: dict = {}
        for s, (a, b, cc, d) in zip(state, crossings):
            pairs = ((a, b), (cc, d)) if s == 0 else ((a, d), (b, cc))
            for x, y in pairs:
                adj.setdefault(x, []).append(y)
                adj.setdefault(y, []).append(x)
        seen = set()
        loops = 0
        for start in adj:
            if start in seen:
                continue
            loops += 1
            stack = [start]
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                stack.extend(adj[x])
        loops += free_loops
        a_count = state.count(0)
        totals[(a_count - (c - a_count), loops)] += 1

    # d = -A^2 - A^-2 ; expand d^(loops-1) by the binomial theorem
    from math import comb

    poly: Counter = Counter()
    for (shift, loops), mult in totals.items():
        m = loops - 1
        for j in range(m + 1):
            # (-A^2)^(m-j) (-A^-2)^j
            e = shift + 2 * (m - j) - 2 * j
            poly[e] += mult * comb(m, j) * (-1) ** m
    return {e: v for e, v in poly.items() if v}
