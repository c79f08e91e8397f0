"""Coxeter graphs: weighted graphs with labels in {2, 3, ..., oo}.

Nodes are 1..N.  An absent pair means label 2 (commuting generators); stored
edges always carry a label >= 3.  The infinite label is the float sentinel
``INF``, which sorts above every integer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

INF = float("inf")

Weight = int | float


class GraphError(ValueError):
    pass


def weight_ok(m) -> bool:
    return m == INF or (isinstance(m, int) and not isinstance(m, bool) and m >= 2)


def weight_str(m) -> str:
    return "inf" if m == INF else str(m)


@dataclass(frozen=True)
class CoxeterGraph:
    """Immutable weighted graph on nodes 1..n; edges hold labels >= 3 only."""

    n: int
    edges: tuple[tuple[int, int, Weight], ...]

    @cached_property
    def adjacency(self) -> dict[int, dict[int, Weight]]:
        adj: dict[int, dict[int, Weight]] = {i: {} for i in range(1, self.n + 1)}
        for i, j, m in self.edges:
            adj[i][j] = m
            adj[j][i] = m
        return adj

    def weight(self, i: int, j: int) -> Weight:
        if i == j:
            return 1
        return self.adjacency[i].get(j, 2)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    @property
    def has_infinite_edge(self) -> bool:
        return any(m == INF for _, _, m in self.edges)

    @property
    def max_weight(self) -> Weight:
        return max((m for _, _, m in self.edges), default=2)

    def __str__(self):
        es = ", ".join(f"{i}-{j}:{weight_str(m)}" for i, j, m in self.edges)
        return f"CoxeterGraph(n={self.n}; {es})"


def _make(n: int, pairs) -> CoxeterGraph:
    edges = tuple(sorted(((min(i, j), max(i, j), m) for i, j, m in pairs if m != 2),
                         key=lambda e: (e[0], e[1])))
    return CoxeterGraph(n, edges)


def validate(raw_weights: dict, n: int) -> CoxeterGraph:
    """Build a graph from a (possibly redundant) symmetric weight map."""
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"node count must be a positive integer, got {n!r}")
    seen: dict[tuple[int, int], Weight] = {}
    for (i, j), m in raw_weights.items():
        if not (isinstance(i, int) and isinstance(j, int)):
            raise GraphError(f"node indices must be integers: ({i!r}, {j!r})")
        if i == j:
            raise GraphError(f"self-weight at node {i} (m_ii = 1 is implicit)")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"node pair ({i}, {j}) out of range 1..{n}")
        if not weight_ok(m):
            raise GraphError(f"illegal weight {m!r} at ({i}, {j}); need an integer >= 2 or INF")
        key = (min(i, j), max(i, j))
        if key in seen and seen[key] != m:
            raise GraphError(f"asymmetric weights at ({i}, {j}): {seen[key]} vs {m}")
        seen[key] = m
    return _make(n, ((i, j, m) for (i, j), m in seen.items()))


def from_linear_symbol(symbol) -> CoxeterGraph:
    """Path graph for the Coxeter symbol [k1, ..., kN]: N+1 nodes, N edges."""
    ks = list(symbol)
    if not ks:
        raise GraphError("empty Coxeter symbol")
    for k in ks:
        if not weight_ok(k) or k == 2:
            raise GraphError(f"symbol weight {k!r} not in {{3, 4, ..., inf}}")
    return _make(len(ks) + 1, ((i, i + 1, k) for i, k in enumerate(ks, start=1)))


def y_shape(p: Weight, k: int, l: int) -> CoxeterGraph:
    """The graph [p, 3^(k,l)]: a weight-p edge plus simple-edge strings of
    lengths k and l, all emanating from a central node of valency 3."""
    if not weight_ok(p) or p == 2:
        raise GraphError(f"y-shape weight {p!r} not in {{3, 4, ..., inf}}")
    if k < 1 or l < 1:
        raise GraphError(f"string lengths must be >= 1, got ({k}, {l})")
    center = 1
    pairs = [(center, 2, p)]
    nxt = 3
    for length in (k, l):
        prev = center
        for _ in range(length):
            pairs.append((prev, nxt, 3))
            prev = nxt
            nxt += 1
    return _make(k + l + 2, pairs)


def cycle_graph(n: int, weight: Weight = 3) -> CoxeterGraph:
    """Simple n-cycle (n >= 3); the order-(n) affine graph A~_{n-1} when weight = 3."""
    if n < 3:
        raise GraphError("a cycle needs at least 3 nodes")
    pairs = [(i, i + 1, weight) for i in range(1, n)] + [(1, n, weight)]
    return _make(n, pairs)


def induced_subgraph(g: CoxeterGraph, members) -> CoxeterGraph:
    """Restriction to a node subset, relabeled 1..|t| order-preservingly."""
    t = sorted(set(members))
    if t and not (1 <= t[0] and t[-1] <= g.n):
        raise GraphError(f"subset {t} out of range 1..{g.n}")
    index = {v: i for i, v in enumerate(t, start=1)}
    pairs = [(index[i], index[j], m) for i, j, m in g.edges if i in index and j in index]
    return _make(len(t), pairs)


def permute(g: CoxeterGraph, perm) -> CoxeterGraph:
    """Relabel nodes: perm maps old label -> new label (dict or 0-based sequence)."""
    if not isinstance(perm, dict):
        perm = {i + 1: v for i, v in enumerate(perm)}
    if sorted(perm) != list(g.nodes) or sorted(perm.values()) != list(g.nodes):
        raise GraphError("permutation must be a bijection on 1..n")
    return _make(g.n, ((perm[i], perm[j], m) for i, j, m in g.edges))


def connected_components(g: CoxeterGraph) -> list[frozenset[int]]:
    """Partition into components linked by edges of weight >= 3, ordered by smallest member."""
    seen: set[int] = set()
    comps = []
    for start in g.nodes:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def disjoint_union(*graphs: CoxeterGraph) -> CoxeterGraph:
    pairs = []
    offset = 0
    for g in graphs:
        pairs.extend((i + offset, j + offset, m) for i, j, m in g.edges)
        offset += g.n
    return _make(offset, pairs)


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabeling-invariant normal form: equal iff the graphs are isomorphic."""

    n: int
    edges: tuple[tuple[int, int, Weight], ...]


def canonical_form(g: CoxeterGraph) -> CanonicalForm:
    """Minimal edge encoding over all relabelings.

    Branch-and-bound over node orderings: at each level only orderings whose
    next row of weights (toward the already-placed prefix) is lexicographically
    minimal can realize the global minimum, and candidates that differ by a
    transposition automorphism are explored once.
    """
    n = g.n
    if n <= 1:
        return CanonicalForm(n, ())
    wt = g.weight
    all_nodes = list(g.nodes)

    def rec(prefix: list[int], remaining: list[int]) -> list:
        if not remaining:
            return []
        rows: dict[tuple, list[int]] = {}
        for u in remaining:
            row = tuple(float(wt(u, v)) for v in prefix)
            rows.setdefault(row, []).append(u)
        row = min(rows)
        cands = rows[row]
        pruned: list[int] = []
        for u in cands:
            if any(all(wt(u, x) == wt(v, x) for x in all_nodes if x not in (u, v))
                   for v in pruned):
                continue  # (u v) is an automorphism; the v-branch already covers u
            pruned.append(u)
        best = None
        for u in pruned:
            rest = [x for x in remaining if x != u]
            tail = rec(prefix + [u], rest)
            if best is None or tail < best:
                best = tail
        return list(row) + best

    flat = rec([], all_nodes)
    edges = []
    pos = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            w = flat[pos]
            pos += 1
            if w != 2:
                edges.append((i, j, INF if w == INF else int(w)))
    return CanonicalForm(n, tuple(edges))


def is_isomorphic(a: CoxeterGraph, b: CoxeterGraph) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def sort_key(g: CoxeterGraph):
    cf = canonical_form(g)
    return (cf.n, tuple((i, j, float(m)) for i, j, m in cf.edges))


def all_permutations(n: int):
    for p in itertools.permutations(range(1, n + 1)):
        yield {i + 1: v for i, v in enumerate(p)}
