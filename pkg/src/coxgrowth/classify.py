"""Recognition of irreducible spherical and affine Coxeter graph types.

Classification is structural pattern matching on degrees, weights and branch
shapes, so it is independent of node labeling and needs no algebraic
arithmetic.  The exponent table feeds the Poincare polynomial machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import INF, CoxeterGraph, GraphError, connected_components, induced_subgraph

SPHERICAL_FAMILIES = frozenset({"A", "B", "D", "E6", "E7", "E8", "F4", "H3", "H4", "I2"})
AFFINE_FAMILIES = frozenset(
    {"A~", "A~1", "B~", "C~", "D~", "E6~", "E7~", "E8~", "F4~", "G2~"}
)


class ClassifyError(ValueError):
    pass


@dataclass(frozen=True)
class IrreducibleType:
    """Label of a connected Coxeter graph: spherical family, affine family, or INDEFINITE.

    ``rank`` is the node count of the graph.  ``m`` is set for I2(m) only.
    """

    family: str
    rank: int
    m: int | float | None = None

    @property
    def is_spherical(self) -> bool:
        return self.family in SPHERICAL_FAMILIES

    @property
    def is_affine(self) -> bool:
        return self.family in AFFINE_FAMILIES

    @property
    def is_indefinite(self) -> bool:
        return self.family == "INDEFINITE"

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.m})"
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.rank}"
        if self.family in ("A~", "B~", "C~", "D~"):
            return f"{self.family[0]}~{self.rank - 1}"
        return self.family


INDEFINITE = IrreducibleType("INDEFINITE", 0)


def _type(family: str, rank: int, m=None) -> IrreducibleType:
    return IrreducibleType(family, rank, m)


def _path_sequence(g: CoxeterGraph) -> list | None:
    """Edge-weight sequence along a path graph, or None if g is not a path."""
    ends = [v for v in g.nodes if g.degree(v) == 1]
    if g.n == 1:
        return []
    if len(ends) != 2 or any(g.degree(v) > 2 for v in g.nodes):
        return None
    seq = []
    prev, cur = None, ends[0]
    for _ in range(g.n - 1):
        nxts = [x for x in g.adjacency[cur] if x != prev]
        if len(nxts) != 1:
            return None
        seq.append(g.adjacency[cur][nxts[0]])
        prev, cur = cur, nxts[0]
    return min(seq, list(reversed(seq)))


def _branches(g: CoxeterGraph, fork: int) -> list[list]:
    """Weight lists of the three (or more) strings emanating from a fork node."""
    out = []
    for nb in g.adjacency[fork]:
        weights = [g.adjacency[fork][nb]]
        prev, cur = fork, nb
        while True:
            nxts = [x for x in g.adjacency[cur] if x != prev]
            if not nxts:
                break
            (nxt,) = nxts
            weights.append(g.adjacency[cur][nxt])
            prev, cur = cur, nxt
        out.append(weights)
    return out


def _classify_path(seq: list, n: int) -> IrreducibleType:
    if n == 1:
        return _type("A", 1)
    if n == 2:
        (m,) = seq
        if m == 3:
            return _type("A", 2)
        if m == 4:
            return _type("B", 2)
        if m == INF:
            return _type("A~1", 2)
        return _type("I2", 2, m)
    if INF in seq:
        return INDEFINITE
    if all(w == 3 for w in seq):
        return _type("A", n)
    heavy = [(i, w) for i, w in enumerate(seq) if w >= 4]
    if len(heavy) == 1:
        i, w = heavy[0]
        if i == n - 2:  # seq is normalized, so a lone heavy edge sits rightmost or inside
            if w == 4:
                return _type("B", n)
            if w == 5 and n == 3:
                return _type("H3", 3)
            if w == 5 and n == 4:
                return _type("H4", 4)
            if w == 6 and n == 3:
                return _type("G2~", 3)
            return INDEFINITE
        if w == 4 and n == 4 and i == n - 3:
            return _type("F4", 4)
        if w == 4 and n == 5 and i == n - 3:
            return _type("F4~", 5)
        return INDEFINITE
    if len(heavy) == 2:
        (i1, w1), (i2, w2) = heavy
        if w1 == w2 == 4 and i1 == 0 and i2 == n - 2:
            return _type("C~", n)
    return INDEFINITE


def _classify_fork(g: CoxeterGraph, fork: int, n: int) -> IrreducibleType:
    branches = _branches(g, fork)
    lengths = sorted(len(b) for b in branches)
    heavy = [w for b in branches for w in b if w >= 4]
    if not heavy:
        if lengths[:2] == [1, 1]:
            return _type("D", n)
        if lengths == [1, 2, 2]:
            return _type("E6", 6)
        if lengths == [1, 2, 3]:
            return _type("E7", 7)
        if lengths == [1, 2, 4]:
            return _type("E8", 8)
        if lengths == [2, 2, 2]:
            return _type("E6~", 7)
        if lengths == [1, 3, 3]:
            return _type("E7~", 8)
        if lengths == [1, 2, 5]:
            return _type("E8~", 9)
        return INDEFINITE
    if heavy == [4] and lengths[:2] == [1, 1]:
        # B~: the weight-4 edge is the outermost edge of a longest branch
        longest = max(len(b) for b in branches)
        for b in branches:
            if b[-1] == 4 and len(b) == longest and all(w == 3 for w in b[:-1]):
                return _type("B~", n)
    return INDEFINITE


def classify_irreducible(g: CoxeterGraph) -> IrreducibleType:
    """Type of a connected nonempty Coxeter graph."""
    if g.n == 0:
        raise ClassifyError("empty graph has no irreducible type")
    if len(connected_components(g)) != 1:
        raise ClassifyError("classify_irreducible requires a connected graph")
    n = g.n
    if n == 1:
        return _type("A", 1)
    n_edges = len(g.edges)
    if g.has_infinite_edge and n >= 3:
        return INDEFINITE
    if n_edges >= n + 1:
        return INDEFINITE
    if n_edges == n:  # exactly one cycle
        if all(g.degree(v) == 2 for v in g.nodes) and all(m == 3 for _, _, m in g.edges):
            return _type("A~", n)
        return INDEFINITE
    # tree
    maxdeg = max(g.degree(v) for v in g.nodes)
    if maxdeg >= 4:
        if (n == 5 and maxdeg == 4 and n_edges == 4
                and all(m == 3 for _, _, m in g.edges)):
            return _type("D~", 5)
        return INDEFINITE
    forks = [v for v in g.nodes if g.degree(v) == 3]
    if not forks:
        seq = _path_sequence(g)
        return _classify_path(seq, n)
    if len(forks) == 1:
        return _classify_fork(g, forks[0], n)
    if len(forks) == 2 and all(m == 3 for _, _, m in g.edges):
        # D~ with n >= 5: two forks, each carrying exactly two pendant leaves
        ok = all(
            sum(1 for x in g.adjacency[f] if g.degree(x) == 1) == 2 for f in forks
        )
        if ok:
            return _type("D~", n)
    return INDEFINITE


def component_types(g: CoxeterGraph) -> list[IrreducibleType]:
    return [classify_irreducible(induced_subgraph(g, comp))
            for comp in connected_components(g)]


def is_spherical(g: CoxeterGraph) -> bool:
    """True iff every connected component is of spherical type (empty graph: True)."""
    if g.n == 0:
        return True
    return all(t.is_spherical for t in component_types(g))


def is_affine(g: CoxeterGraph) -> bool:
    """True iff nonempty and every connected component is of affine type."""
    if g.n == 0:
        raise GraphError("is_affine is undefined for the empty graph")
    return all(t.is_affine for t in component_types(g))


# ---------------------------------------------------------------------------
# exponents
# ---------------------------------------------------------------------------

_EXCEPTIONAL_EXPONENTS = {
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
    "F4": (1, 5, 7, 11),
    "H3": (1, 5, 9),
    "H4": (1, 11, 19, 29),
}


def exponents(t: IrreducibleType) -> tuple[int, ...]:
    """Exponents m_1 <= ... <= m_p of a spherical type; the Poincare polynomial
    is the bracket product over m_i + 1 and the group order is prod(m_i + 1)."""
    if not t.is_spherical:
        raise ClassifyError(f"exponents are defined for spherical types only, got {t}")
    fam, n = t.family, t.rank
    if fam == "A":
        return tuple(range(1, n + 1))
    if fam == "B":
        return tuple(range(1, 2 * n, 2))
    if fam == "D":
        return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
    if fam == "I2":
        return (1, t.m - 1)
    return _EXCEPTIONAL_EXPONENTS[fam]


def group_order_from_exponents(t: IrreducibleType) -> int:
    out = 1
    for m in exponents(t):
        out *= m + 1
    return out
