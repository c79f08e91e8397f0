"""Builders for the classified diagram families and the named study graphs.

``spherical_graph`` / ``affine_graph`` construct one labeled representative of
each irreducible family; ``NAMED`` collects the specific graphs whose growth
rates and volume classes the test suite pins down: the minimal-rate simplex
graphs gamma2..gamma9, the three order-4 groups w0/w1/w2 with an infinite
edge, the pyramid-group graph p0, and the four infinite-covolume order-6
graphs delta1..delta4 (fig4 being the delta3 shape rooted at a different
base diagram).
"""

from __future__ import annotations

from .classify import classify_irreducible
from .graph import (
    INF,
    CoxeterGraph,
    GraphError,
    cycle_graph,
    from_linear_symbol,
    validate,
    y_shape,
)


def fork_graph(*lengths: int) -> CoxeterGraph:
    """Tree of simple edges: strings of the given lengths from one center node."""
    if len(lengths) < 3 or any(k < 1 for k in lengths):
        raise GraphError(f"fork needs >= 3 strings of length >= 1, got {lengths}")
    pairs = []
    nxt = 2
    for length in lengths:
        prev = 1
        for _ in range(length):
            pairs.append((prev, nxt, 3))
            prev = nxt
            nxt += 1
    return validate({(i, j): m for i, j, m in pairs}, nxt - 1)


def spherical_graph(family: str, rank: int = 0, m=None) -> CoxeterGraph:
    """One representative of each irreducible spherical family."""
    if family == "A":
        if rank < 1:
            raise GraphError("A requires rank >= 1")
        return (CoxeterGraph(1, ()) if rank == 1
                else from_linear_symbol([3] * (rank - 1)))
    if family == "B":
        if rank < 2:
            raise GraphError("B requires rank >= 2")
        return from_linear_symbol([3] * (rank - 2) + [4])
    if family == "D":
        if rank < 4:
            raise GraphError("D requires rank >= 4")
        return y_shape(3, 1, rank - 3)
    if family == "E6":
        return fork_graph(1, 2, 2)
    if family == "E7":
        return fork_graph(1, 2, 3)
    if family == "E8":
        return fork_graph(1, 2, 4)
    if family == "F4":
        return from_linear_symbol([3, 4, 3])
    if family == "H3":
        return from_linear_symbol([5, 3])
    if family == "H4":
        return from_linear_symbol([5, 3, 3])
    if family == "I2":
        if m is None or m == INF or m < 3:
            raise GraphError(f"I2 requires a finite weight >= 3, got {m}")
        return from_linear_symbol([m])
    raise GraphError(f"unknown spherical family {family!r}")


def affine_graph(family: str, rank: int = 0) -> CoxeterGraph:
    """One representative of each connected affine family; the graph order is
    rank + 1 for the lettered families."""
    if family == "A~1":
        return from_linear_symbol([INF])
    if family == "A~":
        if rank < 2:
            raise GraphError("A~ requires rank >= 2 (A~1 is its own family)")
        return cycle_graph(rank + 1)
    if family == "B~":
        if rank < 3:
            raise GraphError("B~ requires rank >= 3")
        # two pendant leaves at one end, a weight-4 edge at the other
        pairs = {(1, 2): 3, (1, 3): 3}
        prev = 1
        nxt = 4
        for _ in range(rank - 3):
            pairs[(prev, nxt)] = 3
            prev, nxt = nxt, nxt + 1
        pairs[(prev, nxt)] = 4
        return validate(pairs, rank + 1)
    if family == "C~":
        if rank < 2:
            raise GraphError("C~ requires rank >= 2")
        return from_linear_symbol([4] + [3] * (rank - 2) + [4])
    if family == "D~":
        if rank < 4:
            raise GraphError("D~ requires rank >= 4")
        if rank == 4:
            return validate({(1, 2): 3, (1, 3): 3, (1, 4): 3, (1, 5): 3}, 5)
        # pendant leaf pairs at both ends of a simple path
        pairs = {(1, 2): 3, (1, 3): 3}
        prev = 1
        nxt = 4
        for _ in range(rank - 4):
            pairs[(prev, nxt)] = 3
            prev, nxt = nxt, nxt + 1
        pairs[(prev, nxt)] = 3
        pairs[(prev, nxt + 1)] = 3
        return validate(pairs, rank + 1)
    if family == "E6~":
        return fork_graph(2, 2, 2)
    if family == "E7~":
        return fork_graph(1, 3, 3)
    if family == "E8~":
        return fork_graph(1, 2, 5)
    if family == "F4~":
        return from_linear_symbol([3, 4, 3, 3])
    if family == "G2~":
        return from_linear_symbol([6, 3])
    raise GraphError(f"unknown affine family {family!r}")


def spherical_irreducibles(rank: int, max_m: int = 6) -> list[tuple[str, CoxeterGraph]]:
    """All irreducible spherical diagrams of a given rank with weights <= max_m."""
    out: list[tuple[str, CoxeterGraph]] = []
    if rank == 1:
        out.append(("A1", spherical_graph("A", 1)))
        return out
    if rank == 2:
        out.append(("A2", spherical_graph("A", 2)))
        out.append(("B2", spherical_graph("B", 2)))
        for m in range(5, max_m + 1):
            out.append((f"I2({m})", spherical_graph("I2", m=m)))
        return out
    out.append((f"A{rank}", spherical_graph("A", rank)))
    out.append((f"B{rank}", spherical_graph("B", rank)))
    if rank >= 4:
        out.append((f"D{rank}", spherical_graph("D", rank)))
    for fam, r in (("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("H3", 3), ("H4", 4)):
        if r == rank:
            out.append((fam, spherical_graph(fam)))
    return out


def affine_connected_of_order(order: int) -> list[tuple[str, CoxeterGraph]]:
    """All connected affine diagrams with the given number of nodes."""
    if order < 2:
        return []
    if order == 2:
        return [("A~1", affine_graph("A~1"))]
    rank = order - 1
    out = []
    if rank >= 2:
        out.append((f"A~{rank}", affine_graph("A~", rank)))
    if rank >= 3:
        out.append((f"B~{rank}", affine_graph("B~", rank)))
    if rank >= 2:
        out.append((f"C~{rank}", affine_graph("C~", rank)))
    if rank >= 4:
        out.append((f"D~{rank}", affine_graph("D~", rank)))
    for fam, r in (("E6~", 6), ("E7~", 7), ("E8~", 8), ("F4~", 4), ("G2~", 2)):
        if r == rank:
            out.append((fam, affine_graph(fam)))
    return out


def _edges(n: int, pairs) -> CoxeterGraph:
    return validate({(i, j): m for i, j, m in pairs}, n)


# the minimal-rate finite-covolume simplex graph in each dimension 2..9
GAMMA: dict[int, CoxeterGraph] = {
    2: from_linear_symbol([3, INF]),
    3: from_linear_symbol([6, 3, 3]),
    4: y_shape(4, 2, 1),
    5: from_linear_symbol([3, 4, 3, 3, 3]),
    6: _edges(7, [(1, 2, 4), (2, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (4, 7, 3)]),
    7: fork_graph(2, 2, 3),
    8: fork_graph(1, 3, 4),
    9: fork_graph(1, 2, 6),
}

# the three order-4 graphs with an infinite edge used in the dominance argument
W0 = from_linear_symbol([INF, 3, 3])
W1 = from_linear_symbol([3, INF, 3])
W2 = y_shape(INF, 1, 1)

# the non-simplex pyramid graph whose rate certifies the polyhedral case
P0 = _edges(6, [(1, 2, 4), (1, 4, 4), (2, 3, 3), (2, 4, 3),
                (3, 5, 3), (3, 6, 4), (4, 5, 3), (5, 6, 4)])

# the four infinite-covolume order-6 simplex graphs
DELTA: dict[int, CoxeterGraph] = {
    1: _edges(6, [(1, 2, 4), (2, 3, 3), (3, 4, 3), (2, 5, 3), (3, 6, 3)]),
    2: _edges(6, [(1, 2, 4), (2, 3, 3), (3, 4, 3), (4, 5, 4), (2, 6, 3)]),
    3: _edges(6, [(1, 2, 3), (2, 3, 4), (3, 4, 3), (4, 5, 3), (2, 6, 3)]),
    4: _edges(6, [(1, 2, 3), (2, 3, 4), (3, 4, 3), (4, 5, 3), (3, 6, 3)]),
}

# the showcased infinite-covolume extension of the order-5 affine path diagram
FIG4 = DELTA[3]

NAMED: dict[str, CoxeterGraph] = {
    **{f"gamma{n}": g for n, g in GAMMA.items()},
    "w0": W0,
    "w1": W1,
    "w2": W2,
    "p0": P0,
    **{f"delta{i}": g for i, g in DELTA.items()},
    "fig4": FIG4,
}


def _selfcheck():  # pragma: no cover - exercised by the test suite
    for rank in range(1, 10):
        for name, g in spherical_irreducibles(rank):
            assert str(classify_irreducible(g)) == name, (name, g)
    for order in range(2, 10):
        for name, g in affine_connected_of_order(order):
            assert str(classify_irreducible(g)) == name, (name, g)
