"""Gram matrices of Coxeter graphs, exact signatures and simplex volume classes.

The Gram matrix of a graph with weights in {2, 3, 4, 5, 6, oo} has entries in
Q(sqrt2, sqrt3, sqrt5), so its inertia is computed exactly by symmetric
(congruence) elimination.  A connected graph of order n+1 with signature
(n, 1) encodes a hyperbolic n-simplex; its covolume class is read off the
n+1 vertex links (principal subgraphs obtained by deleting one node).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algnum import AlgNum, minus_cos_pi_over
from .classify import IrreducibleType, component_types
from .graph import CoxeterGraph, GraphError, connected_components, induced_subgraph


class SimplexError(ValueError):
    pass


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric matrix with 1's on the diagonal and entries -cos(pi/m_ij) off it."""

    n: int
    entries: tuple[tuple[AlgNum, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def gram(g: CoxeterGraph) -> GramMatrix:
    """Exact Gram matrix; weights must lie in {2, 3, 4, 5, 6, oo}."""
    rows = []
    for i in g.nodes:
        row = []
        for j in g.nodes:
            try:
                row.append(minus_cos_pi_over(g.weight(i, j)) if i != j
                           else AlgNum.from_rational(1))
            except ValueError:
                raise SimplexError(
                    f"weight {g.weight(i, j)} at ({i}, {j}) is outside the exact field"
                ) from None
        rows.append(tuple(row))
    return GramMatrix(g.n, tuple(rows))


def signature(m: GramMatrix) -> tuple[int, int, int]:
    """Inertia (n_plus, n_minus, n_zero) by exact symmetric elimination.

    A zero diagonal with a nonzero off-diagonal entry A[i][j] is repaired by
    the congruence row_i += row_j / col_i += col_j, which puts 2*A[i][j] != 0
    on the diagonal.
    """
    n = m.n
    a = [[m.entries[i][j] for j in range(n)] for i in range(n)]
    live = list(range(n))
    plus = minus = zero = 0
    while live:
        piv = next((i for i in live if not a[i][i].is_zero), None)
        if piv is None:
            pair = next(((i, j) for i in live for j in live
                         if j != i and not a[i][j].is_zero), None)
            if pair is None:
                zero += len(live)
                break
            i, j = pair
            for k in range(n):
                a[i][k] = a[i][k] + a[j][k]
            for k in range(n):
                a[k][i] = a[k][i] + a[k][j]
            piv = i
        p = a[piv][piv]
        if p.sign() > 0:
            plus += 1
        else:
            minus += 1
        live.remove(piv)
        pinv = p.inverse()
        factors = [(i, a[i][piv] * pinv) for i in live]
        for i, f in factors:
            if f.is_zero:
                continue
            for k in live:
                a[i][k] = a[i][k] - f * a[piv][k]
    return plus, minus, zero


class VolumeClass(enum.Enum):
    SPHERICAL = "spherical"
    AFFINE = "affine"
    COMPACT_HYPERBOLIC = "compact_hyperbolic"
    FINITE_VOLUME_NONCOMPACT = "finite_volume_noncompact"
    INFINITE_VOLUME = "infinite_volume"


@dataclass(frozen=True)
class LinkReport:
    """Classification of the principal subgraph obtained by deleting one node.

    The link Gram matrix is positive definite iff every component is
    spherical (ordinary vertex) and positive semidefinite singular iff every
    component is spherical or affine with at least one affine (ideal vertex).
    """

    deleted_node: int
    component_labels: tuple[str, ...]
    is_spherical: bool
    is_ideal: bool  # components spherical-or-affine, at least one affine

    @property
    def is_admissible(self) -> bool:
        return self.is_spherical or self.is_ideal


@dataclass(frozen=True)
class SimplexReport:
    volume_class: VolumeClass
    signature: tuple[int, int, int]
    links: tuple[LinkReport, ...]


def _link_report(g: CoxeterGraph, v: int) -> LinkReport:
    sub = induced_subgraph(g, [u for u in g.nodes if u != v])
    if sub.n == 0:
        return LinkReport(v, (), True, False)
    types = component_types(sub)
    spherical_or_affine = all(t.is_spherical or t.is_affine for t in types)
    has_affine = any(t.is_affine for t in types)
    return LinkReport(
        v,
        tuple(str(t) for t in types),
        all(t.is_spherical for t in types),
        spherical_or_affine and has_affine,
    )


def simplex_class(g: CoxeterGraph) -> SimplexReport:
    """Volume class of the simplex encoded by a connected order-(n+1) graph."""
    if g.n == 0:
        raise SimplexError("empty graph")
    if len(connected_components(g)) != 1:
        raise SimplexError("simplex classification requires a connected graph")
    types = component_types(g)
    sig = signature(gram(g))
    links = tuple(_link_report(g, v) for v in g.nodes)
    if all(t.is_spherical for t in types):
        return SimplexReport(VolumeClass.SPHERICAL, sig, links)
    if all(t.is_affine for t in types):
        return SimplexReport(VolumeClass.AFFINE, sig, links)
    n = g.n - 1
    if sig != (n, 1, 0):
        raise SimplexError(
            f"signature {sig} is neither definite, semidefinite nor ({n}, 1)"
        )
    if all(lk.is_spherical for lk in links):
        cls = VolumeClass.COMPACT_HYPERBOLIC
    elif all(lk.is_admissible for lk in links):
        cls = VolumeClass.FINITE_VOLUME_NONCOMPACT
    else:
        cls = VolumeClass.INFINITE_VOLUME
    return SimplexReport(cls, sig, links)


def ideal_link_partitions(n: int) -> list[tuple[int, ...]]:
    """All multisets {k_1, ..., k_c} with c >= 2, each k_i >= 3 and
    sum(k_i - 1) = n - 1: the component orders of a reducible affine vertex
    link of an ideal vertex of a hyperbolic Coxeter n-simplex."""
    if n < 3:
        raise SimplexError(f"need n >= 3, got {n}")
    target = n - 1
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, minimum: int, acc: list[int]):
        if remaining == 0:
            if len(acc) >= 2:
                out.append(tuple(acc))
            return
        for k in range(minimum, remaining + 1 + 1):
            if k - 1 > remaining:
                break
            rec(remaining - (k - 1), k, acc + [k])

    rec(target, 3, [])
    return sorted(out, key=lambda t: (len(t), t))
