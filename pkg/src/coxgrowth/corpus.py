"""Exhaustive generation of the finite-covolume non-compact simplex corpus.

A connected graph of order n+1 encodes a finite-volume non-compact hyperbolic
n-simplex iff its Gram matrix has signature (n, 1) and every component of
each of the n+1 principal subgraphs (vertex links) is spherical or affine,
with at least one affine component somewhere.  Interlacing against signature
(n, 1) caps the corank of a link at 1, so a link has at most one affine
component; and a prefix subgraph (the new node plus the first j base nodes,
j <= n-2) with a non-spherical component can never extend to a connected
finite-covolume graph, because nothing outside an affine component of a link
may attach to it.  That makes a pruned search over one-node attachments
exhaustive: pick the link of the last node as a base and attach the last
node in all weight patterns that keep each prefix subgraph spherical
(spherical-or-affine at full link order).
"""

from __future__ import annotations

from functools import lru_cache

from .catalog import affine_connected_of_order, spherical_irreducibles
from .classify import component_types
from .graph import (
    INF,
    CoxeterGraph,
    _make,
    canonical_form,
    connected_components,
    disjoint_union,
    sort_key,
)
from .simplex import SimplexError, VolumeClass, gram, signature

ATTACH_WEIGHTS = (3, 4, 5, 6, INF)


@lru_cache(maxsize=None)
def _spherical_unions(order: int) -> tuple[CoxeterGraph, ...]:
    """All spherical graphs of the given node count (multisets of irreducible
    diagrams with weights <= 6), one labeled representative per isomorphism
    class; the empty graph for order 0."""
    items = [g for rank in range(1, order + 1)
             for _, g in spherical_irreducibles(rank)]
    out: list[CoxeterGraph] = []

    def rec(idx: int, remaining: int, acc: list[CoxeterGraph]):
        if remaining == 0:
            out.append(disjoint_union(*acc) if acc else CoxeterGraph(0, ()))
            return
        for k in range(idx, len(items)):
            if items[k].n <= remaining:
                rec(k, remaining - items[k].n, acc + [items[k]])

    rec(0, order, [])
    return tuple(out)


@lru_cache(maxsize=None)
def base_graphs(order: int) -> tuple[CoxeterGraph, ...]:
    """Every admissible vertex link of the given node count: a spherical
    disjoint union, or one connected affine diagram plus a spherical rest.

    (Interlacing against a Lorentzian signature caps the corank of a principal
    Gram submatrix at 1, so a link never has two affine components.)
    """
    bases = list(_spherical_unions(order))
    for a in range(2, order + 1):
        for _, aff in affine_connected_of_order(a):
            for sph in _spherical_unions(order - a):
                bases.append(aff if sph.n == 0 else disjoint_union(aff, sph))
    return tuple(bases)


def _attachment_closure(base: CoxeterGraph, comp_of, comps, wvec, j: int):
    """Induced graph on the new node, its attachment components (clipped to
    the first j base nodes) and the new edges assigned so far."""
    members = sorted({x for a in wvec for x in comps[comp_of[a]] if x <= j})
    idx = {v: i for i, v in enumerate(members, start=1)}
    nn = len(members) + 1
    pairs = [(idx[i], idx[k], m) for i, k, m in base.edges
             if i in idx and k in idx]
    pairs += [(idx[a], nn, w) for a, w in wvec.items()]
    return _make(nn, pairs)


@lru_cache(maxsize=None)
def _prefix_flags(g: CoxeterGraph) -> tuple[bool, bool]:
    """(all components spherical, all components spherical-or-affine)."""
    types = component_types(g)
    sph = all(t.is_spherical for t in types)
    return sph, sph or all(t.is_spherical or t.is_affine for t in types)


def simplex_corpus(n: int, weights=ATTACH_WEIGHTS) -> list[CoxeterGraph]:
    """All order-(n+1) graphs of finite-covolume non-compact hyperbolic
    n-simplices, up to isomorphism, sorted deterministically."""
    return list(_simplex_corpus_cached(n, tuple(weights)))


@lru_cache(maxsize=None)
def _simplex_corpus_cached(n: int, weights) -> tuple[CoxeterGraph, ...]:
    if n < 2:
        raise ValueError(f"simplex dimension must be >= 2, got {n}")
    order = n + 1
    decided: dict = {}
    found: list[CoxeterGraph] = []

    def finalize(base: CoxeterGraph, comp_count: int, comp_of, wvec):
        if len({comp_of[a] for a in wvec}) != comp_count:
            return  # the new node fails to join all base components
        g = CoxeterGraph(order, base.edges
                         + tuple(sorted((a, order, w) for a, w in wvec.items())))
        has_affine = False
        for v in g.nodes:
            ts = component_types(_principal(g, v))
            if not all(t.is_spherical or t.is_affine for t in ts):
                return
            has_affine = has_affine or any(t.is_affine for t in ts)
        if not has_affine:
            return
        cf = canonical_form(g)
        if cf in decided:
            return
        decided[cf] = True
        try:
            if signature(gram(g)) != (n, 1, 0):
                return
        except SimplexError:
            return
        found.append(g)

    for base in base_graphs(n):
        comps = connected_components(base)
        comp_of = {v: k for k, c in enumerate(comps) for v in c}

        def rec(j: int, wvec: dict):
            if j > n:
                if wvec:
                    finalize(base, len(comps), comp_of, wvec)
                return
            rec(j + 1, wvec)  # leave the pair at weight 2
            for w in weights:
                wvec2 = {**wvec, j: w}
                if j == n:
                    # the full candidate graph carries no prefix constraint;
                    # finalize() performs the real admissibility checks
                    rec(j + 1, wvec2)
                    continue
                part = _attachment_closure(base, comp_of, comps, wvec2, j)
                spherical, admissible = _prefix_flags(part)
                # prefix subgraphs of order <= n-1 with an affine (or worse)
                # component cannot extend to a connected finite-covolume
                # graph; at order n the prefix is the vertex link of the
                # last base node, where affine components are allowed
                ok = spherical if j <= n - 2 else admissible
                if ok:
                    rec(j + 1, wvec2)

        rec(1, {})
    return tuple(sorted(found, key=sort_key))


def _principal(g: CoxeterGraph, v: int) -> CoxeterGraph:
    from .graph import induced_subgraph

    return induced_subgraph(g, [u for u in g.nodes if u != v])


def corpus_volume_check(g: CoxeterGraph) -> VolumeClass:
    from .simplex import simplex_class

    return simplex_class(g).volume_class
