"""Growth-rate comparison tools: dominance embeddings, one-node extensions
and certified minimal-rate selection.

An injective map between node sets that never decreases edge weights forces
the growth rate of the source system to be at most that of the target, so a
witness embedding is a monotonicity certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import CoxeterGraph, GraphError, canonical_form, sort_key
from .growth import DEFAULT_EPS, growth_rate
from .poly import count_roots, poly_gcd, squarefree_part, sturm_chain


class CompareError(ValueError):
    pass


@dataclass(frozen=True)
class Embedding:
    """Injection iota with weight(s, t) <= weight(iota(s), iota(t)) for all pairs."""

    mapping: tuple[int, ...]  # mapping[i-1] = image of node i

    def __getitem__(self, i: int) -> int:
        return self.mapping[i - 1]


def _weight_le(a, b) -> bool:
    return a <= b  # INF is a float and sorts above every integer


def dominates(a: CoxeterGraph, b: CoxeterGraph) -> Embedding | None:
    """Lexicographically first weight-nondecreasing injection of a into b, or None."""
    if a.n > b.n:
        return None
    image: list[int] = []
    used = [False] * (b.n + 1)

    def extend(i: int) -> bool:
        if i > a.n:
            return True
        for cand in b.nodes:
            if used[cand]:
                continue
            if all(_weight_le(a.weight(i, j), b.weight(cand, image[j - 1]))
                   for j in range(1, i)):
                used[cand] = True
                image.append(cand)
                if extend(i + 1):
                    return True
                image.pop()
                used[cand] = False
        return False

    if extend(1):
        return Embedding(tuple(image))
    return None


def check_embedding(a: CoxeterGraph, b: CoxeterGraph, emb: Embedding) -> bool:
    """Post-hoc literal verification of the weight condition."""
    if sorted(set(emb.mapping)) != sorted(emb.mapping) or len(emb.mapping) != a.n:
        return False
    return all(
        _weight_le(a.weight(i, j), b.weight(emb[i], emb[j]))
        for i in a.nodes for j in a.nodes if i < j
    )


def extensions(g: CoxeterGraph, weight=3) -> list[CoxeterGraph]:
    """All graphs obtained by attaching one new node to a single existing node
    by an edge of the given weight (default simple), up to isomorphism."""
    if g.n == 0:
        raise GraphError("cannot extend the empty graph")
    seen = {}
    for v in g.nodes:
        ext = CoxeterGraph(g.n + 1, g.edges + ((v, g.n + 1, weight),))
        seen.setdefault(canonical_form(ext), ext)
    return sorted(seen.values(), key=sort_key)


def _rates_equal(a: CoxeterGraph, b: CoxeterGraph, ra, rb) -> bool:
    """Exact equality test for two overlapping rate enclosures: the rates are
    equal iff the gcd of the two pole polynomials has a root in the overlap."""
    g = poly_gcd(squarefree_part(_pole_poly(a)), squarefree_part(_pole_poly(b)))
    if g.degree < 1:
        return False
    lo = max(ra.r.lo, rb.r.lo)
    hi = min(ra.r.hi, rb.r.hi)
    if lo >= hi:
        return False
    return count_roots(sturm_chain(g), lo, hi) >= 1


def _pole_poly(g: CoxeterGraph):
    from .growth import growth_series

    return growth_series(g).f.den


def minimal_rate(gs, eps=DEFAULT_EPS):
    """The graph with certifiably smallest growth rate, with its enclosure.

    Refines enclosures adaptively until the minimum separates; exact ties are
    detected via a polynomial gcd and broken by canonical form order.
    """
    gs = list(gs)
    if not gs:
        raise CompareError("minimal_rate over an empty collection")
    eps = Fraction(eps)
    rates = {}
    for g in gs:
        r = growth_rate(g, eps)
        if r.is_one:
            raise CompareError(f"{g} has growth rate 1; minimal_rate needs rate > 1")
        rates[g] = r
    for _ in range(8):
        best = min(gs, key=lambda g: rates[g].tau.lo)
        clashes = [g for g in gs if g is not best
                   and rates[g].tau.lo <= rates[best].tau.hi]
        if not clashes:
            return best, rates[best].tau
        eps /= 10**6
        for g in [best] + clashes:
            rates[g] = growth_rate(g, eps)
    # enclosures refuse to separate: the remaining clashes are exact ties
    best = min(gs, key=lambda g: rates[g].tau.lo)
    tied = [best]
    for g in gs:
        if g is best:
            continue
        if rates[g].tau.lo <= rates[best].tau.hi:
            if _rates_equal(best, g, rates[best], rates[g]):
                tied.append(g)
            else:
                raise CompareError("rate enclosures neither separate nor coincide")
    winner = min(tied, key=sort_key)
    return winner, rates[winner].tau
