"""Growth series and growth rates of Coxeter systems.

The reciprocal growth series 1/f_S(1/t) is the alternating sum of reciprocal
Poincare polynomials of the finite special subgroups; each Poincare polynomial
is a product of brackets [m_i + 1] over the exponents of the subgroup.  The
growth rate is the reciprocal of the smallest pole of f_S in (0, 1), isolated
with certified Sturm intervals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classify import component_types, exponents
from .graph import CoxeterGraph, induced_subgraph
from .poly import (
    IntPoly,
    RatFunc,
    RootInterval,
    bracket,
    bracket_cyclotomic_indices,
    bracket_product,
    count_roots,
    cyclotomic,
    div_exact,
    divides,
    smallest_positive_root,
    sturm_chain,
)


class GrowthError(ValueError):
    pass


DEFAULT_EPS = Fraction(1, 10**12)


def _spherical_bracket_key(g: CoxeterGraph) -> tuple[int, ...] | None:
    """Sorted bracket indices (exponents + 1) if g is spherical, else None."""
    if g.n == 0:
        return ()
    types = component_types(g)
    if not all(t.is_spherical for t in types):
        return None
    return tuple(sorted(m + 1 for t in types for m in exponents(t)))


@dataclass(frozen=True)
class FiniteSubsetRecord:
    """A node subset generating a finite special subgroup."""

    subset: frozenset[int]
    type_multiset: tuple[str, ...]
    bracket_key: tuple[int, ...]

    @property
    def poincare(self) -> IntPoly:
        return bracket_product(self.bracket_key)


def finite_subsets(g: CoxeterGraph) -> list[FiniteSubsetRecord]:
    """Every subset of nodes (including the empty one) spanning a spherical
    subgraph, ordered by subset bitmask."""
    out = []
    nodes = list(g.nodes)
    inf_pairs = {(i, j) for i, j, m in g.edges if m == float("inf")}
    for mask in range(1 << g.n):
        members = [v for b, v in enumerate(nodes) if mask >> b & 1]
        mset = set(members)
        if any(i in mset and j in mset for i, j in inf_pairs):
            continue
        sub = induced_subgraph(g, members)
        if sub.n == 0:
            out.append(FiniteSubsetRecord(frozenset(), (), ()))
            continue
        types = component_types(sub)
        if not all(t.is_spherical for t in types):
            continue
        key = tuple(sorted(m + 1 for t in types for m in exponents(t)))
        out.append(FiniteSubsetRecord(
            frozenset(members), tuple(sorted(str(t) for t in types)), key))
    return out


def steinberg_terms(g: CoxeterGraph) -> dict[tuple[int, ...], int]:
    """Signed term counts of the alternating sum, keyed by the bracket index
    multiset of the Poincare denominator; the sign is (-1)^|subset|."""
    terms: Counter = Counter()
    for rec in finite_subsets(g):
        terms[rec.bracket_key] += -1 if len(rec.subset) % 2 else 1
    return {k: v for k, v in terms.items() if v}


def steinberg(g: CoxeterGraph) -> RatFunc:
    """The reduced rational function sum over finite subsets of
    (-1)^|T| / poincare_T(t); equals 1/f_S(1/t)."""
    terms = steinberg_terms(g)
    maxmult: Counter = Counter()
    for key in terms:
        for k, m in Counter(key).items():
            maxmult[k] = max(maxmult[k], m)
    num = IntPoly()
    for key, coef in terms.items():
        part = IntPoly([coef])
        have = Counter(key)
        for k, m in maxmult.items():
            part = part * bracket(k) ** (m - have.get(k, 0))
        num = num + part
    # the common denominator splits into irreducible cyclotomic factors, so
    # exact trial division by each factor yields the fully reduced form
    phi_mult: Counter = Counter()
    for k, m in maxmult.items():
        for d in bracket_cyclotomic_indices(k):
            phi_mult[d] += m
    den = IntPoly([1])
    for d in sorted(phi_mult):
        phi = cyclotomic(d)
        for _ in range(phi_mult[d]):
            if divides(phi, num):
                num = div_exact(num, phi)
            else:
                den = den * phi
    return RatFunc(num, den, _reduced=True)


@dataclass(frozen=True)
class GrowthSeries:
    """Growth series f_S(t) together with its reciprocal-variable form."""

    f: RatFunc
    steinberg_form: RatFunc  # 1/f_S(1/t)
    is_finite: bool


@lru_cache(maxsize=None)
def growth_series(g: CoxeterGraph) -> GrowthSeries:
    """f_S(t): the Poincare polynomial for spherical graphs, otherwise the
    rational function recovered from the alternating sum by t -> 1/t."""
    st = steinberg(g)
    key = _spherical_bracket_key(g)
    if key is not None:
        f = RatFunc(bracket_product(key))
    else:
        f = RatFunc(st.den, st.num).substitute_reciprocal()
    return GrowthSeries(f, st, key is not None)


def series_coeffs(g: CoxeterGraph, K: int) -> list[int]:
    """Word counts a_0..a_K by exact power-series division of f_S."""
    if K < 0:
        raise GrowthError("K must be >= 0")
    f = growth_series(g).f
    n, d = f.num.c, f.den.c
    coeffs: list[int] = []
    for k in range(K + 1):
        s = Fraction(n[k] if k < len(n) else 0)
        for i in range(1, min(k, len(d) - 1) + 1):
            s -= d[i] * coeffs[k - i]
        a = s / d[0]
        if a.denominator != 1 or a < 0:
            raise GrowthError(f"series coefficient a_{k} = {a} is not a natural number")
        coeffs.append(int(a))
    return coeffs


@dataclass(frozen=True)
class GrowthRate:
    """Certified growth rate: tau = 1/r, or the dedicated rate-one outcome
    (tau is None) for groups whose series has no pole inside (0, 1)."""

    tau: RootInterval | None
    r: RootInterval | None

    @property
    def is_one(self) -> bool:
        return self.tau is None

    def __str__(self):
        return "1 (exactly)" if self.is_one else str(self.tau)


RATE_ONE = GrowthRate(None, None)


@lru_cache(maxsize=None)
def growth_rate(g: CoxeterGraph, eps=DEFAULT_EPS) -> GrowthRate:
    """Isolating interval for the growth rate of an infinite group.

    eps bounds the width of the interval for the pole r; the tau interval is
    its exact reciprocal.  Raises on spherical input; affine (and any other
    subexponential) input yields RATE_ONE.
    """
    gs = growth_series(g)
    if gs.is_finite:
        raise GrowthError("finite group: growth series is a polynomial, no rate")
    p = gs.f.den
    t_minus_1 = IntPoly([-1, 1])
    while p.sign_at(1) == 0:
        p = div_exact(p, t_minus_1)
    if p.degree < 1 or count_roots(sturm_chain(p), 0, 1) == 0:
        return RATE_ONE
    r = smallest_positive_root(p, eps)
    return GrowthRate(r.reciprocal(), r)
