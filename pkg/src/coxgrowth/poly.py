"""Exact integer polynomials, reduced rational functions and certified root isolation.

Polynomials are dense lists of arbitrary-precision integers in ascending
degree order.  Rational functions keep an integer numerator/denominator pair
reduced over Q.  Real roots are isolated with Sturm sequences on exact
rational endpoints, so every returned interval is a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


class PolyError(ValueError):
    pass


class NoPositiveRootError(PolyError):
    """The polynomial has no positive real root."""


def _normalize(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Dense integer polynomial; the zero polynomial has an empty coefficient list."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = _normalize(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise PolyError(f"integer coefficients required, got {x!r}")
        self.c = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(k: int) -> "IntPoly":
        return IntPoly([k])

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly([0, 1])

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.c

    @property
    def lead(self) -> int:
        if not self.c:
            return 0
        return self.c[-1]

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if not self.c:
            return "IntPoly(0)"
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append(f"{a}*t^{i}" if i else str(a))
        return "IntPoly(" + " + ".join(terms) + ")"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    def __neg__(self):
        return IntPoly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * x for x in self.c])
        a, b = self.c, other.c
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative power")
        out = IntPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "IntPoly":
        """Multiply by t^k."""
        if not self.c:
            return self
        return IntPoly((0,) * k + self.c)

    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * a for i, a in enumerate(self.c)][1:])

    # -- normal forms -------------------------------------------------------

    @property
    def content(self) -> int:
        g = 0
        for a in self.c:
            g = gcd(g, a)
        return g

    def primitive(self) -> "IntPoly":
        """Divide by the (positive) content, preserving sign."""
        g = self.content
        if g in (0, 1):
            return self
        return IntPoly([a // g for a in self.c])

    def monic_positive(self) -> "IntPoly":
        return self if self.lead >= 0 else -self

    @property
    def is_palindromic(self) -> bool:
        return bool(self.c) and self.c == tuple(reversed(self.c))

    def reversed_coeffs(self, degree: int | None = None) -> "IntPoly":
        """t^d * p(1/t) with explicit degree bookkeeping (d defaults to deg p)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise PolyError("reversal degree below actual degree")
        padded = list(self.c) + [0] * (d + 1 - len(self.c))
        return IntPoly(reversed(padded))

    def strip_root_at_zero(self) -> tuple["IntPoly", int]:
        """Return (p / t^k, k) where k is the multiplicity of the root 0."""
        k = 0
        c = self.c
        while k < len(c) and c[k] == 0:
            k += 1
        return IntPoly(c[k:]), k

    # -- exact sign evaluation ---------------------------------------------

    def sign_at(self, x) -> int:
        """Sign of p(x) for rational x, computed in integer arithmetic."""
        x = Fraction(x)
        a, b = x.numerator, x.denominator
        if not self.c:
            return 0
        acc = self.c[-1]
        bp = 1
        for coef in reversed(self.c[:-1]):
            bp *= b
            acc = acc * a + coef * bp
        return (acc > 0) - (acc < 0)


# ---------------------------------------------------------------------------
# division and gcd
# ---------------------------------------------------------------------------


def divmod_q(a: IntPoly, b: IntPoly):
    """Quotient/remainder over Q, as lists of Fractions."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in a.c]
    q = [Fraction(0)] * max(len(a.c) - len(b.c) + 1, 0)
    db, lb = b.degree, Fraction(b.lead)
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        f = r[-1] / lb
        q[k] = f
        for i, x in enumerate(b.c):
            r[k + i] -= f * x
        r.pop()
    return q, r


def div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact division a / b over Z; raises if not exact."""
    q, r = divmod_q(a, b)
    if any(r):
        raise PolyError("division is not exact")
    if any(f.denominator != 1 for f in q):
        raise PolyError("quotient is not integral")
    return IntPoly([f.numerator for f in q])


def divides(b: IntPoly, a: IntPoly) -> bool:
    _, r = divmod_q(a, b)
    return not any(r)


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Positive-multiple pseudo-remainder: a positive constant times (a mod b)."""
    d = a.degree - b.degree + 1
    lb = b.lead
    r = list(a.c)
    bc = b.c
    steps = 0
    while len(r) - 1 >= b.degree and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < b.degree:
            break
        k = len(r) - 1 - b.degree
        top = r[-1]
        r = [lb * x for x in r]
        for i, y in enumerate(bc):
            r[k + i] -= top * y
        r.pop()
        steps += 1
    rem = IntPoly(r)
    # multiplier used is lb**steps <= lb**d; flip sign if that multiplier is negative
    if lb < 0 and steps % 2 == 1:
        rem = -rem
    return rem


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z (positive leading coefficient), primitive-PRS based."""
    a = a.primitive().monic_positive()
    b = b.primitive().monic_positive()
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b).primitive()
        a, b = b, r
    return a.monic_positive()


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.is_zero:
        raise PolyError("squarefree part of zero")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.primitive()
    q, _ = divmod_q(p, g)
    den_lcm = 1
    for f in q:
        den_lcm = den_lcm * f.denominator // gcd(den_lcm, f.denominator)
    return IntPoly([int(f * den_lcm) for f in q]).primitive()


# ---------------------------------------------------------------------------
# brackets and cyclotomic factors
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def bracket(k: int) -> IntPoly:
    """1 + t + ... + t^(k-1)."""
    if k < 1:
        raise PolyError(f"bracket index must be >= 1, got {k}")
    return IntPoly([1] * k)


def bracket_product(ks) -> IntPoly:
    out = IntPoly([1])
    for k in ks:
        out = out * bracket(k)
    return out


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial (irreducible over Q)."""
    if n < 1:
        raise PolyError("cyclotomic index must be >= 1")
    num = IntPoly([-1] + [0] * (n - 1) + [1])  # t^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = div_exact(num, cyclotomic(d))
    return num


def bracket_cyclotomic_indices(k: int) -> tuple[int, ...]:
    """[k] factors as the product of cyclotomics Phi_d over divisors d > 1 of k."""
    return tuple(d for d in range(2, k + 1) if k % d == 0)


# ---------------------------------------------------------------------------
# Sturm sequences and root isolation
# ---------------------------------------------------------------------------


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of the squarefree part of p, with primitive integer entries."""
    p = squarefree_part(p)
    chain = [p, p.derivative().primitive()]
    while not chain[-1].is_zero:
        r = _pseudo_rem(chain[-2], chain[-1])
        chain.append((-r).primitive())
    chain.pop()
    return chain


def _variations(chain: list[IntPoly], x: Fraction) -> int:
    signs = [q.sign_at(x) for q in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: list[IntPoly], a, b) -> int:
    """Number of distinct real roots in (a, b]; requires p(a) != 0."""
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        return 0
    return _variations(chain, a) - _variations(chain, b)


@dataclass(frozen=True)
class RootInterval:
    """Certified enclosure (lo, hi] of a single real root."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def reciprocal(self) -> "RootInterval":
        """Exact enclosure of the inverse of the enclosed (positive) root."""
        if self.lo <= 0:
            raise PolyError("reciprocal interval requires a positive enclosure")
        return RootInterval(1 / self.hi, 1 / self.lo)

    def strictly_below(self, other: "RootInterval") -> bool:
        return self.hi < other.lo

    def __contains__(self, x) -> bool:
        return self.lo < Fraction(x) <= self.hi

    def __str__(self):
        mid = self.midpoint
        return f"{float(mid):.12g} (width {float(self.width):.3g})"


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: every real root lies in [-B, B]."""
    if p.degree < 0:
        raise PolyError("root bound of zero polynomial")
    lead = abs(p.lead)
    return 1 + Fraction(max(abs(a) for a in p.c), lead)


def smallest_positive_root(p: IntPoly, eps=Fraction(1, 10**12)) -> RootInterval:
    """Isolating interval of width <= eps for the smallest positive real root.

    Certified by Sturm counts: exactly one root in (lo, hi], none in (0, lo].
    """
    if p.is_zero:
        raise PolyError("zero polynomial")
    eps = Fraction(eps)
    if eps <= 0:
        raise PolyError("eps must be positive")
    q, _ = p.strip_root_at_zero()
    if q.degree < 1:
        raise NoPositiveRootError("constant polynomial has no root")
    chain = sturm_chain(q)
    sf = chain[0]
    bound = root_bound(sf)
    if count_roots(chain, 0, bound) == 0:
        raise NoPositiveRootError("no positive real root")
    lo, hi = Fraction(0), bound
    while hi - lo > eps or count_roots(chain, lo, hi) != 1:
        mid = (lo + hi) / 2
        if count_roots(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return RootInterval(lo, hi)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


def _joint_normalize(num_q, den_q):
    """Clear fractions jointly and divide by the common integer content."""
    den_lcm = 1
    for f in list(num_q) + list(den_q):
        den_lcm = den_lcm * f.denominator // gcd(den_lcm, f.denominator)
    n = [int(f * den_lcm) for f in num_q]
    d = [int(f * den_lcm) for f in den_q]
    g = 0
    for a in n + d:
        g = gcd(g, a)
    if g > 1:
        n = [a // g for a in n]
        d = [a // g for a in d]
    return IntPoly(n), IntPoly(d)


class RatFunc:
    """Reduced ratio of integer polynomials; denominator has positive leading coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly = IntPoly([1]), *, _reduced=False):
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            g = poly_gcd(num, den)
            if g.degree > 0 or g.lead not in (0, 1):
                nq, _ = divmod_q(num, g)
                dq, _ = divmod_q(den, g)
                num, den = _joint_normalize(nq, dq)
            else:
                gc = gcd(num.content, den.content)
                if gc > 1:
                    num = IntPoly([a // gc for a in num.c])
                    den = IntPoly([a // gc for a in den.c])
        if den.lead < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_int(k: int) -> "RatFunc":
        return RatFunc(IntPoly([k]), IntPoly([1]), _reduced=True)

    @staticmethod
    def from_fraction(q) -> "RatFunc":
        q = Fraction(q)
        return RatFunc(IntPoly([q.numerator]), IntPoly([q.denominator]), _reduced=True)

    # -- basics ----------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __call__(self, x):
        x = Fraction(x)
        den = self.den(x)
        if den == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(self.num(x)) / den

    # -- field operations --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        return other / self

    def inverse(self) -> "RatFunc":
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of the zero function")
        return RatFunc(self.den, self.num, _reduced=True)

    def substitute_reciprocal(self) -> "RatFunc":
        """Exact substitution t -> 1/t via coefficient reversal with degree bookkeeping."""
        dn, dd = self.num.degree, self.den.degree
        num = self.num.reversed_coeffs()
        den = self.den.reversed_coeffs()
        if dn >= dd:
            den = den.shift(dn - dd)
        else:
            num = num.shift(dd - dn)
        return RatFunc(num, den)


def ratfunc(num: IntPoly, den: IntPoly) -> RatFunc:
    return RatFunc(num, den)
