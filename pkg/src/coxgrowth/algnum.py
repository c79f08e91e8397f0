"""Exact arithmetic in the multiquadratic field Q(sqrt2, sqrt3, sqrt5).

Elements are rational coordinate vectors over the basis
{1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10, sqrt15, sqrt30}, indexed by the
3-bit mask of primes (2, 3, 5) under the radical.  Equality is coordinatewise;
signs are certified by interval refinement (exact zero test first, so the
refinement always terminates).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .graph import INF

_PRIMES = (2, 3, 5)
_DIM = 8

_RADICAND = tuple(
    (2 if k & 1 else 1) * (3 if k & 2 else 1) * (5 if k & 4 else 1) for k in range(_DIM)
)

# (i, j) -> (integer factor, result basis index): sqrt(m_i) * sqrt(m_j) = f * sqrt(m_k)
_MUL: list[list[tuple[int, int]]] = [
    [
        (
            (2 if (i & j) & 1 else 1) * (3 if (i & j) & 2 else 1) * (5 if (i & j) & 4 else 1),
            i ^ j,
        )
        for j in range(_DIM)
    ]
    for i in range(_DIM)
]


@lru_cache(maxsize=None)
def _sqrt_enclosure(m: int, prec: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(m) <= hi with hi - lo = 2^-prec."""
    scale = 1 << prec
    lo = isqrt(m * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


class AlgNum:
    """Element of Q(sqrt2, sqrt3, sqrt5)."""

    __slots__ = ("c",)

    def __init__(self, coords):
        c = tuple(Fraction(x) for x in coords)
        if len(c) != _DIM:
            raise ValueError(f"need {_DIM} coordinates, got {len(c)}")
        self.c = c

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_rational(q) -> "AlgNum":
        return AlgNum((Fraction(q),) + (Fraction(0),) * (_DIM - 1))

    @staticmethod
    def sqrt_of(m: int) -> "AlgNum":
        """sqrt(m) for squarefree m whose prime factors lie in {2, 3, 5}."""
        try:
            k = _RADICAND.index(m)
        except ValueError:
            raise ValueError(f"sqrt({m}) is not in the field") from None
        coords = [Fraction(0)] * _DIM
        coords[k] = Fraction(1)
        return AlgNum(coords)

    # -- basics -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgNum.from_rational(other)
        return isinstance(other, AlgNum) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        parts = [f"{c}*sqrt({_RADICAND[k]})" if k else str(c)
                 for k, c in enumerate(self.c) if c]
        return "AlgNum(" + (" + ".join(parts) or "0") + ")"

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    @property
    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgNum.from_rational(other)
        return AlgNum(tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return AlgNum(tuple(-a for a in self.c))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgNum.from_rational(other)
        return AlgNum(tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgNum(tuple(a * other for a in self.c))
        out = [Fraction(0)] * _DIM
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(other.c):
                if not b:
                    continue
                f, k = _MUL[i][j]
                out[k] += a * b * f
        return AlgNum(out)

    __rmul__ = __mul__

    def inverse(self) -> "AlgNum":
        """Field inverse via the 8x8 rational multiplication matrix."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        # solve M x = e0 where M[k][j] = coefficient of basis k in self * basis_j
        m = [[Fraction(0)] * _DIM for _ in range(_DIM)]
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j in range(_DIM):
                f, k = _MUL[i][j]
                m[k][j] += a * f
        rhs = [Fraction(1)] + [Fraction(0)] * (_DIM - 1)
        # Gaussian elimination with partial (first nonzero) pivoting
        for col in range(_DIM):
            piv = next(r for r in range(col, _DIM) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv = 1 / m[col][col]
            m[col] = [x * inv for x in m[col]]
            rhs[col] *= inv
            for r in range(_DIM):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                    rhs[r] -= f * rhs[col]
        return AlgNum(rhs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgNum(tuple(a / other for a in self.c))
        return self * other.inverse()

    # -- certified sign -----------------------------------------------------------

    def sign(self) -> int:
        """Certified sign: exact zero test, then interval refinement."""
        if self.is_zero:
            return 0
        prec = 16
        while True:
            lo = hi = Fraction(0)
            for k, a in enumerate(self.c):
                if not a:
                    continue
                sl, sh = _sqrt_enclosure(_RADICAND[k], prec)
                if a > 0:
                    lo += a * sl
                    hi += a * sh
                else:
                    lo += a * sh
                    hi += a * sl
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2
            if prec > 1 << 20:  # unreachable: a nonzero element is bounded away from 0
                raise RuntimeError("sign refinement failed to converge")

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgNum.from_rational(other)
        return (self - other).sign() < 0

    def __float__(self):
        lo, hi = self.enclosure(64)
        return float((lo + hi) / 2)

    def enclosure(self, prec: int = 64) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        for k, a in enumerate(self.c):
            if not a:
                continue
            sl, sh = _sqrt_enclosure(_RADICAND[k], prec)
            if a > 0:
                lo += a * sl
                hi += a * sh
            else:
                lo += a * sh
                hi += a * sl
        return lo, hi


ZERO = AlgNum.from_rational(0)
ONE = AlgNum.from_rational(1)


@lru_cache(maxsize=None)
def minus_cos_pi_over(m) -> AlgNum:
    """-cos(pi/m) for m in {2, 3, 4, 5, 6, INF}: the Gram matrix off-diagonal entry."""
    if m == 2:
        return ZERO
    if m == 3:
        return AlgNum.from_rational(Fraction(-1, 2))
    if m == 4:
        return AlgNum.sqrt_of(2) * Fraction(-1, 2)
    if m == 5:
        return (AlgNum.from_rational(1) + AlgNum.sqrt_of(5)) * Fraction(-1, 4)
    if m == 6:
        return AlgNum.sqrt_of(3) * Fraction(-1, 2)
    if m == INF:
        return AlgNum.from_rational(-1)
    raise ValueError(f"cos(pi/{m}) is outside Q(sqrt2, sqrt3, sqrt5)")


@lru_cache(maxsize=None)
def two_cos_pi_over(m) -> AlgNum:
    """2*cos(pi/m): the reflection-matrix coefficient (2 for m = INF)."""
    return minus_cos_pi_over(m) * (-2)
