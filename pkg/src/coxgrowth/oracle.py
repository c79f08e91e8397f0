"""Independent brute-force oracle: exact reflection matrices and word-length BFS.

The canonical linear representation sends generator s_i to the reflection
e_j -> e_j + 2cos(pi/m_ij) e_i (and e_i -> -e_i).  Matrices over
Q(sqrt2, sqrt3, sqrt5) are hashed exactly, so breadth-first closure of the
generated group counts elements by word length without any numerical risk.
"""

from __future__ import annotations

from .algnum import AlgNum, two_cos_pi_over
from .graph import CoxeterGraph
from .simplex import SimplexError

Matrix = tuple[tuple[AlgNum, ...], ...]


class CapExceededError(RuntimeError):
    """BFS closure hit the element cap; carries the partial counts."""

    def __init__(self, counts, visited):
        super().__init__(f"element cap exceeded after {visited} elements "
                         f"(depth {len(counts) - 1} completed)")
        self.counts = counts
        self.visited = visited


def identity_matrix(n: int) -> Matrix:
    one, zero = AlgNum.from_rational(1), AlgNum.from_rational(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n) if not a[i][k].is_zero),
                  AlgNum.from_rational(0)) for j in range(n))
        for i in range(n)
    )


def tits_representation(g: CoxeterGraph) -> list[Matrix]:
    """One reflection matrix per generator (columns are images of basis vectors)."""
    n = g.n
    gens = []
    for i in g.nodes:
        rows = [[AlgNum.from_rational(1 if r == c else 0) for c in range(n)]
                for r in range(n)]
        for j in g.nodes:
            if j == i:
                rows[i - 1][i - 1] = AlgNum.from_rational(-1)
            else:
                try:
                    c = two_cos_pi_over(g.weight(i, j))
                except ValueError:
                    raise SimplexError(
                        f"weight {g.weight(i, j)} at ({i}, {j}) is outside the exact field"
                    ) from None
                if not c.is_zero:
                    rows[i - 1][j - 1] = c
        gens.append(tuple(tuple(r) for r in rows))
    return gens


def bfs_counts(g: CoxeterGraph, K: int, cap: int = 10**6) -> list[int]:
    """Word counts a_0..a_K from breadth-first closure of the matrix group."""
    if K < 0:
        raise ValueError("K must be >= 0")
    gens = tits_representation(g)
    ident = identity_matrix(g.n)
    seen = {ident}
    frontier = [ident]
    counts = [1]
    while len(counts) <= K and frontier:
        nxt = []
        for m in frontier:
            for s in gens:
                prod = mat_mul(m, s)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise CapExceededError(counts, len(seen))
        counts.append(len(nxt))
        frontier = nxt
    while len(counts) <= K:  # finite group exhausted before depth K
        counts.append(0)
    return counts


def group_order(g: CoxeterGraph, cap: int = 10**6) -> int:
    """Size of the full BFS closure; raises CapExceededError on infinite groups."""
    gens = tits_representation(g)
    ident = identity_matrix(g.n)
    seen = {ident}
    frontier = [ident]
    counts = [1]
    while frontier:
        nxt = []
        for m in frontier:
            for s in gens:
                prod = mat_mul(m, s)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise CapExceededError(counts, len(seen))
        if nxt:
            counts.append(len(nxt))
        frontier = nxt
    return len(seen)


def matrix_order(m: Matrix, limit: int = 60) -> int | None:
    """Multiplicative order of a matrix, or None if it exceeds the limit."""
    ident = identity_matrix(len(m))
    acc = m
    for k in range(1, limit + 1):
        if acc == ident:
            return k
        acc = mat_mul(acc, m)
    return None
