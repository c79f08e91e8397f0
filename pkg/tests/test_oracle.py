"""Brute-force matrix oracle: reflection representation and word-length BFS."""

import pytest

from coxgrowth import catalog
from coxgrowth.catalog import spherical_graph
from coxgrowth.graph import from_linear_symbol
from coxgrowth.oracle import (
    CapExceededError,
    bfs_counts,
    group_order,
    identity_matrix,
    mat_mul,
    matrix_order,
    tits_representation,
)


class TestRepresentation:
    def test_generators_are_involutions(self):
        g = catalog.GAMMA[3]
        ident = identity_matrix(g.n)
        for s in tits_representation(g):
            assert mat_mul(s, s) == ident

    def test_pairwise_products_have_coxeter_orders(self):
        g = from_linear_symbol([3, 4])
        s1, s2, s3 = tits_representation(g)
        assert matrix_order(mat_mul(s1, s2)) == 3
        assert matrix_order(mat_mul(s2, s3)) == 4
        assert matrix_order(mat_mul(s1, s3)) == 2

    def test_infinite_order_product(self):
        g = from_linear_symbol([float("inf")])
        s1, s2 = tits_representation(g)
        assert matrix_order(mat_mul(s1, s2), limit=40) is None

    def test_unsupported_weight(self):
        from coxgrowth.simplex import SimplexError
        with pytest.raises(SimplexError):
            tits_representation(from_linear_symbol([7]))


class TestBfs:
    def test_dihedral_counts(self):
        # I2(4): 1, 2, 2, 2, 1 then zeros
        assert bfs_counts(from_linear_symbol([4]), 6) == [1, 2, 2, 2, 1, 0, 0]

    def test_finite_group_orders(self):
        assert group_order(spherical_graph("A", 3)) == 24
        assert group_order(spherical_graph("B", 3)) == 48
        assert group_order(spherical_graph("H3")) == 120

    def test_cap_exceeded_carries_partial_counts(self):
        with pytest.raises(CapExceededError) as exc:
            group_order(catalog.GAMMA[2], cap=50)
        assert exc.value.visited > 50
        assert exc.value.counts[0] == 1

    def test_counts_match_series_on_infinite_group(self):
        from coxgrowth.growth import series_coeffs
        g = catalog.GAMMA[2]
        assert bfs_counts(g, 6) == series_coeffs(g, 6)

    def test_negative_depth_rejected(self):
        with pytest.raises(ValueError):
            bfs_counts(catalog.GAMMA[2], -1)
