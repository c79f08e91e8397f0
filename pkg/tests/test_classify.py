"""Recognition of irreducible spherical and affine types, exponents, orders."""

import pytest

from coxgrowth.catalog import (
    affine_connected_of_order,
    affine_graph,
    spherical_graph,
    spherical_irreducibles,
)
from coxgrowth.classify import (
    ClassifyError,
    classify_irreducible,
    component_types,
    exponents,
    group_order_from_exponents,
    is_affine,
    is_spherical,
)
from coxgrowth.graph import INF, CoxeterGraph, disjoint_union, from_linear_symbol, permute, y_shape


class TestRecognition:
    def test_every_catalog_builder_roundtrips(self):
        for rank in range(1, 10):
            for name, g in spherical_irreducibles(rank, max_m=12):
                assert str(classify_irreducible(g)) == name
        for order in range(2, 11):
            for name, g in affine_connected_of_order(order):
                assert str(classify_irreducible(g)) == name

    def test_recognition_is_label_invariant(self):
        g = affine_graph("B~", 4)
        h = permute(g, {1: 5, 2: 4, 3: 3, 4: 2, 5: 1})
        assert classify_irreducible(h) == classify_irreducible(g)

    @pytest.mark.parametrize("symbol", [
        [7],            # I2(7): spherical
        [5, 3],         # H3
        [5, 3, 3],      # H4
        [3, 4, 3],      # F4
    ])
    def test_spherical_paths(self, symbol):
        assert classify_irreducible(from_linear_symbol(symbol)).is_spherical

    @pytest.mark.parametrize("symbol", [
        [6, 3],          # G2~
        [4, 4],          # C~2
        [3, 4, 3, 3],    # F4~
        [INF],           # A~1
    ])
    def test_affine_paths(self, symbol):
        assert classify_irreducible(from_linear_symbol(symbol)).is_affine

    @pytest.mark.parametrize("g", [
        from_linear_symbol([6, 3, 3]),     # hyperbolic path
        from_linear_symbol([5, 5]),        # hyperbolic triangle symbol
        from_linear_symbol([INF, 3]),      # infinite edge, order 3
        y_shape(4, 2, 1),                  # hyperbolic fork
        y_shape(INF, 1, 1),                # infinite edge in a fork
    ])
    def test_indefinite(self, g):
        assert classify_irreducible(g).is_indefinite

    def test_requires_connected_nonempty(self):
        with pytest.raises(ClassifyError):
            classify_irreducible(CoxeterGraph(2, ()))
        with pytest.raises(ClassifyError):
            classify_irreducible(CoxeterGraph(0, ()))

    def test_component_types_and_predicates(self):
        g = disjoint_union(from_linear_symbol([4]), from_linear_symbol([INF]))
        names = sorted(str(t) for t in component_types(g))
        assert names == ["A~1", "B2"]
        assert not is_spherical(g) and not is_affine(g)
        assert is_spherical(CoxeterGraph(0, ()))
        assert is_spherical(CoxeterGraph(3, ()))
        assert is_affine(disjoint_union(from_linear_symbol([INF]),
                                        from_linear_symbol([6, 3])))


class TestExponents:
    @pytest.mark.parametrize("family,rank,expected", [
        ("A", 3, (1, 2, 3)),
        ("B", 3, (1, 3, 5)),
        ("D", 4, (1, 3, 3, 5)),
        ("H3", 3, (1, 5, 9)),
        ("F4", 4, (1, 5, 7, 11)),
        ("E8", 8, (1, 7, 11, 13, 17, 19, 23, 29)),
    ])
    def test_exponent_tables(self, family, rank, expected):
        t = classify_irreducible(spherical_graph(family, rank))
        assert exponents(t) == expected

    def test_i2_exponents(self):
        t = classify_irreducible(spherical_graph("I2", m=7))
        assert exponents(t) == (1, 6)

    @pytest.mark.parametrize("family,rank,order", [
        ("A", 3, 24),
        ("B", 3, 48),
        ("H3", 3, 120),
        ("D", 4, 192),
        ("F4", 4, 1152),
    ])
    def test_group_orders(self, family, rank, order):
        t = classify_irreducible(spherical_graph(family, rank))
        assert group_order_from_exponents(t) == order

    def test_exponents_reject_non_spherical(self):
        t = classify_irreducible(affine_graph("A~", 2))
        with pytest.raises(ClassifyError):
            exponents(t)

    def test_sum_of_exponents_counts_reflections(self):
        # number of positive roots = sum of exponents; A_n has n(n+1)/2
        for n in range(1, 7):
            t = classify_irreducible(spherical_graph("A", n))
            assert sum(exponents(t)) == n * (n + 1) // 2
