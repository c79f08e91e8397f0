"""Dominance embeddings, one-node extensions and minimal-rate selection."""

import pytest

from coxgrowth import catalog
from coxgrowth.catalog import affine_graph
from coxgrowth.compare import (
    CompareError,
    check_embedding,
    dominates,
    extensions,
    minimal_rate,
)
from coxgrowth.graph import INF, CoxeterGraph, from_linear_symbol, is_isomorphic, permute, validate
from coxgrowth.growth import growth_rate


class TestDominates:
    def test_identity_embedding(self):
        g = from_linear_symbol([3, 4])
        emb = dominates(g, g)
        assert emb is not None and check_embedding(g, g, emb)

    def test_subgraph_embeds(self):
        small = from_linear_symbol([3])
        big = from_linear_symbol([3, 4, 5])
        emb = dominates(small, big)
        assert emb is not None and check_embedding(small, big, emb)

    def test_weight_increase_is_allowed(self):
        light = from_linear_symbol([3, 3])
        heavy = from_linear_symbol([4, INF])
        emb = dominates(light, heavy)
        assert emb is not None and check_embedding(light, heavy, emb)
        assert dominates(heavy, light) is None

    def test_size_obstruction(self):
        assert dominates(from_linear_symbol([3, 3]), from_linear_symbol([3])) is None

    def test_needs_matching_pattern(self):
        # a triangle of weight-3 edges cannot embed into any tree
        triangle = validate({(1, 2): 3, (1, 3): 3, (2, 3): 3}, 3)
        assert dominates(triangle, from_linear_symbol([3, 3, 3, 3])) is None

    def test_check_embedding_rejects_garbage(self):
        from coxgrowth.compare import Embedding
        g = from_linear_symbol([3])
        assert not check_embedding(g, g, Embedding((1, 1)))

    def test_reference_groups_dominate_each_other_correctly(self):
        # the all-infinite-edge order-4 graphs from the exhaustive check
        for w in (catalog.W0, catalog.W1, catalog.W2):
            assert dominates(w, w) is not None


class TestExtensions:
    def test_unique_extension_of_triangle_cycle(self):
        exts = extensions(affine_graph("A~", 2))
        assert len(exts) == 1
        assert exts[0].n == 4

    def test_path_extensions_count_symmetry(self):
        # [3,3] has a mirror symmetry: end node and middle node only
        exts = extensions(from_linear_symbol([3, 3]))
        assert len(exts) == 2

    def test_extension_weight_parameter(self):
        exts = extensions(from_linear_symbol([3]), weight=INF)
        assert all(g.has_infinite_edge for g in exts)

    def test_extensions_are_deduplicated_up_to_isomorphism(self):
        exts = extensions(catalog.GAMMA[3])
        for i, a in enumerate(exts):
            for b in exts[i + 1:]:
                assert not is_isomorphic(a, b)

    def test_empty_graph_rejected(self):
        from coxgrowth.graph import GraphError
        with pytest.raises(GraphError):
            extensions(CoxeterGraph(0, ()))


class TestMinimalRate:
    def test_picks_certified_minimum(self):
        gs = [catalog.GAMMA[3], catalog.GAMMA[2], catalog.W0]
        winner, tau = minimal_rate(gs)
        assert winner == catalog.GAMMA[3]
        assert tau.hi < growth_rate(catalog.GAMMA[2]).tau.lo

    def test_exact_tie_between_relabelings(self):
        g = catalog.GAMMA[4]
        h = permute(g, {1: 5, 2: 4, 3: 3, 4: 2, 5: 1})
        winner, tau = minimal_rate([g, h])
        assert is_isomorphic(winner, g)
        assert tau.lo < tau.hi

    def test_rejects_empty_and_rate_one(self):
        with pytest.raises(CompareError):
            minimal_rate([])
        with pytest.raises(CompareError):
            minimal_rate([affine_graph("A~", 2)])

    def test_monotone_along_known_chain(self):
        # growth rates of the minimal graphs increase from dimension 9 to 4
        t9 = growth_rate(catalog.GAMMA[9]).tau
        t4 = growth_rate(catalog.GAMMA[4]).tau
        assert t9.strictly_below(t4)
