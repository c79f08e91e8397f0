"""Exhaustive generation of finite-covolume non-compact simplex graphs."""

import pytest

from coxgrowth import catalog
from coxgrowth.classify import component_types
from coxgrowth.corpus import base_graphs, simplex_corpus
from coxgrowth.graph import connected_components, is_isomorphic
from coxgrowth.simplex import VolumeClass, simplex_class

# node counts of the non-compact finite-volume simplex census; dimension 2 is
# restricted to edge weights in {3,4,5,6,inf}
KNOWN_SIZES = {2: 20, 3: 23, 4: 9}


class TestBases:
    def test_base_graphs_cover_admissible_links(self):
        bases = base_graphs(3)
        kinds = {tuple(sorted(str(t) for t in component_types(b))) for b in bases}
        assert ("A1", "A1", "A1") in kinds          # all spherical
        assert ("A3",) in kinds                     # irreducible spherical
        assert ("A~2",) in kinds                    # connected affine
        assert ("A1", "A~1") in kinds               # mixed affine + spherical

    def test_no_two_affine_components_in_any_base(self):
        for b in base_graphs(4):
            affines = sum(t.is_affine for t in component_types(b))
            assert affines <= 1


class TestCorpus:
    @pytest.mark.parametrize("n", sorted(KNOWN_SIZES))
    def test_census_sizes(self, n):
        assert len(simplex_corpus(n)) == KNOWN_SIZES[n]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_contains_the_minimal_graph(self, n):
        assert any(is_isomorphic(g, catalog.GAMMA[n]) for g in simplex_corpus(n))

    def test_every_member_is_finite_volume_noncompact(self):
        for g in simplex_corpus(3):
            assert len(connected_components(g)) == 1
            assert simplex_class(g).volume_class is VolumeClass.FINITE_VOLUME_NONCOMPACT

    def test_members_are_pairwise_non_isomorphic(self):
        corpus = simplex_corpus(4)
        for i, a in enumerate(corpus):
            for b in corpus[i + 1:]:
                assert not is_isomorphic(a, b)

    def test_deterministic_order(self):
        assert simplex_corpus(3) == simplex_corpus(3)

    def test_small_dimension_rejected(self):
        with pytest.raises(ValueError):
            simplex_corpus(1)

    def test_no_infinite_edges_above_dimension_two(self):
        for n in (3, 4):
            assert not any(g.has_infinite_edge for g in simplex_corpus(n))
