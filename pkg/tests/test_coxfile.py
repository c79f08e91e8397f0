"""Parsing and serialization of the .cox graph text format."""

import pytest

from coxgrowth import catalog
from coxgrowth.coxfile import CoxParseError, parse_cox, serialize_cox
from coxgrowth.graph import INF


class TestParse:
    def test_basic_graph(self):
        g = parse_cox("vertices 3\nedge 1 2 3\nedge 2 3 inf\n")
        assert g.n == 3
        assert g.weight(1, 2) == 3
        assert g.weight(2, 3) == INF
        assert g.weight(1, 3) == 2

    def test_comments_and_blank_lines(self):
        text = """
        # a triangle group
        vertices 3   # node count

        edge 1 2 4
        edge 1 3 3  # weighted
        """
        g = parse_cox(text)
        assert g.weight(1, 2) == 4 and g.weight(1, 3) == 3

    def test_edge_order_is_irrelevant(self):
        a = parse_cox("vertices 3\nedge 2 3 5\nedge 1 2 3\n")
        b = parse_cox("vertices 3\nedge 1 2 3\nedge 3 2 5\n")
        assert a == b

    @pytest.mark.parametrize("text,fragment", [
        ("edge 1 2 3\n", "vertices"),
        ("vertices x\n", "bad vertex count"),
        ("vertices 0\n", ">= 1"),
        ("vertices 2\nedge 1 2\n", "edge <i> <j> <m>"),
        ("vertices 2\nedge 1 2 2\n", ">= 3"),
        ("vertices 2\nedge 1 1 3\n", "self-edge"),
        ("vertices 2\nedge 1 2 3\nedge 2 1 4\n", "duplicate"),
        ("vertices 2\nedge 1 3 3\n", "out of range"),
        ("", "missing"),
    ])
    def test_errors_carry_line_numbers(self, text, fragment):
        with pytest.raises(CoxParseError) as exc:
            parse_cox(text)
        assert fragment in str(exc.value)
        assert exc.value.lineno >= 1


class TestRoundTrip:
    def test_all_named_graphs_round_trip(self):
        for name, g in catalog.NAMED.items():
            assert parse_cox(serialize_cox(g)) == g, name

    def test_serialized_form_is_stable(self):
        text = serialize_cox(catalog.W0)
        assert text.splitlines()[0] == "vertices 4"
        assert "edge 1 2 inf" in text
