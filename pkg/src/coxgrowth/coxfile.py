"""Text format for Coxeter graphs.

Grammar: UTF-8 lines; ``#`` starts a comment; the first significant line is
``vertices <N>``; each following significant line is ``edge <i> <j> <m>`` with
1-based i != j and m an integer >= 3 or the token ``inf``.  Pairs left out
carry the implicit weight 2; naming a pair twice is an error.
"""

from __future__ import annotations

from .graph import INF, CoxeterGraph, GraphError, validate, weight_str


class CoxParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_cox(text: str) -> CoxeterGraph:
    n = None
    weights: dict[tuple[int, int], int | float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "vertices" or len(tokens) != 2:
                raise CoxParseError(lineno, "expected 'vertices <N>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise CoxParseError(lineno, f"bad vertex count {tokens[1]!r}") from None
            if n < 1:
                raise CoxParseError(lineno, f"vertex count must be >= 1, got {n}")
            continue
        if tokens[0] != "edge" or len(tokens) != 4:
            raise CoxParseError(lineno, "expected 'edge <i> <j> <m>'")
        try:
            i, j = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise CoxParseError(lineno, "edge endpoints must be integers") from None
        if tokens[3] == "inf":
            m: int | float = INF
        else:
            try:
                m = int(tokens[3])
            except ValueError:
                raise CoxParseError(
                    lineno, f"weight must be an integer >= 3 or 'inf', got {tokens[3]!r}"
                ) from None
        if m != INF and m < 3:
            raise CoxParseError(lineno, f"edge weight must be >= 3, got {m}")
        if i == j:
            raise CoxParseError(lineno, f"self-edge at vertex {i}")
        key = (min(i, j), max(i, j))
        if key in weights:
            raise CoxParseError(lineno, f"duplicate edge {key}")
        weights[key] = m
    if n is None:
        raise CoxParseError(1, "missing 'vertices <N>' line")
    try:
        return validate(weights, n)
    except GraphError as exc:
        raise CoxParseError(1, str(exc)) from None


def serialize_cox(g: CoxeterGraph) -> str:
    lines = [f"vertices {g.n}"]
    lines.extend(f"edge {i} {j} {weight_str(m)}" for i, j, m in g.edges)
    return "\n".join(lines) + "\n"
