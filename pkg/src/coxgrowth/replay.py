"""End-to-end verification suite.

Twelve named checks (R1..R12) recompute every pinned quantity from scratch:
growth-rate regressions and certified orderings, the minimality sweep over
the generated simplex corpus, exact term-multiset and difference identities
for the three order-4 groups with an infinite edge, the exhaustive order-4
dominance argument, extension enumerations with volume classes, the ideal
vertex partition table, and the showcased infinite-covolume extension.
Failures are report entries, never exceptions.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import catalog
from .compare import dominates, extensions, minimal_rate
from .corpus import simplex_corpus
from .graph import INF, CoxeterGraph, canonical_form, connected_components, is_isomorphic, validate
from .growth import growth_rate, steinberg, steinberg_terms
from .poly import IntPoly, RatFunc, bracket_product
from .simplex import VolumeClass, ideal_link_partitions, simplex_class

PASS, FAIL, INFO = "pass", "fail", "info"

# pinned published values as (display value, display ulp); the displayed
# figures are truncations, so the certified value must lie in
# [display, display + ulp), i.e. within half an ulp of the display midpoint
PUBLISHED_RATES = {
    "gamma9": (Fraction("1.1380"), Fraction(1, 10**4)),
    "gamma5": (Fraction("1.2481"), Fraction(1, 10**4)),
    "gamma4": (Fraction("1.3717"), Fraction(1, 10**4)),
    "gamma3": (Fraction("1.2964"), Fraction(1, 10**4)),
    "w0": (Fraction("1.4655"), Fraction(1, 10**4)),
    "p0": (Fraction("2.8383"), Fraction(1, 10**4)),
    "delta1": (Fraction("1.678"), Fraction(1, 10**3)),
    "delta2": (Fraction("1.599"), Fraction(1, 10**3)),
    "delta3": (Fraction("1.668"), Fraction(1, 10**3)),
    "delta4": (Fraction("1.702"), Fraction(1, 10**3)),
}

# pinned alternating-sum term multisets: bracket key -> signed count
PUBLISHED_TERMS = {
    "w0": {(): 1, (2,): -4, (2, 2): 3, (2, 3): 2, (2, 2, 3): -1, (2, 3, 4): -1},
    "w1": {(): 1, (2,): -4, (2, 2): 3, (2, 3): 2, (2, 2, 3): -2},
    "w2": {(): 1, (2,): -4, (2, 2): 3, (2, 3): 2, (2, 2, 2): -1, (2, 3, 4): -1},
}

PUBLISHED_PARTITIONS = {
    5: [(3, 3)],
    6: [(3, 4)],
    7: [(4, 4), (3, 5), (3, 3, 3)],
    8: [(3, 6), (4, 5), (3, 3, 4)],
    # the published n=9 column omits (3, 3, 5); see check_r11
    9: [(3, 7), (4, 6), (5, 5), (3, 4, 4), (3, 3, 3, 3)],
}


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    computed: str
    expected: str
    provenance: str
    elapsed_ms: float


@dataclass(frozen=True)
class ReplayReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def to_json(self) -> str:
        return json.dumps([asdict(c) for c in self.checks], indent=2)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            out.append(f"{c.id:<28} {c.status.upper():<4} "
                       f"computed={c.computed} expected={c.expected} "
                       f"[{c.provenance}] ({c.elapsed_ms:.0f} ms)")
        out.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return out


def _timed(check_id: str, provenance: str, fn) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, computed, expected = fn()
        status = ok if isinstance(ok, str) else (PASS if ok else FAIL)
    except Exception as exc:  # a crash is a failing check, not an abort
        status, computed, expected = FAIL, f"exception: {exc!r}", "no exception"
    return CheckResult(check_id, status, str(computed), str(expected), provenance,
                       (time.perf_counter() - t0) * 1000)


def _rate_matches(name: str) -> tuple[bool, str, str]:
    printed, ulp = PUBLISHED_RATES[name]
    tau = growth_rate(catalog.NAMED[name]).tau
    ok = printed <= tau.lo and tau.hi < printed + ulp
    return ok, f"{float(tau.midpoint):.6f}", f"truncates to {float(printed)}"


def _tau(g: CoxeterGraph):
    return growth_rate(g).tau


def check_r1() -> list[CheckResult]:
    out = [_timed(f"R1-rate-{n}", "published value",
                  lambda n=n: _rate_matches(f"gamma{n}"))
           for n in (9, 5, 4)]
    def ordering():
        taus = {n: _tau(catalog.GAMMA[n]) for n in range(4, 10)}
        ok = (all(taus[9].strictly_below(taus[n]) for n in range(4, 9))
              and all(taus[n].strictly_below(taus[4]) for n in range(5, 10)))
        shown = ", ".join(f"n={n}: {float(taus[n].midpoint):.6f}"
                          for n in range(4, 10))
        return ok, shown, ("dimension-9 rate strictly smallest, "
                           "dimension-4 rate strictly largest, over n = 4..9")
    out.append(_timed("R1-ordering", "certified intervals", ordering))
    return out


def check_r2() -> list[CheckResult]:
    out = [_timed("R2-rate-gamma3", "published value", lambda: _rate_matches("gamma3"))]
    out.append(_timed("R2-gamma5-below-gamma3", "certified intervals", lambda: (
        _tau(catalog.GAMMA[5]).strictly_below(_tau(catalog.GAMMA[3])),
        f"{float(_tau(catalog.GAMMA[5]).midpoint):.6f} vs "
        f"{float(_tau(catalog.GAMMA[3]).midpoint):.6f}",
        "rate of the dimension-5 graph below the dimension-3 graph")))
    return out


def check_r3() -> list[CheckResult]:
    out = []
    for n in range(4, 10):
        def run(n=n):
            corpus = simplex_corpus(n)
            winner, tau = minimal_rate(corpus)
            unique = all(is_isomorphic(winner, g) or
                         tau.strictly_below(_tau(g)) for g in corpus)
            ok = is_isomorphic(winner, catalog.GAMMA[n]) and unique
            return ok, (f"corpus size {len(corpus)}, minimum "
                        f"{float(tau.midpoint):.6f} at the expected graph: {ok}"), \
                f"unique minimum at gamma{n}"
        out.append(_timed(f"R3-minimal-n{n}", "exhaustive corpus sweep", run))
    return out


def check_r4() -> list[CheckResult]:
    out = [_timed("R4-rate-p0", "published value", lambda: _rate_matches("p0"))]
    out.append(_timed("R4-p0-above-gamma4", "certified intervals", lambda: (
        _tau(catalog.GAMMA[4]).strictly_below(_tau(catalog.P0)),
        f"{float(_tau(catalog.P0).midpoint):.6f}",
        "pyramid-graph rate above the dimension-4 minimum")))
    return out


def check_r5() -> list[CheckResult]:
    return [_timed("R5-rate-w0", "published value", lambda: _rate_matches("w0"))]


def check_r6() -> list[CheckResult]:
    out = []
    for name in ("w0", "w1", "w2"):
        out.append(_timed(f"R6-terms-{name}", "published expansion", lambda name=name: (
            steinberg_terms(catalog.NAMED[name]) == PUBLISHED_TERMS[name],
            dict(sorted(steinberg_terms(catalog.NAMED[name]).items())),
            dict(sorted(PUBLISHED_TERMS[name].items())))))

    def diff(other: str, num: IntPoly, key: tuple[int, ...]):
        lhs = steinberg(catalog.W0) - steinberg(catalog.NAMED[other])
        rhs = RatFunc(num, bracket_product(key))
        return lhs == rhs, f"{lhs.num.c}/{lhs.den.c}", f"{rhs.num.c}/{rhs.den.c}"

    out.append(_timed("R6-diff-w0-w1", "published identity",
                      lambda: diff("w1", IntPoly([0, 0, 1, 1]), (2, 2, 3, 4))))
    out.append(_timed("R6-diff-w0-w2", "published identity",
                      lambda: diff("w2", IntPoly([0, 0, 1]), (2, 2, 2, 3))))
    for other in ("w1", "w2"):
        out.append(_timed(f"R6-w0-below-{other}", "certified intervals",
                          lambda other=other: (
            _tau(catalog.W0).strictly_below(_tau(catalog.NAMED[other])),
            f"{float(_tau(catalog.W0).midpoint):.6f} vs "
            f"{float(_tau(catalog.NAMED[other]).midpoint):.6f}",
            "strict interval separation")))
    return out


def order4_infinite_edge_graphs() -> list[CoxeterGraph]:
    """All connected order-4 graphs with at least one infinite edge and
    weights in {2,..,6,inf}, up to isomorphism."""
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    alphabet = (2, 3, 4, 5, 6, INF)
    seen = {}
    def rec(idx, weights):
        if idx == len(pairs):
            if not any(w == INF for w in weights.values()):
                return
            g = validate(weights, 4)
            if len(connected_components(g)) != 1:
                return
            seen.setdefault(canonical_form(g), g)
            return
        for w in alphabet:
            weights[pairs[idx]] = w
            rec(idx + 1, weights)
        del weights[pairs[idx]]
    rec(0, {})
    return list(seen.values())


def check_r7() -> list[CheckResult]:
    def run():
        graphs = order4_infinite_edge_graphs()
        bad = [g for g in graphs
               if not any(dominates(w, g) for w in (catalog.W0, catalog.W1, catalog.W2))]
        return not bad, f"{len(graphs)} graphs checked, {len(bad)} undominated", \
            "every graph dominated by one of the three reference groups"
    return [_timed("R7-order4-dominance", "exhaustive enumeration", run)]


def _extension_sweep(check_id, bases, expected_total, expected_finite, floor_name):
    def run():
        exts = {}
        for b in bases:
            for e in extensions(b):
                exts.setdefault(canonical_form(e), e)
        exts = list(exts.values())
        classes = [simplex_class(e).volume_class for e in exts]
        finite = [e for e, c in zip(exts, classes)
                  if c is VolumeClass.FINITE_VOLUME_NONCOMPACT]
        floor_graph = catalog.NAMED[floor_name]
        floor = _tau(floor_graph)
        rate_ok = all(
            is_isomorphic(e, floor_graph) or floor.strictly_below(_tau(e))
            for e in finite)
        contains_floor = any(is_isomorphic(e, floor_graph) for e in finite)
        ok = (len(exts) == expected_total and len(finite) == expected_finite
              and rate_ok and contains_floor)
        return ok, (f"{len(exts)} extensions, {len(finite)} finite covolume, "
                    f"rates at or above {floor_name}: {rate_ok}"), \
            f"{expected_total} extensions, {expected_finite} finite covolume"
    return _timed(check_id, "published enumeration", run)


def check_r8() -> list[CheckResult]:
    from .catalog import affine_graph
    out = [_timed("R8-unique-extension-A~2", "published enumeration", lambda: (
        len(extensions(affine_graph("A~", 2))) == 1,
        len(extensions(affine_graph("A~", 2))), 1))]
    out.append(_extension_sweep(
        "R8-order4-extensions",
        [affine_graph("A~", 2), affine_graph("C~", 2), affine_graph("G2~")],
        6, 6, "gamma3"))
    return out


def check_r9() -> list[CheckResult]:
    from .catalog import affine_graph
    return [_extension_sweep(
        "R9-order5-extensions",
        [affine_graph("A~", 3), affine_graph("B~", 3), affine_graph("C~", 3)],
        6, 6, "gamma4")]


def check_r10() -> list[CheckResult]:
    from .catalog import affine_connected_of_order
    out = []

    def run():
        # extensions are counted once per source diagram (one graph arises
        # from two distinct order-5 affine diagrams, so 15 counted vs 14
        # distinct); the infinite-covolume ones are compared as a set
        classes = {}
        total = 0
        for _, b in affine_connected_of_order(5):
            for e in extensions(b):
                total += 1
                classes[canonical_form(e)] = simplex_class(e).volume_class
        finite = sum(1 for c in classes.values()
                     if c is VolumeClass.FINITE_VOLUME_NONCOMPACT)
        infinite_cfs = {cf for cf, c in classes.items()
                        if c is VolumeClass.INFINITE_VOLUME}
        expected_cfs = {canonical_form(d) for d in catalog.DELTA.values()}
        ok = (total == 15 and len(classes) == 14
              and finite == len(classes) - 4 and infinite_cfs == expected_cfs)
        return ok, (f"{total} extensions ({len(classes)} distinct), "
                    f"{finite} finite covolume, "
                    f"{len(infinite_cfs)} infinite covolume"), \
            ("15 extensions counted per source diagram, all of finite "
             "covolume except four matching the named infinite-covolume graphs")
    out.append(_timed("R10-order6-extensions", "published enumeration", run))
    for i in range(1, 5):
        out.append(_timed(f"R10-rate-delta{i}", "published value",
                          lambda i=i: _rate_matches(f"delta{i}")))
    out.append(_timed("R10-gamma5-below-deltas", "certified intervals", lambda: (
        all(_tau(catalog.GAMMA[5]).strictly_below(_tau(d))
            for d in catalog.DELTA.values()),
        f"{float(_tau(catalog.GAMMA[5]).midpoint):.6f}",
        "dimension-5 minimum below all four infinite-covolume rates")))
    return out


def check_r11() -> list[CheckResult]:
    out = []
    for n in range(5, 9):
        out.append(_timed(f"R11-partitions-n{n}", "published table", lambda n=n: (
            sorted(ideal_link_partitions(n)) == sorted(PUBLISHED_PARTITIONS[n]),
            sorted(ideal_link_partitions(n)), sorted(PUBLISHED_PARTITIONS[n]))))

    def n9():
        computed = sorted(ideal_link_partitions(9))
        published = sorted(PUBLISHED_PARTITIONS[9])
        extra = [p for p in computed if p not in published]
        # the published column omits (3, 3, 5); the omission is immaterial
        # because any multiset with an order-3 entry is handled by the
        # minimum-entry argument, so this is informational, not a failure
        ok = len(computed) == 6 and extra == [(3, 3, 5)] \
            and [p for p in computed if p in published] == published
        return (INFO if ok else FAIL), \
            f"6 multisets; documented extra entry {extra}", \
            "published column lists 5; exhaustive enumeration yields 6"
    out.append(_timed("R11-partitions-n9", "exhaustive enumeration vs published table", n9))
    return out


def check_r12() -> list[CheckResult]:
    return [_timed("R12-infinite-volume-extension", "published classification", lambda: (
        simplex_class(catalog.FIG4).volume_class is VolumeClass.INFINITE_VOLUME,
        simplex_class(catalog.FIG4).volume_class.value,
        VolumeClass.INFINITE_VOLUME.value))]


ALL_CHECKS = (check_r1, check_r2, check_r3, check_r4, check_r5, check_r6,
              check_r7, check_r8, check_r9, check_r10, check_r11, check_r12)


def replay() -> ReplayReport:
    checks: list[CheckResult] = []
    for fn in ALL_CHECKS:
        checks.extend(fn())
    return ReplayReport(tuple(checks))
