"""Command-line interface.

Subcommands wrap the library one-to-one; graphs are supplied as a `.cox`
file, a linear symbol like "[6,3,3]", or a named catalog entry.  `replay`
reruns the full verification suite and exits nonzero if any check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .classify import component_types
from .compare import extensions
from .coxfile import parse_cox, serialize_cox
from .graph import INF, CoxeterGraph, weight_str
from .growth import growth_rate, growth_series, series_coeffs
from .oracle import CapExceededError, bfs_counts, group_order
from .replay import replay
from .simplex import ideal_link_partitions, simplex_class


def _parse_symbol(text: str) -> CoxeterGraph:
    from .graph import from_linear_symbol

    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    ks = []
    for tok in body.split(","):
        tok = tok.strip()
        ks.append(INF if tok in ("inf", "oo") else int(tok))
    return from_linear_symbol(ks)


def _load_graph(args) -> CoxeterGraph:
    sources = [s for s in (args.file, args.symbol, args.name) if s]
    if len(sources) != 1:
        raise SystemExit2("exactly one of --file, --symbol, --name is required")
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return parse_cox(fh.read())
    if args.symbol:
        return _parse_symbol(args.symbol)
    try:
        return catalog.NAMED[args.name]
    except KeyError:
        raise SystemExit2(
            f"unknown graph name {args.name!r}; known: {', '.join(sorted(catalog.NAMED))}"
        ) from None


class SystemExit2(Exception):
    """Usage error: exit code 2."""


def _add_graph_args(p):
    p.add_argument("--file", help="path to a .cox graph file")
    p.add_argument("--symbol", help='linear symbol, e.g. "[6,3,3]" ("inf" allowed)')
    p.add_argument("--name", help="named catalog graph, e.g. gamma3, w0, p0, delta2")


def _fmt_rate(rate) -> str:
    if rate.is_one:
        return "growth rate 1 (exactly; no pole inside the unit interval)"
    mid = rate.tau.midpoint
    return (f"growth rate {float(mid):.6f} "
            f"(certified interval width {float(rate.tau.width):.3g})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="coxgrowth",
                                 description="exact growth series and rates of Coxeter systems")
    sub = ap.add_subparsers(dest="command", required=True)

    for name in ("classify", "growth", "rate", "coeffs", "oracle", "extensions", "simplex"):
        p = sub.add_parser(name)
        _add_graph_args(p)
        p.add_argument("--json", action="store_true")
        if name == "rate":
            p.add_argument("--eps", default="1e-12",
                           help="width bound for the pole enclosure (rational or decimal)")
        if name in ("coeffs", "oracle"):
            p.add_argument("--max-k", type=int, default=8)
        if name == "oracle":
            p.add_argument("--cap", type=int, default=10**6)

    p = sub.add_parser("table3")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("replay")
    p.add_argument("--json", action="store_true")
    return ap


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def _run(args) -> int:
    cmd = args.command
    if cmd == "table3":
        parts = ideal_link_partitions(args.n)
        _emit(args, {"n": args.n, "partitions": [list(p) for p in parts]},
              ", ".join("(" + ",".join(map(str, p)) + ")" for p in parts))
        return 0
    if cmd == "replay":
        report = replay()
        if args.json:
            print(report.to_json())
        else:
            print("\n".join(report.lines()))
        return 0 if report.passed else 1

    g = _load_graph(args)
    if cmd == "classify":
        types = [str(t) for t in component_types(g)]
        _emit(args, {"components": types}, " + ".join(types))
    elif cmd == "growth":
        gs = growth_series(g)
        text = (f"f(t) = ({gs.f.num.c}) / ({gs.f.den.c})"
                if not gs.is_finite else f"f(t) = {gs.f.num.c} (finite group)")
        _emit(args, {"num": list(gs.f.num.c), "den": list(gs.f.den.c),
                     "finite": gs.is_finite}, text)
    elif cmd == "rate":
        rate = growth_rate(g, Fraction(args.eps))
        payload = {"rate_one": rate.is_one}
        if not rate.is_one:
            payload.update(midpoint=float(rate.tau.midpoint),
                           lo=str(rate.tau.lo), hi=str(rate.tau.hi))
        _emit(args, payload, _fmt_rate(rate))
    elif cmd == "coeffs":
        cs = series_coeffs(g, args.max_k)
        _emit(args, {"coeffs": cs}, " ".join(map(str, cs)))
    elif cmd == "oracle":
        try:
            counts = bfs_counts(g, args.max_k, args.cap)
            order: int | str
            try:
                order = group_order(g, args.cap)
            except CapExceededError:
                order = "infinite (cap hit)"
            _emit(args, {"counts": counts, "order": order},
                  f"counts: {' '.join(map(str, counts))}; order: {order}")
        except CapExceededError as exc:
            raise RuntimeError(str(exc)) from exc
    elif cmd == "extensions":
        exts = extensions(g)
        blocks = [serialize_cox(e) for e in exts]
        _emit(args, {"count": len(exts), "graphs": blocks},
              f"{len(exts)} extensions\n" + "\n".join(blocks))
    elif cmd == "simplex":
        rep = simplex_class(g)
        links = [{"deleted_node": lk.deleted_node,
                  "components": list(lk.component_labels),
                  "spherical": lk.is_spherical, "ideal": lk.is_ideal}
                 for lk in rep.links]
        text_links = "\n".join(
            f"  delete {lk.deleted_node}: "
            + (" + ".join(lk.component_labels) or "(empty)")
            + ("  [spherical]" if lk.is_spherical
               else "  [ideal]" if lk.is_ideal else "  [inadmissible]")
            for lk in rep.links)
        _emit(args, {"volume_class": rep.volume_class.value,
                     "signature": list(rep.signature), "links": links},
              f"{rep.volume_class.value}; signature {rep.signature}\n{text_links}")
    return 0


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _run(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
