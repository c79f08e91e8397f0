#!/usr/bin/env python3
"""Enumerate all connected Coxeter graphs of order n+1 whose simplex is
non-compact with finite volume, print each with its certified growth rate,
and optionally dump them as .cox files.

Usage:
    python3 scripts/build_corpus.py -n 4 [--out DIR]
"""

import argparse
import pathlib

from coxgrowth.corpus import simplex_corpus
from coxgrowth.coxfile import serialize_cox
from coxgrowth.growth import growth_rate


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, required=True, help="dimension (>= 2)")
    ap.add_argument("--out", type=pathlib.Path,
                    help="directory to write <stem>_<i>.cox files into")
    args = ap.parse_args()

    corpus = simplex_corpus(args.n)
    print(f"dimension {args.n}: {len(corpus)} graphs")
    for i, g in enumerate(corpus):
        r = growth_rate(g)
        edges = " ".join(f"{a}-{b}:{'inf' if m == float('inf') else m}"
                         for a, b, m in g.edges)
        print(f"  [{i:2d}] tau in [{float(r.tau.lo):.6f}, {float(r.tau.hi):.6f}]"
              f"  {edges}")
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"simplex_n{args.n}_{i}.cox").write_text(serialize_cox(g))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
