#!/usr/bin/env python3
"""Render the catalog families as DOT drawings and Macaulay2 cross-check scripts.

Writes, for each named family and jet order, the jet graph drawing plus
scripts for the radical jet ideal and for the raw coefficient generators,
ready to paste into a CAS session.
"""

import argparse
import sys
from pathlib import Path

from jetgraphs.families import FamilySpec, make_family
from jetgraphs.formats import write_dot
from jetgraphs.ideals import (
    edge_ideal,
    export_macaulay2,
    jet_ideal_generators,
    radical_jet_generators,
)
from jetgraphs.jets import jet_graph

CATALOG = [
    FamilySpec("path", (3,)),
    FamilySpec("path", (4,)),
    FamilySpec("cycle", (4,)),
    FamilySpec("complete", (3,)),
    FamilySpec("complete_bipartite", (2, 2)),
    FamilySpec("star", (5,)),
    FamilySpec("example3", ()),
    FamilySpec("favaron", ()),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--smax", type=int, default=2, help="max jet order")
    parser.add_argument(
        "--out-dir", type=Path, default=Path("catalog"), help="output directory"
    )
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for spec in CATALOG:
        g = make_family(spec)
        stem = spec.kind + "".join(f"_{p}" for p in spec.params)
        ideal = edge_ideal(g)
        for s in range(args.smax + 1):
            jet = jet_graph(g, s)
            (args.out_dir / f"{stem}.jet{s}.dot").write_text(write_dot(jet))
            (args.out_dir / f"{stem}.jet{s}.radical.m2").write_text(
                export_macaulay2(radical_jet_generators(ideal, s))
            )
            (args.out_dir / f"{stem}.jet{s}.raw.m2").write_text(
                export_macaulay2(
                    jet_ideal_generators(ideal, s),
                    n_vars=g.n,
                    levels=s + 1,
                    labels=g.labels,
                )
            )
        print(f"{stem}: orders 0..{args.smax} written")
    return 0


if __name__ == "__main__":
    sys.exit(main())
