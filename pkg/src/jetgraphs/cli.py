"""Command-line interface: build jet graphs, check their properties, list
covers, run campaigns, and emit catalog families.

Exit codes: 0 when every checked predicate holds, 1 when a violation or
counterexample was found (reports are still written), 2 on usage or parse
errors. The environment variable JET_SEED is reserved but unused; every
algorithm here is deterministic.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .campaigns import run_campaign
from .chordality import is_cochordal
from .coloring import chromatic_number
from .covers import (
    is_minimal_cover,
    is_very_well_covered,
    is_well_covered,
    minimal_vertex_covers,
    prop3_cover_even,
    prop3_cover_odd,
    prop4_cover,
)
from .families import (
    FamilySpec,
    InvalidParameter,
    TooLarge,
    enumerate_connected_graphs,
    make_family,
)
from .formats import (
    MalformedEdgeList,
    MalformedGraph6,
    read_graphs,
    write_dot,
    write_edge_list,
    write_graph6,
)
from .graphs import DisconnectedInput, Graph
from .ideals import edge_ideal, export_macaulay2, jet_ideal_generators, radical_jet_generators
from .jets import jet_graph

_PARSE_ERRORS = (
    MalformedGraph6,
    MalformedEdgeList,
    InvalidParameter,
    TooLarge,
    ValueError,
    OSError,
)


def _read_input(path: str, fmt: str) -> list[Graph]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    graphs = read_graphs(text, fmt)
    if not graphs:
        raise MalformedGraph6("input contains no graphs")
    return graphs


def _cmd_build(args: argparse.Namespace) -> int:
    chunks = []
    for g in _read_input(args.input, args.format):
        jg = jet_graph(g, args.order)
        if args.dot:
            chunks.append(write_dot(jg))
        elif args.m2:
            chunks.append(export_macaulay2(radical_jet_generators(edge_ideal(g), args.order)))
        elif args.m2_raw:
            chunks.append(
                export_macaulay2(
                    jet_ideal_generators(edge_ideal(g), args.order),
                    n_vars=g.n,
                    levels=args.order + 1,
                    labels=g.labels,
                )
            )
        else:
            chunks.append(write_graph6(jg.graph) + "\n")
    sys.stdout.write("".join(chunks))
    return 0


def _check_one(g: Graph, order: int, prop: str, index: int) -> bool:
    jet = jet_graph(g, order).graph
    head = f"check {prop} graph={index} order={order}"
    if prop == "chromatic":
        chi, _ = chromatic_number(g)
        chi_jet, _ = chromatic_number(jet)
        ok = chi == chi_jet
        print(f"{head} chi_base={chi} chi_jet={chi_jet} ok={_b(ok)}")
        return ok
    if prop == "cochordal":
        report = is_cochordal(jet)
        names = ",".join(jet.label(v) for v in (report.order or report.cycle))
        kind = "order" if report.chordal else "cycle"
        print(f"{head} cochordal={_b(report.chordal)} {kind}={names} ok={_b(report.chordal)}")
        return report.chordal
    if prop == "wellcovered":
        ok = is_well_covered(jet)
        print(f"{head} wellcovered={_b(ok)} ok={_b(ok)}")
        return ok
    if prop == "verywellcovered":
        ok = is_very_well_covered(jet)
        print(f"{head} verywellcovered={_b(ok)} ok={_b(ok)}")
        return ok
    if prop == "covers":
        constructed = _constructions(g, order)
        family = minimal_vertex_covers(jet)
        ok = True
        for name, cover in constructed:
            minimal = is_minimal_cover(jet, cover)
            member = cover in family
            ok = ok and minimal and member
            names = ",".join(jet.label(v) for v in cover)
            print(
                f"{head} construction={name} minimal={_b(minimal)}"
                f" enumerated={_b(member)} cover={names}"
            )
        print(f"{head} constructions={len(constructed)} ok={_b(ok)}")
        return ok
    raise InvalidParameter(f"unknown property {prop!r}")


def _constructions(g: Graph, order: int) -> list[tuple[str, tuple[int, ...]]]:
    out: list[tuple[str, tuple[int, ...]]] = []
    bases = minimal_vertex_covers(g)
    try:
        if order % 2 == 1:
            out.append(("layers", prop3_cover_odd(g, (order - 1) // 2)))
        elif order >= 2:
            for base in bases:
                label = "layers+" + "|".join(g.label(v) for v in base)
                out.append((label, prop3_cover_even(g, base, order // 2)))
    except DisconnectedInput:
        pass
    for base in bases:
        label = "levels-of-" + "|".join(g.label(v) for v in base)
        out.append((label, prop4_cover(g, base, order)))
    return out


def _b(flag: bool) -> str:
    return "true" if flag else "false"


def _cmd_check(args: argparse.Namespace) -> int:
    ok = True
    for index, g in enumerate(_read_input(args.input, args.format)):
        ok = _check_one(g, args.order, args.prop, index) and ok
    return 0 if ok else 1


def _cmd_covers(args: argparse.Namespace) -> int:
    status = 0
    for index, g in enumerate(_read_input(args.input, args.format)):
        jg = jet_graph(g, args.order)
        family = minimal_vertex_covers(jg.graph)
        print(f"graph={index} order={args.order} covers={len(family)}")
        for cover in family:
            print(f"cover size={len(cover)} " + " ".join(jg.graph.label(v) for v in cover))
        if args.constructions:
            for name, cover in _constructions(g, args.order):
                minimal = is_minimal_cover(jg.graph, cover)
                member = cover in family
                if not (minimal and member):
                    status = 1
                print(
                    f"construction {name} minimal={_b(minimal)} enumerated={_b(member)} "
                    + " ".join(jg.graph.label(v) for v in cover)
                )
    return status


def _cmd_campaign(args: argparse.Namespace) -> int:
    if args.corpus is not None:
        corpus = _read_input(args.corpus, args.format)
    else:
        corpus = [
            g for n in range(1, args.n + 1) for g in enumerate_connected_graphs(n)
        ]
    report = run_campaign(args.kind, corpus, args.smax, jobs=args.jobs)
    text = report.to_text()
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0 if not report.counterexamples else 1


def _cmd_family(args: argparse.Namespace) -> int:
    kind = "complete_bipartite" if args.kind == "bipartite" else args.kind
    g = make_family(FamilySpec(kind, tuple(args.params)))
    if args.dot:
        sys.stdout.write(write_dot(g))
    elif args.edgelist:
        sys.stdout.write(write_edge_list(g))
    else:
        sys.stdout.write(write_graph6(g) + "\n")
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jet",
        description="Build and analyze jet graphs of simple graphs.",
        epilog="JET_SEED is reserved and unused: all algorithms are deterministic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="input file ('-' for stdin): graph6 lines or an edge list")
        p.add_argument(
            "--format",
            choices=("auto", "graph6", "edgelist"),
            default="auto",
            help="input format (default: detect from the first line)",
        )

    p_build = sub.add_parser("build", help="construct the jet graph and print it")
    add_input(p_build)
    p_build.add_argument("--order", type=int, required=True, help="jet order s >= 0")
    fmt = p_build.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="emit DOT instead of graph6")
    fmt.add_argument("--graph6", action="store_true", help="emit graph6 (default)")
    fmt.add_argument(
        "--m2", action="store_true", help="emit a Macaulay2 script for the radical jet ideal"
    )
    fmt.add_argument(
        "--m2-raw",
        dest="m2_raw",
        action="store_true",
        help="emit a Macaulay2 script for the raw jet ideal generators",
    )
    p_build.set_defaults(func=_cmd_build)

    p_check = sub.add_parser("check", help="evaluate a property of the jet graph")
    add_input(p_check)
    p_check.add_argument("--order", type=int, required=True)
    p_check.add_argument(
        "--prop",
        required=True,
        choices=("chromatic", "cochordal", "wellcovered", "verywellcovered", "covers"),
    )
    p_check.set_defaults(func=_cmd_check)

    p_covers = sub.add_parser("covers", help="list minimal vertex covers of the jet graph")
    add_input(p_covers)
    p_covers.add_argument("--order", type=int, required=True)
    p_covers.add_argument(
        "--constructions",
        action="store_true",
        help="also print constructed covers and whether each is enumerated",
    )
    p_covers.set_defaults(func=_cmd_covers)

    p_campaign = sub.add_parser("campaign", help="run a predicate over a graph corpus")
    p_campaign.add_argument("kind", choices=("chromatic", "cochordal", "conjecture"))
    p_campaign.add_argument(
        "--n", type=int, default=6, help="max vertices of the exhaustive connected corpus"
    )
    p_campaign.add_argument("--smax", type=int, default=2, help="max jet order")
    p_campaign.add_argument("--corpus", help="corpus file instead of exhaustive enumeration")
    p_campaign.add_argument(
        "--format",
        choices=("auto", "graph6", "edgelist"),
        default="auto",
        help="corpus file format",
    )
    p_campaign.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_campaign.add_argument("--out", help="write the report here instead of stdout")
    p_campaign.set_defaults(func=_cmd_campaign)

    p_family = sub.add_parser("family", help="emit a catalog graph")
    p_family.add_argument(
        "kind",
        choices=("path", "cycle", "complete", "bipartite", "star", "favaron", "example3"),
    )
    p_family.add_argument("params", type=int, nargs="*", help="family parameters")
    out = p_family.add_mutually_exclusive_group()
    out.add_argument("--dot", action="store_true")
    out.add_argument("--edgelist", action="store_true")
    out.add_argument("--graph6", action="store_true", help="default")
    p_family.set_defaults(func=_cmd_family)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
