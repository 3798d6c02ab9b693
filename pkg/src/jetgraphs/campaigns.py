"""Predicate campaigns over graph corpora, with re-checkable witnesses.

A campaign evaluates one predicate per graph and jet order and collects
records that always carry enough evidence to be re-verified in isolation:
witness strings are kind-prefixed ("coloring:", "cycle:", "order:",
"badcover:", "badconstruction:") and :func:`recheck_witness` replays each
one against a freshly built jet graph. Serialized reports are line
oriented, versioned, and byte-identical across runs and worker counts;
per-record timings stay in memory only.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from time import perf_counter
from typing import Iterable

from .chordality import (
    check_induced_cycle,
    is_cochordal,
    theorem3_witness,
    verify_simplicial_order,
)
from .coloring import chromatic_number, is_proper
from .covers import (
    is_minimal_cover,
    is_very_well_covered,
    minimal_vertex_covers,
    prop3_cover_even,
    prop3_cover_odd,
    prop4_cover,
)
from .formats import write_graph6
from .graphs import DisconnectedInput, Graph, complement, diameter
from .jets import jet_graph

CAMPAIGN_KINDS = ("chromatic", "cochordal", "covers", "conjecture")
REPORT_VERSION = "v1"


@dataclass(frozen=True)
class CampaignRecord:
    graph_id: str
    s: int
    ok: bool
    detail: str
    witness: str = ""
    elapsed: float = 0.0


@dataclass(frozen=True)
class CampaignReport:
    campaign: str
    s_max: int
    corpus_size: int
    records: tuple[CampaignRecord, ...]

    @property
    def counterexamples(self) -> tuple[CampaignRecord, ...]:
        return tuple(r for r in self.records if not r.ok)

    @property
    def graph_count(self) -> int:
        return len({r.graph_id for r in self.records})

    def to_text(self) -> str:
        lines = [
            f"jet-campaign-report {REPORT_VERSION}",
            f"campaign: {self.campaign}",
            f"smax: {self.s_max}",
            f"corpus: {self.corpus_size}",
            f"graphs: {self.graph_count}",
            f"records: {len(self.records)}",
            f"violations: {len(self.counterexamples)}",
        ]
        for r in self.records:
            ok = "true" if r.ok else "false"
            lines.append(
                f'record graph={r.graph_id} s={r.s} ok={ok}'
                f' detail="{r.detail}" witness="{r.witness}"'
            )
        if self.campaign == "cochordal":
            first_fail: dict[str, int | None] = {}
            for r in self.records:
                prev = first_fail.get(r.graph_id)
                if r.witness.startswith("cycle:") and (prev is None or r.s < prev):
                    first_fail[r.graph_id] = r.s
                else:
                    first_fail.setdefault(r.graph_id, None)
            for gid in sorted(first_fail):
                s = first_fail[gid]
                lines.append(f"firstfail graph={gid} s={'none' if s is None else s}")
        lines.append("end")
        return "\n".join(lines) + "\n"


def _ints(csv: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in csv.split(",")) if csv else ()


def recheck_witness(g: Graph, s: int, witness: str) -> bool:
    """Re-verify a record's witness against a freshly built jet graph.

    Returns True iff the witness substantiates the record's claim.
    """
    if not witness:
        return False
    kind, _, payload = witness.partition(":")
    jet = jet_graph(g, s).graph
    if kind == "coloring":
        return is_proper(jet, _ints(payload))
    if kind == "cycle":
        return check_induced_cycle(complement(jet), _ints(payload))
    if kind == "order":
        return verify_simplicial_order(complement(jet), _ints(payload))
    if kind == "badcover":
        cover = _ints(payload)
        return is_minimal_cover(jet, cover) and 2 * len(cover) != jet.n
    if kind == "badconstruction":
        cover = _ints(payload)
        return not (
            is_minimal_cover(jet, cover) and cover in minimal_vertex_covers(jet)
        )
    raise ValueError(f"unknown witness kind {kind!r}")


def _eval_chromatic(gid: str, g: Graph, s_max: int) -> list[CampaignRecord]:
    chi, _ = chromatic_number(g)
    records = []
    for s in range(1, s_max + 1):
        t0 = perf_counter()
        jet = jet_graph(g, s).graph
        chi_jet, coloring = chromatic_number(jet)
        ok = chi_jet == chi and is_proper(jet, coloring)
        records.append(
            CampaignRecord(
                gid,
                s,
                ok,
                f"chi_base={chi} chi_jet={chi_jet}",
                "coloring:" + ",".join(map(str, coloring.colors)),
                perf_counter() - t0,
            )
        )
    return records


def _eval_cochordal(gid: str, g: Graph, s_max: int) -> list[CampaignRecord]:
    diam = diameter(g)
    records = []
    for s in range(1, s_max + 1):
        t0 = perf_counter()
        jet = jet_graph(g, s).graph
        report = is_cochordal(jet)
        if report.chordal:
            witness = "order:" + ",".join(map(str, report.order))
        else:
            witness = "cycle:" + ",".join(map(str, report.cycle))
        if diam is not None and diam >= 3:
            # jets of long-diameter graphs must not be co-chordal, and the
            # constructed 4-cycle must verify in the complement
            cyc = theorem3_witness(g, s)
            cyc_ok = cyc is not None and check_induced_cycle(complement(jet), cyc)
            ok = not report.chordal and cyc_ok
            if cyc_ok and not report.chordal:
                witness = "cycle:" + ",".join(map(str, cyc))
        else:
            ok = True  # observational for short diameters
        detail = (
            f"diameter={'inf' if diam is None else diam}"
            f" cochordal={'true' if report.chordal else 'false'}"
        )
        records.append(CampaignRecord(gid, s, ok, detail, witness, perf_counter() - t0))
    return records


def _eval_covers(gid: str, g: Graph, s_max: int) -> list[CampaignRecord]:
    base_covers = minimal_vertex_covers(g)
    records = []
    for s in range(0, s_max + 1):
        t0 = perf_counter()
        constructed: list[tuple[int, ...]] = []
        try:
            if s % 2 == 1:
                constructed.append(prop3_cover_odd(g, (s - 1) // 2))
            elif s >= 2:
                for base in base_covers:
                    constructed.append(prop3_cover_even(g, base, s // 2))
        except DisconnectedInput:
            pass
        for base in base_covers:
            constructed.append(prop4_cover(g, base, s))
        jet = jet_graph(g, s).graph
        family = minimal_vertex_covers(jet)
        bad = [
            c for c in constructed if not (is_minimal_cover(jet, c) and c in family)
        ]
        ok = not bad
        detail = f"constructions={len(constructed)} family={len(family)}"
        witness = "" if ok else "badconstruction:" + ",".join(map(str, bad[0]))
        records.append(CampaignRecord(gid, s, ok, detail, witness, perf_counter() - t0))
    return records


def _eval_conjecture(gid: str, g: Graph, s_max: int) -> list[CampaignRecord]:
    if not is_very_well_covered(g):
        return []
    records = []
    for s in range(1, s_max + 1):
        t0 = perf_counter()
        jet = jet_graph(g, s).graph
        family = minimal_vertex_covers(jet)
        half = jet.n // 2
        bad = [c for c in family if len(c) != half]
        ok = not bad
        detail = f"covers={len(family)} half={half}"
        witness = "" if ok else "badcover:" + ",".join(map(str, bad[0]))
        records.append(CampaignRecord(gid, s, ok, detail, witness, perf_counter() - t0))
    return records


_EVALUATORS = {
    "chromatic": _eval_chromatic,
    "cochordal": _eval_cochordal,
    "covers": _eval_covers,
    "conjecture": _eval_conjecture,
}


def _evaluate(task: tuple[str, Graph, int]) -> list[CampaignRecord]:
    kind, g, s_max = task
    gid = write_graph6(g)
    try:
        return _EVALUATORS[kind](gid, g, s_max)
    except Exception as exc:  # per-graph failures are recorded, never fatal
        return [CampaignRecord(gid, -1, False, f"error={type(exc).__name__}: {exc}")]


def run_campaign(
    kind: str, corpus: Iterable[Graph], s_max: int, jobs: int = 1
) -> CampaignReport:
    """Evaluate a campaign predicate over every graph in the corpus.

    Graphs are independent and may be evaluated with ``jobs`` worker
    processes; records come back sorted by (graph id, s) so output is
    identical regardless of scheduling.
    """
    if kind not in _EVALUATORS:
        raise ValueError(f"unknown campaign kind {kind!r}")
    if s_max < 0:
        raise ValueError("smax must be nonnegative")
    graphs = list(corpus)
    tasks = [(kind, g, s_max) for g in graphs]
    if jobs <= 1:
        results = [_evaluate(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, tasks, chunksize=chunk))
    records = sorted(
        (r for recs in results for r in recs), key=lambda r: (r.graph_id, r.s)
    )
    return CampaignReport(kind, s_max, len(graphs), tuple(records))
