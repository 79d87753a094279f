"""Whole-code search: enumerate short cycles, expand, and report every
trapping set found, with per-class coverage verdicts from the reference
tables.

A verdict is only as strong as the table row behind it: "guaranteed" means
every structure of that class is an LSS of a cycle no longer than the
enumeration window, so the expansion cannot have missed one.  Classes with
NA structures are never better than "guaranteed-partial".  The tables are
keyed by the code's actual girth; a table for a different girth is never
substituted.
"""

from __future__ import annotations

import json
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from etskit.lss import ExpansionFrontier, enumerate_tanner_cycles, expand_to_k
from etskit.structgen import ClassSpec
from etskit.tables import NA, get_table
from etskit.tanner import TannerGraph, classify, gamma_split

MAX_SEARCH_K = 12

GUARANTEED = "guaranteed"
GUARANTEED_PARTIAL = "guaranteed-partial"
NONEXISTENT = "nonexistent"
UNCOVERED = "uncovered"
UNCHARACTERIZED = "uncharacterized"
CONFLICT = "conflict"


def coverage_query(spec: ClassSpec, max_len: int) -> str:
    """Verdict for one class against an enumeration window of max_len."""
    table = get_table(spec.d_l, spec.g)
    if table is None:
        raise ValueError(f"no reference table for d_l={spec.d_l}, girth {spec.g}")
    row = table.row(spec.a, spec.b)  # raises KeyError outside scope
    if row is None:
        return NONEXISTENT
    labels = row["ts"]
    numeric = [x for x in labels if isinstance(x, int)]
    has_na = NA in labels
    if not has_na and numeric and max(numeric) <= max_len:
        return GUARANTEED
    if any(x <= max_len for x in numeric):
        return GUARANTEED_PARTIAL
    return UNCOVERED


@dataclass
class ClassReport:
    a: int
    b: int
    count: int
    guarantee: str
    sets: list[tuple[int, ...]] = field(default_factory=list)


@dataclass
class SearchReport:
    code: str
    d_l: int
    girth: int
    k: int
    max_len: int
    classes: list[ClassReport]
    include_sets: bool = False

    def total_sets(self) -> int:
        return sum(c.count for c in self.classes)

    def to_json_dict(self) -> dict:
        out = {
            "code": self.code,
            "dl": self.d_l,
            "g": self.girth,
            "k": self.k,
            "max_len": self.max_len,
            "classes": [
                {"a": c.a, "b": c.b, "count": c.count, "guarantee": c.guarantee}
                for c in self.classes
            ],
        }
        if self.include_sets:
            out["sets"] = [
                {"a": c.a, "b": c.b, "members": list(m)}
                for c in self.classes
                for m in c.sets
            ]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def _guarantee_for(graph: TannerGraph, a: int, b: int, max_len: int) -> str:
    table = get_table(graph.d_l, graph.girth)
    if table is None or not table.in_scope(a, b):
        return UNCHARACTERIZED
    spec = ClassSpec(d_l=graph.d_l, g=int(graph.girth), a=a, b=b)
    verdict = coverage_query(spec, max_len)
    if verdict == NONEXISTENT:
        # a set of a provably impossible class was found: internal error
        return CONFLICT
    return verdict


def _expand_chunk(args):
    graph, seeds, k = args
    frontier = expand_to_k(graph, seeds, k, _validate=False)
    return frontier.by_size, frontier.seeds


def find_etss(
    graph: TannerGraph,
    k: int,
    max_len: int,
    code_id: str = "",
    include_sets: bool = False,
    threads: int = 1,
) -> tuple[SearchReport, ExpansionFrontier]:
    """All in-pool ETSs of size <= k reachable from cycles up to max_len."""
    if k < 2 or k > MAX_SEARCH_K:
        raise ValueError(f"k must be in 2..{MAX_SEARCH_K}")
    girth = graph.girth
    if girth != float("inf") and not girth <= max_len <= girth + 12:
        raise ValueError(f"max_len must be within [girth, girth+12] = [{girth}, {girth + 12}]")
    cycles = enumerate_tanner_cycles(graph, max_len) if girth != float("inf") else {}
    seeds = []
    for length in sorted(cycles):
        for members in cycles[length]:
            if len(members) > k:
                continue
            rec = classify(graph, members)
            if rec.elementary and rec.in_t:
                seeds.append(members)

    if threads > 1 and len(seeds) > 64:
        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:  # pragma: no cover - platform dependent
            ctx = multiprocessing.get_context()
        chunks = [seeds[i::threads] for i in range(threads)]
        frontier = ExpansionFrontier(k)
        with ProcessPoolExecutor(max_workers=threads, mp_context=ctx) as pool:
            for by_size, chunk_seeds in pool.map(
                _expand_chunk, [(graph, chunk, k) for chunk in chunks]
            ):
                for layer in by_size.values():
                    for members in layer:
                        frontier.add(members)
                frontier.seeds.update(chunk_seeds)
    else:
        frontier = expand_to_k(graph, seeds, k, _validate=False)

    by_class: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for members in frontier.all_sets():
        b = len(gamma_split(graph, members).odd)
        by_class.setdefault((len(members), b), []).append(members)
    classes = [
        ClassReport(
            a=a,
            b=b,
            count=len(sets),
            guarantee=_guarantee_for(graph, a, b, max_len),
            sets=sorted(sets),
        )
        for (a, b), sets in sorted(by_class.items())
    ]
    report = SearchReport(
        code=code_id or graph.key,
        d_l=graph.d_l,
        girth=int(girth) if girth != float("inf") else -1,
        k=k,
        max_len=max_len,
        classes=classes,
        include_sets=include_sets,
    )
    return report, frontier


def format_report_table(report: SearchReport) -> str:
    """Human-readable per-class summary with lengths also shown as g+offset."""
    lines = [
        f"code {report.code}: d_l={report.d_l} girth={report.girth} "
        f"k={report.k} max_len={report.max_len}"
        + (
            f" (g+{report.max_len - report.girth})"
            if report.girth > 0
            else ""
        )
    ]
    if not report.classes:
        lines.append("no trapping sets found")
        return "\n".join(lines) + "\n"
    lines.append(f"{'(a,b)':>8}  {'count':>6}  guarantee")
    for c in report.classes:
        lines.append(f"({c.a},{c.b})".rjust(8) + f"  {c.count:>6}  {c.guarantee}")
    return "\n".join(lines) + "\n"
