"""Batch statistics over graph6 corpora."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .cq import absolute_clear_witness
from .graph import is_connected
from .graph6 import parse_graph6
from .poly import Polynomial
from .visibility import visibility_polynomial

FEATURES = frozenset({"poly", "clear"})
CSV_COLUMNS = (
    "graph6", "order", "edges", "connected", "mu", "poly",
    "absolute_clear", "witness_q", "elapsed_ms",
)


@dataclass
class CensusRecord:
    graph6: str
    order: int
    edges: int
    connected: bool
    mu: int | None = None
    poly: Polynomial | None = None
    absolute_clear: bool | None = None
    witness_q: frozenset[int] | None = None
    elapsed: float = 0.0


@dataclass(frozen=True)
class ParseFailure:
    line: int
    reason: str


@dataclass
class CensusSummary:
    total: int = 0
    connected: int = 0
    absolute_clear_count: int = 0
    by_order: dict[int, dict[str, int]] = field(default_factory=dict)

    def add(self, rec: CensusRecord) -> None:
        row = self.by_order.setdefault(
            rec.order, {"total": 0, "connected": 0, "absolute_clear": 0}
        )
        self.total += 1
        row["total"] += 1
        if rec.connected:
            self.connected += 1
            row["connected"] += 1
        if rec.absolute_clear:
            self.absolute_clear_count += 1
            row["absolute_clear"] += 1

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "connected": self.connected,
            "absolute_clear_count": self.absolute_clear_count,
            "by_order": {str(k): v for k, v in sorted(self.by_order.items())},
        }

    def render(self) -> str:
        lines = [
            f"total: {self.total}",
            f"connected: {self.connected}",
            f"absolute_clear: {self.absolute_clear_count}",
        ]
        for order, row in sorted(self.by_order.items()):
            lines.append(
                f"order {order}: total {row['total']}, connected {row['connected']}, "
                f"absolute_clear {row['absolute_clear']}"
            )
        return "\n".join(lines) + "\n"


@dataclass
class CensusResult:
    records: list[CensusRecord]
    summary: CensusSummary
    failures: list[ParseFailure]


def evaluate_graph6(record: str, compute: frozenset[str] = FEATURES) -> CensusRecord:
    """Parse one record and compute the requested statistics (connected graphs only)."""
    start = time.perf_counter()
    g = parse_graph6(record)
    rec = CensusRecord(record, g.n, g.num_edges, is_connected(g))
    if rec.connected:
        if "poly" in compute:
            rec.poly = visibility_polynomial(g)
            rec.mu = rec.poly.degree
        if "clear" in compute:
            rec.witness_q = absolute_clear_witness(g)
            rec.absolute_clear = rec.witness_q is None
    rec.elapsed = time.perf_counter() - start
    return rec


def _evaluate(args):
    return evaluate_graph6(*args)


def run_census(lines: Iterable[str], jobs: int = 1, skip_disconnected: bool = True,
               compute: Iterable[str] = FEATURES) -> CensusResult:
    """Evaluate every graph6 line; parse failures are collected, not raised.

    Disconnected graphs get a record with empty statistics, or, with
    ``skip_disconnected=False``, are reported as failures instead.  Records
    come back in input order whatever ``jobs`` is.
    """
    compute = frozenset(compute)
    unknown = compute - FEATURES
    if unknown:
        raise ValueError(f"unknown census features: {sorted(unknown)}")

    failures: list[ParseFailure] = []
    work: list[str] = []
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except ValueError as exc:
            failures.append(ParseFailure(lineno, str(exc)))
            continue
        if not skip_disconnected and not is_connected(g):
            failures.append(ParseFailure(lineno, "graph is disconnected"))
            continue
        work.append(text)

    tasks = [(text, compute) for text in work]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_evaluate, tasks, chunksize=8))
    else:
        records = [_evaluate(t) for t in tasks]

    summary = CensusSummary()
    for rec in records:
        summary.add(rec)
    return CensusResult(records, summary, failures)


def _fmt_set(s: frozenset[int] | None) -> str:
    return "" if s is None else "{" + ",".join(map(str, sorted(s))) + "}"


def _fmt_opt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def record_row(rec: CensusRecord, timings: bool = False) -> dict[str, str]:
    return {
        "graph6": rec.graph6,
        "order": str(rec.order),
        "edges": str(rec.edges),
        "connected": _fmt_opt(rec.connected),
        "mu": _fmt_opt(rec.mu),
        "poly": "" if rec.poly is None else str(rec.poly),
        "absolute_clear": _fmt_opt(rec.absolute_clear),
        "witness_q": _fmt_set(rec.witness_q),
        "elapsed_ms": f"{rec.elapsed * 1000:.3f}" if timings else "",
    }


def to_csv(result: CensusResult, timings: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for rec in result.records:
        writer.writerow(record_row(rec, timings))
    return buf.getvalue()


def to_json(result: CensusResult, timings: bool = False) -> str:
    records = []
    for rec in result.records:
        records.append({
            "graph6": rec.graph6,
            "order": rec.order,
            "edges": rec.edges,
            "connected": rec.connected,
            "mu": rec.mu,
            "poly": None if rec.poly is None else rec.poly.to_json(),
            "absolute_clear": rec.absolute_clear,
            "witness_q": None if rec.witness_q is None else sorted(rec.witness_q),
            "elapsed_ms": round(rec.elapsed * 1000, 3) if timings else None,
        })
    doc = {
        "records": records,
        "summary": result.summary.to_dict(),
        "errors": [{"line": f.line, "reason": f.reason} for f in result.failures],
    }
    return json.dumps(doc, indent=2) + "\n"
