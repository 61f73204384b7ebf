"""Precision / relative-recall evaluation of two systems from run and
judgment files, with CSV and plot-series emission.

Relative recall follows the pooled-judgment model: the relevant set for a
query is the union of links judged relevant across both systems' outputs, and
each system's recall is measured against that union.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from ontosearch.ranking import normalize_url


@dataclass(frozen=True)
class EvalRow:
    query_id: str
    system: str
    precision: float
    recall: float


@dataclass(frozen=True)
class RunFile:
    """One system's ranked retrieval per query; urls normalized, no duplicates."""

    system: str
    runs: Mapping[str, tuple[str, ...]]


@dataclass(frozen=True)
class JudgmentSet:
    """Query id -> pooled set of urls judged relevant (both systems' pools)."""

    relevant: Mapping[str, frozenset[str]]


@dataclass(frozen=True)
class EvalReport:
    rows: tuple[EvalRow, ...]
    averages: Mapping[str, tuple[float, float]]  # system -> (precision, recall)
    plot_series: Mapping[str, tuple[tuple[float, float], ...]]  # (recall, precision) points

    def to_csv(self) -> str:
        lines = ["query,system,precision,recall"]
        for row in self.rows:
            lines.append(f"{row.query_id},{row.system},{row.precision:.6g},{row.recall:.6g}")
        return "\n".join(lines) + "\n"

    def plot_data_json(self) -> str:
        payload = {
            system: [[recall, prec] for recall, prec in points]
            for system, points in self.plot_series.items()
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def precision(retrieved: Sequence[str], relevant: Iterable[str]) -> float:
    """Fraction of retrieved links that are relevant; 0 for an empty retrieval."""
    if not retrieved:
        return 0.0
    relevant_set = set(relevant)
    hits = sum(1 for url in set(retrieved) if url in relevant_set)
    return hits / len(set(retrieved))


def relative_recall(system_retrieved: Sequence[str], relevant_union: Iterable[str]) -> float:
    """Fraction of the pooled relevant union this system retrieved."""
    union = set(relevant_union)
    if not union:
        raise ValueError("relative recall undefined for an empty relevant union")
    hits = sum(1 for url in union if url in set(system_retrieved))
    return hits / len(union)


def load_run(path: str | Path, system: str | None = None) -> RunFile:
    """Parse a run file of ``qid<TAB>rank<TAB>url`` lines.

    Urls are normalized; a duplicate url within one query is an error naming
    the line. Results are ordered by the rank column.
    """
    run_path = Path(path)
    per_query: dict[str, list[tuple[int, str]]] = {}
    seen: dict[str, set[str]] = {}
    for lineno, line in enumerate(run_path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise ValueError(f"{run_path}:{lineno}: expected 'qid<TAB>rank<TAB>url'")
        qid, rank_text, url = fields
        try:
            rank = int(rank_text)
        except ValueError:
            raise ValueError(f"{run_path}:{lineno}: rank {rank_text!r} is not an integer") from None
        normalized = normalize_url(url)
        if normalized in seen.setdefault(qid, set()):
            raise ValueError(f"{run_path}:{lineno}: duplicate url for query {qid}: {normalized}")
        seen[qid].add(normalized)
        per_query.setdefault(qid, []).append((rank, normalized))

    runs = {
        qid: tuple(url for _rank, url in sorted(entries))
        for qid, entries in per_query.items()
    }
    return RunFile(system=system or run_path.stem, runs=runs)


def load_judgments(path: str | Path) -> JudgmentSet:
    """Parse a judgments file of ``qid<TAB>url`` lines (urls normalized)."""
    judgment_path = Path(path)
    pools: dict[str, set[str]] = {}
    for lineno, line in enumerate(judgment_path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"{judgment_path}:{lineno}: expected 'qid<TAB>url'")
        qid, url = fields
        pools.setdefault(qid, set()).add(normalize_url(url))
    return JudgmentSet(relevant={qid: frozenset(urls) for qid, urls in pools.items()})


def evaluate_runs(
    run_a: RunFile,
    run_b: RunFile,
    judgments: JudgmentSet,
) -> list[EvalRow]:
    """Per-query precision and relative recall for both systems.

    Queries are those with a judgment pool and at least one run entry; a
    system that retrieved nothing for a judged query scores 0/0.
    """
    rows: list[EvalRow] = []
    qids = [
        qid for qid in judgments.relevant
        if qid in run_a.runs or qid in run_b.runs
    ]
    for qid in sorted(qids):
        pool = judgments.relevant[qid]
        for run in (run_a, run_b):
            retrieved = run.runs.get(qid, ())
            rows.append(EvalRow(
                query_id=qid,
                system=run.system,
                precision=precision(retrieved, pool),
                recall=relative_recall(retrieved, pool) if pool else 0.0,
            ))
    return rows


def summarize(rows: Sequence[EvalRow], plot_first_n: int = 5) -> EvalReport:
    """Arithmetic per-system means plus (recall, precision) plot points for
    the first ``plot_first_n`` queries of each system, in query order."""
    if not rows:
        raise ValueError("summarize requires at least one row")
    by_system: dict[str, list[EvalRow]] = {}
    for row in rows:
        by_system.setdefault(row.system, []).append(row)

    averages = {
        system: (
            sum(r.precision for r in srows) / len(srows),
            sum(r.recall for r in srows) / len(srows),
        )
        for system, srows in by_system.items()
    }
    plot_series = {
        system: tuple((r.recall, r.precision) for r in srows[:plot_first_n])
        for system, srows in by_system.items()
    }
    return EvalReport(rows=tuple(rows), averages=averages, plot_series=plot_series)
