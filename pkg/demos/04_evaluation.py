#!/usr/bin/env python3
"""Stage 4 walkthrough: measuring two systems with precision and relative recall.

Builds run files for the expanded pipeline and for the unexpanded baseline
over the bundled corpus, judges by fixture construction (the anna university
faculty/people pages are the relevant set), and prints per-query metrics,
averages and the precision-vs-recall plot points.
"""

import tempfile
from pathlib import Path

from ontosearch.config import load_config
from ontosearch.engine import SearchEngine
from ontosearch.evaluation import evaluate_runs, load_judgments, load_run, summarize
from ontosearch.ranking import normalize_url

engine = SearchEngine(load_config(None))

QUERIES = {
    "q1": "list the teaching staff in anna university",
    "q2": "Provide the Faculties in Computer Science Department Anna University",
}
relevant = sorted(
    normalize_url(d.url)
    for d in engine.corpus_index.documents
    if "annauniv.example" in d.url
)

workdir = Path(tempfile.mkdtemp(prefix="ontosearch-eval-"))
semantic_lines, baseline_lines, judgment_lines = [], [], []
for qid, raw in QUERIES.items():
    response = engine.handle_search(raw)
    for result in response.results[:10]:
        semantic_lines.append(f"{qid}\t{result.final_rank}\t{result.url}")
    for result in engine.backend.search(response.refined_queries[0], 10):
        baseline_lines.append(f"{qid}\t{result.backend_rank}\t{result.url}")
    judgment_lines.extend(f"{qid}\t{url}" for url in relevant)

(workdir / "semantic.run").write_text("\n".join(semantic_lines) + "\n")
(workdir / "baseline.run").write_text("\n".join(baseline_lines) + "\n")
(workdir / "judged.tsv").write_text("\n".join(judgment_lines) + "\n")

rows = evaluate_runs(
    load_run(workdir / "semantic.run"),
    load_run(workdir / "baseline.run"),
    load_judgments(workdir / "judged.tsv"),
)
report = summarize(rows)

print("per-query metrics:")
for row in report.rows:
    print(f"  {row.query_id} {row.system:>9}: precision {row.precision:.2f}, "
          f"recall {row.recall:.2f}")
print("\naverages:")
for system, (avg_p, avg_r) in sorted(report.averages.items()):
    print(f"  {system:>9}: precision {avg_p:.3f}, recall {avg_r:.3f}")
print("\nplot series (recall, precision):")
for system, points in sorted(report.plot_series.items()):
    print(f"  {system}: {[tuple(round(v, 2) for v in p) for p in points]}")
print(f"\nrun/judgment files kept in {workdir}")
print("\nsame thing via the CLI:")
print(f"  ontosearch eval --run-a {workdir}/semantic.run "
      f"--run-b {workdir}/baseline.run --judgments {workdir}/judged.tsv "
      f"--csv out.csv --plot-data plot.json")
