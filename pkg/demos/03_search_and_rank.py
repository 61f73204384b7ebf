#!/usr/bin/env python3
"""Stage 3 walkthrough: retrieval, filtering and rank fusion.

Runs the full pipeline on the bundled 50-document corpus and contrasts the
unexpanded query's result list with the fused, keyword-scored ranking. The
corpus fixture is built so the relevant pages say "faculty"/"people" but
never "teaching staff" - exactly the situation query expansion exists for.
"""

from ontosearch.config import load_config
from ontosearch.engine import SearchEngine
from ontosearch.ranking import normalize_url

engine = SearchEngine(load_config(None))
QUERY = "list the teaching staff in anna university"

response = engine.handle_search(QUERY)
relevant = {
    normalize_url(d.url)
    for d in engine.corpus_index.documents
    if "annauniv.example" in d.url
}

print(f"corpus: {engine.corpus_index.N} documents, "
      f"{len(relevant)} about anna university faculty/people\n")

baseline = response.refined_queries[0]
print(f"--- unexpanded query: {baseline.text!r} -------------------")
for result in engine.backend.search(baseline, 10):
    mark = "*" if normalize_url(result.url) in relevant else " "
    print(f" {mark} {result.backend_rank:2d}. {result.title}")
print("  (* = relevant; the literal wording only reaches staff-training pages)")

print("\n--- fused ranking over all refined queries -------------------------")
for result in response.results[:10]:
    mark = "*" if result.url in relevant else " "
    b = result.breakdown
    print(f" {mark} {result.final_rank:2d}. {result.title}")
    print(f"      score {b.total:.3f} = rrf {b.rrf:.2f} "
          f"| title {b.cov_title:.2f} | snippet {b.cov_snippet:.2f} "
          f"| url {b.cov_url:.2f} | phrases {b.np_bonus:.2f}")

print("\ntimings (ms):", {k: round(v, 1) for k, v in response.timings_ms.items()})
