#!/usr/bin/env python3
"""Stage 2 walkthrough: from content terms to refined queries.

Shows the WordNet lookups, the ontology keyword harvest with relation
weights, the per-term expansion map, and the prior-ordered refined queries.
"""

from ontosearch.config import load_config
from ontosearch.engine import SearchEngine

engine = SearchEngine(load_config(None))
lexicon = engine.lexicon

print("--- lexicon lookups ---------------------------------------------")
for word, pos in (("provide", "verb"), ("doing", "verb"), ("hostel", "noun")):
    bases = lexicon.base_forms(word, pos)
    synonyms = [e.lemma for e in lexicon.synonyms(word, pos)]
    print(f"{word:>8} ({pos}): base forms {bases}, synonyms {synonyms}")

QUERY = "Provide the Faculties in Computer Science Department Anna University"
analyzed, keywords, emap, refined = engine.expand(QUERY)

print("\n--- domain keywords (top 15 by weight) ---------------------------")
for entry in keywords.entries()[:15]:
    print(f"  {entry.weight:.2f}  {entry.relation:<10} {entry.keyword}")

print("\n--- expansion map ------------------------------------------------")
for term, expansions in emap.items():
    rendered = ", ".join(f"{e.lemma}[{e.source[0]}:{e.weight:.2f}]" for e in expansions)
    print(f"  {term:>10} -> {rendered}")

print("\n--- refined queries, best prior first -----------------------------")
for query in refined:
    print(f"  [{query.prior:.3f}] {query.text}")

print("""
The first query is always the untouched one (prior 1.0). Anchor terms
(computer science department, anna university) appear verbatim in every
refined query; only "faculties" was open for substitution.
""")
