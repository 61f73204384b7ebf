#!/usr/bin/env python3
"""Stage 1 walkthrough: what the analyzer makes of a raw query.

Shows tokenization, POS tagging, noun-phrase chunking, stop-word removal,
anchor detection and location classification for a few sample queries.
"""

from ontosearch.config import bundled_data_dir
from ontosearch.ontology import parse_turtle
from ontosearch.textanalysis import Analyzer, TagLexicon, load_stoplist

data = bundled_data_dir()
graph = parse_turtle((data / "university.ttl").read_text(encoding="utf-8"))
analyzer = Analyzer(
    TagLexicon.load(data / "tags.lex"),
    load_stoplist(data / "stopwords.txt"),
    individual_labels=graph.individual_labels(),
)

QUERIES = [
    "list the teaching staff in anna university",
    "colleges for doing M.B.A",
    "How far is tagore university located from anna nagar",
    "last date to apply for M.S in Stanford university",
]

for raw in QUERIES:
    analyzed = analyzer.analyze(raw)
    print("=" * 72)
    print("query:         ", raw)
    print("tagged:        ", " ".join(f"{t.tag}/{t.lemma}" for t in analyzed.tokens))
    print("noun phrases:  ", " | ".join(np.text for np in analyzed.noun_phrases))
    print("content terms: ", " ".join(analyzed.content_terms))
    print("anchors:       ", " ".join(analyzed.anchor_terms) or "(none)")
    if analyzed.is_location_query:
        print("location query:", "yes ->", " ".join(analyzed.location_terms))
    else:
        print("location query: no")
print("=" * 72)
print("""
Anchors come from two places: chunks that match an ontology individual label
(like "anna university") and chunks containing proper-noun tags. Anchor terms
are pinned: the expansion stage never substitutes them.
""")
