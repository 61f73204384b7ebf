"""Pipeline orchestration: one engine object wires analysis, expansion,
retrieval and ranking together behind a single ``handle_search`` call.

Engine state (lexicon, concept graph, corpus index) is loaded once and is
immutable afterwards, so any number of concurrent requests may share it.
Per-refined-query backend calls run concurrently; the fused ranking is
independent of their completion order.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

from ontosearch.backends import (
    BackendError,
    CorpusBackend,
    SearchResult,
    build_corpus_index,
    load_corpus_manifest,
    LiveBackend,
)
from ontosearch.config import Config
from ontosearch.ontology import (
    DomainKeywordSet,
    KeywordEntry,
    extract_domain_keywords,
    match_concepts,
    merge_graphs,
    parse_turtle,
)
from ontosearch.ranking import RankedResult, filter_results, fuse_and_rank
from ontosearch.refinement import (
    ExpansionMap,
    RefinedQuery,
    build_expansion_map,
    generate_refined_queries,
)
from ontosearch.textanalysis import AnalyzedQuery, Analyzer, TagLexicon, load_stoplist
from ontosearch.wordnet import load_wordnet

from pathlib import Path


class EmptyQueryError(ValueError):
    """Raised for an empty or whitespace-only query (a client error)."""


class BackendUnavailableError(RuntimeError):
    """Raised when every refined query failed against the backend."""


@dataclass(frozen=True)
class SearchResponse:
    query: str
    analysis: AnalyzedQuery
    domain_keywords: DomainKeywordSet
    expansions: ExpansionMap
    refined_queries: tuple[RefinedQuery, ...]
    results: tuple[RankedResult, ...]
    timings_ms: Mapping[str, float]
    failed_queries: tuple[int, ...] = ()

    def to_json_dict(self) -> dict:
        analysis = self.analysis
        return {
            "query": self.query,
            "analysis": {
                "tokens": [
                    {"text": t.text, "lemma": t.lemma, "tag": t.tag}
                    for t in analysis.tokens
                ],
                "noun_phrases": [np.text for np in analysis.noun_phrases],
                "content_terms": list(analysis.content_terms),
                "anchor_terms": list(analysis.anchor_terms),
                "is_location_query": analysis.is_location_query,
                "location_terms": list(analysis.location_terms),
            },
            "domain_keywords": self.domain_keywords.to_json_dict(),
            "expansions": {"terms": self.expansions.to_json_dict()},
            "refined_queries": [q.to_json_dict() for q in self.refined_queries],
            "results": [r.to_json_dict() for r in self.results],
            "timings": dict(self.timings_ms),
            "failed_queries": list(self.failed_queries),
        }


class SearchEngine:
    """Loaded pipeline: immutable after construction, safe for concurrent use."""

    def __init__(self, config: Config):
        self.config = config
        paths = config.paths
        self.lexicon = load_wordnet(paths.wordnet_dir)
        self.graph = merge_graphs([
            parse_turtle(Path(p).read_text(encoding="utf-8")) for p in paths.ontologies
        ])
        self.analyzer = Analyzer(
            tag_lexicon=TagLexicon.load(paths.tag_lexicon),
            stoplist=load_stoplist(paths.stoplist),
            individual_labels=self.graph.individual_labels(),
        )
        if config.backend == "corpus":
            self.corpus_index = build_corpus_index(load_corpus_manifest(paths.corpus_manifest))
            self.backend = CorpusBackend(self.corpus_index)
        else:
            self.corpus_index = None
            self.backend = LiveBackend(config.live)

    # -- pipeline stages ----------------------------------------------------

    def analyze(self, query: str) -> AnalyzedQuery:
        return self.analyzer.analyze(query)

    def _base_form_variants(self, term: str) -> list[str]:
        variants: list[str] = []
        for pos in ("noun", "verb"):
            for form in self.lexicon.base_forms(term, pos):
                if form not in variants:
                    variants.append(form.replace("_", " "))
        return variants

    def keywords_for(self, analyzed: AnalyzedQuery) -> DomainKeywordSet:
        matches = match_concepts(
            terms=analyzed.content_terms,
            phrases=[np.lemmas() for np in analyzed.noun_phrases],
            graph=self.graph,
            base_forms=self._base_form_variants,
        )
        keywords = extract_domain_keywords(
            matches, self.graph,
            depth=self.config.pipeline.depth,
            include_siblings=self.config.pipeline.include_siblings,
        )
        if analyzed.is_location_query and analyzed.location_terms:
            keywords = keywords.merged_with(
                KeywordEntry(term, "location-query", "self", 1.0, is_label=True)
                for term in analyzed.location_terms
            )
        return keywords

    def expand(self, query: str) -> tuple[AnalyzedQuery, DomainKeywordSet, ExpansionMap, list[RefinedQuery]]:
        if not query.strip():
            raise EmptyQueryError("query must not be empty")
        analyzed = self.analyze(query)
        keywords = self.keywords_for(analyzed)
        emap = build_expansion_map(
            analyzed, self.lexicon, keywords, e_max=self.config.pipeline.e_max
        )
        refined = generate_refined_queries(emap, analyzed, q_max=self.config.pipeline.q_max)
        return analyzed, keywords, emap, refined

    def _run_searches(
        self, refined: Sequence[RefinedQuery], k: int
    ) -> tuple[dict[int, list[SearchResult]], list[int]]:
        per_query: dict[int, list[SearchResult]] = {}
        failed: list[int] = []

        def run_one(query: RefinedQuery):
            return query.id, self.backend.search(query, k)

        with ThreadPoolExecutor(max_workers=min(8, max(1, len(refined)))) as pool:
            futures = [pool.submit(run_one, q) for q in refined]
            for query, future in zip(refined, futures):
                try:
                    qid, results = future.result()
                    per_query[qid] = results
                except BackendError as exc:
                    failed.append(exc.query_id if exc.query_id is not None else query.id)
        return per_query, sorted(failed)

    def handle_search(self, query: str, k: int | None = None) -> SearchResponse:
        """Run the full pipeline; partial backend failures degrade gracefully."""
        pipe = self.config.pipeline
        k_per_query = k or pipe.k_per_query
        t_start = time.perf_counter()

        t0 = time.perf_counter()
        analyzed, keywords, emap, refined = self.expand(query)
        t_expand = time.perf_counter() - t0

        t0 = time.perf_counter()
        per_query, failed = self._run_searches(refined, k_per_query)
        t_search = time.perf_counter() - t0
        if refined and failed and len(failed) == len(refined):
            raise BackendUnavailableError(
                f"all {len(refined)} refined queries failed against the backend"
            )

        t0 = time.perf_counter()
        anchor_terms = set(analyzed.anchor_terms)
        filtered = {
            qid: filter_results(
                results, keywords,
                theta=pipe.theta, k_min=pipe.k_min, exclude_terms=anchor_terms,
            )
            for qid, results in per_query.items()
        }
        extra_text = None
        if pipe.deep_meta and self.corpus_index is not None:
            from ontosearch.ranking import normalize_url
            extra_text = {
                normalize_url(doc.url): " ".join(doc.meta_keywords)
                for doc in self.corpus_index.documents
                if doc.meta_keywords
            }
        results = fuse_and_rank(
            filtered, keywords,
            noun_phrases=[np.content_text for np in analyzed.noun_phrases],
            weights=self.config.weights,
            k_out=pipe.k_out,
            rrf_constant=pipe.rrf_constant,
            extra_text_by_url=extra_text,
        )
        t_rank = time.perf_counter() - t0

        timings = {
            "expand_ms": t_expand * 1000,
            "search_ms": t_search * 1000,
            "rank_ms": t_rank * 1000,
            "total_ms": (time.perf_counter() - t_start) * 1000,
        }
        return SearchResponse(
            query=query,
            analysis=analyzed,
            domain_keywords=keywords,
            expansions=emap,
            refined_queries=tuple(refined),
            results=tuple(results),
            timings_ms=timings,
            failed_queries=tuple(failed),
        )
