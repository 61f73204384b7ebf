"""Filtering, scoring and rank fusion of per-query search results.

The final order combines reciprocal rank fusion across the refined-query
result lists with weighted domain-keyword coverage of title, snippet and url,
plus a bonus for query noun phrases appearing verbatim. All weights, the
coverage threshold, and the RRF constant are configurable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence
from urllib.parse import urlsplit, urlunsplit

from ontosearch.backends import SearchResult
from ontosearch.ontology import DomainKeywordSet
from ontosearch.textanalysis import tokenize

RRF_CONSTANT = 60

_DEFAULT_PORTS = {"http": "80", "https": "443"}
_URL_SPLIT_RE = re.compile(r"[/._\-:?=&#]+")


@dataclass(frozen=True)
class RankWeights:
    rrf: float = 0.4
    title: float = 0.25
    snippet: float = 0.2
    url: float = 0.05
    phrase: float = 0.1

    def validate(self) -> None:
        for name, value in self.__dict__.items():
            if value < 0:
                raise ValueError(f"scoring weight {name} must be non-negative")


@dataclass(frozen=True)
class ScoreBreakdown:
    rrf: float
    cov_title: float
    cov_snippet: float
    cov_url: float
    np_bonus: float
    total: float

    def to_json_dict(self) -> dict:
        return {
            "rrf": self.rrf,
            "title": self.cov_title,
            "snippet": self.cov_snippet,
            "url": self.cov_url,
            "phrase": self.np_bonus,
        }


@dataclass(frozen=True)
class RankedResult:
    url: str
    title: str
    snippet: str
    breakdown: ScoreBreakdown
    final_rank: int

    def to_json_dict(self) -> dict:
        return {
            "rank": self.final_rank,
            "url": self.url,
            "title": self.title,
            "snippet": self.snippet,
            "score": self.breakdown.total,
            "breakdown": self.breakdown.to_json_dict(),
        }


def normalize_url(url: str) -> str:
    """Canonical form for deduplication: lowercase scheme/host, no default
    port, no trailing slash, no fragment; query string preserved.

    Anything unparseable comes back trimmed but otherwise verbatim.
    """
    trimmed = url.strip()
    try:
        parts = urlsplit(trimmed)
    except ValueError:
        return trimmed
    if not parts.scheme or not parts.netloc:
        return trimmed
    host = parts.netloc.lower()
    scheme = parts.scheme.lower()
    if host.endswith(":" + _DEFAULT_PORTS.get(scheme, "")):
        host = host.rsplit(":", 1)[0]
    path = parts.path.rstrip("/")
    return urlunsplit((scheme, host, path, parts.query, ""))


def _field_lemmas(text: str) -> tuple[set[str], str]:
    lemmas = [t.lemma for t in tokenize(text)]
    return set(lemmas), " " + " ".join(lemmas) + " "


def _keyword_present(keyword: str, lemma_set: set[str], joined: str) -> bool:
    if " " in keyword:
        return " " + keyword + " " in joined
    return keyword in lemma_set


def _coverage(
    keywords: DomainKeywordSet,
    lemma_set: set[str],
    joined: str,
    total_weight: float,
) -> float:
    if total_weight <= 0:
        return 0.0
    covered = sum(
        entry.weight
        for entry in keywords.entries()
        if _keyword_present(entry.keyword, lemma_set, joined)
    )
    return covered / total_weight


def filter_results(
    results: Sequence[SearchResult],
    keywords: DomainKeywordSet,
    theta: int = 1,
    k_min: int = 5,
    exclude_terms: Iterable[str] = (),
) -> list[SearchResult]:
    """Keep results whose title+snippet contain at least ``theta`` distinct
    domain keywords, ignoring ``exclude_terms`` (typically the anchor terms
    every result trivially repeats). If fewer than ``k_min`` survive, rejects
    are backfilled in backend-rank order.
    """
    if theta < 0 or k_min < 0:
        raise ValueError("theta and k_min must be >= 0")
    excluded = set(exclude_terms)
    kept: list[SearchResult] = []
    rejected: list[SearchResult] = []
    for result in results:
        lemma_set, joined = _field_lemmas(f"{result.title} {result.snippet}")
        hits = sum(
            1
            for entry in keywords.entries()
            if entry.keyword not in excluded
            and _keyword_present(entry.keyword, lemma_set, joined)
        )
        (kept if hits >= theta else rejected).append(result)
    if len(kept) < k_min and rejected:
        rejected.sort(key=lambda r: (r.backend_rank, r.query_id))
        kept.extend(rejected[: k_min - len(kept)])
    return kept


def score_result(
    result: SearchResult,
    keywords: DomainKeywordSet,
    noun_phrases: Sequence[str],
    weights: RankWeights = RankWeights(),
    rrf: float = 0.0,
    extra_snippet_text: str = "",
) -> ScoreBreakdown:
    """Weighted keyword coverage of title/snippet/url plus noun-phrase bonus.

    Each coverage component is the weight sum of the distinct keywords present
    in that field over the weight sum of all keywords; url presence is tested
    on the url split at ``/ . - _`` boundaries.
    """
    total_weight = keywords.total_weight()

    title_set, title_joined = _field_lemmas(result.title)
    snippet_text = result.snippet
    if extra_snippet_text:
        snippet_text = f"{snippet_text} {extra_snippet_text}"
    snippet_set, snippet_joined = _field_lemmas(snippet_text)
    url_tokens = [t.lower() for t in _URL_SPLIT_RE.split(result.url) if t]
    url_set, url_joined = set(url_tokens), " " + " ".join(url_tokens) + " "

    cov_title = _coverage(keywords, title_set, title_joined, total_weight)
    cov_snippet = _coverage(keywords, snippet_set, snippet_joined, total_weight)
    cov_url = _coverage(keywords, url_set, url_joined, total_weight)

    text_joined = title_joined.rstrip() + snippet_joined
    matched_phrases = sum(1 for p in noun_phrases if p and " " + p + " " in text_joined)
    np_bonus = matched_phrases / len(noun_phrases) if noun_phrases else 0.0

    total = (
        weights.rrf * rrf
        + weights.title * cov_title
        + weights.snippet * cov_snippet
        + weights.url * cov_url
        + weights.phrase * np_bonus
    )
    return ScoreBreakdown(
        rrf=rrf,
        cov_title=cov_title,
        cov_snippet=cov_snippet,
        cov_url=cov_url,
        np_bonus=np_bonus,
        total=total,
    )


def raw_rrf_scores(
    per_query: Mapping[int, Sequence[SearchResult]],
    rrf_constant: int = RRF_CONSTANT,
) -> dict[str, float]:
    """Reciprocal-rank-fusion mass per normalized url: sum of 1/(c + rank)."""
    raw: dict[str, float] = {}
    for query_id in sorted(per_query):
        for result in per_query[query_id]:
            key = normalize_url(result.url)
            raw[key] = raw.get(key, 0.0) + 1.0 / (rrf_constant + result.backend_rank)
    return raw


def fuse_and_rank(
    per_query: Mapping[int, Sequence[SearchResult]],
    keywords: DomainKeywordSet,
    noun_phrases: Sequence[str],
    weights: RankWeights = RankWeights(),
    k_out: int = 20,
    rrf_constant: int = RRF_CONSTANT,
    extra_text_by_url: Mapping[str, str] | None = None,
) -> list[RankedResult]:
    """Merge per-refined-query result lists into one ranked list.

    Documents are deduplicated by normalized url (keeping the longest snippet
    seen); raw RRF sums 1/(c + rank) over the lists each document appears in
    and is normalized by the best raw value; survivors are scored and sorted
    by total descending with normalized-url ties ascending.
    """
    raw_rrf = raw_rrf_scores(per_query, rrf_constant)
    best_meta: dict[str, SearchResult] = {}
    for query_id in sorted(per_query):
        for result in per_query[query_id]:
            key = normalize_url(result.url)
            cur = best_meta.get(key)
            if cur is None or len(result.snippet) > len(cur.snippet):
                best_meta[key] = result

    if not raw_rrf:
        return []
    max_rrf = max(raw_rrf.values())

    scored: list[tuple[float, str, RankedResult]] = []
    for key, raw in raw_rrf.items():
        result = best_meta[key]
        extra = (extra_text_by_url or {}).get(key, "")
        breakdown = score_result(
            result, keywords, noun_phrases, weights,
            rrf=raw / max_rrf, extra_snippet_text=extra,
        )
        scored.append((breakdown.total, key, RankedResult(
            url=key, title=result.title, snippet=result.snippet,
            breakdown=breakdown, final_rank=0,
        )))

    scored.sort(key=lambda item: (-item[0], item[1]))
    return [
        RankedResult(
            url=entry.url, title=entry.title, snippet=entry.snippet,
            breakdown=entry.breakdown, final_rank=rank,
        )
        for rank, (_total, _key, entry) in enumerate(scored[:k_out], start=1)
    ]
