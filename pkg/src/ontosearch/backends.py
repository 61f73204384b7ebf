"""Pluggable search backends and page-metadata extraction.

Two backends execute refined queries: an offline BM25 index over a fixture
corpus (deterministic, used by tests and demos) and a thin JSON-over-HTTP
client with a configurable endpoint template and response mapping, so any
live search API can be plugged in without code changes.
"""

from __future__ import annotations

import html
import json
import math
import re
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Protocol, Sequence

import requests

from ontosearch.refinement import RefinedQuery
from ontosearch.textanalysis import tokenize

BM25_K1 = 1.2
BM25_B = 0.75


class BackendError(Exception):
    """Search backend failure for one refined query; carries the query id."""

    def __init__(self, message: str, query_id: int | None = None):
        super().__init__(message)
        self.query_id = query_id


@dataclass(frozen=True)
class SearchResult:
    url: str
    title: str
    snippet: str
    backend_rank: int
    query_id: int


@dataclass(frozen=True)
class PageMeta:
    title: str = ""
    meta_keywords: tuple[str, ...] = ()
    meta_description: str = ""


class SearchBackend(Protocol):
    def search(self, query: RefinedQuery, k: int) -> list[SearchResult]: ...


# --- HTML metadata extraction ----------------------------------------------

_TITLE_RE = re.compile(r"<title[^>]*>(.*?)</title>", re.IGNORECASE | re.DOTALL)
_META_RE = re.compile(r"<meta\b([^>]*)>", re.IGNORECASE | re.DOTALL)
_ATTR_RE = re.compile(r"""([a-zA-Z-]+)\s*=\s*("([^"]*)"|'([^']*)'|([^\s"'>]+))""", re.DOTALL)
_TAG_RE = re.compile(r"<[^>]+>")


def _collapse(text: str) -> str:
    return " ".join(text.split())


def extract_page_meta(page: str | bytes) -> PageMeta:
    """Best-effort scan for <title> and keywords/description meta tags.

    Tolerant of attribute order, quote style, and tag-name case; never raises,
    returning empty fields for anything it cannot find.
    """
    if isinstance(page, bytes):
        page = page.decode("utf-8", errors="replace")

    title = ""
    m = _TITLE_RE.search(page)
    if m:
        title = _collapse(html.unescape(_TAG_RE.sub(" ", m.group(1))))

    keywords: tuple[str, ...] = ()
    description = ""
    for meta in _META_RE.finditer(page):
        attrs = {
            name.lower(): html.unescape(q1 or q2 or bare)
            for name, _, q1, q2, bare in _ATTR_RE.findall(meta.group(1))
        }
        name = attrs.get("name", "").lower()
        content = attrs.get("content", "")
        if name == "keywords" and not keywords:
            keywords = tuple(
                kw.strip().lower() for kw in content.split(",") if kw.strip()
            )
        elif name == "description" and not description:
            description = _collapse(content)
    return PageMeta(title=title, meta_keywords=keywords, meta_description=description)


def strip_html_text(page: str) -> str:
    """Visible text of an HTML page: tags removed, entities unescaped."""
    no_script = re.sub(
        r"<(script|style)\b.*?</\1>", " ", page, flags=re.IGNORECASE | re.DOTALL
    )
    return _collapse(html.unescape(_TAG_RE.sub(" ", no_script)))


# --- Offline BM25 corpus backend --------------------------------------------

@dataclass(frozen=True)
class CorpusDocument:
    doc_id: int
    url: str
    title: str
    terms: tuple[str, ...]
    snippet: str = ""
    meta_keywords: tuple[str, ...] = ()


@dataclass(frozen=True)
class CorpusIndex:
    """Immutable inverted index; stop words are retained (query side filters)."""

    documents: tuple[CorpusDocument, ...]
    postings: Mapping[str, tuple[tuple[int, int], ...]]  # term -> ((doc_id, tf), ...)
    doc_lengths: tuple[int, ...]
    avg_doc_length: float

    @property
    def N(self) -> int:
        return len(self.documents)


def index_terms(text: str) -> tuple[str, ...]:
    """Index-side tokenization: identical to query tokenization, lowercased."""
    return tuple(tok.lemma for tok in tokenize(text))


def build_corpus_index(docs: Sequence[tuple]) -> CorpusIndex:
    """Build an index from (url, title, body[, snippet[, meta_keywords]]) rows."""
    seen_urls: set[str] = set()
    documents: list[CorpusDocument] = []
    postings: dict[str, list[tuple[int, int]]] = {}
    lengths: list[int] = []

    for doc_id, row in enumerate(docs):
        url, title, body = row[0], row[1], row[2]
        snippet = row[3] if len(row) > 3 else ""
        meta_keywords = tuple(row[4]) if len(row) > 4 else ()
        if url in seen_urls:
            raise ValueError(f"duplicate corpus url: {url}")
        seen_urls.add(url)
        terms = index_terms(f"{title} {body}")
        if not snippet:
            snippet = _collapse(body)[:200]
        documents.append(CorpusDocument(doc_id, url, title, terms, snippet, meta_keywords))
        lengths.append(len(terms))
        counts: dict[str, int] = {}
        for term in terms:
            counts[term] = counts.get(term, 0) + 1
        for term, tf in counts.items():
            postings.setdefault(term, []).append((doc_id, tf))

    frozen = {term: tuple(entries) for term, entries in postings.items()}
    avg = sum(lengths) / len(lengths) if lengths else 0.0
    return CorpusIndex(
        documents=tuple(documents),
        postings=frozen,
        doc_lengths=tuple(lengths),
        avg_doc_length=avg,
    )


def bm25_idf(n_docs: int, df: int) -> float:
    """Non-negative BM25 idf: ln(1 + (N - df + 0.5) / (df + 0.5))."""
    return math.log(1.0 + (n_docs - df + 0.5) / (df + 0.5))


class CorpusBackend:
    """BM25 (k1=1.2, b=0.75) top-k retrieval over a CorpusIndex."""

    def __init__(self, index: CorpusIndex, k1: float = BM25_K1, b: float = BM25_B):
        self.index = index
        self.k1 = k1
        self.b = b

    def score_all(self, terms: Sequence[str]) -> dict[int, float]:
        """BM25 score per doc for the given query terms (zero scores omitted)."""
        idx = self.index
        if idx.N == 0:
            return {}
        scores: dict[int, float] = {}
        for term in terms:
            entries = idx.postings.get(term, ())
            if not entries:
                continue
            idf = bm25_idf(idx.N, len(entries))
            for doc_id, tf in entries:
                norm = self.k1 * (1 - self.b + self.b * idx.doc_lengths[doc_id] / idx.avg_doc_length)
                scores[doc_id] = scores.get(doc_id, 0.0) + idf * tf * (self.k1 + 1) / (tf + norm)
        return scores

    def search(self, query: RefinedQuery, k: int = 10) -> list[SearchResult]:
        # Multi-word expansion terms contribute each of their words.
        terms = [w for term in query.terms for w in term.split()]
        scores = self.score_all(terms)
        ranked = sorted(scores.items(), key=lambda kv: (-kv[1], self.index.documents[kv[0]].url))
        results = []
        for rank, (doc_id, _score) in enumerate(ranked[:k], start=1):
            doc = self.index.documents[doc_id]
            results.append(SearchResult(
                url=doc.url, title=doc.title, snippet=doc.snippet,
                backend_rank=rank, query_id=query.id,
            ))
        return results


def load_corpus_manifest(path: str | Path) -> list[tuple]:
    """Read a corpus manifest: JSON array of {"url", "title", "file"} entries.

    Document files are HTML or plain text, relative to the manifest. HTML
    contributes stripped body text, a meta-description snippet when present,
    and meta keywords.
    """
    manifest_path = Path(path)
    try:
        entries = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{manifest_path}: invalid manifest JSON: {exc}") from exc
    if not isinstance(entries, list):
        raise ValueError(f"{manifest_path}: manifest must be a JSON array")

    docs: list[tuple] = []
    for i, entry in enumerate(entries):
        try:
            url, title, rel = entry["url"], entry["title"], entry["file"]
        except (TypeError, KeyError) as exc:
            raise ValueError(f"{manifest_path}: entry {i} missing {exc}") from exc
        raw = (manifest_path.parent / rel).read_text(encoding="utf-8")
        if rel.lower().endswith((".html", ".htm")):
            meta = extract_page_meta(raw)
            body = strip_html_text(raw)
            docs.append((url, title, body, meta.meta_description, meta.meta_keywords))
        else:
            docs.append((url, title, _collapse(raw)))
    return docs


# --- Live HTTP backend -------------------------------------------------------

@dataclass(frozen=True)
class LiveBackendConfig:
    endpoint_template: str  # contains {q} and optionally {k}
    timeout_ms: int = 10_000
    results_path: str = "results"
    url_field: str = "url"
    title_field: str = "title"
    snippet_field: str = "snippet"


def _walk(data, dotted_path: str):
    if not dotted_path:
        return data
    for key in dotted_path.split("."):
        if not isinstance(data, dict) or key not in data:
            return None
        data = data[key]
    return data


class LiveBackend:
    """One HTTP GET per refined query against a templated JSON search endpoint.

    Safe for concurrent callers: requests are issued through the module-level
    API (no shared Session) unless an explicit session is injected.
    """

    RETRIES = 1

    def __init__(self, config: LiveBackendConfig, session: requests.Session | None = None):
        self.config = config
        self.session = session

    def _request(self, url: str) -> dict:
        get = self.session.get if self.session is not None else requests.get
        last_error: Exception | None = None
        for attempt in range(self.RETRIES + 1):
            try:
                response = get(url, timeout=self.config.timeout_ms / 1000.0)
                response.raise_for_status()
                return response.json()
            except (requests.RequestException, ValueError) as exc:
                last_error = exc
                if attempt < self.RETRIES:
                    time.sleep(0.1 * (attempt + 1))
        raise last_error  # type: ignore[misc]

    def search(self, query: RefinedQuery, k: int = 10) -> list[SearchResult]:
        from urllib.parse import quote_plus

        url = (self.config.endpoint_template
               .replace("{q}", quote_plus(query.text))
               .replace("{k}", str(k)))
        try:
            payload = self._request(url)
        except Exception as exc:
            raise BackendError(f"search request failed: {exc}", query_id=query.id) from exc

        rows = _walk(payload, self.config.results_path)
        if not isinstance(rows, list):
            raise BackendError(
                f"response has no list at {self.config.results_path!r}", query_id=query.id
            )
        usable = [row for row in rows if _walk(row, self.config.url_field)]
        results = []
        for rank, row in enumerate(usable[:k], start=1):
            results.append(SearchResult(
                url=str(_walk(row, self.config.url_field)),
                title=str(_walk(row, self.config.title_field) or ""),
                snippet=str(_walk(row, self.config.snippet_field) or ""),
                backend_rank=rank,
                query_id=query.id,
            ))
        return results
