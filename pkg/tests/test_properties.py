"""Property suites: BM25 vs brute force, RRF monotonicity, scaling invariance,
Turtle round-trips, metric bounds, tokenizer totality."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ontosearch.backends import (
    BM25_B,
    BM25_K1,
    CorpusBackend,
    SearchResult,
    bm25_idf,
    build_corpus_index,
)
from ontosearch.evaluation import precision, relative_recall
from ontosearch.ontology import DomainKeywordSet, KeywordEntry, parse_turtle, serialize_turtle
from ontosearch.ranking import (
    RankWeights,
    fuse_and_rank,
    normalize_url,
    raw_rrf_scores,
)
from ontosearch.refinement import Expansion, RefinedQuery
from ontosearch.textanalysis import remove_stop_words, tokenize

VOCAB = ["faculty", "staff", "fees", "hostel", "anna", "university", "exam", "library"]

words = st.sampled_from(VOCAB)
documents = st.lists(words, min_size=1, max_size=12)


def brute_force_bm25(docs, query_terms):
    """Independent BM25 oracle: no inverted index, rescans every document."""
    n_docs = len(docs)
    avg_len = sum(len(d) for d in docs) / n_docs
    scores = {}
    for doc_id, doc in enumerate(docs):
        score = 0.0
        for term in query_terms:
            tf = doc.count(term)
            if tf == 0:
                continue
            df = sum(1 for d in docs if term in d)
            idf = math.log(1.0 + (n_docs - df + 0.5) / (df + 0.5))
            norm = BM25_K1 * (1 - BM25_B + BM25_B * len(doc) / avg_len)
            score += idf * tf * (BM25_K1 + 1) / (tf + norm)
        if score > 0:
            scores[doc_id] = score
    return scores


def query_of(terms, qid=0):
    return RefinedQuery(
        id=qid, terms=tuple(terms), prior=1.0,
        provenance={t: Expansion(t, "self", 1.0) for t in terms},
    )


class TestBM25Equivalence:
    @settings(max_examples=200, deadline=None)
    @given(
        docs=st.lists(documents, min_size=1, max_size=20),
        query=st.lists(words, min_size=1, max_size=4, unique=True),
    )
    def test_matches_brute_force(self, docs, query):
        rows = [(f"http://d.example/{i}", "", " ".join(doc)) for i, doc in enumerate(docs)]
        backend = CorpusBackend(build_corpus_index(rows))
        ours = backend.score_all(query)
        expected = brute_force_bm25(docs, query)
        assert set(ours) == set(expected)
        for doc_id, score in expected.items():
            assert ours[doc_id] == pytest.approx(score)

    @settings(max_examples=200, deadline=None)
    @given(
        docs=st.lists(documents, min_size=1, max_size=20),
        query=st.lists(words, min_size=1, max_size=4, unique=True),
        k=st.integers(min_value=1, max_value=10),
    )
    def test_top_k_matches_brute_force(self, docs, query, k):
        rows = [(f"http://d.example/{i}", "", " ".join(doc)) for i, doc in enumerate(docs)]
        backend = CorpusBackend(build_corpus_index(rows))
        results = backend.search(query_of(query), k)
        expected = brute_force_bm25(docs, query)
        order = sorted(expected.items(), key=lambda kv: (-kv[1], f"http://d.example/{kv[0]}"))
        assert [r.url for r in results] == [f"http://d.example/{i}" for i, _ in order[:k]]

    @settings(max_examples=100, deadline=None)
    @given(n=st.integers(min_value=1, max_value=200), df=st.integers(min_value=0, max_value=200))
    def test_idf_non_negative(self, n, df):
        assert bm25_idf(n, min(df, n)) >= 0


def result_lists(draw_ranks=st.integers(min_value=1, max_value=10)):
    return st.dictionaries(
        keys=st.integers(min_value=0, max_value=4),
        values=st.lists(
            st.tuples(st.integers(min_value=0, max_value=9), draw_ranks),
            max_size=8,
            unique_by=lambda t: t,
        ),
        max_size=4,
    )


def to_search_results(lists):
    per_query = {}
    for qid, pairs in lists.items():
        seen_ranks = set()
        results = []
        for doc, rank in sorted(pairs, key=lambda t: t[1]):
            if rank in seen_ranks:
                continue
            seen_ranks.add(rank)
            results.append(SearchResult(
                url=f"http://d.example/{doc}", title=f"doc {doc}",
                snippet="", backend_rank=rank, query_id=qid,
            ))
        per_query[qid] = results
    return per_query


class TestRRF:
    @settings(max_examples=200, deadline=None)
    @given(lists=result_lists())
    def test_rank_improvement_never_decreases_raw_rrf(self, lists):
        per_query = to_search_results(lists)
        flat = [(qid, i) for qid, rs in per_query.items() for i in range(len(rs))]
        if not flat:
            return
        qid, i = flat[0]
        target = per_query[qid][i]
        before = raw_rrf_scores(per_query).get(normalize_url(target.url), 0.0)

        improved = dict(per_query)
        better_rank = max(1, target.backend_rank - 1)
        taken = {r.backend_rank for j, r in enumerate(improved[qid]) if j != i}
        if better_rank in taken:
            return
        new_list = list(improved[qid])
        new_list[i] = SearchResult(
            url=target.url, title=target.title, snippet=target.snippet,
            backend_rank=better_rank, query_id=qid,
        )
        improved[qid] = new_list
        after = raw_rrf_scores(improved).get(normalize_url(target.url), 0.0)
        assert after >= before

    @settings(max_examples=100, deadline=None)
    @given(lists=result_lists())
    def test_fused_urls_unique(self, lists):
        per_query = to_search_results(lists)
        keywords = DomainKeywordSet([KeywordEntry("doc", "s", "self", 1.0, True)])
        ranked = fuse_and_rank(per_query, keywords, [])
        urls = [r.url for r in ranked]
        assert len(urls) == len(set(urls))


class TestScalingInvariance:
    @settings(max_examples=100, deadline=None)
    @given(
        lists=result_lists(),
        scale=st.floats(min_value=0.01, max_value=100, allow_nan=False),
    )
    def test_positive_weight_scaling_preserves_order(self, lists, scale):
        per_query = to_search_results(lists)
        keywords = DomainKeywordSet([
            KeywordEntry("doc", "s", "self", 1.0, True),
            KeywordEntry("0", "s", "parent", 0.6, True),
            KeywordEntry("3", "s", "sibling", 0.5, True),
        ])
        base = RankWeights()
        scaled = RankWeights(
            rrf=base.rrf * scale, title=base.title * scale, snippet=base.snippet * scale,
            url=base.url * scale, phrase=base.phrase * scale,
        )
        order_base = [r.url for r in fuse_and_rank(per_query, keywords, ["doc 3"], weights=base)]
        order_scaled = [r.url for r in fuse_and_rank(per_query, keywords, ["doc 3"], weights=scaled)]
        assert order_base == order_scaled


LABEL_WORDS = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta"]


@st.composite
def turtle_documents(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    lines = [
        "@prefix : <http://gen.example#> .",
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .",
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .",
    ]
    for i in range(n):
        parts = [f":C{i} a owl:Class"]
        possible_parents = list(range(i))
        if possible_parents:
            parents = draw(st.lists(st.sampled_from(possible_parents), max_size=2, unique=True))
            for p in parents:
                parts.append(f"rdfs:subClassOf :C{p}")
        n_labels = draw(st.integers(min_value=1, max_value=2))
        labels = draw(st.lists(st.sampled_from(LABEL_WORDS), min_size=n_labels,
                               max_size=n_labels, unique=True))
        parts.append("rdfs:label " + ", ".join(f'"{w}"' for w in labels))
        lines.append(" ; ".join(parts) + " .")
    return "\n".join(lines)


def graph_shape(graph):
    return {
        iri: (c.kind, c.labels, tuple(sorted(c.parents)), tuple(sorted(c.equivalents)))
        for iri, c in graph.concepts.items()
    }


class TestTurtleRoundTrip:
    @settings(max_examples=100, deadline=None)
    @given(doc=turtle_documents())
    def test_parse_serialize_parse(self, doc):
        graph = parse_turtle(doc)
        again = parse_turtle(serialize_turtle(graph))
        assert graph_shape(again) == graph_shape(graph)


urls = st.text(
    alphabet="abcdefghij:/._-", min_size=1, max_size=24
).map(lambda s: "http://" + s if not s.startswith("http") else s)


class TestMetricBounds:
    @settings(max_examples=200, deadline=None)
    @given(retrieved=st.lists(urls, max_size=12), relevant=st.sets(urls, max_size=12))
    def test_precision_bounds(self, retrieved, relevant):
        assert 0.0 <= precision(retrieved, relevant) <= 1.0

    @settings(max_examples=200, deadline=None)
    @given(retrieved=st.lists(urls, max_size=12), relevant=st.sets(urls, min_size=1, max_size=12))
    def test_recall_bounds(self, retrieved, relevant):
        assert 0.0 <= relative_recall(retrieved, relevant) <= 1.0


class TestTextTotality:
    @settings(max_examples=300, deadline=None)
    @given(raw=st.text(max_size=80))
    def test_tokenize_total_and_clean(self, raw):
        for token in tokenize(raw):
            assert token.text
            assert not any(ch.isspace() for ch in token.text)
            assert token.lemma == token.text.lower()

    @settings(max_examples=200, deadline=None)
    @given(raw=st.text(alphabet="abc .", max_size=40), stops=st.sets(st.sampled_from(["a", "b", "c", "ab"])))
    def test_stop_removal_is_subsequence(self, raw, stops):
        tokens = tokenize(raw)
        kept = remove_stop_words(tokens, frozenset(stops))
        indices = [t.index for t in kept]
        assert indices == sorted(indices)
        assert all(t in tokens for t in kept)

    @settings(max_examples=200, deadline=None)
    @given(raw=st.text(max_size=60))
    def test_tagging_total(self, raw, tag_lexicon):
        from ontosearch.textanalysis import pos_tag

        tagged = pos_tag(tokenize(raw), tag_lexicon)
        assert all(t.tag is not None for t in tagged)


class TestNormalizeUrlProperties:
    @settings(max_examples=300, deadline=None)
    @given(url=st.text(max_size=60))
    def test_total_and_idempotent(self, url):
        once = normalize_url(url)
        assert normalize_url(once) == once
