import json
import math
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

from ontosearch.backends import (
    BackendError,
    CorpusBackend,
    LiveBackend,
    LiveBackendConfig,
    bm25_idf,
    build_corpus_index,
    extract_page_meta,
    load_corpus_manifest,
)
from ontosearch.refinement import Expansion, RefinedQuery


def make_query(terms, qid=0):
    return RefinedQuery(
        id=qid,
        terms=tuple(terms),
        prior=1.0,
        provenance={t: Expansion(t, "self", 1.0) for t in terms},
    )


class TestBuildIndex:
    def test_empty_corpus(self):
        index = build_corpus_index([])
        assert index.N == 0
        backend = CorpusBackend(index)
        assert backend.search(make_query(["anything"]), 10) == []

    def test_posting_counts_match_hand_count(self):
        docs = [
            ("http://a.example/1", "one", "university fees and university hostel"),
            ("http://a.example/2", "two", "hostel food"),
            ("http://a.example/3", "three", "university placement"),
        ]
        index = build_corpus_index(docs)
        assert index.N == 3
        assert len(index.postings["university"]) == 2  # docs 1 and 3
        assert len(index.postings["hostel"]) == 2

    def test_term_frequencies(self):
        index = build_corpus_index([("http://a.example", "", "a a b")])
        assert dict(index.postings["a"]) == {0: 2}
        assert dict(index.postings["b"]) == {0: 1}
        assert index.doc_lengths == (3,)

    def test_duplicate_url_rejected(self):
        docs = [("http://a.example", "x", "one"), ("http://a.example", "y", "two")]
        with pytest.raises(ValueError, match="duplicate corpus url"):
            build_corpus_index(docs)

    def test_stop_words_retained(self):
        index = build_corpus_index([("http://a.example", "", "the staff of the university")])
        assert "the" in index.postings
        assert "of" in index.postings


class TestBM25Search:
    def test_single_doc_single_term(self):
        index = build_corpus_index([("http://a.example", "t", "faculty news")])
        results = CorpusBackend(index).search(make_query(["faculty"]), 10)
        assert len(results) == 1
        assert results[0].backend_rank == 1

    def test_absent_term_empty(self):
        index = build_corpus_index([("http://a.example", "t", "hostel fees")])
        assert CorpusBackend(index).search(make_query(["faculty"]), 10) == []

    def test_hand_computed_scores(self):
        """Two docs of length 4, tf(faculty)=2 vs 1, df=2, N=2.

        idf = ln(1 + (2 - 2 + 0.5) / (2 + 0.5)) = ln(1.2)
        norm = k1 * (1 - b + b * 4/4) = 1.2
        score(tf) = idf * tf * 2.2 / (tf + 1.2)
        """
        docs = [
            ("http://a.example/1", "", "faculty faculty hostel fees"),
            ("http://a.example/2", "", "faculty hostel fees placement"),
        ]
        backend = CorpusBackend(build_corpus_index(docs))
        scores = backend.score_all(["faculty"])
        idf = math.log(1.2)
        assert scores[0] == pytest.approx(idf * 2 * 2.2 / (2 + 1.2))
        assert scores[1] == pytest.approx(idf * 1 * 2.2 / (1 + 1.2))
        results = backend.search(make_query(["faculty"]), 10)
        assert [r.url for r in results] == ["http://a.example/1", "http://a.example/2"]

    def test_idf_non_negative(self):
        for n_docs in (1, 2, 5, 100):
            for df in range(0, n_docs + 1):
                assert bm25_idf(n_docs, df) >= 0

    def test_ranks_strictly_increasing_from_one(self):
        docs = [(f"http://a.example/{i}", "", f"faculty {'x ' * i}") for i in range(8)]
        results = CorpusBackend(build_corpus_index(docs)).search(make_query(["faculty"]), 5)
        assert [r.backend_rank for r in results] == [1, 2, 3, 4, 5]

    def test_irrelevant_doc_does_not_change_ranking(self):
        base = [
            ("http://a.example/1", "", "faculty faculty research"),
            ("http://a.example/2", "", "faculty hostel"),
        ]
        with_extra = base + [("http://a.example/3", "", "unrelated placement news")]
        query = make_query(["faculty"])
        before = [r.url for r in CorpusBackend(build_corpus_index(base)).search(query, 10)]
        after = [r.url for r in CorpusBackend(build_corpus_index(with_extra)).search(query, 10)]
        assert before == after

    def test_multiword_expansion_terms_split(self):
        index = build_corpus_index([("http://a.example", "", "teaching staff meeting")])
        results = CorpusBackend(index).search(make_query(["teaching staff"]), 10)
        assert len(results) == 1


class TestPageMeta:
    def test_title_and_keywords(self):
        html = '<title>Dept of CSE</title><meta name="keywords" content="anna university, faculty">'
        meta = extract_page_meta(html)
        assert meta.title == "Dept of CSE"
        assert meta.meta_keywords == ("anna university", "faculty")

    def test_empty_input(self):
        meta = extract_page_meta("")
        assert meta == extract_page_meta(b"")
        assert meta.title == ""
        assert meta.meta_keywords == ()
        assert meta.meta_description == ""

    def test_case_insensitive_tags(self):
        assert extract_page_meta("<TITLE>X</TITLE>").title == "X"

    def test_attribute_order_and_quotes(self):
        html = "<meta content='a fine page' name=description><META NAME=\"KEYWORDS\" content=one,two>"
        meta = extract_page_meta(html)
        assert meta.meta_description == "a fine page"
        assert meta.meta_keywords == ("one", "two")

    def test_malformed_never_raises(self):
        for garbage in ("<title>unclosed", "<meta name=", "\x00\xff<><>", "<<<<"):
            extract_page_meta(garbage)
        extract_page_meta(b"\xff\xfe garbage bytes \x00")

    def test_entities_unescaped(self):
        assert extract_page_meta("<title>Fees &amp; Hostel</title>").title == "Fees & Hostel"


class TestManifest:
    def test_bundled_manifest_loads(self, data_dir):
        docs = load_corpus_manifest(data_dir / "corpus" / "manifest.json")
        assert len(docs) == 50
        urls = [d[0] for d in docs]
        assert len(urls) == len(set(urls))
        index = build_corpus_index(docs)
        assert index.N == 50

    def test_html_docs_provide_snippet_and_keywords(self, data_dir):
        docs = load_corpus_manifest(data_dir / "corpus" / "manifest.json")
        with_snippets = [d for d in docs if len(d) > 3 and d[3]]
        assert with_snippets, "bundled corpus docs should carry meta descriptions"

    def test_missing_field_reports_entry(self, tmp_path):
        bad = tmp_path / "manifest.json"
        bad.write_text('[{"url": "http://x.example"}]')
        with pytest.raises(ValueError, match="entry 0"):
            load_corpus_manifest(bad)

    def test_invalid_json(self, tmp_path):
        bad = tmp_path / "manifest.json"
        bad.write_text("not json")
        with pytest.raises(ValueError, match="invalid manifest JSON"):
            load_corpus_manifest(bad)

    def test_plain_text_documents(self, tmp_path):
        (tmp_path / "notes.txt").write_text("plain text about hostel fees\nand deadlines")
        (tmp_path / "manifest.json").write_text(json.dumps([
            {"url": "http://t.example/notes", "title": "Notes", "file": "notes.txt"},
        ]))
        docs = load_corpus_manifest(tmp_path / "manifest.json")
        assert docs == [("http://t.example/notes", "Notes",
                         "plain text about hostel fees and deadlines")]
        index = build_corpus_index(docs)
        assert "hostel" in index.postings


class _SearchApiHandler(BaseHTTPRequestHandler):
    fail_first = False
    always_fail = False
    calls = 0

    def do_GET(self):
        cls = type(self)
        cls.calls += 1
        if cls.always_fail or (cls.fail_first and cls.calls == 1):
            self.send_response(500)
            self.end_headers()
            return
        payload = {
            "data": {
                "hits": [
                    {"link": "http://a.example/1", "name": "One", "text": "first hit"},
                    {"link": "http://a.example/2", "name": "Two", "text": "second hit"},
                    {"name": "no url, skipped"},
                    {"link": "http://a.example/3", "name": "Three", "text": "third hit"},
                ]
            }
        }
        body = json.dumps(payload).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture()
def live_server():
    handler = type("Handler", (_SearchApiHandler,), {"calls": 0})
    server = ThreadingHTTPServer(("127.0.0.1", 0), handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_port}", handler
    server.shutdown()


class TestLiveBackend:
    def make_backend(self, base_url):
        return LiveBackend(LiveBackendConfig(
            endpoint_template=f"{base_url}/search?q={{q}}&n={{k}}",
            timeout_ms=2000,
            results_path="data.hits",
            url_field="link",
            title_field="name",
            snippet_field="text",
        ))

    def test_maps_fields_and_ranks(self, live_server):
        base_url, _handler = live_server
        results = self.make_backend(base_url).search(make_query(["faculty"], qid=3), k=10)
        assert [r.url for r in results] == [
            "http://a.example/1", "http://a.example/2", "http://a.example/3",
        ]
        assert [r.backend_rank for r in results] == [1, 2, 3]
        assert all(r.query_id == 3 for r in results)
        assert results[0].title == "One"

    def test_k_truncation(self, live_server):
        base_url, _handler = live_server
        results = self.make_backend(base_url).search(make_query(["faculty"]), k=2)
        assert len(results) == 2

    def test_retry_once_then_succeed(self, live_server):
        base_url, handler = live_server
        handler.fail_first = True
        results = self.make_backend(base_url).search(make_query(["faculty"]), k=10)
        assert len(results) == 3
        assert handler.calls == 2

    def test_error_carries_query_id(self, live_server):
        base_url, handler = live_server
        handler.always_fail = True
        with pytest.raises(BackendError) as excinfo:
            self.make_backend(base_url).search(make_query(["faculty"], qid=7), k=10)
        assert excinfo.value.query_id == 7

    def test_unreachable_endpoint(self):
        backend = LiveBackend(LiveBackendConfig(
            endpoint_template="http://127.0.0.1:1/search?q={q}", timeout_ms=200,
        ))
        with pytest.raises(BackendError):
            backend.search(make_query(["faculty"], qid=1), k=5)
