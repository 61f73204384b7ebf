"""Command-line interface: search, expand, eval, index, serve.

Exit codes: 0 success, 1 usage error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ontosearch.config import Config, ConfigError, load_config
from ontosearch.engine import BackendUnavailableError, EmptyQueryError, SearchEngine
from ontosearch.evaluation import evaluate_runs, load_judgments, load_run, summarize


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ontosearch",
        description="Ontology-driven semantic query expansion and re-ranked search.",
    )
    parser.add_argument("--config", help="YAML config file (defaults apply when omitted)")
    parser.add_argument(
        "--ontology", action="append", default=None, metavar="PATH",
        help="Turtle ontology file; repeatable, graphs are merged",
    )
    sub = parser.add_subparsers(dest="command")

    p_search = sub.add_parser("search", help="run the full pipeline for one query")
    p_search.add_argument("query")
    p_search.add_argument("--k", type=int, default=None, help="results per refined query")
    p_search.add_argument("--format", choices=("text", "json"), default="text")

    p_expand = sub.add_parser("expand", help="print analysis, expansions and refined queries")
    p_expand.add_argument("query")

    p_eval = sub.add_parser("eval", help="precision / relative recall for two run files")
    p_eval.add_argument("--run-a", required=True)
    p_eval.add_argument("--run-b", required=True)
    p_eval.add_argument("--judgments", required=True)
    p_eval.add_argument("--csv", help="write per-query CSV here")
    p_eval.add_argument("--plot-data", help="write plot series JSON here")

    p_index = sub.add_parser("index", help="build the corpus index and print statistics")
    p_index.add_argument("--manifest", help="corpus manifest (defaults to configured corpus)")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default=None)
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--ui-dir", default=None, help="static web UI directory to serve at /")

    return parser


def _load(args: argparse.Namespace) -> Config:
    config = load_config(args.config)
    if args.ontology:
        from dataclasses import replace
        config = replace(config, paths=replace(config.paths, ontologies=tuple(args.ontology)))
    return config


def _print_search_text(response) -> None:
    analysis = response.analysis
    print(f"query: {response.query}")
    print("tags: " + " ".join(f"{t.tag}/{t.lemma}" for t in analysis.tokens))
    print("chunks: " + " | ".join(np.text for np in analysis.noun_phrases))
    print("content terms: " + " ".join(analysis.content_terms))
    print("anchors: " + " ".join(analysis.anchor_terms))
    if analysis.is_location_query:
        print("location terms: " + " ".join(analysis.location_terms))
    print("domain keywords: " + ", ".join(
        f"{e.keyword}({e.weight:.2f})" for e in response.domain_keywords.entries()[:15]
    ))
    print("refined queries:")
    for query in response.refined_queries:
        print(f"  [{query.prior:.3f}] {query.text}")
    print("results:")
    for result in response.results:
        print(f"  {result.final_rank:2d}. {result.title}  ({result.breakdown.total:.3f})")
        print(f"      {result.url}")
    if response.failed_queries:
        print(f"failed queries: {response.failed_queries}")


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if not args.command:
        parser.print_usage(sys.stderr)
        return 1

    try:
        if args.command == "search":
            engine = SearchEngine(_load(args))
            response = engine.handle_search(args.query, k=args.k)
            if args.format == "json":
                print(json.dumps(response.to_json_dict(), indent=2))
            else:
                _print_search_text(response)
            return 0

        if args.command == "expand":
            engine = SearchEngine(_load(args))
            _analyzed, _keywords, emap, refined = engine.expand(args.query)
            print(json.dumps({
                "terms": emap.to_json_dict(),
                "queries": [q.to_json_dict() for q in refined],
            }, indent=2))
            return 0

        if args.command == "eval":
            run_a = load_run(args.run_a)
            run_b = load_run(args.run_b)
            judgments = load_judgments(args.judgments)
            rows = evaluate_runs(run_a, run_b, judgments)
            if not rows:
                print("no overlapping queries between runs and judgments", file=sys.stderr)
                return 2
            report = summarize(rows)
            for system, (avg_p, avg_r) in sorted(report.averages.items()):
                print(f"{system}: average precision {avg_p:.3f}, average recall {avg_r:.3f}")
            if args.csv:
                Path(args.csv).write_text(report.to_csv(), encoding="utf-8")
            if args.plot_data:
                Path(args.plot_data).write_text(report.plot_data_json(), encoding="utf-8")
            return 0

        if args.command == "index":
            from ontosearch.backends import build_corpus_index, load_corpus_manifest

            config = _load(args)
            manifest = args.manifest or config.paths.corpus_manifest
            index = build_corpus_index(load_corpus_manifest(manifest))
            print(json.dumps({
                "documents": index.N,
                "terms": len(index.postings),
                "avg_doc_length": round(index.avg_doc_length, 2),
            }, indent=2))
            return 0

        if args.command == "serve":
            from ontosearch.service import serve

            config = _load(args)
            serve(
                SearchEngine(config),
                host=args.host or config.service.host,
                port=args.port if args.port is not None else config.service.port,
                static_dir=args.ui_dir,
            )
            return 0

    except (EmptyQueryError, BackendUnavailableError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    parser.print_usage(sys.stderr)
    return 1


def main() -> None:
    sys.exit(run_cli())
