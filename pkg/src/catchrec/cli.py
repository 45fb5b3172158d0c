"""Command-line interface: analyze, query, recommend, evaluate, fetch.

Exit codes are a stable contract: 0 success, 1 usage error, 2 pipeline
error, 3 network or auth error. Text and JSON output modes carry the same
numeric values.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus as corpus_mod
from .errors import CatchrecError, CorpusError
from .evaluation import DEFAULT_KS, Oracle, evaluate, load_cases
from .graph import extract_usage_graph
from .model import SourceUnit
from .parser import parse
from .quality import quality_score
from .query import ExceptionKnowledgeBase, SearchQuery, formulate_query
from .ranking import DEFAULT_TOP_K, WeightConfig, explain, load_weights, rank

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PIPELINE = 2
EXIT_NETWORK = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 on usage errors, not 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catchrec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="inspect one source file")
    analyze.add_argument("file")
    analyze.add_argument(
        "--emit",
        choices=["graph", "tokens", "handlers", "quality"],
        default="graph",
    )
    analyze.add_argument("--format", choices=["text", "json"], default="text")

    query = sub.add_parser("query", help="formulate the search query for a context file")
    query.add_argument("file")
    query.add_argument("--exception", help="explicit exception name override")
    query.add_argument("--kb", help="knowledge base TSV path")

    recommend = sub.add_parser("recommend", help="rank examples against a context file")
    recommend.add_argument("file")
    source = recommend.add_mutually_exclusive_group(required=True)
    source.add_argument("--corpus", help="local corpus directory")
    source.add_argument("--remote", action="store_true", help="search remotely")
    recommend.add_argument("--exception", help="explicit exception name override")
    recommend.add_argument("--top", type=int, default=DEFAULT_TOP_K)
    recommend.add_argument(
        "--config",
        help=f"weight config JSON path (default: ./{DEFAULT_CONFIG_NAME} when present)",
    )
    recommend.add_argument("--kb", help="knowledge base TSV path")
    recommend.add_argument("--format", choices=["text", "json"], default="text")
    recommend.add_argument("--orgs", default="apache,eclipse,facebook,twitter")
    recommend.add_argument("--limit", type=int, default=70)
    recommend.add_argument("--cache-dir", default=".catchrec-cache")
    recommend.add_argument("--no-filter", action="store_true", help="rank the raw corpus")

    ev = sub.add_parser("evaluate", help="run the evaluation harness")
    ev.add_argument("--cases", required=True)
    ev.add_argument("--oracle", required=True)
    ev.add_argument("--ks", default=",".join(str(k) for k in DEFAULT_KS))
    ev.add_argument("--config", help="weight config JSON path")
    ev.add_argument("--format", choices=["text", "json"], default="text")

    fetch = sub.add_parser("fetch", help="build a cached corpus from remote search")
    fetch.add_argument("--query", required=True, help='two terms: "<exception> <class>"')
    fetch.add_argument("--orgs", required=True)
    fetch.add_argument("--limit", type=int, default=70)
    fetch.add_argument("--out", required=True, help="cache directory")

    return parser


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_unit(path: str) -> SourceUnit:
    if path == "-":
        return parse(sys.stdin.read())
    return parse(Path(path).read_text(encoding="utf-8"))


def _load_kb(path: str | None) -> ExceptionKnowledgeBase:
    return ExceptionKnowledgeBase.from_file(path) if path else ExceptionKnowledgeBase.bundled()


DEFAULT_CONFIG_NAME = "catchrec-weights.json"


def _load_config(path: str | None) -> WeightConfig:
    if path:
        return load_weights(path)
    default = Path(DEFAULT_CONFIG_NAME)
    if default.is_file():
        return load_weights(default)
    return WeightConfig()


def _cmd_analyze(args) -> int:
    unit = _load_unit(args.file)
    if args.emit == "tokens":
        tokens = [
            {"text": t.text, "kind": t.kind.value, "line": t.line} for t in unit.tokens
        ]
        if args.format == "json":
            _emit_json(tokens)
        else:
            for t in tokens:
                print(f"{t['line']:>4}  {t['kind']:<12} {t['text']}")
        return EXIT_OK
    if args.emit == "graph":
        graph = extract_usage_graph(unit)
        print(graph.to_json() if args.format == "json" else graph.to_dot(), end="")
        return EXIT_OK
    if args.emit == "handlers":
        handlers = unit.handlers
        payload = {
            "try_blocks": handlers.try_blocks,
            "finally_blocks": handlers.finally_blocks,
            "handler_sloc": handlers.handler_sloc,
            "sloc": unit.sloc,
            "catch_clauses": [
                {
                    "exception_types": list(c.exception_types),
                    "significant_statements": c.significant_count,
                    "statements": [
                        {"text": s.text, "significant": s.significant}
                        for s in c.statements
                    ],
                }
                for c in handlers.catch_clauses
            ],
        }
        if args.format == "json":
            _emit_json(payload)
        else:
            print(
                f"try blocks: {payload['try_blocks']}, "
                f"finally blocks: {payload['finally_blocks']}, "
                f"handler sloc: {payload['handler_sloc']}/{payload['sloc']}"
            )
            for i, clause in enumerate(payload["catch_clauses"], 1):
                types = " | ".join(clause["exception_types"])
                print(f"catch {i}: {types} ({clause['significant_statements']} significant)")
        return EXIT_OK
    report = quality_score(unit)
    if args.format == "json":
        _emit_json(report.to_dict())
    else:
        print(f"readability      {report.readability:.4f}")
        print(f"handler_actions  {report.handler_actions:.4f}")
        print(f"handler_ratio    {report.handler_ratio:.4f}")
        print(f"raw              {report.raw:.4f}")
    return EXIT_OK


def _cmd_query(args) -> int:
    unit = _load_unit(args.file)
    query = formulate_query(unit, _load_kb(args.kb), args.exception)
    print(query.rendered)
    return EXIT_OK


def _parse_query_string(raw: str) -> SearchQuery:
    terms = raw.split()
    if len(terms) != 2:
        raise CatchrecError('query must be two terms: "<exception> <class>"')
    return SearchQuery(exception_name=terms[0], dominant_class=terms[1])


def _cmd_recommend(args) -> int:
    unit = _load_unit(args.file)
    kb = _load_kb(args.kb)
    config = _load_config(args.config)
    query = formulate_query(unit, kb, args.exception)
    if args.no_filter:
        corpus_filter = corpus_mod.CorpusFilter(
            require_try_catch=False,
            require_exception_mention=False,
            min_sloc=0,
            max_sloc=10**9,
        )
    else:
        corpus_filter = corpus_mod.CorpusFilter()
    if args.corpus:
        candidates = corpus_mod.ingest_local(args.corpus, query, corpus_filter)
    else:
        fetched = corpus_mod.fetch_remote(
            query,
            orgs=[o.strip() for o in args.orgs.split(",") if o.strip()],
            limit=args.limit,
            cache_dir=args.cache_dir,
        )
        candidates = corpus_mod.apply_filter(fetched, corpus_filter, query)
    if not candidates:
        raise CatchrecError("no candidates survived corpus construction")
    breakdowns = rank(unit, candidates, config, k=args.top)
    if args.format == "json":
        _emit_json([b.to_dict() for b in breakdowns])
    else:
        print(f"query: {query.rendered}")
        for b in breakdowns:
            print(explain(b))
    return EXIT_OK


def _cmd_evaluate(args) -> int:
    ks = tuple(int(k) for k in args.ks.split(",") if k.strip())
    cases = load_cases(args.cases)
    oracle = Oracle.from_file(args.oracle)
    report = evaluate(cases, oracle, _load_config(args.config), ks=ks)
    if args.format == "json":
        print(report.to_json(), end="")
    else:
        print(report.to_text(), end="")
    return EXIT_OK


def _cmd_fetch(args) -> int:
    query = _parse_query_string(args.query)
    orgs = [o.strip() for o in args.orgs.split(",") if o.strip()]
    candidates = corpus_mod.fetch_remote(
        query, orgs=orgs, limit=args.limit, cache_dir=args.out
    )
    print(f"fetched {len(candidates)} candidates into {args.out}")
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "query": _cmd_query,
    "recommend": _cmd_recommend,
    "evaluate": _cmd_evaluate,
    "fetch": _cmd_fetch,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except CorpusError as exc:
        print(f"catchrec: {exc}", file=sys.stderr)
        return EXIT_NETWORK
    except (CatchrecError, OSError, ValueError) as exc:
        print(f"catchrec: {exc}", file=sys.stderr)
        return EXIT_PIPELINE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
