"""Command-line interface.

All machine output is JSON on stdout; diagnostics go to stderr.  Exit codes:
0 success (whatever the verdict), 2 usage error, 3 unparseable graph input,
4 knowledge-base problem, 5 resource cap or factorization budget.

Every subcommand runs in-process by default.  With --server URL the same
subcommand becomes a thin client of a running service instance (started with
`cdgraph serve` or any ASGI runner pointed at cdgraph.service:app).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

import httpx

from .admissibility import Verdict, is_admissible, is_strongly_admissible
from .classifier import Classification, classify
from .enumeration import DEFAULT_ENUM_CAP, enumerate_classify
from .errors import (
    CDGraphError,
    FactorizationBudgetError,
    GraphError,
    KBError,
    PreconditionError,
    SizeCapError,
)
from .family import family_graph
from .graphs import Graph, format_edge_list, format_graph6, parse_graph
from .kb import KnowledgeBase, load_kb
from .numtheory import (
    QuotientQuery,
    lemma25_check,
    quotient_prime_divisors,
    quotient_value,
    zsigmondy,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_KB = 4
EXIT_CAP = 5

_REMOTE_KIND_EXITS = {
    "parse_error": EXIT_PARSE,
    "kb_error": EXIT_KB,
    "cap_error": EXIT_CAP,
    "budget_error": EXIT_CAP,
    "precondition_error": EXIT_USAGE,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdgraph",
        description="classify small graphs as degree graphs of solvable groups",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        help="run the subcommand against a service instance instead of in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="three-valued verdict with provenance")
    _add_graph_args(p)
    p.add_argument("--kb", metavar="PATH", help="knowledge-base file (JSON lines)")

    p = sub.add_parser("family", help="emit the forbidden-family member on k vertices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bridge", action="store_true")

    p = sub.add_parser("admissible", help="vertex admissibility verdict")
    _add_graph_args(p)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--kb", metavar="PATH", help="knowledge-base file (JSON lines)")

    p = sub.add_parser("zsigmondy", help="primitive prime divisors of a^n - 1")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("lemma25", help="two-prime check for (q^m-1)/(q^(m/s)-1)")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-s", type=int, required=True)

    p = sub.add_parser("enumerate", help="classify every isomorphism class at size n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--palfy-only", action="store_true")
    p.add_argument("--kb", metavar="PATH", help="knowledge-base file (JSON lines)")
    p.add_argument("--out", metavar="PATH", help="write the JSON report here instead of stdout")
    p.add_argument("--max-n", type=int, help=f"raise the enumeration cap (default {DEFAULT_ENUM_CAP})")

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--kb", metavar="PATH", help="knowledge-base file (default: shipped seed)")

    return parser


def main(argv: list[str] | None = None, *, http_client: httpx.Client | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)

    try:
        if args.command == "serve":
            return _cmd_serve(args)
        if args.server or http_client is not None:
            return _run_remote(args, http_client)
        return _run_local(args, parser)
    except SystemExit as exc:  # parser.error from a subcommand handler
        return int(exc.code or 0)
    except GraphError as exc:
        return _fail(EXIT_PARSE, exc)
    except KBError as exc:
        return _fail(EXIT_KB, exc)
    except (SizeCapError, FactorizationBudgetError) as exc:
        return _fail(EXIT_CAP, exc)
    except PreconditionError as exc:
        return _fail(EXIT_USAGE, exc)


def entrypoint() -> None:
    sys.exit(main())


# ---------------------------------------------------------------------------
# local mode
# ---------------------------------------------------------------------------


def _run_local(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.command == "classify":
        return cmd_classify(args)
    if args.command == "family":
        return cmd_family(args, parser)
    if args.command == "admissible":
        return cmd_admissible(args)
    if args.command == "zsigmondy":
        return cmd_zsigmondy(args)
    if args.command == "lemma25":
        return cmd_lemma25(args)
    if args.command == "enumerate":
        return cmd_enumerate(args)
    raise AssertionError(f"unhandled command {args.command}")


def cmd_classify(args: argparse.Namespace) -> int:
    g = _input_graph(args)
    kb = _load_kb_arg(args.kb)
    _emit(_classification_dict(classify(g, kb)))
    return EXIT_OK


def cmd_family(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.k < 5:
        parser.error(f"--k must be at least 5, got {args.k}")
    g = family_graph(args.k, args.bridge)
    _emit({"graph6": format_graph6(g), "edges": format_edge_list(g)})
    return EXIT_OK


def cmd_admissible(args: argparse.Namespace) -> int:
    g = _input_graph(args)
    kb = _load_kb_arg(args.kb)
    check = is_strongly_admissible if args.strong else is_admissible
    verdict = check(g, args.vertex, kb)
    _emit(_verdict_dict(args, verdict))
    return EXIT_OK


def cmd_zsigmondy(args: argparse.Namespace) -> int:
    result = zsigmondy(args.a, args.n)
    _emit(
        {
            "base": result.base,
            "exponent": result.exponent,
            "primitive_primes": sorted(result.primitive_primes),
            "exception": result.exception.value if result.exception else None,
        }
    )
    return EXIT_OK


def cmd_lemma25(args: argparse.Namespace) -> int:
    qq = QuotientQuery(q=args.q, m=args.m, s=args.s)
    _emit(
        {
            "q": args.q,
            "m": args.m,
            "s": args.s,
            "quotient": quotient_value(qq),
            "prime_divisors": sorted(quotient_prime_divisors(qq)),
            "result": lemma25_check(qq),
        }
    )
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    kb = _load_kb_arg(args.kb)
    max_n = args.max_n if args.max_n is not None else DEFAULT_ENUM_CAP
    report = enumerate_classify(args.n, kb, args.palfy_only, max_n=max_n)
    _emit(report.to_json_dict(), args.out)
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.kb), host=args.host, port=args.port)
    return EXIT_OK


# ---------------------------------------------------------------------------
# thin-client mode
# ---------------------------------------------------------------------------


def _run_remote(args: argparse.Namespace, http_client: httpx.Client | None) -> int:
    if getattr(args, "kb", None):
        print("error: --kb selects a local file; the service uses its own knowledge base",
              file=sys.stderr)
        return EXIT_USAGE
    path, payload = _remote_request(args)
    client = http_client or httpx.Client(base_url=args.server, timeout=60.0)
    try:
        response = client.post(path, json=payload)
    finally:
        if http_client is None:
            client.close()
    body = response.json()
    if response.is_success:
        _emit(body, getattr(args, "out", None))
        return EXIT_OK
    detail = body.get("detail")
    if isinstance(detail, dict) and "kind" in detail:
        print(f"error: {detail.get('message', detail['kind'])}", file=sys.stderr)
        return _REMOTE_KIND_EXITS.get(detail["kind"], EXIT_USAGE)
    print(f"error: service returned {response.status_code}: {body}", file=sys.stderr)
    return EXIT_USAGE


def _remote_request(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    if args.command == "classify":
        return "/classify", {"graph": _graph_payload(args)}
    if args.command == "family":
        return "/family", {"k": args.k, "bridge": args.bridge}
    if args.command == "admissible":
        return "/admissible", {
            "graph": _graph_payload(args),
            "vertex": args.vertex,
            "strong": args.strong,
        }
    if args.command == "zsigmondy":
        return "/zsigmondy", {"a": args.a, "n": args.n}
    if args.command == "lemma25":
        return "/lemma25", {"q": args.q, "m": args.m, "s": args.s}
    if args.command == "enumerate":
        payload: dict[str, Any] = {"n": args.n, "palfy_only": args.palfy_only}
        if args.max_n is not None:
            payload["max_n"] = args.max_n
        return "/enumerate", payload
    raise AssertionError(f"command {args.command} has no remote form")


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--edges", metavar="LIST", help='edge list, e.g. "5; 0-1,0-2,1-3,2-4,3-4"')
    group.add_argument("--graph6", metavar="G6", help="graph6 string")


def _input_graph(args: argparse.Namespace) -> Graph:
    if args.edges is not None:
        return parse_graph(args.edges, "edge-list")
    return parse_graph(args.graph6, "graph6")


def _graph_payload(args: argparse.Namespace) -> dict[str, str]:
    if args.edges is not None:
        return {"edges": args.edges}
    return {"graph6": args.graph6}


def _load_kb_arg(path: str | None) -> KnowledgeBase:
    if path is None:
        return KnowledgeBase.empty()
    return load_kb(path)


def _classification_dict(c: Classification) -> dict[str, Any]:
    return {
        "status": c.status.value,
        "provenance": [{"rule": rule, "citation": citation} for rule, citation in c.provenance],
    }


def _verdict_dict(args: argparse.Namespace, v: Verdict) -> dict[str, Any]:
    blocking = None
    if v.blocking is not None:
        sub, c = v.blocking
        blocking = {"graph6": format_graph6(sub), "classification": _classification_dict(c)}
    return {
        "vertex": args.vertex,
        "strong": args.strong,
        "verdict": v.value.value,
        "blocking": blocking,
    }


def _emit(payload: dict[str, Any], out: str | None = None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _fail(code: int, exc: CDGraphError) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return code
