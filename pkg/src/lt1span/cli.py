"""Command-line front end: span, check, construct, audit, complement, serve.

A thin client over the HTTP service. By default requests run against an
in-process instance of the app (no socket); --server targets a running one.
Exit codes: 0 ok, 1 invalid input, 2 budget exhausted or unresolved
instances, 3 audit found a discrepancy.
"""
from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNRESOLVED = 2
EXIT_DISCREPANCY = 3


class _TransportError(Exception):
    pass


async def _post_inprocess(path: str, payload: dict) -> tuple[int, dict]:
    from .service import app

    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport, timeout=None,
                                 base_url="http://service.local") as client:
        resp = await client.post(path, json=payload)
    return resp.status_code, resp.json()


def _post(server: str | None, path: str, payload: dict) -> tuple[int, dict]:
    try:
        if server is None:
            return asyncio.run(_post_inprocess(path, payload))
        with httpx.Client(base_url=server, timeout=None) as client:
            resp = client.post(path, json=payload)
        return resp.status_code, resp.json()
    except httpx.HTTPError as e:
        raise _TransportError(f"request to {path} failed: {e}") from None
    except ValueError as e:
        raise _TransportError(f"malformed response from {path}: {e}") from None


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INVALID


def _fail_http(status: int, body: dict) -> int:
    detail = body.get("detail", body) if isinstance(body, dict) else body
    if isinstance(detail, list):
        detail = "; ".join(
            str(item.get("msg", item)) if isinstance(item, dict) else str(item)
            for item in detail)
    return _fail(f"{detail}")


def _read_graph_file(path: str) -> str | None:
    try:
        return Path(path).read_text()
    except OSError as e:
        print(f"error: cannot read {path}: {e}", file=sys.stderr)
        return None


def _parse_int_list(text: str) -> list[int]:
    return [int(p.strip()) for p in text.split(",")]


def _violation_line(v: dict) -> str:
    label = "diff" if v["kind"] == "AdjacentDiffInT" else "colour"
    return f"{v['kind']} u={v['u']} v={v['v']} {label}={v['detail']}"


def cmd_span(args: argparse.Namespace) -> int:
    if (args.graph_file is None) == (args.family is None):
        return _fail("provide exactly one graph source: a file or --family")
    payload: dict = {"tset": args.tset, "method": args.method,
                     "strategy": args.strategy}
    if args.graph_file is not None:
        text = _read_graph_file(args.graph_file)
        if text is None:
            return EXIT_INVALID
        payload["dimacs"] = text
    else:
        payload["family"] = args.family
    if args.budget_nodes is not None:
        payload["budget_nodes"] = args.budget_nodes
    if args.budget_secs is not None:
        payload["budget_secs"] = args.budget_secs
    status, body = _post(args.server, "/span", payload)
    if status != 200:
        return _fail_http(status, body)
    if body["status"] == "unresolved":
        print(f"unresolved: {body['unresolved']['reason']}", file=sys.stderr)
        return EXIT_UNRESOLVED
    result = body["result"]
    if args.json:
        print(json.dumps(result, separators=(",", ":")))
    else:
        print(f"lambda = {result['lambda']} (method {result['method']}, "
              f"{result['nodes_explored']} nodes, "
              f"{result['elapsed_ms']:.1f} ms)")
        print("colours: " + ",".join(str(c) for c in result["colours"]))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    text = _read_graph_file(args.graph_file)
    if text is None:
        return EXIT_INVALID
    try:
        colours = _parse_int_list(args.colours)
    except ValueError:
        return _fail(f"colours must be comma-separated integers, got {args.colours!r}")
    status, body = _post(args.server, "/check",
                         {"dimacs": text, "tset": args.tset, "colours": colours})
    if status != 200:
        return _fail_http(status, body)
    if body["valid"]:
        return EXIT_OK
    for violation in body["violations"]:
        print(_violation_line(violation))
    return EXIT_INVALID


def cmd_construct(args: argparse.Namespace) -> int:
    status, body = _post(args.server, "/construct",
                         {"family": args.family, "tset": args.tset})
    if status != 200:
        return _fail_http(status, body)
    if args.json:
        print(json.dumps(body, separators=(",", ":")))
        return EXIT_OK
    print("colours: " + ",".join(str(c) for c in body["colours"]))
    print(f"c-span: {body['c_span']}")
    if body.get("prediction") is not None:
        pred = body["prediction"]
        print(f"prediction: {pred['mode']} {pred['value']}")
    if body.get("upper_bound") is not None:
        print(f"upper bound: {body['upper_bound']}")
    print(f"valid: {'yes' if body['valid'] else 'no'}")
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    payload: dict = {"suite": args.suite}
    if args.max_r is not None:
        payload["max_r"] = args.max_r
    if args.max_n is not None:
        payload["max_n"] = args.max_n
    status, body = _post(args.server, "/audit", payload)
    if status != 200:
        return _fail_http(status, body)
    summary = body["summary"]
    if args.json:
        print(json.dumps(body, separators=(",", ":")))
    else:
        for rec in body["records"]:
            agree = {True: "yes", False: "NO", None: "unresolved"}[rec["agree"]]
            line = (f"{rec['instance']} | {rec['claim']} | "
                    f"predicted={rec['predicted']} exact={rec['exact']} "
                    f"agree={agree}")
            if rec["notes"]:
                line += f" | {rec['notes']}"
            print(line)
        print(f"summary: {summary['instances']} instances, "
              f"{summary['agreed']} agreed, "
              f"{summary['discrepancies']} discrepancies, "
              f"{summary['unresolved']} unresolved")
    if summary["discrepancies"] > 0:
        return EXIT_DISCREPANCY
    if summary["unresolved"] > 0:
        return EXIT_UNRESOLVED
    return EXIT_OK


def cmd_complement(args: argparse.Namespace) -> int:
    text = _read_graph_file(args.graph_file)
    if text is None:
        return EXIT_INVALID
    try:
        colours = _parse_int_list(args.colours)
    except ValueError:
        return _fail(f"colours must be comma-separated integers, got {args.colours!r}")
    status, body = _post(args.server, "/complement",
                         {"dimacs": text, "tset": args.tset,
                          "colours": colours, "j": args.j})
    if status != 200:
        return _fail_http(status, body)
    print(",".join(str(c) for c in body["colours"]))
    print(f"c-span {body['original_span']} -> {body['complement_span']}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lt1span",
        description="L(t,1)-colouring: exact spans, checks, constructions, audits.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", default=None,
                        help="URL of a running service; default runs in-process")

    p = sub.add_parser("span", parents=[common],
                       help="compute the span of a graph")
    p.add_argument("graph_file", nargs="?", help="graph file (DIMACS dialect)")
    p.add_argument("--family", help="generated graph, e.g. star:3 or kpartite:2,2")
    p.add_argument("--tset", required=True, help='forbidden set, e.g. "0,1,3"')
    p.add_argument("--method", choices=("exact", "brute", "greedy"),
                   default="exact")
    p.add_argument("--strategy", choices=("iterative", "binary"),
                   default="iterative", help="exact-search strategy")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("check", parents=[common],
                       help="validate a colouring against a graph and TSet")
    p.add_argument("graph_file")
    p.add_argument("--tset", required=True)
    p.add_argument("--colours", required=True, help='e.g. "0,3,1"')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", parents=[common],
                       help="constructive colouring for star:<n> or kpartite:<sizes>")
    p.add_argument("--family", required=True)
    p.add_argument("--tset", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("audit", parents=[common],
                       help="audit claimed formulas/bounds against exact spans")
    p.add_argument("--suite", choices=("stars", "kpartite", "remarks", "all"),
                   default="all")
    p.add_argument("--max-r", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("complement", parents=[common],
                       help="complementary colouring with shift j")
    p.add_argument("graph_file")
    p.add_argument("--tset", required=True)
    p.add_argument("--colours", required=True)
    p.add_argument("--j", type=int, default=0)
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _TransportError as e:
        return _fail(str(e))


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
