"""Command-line front end.

A thin client: every verb builds one HTTP request against the service app
(in-process by default, or a remote instance via ``--url``) and formats the
response.  Exit codes: 0 success, 1 domain error, 2 usage error, 3 when
``verify`` found counterexamples.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

from .explorer import Counterexample, TheoremReport, report_to_text


def _comma_ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}") from exc


def _spec_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-n", type=int, required=True, help="matrix order")
    sub.add_argument(
        "-a", "--alpha", type=_comma_ints, default=[],
        help="subdiagonal offsets, e.g. 1,3 (omit or pass '' for none)",
    )
    sub.add_argument(
        "-b", "--beta", type=_comma_ints, default=[],
        help="superdiagonal offsets, e.g. 2,5 (omit or pass '' for none)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toeprow",
        description="Row graphs of (0,1)-Toeplitz matrices",
    )
    parser.add_argument(
        "--url", default=None,
        help="base URL of a running toeprow service (default: in-process)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="print the matrix")
    _spec_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("rowgraph", help="print the row graph edges")
    _spec_args(p)
    p.add_argument(
        "--engine", choices=["cross", "oracle", "closed", "bounded"],
        default="cross",
        help="cross (default) compares all applicable engines",
    )
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("classify", help="classify the row graph components")
    _spec_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("predict", help="run a structure predicate")
    p.add_argument(
        "predicate",
        help="one of: bounded, acyclic, triangle, cycle-verdict, boundary, "
        "single-cycle, connected-triangle-free",
    )
    _spec_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("construct", help="build a spec with a known row graph")
    p.add_argument("kind", choices=["path", "cycle", "cycle-component"])
    p.add_argument("-n", type=int, required=True, help="matrix order")
    p.add_argument("-m", type=int, default=None, help="cycle component length")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="sweep a theorem against the oracle")
    p.add_argument("theorem", help="a registered theorem id, or 'all'")
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--max-counterexamples", type=int, default=10)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("catalog", help="classification catalog as CSV")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--max-k1", type=int, default=None)
    p.add_argument("--max-k2", type=int, default=None)
    p.add_argument(
        "--family", choices=["all", "bounded", "boundary"], default="all"
    )
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("export", help="export the row graph")
    _spec_args(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")

    return parser


def _call(url: str | None, method: str, path: str, payload=None) -> httpx.Response:
    if url:
        with httpx.Client(base_url=url, timeout=None) as client:
            return client.request(method, path, json=payload)

    async def go() -> httpx.Response:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://toeprow"
        ) as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _fail(response: httpx.Response) -> int:
    try:
        body = response.json()
        message = body.get("message") or body.get("detail") or response.text
    except ValueError:
        message = response.text
    print(f"error: {message}", file=sys.stderr)
    return 1


def _spec_payload(args) -> dict:
    return {"n": args.n, "alpha": args.alpha, "beta": args.beta}


def _report_text(data: dict) -> str:
    report = TheoremReport(
        theorem_id=data["theorem_id"],
        registry_version=data["registry_version"],
        range=data["range"],
        checked=data["checked"],
        passed=data["passed"],
        counterexamples=tuple(
            Counterexample(c["case"], c["expected"], c["observed"])
            for c in data["counterexamples"]
        ),
    )
    return report_to_text(report)


def _run_verify(args) -> int:
    if args.theorem == "all":
        listing = _call(args.url, "GET", "/theorems")
        if listing.status_code != 200:
            return _fail(listing)
        ids = [row["theorem_id"] for row in listing.json()]
    else:
        ids = [args.theorem]
    worst = 0
    for tid in ids:
        response = _call(
            args.url, "POST", "/verify",
            {
                "theorem_id": tid,
                "n_min": args.n_min,
                "n_max": args.n_max,
                "max_counterexamples": args.max_counterexamples,
            },
        )
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if args.format == "json":
            print(json.dumps(data, separators=(",", ":")))
        else:
            print(_report_text(data))
            if tid != ids[-1]:
                print()
        if data["passed"] < data["checked"]:
            worst = 3
    return worst


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.verb == "build":
        response = _call(args.url, "POST", "/build", {"spec": _spec_payload(args)})
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if args.format == "json":
            print(json.dumps(data, separators=(",", ":")))
        else:
            print("\n".join(data["lines"]))
        return 0

    if args.verb == "rowgraph":
        response = _call(
            args.url, "POST", "/rowgraph",
            {"spec": _spec_payload(args), "engine": args.engine},
        )
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if args.format == "json":
            print(json.dumps(data["graph"], separators=(",", ":")))
        else:
            for u, v in data["graph"]["edges"]:
                print(u, v)
        return 0

    if args.verb == "classify":
        response = _call(
            args.url, "POST", "/classify", {"spec": _spec_payload(args)}
        )
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if args.format == "json":
            print(json.dumps(data, separators=(",", ":")))
        else:
            print(data["encoded"])
        return 0

    if args.verb == "predict":
        response = _call(
            args.url, "POST", "/predict",
            {"predicate": args.predicate, "spec": _spec_payload(args)},
        )
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if args.format == "json":
            print(json.dumps(data, separators=(",", ":")))
        else:
            parts = [
                f"{key}={json.dumps(value, separators=(',', ':'))}"
                for key, value in data["result"].items()
            ]
            print(f"{args.predicate}: " + " ".join(parts))
        return 0

    if args.verb == "construct":
        response = _call(
            args.url, "POST", "/construct",
            {"kind": args.kind, "n": args.n, "m": args.m},
        )
        if response.status_code != 200:
            return _fail(response)
        data = response.json()
        if args.format == "json":
            print(json.dumps(data, separators=(",", ":")))
        else:
            print(f"{data['notation']} -> {data['summary']['encoded']}")
        return 0

    if args.verb == "verify":
        return _run_verify(args)

    if args.verb == "catalog":
        response = _call(
            args.url, "POST", "/catalog",
            {
                "n_min": args.n_min,
                "n_max": args.n_max,
                "max_k1": args.max_k1,
                "max_k2": args.max_k2,
                "family": args.family,
                "format": args.format,
            },
        )
        if response.status_code != 200:
            return _fail(response)
        if args.format == "csv":
            sys.stdout.write(response.text)
        else:
            print(json.dumps(response.json(), separators=(",", ":")))
        return 0

    if args.verb == "export":
        response = _call(
            args.url, "POST", "/export",
            {"spec": _spec_payload(args), "format": args.format},
        )
        if response.status_code != 200:
            return _fail(response)
        print(response.text)
        return 0

    raise AssertionError(f"unhandled verb {args.verb}")


if __name__ == "__main__":
    raise SystemExit(main())
