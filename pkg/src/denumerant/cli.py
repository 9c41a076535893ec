"""Thin command-line client for the counting service.

All computation lives in the service layer; this module only parses
arguments, dispatches a command (in-process by default, or to a running
server with --server), renders the returned envelope in the requested
format, and maps failures onto the exit-code contract:

    0  success
    2  invalid input (diagnostic on stderr)
    3  a constituent over-verification sample did not match
    4  at least one verified identity failed to hold
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any

from .errors import DenumerantError, ResidualNonZero
from .service import handlers

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_RESIDUAL = 3
EXIT_IDENTITY_VIOLATION = 4


class _RemoteError(Exception):
    """A non-success response from a remote server, with its exit code."""

    def __init__(self, exit_code: int, message: str):
        self.exit_code = exit_code
        self.message = message
        super().__init__(message)


def _parts_arg(text: str) -> list[int]:
    try:
        values = [int(token) for token in text.split(",") if token.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )
    if not values:
        raise argparse.ArgumentTypeError("expected at least one part")
    return values


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "csv", "plain"),
        default="json",
        help="output format (default: json)",
    )
    common.add_argument(
        "--threads",
        type=_positive_int,
        default=1,
        metavar="N",
        help="accepted for interface stability; the engine is sequential and "
        "output bytes never depend on this value",
    )
    common.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send the command to a running denumerant service instead of "
        "computing in-process",
    )

    parser = argparse.ArgumentParser(
        prog="denumerant",
        description="Exact restricted-partition counts, quasi-polynomial "
        "constituents, identity verification, and asymptotic diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count partitions of n")
    p.add_argument("-A", "--parts", type=_parts_arg, required=True, metavar="A1,A2,...")
    p.add_argument("-n", dest="n", type=int, required=True, help="target integer")

    p = sub.add_parser("table", parents=[common], help="counts for n = 0..n_max")
    p.add_argument("-A", "--parts", type=_parts_arg, required=True, metavar="A1,A2,...")
    p.add_argument("-m", "--n-max", dest="n_max", type=int, required=True)

    p = sub.add_parser(
        "quasipoly", parents=[common], help="extract the constituent polynomials"
    )
    p.add_argument("-A", "--parts", type=_parts_arg, required=True, metavar="A1,A2,...")
    p.add_argument(
        "--extra-samples",
        dest="extra_samples",
        type=_positive_int,
        default=3,
        help="over-determination samples per residue (default: 3)",
    )

    p = sub.add_parser("verify", parents=[common], help="run the identity suite")
    p.add_argument("-A", "--parts", type=_parts_arg, required=True, metavar="A1,A2,...")
    p.add_argument("--l-max", dest="l_max", type=_positive_int, default=3)
    p.add_argument("--seed", dest="seed", type=int, default=0)

    p = sub.add_parser(
        "asymptote", parents=[common], help="ratio to the leading-order estimate"
    )
    p.add_argument("-A", "--parts", type=_parts_arg, required=True, metavar="A1,A2,...")
    p.add_argument(
        "-p", "--n-points", dest="n_points", type=_positive_int, default=8,
        help="number of doubling steps n = period * 2**j (default: 8)",
    )

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _request_body(args: argparse.Namespace) -> dict[str, Any]:
    if args.command == "count":
        return {"parts": args.parts, "n": args.n}
    if args.command == "table":
        return {"parts": args.parts, "n_max": args.n_max}
    if args.command == "quasipoly":
        return {"parts": args.parts, "extra_samples": args.extra_samples}
    if args.command == "verify":
        return {"parts": args.parts, "l_max": args.l_max, "seed": args.seed}
    if args.command == "asymptote":
        return {"parts": args.parts, "n_points": args.n_points}
    raise AssertionError(args.command)


def _dispatch_local(args: argparse.Namespace) -> dict[str, Any]:
    if args.command == "count":
        return handlers.count_envelope(args.parts, args.n)
    if args.command == "table":
        return handlers.table_envelope(args.parts, args.n_max)
    if args.command == "quasipoly":
        return handlers.quasipoly_envelope(args.parts, args.extra_samples)
    if args.command == "verify":
        return handlers.verify_envelope(args.parts, args.l_max, args.seed)
    if args.command == "asymptote":
        return handlers.asymptote_envelope(args.parts, args.n_points)
    raise AssertionError(args.command)


def _dispatch_remote(args: argparse.Namespace) -> dict[str, Any]:
    import httpx

    url = args.server.rstrip("/") + "/" + args.command
    try:
        response = httpx.post(url, json=_request_body(args), timeout=300.0)
    except httpx.HTTPError as exc:
        raise _RemoteError(EXIT_INVALID_INPUT, f"request to {url} failed: {exc}")
    if response.status_code == 200:
        return response.json()
    try:
        body = response.json()
    except ValueError:
        body = {}
    error = body.get("error", {})
    code = error.get("code")
    message = error.get("message") or json.dumps(body.get("detail", body))
    exit_code = EXIT_RESIDUAL if code == "residual_non_zero" else EXIT_INVALID_INPUT
    raise _RemoteError(exit_code, message)


def _csv_text(rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _instance_compact(instance: dict[str, Any]) -> str:
    pieces = []
    for key, value in instance.items():
        if isinstance(value, list):
            pieces.append(f"{key}={','.join(str(v) for v in value)}")
        else:
            pieces.append(f"{key}={value}")
    return " ".join(pieces)


def _holds_word(report: dict[str, Any]) -> str:
    if report["skipped"]:
        return "skipped"
    return "true" if report["holds"] else "false"


def render(envelope: dict[str, Any], fmt: str) -> str:
    """Render an envelope as json, csv, or plain text; always newline-terminated."""
    if fmt == "json":
        return json.dumps(envelope) + "\n"
    command = envelope["command"]
    result = envelope["result"]
    if fmt == "csv":
        if command == "count":
            rows = [["n", "p_A_n"], [envelope["input_echo"]["n"], result]]
        elif command == "table":
            rows = [["n", "p_A_n"]]
            rows += [[str(i), v] for i, v in enumerate(result["counts"])]
        elif command == "quasipoly":
            rows = [["residue", "degree", "leading_coefficient", "matches_expected", "coefficients"]]
            for c in result["constituents"]:
                rows.append(
                    [
                        c["residue"],
                        c["degree"],
                        c["leading_coefficient"],
                        "true" if c["matches_expected"] else "false",
                        " ".join(c["coefficients"]),
                    ]
                )
        elif command == "verify":
            rows = [["identity", "instance", "lhs", "rhs", "holds"]]
            for r in result["reports"]:
                rows.append(
                    [
                        r["identity"],
                        _instance_compact(r["instance"]),
                        r["lhs"] if r["lhs"] is not None else "",
                        r["rhs"] if r["rhs"] is not None else "",
                        _holds_word(r),
                    ]
                )
        elif command == "asymptote":
            rows = [["j", "n", "ratio", "ratio_decimal"]]
            for point in result["points"]:
                rows.append([point["j"], point["n"], point["ratio"], point["ratio_decimal"]])
        else:
            raise AssertionError(command)
        return _csv_text(rows)
    if fmt == "plain":
        if command == "count":
            return result + "\n"
        if command == "table":
            return "".join(v + "\n" for v in result["counts"])
        if command == "quasipoly":
            return "".join(
                f"{c['residue']} {' '.join(c['coefficients'])}\n"
                for c in result["constituents"]
            )
        if command == "verify":
            return "".join(
                f"{r['identity']} {_instance_compact(r['instance'])} {_holds_word(r)}\n"
                for r in result["reports"]
            )
        if command == "asymptote":
            return "".join(
                f"{point['n']} {point['ratio']}\n" for point in result["points"]
            )
        raise AssertionError(command)
    raise AssertionError(fmt)


def _serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "serve":
        return _serve(args)
    try:
        if args.server:
            envelope = _dispatch_remote(args)
        else:
            envelope = _dispatch_local(args)
    except ResidualNonZero as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESIDUAL
    except _RemoteError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.exit_code
    except (DenumerantError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    sys.stdout.write(render(envelope, args.format))
    sys.stdout.flush()
    if args.command == "verify" and not envelope["result"]["all_hold"]:
        return EXIT_IDENTITY_VIOLATION
    return EXIT_OK


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
