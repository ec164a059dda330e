"""Command-line interface: generate diagrams, run censuses and report
artifacts, verify counts against the published tables, run seeded property
audits, minimize by local search, and serve the HTTP editor backend.

Exit codes: 0 success; 1 verification mismatch or audit failure; 2 invalid
input or a proven-bound violation.  Diagnostics go to standard error as
single-line JSON objects."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .audits import AUDIT_FAMILIES, run_audit
from .census import (
    BoundViolationError,
    CensusError,
    count_census,
    local_search_minimize,
    verify_against_tables,
)
from .diagram import DegeneracyError, Diagram
from .embeddings import fan_embedding, random_embedding, weave_embedding_n1111
from .graphs import InvalidSpecError, build_complete_partite


def _diag(msg: str, **extra) -> None:
    print(json.dumps({"error": msg, **extra}, sort_keys=True), file=sys.stderr)


def _parse_parts(text: str) -> list[int]:
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",") if p]
    except ValueError:
        raise InvalidSpecError(f"cannot parse parts {text!r}")
    if not parts:
        raise InvalidSpecError("empty parts list")
    return parts


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("LINKNOT_WORKERS", "1")))
    except ValueError:
        return 1


def _build(parts: list[int], layout: str, seed: int) -> Diagram:
    if layout == "fan":
        return fan_embedding(parts)
    if layout == "weave":
        if parts[1:] != [1, 1, 1, 1]:
            raise InvalidSpecError(
                "weave layout requires parts n,1,1,1,1")
        return weave_embedding_n1111(parts[0])
    if layout == "random":
        return random_embedding(build_complete_partite(parts), seed)
    raise InvalidSpecError(f"unknown layout {layout!r}")


def _load(path: str) -> Diagram:
    return Diagram.from_json(Path(path).read_text())


def cmd_gen(args) -> int:
    d = _build(_parse_parts(args.parts), args.layout, args.seed)
    text = d.to_json()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_count(args) -> int:
    d = _load(args.input)
    report = count_census(d, args.kind, workers=_workers())
    text = report.to_json()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.report_dir:
        from .report import write_report

        paths = write_report(d, report, args.report_dir)
        print(json.dumps({"artifacts": paths}, sort_keys=True), file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    parts = _parse_parts(args.parts)
    if args.input in ("fan", "weave"):
        d = _build(parts, args.input, args.seed)
    else:
        d = _load(args.input)
    report = count_census(d, args.kind, workers=_workers())
    verdict = verify_against_tables(parts, report)
    obj = verdict.to_json_obj()
    obj["links"] = report.link_total
    obj["knots"] = report.knot_total
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    return 0 if verdict.ok else 1


def cmd_random_audit(args) -> int:
    result = run_audit(args.family, args.trials, args.seed)
    sys.stdout.write(json.dumps(result.to_json_obj(), indent=2, sort_keys=True) + "\n")
    return 0 if result.ok else 1


def cmd_search(args) -> int:
    d = _load(args.input)
    result = local_search_minimize(
        d, objective=args.objective, budget=args.budget, seed=args.seed,
        annealing=args.annealing, jitter=args.jitter)
    Path(args.output).write_text(result.best.to_json())
    if args.trace:
        Path(args.trace).write_text(result.trace_ndjson())
    print(json.dumps(
        {"objective": result.objective, "best_count": result.best_count,
         "accepted_moves": len(result.trace), "seed": result.seed},
        sort_keys=True))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(Path(args.workfile))
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="linknot",
        description="Count links and knots in drawn embeddings of complete "
                    "partite graphs.")
    sub = ap.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="generate a diagram file")
    gen.add_argument("--parts", required=True, help="comma-separated part sizes")
    gen.add_argument("--layout", default="fan", choices=["fan", "weave", "random"])
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output")
    gen.set_defaults(fn=cmd_gen)

    count = sub.add_parser("count", help="census of a diagram file")
    count.add_argument("input")
    count.add_argument("--kind", default="both", choices=["links", "knots", "both"])
    count.add_argument("-o", "--output")
    count.add_argument("--report-dir",
                       help="also write CSV and figure artifacts to this directory")
    count.set_defaults(fn=cmd_count)

    verify = sub.add_parser("verify", help="check a census against the published tables")
    verify.add_argument("--parts", required=True)
    verify.add_argument("--input", required=True,
                        help="diagram file, or 'fan'/'weave' to build one")
    verify.add_argument("--kind", default="links", choices=["links", "knots", "both"])
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(fn=cmd_verify)

    audit = sub.add_parser("random-audit", help="run a seeded property campaign")
    audit.add_argument("--family", required=True, choices=list(AUDIT_FAMILIES))
    audit.add_argument("--trials", type=int, required=True)
    audit.add_argument("--seed", type=int, default=0)
    audit.set_defaults(fn=cmd_random_audit)

    search = sub.add_parser("search", help="local-search minimization")
    search.add_argument("input")
    search.add_argument("--objective", default="links",
                        choices=["links", "knots", "both"])
    search.add_argument("--budget", type=int, default=200)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--annealing", action="store_true")
    search.add_argument("--jitter", action="store_true")
    search.add_argument("-o", "--output", required=True)
    search.add_argument("--trace", help="write accepted moves as line-delimited JSON")
    search.set_defaults(fn=cmd_search)

    serve = sub.add_parser("serve", help="run the HTTP editor backend")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--workfile", default="linknot-session.json")
    serve.set_defaults(fn=cmd_serve)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BoundViolationError as e:
        _diag(str(e), kind="bound-violation")
        return 2
    except (InvalidSpecError, DegeneracyError, CensusError, ValueError) as e:
        _diag(str(e), kind="invalid-input")
        return 2
    except OSError as e:
        _diag(str(e), kind="io")
        return 2


if __name__ == "__main__":
    sys.exit(main())
