"""Command line entry point: triage, serve, query, eval."""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources

from .dispatch import DEFAULT_K, Dispatcher
from .errors import HomeGuardError, NotEmergency
from .rdf import evaluate
from .triage import load_taxonomy, triage


def load_golden() -> list[dict]:
    return json.loads(resources.files("homeguard").joinpath("data", "table1.json").read_text(encoding="utf-8"))


def run_golden(taxonomy=None) -> list[dict]:
    """Run every golden message; one dict per row with expected and actual services."""
    rows = []
    for row in load_golden():
        try:
            got = sorted(triage(row["message"], taxonomy).service_types)
        except NotEmergency:
            got = None
        rows.append({"row": row["row"], "expected": sorted(row["services"]), "got": got,
                     "pass": got == sorted(row["services"])})
    return rows


def _cmd_triage(args) -> int:
    dispatcher = Dispatcher(load_taxonomy(args.ontology))
    location = None
    if (args.lat is None) != (args.lon is None):
        print("error: --lat and --lon go together", file=sys.stderr)
        return 2
    if args.lat is not None:
        location = (args.lat, args.lon)
    try:
        report = dispatcher.submit(args.message, location, args.k)
    except NotEmergency as exc:
        print(json.dumps({"error": "NotEmergency", "reason": exc.reason, "matched": list(exc.matched)}))
        return 3
    print(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
    return 0


def _cmd_serve(args) -> int:
    from .server import serve

    serve(args.port, args.ontology, args.store, args.host)
    return 0


def _cmd_query(args) -> int:
    taxonomy = load_taxonomy(args.ontology)
    rows = evaluate(taxonomy.graph, args.sparql)
    for row in rows:
        print("\t".join(row[v].n3() for v in sorted(row)))
    print(f"# {len(rows)} row(s)", file=sys.stderr)
    return 0


def _cmd_eval(args) -> int:
    if not args.table1:
        print("error: choose a corpus (--table1)", file=sys.stderr)
        return 2
    taxonomy = load_taxonomy(args.ontology)
    t0 = time.perf_counter()
    rows = run_golden(taxonomy)
    elapsed = time.perf_counter() - t0
    width = max(len(", ".join(r["expected"])) for r in rows)
    print(f"{'row':>3}  {'expected':<{width}}  {'got':<{width}}  result")
    for r in rows:
        got = ", ".join(r["got"]) if r["got"] is not None else "NotEmergency"
        print(f"{r['row']:>3}  {', '.join(r['expected']):<{width}}  {got:<{width}}  {'PASS' if r['pass'] else 'FAIL'}")
    passed = sum(r["pass"] for r in rows)
    print(f"{passed}/{len(rows)} rows match ({elapsed:.3f} s)")
    return 0 if passed == len(rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homeguard", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triage", help="triage one message and print the incident report")
    p.add_argument("--message", required=True)
    p.add_argument("--lat", type=float)
    p.add_argument("--lon", type=float)
    p.add_argument("--k", type=int, default=DEFAULT_K)
    p.add_argument("--ontology")
    p.set_defaults(func=_cmd_triage)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ontology")
    p.add_argument("--store", help="JSON-lines incident store (in memory if omitted)")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("query", help="run a SPARQL SELECT against the ontology")
    p.add_argument("--sparql", required=True)
    p.add_argument("--ontology")
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("eval", help="run a golden corpus and print a pass/fail matrix")
    p.add_argument("--table1", action="store_true")
    p.add_argument("--ontology")
    p.set_defaults(func=_cmd_eval)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HomeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
