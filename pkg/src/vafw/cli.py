"""Command-line front end.

FILE arguments resolve against the bundled fixture names first and fall back
to the filesystem, so `vafw status hal-carla` and `vafw status my.json` both
work.  Exit codes: 0 success, 1 operational failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .audience import Status, status_map
from .chains import classify_dichromatic
from .core import DEFAULT_LIMIT, TotalValueOrder, Vaf, induced_defeat_graph
from .docio import (build_vaf, document_from_vaf, export_dot, parse_apx,
                    parse_framework, serialize_framework)
from .errors import VafError
from .fixtures import FIXTURE_NAMES, all_fixtures, get_fixture
from .harness import run_verification
from .moves import suggest_moves
from .semantics import extend_algorithm, preferred_extensions

_DESIRED_CHOICES = tuple(s.value for s in Status)


def _load(args) -> Vaf:
    """Bundled fixture name, JSON document, or .apx text."""
    name = args.framework
    if name in FIXTURE_NAMES:
        return build_vaf(get_fixture(name).document)
    path = Path(name)
    if not path.is_file():
        known = ", ".join(FIXTURE_NAMES)
        raise VafError("UnknownFramework",
                       f"{name!r} is neither a file nor a bundled fixture "
                       f"({known})")
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".apx":
        assignments = {}
        for clause in args.assign or []:
            value, _, ids = clause.partition("=")
            if not ids:
                raise VafError("InvalidAssignment",
                               f"--assign wants value=id,id,... not {clause!r}")
            for arg_id in ids.split(","):
                assignments[arg_id.strip()] = value.strip()
        doc = parse_apx(text, assignments=assignments,
                        default_value=args.default_value or "")
    else:
        doc = parse_framework(text)
    return build_vaf(doc)


def _parse_order(vaf: Vaf, raw: str) -> TotalValueOrder:
    if not raw:
        raise VafError("MissingOrder",
                       "--order is required, most preferred value first, "
                       "e.g. --order life,property")
    return TotalValueOrder(tuple(part.strip() for part in raw.split(",")))


def _emit(args, payload: dict, text_lines):
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_check(args) -> int:
    vaf = _load(args)
    payload = {"ok": True, "argumentCount": len(vaf.arguments),
               "attackCount": len(vaf.attacks), "values": sorted(vaf.values)}
    _emit(args, payload,
          [f"ok: {len(vaf.arguments)} arguments, {len(vaf.attacks)} attacks, "
           f"values: {', '.join(sorted(vaf.values))}"])
    return 0


def _cmd_solve(args) -> int:
    vaf = _load(args)
    order = _parse_order(vaf, args.order)
    if args.oracle:
        graph = induced_defeat_graph(vaf, order)
        prefs = preferred_extensions(graph, args.limit)
        payload = {"ranking": list(order.ranking),
                   "preferred": [sorted(p) for p in prefs],
                   "method": "search"}
        lines = [f"preferred ({'>'.join(order.ranking)}):"]
        lines += ["  " + (" ".join(sorted(p)) or "(empty)") for p in prefs]
    else:
        members = extend_algorithm(vaf, order)
        payload = {"ranking": list(order.ranking), "members": sorted(members),
                   "method": "one-pass"}
        lines = [" ".join(sorted(members)) or "(empty)"]
    _emit(args, payload, lines)
    return 0


def _cmd_status(args) -> int:
    vaf = _load(args)
    report = status_map(vaf, max_values=args.max_values, limit=args.limit)
    payload = {"statuses": {a: str(s) for a, s in report.statuses.items()},
               "orderCount": report.order_count,
               "usedScepticalFallback": report.used_sceptical_fallback}
    width = max(len(a) for a in vaf.arguments)
    lines = [f"{a:<{width}}  {status}" for a, status in payload["statuses"].items()]
    lines.append(f"audiences: {report.order_count}"
                 + (" (sceptical fallback)" if report.used_sceptical_fallback else ""))
    _emit(args, payload, lines)
    return 0


def _cmd_chains(args) -> int:
    vaf = _load(args)
    classification = classify_dichromatic(vaf)
    deco = classification.decomposition
    payload = {"chains": [{"members": list(c.members), "value": c.value,
                           "parity": c.parity} for c in deco.chains],
               "statuses": {a: str(s) for a, s in classification.statuses.items()},
               "rules": dict(classification.rules)}
    lines = []
    for i, chain in enumerate(deco.chains):
        lines.append(f"chain {i} ({chain.value}, {chain.parity}): "
                     + " ".join(chain.members))
    for a in vaf.arguments:
        lines.append(f"{a}: {classification.statuses[a]} [{classification.rules[a]}]")
    _emit(args, payload, lines)
    return 0


def _cmd_suggest(args) -> int:
    vaf = _load(args)
    moves = suggest_moves(vaf, args.target, Status(args.desired),
                          exhaustive=args.exhaustive, limit=args.limit)
    payload = {"target": args.target, "desired": args.desired,
               "moves": [{"newArgument": m.new_argument, "newValue": m.new_value,
                          "attackTarget": m.attack_target, "template": m.template}
                         for m in moves]}
    lines = [f"{m.new_argument}({m.new_value}) -> {m.attack_target}  [{m.template}]"
             for m in moves] or ["no single-argument move achieves that"]
    _emit(args, payload, lines)
    return 0


def _cmd_export(args) -> int:
    vaf = _load(args)
    if args.format == "json":
        text = serialize_framework(document_from_vaf(vaf))
    else:
        statuses = None
        if not args.plain:
            try:
                statuses = status_map(vaf).statuses
            except VafError:
                statuses = None
        text = export_dot(vaf, statuses=statuses)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_fixtures(args) -> int:
    if args.name:
        fx = get_fixture(args.name)
        payload = {"name": fx.name, "description": fx.description,
                   "document": json.loads(serialize_framework(fx.document)),
                   "expected": json.loads(json.dumps(dict(fx.expected)))}
        _emit(args, payload,
              [fx.name, fx.description, "",
               serialize_framework(fx.document).rstrip("\n")])
        return 0
    payload = {"fixtures": [{"name": f.name, "description": f.description}
                            for f in all_fixtures()]}
    width = max(len(f.name) for f in all_fixtures())
    _emit(args, payload,
          [f"{f.name:<{width}}  {f.description}" for f in all_fixtures()])
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    app = create_app(ttl_seconds=args.ttl, snapshot_dir=args.snapshot_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _cmd_verify(args) -> int:
    report = run_verification(count=args.count, seed=args.seed,
                              max_cycle_length=args.max_cycle_length)
    payload = report.to_json()
    if args.report:
        Path(args.report).write_text(json.dumps(payload, indent=2) + "\n",
                                     encoding="utf-8")
    lines = [f"random instances: {report.random_checked}",
             f"two-value cycles: {report.cycles_checked}",
             f"failures: {len(report.failures)}",
             f"predictor disagreements: {len(report.predictor_disagreements)}"
             " (diagnostic only)",
             f"elapsed: {payload['elapsedSeconds']}s"]
    for failure in report.failures[:10]:
        lines.append(f"  seed {failure.spec.seed}: {failure.problems[0]}")
    for note in report.predictor_disagreements[:10]:
        lines.append(f"  {note}")
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def _add_framework_arg(parser):
    parser.add_argument("framework",
                        help="bundled fixture name or path to a framework file "
                             "(.json or .apx)")
    parser.add_argument("--assign", action="append", metavar="VALUE=ID,ID",
                        help="value assignment for .apx input; repeatable")
    parser.add_argument("--default-value", default="",
                        help="fallback value for unassigned .apx arguments")


def _add_output_arg(parser):
    parser.add_argument("--output", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vafw",
        description="Value-based argumentation: extensions, audience "
                    "statuses, chain analysis, and move suggestions.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a framework and summarize it")
    _add_framework_arg(p)
    _add_output_arg(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="extension for one value order")
    _add_framework_arg(p)
    _add_output_arg(p)
    p.add_argument("--order", default="",
                   help="comma-separated values, most preferred first")
    p.add_argument("--oracle", action="store_true",
                   help="use the search solver instead of the one-pass builder")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                   help="argument-count ceiling for the search solver")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("status", help="acceptance status across all audiences")
    _add_framework_arg(p)
    _add_output_arg(p)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--max-values", type=int, default=8,
                   help="refuse frameworks with more distinct values than this")
    p.set_defaults(func=_cmd_status)

    p = sub.add_parser("chains", help="chain decomposition and parity statuses")
    _add_framework_arg(p)
    _add_output_arg(p)
    p.set_defaults(func=_cmd_chains)

    p = sub.add_parser("suggest", help="single-argument moves reaching a status")
    _add_framework_arg(p)
    _add_output_arg(p)
    p.add_argument("--target", required=True, help="argument to change")
    p.add_argument("--desired", required=True, choices=_DESIRED_CHOICES)
    p.add_argument("--exhaustive", action="store_true",
                   help="try every (argument, value) pair instead of templates")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=_cmd_suggest)

    p = sub.add_parser("export", help="write DOT or canonical JSON")
    _add_framework_arg(p)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--plain", action="store_true",
                   help="skip status decorations in DOT output")
    p.add_argument("--out", default="", help="output path (default stdout)")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("fixtures", help="list bundled fixtures or show one")
    p.add_argument("name", nargs="?", default="")
    _add_output_arg(p)
    p.set_defaults(func=_cmd_fixtures)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--snapshot-dir", default="")
    p.add_argument("--ttl", type=float, default=24 * 60 * 60,
                   help="session idle lifetime in seconds")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("verify", help="cross-check fast paths against the solver")
    _add_output_arg(p)
    p.add_argument("--count", type=int, default=500,
                   help="number of random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-cycle-length", type=int, default=8)
    p.add_argument("--report", default="", help="write the JSON report here")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VafError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
