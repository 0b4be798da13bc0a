"""Command-line interface.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 enumeration truncated by the budget.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from . import checks, crown
from .dot import crown_labeling_to_dot, labeling_to_dot
from .graph import GraphFormatError
from .graphspec import GraphSpecError, parse_graph_spec
from .labeling import counts, from_labeling_text, is_edge_friendly
from .search import DEFAULT_BUDGET, compute_ebi

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TRUNCATED = 0, 1, 2, 3
DEFAULT_SEED = 20240101


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _graph(spec: str):
    try:
        return parse_graph_spec(spec)
    except (GraphSpecError, GraphFormatError) as exc:
        raise UsageError(f"bad graph descriptor {spec!r}: {exc}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def witness_record(n: int, lab) -> dict:
    c = counts(lab)
    return {"n": n, "index": c.index, "labels": lab.bits, "counts": c.to_dict()}


def cmd_ebi(args) -> int:
    g = _graph(args.graph)
    if g.q == 0:
        raise UsageError("graph has no edges")
    report = compute_ebi(g, budget=args.budget, jobs=args.jobs)
    doc = report.to_dict()
    doc["spec"] = args.graph
    _emit(_dump(doc), args.output)
    if not report.complete:
        print(f"edgebalance: budget reached after {report.enumerated} of {report.total} labelings; "
              "index set is partial", file=sys.stderr)
        return EXIT_TRUNCATED
    return EXIT_OK


def cmd_construct(args) -> int:
    n = args.n
    if n < 3:
        raise UsageError("construct needs n >= 3")
    allowed = crown.ebi_formula(n)
    if args.k is not None:
        if args.k not in allowed:
            raise UsageError(f"index {args.k} is not in EBI(K_{n} x K_2) = {allowed}")
        labs = [crown.labeling_for_index(n, args.k)]
    else:
        labs = crown.all_witnesses(n)
    for lab in labs:
        if not is_edge_friendly(lab):
            raise AssertionError("construction produced a labeling that is not edge-friendly")
    if args.format == "dot":
        text = "".join(crown_labeling_to_dot(lab) for lab in labs)
    else:
        records = [witness_record(n, lab) for lab in labs]
        text = _dump(records[0] if args.k is not None else records)
    _emit(text, args.output)
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"expected a range like 4..12, got {text!r}") from None


DEFAULT_LEMMA3_GRAPHS = ["crown:4", "complete:4", "bipartite:3,3"]


def cmd_verify(args) -> int:
    try:
        if args.scope == "crown-range":
            results = checks.crown_range(*_parse_range(args.range))
        elif args.scope == "lemma3":
            specs = args.graph or DEFAULT_LEMMA3_GRAPHS
            results = checks.lemma3([(s, _graph(s)) for s in specs], budget=args.budget, jobs=args.jobs)
        elif args.scope == "lemma5":
            results = checks.lemma5(args.graph, _graph(args.graph), args.samples, args.seed)
        elif args.scope == "theorem3":
            results = checks.theorem3(budget=args.budget, jobs=args.jobs, max_q=args.max_q)
        else:
            results = checks.prop2(args.trials, args.max_p, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    passed = all(c.passed for c in results)
    doc = {"scope": args.scope, "passed": passed, "checks": [c.to_dict() for c in results]}
    _emit(_dump(doc), args.output)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_label(args) -> int:
    try:
        lab = from_labeling_text(Path(args.file).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"{args.file}: {exc.strerror}") from None
    except (GraphFormatError, ValueError) as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    if args.format == "dot":
        text = labeling_to_dot(lab)
    else:
        doc = counts(lab).to_dict()
        doc["edge_friendly"] = is_edge_friendly(lab)
        text = _dump(doc)
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgebalance", description="Edge-balanced index sets of graphs.")
    parser.add_argument("--progress", action="store_true", help="log enumeration progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write to this file instead of stdout")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                        help="maximum labelings to enumerate (default %(default)s)")
    search.add_argument("--jobs", type=_positive, default=1, help="parallel workers")

    p = sub.add_parser("ebi", parents=[common, search], help="exhaustive edge-balanced index set")
    p.add_argument("graph", help="graph descriptor, e.g. crown:4 or product:direct:complete:5:complete:2")
    p.set_defaults(func=cmd_ebi)

    p = sub.add_parser("construct", parents=[common], help="constructive witnesses for K_n x K_2")
    p.add_argument("n", type=int)
    p.add_argument("--k", type=int, help="target index (default: one witness per index)")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("label", parents=[common], help="counts for a labeling file")
    p.add_argument("file")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="run a verification battery")
    scopes = p.add_subparsers(dest="scope", required=True)
    s = scopes.add_parser("crown-range", parents=[common])
    s.add_argument("range", help="n range such as 4..12")
    s = scopes.add_parser("lemma3", parents=[common, search])
    s.add_argument("--graph", action="append", help="odd-regular graph descriptor (repeatable)")
    s = scopes.add_parser("lemma5", parents=[common])
    s.add_argument("--graph", required=True)
    s.add_argument("--samples", type=_positive, default=1000)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s = scopes.add_parser("theorem3", parents=[common, search])
    s.add_argument("--max-q", type=_positive, default=24, help="skip products with more edges")
    s = scopes.add_parser("prop2", parents=[common])
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--max-p", type=_positive, default=8)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.progress else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"edgebalance: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
