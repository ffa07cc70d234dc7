"""Command-line entry point: ``flagdist report|replay|sweep|list-cases``.

Exit codes: 0 success, 1 a check or registry entry failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .caselab.registry import REGISTRY, render_replay, replay_paper_cases
from .caselab.report import render_text, run_case
from .caselab.sweep import CHECKS, MAX_SWEEP_RANK, render_sweep, sweep
from .rootsys import NUMBERINGS, PAPER, RootSystemError

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _cmd_report(args) -> int:
    rep = run_case(args.type, args.marking, args.distribution, args.numbering)
    sys.stdout.write(rep.to_json() if args.format == "json" else render_text(rep))
    return EXIT_OK


def _cmd_replay(args) -> int:
    summary = replay_paper_cases(args.only, args.numbering)
    sys.stdout.write(_dump(summary.to_dict()) if args.format == "json"
                     else render_replay(summary))
    return EXIT_OK if summary.ok else EXIT_FAIL


def _cmd_sweep(args) -> int:
    checks = None
    if args.check:
        checks = [c.strip() for part in args.check for c in part.split(",") if c.strip()]
    summary = sweep(args.max_rank, checks)
    sys.stdout.write(_dump(summary.to_dict()) if args.format == "json"
                     else render_sweep(summary))
    return EXIT_OK if summary.ok else EXIT_FAIL


def _cmd_list_cases(args) -> int:
    for case in REGISTRY.values():
        print(f"{case.case_id:<16} {case.description}  [{case.source}]")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagdist", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("report", help="full report for one (type, marking) case")
    r.add_argument("--type", required=True, help="e.g. F4, B3, E8")
    r.add_argument("--marking", required=True, help="comma-separated marked nodes, e.g. 1,4")
    r.add_argument("--numbering", choices=NUMBERINGS, default=PAPER)
    r.add_argument("--distribution", default="columns",
                   help="tangent, columns, column:I, D<k>, Dm-1 or an antichain '2,0;0,1'")
    r.add_argument("--format", choices=("json", "text"), default="text")
    r.set_defaults(func=_cmd_report)

    rp = sub.add_parser("replay", help="replay the registered case tables")
    rp.add_argument("--only", action="append", metavar="ID")
    rp.add_argument("--numbering", choices=NUMBERINGS, default=PAPER)
    rp.add_argument("--format", choices=("json", "text"), default="text")
    rp.set_defaults(func=_cmd_replay)

    s = sub.add_parser("sweep", help="exhaustive checks over all types up to a rank")
    s.add_argument("--max-rank", type=int, default=4)
    s.add_argument("--check", action="append",
                   help=f"comma-separated subset of: {','.join(CHECKS)}")
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.set_defaults(func=_cmd_sweep)

    lc = sub.add_parser("list-cases", help="list registered case ids")
    lc.set_defaults(func=_cmd_list_cases)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "sweep" and not 1 <= args.max_rank <= MAX_SWEEP_RANK:
        print(f"error: --max-rank must be in 1..{MAX_SWEEP_RANK}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (RootSystemError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
