"""
Command Line Interface
classify, decompose, tprod, orbit and verify over the orchestrator.
stdout carries results only; logs go to stderr.
"""

import argparse
import asyncio
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from config.engine import EngineConfig, get_engine_config
from orchestrator import EllisOrchestrator
from reports.models import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, Report
from reports.render import render_report, report_json
from reports.suites import SUITES

# failures caused by the input rather than by the engine
USAGE_ERRORS = ("ParseError", "PreconditionError")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=None, help="comparison depth N (default 32)")
    common.add_argument("--levels", type=int, default=None, help="infinite levels L (default 8)")
    common.add_argument("--horizon", type=int, default=None, help="leading-term search bound H (default 256)")
    common.add_argument("--coset-bound", dest="coset_bound", type=int, default=None,
                        help="label bound for orbits and suites (default 5)")
    common.add_argument("--seed", type=int, default=None, help="sampling seed (default 0)")
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="ellisflux",
                                     description="Exact type computations over C((t))")
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser("classify", parents=[common], help="1-type of an element")
    classify.add_argument("expr")

    decompose = commands.add_parser("decompose", parents=[common], help="z * H * B factors of a matrix")
    decompose.add_argument("matrix", help="m11,m12;m21,m22")

    tprod = commands.add_parser("tprod", parents=[common], help="product of two types")
    tprod.add_argument("left")
    tprod.add_argument("right")
    tprod.add_argument("--flow", choices=("add", "mul"), default="add")

    orbit = commands.add_parser("orbit", parents=[common], help="orbit fragment of the idempotent")
    orbit.add_argument("bound", type=int, nargs="?", default=None)

    verify = commands.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("--suite", choices=("all",) + SUITES, default="all")
    return parser


def _config(args: argparse.Namespace) -> EngineConfig:
    return get_engine_config(precision=args.precision, levels=args.levels, horizon=args.horizon,
                             coset_bound=args.coset_bound, seed=args.seed)


def _params(args: argparse.Namespace, config: EngineConfig) -> Dict[str, Any]:
    if args.command == "classify":
        return {"expr": args.expr}
    if args.command == "decompose":
        return {"matrix": args.matrix}
    if args.command == "tprod":
        return {"left": args.left, "right": args.right, "flow": args.flow}
    if args.command == "orbit":
        return {"bound": config.coset_bound if args.bound is None else args.bound}
    return {"suite": args.suite}


def _render(command: str, results: Dict[str, Any]) -> str:
    if command == "classify":
        return f"{results['type']}\nvalue: {results['value']}"
    if command == "decompose":
        return (f"z: {results['z']}\nalpha: {results['alpha']}\n"
                f"beta: {results['beta']}\ngamma: {results['gamma']}")
    if command == "tprod":
        return (f"symbolic: {results['symbolic']}\noracle: {results['oracle']}\n"
                f"agree: {results['agree']}")
    if command == "orbit":
        lines = []
        for element in results["elements"]:
            flags = f"in_v={element['in_v']} in_v_as_stated={element['in_v_as_stated']}"
            lines.append(f"{element['normal_form']}  [{element['provenance']}] {flags}")
        return "\n".join(lines)
    return render_report(results["report"])


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one command and print its result; returns the exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    try:
        config = _config(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(level=getattr(logging, config.log_level.upper(), logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    orchestrator = EllisOrchestrator(config)
    response = asyncio.run(orchestrator.process_command(args.command, _params(args, config)))

    if not response["success"]:
        if args.json:
            print(json.dumps({"error": response["error"], "error_type": response["error_type"]}))
        else:
            print(f"error: {response['error']}", file=sys.stderr)
        return EXIT_USAGE if response["error_type"] in USAGE_ERRORS else EXIT_FAIL

    results = response["results"]
    if args.command == "verify":
        report: Report = results["report"]
        print(report_json(report) if args.json else render_report(report))
        return report.exit_code()
    if args.json:
        print(json.dumps(results, indent=2))
    else:
        print(_render(args.command, results))
    if args.command == "tprod" and not results["agree"]:
        return EXIT_FAIL
    return EXIT_PASS


def main() -> None:
    sys.exit(run())
