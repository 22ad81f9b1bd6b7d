"""Command-line front end.

Commands
  closure       print the smallest (a, b)-closed monoid containing X
  feasible      decide whether a size-g solution exists (exit 1 if not)
  one           print one solution (exit 1 if infeasible)
  solve         print every solution, one per line, lexicographic
  oracle-solve  like solve, using the brute-force engine
  tree          write the admissible-semigroup tree as DOT

Exit codes: 0 success, 1 infeasible/no, 2 usage error, 3 resource limit
or 64-bit overflow.  Solution listings go to stdout; the summary line
``# solutions=N nodes=M`` goes to stderr so stdout stays diffable.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from .closure import ProblemInstance, TrivialMonoid, feasible, instance_closure, one_solution
from .errors import (
    InfeasibleError,
    Int64OverflowError,
    InvalidInstanceError,
    ResourceLimitError,
    ScaleTooLargeError,
)
from .oracle import oracle_solve
from .tree import DEFAULT_NODE_BUDGET, export_tree, solve


@dataclass(frozen=True)
class CliConfig:
    command: str
    instance: ProblemInstance
    depth: int | None
    max_nodes: int
    engine: str
    out: str | None


def _csv_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abmonoids",
        description="Find all g-element sets of integers >= r+1 that avoid X, never "
        "contain a sum of two avoided values, and are closed under the affine "
        "divisors (c - b_i) / a_i.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_flags(p, with_g):
        p.add_argument("--a", type=_csv_ints, default=(), metavar="A1,A2,..",
                       help="affine multipliers (omit together with --b for none)")
        p.add_argument("--b", type=_csv_ints, default=(), metavar="B1,B2,..",
                       help="affine offsets, same length as --a")
        p.add_argument("--X", type=_csv_ints, default=(), metavar="X1,X2,..",
                       help="forbidden values (may be omitted or empty)")
        p.add_argument("--r", type=int, default=0,
                       help="solutions draw from integers >= r+1 (default 0)")
        if with_g:
            p.add_argument("--g", type=int, required=True, help="solution cardinality")
        p.add_argument("--out", default=None, metavar="PATH",
                       help="write output to PATH instead of stdout")

    p = sub.add_parser("closure", help="smallest (a,b)-closed monoid containing X")
    instance_flags(p, with_g=False)

    p = sub.add_parser("feasible", help="decide whether a solution exists")
    instance_flags(p, with_g=True)

    p = sub.add_parser("one", help="print a single solution")
    instance_flags(p, with_g=True)

    p = sub.add_parser("solve", help="print all solutions")
    instance_flags(p, with_g=True)
    p.add_argument("--engine", choices=("tree", "oracle"), default="tree")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BUDGET)

    p = sub.add_parser("oracle-solve", help="print all solutions (brute-force engine)")
    instance_flags(p, with_g=True)

    p = sub.add_parser("tree", help="write the semigroup tree as DOT")
    instance_flags(p, with_g=False)
    p.add_argument("--depth", type=int, required=True, help="levels to expand")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BUDGET)

    return parser


def parse_args(argv=None) -> CliConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        instance = ProblemInstance(
            a=ns.a, b=ns.b, x=frozenset(ns.X), g=getattr(ns, "g", 0), r=ns.r
        )
    except InvalidInstanceError as err:
        parser.error(str(err))
    depth = getattr(ns, "depth", None)
    if depth is not None and depth < 0:
        parser.error("--depth must be non-negative")
    max_nodes = getattr(ns, "max_nodes", DEFAULT_NODE_BUDGET)
    if max_nodes < 1:
        parser.error("--max-nodes must be positive")
    engine = "oracle" if ns.command == "oracle-solve" else getattr(ns, "engine", "tree")
    return CliConfig(
        command=ns.command,
        instance=instance,
        depth=depth,
        max_nodes=max_nodes,
        engine=engine,
        out=ns.out,
    )


def _emit(config: CliConfig, text: str) -> None:
    if config.out is None:
        sys.stdout.write(text)
    else:
        with open(config.out, "w") as fh:
            fh.write(text)


def _format_solution(sol: tuple[int, ...]) -> str:
    return ",".join(map(str, sol))


def _cmd_closure(config: CliConfig) -> int:
    monoid = instance_closure(config.instance)
    if isinstance(monoid, TrivialMonoid):
        _emit(config, "d=1 M=<>\n")
        return 0
    line = f"d={monoid.d} M=<{','.join(map(str, monoid.base.min_generators))}>"
    if monoid.d > 1:
        line += f" expanded=<{','.join(map(str, monoid.expanded_generators()))}>"
    _emit(config, line + "\n")
    return 0


def _cmd_feasible(config: CliConfig) -> int:
    result = feasible(config.instance)
    count = "inf" if math.isinf(result.gap_count) else str(result.gap_count)
    _emit(config, f"{'yes' if result.feasible else 'no'} {count}\n")
    return 0 if result.feasible else 1


def _cmd_one(config: CliConfig) -> int:
    try:
        sol = one_solution(config.instance)
    except InfeasibleError as err:
        print(f"infeasible: {err}", file=sys.stderr)
        return 1
    _emit(config, _format_solution(sol) + "\n")
    return 0


def _cmd_solve(config: CliConfig) -> int:
    if config.engine == "oracle":
        result = oracle_solve(config.instance)
    else:
        result = solve(config.instance, max_nodes=config.max_nodes)
        if result.truncated:
            print(
                f"error: node budget exhausted after {result.node_count} nodes; "
                "rerun with a larger --max-nodes",
                file=sys.stderr,
            )
            return 3
    payload = "".join(_format_solution(sol) + "\n" for sol in result.solutions)
    _emit(config, payload)
    print(f"# solutions={len(result.solutions)} nodes={result.node_count}", file=sys.stderr)
    return 0


def _cmd_tree(config: CliConfig) -> int:
    _emit(config, export_tree(config.instance, config.depth, max_nodes=config.max_nodes))
    return 0


_COMMANDS = {
    "closure": _cmd_closure,
    "feasible": _cmd_feasible,
    "one": _cmd_one,
    "solve": _cmd_solve,
    "oracle-solve": _cmd_solve,
    "tree": _cmd_tree,
}


def run(config: CliConfig) -> int:
    try:
        return _COMMANDS[config.command](config)
    except (ResourceLimitError, Int64OverflowError, ScaleTooLargeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3


def main(argv=None) -> None:
    sys.exit(run(parse_args(argv)))
