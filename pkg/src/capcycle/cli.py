"""Command-line front end.

Subcommands: matchup, enumerate, graph, counter, analyze, simulate.
Exit codes: 0 success, 1 usage error, 2 invalid allocation input,
3 strategy space over the enumeration limit. The CAPCYCLE_MAX_SPACE
environment variable overrides the enumeration limit.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .allocations import (
    DEFAULT_SPACE_LIMIT,
    enumerate_compositions,
    enumerate_partitions,
    format_allocation,
    parse_allocation,
)
from .dominance import build_graph, counter_strategy
from .errors import (
    AllocationError,
    AllTiesError,
    DimensionMismatchError,
    SpaceTooLargeError,
)
from .matchups import TiePolicy, matchup_table, win_probability
from .report import (
    analysis_json_dict,
    analyze,
    emit_dot,
    emit_matchup_csv,
    emit_matchup_grid,
    graph_json_dict,
    matchup_json_dict,
    matchup_summary_line,
    render_analysis_text,
    simulation_json_dict,
    to_json_text,
)
from .simulate import SimConfig, simulate_best_of, simulate_games

ENV_MAX_SPACE = "CAPCYCLE_MAX_SPACE"


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="capcycle",
        description="Exact analysis and seeded simulation of budget-capped "
        "allocation games (salary-cap dice).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")
        return p

    p = add("matchup", "head-to-head grid between two allocations")
    p.add_argument("--a", required=True, metavar="CSV", help='first allocation, e.g. "1,1,4"')
    p.add_argument("--b", required=True, metavar="CSV", help='second allocation, e.g. "3,3,0"')
    p.add_argument("--format", choices=["grid", "json", "csv"], default="grid")
    p.add_argument("--label-a", default="A", help="display label for the first side")
    p.add_argument("--label-b", default="B", help="display label for the second side")

    p = add("enumerate", "list the capped strategy space")
    p.add_argument("--budget", type=int, default=6)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--partitions", action="store_true", help="canonical partitions only")

    p = add("graph", "dominance digraph export")
    p.add_argument("--budget", type=int, default=6)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--format", choices=["dot", "json"], default="dot")

    p = add("counter", "best same-cap counter-strategy")
    p.add_argument("--a", required=True, metavar="CSV")
    p.add_argument("--budget", type=int, default=None, help="defaults to sum of --a")

    p = add("analyze", "full strategy-space report")
    p.add_argument("--budget", type=int, default=6)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--format", choices=["json", "text"], default="text")

    p = add("simulate", "seeded Monte Carlo games and series")
    p.add_argument("--a", required=True, metavar="CSV")
    p.add_argument("--b", required=True, metavar="CSV")
    p.add_argument("--games", required=True, type=int, metavar="N")
    p.add_argument("--seed", required=True, type=int, metavar="N")
    p.add_argument("--tie-policy", choices=["reroll", "nogame"], default="reroll")
    p.add_argument("--best-of", type=int, default=None, metavar="ODD")
    p.add_argument("--series", type=int, default=None, metavar="N")
    p.add_argument("--format", choices=["text", "json"], default="text")

    return parser


def _space_limit() -> int:
    raw = os.environ.get(ENV_MAX_SPACE)
    if raw is None:
        return DEFAULT_SPACE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_SPACE} must be an integer, got {raw!r}") from None


def _fraction_text(p: Fraction) -> str:
    return f"{p.numerator}/{p.denominator} ({float(p):.4f})"


def _cmd_matchup(args) -> str:
    a = parse_allocation(args.a)
    b = parse_allocation(args.b)
    table = matchup_table(a, b)
    if args.format == "json":
        return to_json_text(matchup_json_dict(a, b, table))
    if args.format == "csv":
        return emit_matchup_csv(a, b, table, args.label_a, args.label_b)
    lines = [
        emit_matchup_grid(a, b, table, args.label_a, args.label_b),
        matchup_summary_line(table, args.label_a, args.label_b),
    ]
    if a.budget != b.budget:
        lines.append(
            f"note: budgets differ ({args.label_a} {a.budget} vs {args.label_b} {b.budget})"
        )
    return "\n".join(lines)


def _cmd_enumerate(args, limit: int) -> str:
    if args.partitions:
        items = enumerate_partitions(args.budget, args.k, limit)
    else:
        items = enumerate_compositions(args.budget, args.k, limit)
    return "\n".join(format_allocation(a) for a in items)


def _cmd_graph(args, limit: int) -> str:
    if args.format == "json":
        return to_json_text(graph_json_dict(analyze(args.budget, args.k, limit)))
    return emit_dot(build_graph(args.budget, args.k, limit))


def _cmd_counter(args, limit: int) -> str:
    a = parse_allocation(args.a)
    found = counter_strategy(a, args.budget, limit)
    if found is None:
        return "counter: none"
    counter, margin = found
    return f"counter: {format_allocation(counter)} (margin {margin})"


def _cmd_analyze(args, limit: int) -> str:
    report = analyze(args.budget, args.k, limit)
    if args.format == "json":
        return to_json_text(analysis_json_dict(report))
    return render_analysis_text(report)


def _cmd_simulate(args) -> str:
    if args.series is not None and args.best_of is None:
        raise ValueError("--series requires --best-of")
    a = parse_allocation(args.a)
    b = parse_allocation(args.b)
    policy = TiePolicy(args.tie_policy)
    config = SimConfig(
        seed=args.seed,
        n_games=args.games,
        tie_policy=policy,
        best_of=args.best_of,
        n_series=args.series if args.series is not None else 1,
    )
    if config.best_of is not None:
        stats = simulate_best_of(a, b, config)
    else:
        stats = simulate_games(a, b, config)

    table = matchup_table(a, b)
    try:
        exact_p = win_probability(table, policy)
    except AllTiesError:
        exact_p = None

    if args.format == "json":
        return to_json_text(simulation_json_dict(config, stats, exact_p))

    tie_word = "ties rerolled" if policy is TiePolicy.REROLL else "ties"
    lines = [
        f"a: {format_allocation(a)} (budget {a.budget})",
        f"b: {format_allocation(b)} (budget {b.budget})",
        f"policy: {policy.value}, seed {config.seed}",
        f"games played: {stats.games_played} "
        f"(a {stats.a_game_wins}, b {stats.b_game_wins}, {tie_word} {stats.tie_games})",
    ]
    freq = stats.empirical_a_frequency
    if freq is None:
        lines.append("empirical a frequency: undefined (no decisive games)")
    else:
        lines.append(f"empirical a frequency: {freq:.4f}")
    if exact_p is None:
        lines.append("exact p(a): undefined (all cells tie)")
    else:
        lines.append(f"exact p(a): {_fraction_text(exact_p)}")
    if config.best_of is not None:
        lines.append(f"series: best-of-{config.best_of} x {config.n_series}")
        lines.append(f"series wins: a {stats.a_series_wins}, b {stats.b_series_wins}")
    return "\n".join(lines)


def _write(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def run_cli(argv: list[str] | None = None) -> int:
    """Dispatch a command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)

    try:
        limit = _space_limit()
        if args.command == "matchup":
            text = _cmd_matchup(args)
        elif args.command == "enumerate":
            text = _cmd_enumerate(args, limit)
        elif args.command == "graph":
            text = _cmd_graph(args, limit)
        elif args.command == "counter":
            text = _cmd_counter(args, limit)
        elif args.command == "analyze":
            text = _cmd_analyze(args, limit)
        else:
            text = _cmd_simulate(args)
    except AllocationError as exc:
        print(f"capcycle: invalid allocation: {exc}", file=sys.stderr)
        return 2
    except SpaceTooLargeError as exc:
        print(f"capcycle: {exc}", file=sys.stderr)
        return 3
    except (DimensionMismatchError, AllTiesError, ValueError) as exc:
        print(f"capcycle: {exc}", file=sys.stderr)
        return 1

    _write(text, args.out)
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
