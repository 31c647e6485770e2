"""Command-line interface: ``ssg generate | solve | verify | bench``.

Exit codes: 0 success, 1 verification or agreement failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ssg import bench as bench_mod
from ssg.evaluation import CapExceededError, best_response, switch_report
from ssg.game import (
    GameFormatError,
    InvalidGameError,
    parse_game,
    parse_strategy,
    serialize_game,
    validate,
    values_to_json,
)
from ssg.generator import GeneratorParams, generate
from ssg.solvers import ALGORITHMS, SOLVERS, bound_decreasing_fixed_set, bound_recursive_pair

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_game(path: str):
    try:
        game = parse_game(Path(path).read_bytes())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except GameFormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    problems = validate(game)
    if problems:
        raise InputError(f"{path}: invalid game: " + "; ".join(map(str, problems)))
    return game


def cmd_generate(args) -> int:
    params = GeneratorParams(
        n_max=args.n_max, n_min=args.n_min, n_random=args.n_random, n_sinks=args.n_sinks,
        d=args.degree, q=args.q, seed=args.seed, require_binary=args.binary,
    )
    try:
        data = serialize_game(generate(params))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.write(data.decode())
    return EXIT_OK


def cmd_solve(args) -> int:
    game = _read_game(args.game)
    try:
        sigma, values, stats = SOLVERS[args.algorithm](game)
    except (CapExceededError, InvalidGameError) as exc:
        raise InputError(str(exc)) from None
    out = {
        "algorithm": args.algorithm,
        "strategy": game.strategy_labels(sigma),
        "values": values_to_json(game, values),
    }
    print(json.dumps(out, indent=1))
    if args.stats:
        row = {
            "game_id": Path(args.game).stem, "algo": args.algorithm, "n": game.n, "d": game.d,
            "r": game.r, "N_total": game.n_total, "evaluations": stats.evaluations,
            "loop_iterations": stats.loop_iterations, "max_depth": stats.max_depth,
            "bound_rp": bound_recursive_pair(game.d) if game.d >= 2 else "",
            "bound_dfs": bound_decreasing_fixed_set(game.n), "agree": "",
            "wall_ms": f"{stats.wall_ms:.2f}",
        }
        Path(args.stats).write_text(bench_mod.to_csv([row]))
    return EXIT_OK


def cmd_verify(args) -> int:
    game = _read_game(args.game)
    try:
        sigma = parse_strategy(game, Path(args.strategy).read_bytes())
    except OSError as exc:
        raise InputError(f"cannot read {args.strategy}: {exc.strerror}") from None
    except GameFormatError as exc:
        raise InputError(f"{args.strategy}: {exc}") from None
    _, values = best_response(game, sigma)
    switches = switch_report(game, sigma, values).switch_set
    if switches:
        print("not optimal; switch set: " + ", ".join(game.labels(switches)))
        return EXIT_FAILED
    print("optimal")
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        config = bench_mod.load_config(Path(args.config).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.config}: {exc.strerror}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.output:
        config.output = args.output
    text, failures = bench_mod.run(config)
    if not config.output:
        sys.stdout.write(text)
    if failures:
        print(f"{failures} rows disagree with the reference solver", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ssg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a random game")
    gen.add_argument("--n-max", type=int, required=True)
    gen.add_argument("--n-min", type=int, default=0)
    gen.add_argument("--n-random", type=int, default=2)
    gen.add_argument("--n-sinks", type=int, default=2)
    gen.add_argument("--degree", type=int, default=2)
    gen.add_argument("--q", type=int, default=6, help="largest probability denominator")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--binary", action="store_true", help="MAX outdegree exactly 2")
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_generate)

    solve = sub.add_parser("solve", help="solve a game file")
    solve.add_argument("--algorithm", choices=ALGORITHMS, default="hk")
    solve.add_argument("--stats", help="write a one-row CSV of run statistics")
    solve.add_argument("game")
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser("verify", help="check that a MAX strategy is optimal")
    verify.add_argument("game")
    verify.add_argument("strategy")
    verify.set_defaults(func=cmd_verify)

    campaign = sub.add_parser("bench", help="run a benchmark campaign")
    campaign.add_argument("config")
    campaign.add_argument("-o", "--output", help="CSV path (overrides the config)")
    campaign.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
