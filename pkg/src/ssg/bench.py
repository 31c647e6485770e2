"""Benchmark campaigns over generated games, reported as CSV."""

from __future__ import annotations

import configparser
import csv
import io
from dataclasses import dataclass, field
from pathlib import Path

from ssg.evaluation import CapExceededError
from ssg.game import InvalidGameError
from ssg.generator import GeneratorParams, generate
from ssg.solvers import ALGORITHMS, SOLVERS, bound_decreasing_fixed_set, bound_recursive_pair

CSV_HEADER = [
    "game_id", "algo", "n", "d", "r", "N_total", "evaluations", "loop_iterations",
    "max_depth", "bound_rp", "bound_dfs", "agree", "wall_ms",
]


@dataclass
class BenchConfig:
    sizes: list[int] = field(default_factory=lambda: [2, 4, 6, 8])
    instances: int = 10
    algorithms: list[str] = field(default_factory=lambda: list(ALGORITHMS))
    seed: int = 0
    output: str | None = None
    degree: int = 2
    binary: bool = True
    n_min: int = 2
    n_random: int = 4
    n_sinks: int = 3
    q: int = 6

    def check(self) -> None:
        unknown = [a for a in self.algorithms if a not in SOLVERS]
        if unknown:
            raise ValueError(f"unknown algorithms {unknown}; choose from {list(ALGORITHMS)}")
        if self.instances < 0 or any(n < 0 for n in self.sizes):
            raise ValueError("sizes and instance counts must be non-negative")


def _split(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def load_config(text: str) -> BenchConfig:
    """Read a flat ``key = value`` file (``#`` comments allowed)."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    try:
        parser.read_string("[bench]\n" + text)
    except configparser.Error as exc:
        raise ValueError(f"malformed bench config: {exc}") from None
    section = parser["bench"]
    known = set(BenchConfig.__dataclass_fields__)
    unknown = set(section) - known
    if unknown:
        raise ValueError(f"unknown bench config keys {sorted(unknown)}")
    cfg = BenchConfig()
    try:
        if "sizes" in section:
            cfg.sizes = [int(t) for t in _split(section["sizes"])]
        if "algorithms" in section:
            cfg.algorithms = _split(section["algorithms"])
        for key in ("instances", "seed", "degree", "n_min", "n_random", "n_sinks", "q"):
            if key in section:
                setattr(cfg, key, section.getint(key))
        if "binary" in section:
            cfg.binary = section.getboolean("binary")
    except ValueError as exc:
        raise ValueError(f"malformed bench config: {exc}") from None
    cfg.output = section.get("output", cfg.output)
    cfg.check()
    return cfg


def instance_seed(seed: int, n: int, i: int) -> int:
    return ((seed * 1_000_003 + n) * 100_003 + i) % 2**64


def bench(config: BenchConfig) -> list[dict]:
    """Run every configured algorithm on every generated instance.

    ``agree`` compares each solver with brute force when it ran, otherwise
    with the first solver that succeeded on the instance.
    """
    config.check()
    rows: list[dict] = []
    if not config.algorithms:
        return rows
    for n in config.sizes:
        for i in range(config.instances):
            params = GeneratorParams(
                n_max=n, n_min=config.n_min, n_random=config.n_random,
                n_sinks=config.n_sinks, d=config.degree, q=config.q,
                seed=instance_seed(config.seed, n, i), require_binary=config.binary,
            )
            game = generate(params)
            base = {
                "game_id": f"n{n}-i{i}", "n": game.n, "d": game.d, "r": game.r,
                "N_total": game.n_total,
                "bound_rp": bound_recursive_pair(game.d) if game.d >= 2 else "",
                "bound_dfs": bound_decreasing_fixed_set(game.n),
            }
            results = {}
            for algo in config.algorithms:
                try:
                    _, values, stats = SOLVERS[algo](game)
                except (CapExceededError, InvalidGameError):
                    results[algo] = None
                    continue
                results[algo] = (values, stats)
            done = [a for a in config.algorithms if results[a] is not None]
            ref_algo = "brute" if "brute" in done else (done[0] if done else None)
            for algo in config.algorithms:
                row = dict(base, algo=algo)
                if results[algo] is None:
                    row.update(
                        evaluations="", loop_iterations="", max_depth="", agree="skipped", wall_ms=""
                    )
                else:
                    values, stats = results[algo]
                    row.update(
                        evaluations=stats.evaluations,
                        loop_iterations=stats.loop_iterations,
                        max_depth=stats.max_depth,
                        agree=str(values == results[ref_algo][0]).lower(),
                        wall_ms=f"{stats.wall_ms:.2f}",
                    )
                rows.append(row)
    return rows


def to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def run(config: BenchConfig) -> tuple[str, int]:
    """Run the campaign, write the CSV if configured; return it and the disagreement count."""
    rows = bench(config)
    text = to_csv(rows)
    if config.output:
        Path(config.output).write_text(text)
    return text, sum(1 for row in rows if row["agree"] == "false")
