"""Seeded random game generation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ssg.game import SSG, GameBuilder


@dataclass(frozen=True)
class GeneratorParams:
    n_max: int
    n_min: int = 0
    n_random: int = 2
    n_sinks: int = 2
    d: int = 2
    q: int = 6
    seed: int = 0
    require_binary: bool = False

    def check(self) -> None:
        if min(self.n_max, self.n_min, self.n_random) < 0:
            raise ValueError("vertex counts must be non-negative")
        if self.n_sinks < 1:
            raise ValueError("need at least one sink")
        if self.d < 2:
            raise ValueError("degree must be at least 2")
        if self.q < 2:
            raise ValueError("denominator bound q must be at least 2")
        total = self.n_max + self.n_min + self.n_random + self.n_sinks
        needed = max(self.out_degree if self.n_max else 0, self.d if self.n_min else 0)
        if total - 1 < needed:
            raise ValueError(f"{needed} successors requested with {total - 1} other vertices")

    @property
    def out_degree(self) -> int:
        return 2 if self.require_binary else self.d


def random_distribution(rng: random.Random, k: int, q: int) -> list[Fraction]:
    """``k`` positive probabilities on the 1/q grid summing to exactly 1."""
    cuts = sorted(rng.sample(range(1, q), k - 1))
    bounds = [0, *cuts, q]
    return [Fraction(b - a, q) for a, b in zip(bounds, bounds[1:])]


def random_sink_value(rng: random.Random, q: int) -> Fraction:
    den = rng.randint(1, q)
    return Fraction(rng.randint(0, den), den)


def generate(params: GeneratorParams) -> SSG:
    """Random game, fully determined by ``params`` (seed included).

    No stopping condition is imposed: cycles that never reach a sink are
    expected and valued 0.
    """
    params.check()
    rng = random.Random(params.seed)
    maxs = [f"x{i}" for i in range(1, params.n_max + 1)]
    mins = [f"m{i}" for i in range(1, params.n_min + 1)]
    rands = [f"r{i}" for i in range(1, params.n_random + 1)]
    sinks = [f"s{i}" for i in range(1, params.n_sinks + 1)]
    everyone = maxs + mins + rands + sinks
    others = {u: [w for w in everyone if w != u] for u in everyone}

    b = GameBuilder()
    for u in maxs:
        b.max(u, *rng.sample(others[u], params.out_degree))
    for u in mins:
        b.min(u, *rng.sample(others[u], params.d))
    for u in rands:
        k = rng.randint(1, min(params.d, params.q, len(others[u])))
        succ = rng.sample(others[u], k)
        b.random(u, dict(zip(succ, random_distribution(rng, k, params.q))))
    for i, u in enumerate(sinks):
        if params.n_sinks >= 2 and i < 2:
            b.sink(u, i)
        else:
            b.sink(u, random_sink_value(rng, params.q))
    return b.build()
