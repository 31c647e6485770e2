"""Strategy improvement solvers for simple stochastic games.

All four solvers return ``(sigma, values, stats)`` where ``sigma`` is an
optimal MAX strategy, ``values`` its value vector and ``stats`` a
:class:`RunStats` recording what the run did.  ``stats.evaluations`` counts
calls to :func:`~ssg.evaluation.best_response`, the unit of cost used by the
theoretical bounds.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import prod
from typing import AbstractSet, Callable, Iterator, Mapping

from ssg.evaluation import (
    DEFAULT_ENUMERATION_CAP,
    CapExceededError,
    best_response,
    switch_report,
    total_switch,
)
from ssg.game import SSG, InvalidGameError, Strategy, ValueVector, initial_strategy, validate
from ssg.subgame import fix_vertices, lift_strategy

ALGORITHMS = ("brute", "hk", "rp", "dfs")


@dataclass
class Invocation:
    """One call of a solver on one (sub)game."""

    depth: int
    n: int
    d: int = 0
    # RP: switch set after every recursive return; DFS: S_0, S_1, ... in order;
    # HK: switch set of every visited strategy
    switch_sets: list[frozenset[int]] = field(default_factory=list)
    # sets of MAX vertices fixed for each recursive call
    fixed_sets: list[frozenset[int]] = field(default_factory=list)
    call_sizes: list[int] = field(default_factory=list)
    visited_values: list[ValueVector] = field(default_factory=list)
    loop_iterations: int = 0

    @property
    def subgame_solves(self) -> int:
        return len(self.call_sizes)

    def switch_size_count(self, size: int) -> int:
        return sum(1 for s in self.switch_sets if len(s) == size)

    @property
    def n0(self) -> int:
        return self.switch_size_count(0)

    @property
    def n1(self) -> int:
        return self.switch_size_count(1)

    @property
    def n2(self) -> int:
        return self.switch_size_count(2)


@dataclass
class RunStats:
    algorithm: str
    evaluations: int = 0
    invocations: list[Invocation] = field(default_factory=list)
    recursive_call_sizes: list[int] = field(default_factory=list)
    wall_ms: float = 0.0

    def open(self, depth: int, game: SSG) -> Invocation:
        inv = Invocation(depth, game.n, game.d)
        self.invocations.append(inv)
        return inv

    @property
    def visited_values(self) -> list[ValueVector]:
        return self.invocations[0].visited_values if self.invocations else []

    @property
    def max_depth(self) -> int:
        return max((inv.depth for inv in self.invocations), default=0)

    @property
    def loop_iterations(self) -> int:
        """Headline loop count of the run.

        Strategies enumerated (brute), total switches (hk), and for the
        recursive solvers the largest per-invocation count: subgame solves
        for rp, while-loop iterations for dfs.
        """
        if self.algorithm == "rp":
            return max((inv.subgame_solves for inv in self.invocations), default=0)
        return max((inv.loop_iterations for inv in self.invocations), default=0)


@dataclass(frozen=True)
class SuperSwitch:
    strategy: Strategy
    switched: frozenset[int]
    fixed: frozenset[int]
    values: ValueVector


def _require_valid(game: SSG) -> None:
    problems = validate(game)
    if problems:
        raise InvalidGameError("; ".join(map(str, problems)))


def _evaluate(game: SSG, sigma: Mapping[int, int], stats: RunStats) -> ValueVector:
    stats.evaluations += 1
    return best_response(game, sigma)[1]


def _timed(algorithm: str, body: Callable[[RunStats], tuple[Strategy, ValueVector]]):
    stats = RunStats(algorithm)
    start = time.perf_counter()
    sigma, values = body(stats)
    stats.wall_ms = (time.perf_counter() - start) * 1000
    return sigma, values, stats


def max_strategy_count(game: SSG) -> int:
    return prod(len(game.vertices[x].succ) for x in game.max_vertices)


def all_max_strategies(game: SSG) -> Iterator[Strategy]:
    xs = game.max_vertices
    for choice in itertools.product(*(game.vertices[x].succ for x in xs)):
        yield dict(zip(xs, choice))


# -- brute force -------------------------------------------------------------


def _brute_force(game: SSG, stats: RunStats, depth: int = 0):
    inv = stats.open(depth, game)
    results = []
    for sigma in all_max_strategies(game):
        values = _evaluate(game, sigma, stats)
        results.append((sigma, values, not switch_report(game, sigma, values).switch_set))
        inv.loop_iterations += 1
    top = tuple(max(col) for col in zip(*(v for _, v, _ in results)))
    optimal = [(s, v) for s, v, empty in results if empty]
    if not optimal or any(v != top for _, v in optimal) or all(v != top for _, v, _ in results):
        raise RuntimeError("strategies with empty switch sets do not share one optimal value")
    sigma, values = optimal[0]
    inv.visited_values.append(values)
    return sigma, values


def solve_brute_force(game: SSG, cap: int = DEFAULT_ENUMERATION_CAP):
    """Enumerate every MAX strategy and certify the optimum.

    Raises:
        CapExceededError: if the game has more than ``cap`` MAX strategies.
    """
    _require_valid(game)
    count = max_strategy_count(game)
    if count > cap:
        raise CapExceededError(f"{count} MAX strategies exceed the cap of {cap}")
    return _timed("brute", lambda stats: _brute_force(game, stats))


# -- Hoffman-Karp -------------------------------------------------------------


def solve_hoffman_karp(game: SSG, start: Mapping[int, int] | None = None):
    """Apply total switches from ``start`` until the switch set is empty."""
    _require_valid(game)

    def body(stats: RunStats):
        inv = stats.open(0, game)
        sigma = dict(start) if start is not None else initial_strategy(game)
        while True:
            values = _evaluate(game, sigma, stats)
            report = switch_report(game, sigma, values)
            inv.visited_values.append(values)
            inv.switch_sets.append(report.switch_set)
            if not report.switch_set:
                return sigma, values
            sigma = total_switch(game, sigma, report)
            inv.loop_iterations += 1

    return _timed("hk", body)


# -- RecursivePair ------------------------------------------------------------


def _recursive_pair(game: SSG, stats: RunStats, depth: int):
    xs = game.max_vertices
    if len(xs) <= 1:
        return _brute_force(game, stats, depth)
    inv = stats.open(depth, game)
    sigma = initial_strategy(game)
    pair = frozenset(xs[:2])
    while True:
        sub = fix_vertices(game, pair, sigma)
        inv.call_sizes.append(sub.n)
        inv.fixed_sets.append(pair)
        stats.recursive_call_sizes.append(sub.n)
        sub_sigma, values = _recursive_pair(sub, stats, depth + 1)
        sigma = lift_strategy(sub_sigma, pair, sigma)
        # values of the subgame equal v_sigma in this game
        report = switch_report(game, sigma, values)
        inv.switch_sets.append(report.switch_set)
        inv.visited_values.append(values)
        if not report.switch_set:
            return sigma, values
        sigma = total_switch(game, sigma, report)
        inv.loop_iterations += 1


def solve_recursive_pair(game: SSG):
    """Fix the two lowest-index MAX vertices, solve the rest recursively, switch."""
    _require_valid(game)
    return _timed("rp", lambda stats: _recursive_pair(game, stats, 0))


# -- DecreasingFixedSet -------------------------------------------------------


def _decreasing_fixed_set(game: SSG, stats: RunStats, depth: int):
    inv = stats.open(depth, game)
    if game.n == 0:
        values = _evaluate(game, {}, stats)
        inv.visited_values.append(values)
        return {}, values

    sigma = initial_strategy(game)
    values = _evaluate(game, sigma, stats)
    report = switch_report(game, sigma, values)
    inv.visited_values.append(values)
    inv.switch_sets.append(report.switch_set)
    if not report.switch_set:
        return sigma, values

    previous = report.switch_set
    sigma = total_switch(game, sigma, report)
    values = _evaluate(game, sigma, stats)
    report = switch_report(game, sigma, values)
    inv.visited_values.append(values)
    inv.switch_sets.append(report.switch_set)
    fixed = previous | report.switch_set
    current = report.switch_set

    while current:
        sigma = total_switch(game, sigma, report)
        sub = fix_vertices(game, fixed, sigma)
        inv.fixed_sets.append(fixed)
        inv.call_sizes.append(sub.n)
        stats.recursive_call_sizes.append(sub.n)
        sub_sigma, values = _decreasing_fixed_set(sub, stats, depth + 1)
        sigma = lift_strategy(sub_sigma, fixed, sigma)
        report = switch_report(game, sigma, values)
        inv.visited_values.append(values)
        inv.switch_sets.append(report.switch_set)
        inv.loop_iterations += 1
        fixed = current | report.switch_set
        current = report.switch_set
    return sigma, values


def solve_decreasing_fixed_set(game: SSG):
    """Recursive solver for binary games that never recurses on n-1 MAX vertices.

    Raises:
        InvalidGameError: if some MAX vertex does not have outdegree exactly 2.
    """
    _require_valid(game)
    if not game.is_binary:
        raise InvalidGameError("DecreasingFixedSet requires a binary game")
    return _timed("dfs", lambda stats: _decreasing_fixed_set(game, stats, 0))


SOLVERS = {
    "brute": solve_brute_force,
    "hk": solve_hoffman_karp,
    "rp": solve_recursive_pair,
    "dfs": solve_decreasing_fixed_set,
}


# -- super-switches -----------------------------------------------------------


def enumerate_super_switches(
    game: SSG,
    sigma: Mapping[int, int],
    fixed: AbstractSet[int],
    cap: int = DEFAULT_ENUMERATION_CAP,
    solver=solve_hoffman_karp,
) -> list[SuperSwitch]:
    """Every (sigma, fixed)-super-switch, one per switched set and choice.

    For each nonempty ``D`` inside ``fixed`` and the switch set, and each
    choice of improving successors on ``D``, the intermediate switch is
    frozen on ``fixed`` and the remaining subgame is solved with ``solver``.
    """
    _, values = best_response(game, sigma)
    report = switch_report(game, sigma, values)
    fixed = frozenset(fixed)
    candidates = sorted(fixed & report.switch_set)
    if not candidates:
        raise ValueError("fixed set does not intersect the switch set")
    count = prod(1 + len(report.improvement_sets[x]) for x in candidates) - 1
    if count > cap:
        raise CapExceededError(f"{count} super-switches exceed the cap of {cap}")
    out = []
    for size in range(1, len(candidates) + 1):
        for switched in itertools.combinations(candidates, size):
            options = [sorted(report.improvement_sets[x]) for x in switched]
            for choice in itertools.product(*options):
                intermediate = {**sigma, **dict(zip(switched, choice))}
                sub = fix_vertices(game, fixed, intermediate)
                sub_sigma, sub_values, _ = solver(sub)
                out.append(
                    SuperSwitch(
                        lift_strategy(sub_sigma, fixed, intermediate),
                        frozenset(switched),
                        fixed,
                        sub_values,
                    )
                )
    return out


# -- bounds ----------------------------------------------------------------------


def bound_recursive_pair(d: int) -> int:
    """Most subgame solves one RecursivePair invocation makes at degree ``d``."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    return (d + 1) ** 2 // 2 - 1


def bound_decreasing_fixed_set(n: int) -> int:
    """Evaluation budget of DecreasingFixedSet on a binary game with ``n`` MAX vertices.

    ``C(0) = 1``, ``C(1) = 2`` and ``C(n) = C(n-2) + ... + C(1) + 3 C(0)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    c = [1, 2]
    for k in range(2, n + 1):
        c.append(sum(c[1 : k - 1]) + 3 * c[0])
    return c[n]
