"""Value vectors, MIN best responses and switch sets.

Plays that never reach a sink pay 0, which is what makes the strategy
improvement machinery sound without assuming the game is stopping.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Mapping, Sequence

from ssg.game import SSG, Kind, Strategy, ValueVector
from ssg.linalg import SingularSystemError, solve

DEFAULT_ENUMERATION_CAP = 2**16

_ZERO = Fraction(0)


class CapExceededError(ValueError):
    """Raised when an exhaustive enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class AbsorptionResult:
    values: ValueVector
    # vertices that cannot reach any sink in the induced chain
    dead_region: frozenset[int]


@dataclass(frozen=True)
class SwitchReport:
    switch_set: frozenset[int]
    improvement_sets: dict[int, frozenset[int]]
    best_options: dict[int, int]


def evaluate_pair(game: SSG, sigma: Mapping[int, int], tau: Mapping[int, int]) -> AbsorptionResult:
    """Solve the Markov chain obtained by fixing both players' choices.

    Chains of controlled vertices are collapsed onto the first random vertex
    or sink they lead to, so the exact linear system has one unknown per
    random vertex that can still reach a sink.
    """
    vs = game.vertices
    size = len(vs)
    chosen = {**sigma, **tau}

    preds: list[list[int]] = [[] for _ in range(size)]
    for x, v in enumerate(vs):
        if v.kind is Kind.RANDOM:
            for y in v.succ:
                preds[y].append(x)
        elif v.kind is not Kind.SINK:
            preds[chosen[x]].append(x)
    alive = set(game.sinks)
    stack = list(alive)
    while stack:
        y = stack.pop()
        for x in preds[y]:
            if x not in alive:
                alive.add(x)
                stack.append(x)
    dead = frozenset(range(size)) - alive

    # alive controlled vertices lead deterministically to a random vertex or sink
    rep: dict[int, int] = {}
    for x in alive:
        path = []
        y = x
        while vs[y].kind in (Kind.MAX, Kind.MIN) and y not in rep:
            path.append(y)
            y = chosen[y]
        target = rep.get(y, y)
        for z in path:
            rep[z] = target

    unknowns = [x for x in game.random_vertices if x in alive]
    column = {x: i for i, x in enumerate(unknowns)}
    m = len(unknowns)
    a = [[_ZERO] * m for _ in range(m)]
    b = [_ZERO] * m
    for i, x in enumerate(unknowns):
        a[i][i] += 1
        for y, p in zip(vs[x].succ, vs[x].probs):
            if y in dead:
                continue
            t = rep.get(y, y)
            if vs[t].kind is Kind.SINK:
                b[i] += p * vs[t].value
            else:
                a[i][column[t]] -= p
    try:
        solution = solve(a, b) if m else []
    except SingularSystemError as exc:  # pragma: no cover - excluded by the dead region
        raise RuntimeError("absorption system singular despite dead-region removal") from exc

    values = [_ZERO] * size
    for x in game.sinks:
        values[x] = vs[x].value
    for x, val in zip(unknowns, solution):
        values[x] = val
    for x, t in rep.items():
        values[x] = values[t]
    return AbsorptionResult(tuple(values), dead)


def zero_forcing_region(game: SSG, sigma: Mapping[int, int]) -> frozenset[int]:
    """Vertices from which MIN can keep the token off positive sinks forever."""
    vs = game.vertices
    region = {x for x, v in enumerate(vs) if not (v.kind is Kind.SINK and v.value > 0)}
    changed = True
    while changed:
        changed = False
        for x in list(region):
            v = vs[x]
            if v.kind is Kind.MAX:
                stays = sigma[x] in region
            elif v.kind is Kind.MIN:
                stays = any(y in region for y in v.succ)
            elif v.kind is Kind.RANDOM:
                stays = all(y in region for y in v.succ)
            else:
                stays = True
            if not stays:
                region.discard(x)
                changed = True
    return frozenset(region)


def best_response(game: SSG, sigma: Mapping[int, int]) -> tuple[Strategy, ValueVector]:
    """Return a MIN best response to ``sigma`` and the resulting values.

    The zero-forcing region is pinned to 0 first. Outside it every induced
    chain is transient, so MIN policy iteration (switch to a strictly
    smaller successor, keep the current choice on ties) converges to the
    pointwise minimum.
    """
    vs = game.vertices
    zero = zero_forcing_region(game, sigma)
    tau: Strategy = {}
    free = []
    for x in game.min_vertices:
        if x in zero:
            tau[x] = min(y for y in vs[x].succ if y in zero)
        else:
            tau[x] = min(vs[x].succ)
            free.append(x)
    while True:
        values = evaluate_pair(game, sigma, tau).values
        switched = False
        for x in free:
            best = min(vs[x].succ, key=lambda y: (values[y], y))
            if values[best] < values[tau[x]]:
                tau[x] = best
                switched = True
        if not switched:
            return tau, values


def brute_force_best_response(
    game: SSG, sigma: Mapping[int, int], cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[Strategy, ValueVector]:
    """Exhaustive oracle for :func:`best_response`."""
    vs = game.vertices
    mins = game.min_vertices
    count = prod(len(vs[x].succ) for x in mins)
    if count > cap:
        raise CapExceededError(f"{count} MIN strategies exceed the cap of {cap}")
    results = []
    for choice in itertools.product(*(vs[x].succ for x in mins)):
        tau = dict(zip(mins, choice))
        results.append((tau, evaluate_pair(game, sigma, tau).values))
    lowest = tuple(min(col) for col in zip(*(val for _, val in results)))
    for tau, values in results:
        if values == lowest:
            return tau, values
    raise RuntimeError("no MIN strategy attains the pointwise minimum")


def switch_report(game: SSG, sigma: Mapping[int, int], values: Sequence[Fraction]) -> SwitchReport:
    improvement: dict[int, frozenset[int]] = {}
    best: dict[int, int] = {}
    for x in game.max_vertices:
        better = frozenset(y for y in game.vertices[x].succ if values[y] > values[x])
        if better:
            improvement[x] = better
            best[x] = min(better, key=lambda y: (-values[y], y))
    return SwitchReport(frozenset(improvement), improvement, best)


def total_switch(game: SSG, sigma: Mapping[int, int], report: SwitchReport) -> Strategy:
    if not report.switch_set:
        raise ValueError("total switch of a strategy with an empty switch set")
    return {**sigma, **report.best_options}


def is_locally_optimal(game: SSG, values: Sequence[Fraction]) -> bool:
    for x, v in enumerate(game.vertices):
        if v.kind is Kind.MAX and values[x] != max(values[y] for y in v.succ):
            return False
        if v.kind is Kind.MIN and values[x] != min(values[y] for y in v.succ):
            return False
    return True


def is_optimal(game: SSG, sigma: Mapping[int, int]) -> bool:
    _, values = best_response(game, sigma)
    return not switch_report(game, sigma, values).switch_set
