"""Shared corpus construction and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import networkx as nx
import sympy

from ssg.game import SSG, Kind
from ssg.generator import GeneratorParams, generate


def corpus_params(i: int) -> GeneratorParams:
    """Mixed-degree instance ``i`` of the acceptance corpus."""
    rng = random.Random(10_000 + i)
    kind = i % 4
    d, n = {0: (2, 8), 1: (2, 8), 2: (3, 6), 3: (4, 5)}[kind]
    n_max, n_min, n_random, n_sinks = (
        rng.randint(0, n), rng.randint(0, 3), rng.randint(1, 6), rng.randint(2, 4)
    )
    # enough other vertices for d distinct successors
    n_random = max(n_random, d + 1 - n_max - n_min - n_sinks)
    return GeneratorParams(
        n_max=n_max,
        n_min=n_min,
        n_random=n_random,
        n_sinks=n_sinks,
        d=d,
        q=rng.randint(2, 10),
        seed=i,
        require_binary=(d == 2),
    )


def corpus(count: int) -> list[SSG]:
    return [generate(corpus_params(i)) for i in range(count)]


def binary_games(count: int, n_max_hi: int, seed: int = 0, n_max_lo: int = 2) -> list[SSG]:
    rng = random.Random(seed)
    return [
        generate(
            GeneratorParams(
                n_max=rng.randint(n_max_lo, n_max_hi),
                n_min=rng.randint(0, 2),
                n_random=rng.randint(1, 5),
                n_sinks=rng.randint(2, 3),
                q=rng.randint(2, 8),
                seed=rng.getrandbits(63),
                require_binary=True,
            )
        )
        for _ in range(count)
    ]


def can_avoid_sinks(game: SSG) -> bool:
    """True if the players together can keep the token off every sink forever.

    Such a game is not stopping.
    """
    region = {x for x, v in enumerate(game.vertices) if v.kind is not Kind.SINK}
    changed = True
    while changed:
        changed = False
        for x in list(region):
            v = game.vertices[x]
            keep = all(y in region for y in v.succ) if v.kind is Kind.RANDOM else any(
                y in region for y in v.succ
            )
            if not keep:
                region.discard(x)
                changed = True
    return bool(region)


def oracle_values(game: SSG, sigma, tau) -> tuple[Fraction, ...]:
    """Absorption values from the uncompressed linear system (networkx + sympy)."""
    chosen = {**sigma, **tau}
    g = nx.DiGraph()
    g.add_nodes_from(range(game.n_total))
    for x, v in enumerate(game.vertices):
        if v.kind is Kind.RANDOM:
            g.add_edges_from((x, y) for y in v.succ)
        elif v.kind is not Kind.SINK:
            g.add_edge(x, chosen[x])
    alive = set()
    for s in game.sinks:
        alive |= nx.ancestors(g, s) | {s}
    unknowns = [x for x in range(game.n_total) if x in alive and game.vertices[x].kind is not Kind.SINK]
    col = {x: i for i, x in enumerate(unknowns)}
    m = len(unknowns)
    a = sympy.zeros(m, m)
    b = sympy.zeros(m, 1)
    for i, x in enumerate(unknowns):
        v = game.vertices[x]
        a[i, i] = 1
        arcs = zip(v.succ, v.probs) if v.kind is Kind.RANDOM else [(chosen[x], Fraction(1))]
        for y, p in arcs:
            p = sympy.Rational(p.numerator, p.denominator)
            w = game.vertices[y]
            if w.kind is Kind.SINK:
                b[i] += p * sympy.Rational(w.value.numerator, w.value.denominator)
            elif y in alive:
                a[i, col[y]] -= p
    sol = a.LUsolve(b) if m else []
    out = []
    for x, v in enumerate(game.vertices):
        if v.kind is Kind.SINK:
            out.append(v.value)
        elif x in col:
            q = sympy.Rational(sol[col[x]])
            out.append(Fraction(int(q.p), int(q.q)))
        else:
            out.append(Fraction(0))
    return tuple(out)
