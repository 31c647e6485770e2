"""Subgames where MAX is forced to play a given strategy on a vertex set."""

from __future__ import annotations

from fractions import Fraction
from typing import AbstractSet, Mapping

from ssg.game import SSG, Kind, Strategy, Vertex

_ONE = Fraction(1)


def fix_vertices(game: SSG, fixed: AbstractSet[int], sigma: Mapping[int, int]) -> SSG:
    """Turn every MAX vertex of ``fixed`` into a probability-1 random vertex.

    The fixed vertex keeps its index and label and moves to ``sigma[x]``.
    """
    vs = list(game.vertices)
    for x in fixed:
        v = vs[x]
        if v.kind is not Kind.MAX:
            raise ValueError(f"cannot fix non-MAX vertex {v.label!r}")
        if sigma[x] not in v.succ:
            raise ValueError(f"({v.label}, {game.label(sigma[x])}) is not an arc")
        vs[x] = Vertex(v.label, Kind.RANDOM, (sigma[x],), (_ONE,))
    return SSG(tuple(vs))


def restrict_strategy(sigma: Mapping[int, int], sub: SSG) -> Strategy:
    """Part of a full-game strategy that is still a choice in ``sub``."""
    return {x: sigma[x] for x in sub.max_vertices}


def lift_strategy(sub_sigma: Mapping[int, int], fixed: AbstractSet[int], sigma: Mapping[int, int]) -> Strategy:
    """Full-game strategy playing ``sigma`` on ``fixed`` and ``sub_sigma`` elsewhere."""
    lifted = {x: sigma[x] for x in fixed}
    lifted.update(sub_sigma)
    return lifted
