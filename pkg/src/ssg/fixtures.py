"""Small reference games used by the tests, the README and the CLI demo."""

from __future__ import annotations

from ssg.game import SSG, GameBuilder


def figure1_game() -> SSG:
    """Four MAX (x1-x4), three MIN (n1-n3), three uniform random vertices."""
    return (
        GameBuilder()
        .max("x1", "1", "n2")
        .max("x2", "n2", "r2")
        .max("x3", "0", "x2")
        .max("x4", "x3", "r2")
        .min("n1", "1", "r1")
        .min("n2", "x1", "n3")
        .min("n3", "0", "x3")
        .random("r1", ["1", "r2", "x2"])
        .random("r2", ["n1", "x3", "x4", "r3"])
        .random("r3", ["1", "r2", "x4"])
        .sink("0", 0)
        .sink("1", 1)
        .build()
    )


def figure3_game() -> SSG:
    """Five MAX vertices over a uniform three-vertex random cycle."""
    return (
        GameBuilder()
        .max("x1", "0", "r3")
        .max("x2", "r1", "x3")
        .max("x3", "r3", "x4")
        .max("x4", "x3", "1")
        .max("x5", "r2", "1")
        .random("r1", ["0", "r3"])
        .random("r2", ["0", "r1"])
        .random("r3", ["r2", "1"])
        .sink("0", 0)
        .sink("1", 1)
        .build()
    )


FIG3_SIGMA = {"x1": "r3", "x2": "r1", "x3": "x4", "x4": "x3", "x5": "r2"}
# sigma switched on x3 and x4
FIG3_SIGMA_PRIME = {"x1": "r3", "x2": "r1", "x3": "r3", "x4": "1", "x5": "r2"}
# the super-switch: sigma' solved on the unfixed vertices
FIG3_SIGMA_SECOND = {"x1": "r3", "x2": "x3", "x3": "r3", "x4": "1", "x5": "r2"}
FIG3_OPTIMAL = {"x1": "r3", "x2": "x3", "x3": "x4", "x4": "1", "x5": "1"}
