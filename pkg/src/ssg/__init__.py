"""Exact solvers for simple stochastic games."""

from ssg.evaluation import (
    AbsorptionResult,
    CapExceededError,
    SwitchReport,
    best_response,
    brute_force_best_response,
    evaluate_pair,
    is_locally_optimal,
    is_optimal,
    switch_report,
    total_switch,
)
from ssg.game import (
    SSG,
    GameBuilder,
    GameFormatError,
    InvalidGameError,
    Kind,
    Order,
    compare_value_vectors,
    parse_game,
    parse_strategy,
    serialize_game,
    serialize_strategy,
    validate,
)
from ssg.solvers import (
    RunStats,
    bound_decreasing_fixed_set,
    bound_recursive_pair,
    enumerate_super_switches,
    solve_brute_force,
    solve_decreasing_fixed_set,
    solve_hoffman_karp,
    solve_recursive_pair,
)
from ssg.subgame import fix_vertices, lift_strategy

__version__ = "0.1.0"
