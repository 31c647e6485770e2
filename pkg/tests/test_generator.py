import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ssg.game import serialize_game, validate
from ssg.generator import GeneratorParams, generate, random_distribution


def test_same_seed_same_bytes():
    p = GeneratorParams(n_max=6, n_min=2, n_random=5, n_sinks=3, d=3, q=7, seed=2**63 + 5)
    assert serialize_game(generate(p)) == serialize_game(generate(p))


def test_different_seeds_differ():
    games = {serialize_game(generate(GeneratorParams(n_max=5, n_random=4, seed=s))) for s in range(20)}
    assert len(games) > 15


def test_require_binary():
    g = generate(GeneratorParams(n_max=8, n_min=2, n_random=4, d=4, seed=3, require_binary=True))
    assert g.is_binary and g.n == 8


def test_shape():
    p = GeneratorParams(n_max=4, n_min=3, n_random=5, n_sinks=4, d=3, q=5, seed=9)
    g = generate(p)
    assert (g.n, len(g.min_vertices), g.r, len(g.sinks)) == (4, 3, 5, 4)
    assert all(len(g.vertices[x].succ) == 3 for x in g.max_vertices + g.min_vertices)
    for x in g.random_vertices:
        v = g.vertices[x]
        assert 1 <= len(v.succ) <= 3
        assert all(p.denominator <= 5 for p in v.probs)
    values = [g.vertices[s].value for s in g.sinks]
    assert 0 in values and 1 in values
    assert all(v.denominator <= 5 for v in values)


def test_thousand_games_validate():
    rng = random.Random(0)
    for seed in range(1000):
        p = GeneratorParams(
            n_max=rng.randint(0, 8), n_min=rng.randint(0, 3), n_random=rng.randint(0, 6),
            n_sinks=rng.randint(1, 4), d=rng.randint(2, 4), q=rng.randint(2, 10), seed=seed,
            require_binary=rng.random() < 0.5,
        )
        try:
            p.check()
        except ValueError:
            continue
        assert validate(generate(p)) == []


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n_max=1, n_random=0, n_sinks=1),  # two successors, one other vertex
        dict(n_max=1, n_sinks=0),
        dict(n_max=1, d=1),
        dict(n_max=1, q=1),
        dict(n_max=-1),
    ],
)
def test_impossible_params(kwargs):
    with pytest.raises(ValueError):
        generate(GeneratorParams(**kwargs))


@given(st.integers(2, 12).flatmap(lambda q: st.tuples(st.just(q), st.integers(1, q))), st.integers())
def test_distribution_is_exact(qk, seed):
    q, k = qk
    dist = random_distribution(random.Random(seed), k, q)
    assert len(dist) == k and sum(dist) == 1 and all(p > 0 for p in dist)
    assert all(q % p.denominator == 0 for p in dist)
