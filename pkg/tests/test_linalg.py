from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from ssg.linalg import SingularSystemError, solve

entries = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def square_systems(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n),
            st.lists(entries, min_size=n, max_size=n),
        )
    )


def sympy_matrix(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])


@given(square_systems())
def test_matches_sympy(system):
    a, b = system
    m = sympy_matrix(a)
    assume(m.det() != 0)
    expected = m.LUsolve(sympy_matrix([[x] for x in b]))
    got = solve(a, b)
    assert [sympy.Rational(x.numerator, x.denominator) for x in got] == list(expected)
    # substitution, zero tolerance
    assert all(sum(r * x for r, x in zip(row, got)) == rhs for row, rhs in zip(a, b))


def test_small_example():
    half = Fraction(1, 2)
    # absorption system of the uniform 3-cycle r1 -> r3 -> r2 -> r1 with exits
    a = [[1, 0, -half], [-half, 1, 0], [0, -half, 1]]
    assert solve(a, [0, 0, half]) == [Fraction(2, 7), Fraction(1, 7), Fraction(4, 7)]


def test_pivoting_needs_row_swap():
    assert solve([[0, 1], [1, 0]], [3, 4]) == [4, 3]


def test_singular():
    with pytest.raises(SingularSystemError):
        solve([[1, 2], [2, 4]], [1, 2])


def test_non_square():
    with pytest.raises(ValueError):
        solve([[1, 2]], [1])
