from fractions import Fraction

import pytest
from hypothesis import given, settings

from twistorcalc.arith import (UniPoly, bernoulli, interpolate, nullspace, poly_substitute_affine,
                               series_div, series_exp, series_log, series_mul, solve_linear_system)
from twistorcalc.errors import SingularMatrix
from twistorcalc.lie import dim_closed

from strategies import small_fractions, unipolys

F = Fraction
k = UniPoly.x()


@pytest.mark.parametrize("j, value", [(1, F(1, 6)), (2, F(1, 30)), (3, F(1, 42)), (4, F(1, 30)),
                                      (5, F(5, 66)), (6, F(691, 2730))])
def test_bernoulli_values(j, value):
    assert bernoulli(j) == value


@pytest.mark.parametrize("bad", [0, -1])
def test_bernoulli_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        bernoulli(bad)


def test_solve_identity():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert solve_linear_system(eye, [2, 2, 4]) == [2, 2, 4]


def test_solve_index_constraints():
    rows = [[-10, 16, -3], [16, 24, 1], [24, -26, 1]]
    assert solve_linear_system(rows, [0, 84, 0]) == [2, 2, 4]


def test_solve_singular():
    with pytest.raises(SingularMatrix):
        solve_linear_system([[1, 1], [2, 2]], [1, 2])


def test_nullspace_dimension():
    assert len(nullspace([[1, 2, 3]])) == 2
    assert nullspace([[1, 0], [0, 1]]) == []


def test_affine_substitution():
    assert poly_substitute_affine(k ** 2, 1, 0) == k ** 2
    assert poly_substitute_affine(k, -1, -5) == -k - 5


def test_affine_substitution_gives_reflection_identity():
    a = dim_closed("A").poly
    reflected = poly_substitute_affine(a, -1, 0)
    shifted = poly_substitute_affine(a, 1, -5)
    assert reflected == -shifted


def test_format_and_degree():
    p = UniPoly([-1, 0, F(1, 45)])
    assert p.format() == "1/45*k^2 - 1"
    assert UniPoly().degree == float("-inf")
    assert UniPoly([0, 0, 3]).degree == 2


def test_divmod_exact():
    p = UniPoly.from_roots([1, 2, 3])
    q, r = divmod(p, UniPoly.from_roots([2]))
    assert not r and q == UniPoly.from_roots([1, 3])


def test_interpolate_recovers_polynomial():
    p = UniPoly([3, F(-1, 2), 0, F(7, 3)])
    assert interpolate([(x, p(x)) for x in range(-2, 3)]) == p


def test_series_log_exp_inverse():
    s = [F(1), F(1, 3), F(-1, 45), F(2, 945)]
    assert series_exp(series_log(s, 4), 4) == s
    assert series_mul(series_div(s, [F(1), F(1, 6)], 4), [F(1), F(1, 6)], 4) == s


@settings(max_examples=100, deadline=None)
@given(unipolys(), unipolys(), small_fractions)
def test_unipoly_ring_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert p.compose(q)(x) == p(q(x))


@settings(max_examples=100, deadline=None)
@given(unipolys(), unipolys())
def test_division_algorithm(p, q):
    if not q:
        return
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree
