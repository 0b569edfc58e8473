from fractions import Fraction
import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bihcert.chen import (MultiPoly, displayed_checks_pass, laplacian, phi, power_sum,
                          verify_example)


def sympy_of(p: MultiPoly, xs):
    return sum(sympy.Rational(c.numerator, c.denominator)
               * sympy.prod([x**e for x, e in zip(xs, mono)]) for mono, c in p.terms.items())


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def multipolys(draw, m):
    terms = {}
    for _ in range(draw(st.integers(0, 6))):
        mono = tuple(draw(st.lists(st.integers(0, 5), min_size=m, max_size=m)))
        if sum(mono) <= 5:
            terms[mono] = draw(coeff)
    return MultiPoly(m, terms)


@given(st.integers(1, 4).flatmap(lambda m: st.tuples(multipolys(m), multipolys(m))), coeff, coeff)
@settings(max_examples=60, deadline=None)
def test_laplacian_linear(pq, a, b):
    p, q = pq
    assert laplacian(a * p + b * q) == a * laplacian(p) + b * laplacian(q)


@given(st.integers(1, 4).flatmap(lambda m: st.tuples(multipolys(m), st.permutations(range(m)))))
@settings(max_examples=60, deadline=None)
def test_laplacian_commutes_with_permutation(data):
    p, perm = data
    assert laplacian(p.permute(perm)) == laplacian(p).permute(perm)


@pytest.mark.parametrize("m", range(1, 5))
def test_phi_equivariance(m):
    for perm in itertools.permutations(range(m)):
        for i in range(m):
            assert phi(m, i).permute(perm) == phi(m, perm[i])


@pytest.mark.parametrize("m", range(1, 4))
def test_laplacian_against_sympy(m):
    xs = sympy.symbols(f"x1:{m + 1}")
    p = phi(m, 0) * power_sum(m, 2) + MultiPoly.var(m, m - 1, 3)
    ref = sum(sympy.diff(sympy_of(p, xs), x, 2) for x in xs)
    assert sympy.expand(sympy_of(laplacian(p), xs) - ref) == 0


@pytest.mark.parametrize("m", range(1, 7))
def test_bilaplacian_vanishes(m):
    for i in range(m):
        assert laplacian(laplacian(phi(m, i))).is_zero()


@pytest.mark.parametrize("m", range(1, 7))
def test_example_identities(m):
    rep = verify_example(m, points=200)
    assert displayed_checks_pass(rep)
    assert rep.check("(d') |grad tau|^2 closed form").equal
    assert rep.check("(d) |grad tau|^2 as displayed").equal == (m == 1)
    assert rep.all_equal == (m == 1)


def test_gradient_difference_polynomial():
    rep = verify_example(2, points=10)
    diff = rep.check("(d) |grad tau|^2 as displayed").difference
    s2 = power_sum(2, 2)
    assert diff == 1152 * (s2 - s2 * s2)


def test_gradient_against_sympy():
    m = 3
    xs = sympy.symbols("x1:4")
    s2 = sum(x**2 for x in xs)
    taus = [sympy.expand(sum(sympy.diff(sum(x**4 for x in xs) - m * xs[i]**4, x, 2) for x in xs))
            for i in range(m)]
    grad = sum(sympy.diff(t, x)**2 for t in taus for x in xs)
    assert sympy.expand(grad - 576 * m * (m - 1) * s2) == 0


def test_evaluation_and_str():
    p = MultiPoly(2, {(2, 0): 3, (0, 1): Fraction(-1, 2)})
    assert p([2, 4]) == 10
    assert str(p) == "3*x1^2 - 1/2*x2"
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        verify_example(0)


def test_report_dict():
    d = verify_example(2, points=5).to_dict()
    assert d["schema"] == 1 and d["m"] == 2
    assert len(d["checks"]) == 2 + 2 + 1 + 2
