import random
from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bihcert.poly import (EndpointRootError, Interval, NotPositive, Poly, PolyError,
                          PositivityCertificate, QuadExtPoint, RationalFunction, X,
                          certify_positive, count_roots, exact_real_roots,
                          isolate_and_refine, poly_arith, rational_roots, sturm_sequence)

SX = sympy.Symbol("x")


def to_sympy(p: Poly):
    return sum(sympy.Rational(c.numerator, c.denominator) * SX**k for k, c in enumerate(p.coeffs))


def from_sympy(expr) -> Poly:
    coeffs = sympy.Poly(expr, SX).all_coeffs()[::-1]
    return Poly([Fraction(int(sympy.numer(c)), int(sympy.denom(c))) for c in coeffs])


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(fractions, max_size=7).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


# ---------------------------------------------------------------------------
# ring axioms


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly()
    assert p * Poly.const(1) == p


@given(polys, nonzero_polys)
def test_division_identity(p, q):
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


@given(polys, polys, fractions)
def test_evaluation_is_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@given(nonzero_polys, nonzero_polys)
def test_gcd_matches_sympy(p, q):
    g = p.gcd(q)
    ref = from_sympy(sympy.gcd(to_sympy(p), to_sympy(q)))
    assert g.monic() == ref.monic()


@given(polys)
def test_derivative_matches_sympy(p):
    assert p.derivative() == from_sympy(sympy.diff(to_sympy(p), SX) + 0 * SX)


def test_poly_arith_dispatch():
    p, q = X**2 - 1, X - 1
    assert poly_arith(p, q, "add") == X**2 + X - 2
    assert poly_arith(p, q, "divmod") == (X + 1, Poly())
    assert poly_arith(p, q, "gcd").monic() == q
    with pytest.raises(PolyError):
        poly_arith(p, Poly(), "gcd")
    with pytest.raises(PolyError):
        divmod(p, Poly())


@given(nonzero_polys, nonzero_polys)
def test_rational_function_normal_form(p, q):
    f = RationalFunction(p * q, q)
    assert f == RationalFunction(p)
    assert f.den == Poly([1])


# ---------------------------------------------------------------------------
# quadratic extension


SURDS = [2, 3, 5, 6, 7, 10]


@given(fractions, fractions, st.sampled_from(SURDS), fractions, fractions)
def test_quadext_against_mpmath(a, b, d, c, e):
    mpmath.mp.dps = 50
    x = QuadExtPoint(a, b, d)
    y = QuadExtPoint(c, e, d)
    fx = mpmath.mpf(a.numerator) / a.denominator + mpmath.mpf(b.numerator) / b.denominator * mpmath.sqrt(d)
    fy = mpmath.mpf(c.numerator) / c.denominator + mpmath.mpf(e.numerator) / e.denominator * mpmath.sqrt(d)
    assert abs((x * y).to_mpf() - fx * fy) < mpmath.mpf(10) ** -40
    assert abs((x + y).to_mpf() - (fx + fy)) < mpmath.mpf(10) ** -40
    if not x.is_zero():
        assert abs((y / x).to_mpf() - fy / fx) < mpmath.mpf(10) ** -35 * (1 + abs(fy / fx))
    s = 0 if fx == 0 else (1 if fx > 0 else -1)
    assert x.sign() == s
    assert (x < y) == (fx < fy)


@given(fractions, fractions.filter(bool), st.sampled_from(SURDS))
def test_quadext_minimal_poly(a, b, d):
    x = QuadExtPoint(a, b, d)
    mp = x.minimal_poly()
    assert mp.degree == 2
    assert (x * x * mp[2] + x * mp[1] + mp[0]).is_zero()


def test_quadext_sqrt_reduces():
    assert QuadExtPoint.sqrt(Fraction(4, 9)) == Fraction(2, 3)
    s = QuadExtPoint.sqrt(12)
    assert isinstance(s, QuadExtPoint) and (s.a, s.b, s.d) == (0, 2, 3)
    assert str(QuadExtPoint(1, Fraction(2, 7), 7)) == "1 + 2/7*sqrt(7)"


# ---------------------------------------------------------------------------
# Sturm counting


@given(nonzero_polys)
@settings(max_examples=150)
def test_count_matches_sympy(p):
    if p.degree <= 0:
        assert count_roots(p) == 0
        return
    assert count_roots(p) == len(set(sympy.real_roots(sympy.Poly(to_sympy(p), SX))))


def test_sturm_sequence_ends_in_constant():
    chain = sturm_sequence((X**2 - 2) * (X - 3))
    assert chain[-1].degree == 0


def test_count_cubic_with_one_real_root():
    assert count_roots(Poly([-9, 43, -107, 13])) == 1


def test_endpoint_root_policy():
    p = (X - 1) * (X - 3)
    with pytest.raises(EndpointRootError) as ei:
        count_roots(p, 1, 5)
    assert ei.value.endpoint == 1
    assert count_roots(p, 1, 5, deflate=True) == 1
    with pytest.raises(EndpointRootError):
        count_roots(X**2 - 3, QuadExtPoint(0, 1, 3), None)
    assert count_roots(X**2 - 3, QuadExtPoint(0, 1, 3), None, deflate=True) == 0


def test_count_with_quadratic_endpoints():
    p = (X**2 - 3) * (X - 2)
    assert count_roots(p, QuadExtPoint(0, Fraction(1, 3), 3), None) == 2
    assert count_roots(p, QuadExtPoint(0, Fraction(1, 3), 3), QuadExtPoint(0, Fraction(11, 10), 3)) == 1
    with pytest.raises(ValueError):
        count_roots(p, QuadExtPoint(0, Fraction(1, 3), 3), QuadExtPoint(0, 1, 2))


def _sampled_sign_changes(factors, lo, hi, step=Fraction(1, 1000)):
    """Count sign changes of a product of known squarefree factors on a fine
    grid offset from every root."""
    def value(x):
        v = Fraction(1)
        for f in factors:
            v *= f(x)
        return v
    x = lo + Fraction(1, 3001)
    prev = value(x)
    changes = 0
    while x < hi:
        x += step
        cur = value(x)
        if (cur > 0) != (prev > 0):
            changes += 1
        prev = cur
    return changes


def test_sturm_against_dense_sampling():
    rng = random.Random(7)
    for _ in range(40):
        roots = rng.sample(range(-70, 71), rng.randint(0, 4))
        roots = [Fraction(r, 7) for r in roots]
        quads = [X**2 + rng.randint(1, 5) for _ in range(rng.randint(0, 1))]
        lin = [X - r for r in roots]
        mult = [rng.randint(1, 2) for _ in lin]
        p = Poly.const(rng.choice([-3, -1, 2, 5]))
        for f, k in zip(lin, mult):
            p = p * f**k
        for q in quads:
            p = p * q
        if p.degree > 6 or p.degree < 1:
            continue
        lo, hi = Fraction(rng.randint(-110, 0), 11), Fraction(rng.randint(1, 110), 11)
        assert count_roots(p, lo, hi) == _sampled_sign_changes(lin, lo, hi)


# ---------------------------------------------------------------------------
# isolation and refinement


def test_isolation_known_values():
    r = isolate_and_refine((X - 2) * (X + 1) * (X - 1), Interval(QuadExtPoint(0, 1, 3), None))
    assert [x.decimal for x in r] == ["2.00000"]
    r = isolate_and_refine((X**2 - 3) * (X - 2), Interval(QuadExtPoint(0, Fraction(1, 3), 3), None))
    assert [x.decimal for x in r] == ["1.73205", "2.00000"]


def test_truncation_and_rounding():
    [r] = isolate_and_refine(X**2 - 2, Interval(0, None), 6)
    assert r.decimal == "1.41421"
    [r] = isolate_and_refine(3 * X - 2, Interval(0, None), 6, rounding=True)
    assert r.decimal == "0.666667"
    [r] = isolate_and_refine(3 * X - 2, Interval(0, None), 6)
    assert r.decimal == "0.666666"


def test_three_digit_decimals():
    assert [r.decimal for r in isolate_and_refine(X**2 - 1, Interval(), 3)] == ["-1.00", "1.00"]


@given(nonzero_polys, st.integers(1, 12))
@settings(max_examples=80, deadline=None)
def test_isolation_is_disjoint_and_complete(p, digits):
    roots = isolate_and_refine(p, Interval(), digits) if p.degree > 0 else []
    assert len(roots) == (count_roots(p) if p.degree > 0 else 0)
    for a, b in zip(roots, roots[1:]):
        assert a.high <= b.low
    mpmath.mp.dps = 30
    for r in roots:
        assert r.low <= r.high
        if r.exact is None:
            assert r.poly(r.low) * r.poly(r.high) < 0 or not r.simple


def test_exact_real_roots():
    p = (X - Fraction(1, 2)) * (X**2 - 2 * X - Fraction(3, 7))
    rs = exact_real_roots(p)
    assert Fraction(1, 2) in rs
    assert len(rs) == 3
    for r in rs:
        assert p(r) == 0
    assert rational_roots(6 * X**2 - X - 1) == [Fraction(-1, 3), Fraction(1, 2)]


def test_zero_polynomial_rejected():
    with pytest.raises(PolyError):
        count_roots(Poly())
    with pytest.raises(PolyError):
        isolate_and_refine(Poly())


# ---------------------------------------------------------------------------
# positivity certificates


@given(st.lists(fractions, min_size=1, max_size=3), fractions, st.integers(0, 2),
       st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_certificate_implies_positive(roots, shift, kind, rnd):
    p = Poly.const(1)
    for r in roots:
        p = p * ((X - r) ** 2 + [0, Fraction(1, 100), 1][kind])
    p = p + shift
    lo = Fraction(rnd.randint(-30, 0), 3)
    interval = Interval(lo, lo + rnd.randint(1, 30))
    cert = certify_positive(p, interval)
    if isinstance(cert, PositivityCertificate):
        assert cert.verify()
        for _ in range(100):
            x = lo + Fraction(rnd.randint(1, 9999), 10000) * (interval.hi - lo)
            assert p(x) > 0
    else:
        assert isinstance(cert, NotPositive) and not cert
        if cert.witness_point is not None:
            assert p(cert.witness_point) <= 0
        else:
            assert cert.root_count > 0


def test_certificate_on_infinite_ray():
    cert = certify_positive(X**4 - 2 * X**2 + 2, Interval(None, None))
    assert isinstance(cert, PositivityCertificate) and cert.verify()
    assert not certify_positive(X**2 - 2, Interval(0, None))
