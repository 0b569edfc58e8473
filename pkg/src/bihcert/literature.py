"""Published closed forms used as cross-checks against the derived equations.

Nothing here feeds the classification itself.  Each entry is a polynomial,
rational function or value as it is displayed in the literature for a
family; :mod:`bihcert.classify` compares it with what the spectrum implies
and records the outcome in the result ledger.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .catalog import FamilyId, FamilySpec
from .poly import Poly, QuadExtPoint, RationalFunction, X

Exact = Union[Fraction, QuadExtPoint]

# quantity tags
MINIMAL = "minimal"
BIHARMONIC = "biharmonic"
NORM2 = "norm2"


@dataclass(frozen=True)
class DisplayedForm:
    """A displayed polynomial (zero set) or rational function.

    ``variable`` is ``"t"`` (or ``"y"``) for the family parameter and ``"X"``
    for its square.
    """

    name: str
    quantity: str
    variable: str
    value: Union[Poly, RationalFunction]


@dataclass(frozen=True)
class DisplayedValue:
    """An exact value claimed to solve the minimal or biharmonic condition.

    ``variable`` is ``"t"``/``"y"``, ``"X"`` or ``"level"`` (cos x for the
    sphere families).
    """

    name: str
    quantity: str
    variable: str
    value: Exact


@dataclass(frozen=True)
class DisplayedDecimal:
    """A decimal value quoted for a root; ``variable`` is ``"X"``, ``"t"`` or ``"u"``."""

    name: str
    quantity: str
    variable: str
    text: str


def _quad(a, b, d) -> Exact:
    """a + b*sqrt(d) with d an arbitrary nonnegative rational."""
    root = QuadExtPoint.sqrt(Fraction(d))
    return Fraction(a) + Fraction(b) * root


def _rf(num: Poly, den: Poly) -> RationalFunction:
    return RationalFunction(num, den)


_XM1SQ = (X - 1) * (X - 1)
_X_XM1SQ = X * _XM1SQ


def _cp_a(p, q):
    disc = (p - q) ** 2 + 4 * (p + q + 2)
    forms = [
        DisplayedForm("mean curvature numerator (2q+1)t^2-(2p+1)", MINIMAL, "t",
                      (2 * q + 1) * X * X - (2 * p + 1)),
        DisplayedForm("||B||^2 = (2q+1)t^2+(2p+1)/t^2-2", NORM2, "t",
                      _rf((2 * q + 1) * X ** 4 - 2 * X * X + (2 * p + 1), X * X)),
        DisplayedForm("(2q+1)X^2-2(p+q+3)X+2p+1", BIHARMONIC, "X",
                      (2 * q + 1) * X * X - 2 * (p + q + 3) * X + (2 * p + 1)),
    ]
    values = [DisplayedValue("X = (2p+1)/(2q+1)", MINIMAL, "X",
                             Fraction(2 * p + 1, 2 * q + 1))]
    for sgn, tag in ((1, "+"), (-1, "-")):
        values.append(DisplayedValue(
            f"X = (p+q+3 {tag} sqrt((p-q)^2+4(p+q+2)))/(2q+1)", BIHARMONIC, "X",
            _quad(Fraction(p + q + 3, 2 * q + 1), Fraction(sgn, 2 * q + 1), disc)))
    return forms, values, []


def _cp_b(n):
    forms = [
        DisplayedForm("(n-1)t^4-2(n+1)t^2+n-1", MINIMAL, "t",
                      (n - 1) * X ** 4 - 2 * (n + 1) * X ** 2 + (n - 1)),
        DisplayedForm("||B||^2 = ((n-1)(X-1)^2(X^2+1)+16X^2)/(X(X-1)^2)", NORM2, "X",
                      _rf((n - 1) * _XM1SQ * (X * X + 1) + 16 * X * X, _X_XM1SQ)),
        DisplayedForm("f(X) = (n-1)(X-1)^2(X^2+1)+16X^2-2(n+1)X(X-1)^2", BIHARMONIC, "X",
                      (n - 1) * _XM1SQ * (X * X + 1) + 16 * X * X - 2 * (n + 1) * _X_XM1SQ),
    ]
    if n == 2:
        forms.append(DisplayedForm("X^4-8X^3+30X^2-8X+1", BIHARMONIC, "X",
                                   X ** 4 - 8 * X ** 3 + 30 * X ** 2 - 8 * X + 1))
    values = []
    if n > 1:
        for sgn, tag in ((1, "+"), (-1, "-")):
            values.append(DisplayedValue(
                f"X = (n+1 {tag} 2sqrt(n))/(n-1)", MINIMAL, "X",
                _quad(Fraction(n + 1, n - 1), Fraction(2 * sgn, n - 1), n)))
    return forms, values, []


def _cp_c(n):
    cx = ((n - 2) * X * X * _XM1SQ + (n - 2) * _XM1SQ
          + 4 * X * (X * X + 6 * X + 1) - 2 * _X_XM1SQ)
    forms = [
        DisplayedForm("(n-2)t^4-2(n+2)t^2+n-2", MINIMAL, "t",
                      (n - 2) * X ** 4 - 2 * (n + 2) * X ** 2 + (n - 2)),
        DisplayedForm("||B||^2 = C(X)/(X(X-1)^2)", NORM2, "X", _rf(cx, _X_XM1SQ)),
        DisplayedForm("g(X) = C(X)-2(n+1)X(X-1)^2", BIHARMONIC, "X",
                      cx - 2 * (n + 1) * _X_XM1SQ),
    ]
    values = []
    if n > 2:
        for sgn, tag in ((1, "+"), (-1, "-")):
            values.append(DisplayedValue(
                f"X = (n+2 {tag} 2sqrt(2n))/(n-2)", MINIMAL, "X",
                _quad(Fraction(n + 2, n - 2), Fraction(2 * sgn, n - 2), 2 * n)))
    return forms, values, []


def _cp_d():
    dx = 11 * X ** 3 + 63 * X ** 2 + X + 5
    forms = [
        DisplayedForm("5t^4-26t^2+5", MINIMAL, "t", 5 * X ** 4 - 26 * X ** 2 + 5),
        DisplayedForm("||B||^2 = D(X)/(X(X-1)^2), D(X) = 11X^3+63X^2+X+5", NORM2, "X",
                      _rf(dx, _X_XM1SQ)),
        DisplayedForm("D(X)-20X(X-1)^2", BIHARMONIC, "X", dx - 20 * _X_XM1SQ),
        DisplayedForm("h(X) = 11X^3+43X^2+41X-15", BIHARMONIC, "X",
                      11 * X ** 3 + 43 * X ** 2 + 41 * X - 15),
        DisplayedForm("theorem statement 41t^6+43t^4+41t^2-15", BIHARMONIC, "t",
                      41 * X ** 6 + 43 * X ** 4 + 41 * X ** 2 - 15),
    ]
    values = [DisplayedValue("t = 1/5", MINIMAL, "t", Fraction(1, 5))]
    decimals = [
        DisplayedDecimal("root X of h", BIHARMONIC, "X", "0.278629"),
        DisplayedDecimal("corresponding t", BIHARMONIC, "t", "0.527853"),
        DisplayedDecimal("corresponding u", BIHARMONIC, "u", "1.08512"),
        DisplayedDecimal("theorem statement u", BIHARMONIC, "u", "1.0917"),
    ]
    return forms, values, decimals


def _cp_e():
    ex = 21 * X ** 3 + 99 * X ** 2 - 9 * X + 9
    forms = [
        DisplayedForm("9t^4-42t^2+9", MINIMAL, "t", 9 * X ** 4 - 42 * X ** 2 + 9),
        DisplayedForm("||B||^2 = E(X)/(X(X-1)^2)-2, E(X) = 21X^3+99X^2-9X+9", NORM2, "X",
                      _rf(ex, _X_XM1SQ) - 2),
        DisplayedForm("E(X)-2X(X-1)^2", BIHARMONIC, "X", ex - 2 * _X_XM1SQ),
        DisplayedForm("k(X) = 13X^3-107X^2+43X-9", BIHARMONIC, "X",
                      13 * X ** 3 - 107 * X ** 2 + 43 * X - 9),
        DisplayedForm("theorem statement 13t^6-107t^4+43t^2-9", BIHARMONIC, "t",
                      13 * X ** 6 - 107 * X ** 4 + 43 * X ** 2 - 9),
    ]
    decimals = [
        DisplayedDecimal("minimal u (first value)", MINIMAL, "u", "0.443039"),
        DisplayedDecimal("minimal u (second value)", MINIMAL, "u", "1.12776"),
        DisplayedDecimal("root X of k", BIHARMONIC, "X", "7.81906"),
        DisplayedDecimal("corresponding t", BIHARMONIC, "t", "2.79626"),
        DisplayedDecimal("corresponding u", BIHARMONIC, "u", "0.343448"),
    ]
    return forms, [], decimals


def _hp_sphere(n):
    forms = [
        DisplayedForm("4(n-1)t^2+3t-3", MINIMAL, "t", 4 * (n - 1) * X * X + 3 * X - 3),
        DisplayedForm("||B||^2 = (4n-1)t^2+3/t^2-6", NORM2, "t",
                      _rf((4 * n - 1) * X ** 4 - 6 * X * X + 3, X * X)),
        DisplayedForm("(4n-1)t^4-2(2n+7)t^2+3", BIHARMONIC, "t",
                      (4 * n - 1) * X ** 4 - 2 * (2 * n + 7) * X ** 2 + 3),
    ]
    values = [DisplayedValue("X = 3/(4n-1)", MINIMAL, "X", Fraction(3, 4 * n - 1))]
    for sgn, tag in ((1, "+"), (-1, "-")):
        values.append(DisplayedValue(
            f"X = (2n+7 {tag} sqrt(n^2+4n+13))/(4n-1)", BIHARMONIC, "X",
            _quad(Fraction(2 * n + 7, 4 * n - 1), Fraction(sgn, 4 * n - 1),
                  n * n + 4 * n + 13)))
    return forms, values, []


def _hp_cp_tube(n):
    num = ((2 * n - 1) * X * X * _XM1SQ + (2 * n - 1) * _XM1SQ
           - 2 * _X_XM1SQ + 32 * X * X)
    forms = [
        DisplayedForm("statement (2n-1)t^4-(4n+5)t^2+2(n-1)", MINIMAL, "t",
                      (2 * n - 1) * X ** 4 - (4 * n + 5) * X ** 2 + 2 * (n - 1)),
        DisplayedForm("proof 2(n-1)t^4-(4n+5)t^2+2(n-1)", MINIMAL, "t",
                      2 * (n - 1) * X ** 4 - (4 * n + 5) * X ** 2 + 2 * (n - 1)),
        DisplayedForm("||B||^2 first line 2(n-1)t^2+2(n-1)/t^2+t^2-2+1/t^2+32/(t^2-1)^2",
                      NORM2, "X",
                      _rf((2 * n - 1) * X * _XM1SQ - 2 * _XM1SQ + 32,
                          _XM1SQ) + _rf(Poly.const(2 * n - 1), X)),
        DisplayedForm("||B||^2 combined fraction", NORM2, "X", _rf(num, _X_XM1SQ)),
        DisplayedForm("statement (2n-1)t^8-8(n+1)t^6-(6n+11)t^4-2(2n-1)t^2-12",
                      BIHARMONIC, "t",
                      (2 * n - 1) * X ** 8 - 8 * (n + 1) * X ** 6 - (6 * n + 11) * X ** 4
                      - 2 * (2 * n - 1) * X ** 2 - 12),
        DisplayedForm("proof (2n-1)X^4-8(n+1)X^3-(6n+11)X^2-2(2n-1)X-12",
                      BIHARMONIC, "X",
                      (2 * n - 1) * X ** 4 - 8 * (n + 1) * X ** 3 - (6 * n + 11) * X ** 2
                      - 2 * (2 * n - 1) * X - 12),
    ]
    values = []
    if n > 1:
        for sgn, tag in ((1, "+"), (-1, "-")):
            values.append(DisplayedValue(
                f"X = (4n+5 {tag} sqrt(3(n+2)(2n+9)))/(2(n-1))", MINIMAL, "X",
                _quad(Fraction(4 * n + 5, 2 * (n - 1)), Fraction(sgn, 2 * (n - 1)),
                      3 * (n + 2) * (2 * n + 9))))
    return forms, values, []


def _hp_hpk_tube(n, k):
    a, c = 4 * n - 4 * k - 1, 4 * k + 3
    forms = [
        DisplayedForm("mean curvature numerator (4n-4k-1)t^2-(4k+3)", MINIMAL, "t",
                      a * X * X - c),
        DisplayedForm("||B||^2 = (4n-4k-1)t^2+(4k+3)/t^2-6", NORM2, "t",
                      _rf(a * X ** 4 - 6 * X * X + c, X * X)),
        DisplayedForm("(4n-4k-1)t^4-2(2n+4)t^2+4k+3", BIHARMONIC, "t",
                      a * X ** 4 - 2 * (2 * n + 4) * X ** 2 + c),
    ]
    values = [DisplayedValue("X = (4k+3)/(4n-4k-1)", MINIMAL, "X", Fraction(c, a))]
    return forms, values, []


def _sphere_g1(n):
    half = QuadExtPoint.sqrt(Fraction(1, 2))
    values = [
        DisplayedValue("cot x = 0", MINIMAL, "y", Fraction(0)),
        DisplayedValue("level 0 (great sphere)", MINIMAL, "level", Fraction(0)),
        DisplayedValue("(n-1)cot^2 x = n-1: cot x = 1", BIHARMONIC, "y", Fraction(1)),
        DisplayedValue("(n-1)cot^2 x = n-1: cot x = -1", BIHARMONIC, "y", Fraction(-1)),
        DisplayedValue("level 1/sqrt(2) (small sphere)", BIHARMONIC, "level", half),
        DisplayedValue("level -1/sqrt(2) (small sphere)", BIHARMONIC, "level", -half),
    ]
    forms = [DisplayedForm("(n-1)cot^2 x - (n-1)", BIHARMONIC, "y",
                           (n - 1) * X * X - (n - 1))]
    return forms, values, []


def _sphere_g2(n, p):
    values = [
        DisplayedValue("level (n+1-2p)/(n-1)", MINIMAL, "level", Fraction(n + 1 - 2 * p, n - 1)),
        DisplayedValue("cos^2(x/2) = (n-p)/(n-1): cot^2(x/2) = (n-p)/(p-1)", MINIMAL, "X",
                       Fraction(n - p, p - 1)),
        DisplayedValue("level 0 (Clifford torus)", BIHARMONIC, "level", Fraction(0)),
        DisplayedValue("level (n+1-2p)/(n-1)", BIHARMONIC, "level",
                       Fraction(n + 1 - 2 * p, n - 1)),
    ]
    return [], values, []


def displayed(f: FamilySpec):
    """Return ``(forms, values, decimals)`` for the family.

    Forms for C/D/E types refer to the ``-2cot 2u`` reading of the fifth
    principal curvature, so they are omitted for ``hopf="tan"``.
    """
    fid, p = f.id, f.params
    if p.get("hopf", "cot") != "cot":
        return [], [], []
    if fid is FamilyId.CP_A:
        return _cp_a(p["p"], p["q"])
    if fid is FamilyId.CP_B:
        return _cp_b(f.n)
    if fid is FamilyId.CP_C:
        return _cp_c(f.n)
    if fid is FamilyId.CP_D:
        return _cp_d()
    if fid is FamilyId.CP_E:
        return _cp_e()
    if fid is FamilyId.HP_GEODESIC_SPHERE:
        return _hp_sphere(f.n)
    if fid is FamilyId.HP_CP_TUBE:
        return _hp_cp_tube(f.n)
    if fid is FamilyId.HP_HPK_TUBE:
        return _hp_hpk_tube(f.n, p["k"])
    if fid is FamilyId.SPHERE_G1:
        return _sphere_g1(f.n)
    if fid is FamilyId.SPHERE_G2:
        return _sphere_g2(f.n, p["p"])
    return [], [], []
