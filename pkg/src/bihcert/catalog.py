"""Principal-curvature catalog of the hypersurface families.

Every family stores its shape-operator spectrum as rational functions of a
single parameter:

* isoparametric hypersurfaces of the unit sphere use ``y = cot(x/g)`` where
  ``x = arccos(level)`` and ``0 < x < pi``;
* tubes in CP^n(4) and HP^n(4) use ``t = cot(u)`` with ``u`` the tube radius.

Mean curvature and the squared norm of the second fundamental form are
always derived from the spectrum; nothing downstream is transcribed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .poly import (Interval, Poly, PolyError, QuadExtPoint, RationalFunction, X,
                   count_roots)


class ParameterError(ValueError):
    """Integer parameters outside the family's admissible range."""


class FamilyId(str, Enum):
    SPHERE_G1 = "sphere-g1"
    SPHERE_G2 = "sphere-g2"
    SPHERE_G3 = "sphere-g3"
    SPHERE_G4 = "sphere-g4"
    SPHERE_G6 = "sphere-g6"
    CP_A = "cp-a"
    CP_B = "cp-b"
    CP_C = "cp-c"
    CP_D = "cp-d"
    CP_E = "cp-e"
    HP_GEODESIC_SPHERE = "hp-sphere"
    HP_CP_TUBE = "hp-cp-tube"
    HP_HPK_TUBE = "hp-hpk-tube"


class AmbientKind(str, Enum):
    SPHERE = "sphere"
    COMPLEX_PROJECTIVE = "complex_projective"
    QUATERNION_PROJECTIVE = "quaternion_projective"


@dataclass(frozen=True)
class AmbientSpace:
    kind: AmbientKind
    c: Fraction
    n: int

    def __post_init__(self):
        if self.c <= 0:
            raise ParameterError("ambient curvature c must be positive")

    @property
    def hypersurface_dim(self) -> int:
        if self.kind is AmbientKind.SPHERE:
            return self.n - 1
        if self.kind is AmbientKind.COMPLEX_PROJECTIVE:
            return 2 * self.n - 1
        return 4 * self.n - 1


@dataclass(frozen=True)
class PrincipalCurvature:
    value: RationalFunction
    multiplicity: int
    label: str = ""
    multiplicity_expr: str = ""


@dataclass(frozen=True)
class ConjugatePairRule:
    """Two branches ``A +- B*sqrt(d)``, each with the given multiplicity.

    Individually they live in Q(sqrt d)(y); their sum 2A and sum of squares
    2(A^2 + d B^2) are rational.
    """

    rational_part: RationalFunction
    surd_part: RationalFunction
    d: int
    multiplicity: int
    label: str = ""

    def branch_sum(self) -> RationalFunction:
        return 2 * self.rational_part

    def branch_square_sum(self) -> RationalFunction:
        a, b = self.rational_part, self.surd_part
        return 2 * (a * a + self.d * b * b)

    def branch_values(self, y: Fraction) -> tuple[QuadExtPoint, QuadExtPoint]:
        a, b = self.rational_part(y), self.surd_part(y)
        return (QuadExtPoint(a, b, self.d), QuadExtPoint(a, -b, self.d))


@dataclass(frozen=True)
class FamilySpec:
    id: FamilyId
    params: dict
    ambient: AmbientSpace
    variable: str
    substitution: str
    range: Interval
    spectrum: tuple[PrincipalCurvature, ...]
    pairs: tuple[ConjugatePairRule, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def dim(self) -> int:
        return self.ambient.hypersurface_dim

    @property
    def n(self) -> int:
        return self.ambient.n

    def multiplicity_sum(self) -> int:
        return (sum(pc.multiplicity for pc in self.spectrum)
                + sum(2 * pr.multiplicity for pr in self.pairs))

    def label(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.id.value}({inner})"

    def denominators(self) -> list[Poly]:
        dens = [pc.value.den for pc in self.spectrum if pc.multiplicity]
        for pr in self.pairs:
            dens += [pr.rational_part.den, pr.surd_part.den]
        return dens

    def to_dict(self) -> dict:
        lo, hi = self.range.endpoints_str()
        spectrum = [{
            "label": pc.label,
            "num_coeffs": [str(c) for c in pc.value.num.coeffs],
            "den_coeffs": [str(c) for c in pc.value.den.coeffs],
            "multiplicity": pc.multiplicity,
        } for pc in self.spectrum]
        for pr in self.pairs:
            for sgn in ("+", "-"):
                spectrum.append({
                    "label": f"{pr.label} ({sgn} branch)",
                    "num_coeffs": [str(c) for c in pr.rational_part.num.coeffs],
                    "den_coeffs": [str(c) for c in pr.rational_part.den.coeffs],
                    "surd": {
                        "d": pr.d,
                        "sign": 1 if sgn == "+" else -1,
                        "num_coeffs": [str(c) for c in pr.surd_part.num.coeffs],
                        "den_coeffs": [str(c) for c in pr.surd_part.den.coeffs],
                    },
                    "multiplicity": pr.multiplicity,
                })
        return {
            "id": self.id.value,
            "params": dict(self.params),
            "ambient": {"kind": self.ambient.kind.value, "c": str(self.ambient.c),
                        "n": self.ambient.n},
            "dim": self.dim,
            "variable": self.variable,
            "substitution": self.substitution,
            "spectrum": spectrum,
            "range": [lo, hi],
            "threshold": str(biharmonic_threshold(self)),
        }


# ---------------------------------------------------------------------------
# building blocks in t = cot(u)

_T = RationalFunction(X)
_ONE = RationalFunction(1)


def _cot(t=_T):                      # cot u
    return t


def _tan(t=_T):                      # tan u
    return _ONE / t


def _cot2(t=_T):                     # 2 cot 2u = t - 1/t
    return t - _ONE / t


def _tan2(t=_T):                     # 2 tan 2u = 4t / (t^2 - 1)
    return 4 * t / (t * t - 1)


def _cot_shift(c) -> tuple[RationalFunction, RationalFunction, int]:
    """cot(theta + phi) with cot(theta) = y and cot(phi) = c.

    For rational c the surd part is zero and ``d`` is returned as 0.
    """
    y = _T
    if isinstance(c, (int, Fraction)):
        return (y * c - 1) / (y + c), RationalFunction(0), 0
    alpha, beta, d = c.a, c.b, c.d
    den = (y + alpha) * (y + alpha) - d * beta * beta
    a = ((alpha * y - 1) * (y + alpha) - d * beta * beta * y) / den
    b = beta * (y * y + 1) / den
    return a, b, d


_SQRT3 = QuadExtPoint(0, 1, 3)
_INV_SQRT3 = QuadExtPoint(0, Fraction(1, 3), 3)


def _require(cond: bool, msg: str):
    if not cond:
        raise ParameterError(msg)


def _pc(value, mult, label, expr=""):
    return PrincipalCurvature(RationalFunction._lift(value), int(mult), label, expr or str(mult))


# ---------------------------------------------------------------------------
# family builders


def _sphere_g1(n: int):
    _require(n >= 2, "sphere g=1 needs n >= 2")
    spectrum = (_pc(_T, n - 1, "cot x", "n-1"),)
    return n, Interval(None, None), spectrum, (), "y = cot x"


def _sphere_g2(n: int, p: int):
    _require(2 <= p <= (n + 1) // 2, "sphere g=2 needs 2 <= p <= [(n+1)/2]")
    k2, _, _ = _cot_shift(Fraction(0))          # cot(theta + pi/2) = -1/y
    spectrum = (_pc(_T, p - 1, "cot(x/2)", "p-1"),
                _pc(k2, n - p, "cot((pi+x)/2)", "n-p"))
    return n, Interval(Fraction(0), None), spectrum, (), "y = cot(x/2)"


def _sphere_g3(mult: int):
    _require(mult in (1, 2, 4, 8), "sphere g=3 multiplicity must be 1, 2, 4 or 8")
    n = 3 * mult + 1
    a, b, d = _cot_shift(_INV_SQRT3)
    spectrum = (_pc(_T, mult, "cot(x/3)", "m"),)
    pairs = (ConjugatePairRule(a, b, d, mult, "cot((pi+x)/3), cot((2pi+x)/3)"),)
    return n, Interval(_INV_SQRT3, None), spectrum, pairs, "y = cot(x/3)"


def _sphere_g4(m1: int, m2: int):
    _require(m1 >= 1 and m2 >= 1, "sphere g=4 needs m1, m2 >= 1")
    n = 2 * (m1 + m2) + 1
    spectrum = (_pc(_T, m1, "cot(x/4)", "m1"),
                _pc(_cot_shift(Fraction(1))[0], m2, "cot((pi+x)/4)", "m2"),
                _pc(_cot_shift(Fraction(0))[0], m1, "cot((2pi+x)/4)", "m1"),
                _pc(_cot_shift(Fraction(-1))[0], m2, "cot((3pi+x)/4)", "m2"))
    return n, Interval(Fraction(1), None), spectrum, (), "y = cot(x/4)"


def _sphere_g6(mult: int):
    _require(mult in (1, 2), "sphere g=6 needs m1 = m2 in {1, 2}")
    n = 6 * mult + 1
    a1, b1, d1 = _cot_shift(_SQRT3)            # j = 2, 6
    a2, b2, d2 = _cot_shift(_INV_SQRT3)        # j = 3, 5
    spectrum = (_pc(_T, mult, "cot(x/6)", "m1"),
                _pc(_cot_shift(Fraction(0))[0], mult, "cot((3pi+x)/6)", "m2"))
    pairs = (ConjugatePairRule(a1, b1, d1, mult, "cot((pi+x)/6), cot((5pi+x)/6)"),
             ConjugatePairRule(a2, b2, d2, mult, "cot((2pi+x)/6), cot((4pi+x)/6)"))
    return n, Interval(_SQRT3, None), spectrum, pairs, "y = cot(x/6)"


def _hopf_curvature(form: str) -> RationalFunction:
    if form == "cot":
        return -_cot2()                      # -2 cot 2u = -t + 1/t
    if form == "tan":
        return -_tan2()                      # -2 tan 2u
    raise ParameterError(f"unknown Hopf curvature form {form!r}")


def _cp_a(p: int, q: int):
    _require(0 <= p <= q and q > 0, "A-type needs 0 <= p <= q, 0 < q")
    n = p + q + 1
    spectrum = (_pc(-_tan(), 2 * p, "-tan u", "2p"),
                _pc(_cot(), 2 * q, "cot u", "2q"),
                _pc(_cot2(), 1, "2cot 2u", "1"))
    return n, Interval(Fraction(0), None), spectrum


def _cp_b(n: int):
    _require(n >= 2, "B-type needs m = n + 1 >= 3")
    spectrum = (_pc(-_cot(), n - 1, "-cot u", "n-1"),
                _pc(_tan(), n - 1, "tan u", "n-1"),
                _pc(_tan2(), 1, "2tan 2u", "1"))
    return n, Interval(Fraction(1), None), spectrum


def _cde(n: int, m_side: int, m_diag: int, hopf: str):
    t = _T
    return (_pc(-t, m_side, "-cot u"),
            _pc((t + 1) / (t - 1), m_diag, "cot(pi/4 - u)"),
            _pc(_ONE / t, m_side, "cot(pi/2 - u)"),
            _pc(-(t - 1) / (t + 1), m_diag, "cot(3pi/4 - u)"),
            _pc(_hopf_curvature(hopf), 1, "-2cot 2u" if hopf == "cot" else "-2tan 2u"))


def _cp_c(n: int, hopf: str):
    _require(n >= 3, "C-type needs n >= 3")
    return n, Interval(Fraction(1), None), _cde(n, n - 3, 2, hopf)


def _cp_d(hopf: str):
    return 9, Interval(Fraction(1), None), _cde(9, 4, 4, hopf)


def _cp_e(hopf: str):
    return 15, Interval(Fraction(1), None), _cde(15, 8, 6, hopf)


def _hp_sphere(n: int):
    _require(n >= 2, "HP^n families need n >= 2")
    spectrum = (_pc(_cot(), 4 * (n - 1), "cot u", "4(n-1)"),
                _pc(_cot2(), 3, "2cot 2u", "3"))
    return Interval(Fraction(0), None), spectrum


def _hp_cp_tube(n: int):
    _require(n >= 2, "HP^n families need n >= 2")
    spectrum = (_pc(_cot(), 2 * (n - 1), "cot u", "2(n-1)"),
                _pc(-_tan(), 2 * (n - 1), "-tan u", "2(n-1)"),
                _pc(_cot2(), 1, "2cot 2u", "1"),
                _pc(-_tan2(), 2, "-2tan 2u", "2"))
    return Interval(Fraction(1), None), spectrum


def _hp_hpk_tube(n: int, k: int):
    _require(n >= 2, "HP^n families need n >= 2")
    _require(1 <= k <= n - 1, "HP^k tube needs 1 <= k <= n-1")
    spectrum = (_pc(_cot(), 4 * (n - k - 1), "cot u", "4(n-k-1)"),
                _pc(-_tan(), 4 * k, "-tan u", "4k"),
                _pc(_cot2(), 3, "2cot 2u", "3"))
    return Interval(Fraction(1), None), spectrum


_C_FOUR = Fraction(4)


def build_family(family, **params) -> FamilySpec:
    """Construct a :class:`FamilySpec` from its id and integer parameters.

    Parameters by family:

    ====================  ==========================================
    sphere-g1             n
    sphere-g2             n, p
    sphere-g3             mult in {1, 2, 4, 8}
    sphere-g4             m1, m2
    sphere-g6             mult in {1, 2}
    cp-a                  p, q  (n = p + q + 1)
    cp-b, cp-c            n
    cp-d, cp-e            none (n = 9, 15)
    hp-sphere, hp-cp-tube n
    hp-hpk-tube           n, k
    ====================  ==========================================

    C/D/E types accept ``hopf="cot"`` (default) or ``"tan"`` selecting the
    form of the fifth principal curvature.
    """
    fid = FamilyId(family)
    hopf = params.pop("hopf", "cot")
    notes: list[str] = []
    try:
        if fid.value.startswith("sphere"):
            builder = {
                FamilyId.SPHERE_G1: lambda: _sphere_g1(params["n"]),
                FamilyId.SPHERE_G2: lambda: _sphere_g2(params["n"], params["p"]),
                FamilyId.SPHERE_G3: lambda: _sphere_g3(params["mult"]),
                FamilyId.SPHERE_G4: lambda: _sphere_g4(params["m1"], params["m2"]),
                FamilyId.SPHERE_G6: lambda: _sphere_g6(params["mult"]),
            }[fid]
            n, rng, spectrum, pairs, subst = builder()
            if "n" in params and params["n"] != n:
                raise ParameterError(f"{fid.value}: multiplicities force n = {n}, got {params['n']}")
            ambient = AmbientSpace(AmbientKind.SPHERE, Fraction(1), n)
            spec = FamilySpec(fid, dict(params), ambient, "y", subst, rng, spectrum, pairs)
        elif fid.value.startswith("cp"):
            if fid is FamilyId.CP_A:
                n, rng, spectrum = _cp_a(params["p"], params["q"])
            elif fid is FamilyId.CP_B:
                n, rng, spectrum = _cp_b(params["n"])
            elif fid is FamilyId.CP_C:
                n, rng, spectrum = _cp_c(params["n"], hopf)
                if n % 2 == 0:
                    notes.append("C-type tubes are realised only for odd n; "
                                 "the polynomial conditions are evaluated regardless")
            elif fid is FamilyId.CP_D:
                n, rng, spectrum = _cp_d(hopf)
            else:
                n, rng, spectrum = _cp_e(hopf)
            if fid in (FamilyId.CP_D, FamilyId.CP_E) and params.get("n", n) != n:
                raise ParameterError(f"{fid.value} lives in CP^{n}")
            shown = dict(params)
            shown.setdefault("n", n)
            if hopf != "cot":
                shown["hopf"] = hopf
            ambient = AmbientSpace(AmbientKind.COMPLEX_PROJECTIVE, _C_FOUR, n)
            spec = FamilySpec(fid, shown, ambient, "t", "t = cot u", rng, spectrum, (),
                              tuple(notes))
        else:
            n = params["n"]
            if fid is FamilyId.HP_GEODESIC_SPHERE:
                rng, spectrum = _hp_sphere(n)
            elif fid is FamilyId.HP_CP_TUBE:
                rng, spectrum = _hp_cp_tube(n)
            else:
                rng, spectrum = _hp_hpk_tube(n, params["k"])
            ambient = AmbientSpace(AmbientKind.QUATERNION_PROJECTIVE, _C_FOUR, n)
            spec = FamilySpec(fid, dict(params), ambient, "t", "t = cot u", rng, spectrum)
    except KeyError as exc:
        raise ParameterError(f"{fid.value}: missing parameter {exc.args[0]!r}") from None

    total = spec.multiplicity_sum()
    if total != spec.dim:
        raise ParameterError(f"{spec.label()}: multiplicities sum to {total}, dim M = {spec.dim}")
    return spec


# ---------------------------------------------------------------------------
# derived quantities


def mean_curvature(f: FamilySpec) -> RationalFunction:
    """(dim M) * H = sum of principal curvatures with multiplicity."""
    total = RationalFunction(0)
    for pc in f.spectrum:
        total = total + pc.multiplicity * pc.value
    for pr in f.pairs:
        total = total + pr.multiplicity * pr.branch_sum()
    return total


def second_form_norm2(f: FamilySpec) -> RationalFunction:
    """||B||^2 = sum of squared principal curvatures with multiplicity."""
    total = RationalFunction(0)
    for pc in f.spectrum:
        total = total + pc.multiplicity * pc.value * pc.value
    for pr in f.pairs:
        total = total + pr.multiplicity * pr.branch_square_sum()
    return total


def biharmonic_threshold(f: FamilySpec, c: Optional[Fraction] = None) -> Fraction:
    """Constant value of ||B||^2 that characterises nonminimal biharmonicity.

    Sphere: c * dim M; CP^n: (n+1) c / 2; HP^n: (n+2) c.
    """
    c = f.ambient.c if c is None else Fraction(c)
    kind = f.ambient.kind
    if kind is AmbientKind.SPHERE:
        return c * f.dim
    if kind is AmbientKind.COMPLEX_PROJECTIVE:
        return Fraction(f.n + 1) * c / 2
    return Fraction(f.n + 2) * c


def certify_denominators(f: FamilySpec) -> bool:
    """True when no spectrum denominator vanishes inside the parameter range."""
    for den in f.denominators():
        if den.degree <= 0:
            continue
        if count_roots(den, f.range.lo, f.range.hi, deflate=True):
            return False
    return True


def level_from_parameter(f: FamilySpec, y):
    """Isoparametric level cos x for g = 1, 2 from the exact parameter value.

    g = 1: y = cot x, level = y / sqrt(1 + y^2).
    g = 2: y^2 = cot^2(x/2) is passed in, level = (y^2 - 1)/(y^2 + 1).
    """
    if f.id is FamilyId.SPHERE_G1:
        y = Fraction(y)
        root = QuadExtPoint.sqrt(1 + y * y)
        if isinstance(root, Fraction):
            return y / root
        return y * root.inverse()
    if f.id is FamilyId.SPHERE_G2:
        return (y - 1) / (y + 1)
    raise PolyError("levels are only tabulated for g = 1, 2")


def all_families(n_max: int = 12) -> list[FamilySpec]:
    """A representative enumeration used by ``catalog dump``."""
    out: list[FamilySpec] = []
    for n in range(3, n_max + 1):
        out.append(build_family("sphere-g1", n=n))
        for p in range(2, (n + 1) // 2 + 1):
            out.append(build_family("sphere-g2", n=n, p=p))
    for mult in (1, 2, 4, 8):
        out.append(build_family("sphere-g3", mult=mult))
    for s in range(2, (n_max - 1) // 2 + 1):
        for m1 in range(1, s):
            out.append(build_family("sphere-g4", m1=m1, m2=s - m1))
    for mult in (1, 2):
        out.append(build_family("sphere-g6", mult=mult))
    for n in range(1, n_max + 1):
        for p in range(0, n):
            q = n - 1 - p
            if p <= q and q > 0:
                out.append(build_family("cp-a", p=p, q=q))
    out += [build_family("cp-b", n=n) for n in range(2, n_max + 1)]
    out += [build_family("cp-c", n=n) for n in range(3, n_max + 1)]
    out += [build_family("cp-d"), build_family("cp-e")]
    for n in range(2, n_max + 1):
        out.append(build_family("hp-sphere", n=n))
        out.append(build_family("hp-cp-tube", n=n))
        for k in range(1, n):
            out.append(build_family("hp-hpk-tube", n=n, k=k))
    return out
