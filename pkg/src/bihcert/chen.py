"""Exact multivariate polynomials and the quartic biharmonic map R^m -> R^n.

The map has components phi_i = sum_j x_j^4 - m x_i^4 for i <= m; the
remaining components are at most linear, so they contribute nothing to any
Laplacian below and are not modelled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class MultiPoly:
    """Polynomial in x_1..x_m with Fraction coefficients.

    Terms are stored as a mapping from exponent tuples to nonzero
    coefficients; iteration order is the sorted exponent order.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            c = Fraction(c)
            if c:
                clean[tuple(mono)] = clean.get(tuple(mono), Fraction(0)) + c
        self.nvars = nvars
        self.terms = {k: v for k, v in sorted(clean.items()) if v}

    @classmethod
    def const(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "MultiPoly":
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): 1})

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MultiPoly.const(self.nvars, other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        out: dict[Monomial, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in o.terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def diff(self, i: int) -> "MultiPoly":
        out = {}
        for mono, c in self.terms.items():
            if mono[i]:
                e = list(mono)
                e[i] -= 1
                out[tuple(e)] = c * mono[i]
        return MultiPoly(self.nvars, out)

    def __call__(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for x, e in zip(point, mono):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Substitute x_i -> x_perm[i]."""
        out = {}
        for mono, c in self.terms.items():
            e = [0] * self.nvars
            for i, k in enumerate(mono):
                e[perm[i]] += k
            out[tuple(e)] = c
        return MultiPoly(self.nvars, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), kv[0])):
            vars_ = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                             for i, e in enumerate(mono) if e)
            if not vars_:
                parts.append(str(c))
            elif c == 1:
                parts.append(vars_)
            elif c == -1:
                parts.append("-" + vars_)
            else:
                parts.append(f"{c}*{vars_}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def laplacian(p: MultiPoly) -> MultiPoly:
    """Sum of pure second derivatives."""
    out = MultiPoly(p.nvars)
    for i in range(p.nvars):
        out = out + p.diff(i).diff(i)
    return out


def power_sum(m: int, k: int) -> MultiPoly:
    out = MultiPoly(m)
    for j in range(m):
        out = out + MultiPoly.var(m, j, k)
    return out


def phi(m: int, i: int) -> MultiPoly:
    """phi_i = sum_j x_j^4 - m x_i^4 (0-based i)."""
    return power_sum(m, 4) - m * MultiPoly.var(m, i, 4)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    claimed: MultiPoly
    computed: MultiPoly

    @property
    def difference(self) -> MultiPoly:
        return self.computed - self.claimed

    @property
    def equal(self) -> bool:
        return self.difference.is_zero()

    def to_dict(self) -> dict:
        return {"name": self.name, "equal": self.equal, "claimed": str(self.claimed),
                "computed": str(self.computed), "difference": str(self.difference)}


@dataclass(frozen=True)
class VerificationReport:
    m: int
    checks: tuple[IdentityCheck, ...]
    nonnegativity_points: int
    nonnegativity_violations: int

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.checks) and self.nonnegativity_violations == 0

    def check(self, name: str) -> IdentityCheck:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "m": self.m,
            "all_equal": self.all_equal,
            "checks": [c.to_dict() for c in self.checks],
            "nonnegativity": {"points": self.nonnegativity_points,
                              "violations": self.nonnegativity_violations},
        }


def _sum(polys: Iterable[MultiPoly], m: int) -> MultiPoly:
    out = MultiPoly(m)
    for p in polys:
        out = out + p
    return out


def verify_example(m: int, points: int = 1000, seed: int = 0) -> VerificationReport:
    """Check the displayed identities of the quartic example for given m.

    (a) Delta phi_i = 12 (S2 - m x_i^2)
    (b) Delta Delta phi_i = 0
    (c) sum_i (Delta phi_i)^2 = 144 m (m S4 - S2^2)
    (d) sum_{i,k} (d_k Delta phi_i)^2 against 576 m (m-1) S2^2 as displayed
    (d') the same sum against 576 m (m-1) S2
    (e) m S4 - S2^2 >= 0 at random rational points

    with S2 = sum x_j^2 and S4 = sum x_j^4.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    s2, s4 = power_sum(m, 2), power_sum(m, 4)
    phis = [phi(m, i) for i in range(m)]
    taus = [laplacian(p) for p in phis]
    checks = []
    for i, tau in enumerate(taus):
        checks.append(IdentityCheck(f"(a) laplacian of phi_{i + 1}",
                                    12 * (s2 - m * MultiPoly.var(m, i, 2)), tau))
    for i, tau in enumerate(taus):
        checks.append(IdentityCheck(f"(b) bilaplacian of phi_{i + 1}", MultiPoly(m),
                                    laplacian(tau)))
    norm_tau = _sum((t * t for t in taus), m)
    checks.append(IdentityCheck("(c) |tau|^2", 144 * m * (m * s4 - s2 * s2), norm_tau))
    grad = _sum((t.diff(k) * t.diff(k) for t in taus for k in range(m)), m)
    checks.append(IdentityCheck("(d) |grad tau|^2 as displayed",
                                576 * m * (m - 1) * s2 * s2, grad))
    checks.append(IdentityCheck("(d') |grad tau|^2 closed form", 576 * m * (m - 1) * s2, grad))

    rng = random.Random(seed)
    gap = m * s4 - s2 * s2
    bad = 0
    for _ in range(points):
        pt = [Fraction(rng.randint(-1000, 1000), rng.randint(1, 100)) for _ in range(m)]
        if gap(pt) < 0:
            bad += 1
    return VerificationReport(m, tuple(checks), points, bad)


def displayed_checks_pass(report: VerificationReport) -> bool:
    """Identities (a)-(c) and the nonnegativity sample; (d) is reported only."""
    core = [c for c in report.checks if c.name.startswith(("(a)", "(b)", "(c)"))]
    return all(c.equal for c in core) and report.nonnegativity_violations == 0
