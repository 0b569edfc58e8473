"""Pointwise algebra of so(r)-valued 1- and 2-forms on an m-dimensional
inner-product space.

Arrays are numpy object arrays holding Python ints or Fractions, so every
identity below is checked in exact arithmetic.  A 1-form has shape
(m, r, r); a 2-form has shape (m, m, r, r) and is alternating in its first
two axes.  Endomorphisms carry the trace inner product <A, B> = tr(A^T B);
2-forms sum over i < j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np


class DimensionError(ValueError):
    """Operands with incompatible (m, r)."""


# ---------------------------------------------------------------------------
# raw array kernels


def _obj(a) -> np.ndarray:
    return np.asarray(a, dtype=object)


def _inner(a: np.ndarray, b: np.ndarray):
    return (a * b).sum()


def _comm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def _upper_mask(m: int) -> np.ndarray:
    return np.triu(np.ones((m, m), dtype=bool), 1)


def _inner2(a: np.ndarray, b: np.ndarray):
    mask = _upper_mask(a.shape[0])
    return (a[mask] * b[mask]).sum()


def _wedge(b1: np.ndarray, b2: np.ndarray) -> np.ndarray:
    p = _comm(b1[:, None], b2[None, :])            # p[i, j] = [b1_i, b2_j]
    return p - p.transpose(1, 0, 2, 3)


def _action(phi: np.ndarray, beta: np.ndarray) -> np.ndarray:
    # result_i = sum_j [phi(e_j, e_i), beta(e_j)]
    return _comm(phi, beta[:, None]).sum(axis=0)


def _ric(alpha: np.ndarray, ric: np.ndarray) -> np.ndarray:
    # result_i = sum_j Ric_ji alpha_j
    return np.tensordot(ric.T, alpha, axes=([1], [0]))


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class SkewEndo:
    """r x r exact skew-symmetric matrix."""

    matrix: np.ndarray = field(compare=False)

    def __post_init__(self):
        a = _obj(self.matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError("expected a square matrix")
        if not (a == -a.T).all():
            raise ValueError("matrix is not skew-symmetric")
        object.__setattr__(self, "matrix", a)

    @classmethod
    def from_upper(cls, r: int, entries) -> "SkewEndo":
        a = np.zeros((r, r), dtype=object)
        it = iter(entries)
        for i in range(r):
            for j in range(i + 1, r):
                v = next(it)
                a[i, j], a[j, i] = v, -v
        return cls(a)

    @property
    def r(self) -> int:
        return self.matrix.shape[0]

    def bracket(self, other: "SkewEndo") -> "SkewEndo":
        return SkewEndo(_comm(self.matrix, other.matrix))

    def inner(self, other: "SkewEndo"):
        return _inner(self.matrix, other.matrix)

    def __eq__(self, other):
        return isinstance(other, SkewEndo) and (self.matrix == other.matrix).all()


@dataclass(frozen=True)
class LieValuedForm:
    """so(r)-valued alternating form of degree 1 or 2 on R^m."""

    degree: int
    components: np.ndarray = field(compare=False)

    def __post_init__(self):
        c = _obj(self.components)
        if self.degree not in (1, 2) or c.ndim != self.degree + 2:
            raise DimensionError("degree-k form needs an array of rank k + 2")
        if c.shape[-1] != c.shape[-2]:
            raise DimensionError("values must be square matrices")
        if not (c == -np.swapaxes(c, -1, -2)).all():
            raise ValueError("values are not skew-symmetric")
        if self.degree == 2 and not (c == -c.transpose(1, 0, 2, 3)).all():
            raise ValueError("2-form is not alternating")
        object.__setattr__(self, "components", c)

    @classmethod
    def zero(cls, degree: int, m: int, r: int) -> "LieValuedForm":
        return cls(degree, np.zeros((m,) * degree + (r, r), dtype=object))

    @property
    def m(self) -> int:
        return self.components.shape[0]

    @property
    def r(self) -> int:
        return self.components.shape[-1]

    def __call__(self, *idx) -> SkewEndo:
        return SkewEndo(self.components[idx])

    def inner(self, other: "LieValuedForm"):
        _match(self, other)
        if self.degree != other.degree:
            raise DimensionError("inner product of forms of different degree")
        if self.degree == 1:
            return _inner(self.components, other.components)
        return _inner2(self.components, other.components)

    def norm2(self):
        return self.inner(self)

    def __add__(self, other: "LieValuedForm") -> "LieValuedForm":
        _match(self, other)
        return LieValuedForm(self.degree, self.components + other.components)

    def scale(self, c) -> "LieValuedForm":
        return LieValuedForm(self.degree, self.components * c)

    def __eq__(self, other):
        return (isinstance(other, LieValuedForm) and self.degree == other.degree
                and self.components.shape == other.components.shape
                and (self.components == other.components).all())

    def is_zero(self) -> bool:
        return not self.components.any()


def _match(a: LieValuedForm, b: LieValuedForm):
    if a.m != b.m or a.r != b.r:
        raise DimensionError(f"(m, r) mismatch: ({a.m}, {a.r}) vs ({b.m}, {b.r})")


@dataclass(frozen=True)
class RicciModel:
    """Symmetric m x m matrix with a claimed lower bound Ric >= k Id."""

    matrix: np.ndarray = field(compare=False)
    k: Fraction = Fraction(0)

    def __post_init__(self):
        a = _obj(self.matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or not (a == a.T).all():
            raise ValueError("Ricci model must be a symmetric square matrix")
        object.__setattr__(self, "matrix", a)

    @property
    def m(self) -> int:
        return self.matrix.shape[0]

    def bound_holds(self) -> bool:
        """Exact check that Ric - k Id is positive semidefinite."""
        shifted = self.matrix - Fraction(self.k) * np.eye(self.m, dtype=int).astype(object)
        return is_psd(shifted)


def is_psd(a) -> bool:
    """Positive semidefiniteness of a symmetric rational matrix via
    symmetric elimination with diagonal pivoting (LDL^T)."""
    work = [[Fraction(x) for x in row] for row in _obj(a)]
    n = len(work)
    active = list(range(n))
    while active:
        p = max(active, key=lambda i: work[i][i])
        d = work[p][p]
        if d < 0:
            return False
        if d == 0:
            # largest diagonal is zero: PSD only if the remaining block vanishes
            return all(work[i][j] == 0 for i in active for j in active)
        active.remove(p)
        for i in active:
            f = work[i][p] / d
            if f:
                for j in active:
                    work[i][j] -= f * work[p][j]
    return True


# ---------------------------------------------------------------------------
# operations


def bracket_wedge(b1: LieValuedForm, b2: LieValuedForm) -> LieValuedForm:
    """[b1 ^ b2](e_i, e_j) = [b1(e_i), b2(e_j)] - [b1(e_j), b2(e_i)]."""
    _match(b1, b2)
    if b1.degree != 1 or b2.degree != 1:
        raise DimensionError("bracket_wedge takes two 1-forms")
    return LieValuedForm(2, _wedge(b1.components, b2.components))


def curvature_action(phi: LieValuedForm, beta: LieValuedForm) -> LieValuedForm:
    """R(phi)(beta)(e_i) = sum_j [phi(e_j, e_i), beta(e_j)]."""
    _match(phi, beta)
    if phi.degree != 2 or beta.degree != 1:
        raise DimensionError("curvature_action takes a 2-form and a 1-form")
    return LieValuedForm(1, _action(phi.components, beta.components))


def ricci_compose(alpha: LieValuedForm, ric: RicciModel) -> LieValuedForm:
    """(alpha o Ric)(e_i) = sum_j Ric_ji alpha(e_j)."""
    if alpha.degree != 1:
        raise DimensionError("ricci_compose takes a 1-form")
    if ric.m != alpha.m:
        raise DimensionError(f"Ricci model is {ric.m}x{ric.m}, form has m = {alpha.m}")
    return LieValuedForm(1, _ric(alpha.components, ric.matrix))


def lemma_identity(phi: LieValuedForm, b1: LieValuedForm, b2: LieValuedForm) -> tuple:
    """The three pairings <phi, [b1^b2]>, <R(phi)(b2), b1>, <b2, R(phi)(b1)>."""
    return (phi.inner(bracket_wedge(b1, b2)),
            curvature_action(phi, b2).inner(b1),
            b2.inner(curvature_action(phi, b1)))


def ad_invariance(eta: SkewEndo, psi: SkewEndo, xi: SkewEndo):
    """<[eta, psi], xi> + <psi, [eta, xi]>; zero for skew eta."""
    return eta.bracket(psi).inner(xi) + psi.inner(eta.bracket(xi))


def curvature_contraction(phi: LieValuedForm, psi: SkewEndo):
    """sum_{i<j} <phi(e_i, e_j), [phi(e_i, e_j), psi]>."""
    if phi.degree != 2:
        raise DimensionError("contraction takes a 2-form")
    c = phi.components
    return _inner2(c, _comm(c, psi.matrix))


# ---------------------------------------------------------------------------
# randomized inequality checks


def _random_skew(rng: np.random.Generator, shape: tuple, r: int) -> np.ndarray:
    a = rng.integers(-9, 10, size=shape + (r, r)).astype(object)
    return a - np.swapaxes(a, -1, -2)


def _random_two_form(rng: np.random.Generator, m: int, r: int) -> np.ndarray:
    a = _random_skew(rng, (m, m), r)
    mask = _upper_mask(m)
    out = np.zeros((m, m, r, r), dtype=object)
    out[mask] = a[mask]
    return out - out.transpose(1, 0, 2, 3)


@dataclass
class InequalityReport:
    trials: int
    m: int
    r: int
    seed: int
    lemma_failures: int = 0
    ad_failures: int = 0
    contraction_failures: int = 0
    curvature_violations: int = 0
    bracket_violations: int = 0
    ricci_violations: int = 0
    max_curvature_ratio: Fraction = Fraction(0)
    max_bracket_ratio: Fraction = Fraction(0)
    min_ricci_gap: Optional[Fraction] = None
    counterexample: Optional[dict] = None

    @property
    def violations(self) -> int:
        return (self.lemma_failures + self.ad_failures + self.contraction_failures
                + self.curvature_violations + self.bracket_violations + self.ricci_violations)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "trials": self.trials, "m": self.m, "r": self.r, "seed": self.seed,
            "lemma_failures": self.lemma_failures,
            "ad_invariance_failures": self.ad_failures,
            "contraction_failures": self.contraction_failures,
            "curvature_pairing_violations": self.curvature_violations,
            "bracket_norm_violations": self.bracket_violations,
            "ricci_violations": self.ricci_violations,
            "max_curvature_ratio": f"{float(self.max_curvature_ratio):.6f}",
            "max_bracket_ratio": f"{float(self.max_bracket_ratio):.6f}",
            "min_ricci_gap": None if self.min_ricci_gap is None else str(self.min_ricci_gap),
            "violations": self.violations,
            "counterexample": self.counterexample,
        }


def _ratio(num, den) -> Fraction:
    return Fraction(0) if den == 0 else Fraction(num, den)


def _one_trial(rng: np.random.Generator, m: int, r: int, rep: InequalityReport, trial: int):
    alpha = _random_skew(rng, (m,), r)
    b2 = _random_skew(rng, (m,), r)
    phi = _random_two_form(rng, m, r)
    eta, psi, xi = _random_skew(rng, (3,), r)
    k = int(rng.integers(-3, 4))
    g = rng.integers(-3, 4, size=(m, m)).astype(object)
    ric = k * np.eye(m, dtype=int).astype(object) + g.T @ g

    # lemma double identity
    a = _inner2(phi, _wedge(alpha, b2))
    b = _inner(_action(phi, b2), alpha)
    c = _inner(b2, _action(phi, alpha))
    bad = []
    if not a == b == c:
        rep.lemma_failures += 1
        bad.append("lemma")
    if _inner(_comm(eta, psi), xi) + _inner(psi, _comm(eta, xi)) != 0:
        rep.ad_failures += 1
        bad.append("ad-invariance")
    if _inner2(phi, _comm(phi, psi)) != 0:
        rep.contraction_failures += 1
        bad.append("contraction")

    a2 = _inner(alpha, alpha)
    pairing = _inner(_action(phi, alpha), alpha)
    lhs, rhs = pairing * pairing, _inner2(phi, phi) * a2 * a2
    rep.max_curvature_ratio = max(rep.max_curvature_ratio, _ratio(lhs, rhs))
    if lhs > rhs:
        rep.curvature_violations += 1
        bad.append("curvature pairing")
    w = _wedge(alpha, alpha)
    wn = _inner2(w, w)
    rep.max_bracket_ratio = max(rep.max_bracket_ratio, _ratio(wn, a2 * a2))
    if wn > a2 * a2:
        rep.bracket_violations += 1
        bad.append("bracket norm")
    gap = _inner(_ric(alpha, ric), alpha) - k * a2
    rep.min_ricci_gap = gap if rep.min_ricci_gap is None else min(rep.min_ricci_gap, gap)
    if gap < 0:
        rep.ricci_violations += 1
        bad.append("ricci")
    if bad and rep.counterexample is None:
        rep.counterexample = {
            "trial": trial, "failed": bad, "k": k,
            "alpha": alpha.tolist(), "phi": phi.tolist(), "ric": ric.tolist(),
        }


def check_inequalities(trials: int, seed: int, m: int, r: int) -> InequalityReport:
    """Run ``trials`` independent exact instances; per-trial generators are
    spawned from ``seed`` so results do not depend on execution order."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if m < 1 or r < 2:
        raise DimensionError("need m >= 1 and r >= 2")
    rep = InequalityReport(trials, m, r, seed)
    children = np.random.SeedSequence(seed).spawn(trials)
    for t, child in enumerate(children):
        _one_trial(np.random.default_rng(child), m, r, rep, t)
    return rep


def self_dual_triple() -> LieValuedForm:
    """so(4)-valued 1-form on R^3 built from a self-dual basis.

    With E1 = e12 + e34, E2 = e13 - e24, E3 = e14 + e23 one has
    ||alpha||^2 = 12 while ||[alpha ^ alpha]||^2 = 192 > 144, so the bound
    ||[alpha ^ alpha]||^2 <= ||alpha||^4 fails for this form.
    """
    def e(i, j):
        a = np.zeros((4, 4), dtype=object)
        a[i, j], a[j, i] = 1, -1
        return a
    basis = [e(0, 1) + e(2, 3), e(0, 2) - e(1, 3), e(0, 3) + e(1, 2)]
    return LieValuedForm(1, np.array(basis, dtype=object))
