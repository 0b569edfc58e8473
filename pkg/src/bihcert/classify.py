"""Minimality and biharmonicity equations, certified roots and nonexistence.

For a family with spectrum in one parameter v (``y`` on spheres, ``t`` in the
projective spaces):

* minimal      <=>  numerator of (dim M) H(v) vanishes;
* biharmonic   <=>  numerator of ||B||^2(v) - threshold vanishes.

Both numerators are reduced to primitive square-free integer polynomials and
solved on the family's open range with Sturm isolation.  When the second
has no root there, the sign of ||B||^2 - threshold is certified instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from . import literature as lit
from .catalog import (FamilyId, FamilySpec, biharmonic_threshold, build_family,
                      certify_denominators, level_from_parameter, mean_curvature,
                      second_form_norm2)
from .poly import (EndpointRootError, Interval, IsolatedRoot, NotPositive, Poly,
                   PolyError, PositivityCertificate, QuadExtPoint, RationalFunction,
                   certify_positive, count_roots, exact_real_roots, isolate_and_refine, X)

Exact = Union[Fraction, QuadExtPoint]
SCHEMA = 1


class ClassificationError(PolyError):
    """A family whose equations cannot be set up (identically zero, bad denominators)."""


class FamilyEndpointError(EndpointRootError):
    """Endpoint-root policy triggered while classifying a specific family."""

    def __init__(self, family: FamilySpec, equation: str, cause: EndpointRootError):
        self.family = family
        self.equation = equation
        self.endpoint = cause.endpoint
        PolyError.__init__(self, f"{family.label()}: {equation} equation has a root at the "
                                 f"range endpoint {cause.endpoint}; perturb or deflate")


# ---------------------------------------------------------------------------
# equations


def _reduce(num: Poly) -> Poly:
    return num.squarefree_part().primitive()


def _check_denominators(f: FamilySpec):
    if not certify_denominators(f):
        raise ClassificationError(f"{f.label()}: a principal curvature has a pole inside the range")


def minimality_equation(f: FamilySpec) -> Poly:
    """Square-free primitive numerator of the mean curvature."""
    _check_denominators(f)
    num = mean_curvature(f).num
    if num.is_zero():
        raise ClassificationError("family is minimal for all parameters")
    return _reduce(num)


def biharmonicity_equation(f: FamilySpec, ambient_c: Optional[Fraction] = None) -> Poly:
    """Square-free primitive numerator of ||B||^2 - threshold."""
    _check_denominators(f)
    num = (second_form_norm2(f) - biharmonic_threshold(f, ambient_c)).num
    if num.is_zero():
        raise ClassificationError("||B||^2 equals the threshold identically")
    return _reduce(num)


# ---------------------------------------------------------------------------
# exact decimals of auxiliary quantities


def _exact_root(value: Exact) -> IsolatedRoot:
    """An IsolatedRoot for an exact rational or quadratic value."""
    if isinstance(value, Fraction):
        return IsolatedRoot(Poly([-value, 1]), value, value, exact=value)
    if value.b == 0:
        return _exact_root(value.a)
    poly = value.minimal_poly()
    lo = Fraction(value.floor())
    hi = lo + 1
    other = value.conjugate()
    # shrink until the conjugate is excluded
    while lo < other < hi or other == lo or other == hi:
        mid = (lo + hi) / 2
        if value < mid:
            hi = mid
        else:
            lo = mid
    if lo == value or hi == value:           # cannot happen for irrational values
        raise PolyError("degenerate bracket")
    return IsolatedRoot(poly, lo, hi)


def exact_decimal(value: Exact, digits: int, rounding: bool = False) -> str:
    return _exact_root(value).refine_decimal(digits, rounding)


def _fraction_of_mpf(x) -> Fraction:
    man, exp = x.man_exp
    return Fraction(man) * Fraction(2) ** exp if exp >= 0 else Fraction(man, 2 ** (-exp))


def _mpf_decimal(x, digits: int, rounding: bool) -> str:
    import mpmath
    return exact_decimal(_fraction_of_mpf(mpmath.mpf(x)), digits, rounding)


def arccot_decimal(root: IsolatedRoot, digits: int, rounding: bool = False,
                   dps: int = 50, max_rounds: int = 400) -> str:
    """Decimal of u = arccot(t) = atan2(1, t) for a positive root t.

    Uses interval arithmetic at ``dps`` digits; the root enclosure is
    refined until both interval ends print the same digits.
    """
    from mpmath import iv
    for _ in range(max_rounds):
        saved = iv.dps
        iv.dps = dps
        try:
            u = iv.atan2(1, root.to_interval_mpf(dps))
            a, b = u.a, u.b
        finally:
            iv.dps = saved
        da = _mpf_decimal(a, digits, rounding)
        db = _mpf_decimal(b, digits, rounding)
        if da == db:
            return da
        root.bisect(8)
    raise PolyError("arccot decimal did not stabilise")


# ---------------------------------------------------------------------------
# results


@dataclass
class CertifiedRoot:
    """A root of a derived equation in the family variable plus derived views."""

    root: IsolatedRoot
    exact: Optional[Exact] = None
    exact_square: Optional[Exact] = None
    square_decimal: str = ""
    angle_decimal: str = ""
    level: Optional[Exact] = None
    level_decimal: str = ""
    coincides_with_minimal: bool = False
    separation_steps: Optional[int] = None

    @property
    def decimal(self) -> str:
        return self.root.decimal

    def to_dict(self, f: FamilySpec) -> dict:
        d = {f.variable: self.decimal, "enclosure": [str(e) for e in self.root.enclosure()]}
        if self.exact is not None:
            d["exact"] = str(self.exact)
        if self.square_decimal:
            d["X"] = self.square_decimal
            if self.exact_square is not None:
                d["X_exact"] = str(self.exact_square)
        if self.angle_decimal:
            d["u"] = self.angle_decimal
        if self.level is not None:
            d["level"] = str(self.level)
            d["level_decimal"] = self.level_decimal
        d["simple"] = self.root.simple
        return d


@dataclass
class NonexistenceCertificate:
    """||B||^2 - threshold has constant sign ``excess_sign`` on the range."""

    excess_sign: int
    certificate: PositivityCertificate
    denominator_sign: int

    def to_dict(self, var: str) -> dict:
        d = self.certificate.to_dict(var)
        d["excess_sign"] = self.excess_sign
        d["denominator_sign"] = self.denominator_sign
        return d


@dataclass
class ClassificationResult:
    family: FamilySpec
    digits: int
    minimality_poly: Poly
    biharmonicity_poly: Poly
    threshold: Fraction
    minimal_roots: list[CertifiedRoot]
    biharmonic_roots: list[CertifiedRoot]
    nonminimal_biharmonic: list[CertifiedRoot]
    nonexistence: Optional[NonexistenceCertificate]
    ledger: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        f, v = self.family, self.family.variable
        lo, hi = f.range.endpoints_str()
        return {
            "schema": SCHEMA,
            "family": f.id.value,
            "params": dict(f.params),
            "variable": v,
            "substitution": f.substitution,
            "range": [lo, hi],
            "dim": f.dim,
            "threshold": str(self.threshold),
            "digits": self.digits,
            "minimality_equation": self.minimality_poly.to_str(v),
            "biharmonicity_equation": self.biharmonicity_poly.to_str(v),
            "minimal": [r.to_dict(f) for r in self.minimal_roots],
            "biharmonic": [r.to_dict(f) for r in self.biharmonic_roots],
            "nonminimal_biharmonic": [r.to_dict(f) for r in self.nonminimal_biharmonic],
            "nonexistence_certificate": (None if self.nonexistence is None
                                         else self.nonexistence.to_dict(v)),
            "notes": list(self.notes) + list(f.notes),
            "ledger": self.ledger,
        }


# ---------------------------------------------------------------------------
# classification


def _attach_exact(cr: CertifiedRoot, candidates: list, square_candidates: list, even: bool):
    r = cr.root
    if r.exact is not None:
        cr.exact = r.exact
    else:
        for c in candidates:
            if r.contains(c):
                cr.exact = c
                break
    if not even:
        return
    if cr.exact is not None:
        cr.exact_square = cr.exact * cr.exact
        return
    while r.exact is None and r.low < 0 < r.high:
        r.bisect()
    lo, hi = r.enclosure()
    sq_lo, sq_hi = (lo * lo, hi * hi) if lo >= 0 else (hi * hi, lo * lo)
    for c in square_candidates:
        if sq_lo < c < sq_hi:
            cr.exact_square = c
            break


def _square_decimal(cr: CertifiedRoot, q: Poly, digits: int, rounding: bool) -> str:
    if cr.exact_square is not None:
        return exact_decimal(cr.exact_square, digits, rounding)
    r = cr.root
    lo, hi = r.enclosure()
    if lo >= 0:
        sq = IsolatedRoot(q.even_in_square(), lo * lo, hi * hi)
    else:
        sq = IsolatedRoot(q.even_in_square(), hi * hi, lo * lo)
    return sq.refine_decimal(digits, rounding)


def _certify(f: FamilySpec, roots: list[IsolatedRoot], q: Poly, digits: int,
             rounding: bool) -> list[CertifiedRoot]:
    even = q.is_even()
    candidates = exact_real_roots(q)
    square_candidates = exact_real_roots(q.even_in_square()) if even else []
    out = []
    for r in roots:
        cr = CertifiedRoot(r)
        _attach_exact(cr, candidates, square_candidates, even)
        if cr.exact is not None and not isinstance(cr.exact, Fraction):
            if cr.exact.b == 0:
                cr.exact = cr.exact.a
        if f.variable == "t" and even:
            cr.square_decimal = _square_decimal(cr, q, digits, rounding)
            cr.angle_decimal = arccot_decimal(r, digits, rounding)
        if f.id is FamilyId.SPHERE_G1 and cr.exact is not None:
            cr.level = level_from_parameter(f, cr.exact)
        elif f.id is FamilyId.SPHERE_G2 and cr.exact_square is not None:
            cr.level = level_from_parameter(f, cr.exact_square)
        if f.id is FamilyId.SPHERE_G2 and even:
            cr.square_decimal = _square_decimal(cr, q, digits, rounding)
        if cr.level is not None:
            cr.level_decimal = exact_decimal(cr.level, digits, rounding)
        out.append(cr)
    return out


def _isolate(f: FamilySpec, q: Poly, which: str, digits: int, rounding: bool):
    try:
        return isolate_and_refine(q, f.range, digits, rounding=rounding)
    except EndpointRootError as exc:
        raise FamilyEndpointError(f, which, exc) from None


def _coincides(cr: CertifiedRoot, common: Poly) -> bool:
    if common.degree <= 0:
        return False
    r = cr.root
    if r.exact is not None:
        return common(r.exact) == 0
    # endpoints are not roots of the biharmonic equation, hence not of common
    return count_roots(common, r.low, r.high) > 0


def _separate(b: CertifiedRoot, minimal: list[CertifiedRoot]) -> int:
    """Refine until b is disjoint from every minimal root; returns steps used."""
    steps = 0
    for m in minimal:
        k = 64
        # distinctness is already exact (gcd), so this terminates
        while not b.root.disjoint_from(m.root, max_steps=k):
            k += 64
        steps = max(steps, k)
    return steps


def classify(f: FamilySpec, digits: int = 6, *, rounding: bool = False,
             ambient_c: Optional[Fraction] = None, ledger: bool = True) -> ClassificationResult:
    """Certified minimal / biharmonic parameters of a family on its range."""
    if not 1 <= digits <= 50:
        raise ValueError("precision_digits must lie in [1, 50]")
    qmin = minimality_equation(f)
    qbih = biharmonicity_equation(f, ambient_c)
    threshold = biharmonic_threshold(f, ambient_c)

    minimal = _certify(f, _isolate(f, qmin, "minimality", digits, rounding), qmin, digits, rounding)
    bih = _certify(f, _isolate(f, qbih, "biharmonicity", digits, rounding), qbih, digits, rounding)

    common = qmin.gcd(qbih)
    nonminimal = []
    for b in bih:
        if _coincides(b, common):
            b.coincides_with_minimal = True
            continue
        b.separation_steps = _separate(b, minimal)
        nonminimal.append(b)

    certificate = None
    if not bih:
        excess = second_form_norm2(f) - biharmonic_threshold(f, ambient_c)
        sample = f.range.sample()
        den_sign = 1 if excess.den(sample) > 0 else -1
        for sign in (1, -1):
            cert = certify_positive(sign * den_sign * excess.num, f.range)
            if not isinstance(cert, NotPositive):
                certificate = NonexistenceCertificate(sign, cert, den_sign)
                break
        if certificate is None:                  # a sign change without a root is impossible
            raise ClassificationError(f"{f.label()}: no roots yet no constant sign")

    result = ClassificationResult(f, digits, qmin, qbih, threshold, minimal, bih, nonminimal,
                                  certificate)
    if f.id is FamilyId.SPHERE_G2:
        p, n = f.params["p"], f.n
        if p - 1 == n - p:
            result.notes.append("p-1 = n-p: the only biharmonic parameter is the minimal one")
    if bih and not nonminimal:
        result.notes.append("every biharmonic parameter is minimal")
    if ledger and ambient_c is None:
        result.ledger = build_ledger(result, rounding)
    return result


# ---------------------------------------------------------------------------
# ledger


_POSITIVE = Interval(Fraction(0), None)


def _to_variable(form_poly: Poly, variable: str) -> Poly:
    return form_poly.substitute_square() if variable == "X" else form_poly


def _sig_digits(text: str) -> int:
    return max(1, len(text.lstrip("-").replace(".", "").lstrip("0")))


def _positive_roots(f: FamilySpec, q: Poly, digits: int, rounding: bool) -> list[dict]:
    """Roots of q on the positive half-line with derived views, for ledger entries."""
    dom = _POSITIVE if f.variable == "t" else f.range
    try:
        roots = isolate_and_refine(q, dom, digits, rounding=rounding)
    except EndpointRootError as exc:
        return [{"endpoint_root": str(exc.endpoint)}]
    out = []
    for r in roots:
        entry = {f.variable: r.decimal}
        if f.variable == "t" and q.is_even():
            lo, hi = r.enclosure()
            if r.exact is not None:
                entry["X"] = exact_decimal(r.exact * r.exact, digits, rounding)
            else:
                entry["X"] = IsolatedRoot(q.even_in_square(), lo * lo, hi * hi) \
                    .refine_decimal(digits, rounding)
            entry["u"] = arccot_decimal(r, digits, rounding)
        entry["in_range"] = _in_range(r, f.range)
        out.append(entry)
    return out


def _in_range(r: IsolatedRoot, rng: Interval) -> bool:
    from .poly import _root_in
    return _root_in(r, rng)


def _decimal_matches(text: str, r: IsolatedRoot, which: str, q: Poly, f: FamilySpec) -> bool:
    k = _sig_digits(text)
    for rounding in (False, True):
        if which == "u":
            got = arccot_decimal(r, k, rounding)
        elif which == "X":
            lo, hi = r.enclosure()
            if r.exact is not None:
                got = exact_decimal(r.exact * r.exact, k, rounding)
            else:
                got = IsolatedRoot(q.even_in_square(), lo * lo, hi * hi).refine_decimal(k, rounding)
        else:
            got = r.refine_decimal(k, rounding)
        if got == text:
            return True
    return False


def build_ledger(res: ClassificationResult, rounding: bool = False) -> list[dict]:
    f = res.family
    forms, values, decimals = lit.displayed(f)
    digits = res.digits
    derived = {lit.MINIMAL: res.minimality_poly, lit.BIHARMONIC: res.biharmonicity_poly}
    norm2 = second_form_norm2(f)
    entries: list[dict] = []
    display_polys: dict[str, list[tuple[str, Poly]]] = {lit.MINIMAL: [], lit.BIHARMONIC: []}

    for form in forms:
        entry = {"kind": "form", "quantity": form.quantity, "name": form.name}
        if form.quantity == lit.NORM2:
            shown = form.value.substitute_square() if form.variable == "X" else form.value
            diff = norm2 - shown
            entry["status"] = "match" if diff.is_zero() else "mismatch"
            if not diff.is_zero():
                entry["derived_minus_displayed"] = diff.to_str(f.variable)
            entries.append(entry)
            continue
        shown = _reduce(_to_variable(form.value, form.variable))
        display_polys[form.quantity].append((form.name, shown))
        truth = derived[form.quantity]
        entry["status"] = "match" if shown == truth else "mismatch"
        entry["derived"] = truth.to_str(f.variable)
        if shown != truth:
            roots = _positive_roots(f, shown, digits, rounding)
            entry["displayed_roots"] = [
                {f"{form.quantity}_{k}" if k in ("X", "t", "u", "y") else k: v
                 for k, v in r.items()} for r in roots]
        entries.append(entry)

    for val in values:
        entry = {"kind": "value", "quantity": val.quantity, "name": val.name,
                 "value": str(val.value)}
        truth = derived[val.quantity]
        roots = res.minimal_roots if val.quantity == lit.MINIMAL else res.biharmonic_roots
        if val.variable == "level":
            ok = any(r.level is not None and r.level == val.value for r in roots)
            entry["status"] = "match" if ok else "mismatch"
        else:
            if val.variable == "X":
                q = truth.even_in_square() if truth.is_even() else None
                ok = q is not None and q(val.value) == 0
            else:
                ok = truth(val.value) == 0
            entry["status"] = "satisfies derived equation" if ok else "does not satisfy derived equation"
            entry["in_range"] = _value_in_range(val, f)
        entries.append(entry)

    for dec in decimals:
        entry = {"kind": "decimal", "quantity": dec.quantity, "name": dec.name,
                 "variable": dec.variable, "quoted": dec.text, "matched_by": None}
        sources = [("derived", derived[dec.quantity])] + display_polys[dec.quantity]
        for name, q in sources:
            dom = _POSITIVE if f.variable == "t" else f.range
            try:
                roots = isolate_and_refine(q, dom, 1)
            except EndpointRootError:
                continue
            hit = next((r for r in roots if _decimal_matches(dec.text, r, dec.variable, q, f)), None)
            if hit is not None:
                entry["matched_by"] = name
                entry["in_range"] = _in_range(hit, f.range)
                break
        entry["status"] = ("derived root" if entry["matched_by"] == "derived" else
                           "displayed equation root only" if entry["matched_by"] else
                           "unmatched")
        if entry["matched_by"] and not entry["in_range"]:
            entry["status"] += " (outside range)"
        entries.append(entry)
    return entries


def _value_in_range(val, f: FamilySpec) -> bool:
    v = val.value
    lo, hi = f.range.lo, f.range.hi
    if val.variable == "X":
        if v <= 0:
            return False
        lo = None if lo is None else lo * lo
        hi = None if hi is None else hi * hi
    return (lo is None or v > lo) and (hi is None or v < hi)


# ---------------------------------------------------------------------------
# reporting


def report(r: ClassificationResult, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(r.to_dict(), indent=2)
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    f, v = r.family, r.family.variable
    lines = [f"{f.label()}  dim M = {f.dim}  threshold ||B||^2 = {r.threshold}",
             f"  range: {v} in {f.range}  ({f.substitution})",
             f"  minimality:    {r.minimality_poly.to_str(v)} = 0",
             f"  biharmonicity: {r.biharmonicity_poly.to_str(v)} = 0"]
    lines.append("  minimal: " + (", ".join(_root_text(c, v) for c in r.minimal_roots) or "none"))
    if r.nonminimal_biharmonic:
        lines.append("  nonminimal biharmonic: "
                     + ", ".join(_root_text(c, v) for c in r.nonminimal_biharmonic))
    elif r.nonexistence is not None:
        lines.append("  no nonminimal biharmonic radii; certificate attached")
        c = r.nonexistence
        lines.append(f"    ||B||^2 - threshold has sign {c.excess_sign:+d}: "
                     f"{c.certificate.sturm_root_count} Sturm roots, sample "
                     f"{v} = {c.certificate.sample_point}")
    else:
        lines.append("  no nonminimal biharmonic radii (biharmonic only where minimal)")
    for note in r.notes + list(f.notes):
        lines.append(f"  note: {note}")
    for e in r.ledger:
        lines.append(f"  ledger [{e['kind']}/{e['quantity']}] {e['name']}: {e['status']}")
    return "\n".join(lines)


def _root_text(c: CertifiedRoot, v: str) -> str:
    s = f"{v} = {c.exact if c.exact is not None else c.decimal}"
    if c.square_decimal and c.exact is None:
        s += f" (X = {c.exact_square if c.exact_square is not None else c.square_decimal})"
    if c.angle_decimal:
        s += f" (u = {c.angle_decimal})"
    if c.level is not None:
        s += f" (level {c.level})"
    return s


# ---------------------------------------------------------------------------
# theorem sweeps


def _case(f: FamilySpec, digits: int) -> dict:
    try:
        r = classify(f, digits)
    except FamilyEndpointError as exc:
        return {"family": f.label(), "status": "endpoint-root", "equation": exc.equation,
                "endpoint": str(exc.endpoint), "result": None}
    return {"family": f.label(), "status": "computed", "result": r}


def _summarise(case: dict) -> dict:
    r: Optional[ClassificationResult] = case["result"]
    out = {k: v for k, v in case.items() if k != "result"}
    if r is None:
        return out
    v = r.family.variable
    out["minimal"] = [c.to_dict(r.family) for c in r.minimal_roots]
    out["nonminimal_biharmonic"] = [c.to_dict(r.family) for c in r.nonminimal_biharmonic]
    out["certificate"] = None if r.nonexistence is None else r.nonexistence.to_dict(v)
    out["ledger_mismatches"] = [e["name"] for e in r.ledger
                                if e["status"].startswith(("mismatch", "does not", "unmatched",
                                                           "displayed"))]
    return out


def theorem_cases(theorem: str, n_min: Optional[int] = None, n_max: Optional[int] = None):
    """Ordered ``(row label, [FamilySpec, ...])`` groups for a theorem sweep."""
    if theorem == "4.1":
        lo, hi = n_min or 3, n_max or 10
        g4 = [build_family("sphere-g4", m1=a, m2=b)
              for s in range(2, (hi - 1) // 2 + 1) for a in range(1, s) for b in [s - a]
              if 2 * s + 1 >= lo]
        return [
            ("g=1", [build_family("sphere-g1", n=n) for n in range(lo, hi + 1)]),
            ("g=2", [build_family("sphere-g2", n=n, p=p) for n in range(lo, hi + 1)
                     for p in range(2, (n + 1) // 2 + 1)]),
            ("g=3", [build_family("sphere-g3", mult=m) for m in (1, 2, 4, 8)]),
            ("g=4", g4),
            ("g=6", [build_family("sphere-g6", mult=m) for m in (1, 2)]),
        ]
    if theorem == "6.2":
        hi = n_max or 12
        return [
            ("A", [build_family("cp-a", p=p, q=s - p) for s in range(1, hi)
                   for p in range(0, s // 2 + 1)]),
            ("B", [build_family("cp-b", n=n) for n in range(max(2, n_min or 2), hi + 1)]),
            ("C", [build_family("cp-c", n=n) for n in range(max(3, n_min or 3), hi + 1)]),
            ("D", [build_family("cp-d")]),
            ("E", [build_family("cp-e")]),
        ]
    if theorem == "7.3":
        lo, hi = max(2, n_min or 2), n_max or 8
        return [
            ("geodesic sphere", [build_family("hp-sphere", n=n) for n in range(lo, hi + 1)]),
            ("tube over CP^n", [build_family("hp-cp-tube", n=n) for n in range(lo, hi + 1)]),
            ("tube over HP^k", [build_family("hp-hpk-tube", n=n, k=k)
                                for n in range(lo, hi + 1) for k in range(1, n)]),
        ]
    raise ValueError(f"unknown theorem {theorem!r}; expected 4.1, 6.2 or 7.3")


def _row_outcome(cases: list[dict]) -> str:
    computed = [c for c in cases if c["status"] == "computed"]
    endpoint = len(cases) - len(computed)
    with_nonmin = sum(1 for c in computed if c["result"].nonminimal_biharmonic)
    certified = sum(1 for c in computed if c["result"].nonexistence is not None)
    parts = [f"{len(cases)} cases", f"{with_nonmin} with nonminimal biharmonic",
             f"{certified} nonexistence certificates"]
    if endpoint:
        parts.append(f"{endpoint} endpoint-root")
    return "; ".join(parts)


def sweep(theorem: str, digits: int = 6, n_min: Optional[int] = None,
          n_max: Optional[int] = None) -> dict:
    rows = []
    for label, families in theorem_cases(theorem, n_min, n_max):
        cases = [_case(f, digits) for f in families]
        rows.append({"row": label, "outcome": _row_outcome(cases),
                     "cases": [_summarise(c) for c in cases]})
    return {"schema": SCHEMA, "theorem": theorem, "digits": digits, "rows": rows}


def sweep_table(doc: dict) -> str:
    lines = [f"sweep {doc['theorem']} ({len(doc['rows'])} rows)"]
    for row in doc["rows"]:
        lines.append(f"{row['row']:<16} {row['outcome']}")
        for c in row["cases"]:
            if c["status"] != "computed":
                lines.append(f"    {c['family']}: endpoint root at {c['endpoint']} "
                             f"({c['equation']} equation)")
                continue
            desc = []
            for key, tag in (("minimal", "minimal"), ("nonminimal_biharmonic", "biharmonic")):
                vals = []
                for d in c[key]:
                    vals.append(d.get("level", d.get("exact", next(iter(d.values())))))
                if vals:
                    desc.append(f"{tag}: " + ", ".join(vals))
            if c["certificate"] is not None:
                desc.append("certificate")
            lines.append(f"    {c['family']}: " + "; ".join(desc))
    return "\n".join(lines)
