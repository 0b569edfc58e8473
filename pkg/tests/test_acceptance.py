"""Acceptance criteria 1-9, each checked at its stated tolerance.

Every test records one PASS/FAIL line (shown in the terminal summary) and
then asserts the same verdict.
"""

import random
import time
from fractions import Fraction

import numpy as np

from bihcert import literature as lit
from bihcert.catalog import build_family, second_form_norm2
from bihcert.chen import verify_example
from bihcert.classify import FamilyEndpointError, classify, theorem_cases
from bihcert.forms import check_inequalities
from bihcert.poly import Interval, Poly, PositivityCertificate, QuadExtPoint, X, count_roots


def _in_square(p: Poly) -> Poly:
    return p.even_in_square().primitive()


def _within(text_or_value, target: float, tol: float) -> bool:
    return abs(float(text_or_value) - target) <= tol


def _ledger_names(res, status_prefix="mismatch"):
    return {e["name"] for e in res.ledger if e["status"].startswith(status_prefix)}


# ---------------------------------------------------------------------------


def test_criterion_1_cp_d(acceptance_line):
    start = time.perf_counter()
    res = classify(build_family("cp-d"), 6)
    elapsed = time.perf_counter() - start
    derived = _in_square(res.biharmonicity_poly)
    expected = Poly([-15, 41, 43, 11])
    eq_ok = derived == expected
    roots = res.nonminimal_biharmonic
    root_ok = (len(roots) == 1 and _within(roots[0].square_decimal, 0.278629, 5e-7)
               and _within(roots[0].decimal, 0.527853, 5e-7))
    mism = _ledger_names(res)
    ledger_ok = {"theorem statement 41t^6+43t^4+41t^2-15", "h(X) = 11X^3+43X^2+41X-15"} <= mism
    ok = eq_ok and root_ok and ledger_ok and elapsed < 1
    acceptance_line(1, ok, f"derived {derived.to_str('X')}; expected {expected.to_str('X')}; "
                           f"nonminimal roots {len(roots)}; ledger records discrepancy "
                           f"{ledger_ok}; {elapsed:.2f}s")
    assert ok


def test_criterion_2_cp_e(acceptance_line):
    start = time.perf_counter()
    res = classify(build_family("cp-e"), 6)
    elapsed = time.perf_counter() - start
    derived = _in_square(res.biharmonicity_poly)
    expected = Poly([-9, 43, -107, 13])
    roots = res.nonminimal_biharmonic
    root_ok = (len(roots) == 1 and _within(roots[0].square_decimal, 7.81906, 5e-6)
               and _within(roots[0].decimal, 2.79626, 5e-6)
               and _within(roots[0].angle_decimal, 0.343448, 5e-6))
    ok = derived == expected and root_ok and elapsed < 1
    acceptance_line(2, ok, f"derived {derived.to_str('X')}; expected {expected.to_str('X')}; "
                           f"nonminimal roots {len(roots)}; {elapsed:.2f}s")
    assert ok


def test_criterion_3_sphere_sweep(acceptance_line):
    start = time.perf_counter()
    half = QuadExtPoint(0, Fraction(1, 2), 2)
    problems = []
    counts = {}
    for row, fams in theorem_cases("4.1", 3, 10):
        counts[row] = len(fams)
        for f in fams:
            r = classify(f, 6)
            if row == "g=1":
                if [c.level for c in r.nonminimal_biharmonic] != [-half, half]:
                    problems.append(f.label())
            elif row == "g=2":
                n, p = f.n, f.params["p"]
                if [c.level for c in r.minimal_roots] != [Fraction(n + 1 - 2 * p, n - 1)]:
                    problems.append(f.label() + " minimal level")
                want = [] if p - 1 == n - p else [0]
                if [c.level for c in r.nonminimal_biharmonic] != want:
                    problems.append(f.label() + " clifford")
            else:
                cert = r.nonexistence.certificate if r.nonexistence else None
                if not (isinstance(cert, PositivityCertificate) and cert.verify()
                        and cert.sturm_root_count == 0):
                    problems.append(f.label() + " certificate")
    elapsed = time.perf_counter() - start
    g3_ok = counts.get("g=3") == 4
    ok = not problems and g3_ok and all(counts.values()) and elapsed < 10
    acceptance_line(3, ok, f"cases {counts}; problems {problems or 'none'}; {elapsed:.2f}s")
    assert ok


def test_criterion_4_cp_a(acceptance_line):
    problems, checked = [], 0
    for s in range(1, 10):
        for p in range(0, s // 2 + 1):
            q = s - p
            f = build_family("cp-a", p=p, q=q)
            r = classify(f, 6, ledger=False)
            eq = r.biharmonicity_poly.even_in_square()
            b2 = second_form_norm2(f).even_in_square()
            closed = [v.value for v in lit.displayed(f)[1]
                      if v.quantity == lit.BIHARMONIC and v.variable == "X"]
            got = sorted((c.exact_square for c in r.nonminimal_biharmonic), key=float)
            checked += 1
            if len(closed) != 2 or any(eq(x) != 0 for x in closed):
                problems.append(f"{f.label()} residual")
            if sorted(closed, key=float) != got:
                problems.append(f"{f.label()} roots")
            if any(b2(x) != 2 * (f.n + 1) for x in got):
                problems.append(f"{f.label()} norm")
    ok = not problems
    acceptance_line(4, ok, f"{checked} (p, q) pairs; problems {problems or 'none'}")
    assert ok


def test_criterion_5_cp_b_c(acceptance_line):
    problems = []
    fams = ([build_family("cp-b", n=n) for n in range(2, 13)]
            + [build_family("cp-c", n=n) for n in range(3, 13)])
    for f in fams:
        r = classify(f, 6, ledger=False)
        if r.nonexistence is None or not r.nonexistence.certificate.verify():
            problems.append(f"{f.label()} certificate")
        derived = second_form_norm2(f).even_in_square()
        forms = [d for d in lit.displayed(f)[0] if d.quantity == lit.NORM2]
        if len(forms) != 1 or forms[0].value != derived:
            problems.append(f"{f.label()} norm identity")
    ok = not problems
    acceptance_line(5, ok, f"{len(fams)} families; problems {problems or 'none'}")
    assert ok


def test_criterion_6_hp_sweep(acceptance_line):
    problems, endpoint = [], []
    for n in range(2, 9):
        f = build_family("hp-sphere", n=n)
        r = classify(f, 6)
        if [c.exact_square for c in r.minimal_roots] != [Fraction(3, 4 * n - 1)]:
            problems.append(f"{f.label()} minimal")
        eq = r.biharmonicity_poly.even_in_square()
        closed = [v.value for v in lit.displayed(f)[1]
                  if v.quantity == lit.BIHARMONIC and v.variable == "X"]
        residual = [eq(x) for x in closed]
        if not closed or any(x != 0 for x in residual):
            problems.append(f"{f.label()} closed form residual {[str(x) for x in residual]}")

        f = build_family("hp-cp-tube", n=n)
        r = classify(f, 6)
        b2 = second_form_norm2(f).even_in_square()
        if not _ledger_names(r):
            problems.append(f"{f.label()} discrepancy not ledgered")
        for c in r.nonminimal_biharmonic:
            if c.exact_square is None or b2(c.exact_square) != 4 * (n + 2):
                problems.append(f"{f.label()} norm at root")

        for k in range(1, n):
            f = build_family("hp-hpk-tube", n=n, k=k)
            try:
                r = classify(f, 6)
            except FamilyEndpointError:
                endpoint.append(f.label())
                continue
            display = next(d.value for d in lit.displayed(f)[0] if d.quantity == lit.BIHARMONIC)
            q = display.even_in_square()
            for c in r.nonminimal_biharmonic:
                if c.exact_square is None or q(c.exact_square) != 0:
                    problems.append(f"{f.label()} displayed equation residual")
                    break
    ok = not problems
    acceptance_line(6, ok, f"{len(problems)} problems (first: {problems[:3]}); "
                           f"endpoint-root cases {endpoint}")
    assert ok


def test_criterion_7_example(acceptance_line):
    start = time.perf_counter()
    problems, d_reports = [], []
    for m in range(1, 7):
        rep = verify_example(m, points=200)
        for c in rep.checks:
            if c.name.startswith(("(a)", "(b)", "(c)")) and not c.equal:
                problems.append(f"m={m} {c.name}")
        d = rep.check("(d) |grad tau|^2 as displayed")
        d_reports.append("equal" if d.equal else "differs")
        entry = next(e for e in rep.to_dict()["checks"] if e["name"] == d.name)
        if d.computed - d.claimed != d.difference or (entry["difference"] == "0") != d.equal:
            problems.append(f"m={m} no difference report")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 5
    acceptance_line(7, ok, f"(a)-(c) problems {problems or 'none'}; (d) by m: {d_reports}; "
                           f"{elapsed:.2f}s")
    assert ok


def test_criterion_8_form_algebra(acceptance_line):
    start = time.perf_counter()
    combos = [(m, r) for m in (2, 3, 4) for r in (2, 3, 4)]
    total, per, extra = 10_000, 10_000 // len(combos), 10_000 % len(combos)
    violations, ran, worst = 0, 0, Fraction(0)
    for i, (m, r) in enumerate(combos):
        rep = check_inequalities(per + (1 if i < extra else 0), 42, m, r)
        violations += rep.violations
        ran += rep.trials
        worst = max(worst, rep.max_bracket_ratio)
    elapsed = time.perf_counter() - start
    ok = ran == total and violations == 0 and elapsed < 30
    acceptance_line(8, ok, f"{ran} instances; {violations} violations; max bracket ratio "
                           f"{float(worst):.4f}; {elapsed:.2f}s")
    assert ok


def _dense_sign_changes(roots, lo_k, hi_k):
    """Sign changes of prod(x - r) at the points (2j+1)/28 for lo_k <= j <= hi_k.

    Roots are multiples of 1/7, so no sample point is within 1/28 of a root and
    each gap between consecutive samples holds at most one root.
    """
    xs = (2 * np.arange(lo_k, hi_k + 1) + 1) / 28.0
    vals = np.ones_like(xs)
    for r in roots:
        vals *= xs - float(r)
    s = np.sign(vals)
    return int(np.count_nonzero(s[1:] != s[:-1]))


def test_criterion_9_poly_core(acceptance_line):
    import test_poly

    rng = random.Random(42)
    mismatches, done = [], 0
    while done < 500:
        k = rng.randint(0, 6)
        roots = [Fraction(v, 7) for v in rng.sample(range(-70, 71), k)]
        p = Poly.const(rng.choice([-5, -2, -1, 1, 3, 7]))
        degree = 0
        for r in roots:
            e = rng.choice([1, 1, 2])
            if degree + e > 6:
                e = 1
            if degree + e > 6:
                break
            p = p * (X - r) ** e
            degree += e
        used = [r for r in roots if p(r) == 0]
        if degree <= 4 and rng.random() < 0.5:
            p = p * (X * X + rng.randint(1, 9))
        if p.degree < 1:
            continue
        lo_k, hi_k = sorted(rng.sample(range(-170, 170), 2))
        lo, hi = Fraction(2 * lo_k + 1, 28), Fraction(2 * hi_k + 1, 28)
        if count_roots(p, lo, hi) != _dense_sign_changes(used, lo_k, hi_k):
            mismatches.append(p.to_str())
        done += 1
    axiom_failures = []
    for name in ("test_ring_axioms", "test_division_identity", "test_evaluation_is_homomorphism",
                 "test_gcd_matches_sympy", "test_rational_function_normal_form"):
        try:
            getattr(test_poly, name)()
        except AssertionError:
            axiom_failures.append(name)
    ok = not mismatches and not axiom_failures
    acceptance_line(9, ok, f"{done} polynomials, {len(mismatches)} count mismatches; "
                           f"ring-axiom failures {axiom_failures or 'none'}")
    assert ok
