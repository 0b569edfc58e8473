"""Command-line entry point.

Exit codes:
  0  success
  2  bad arguments, unknown family or invalid parameters
  3  endpoint root or other certification failure
  4  verify-example81: some identity does not hold as displayed
  5  ym-check: an identity or inequality was violated
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import chen, forms
from .catalog import FamilyId, ParameterError, all_families, build_family
from .classify import ClassificationError, classify, report, sweep, sweep_table
from .poly import EndpointRootError

EXIT_OK, EXIT_USAGE, EXIT_CERT, EXIT_EXAMPLE, EXIT_YM = 0, 2, 3, 4, 5
SCHEMA = 1
_PARAM_NAMES = ("n", "p", "q", "k", "m1", "m2", "mult")


@dataclass
class RunConfig:
    verb: str
    family: Optional[str] = None
    params: dict = field(default_factory=dict)
    digits: int = 6
    rounding: bool = False
    ambient_c: Optional[Fraction] = None
    theorem: Optional[str] = None
    n_min: Optional[int] = None
    n_max: Optional[int] = None
    m: int = 2
    r: int = 2
    trials: int = 1000
    seed: int = 42
    json: bool = False

    def validate(self):
        if not 1 <= self.digits <= 50:
            raise ParameterError("--digits must lie in [1, 50]")
        if self.n_min is not None and self.n_max is not None and self.n_min > self.n_max:
            raise ParameterError("empty n range")
        if self.verb in ("verify-example81", "ym-check") and self.m < 1:
            raise ParameterError("--m must be >= 1")
        if self.verb == "ym-check" and (self.r < 2 or self.trials < 1):
            raise ParameterError("ym-check needs --r >= 2 and --trials >= 1")


def _dump(doc) -> str:
    return json.dumps(doc, indent=2)


def run(cfg: RunConfig, out=None) -> int:
    """Execute one verb; the document goes to ``out`` (stdout by default)."""
    out = out or sys.stdout
    cfg.validate()
    if cfg.verb == "classify":
        params = dict(cfg.params)
        f = build_family(cfg.family, **params)
        res = classify(f, cfg.digits, rounding=cfg.rounding, ambient_c=cfg.ambient_c)
        print(report(res, "json" if cfg.json else "table"), file=out)
        return EXIT_OK
    if cfg.verb == "sweep":
        doc = sweep(cfg.theorem, cfg.digits, cfg.n_min, cfg.n_max)
        print(_dump(doc) if cfg.json else sweep_table(doc), file=out)
        return EXIT_OK
    if cfg.verb == "catalog-dump":
        fams = all_families(cfg.n_max or 12)
        print(_dump({"schema": SCHEMA, "families": [f.to_dict() for f in fams]}), file=out)
        return EXIT_OK
    if cfg.verb == "verify-example81":
        rep = chen.verify_example(cfg.m, seed=cfg.seed)
        if cfg.json:
            print(_dump(rep.to_dict()), file=out)
        else:
            print(f"example m = {cfg.m}", file=out)
            for c in rep.checks:
                line = f"  {c.name}: {'equal' if c.equal else 'DIFFERS'}"
                if not c.equal:
                    line += f"  (computed - claimed = {c.difference})"
                print(line, file=out)
            print(f"  m S4 - S2^2 >= 0 at {rep.nonnegativity_points} points: "
                  f"{rep.nonnegativity_violations} violations", file=out)
        return EXIT_OK if rep.all_equal else EXIT_EXAMPLE
    if cfg.verb == "ym-check":
        rep = forms.check_inequalities(cfg.trials, cfg.seed, cfg.m, cfg.r)
        doc = rep.to_dict()
        if cfg.json:
            print(_dump(doc), file=out)
        else:
            for key, val in doc.items():
                if key not in ("schema", "counterexample"):
                    print(f"{key:<30} {val}", file=out)
            if rep.counterexample is not None:
                print("counterexample: " + json.dumps(rep.counterexample), file=out)
        return EXIT_OK if rep.violations == 0 else EXIT_YM
    raise ParameterError(f"unknown verb {cfg.verb!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bihcert",
                                 description="Certified classification of biharmonic "
                                             "hypersurfaces and related algebra checks.")
    sub = ap.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("classify", help="classify one family")
    c.add_argument("--family", required=True, choices=[f.value for f in FamilyId])
    for name in _PARAM_NAMES:
        c.add_argument(f"--{name}", type=int, default=None)
    c.add_argument("--hopf", choices=("cot", "tan"), default="cot",
                   help="form of the Hopf principal curvature for C/D/E types")
    c.add_argument("--digits", type=int, default=6)
    c.add_argument("--rounding", action="store_true", help="round instead of truncate")
    c.add_argument("--ambient-c", type=Fraction, default=None,
                   help="override the ambient curvature constant")
    c.add_argument("--json", action="store_true")

    s = sub.add_parser("sweep", help="run a theorem's full case analysis")
    s.add_argument("--theorem", required=True, choices=("4.1", "6.2", "7.3"))
    s.add_argument("--digits", type=int, default=6)
    s.add_argument("--n-min", type=int, default=None)
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--json", action="store_true")

    d = sub.add_parser("catalog-dump", help="dump the family catalog as JSON")
    d.add_argument("--n-max", type=int, default=12)

    e = sub.add_parser("verify-example81", help="check the quartic biharmonic example")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--json", action="store_true")

    y = sub.add_parser("ym-check", help="randomized exact checks of the form algebra")
    y.add_argument("--m", type=int, required=True)
    y.add_argument("--r", type=int, required=True)
    y.add_argument("--trials", type=int, default=1000)
    y.add_argument("--seed", type=int, default=42)
    y.add_argument("--json", action="store_true")
    return ap


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(verb=ns.verb, json=getattr(ns, "json", False))
    for name in ("family", "digits", "rounding", "ambient_c", "theorem", "n_min", "n_max",
                 "m", "r", "trials", "seed"):
        if getattr(ns, name, None) is not None:
            setattr(cfg, name, getattr(ns, name))
    if ns.verb == "classify":
        cfg.params = {k: getattr(ns, k) for k in _PARAM_NAMES if getattr(ns, k) is not None}
        if ns.hopf != "cot":
            cfg.params["hopf"] = ns.hopf
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        return run(config_from_args(ns))
    except (EndpointRootError, ClassificationError) as exc:
        print(f"bihcert: certification failure: {exc}", file=sys.stderr)
        return EXIT_CERT
    except ValueError as exc:
        ap.print_usage(sys.stderr)
        print(f"bihcert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
