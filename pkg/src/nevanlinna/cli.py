"""Command-line front end.

Every subcommand prints exactly one JSON document on stdout; diagnostics go
to stderr. Exit codes:

====  ==========================================================
0     success, ``Holds``, or product prediction matches observation
1     ``Fails``
2     spec file unreadable or malformed
3     invariant violation, or divergent measure
4     ``Inconclusive``
5     domain mismatch or point outside the domain
6     product prediction disagrees with observation
7     precondition of a theorem-form check not met
====  ==========================================================
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from .classify import DEGENERATE, classify_product, classify_product_torus
from .conditions import (
    SamplePlan,
    Verdict,
    _jsonable,
    growth_check,
    lebesgue_check,
    nevanlinna_check,
)
from .errors import (
    DimensionError,
    DivergenceError,
    DomainError,
    MeasureInvariantError,
    MeasureParseError,
    PreconditionError,
)
from .herglotz import check_positivity, evaluate_q, evaluate_q_derivative
from .measures import (
    REAL,
    TORUS,
    PolydiskData,
    RepresentationData,
    cayley_pullback,
    cayley_pushforward,
    is_finite,
    spec_from_dict,
)
from .torus import evaluate_f, evaluate_f_derivative, mixed_fourier_check, torus_lebesgue_check

EXIT_OK, EXIT_FAILS, EXIT_PARSE, EXIT_INVARIANT = 0, 1, 2, 3
EXIT_INCONCLUSIVE, EXIT_DOMAIN, EXIT_DISAGREE, EXIT_PRECONDITION = 4, 5, 6, 7

VERDICT_EXIT = {Verdict.HOLDS: EXIT_OK, Verdict.FAILS: EXIT_FAILS, Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE}

REAL_CONDITIONS = ("growth", "nevanlinna", "lebesgue", "positivity")
TORUS_CONDITIONS = ("fourier", "torus-lebesgue")


class _Exit(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _finite_json(obj):
    """Replace non-finite floats by strings so the output stays strict JSON."""
    if isinstance(obj, dict):
        return {k: _finite_json(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_finite_json(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    return obj


def _emit(doc):
    sys.stdout.write(json.dumps(_finite_json(_jsonable(doc)), allow_nan=False) + "\n")


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise _Exit(EXIT_PARSE, f"{path} is not valid JSON: {exc}") from None


def _load(path):
    """Load a measure spec or representation document; returns ``(a_or_alpha, b, measure)``."""
    doc = _read_json(path)
    try:
        if isinstance(doc, dict) and "measure" in doc:
            mu = spec_from_dict(doc["measure"])
            if mu.domain is TORUS:
                return float(doc.get("alpha", 0.0)), None, mu
            return float(doc.get("a", 0.0)), tuple(doc.get("b", [0.0] * mu.dim)), mu
        mu = spec_from_dict(doc)
        return 0.0, None if mu.domain is TORUS else (0.0,) * mu.dim, mu
    except MeasureParseError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: {exc}") from None
    except (MeasureInvariantError, DimensionError, TypeError, ValueError) as exc:
        raise _Exit(EXIT_INVARIANT, f"{path}: {exc}") from None


def _plan(args, dim):
    return SamplePlan.default(dim, args.samples, args.seed, args.max_index)


def _config(args, **extra):
    out = {"samples": args.samples, "seed": args.seed, "tol": args.tol, "max_index": args.max_index}
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_validate(args):
    _, _, mu = _load(args.spec)
    _emit({"valid": True, "dim": mu.dim, "domain": mu.domain.value, "finite": is_finite(mu)})
    return EXIT_OK


def cmd_check(args):
    a, b, mu = _load(args.spec)
    cond = args.condition
    if cond in REAL_CONDITIONS and mu.domain is not REAL:
        raise _Exit(EXIT_DOMAIN, f"condition {cond!r} needs a real-side measure")
    if cond in TORUS_CONDITIONS and mu.domain is not TORUS:
        raise _Exit(EXIT_DOMAIN, f"condition {cond!r} needs a torus measure")
    plan = _plan(args, mu.dim)
    tol = args.tol
    config = _config(args, condition=cond)
    try:
        if cond == "growth":
            report = growth_check(mu, threshold=tol)
        elif cond == "nevanlinna":
            config.update(form=args.form, strict_conjugation=args.strict_conjugation)
            report = nevanlinna_check(mu, plan, args.form, strict=args.strict_conjugation, threshold=tol)
        elif cond == "lebesgue":
            config.update(variant=args.variant, corollary=args.corollary)
            report = lebesgue_check(mu, plan, args.variant, corollary=args.corollary, threshold=tol)
        elif cond == "positivity":
            report = check_positivity(RepresentationData(a, b, mu), plan, threshold=tol)
        elif cond == "fourier":
            report = mixed_fourier_check(mu, args.max_index, threshold=tol)
        else:
            config.update(variant=args.variant, corollary=args.corollary)
            report = torus_lebesgue_check(mu, plan, args.variant, corollary=args.corollary,
                                          M=args.max_index, threshold=tol)
    except PreconditionError as exc:
        raise _Exit(EXIT_PRECONDITION, str(exc)) from None
    except DivergenceError as exc:
        raise _Exit(EXIT_INVARIANT, str(exc)) from None
    _emit(report.to_dict(config))
    return VERDICT_EXIT[report.verdict]


def _parse_point(text):
    try:
        return [complex(part.strip().replace(" ", "").replace("i", "j")) for part in text.split(",")]
    except ValueError:
        raise _Exit(EXIT_DOMAIN, f"cannot parse point {text!r}") from None


def _parse_index(text):
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise _Exit(EXIT_PARSE, f"cannot parse multi-index {text!r}") from None


def cmd_eval(args):
    a, b, mu = _load(args.spec)
    point = _parse_point(args.point)
    side = args.side or ("f" if mu.domain is TORUS else "q")
    if (side == "q") != (mu.domain is REAL):
        raise _Exit(EXIT_DOMAIN, f"side {side!r} does not match a {mu.domain.value} measure")
    k = _parse_index(args.derivative) if args.derivative else None
    try:
        if side == "q":
            data = RepresentationData(a, b, mu)
            res = evaluate_q_derivative(data, k, point) if k else evaluate_q(data, point)
        else:
            if k:
                if sorted(k) != [0] * (len(k) - 1) + [1]:
                    raise _Exit(EXIT_PARSE, "f-side derivatives are first order: give a unit multi-index")
                res = evaluate_f_derivative(a, mu, k.index(1) + 1, point)
            else:
                res = evaluate_f(a, mu, point)
    except DomainError as exc:
        raise _Exit(EXIT_DOMAIN, str(exc)) from None
    except DimensionError as exc:
        raise _Exit(EXIT_DOMAIN, str(exc)) from None
    except (DivergenceError, MeasureInvariantError) as exc:
        raise _Exit(EXIT_INVARIANT, str(exc)) from None
    value = complex(res.value)
    _emit({
        "side": side,
        "point": [[c.real, c.imag] for c in point],
        "derivative": k,
        "value": [value.real, value.imag],
        "error_estimate": float(res.error_estimate),
        "converged": bool(res.converged),
    })
    return EXIT_OK if res.converged else EXIT_INCONCLUSIVE


def cmd_product(args):
    _, _, mu1 = _load(args.spec1)
    _, _, mu2 = _load(args.spec2)
    if mu1.domain is not mu2.domain:
        raise _Exit(EXIT_DOMAIN, "both factors must live on the same domain")
    b1 = _parse_index(args.b1) if args.b1 else None
    try:
        if mu1.domain is REAL:
            rec = classify_product(mu1, mu2, SamplePlan.default(mu1.dim + mu2.dim, args.samples, args.seed,
                                                                args.max_index),
                                   b1=b1, threshold=args.tol)
        else:
            rec = classify_product_torus(mu1, mu2, args.max_index, b1=b1, threshold=args.tol,
                                         plan=SamplePlan.default(mu1.dim + mu2.dim, args.samples, args.seed,
                                                                 args.max_index))
    except (MeasureInvariantError, DimensionError) as exc:
        raise _Exit(EXIT_INVARIANT, str(exc)) from None
    _emit(rec.to_dict(_config(args, b1=b1)))
    if rec.verdict == DEGENERATE:
        return EXIT_OK
    if rec.verdict == Verdict.INCONCLUSIVE.value:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if rec.agree else EXIT_DISAGREE


def cmd_cayley(args):
    _, _, mu = _load(args.spec)
    try:
        if args.direction == "to-torus":
            out = cayley_pushforward(mu)
        else:
            out = cayley_pullback(mu)
    except DivergenceError as exc:
        raise _Exit(EXIT_INVARIANT, str(exc)) from None
    except DomainError as exc:
        raise _Exit(EXIT_DOMAIN, str(exc)) from None
    _emit(out.to_dict())
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _sampling_flags(p):
    p.add_argument("--samples", type=int, default=50, help="number of sample points (default 50)")
    p.add_argument("--seed", type=int, default=0, help="seed of the sample plan (default 0)")
    p.add_argument("--tol", type=float, default=1e-6, help="residual threshold (default 1e-6)")
    p.add_argument("--max-index", type=int, default=8, dest="max_index",
                   help="bound M on |m_j| for multi-index conditions (default 8)")
    p.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nevanlinna",
                                     description="Measures, Herglotz-Nevanlinna functions and their characterizations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a measure spec and check its invariants")
    p.add_argument("spec")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", help="run a condition check and print its report")
    p.add_argument("spec")
    p.add_argument("condition", choices=REAL_CONDITIONS + TORUS_CONDITIONS)
    p.add_argument("--form", choices="abcd", default="c", help="Nevanlinna condition form")
    p.add_argument("--variant", choices="abcd", default="c", help="Lebesgue characterization variant")
    p.add_argument("--strict-conjugation", action="store_true", dest="strict_conjugation",
                   help="conjugate z_l1 instead of z_l2 in the Nevanlinna pair integral")
    p.add_argument("--corollary", action="store_true",
                   help="Lebesgue checks without the Nevanlinna (mixed Fourier) assumption")
    _sampling_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="evaluate q (half-plane) or f (polydisk) at a point")
    p.add_argument("spec", help="measure spec or representation document")
    p.add_argument("--side", choices=("q", "f"), default=None)
    p.add_argument("--point", required=True, help="comma-separated complex coordinates, e.g. '1+2j,0.5j'")
    p.add_argument("--derivative", default=None, help="comma-separated multi-index, e.g. '1,0'")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("product", help="classify the product of two measures")
    p.add_argument("spec1")
    p.add_argument("spec2")
    p.add_argument("--b1", default=None, help="1-based coordinates of the first factor, e.g. '2'")
    _sampling_flags(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("cayley", help="transport a measure between R^n and the torus")
    p.add_argument("spec")
    p.add_argument("--direction", choices=("to-torus", "to-real"), default="to-torus")
    p.set_defaults(func=cmd_cayley)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"nevanlinna: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
