"""Decision procedures built on the condition checks.

The product classifications compare a *predicted* verdict for a product
measure, computed from properties of its two factors, with the verdict
*observed* by running the condition check on the product itself. On the
real side a product is Nevanlinna exactly when both factors are and one of
them is a multiple of Lebesgue measure; on the torus the same statement
holds with "vanishing mixed Fourier coefficients" in place of "Nevanlinna".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .conditions import (
    DEFAULT_THRESHOLD,
    ConditionReport,
    SamplePlan,
    Verdict,
    _jsonable,
    growth_check,
    lebesgue_check,
    nevanlinna_check,
)
from .errors import DomainError
from .measures import REAL, TORUS, MeasureSpec, is_finite, permuted_product, tensor
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, total_mass
from .torus import mixed_fourier_check, torus_lebesgue_check

DEGENERATE = "Degenerate"

DEGENERATE_NOTE = (
    "A factor is the zero measure, so the product is zero. The zero measure is "
    "trivially a Nevanlinna measure, yet it carries no information about the "
    "other factor; no statement about the factors follows from it."
)


def _and(*verdicts):
    """Three-valued conjunction: any Fails decides, otherwise Inconclusive is contagious."""
    if Verdict.FAILS in verdicts:
        return Verdict.FAILS
    if Verdict.INCONCLUSIVE in verdicts:
        return Verdict.INCONCLUSIVE
    return Verdict.HOLDS


def _or(*verdicts):
    if Verdict.HOLDS in verdicts:
        return Verdict.HOLDS
    if Verdict.INCONCLUSIVE in verdicts:
        return Verdict.INCONCLUSIVE
    return Verdict.FAILS


@dataclass
class FactorSummary:
    """Verdicts for a single measure."""

    dim: int
    growth: Verdict
    nevanlinna: Verdict
    lebesgue_multiple: Verdict
    c: Optional[float] = None
    c_error: Optional[float] = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "dim": self.dim,
            "growth": self.growth.value,
            "nevanlinna": self.nevanlinna.value,
            "lebesgue_multiple": self.lebesgue_multiple.value,
            "c": self.c,
            "c_error": self.c_error,
            "notes": list(self.notes),
        }


@dataclass
class ProductRecord:
    """Predicted versus observed verdict for a product measure."""

    domain: str
    verdict: str
    predicted: Optional[Verdict]
    observed: Optional[Verdict]
    factors: tuple = ()
    b1: Optional[tuple] = None
    notes: list = field(default_factory=list)
    observed_report: Optional[ConditionReport] = None

    @property
    def agree(self):
        if self.verdict == DEGENERATE:
            return True
        return self.predicted is self.observed

    def to_dict(self, config=None):
        f1, f2 = self.factors if self.factors else (None, None)
        label = "nevanlinna" if self.domain == REAL.value else "mixed_fourier"
        out = {
            "condition": f"product.{self.domain}",
            "verdict": self.verdict,
            "domain": self.domain,
            "b1": list(self.b1) if self.b1 else None,
            f"mu1_{label}": f1.nevanlinna.value if f1 else None,
            f"mu2_{label}": f2.nevanlinna.value if f2 else None,
            "mu1_lebesgue_multiple": _lebesgue_entry(f1),
            "mu2_lebesgue_multiple": _lebesgue_entry(f2),
            f"product_{label}_predicted": self.predicted.value if self.predicted else None,
            f"product_{label}_observed": self.observed.value if self.observed else None,
            "agree": self.agree,
            "notes": list(self.notes),
            "config": dict(config or {}),
        }
        if self.observed_report is not None:
            out["observed_report"] = self.observed_report.to_dict(config)
        return _jsonable(out)


def _lebesgue_entry(f):
    if f is None:
        return None
    return {"verdict": f.lebesgue_multiple.value, "c": f.c, "c_error": f.c_error}


def _factor_plan(plan: SamplePlan, dim: int) -> SamplePlan:
    return SamplePlan.default(dim, len(plan.z), plan.seed, plan.max_index)


# ---------------------------------------------------------------------------
# Single measures
# ---------------------------------------------------------------------------

def _summary_real(mu, plan, cfg, threshold):
    notes = []
    growth = growth_check(mu, cfg, threshold).verdict
    if growth is not Verdict.HOLDS:
        notes.append("growth condition not satisfied; the remaining checks are undefined")
        return FactorSummary(mu.dim, growth, growth, Verdict.FAILS if growth is Verdict.FAILS else growth,
                             notes=notes)
    if mu.dim == 1:
        nev = Verdict.HOLDS
        notes.append("for n = 1 the Nevanlinna condition is vacuous")
    else:
        nev = nevanlinna_check(mu, plan, "c", cfg=cfg, threshold=threshold).verdict
    leb = lebesgue_check(mu, plan, "c", corollary=True, cfg=cfg, threshold=threshold)
    return FactorSummary(mu.dim, growth, nev, leb.verdict, leb.extras.get("c"), leb.extras.get("c_error"), notes)


def _summary_torus(nu, M, plan, cfg, threshold):
    notes = []
    if not is_finite(nu):
        notes.append("infinite total mass")
        return FactorSummary(nu.dim, Verdict.FAILS, Verdict.FAILS, Verdict.FAILS, notes=notes)
    mixed = mixed_fourier_check(nu, M, cfg, threshold).verdict
    if nu.dim == 1:
        notes.append("for n = 1 there are no mixed multi-indices")
    leb = torus_lebesgue_check(nu, plan, "c", corollary=True, M=M, cfg=cfg, threshold=threshold)
    return FactorSummary(nu.dim, Verdict.HOLDS, mixed, leb.verdict, leb.extras.get("c"), leb.extras.get("c_error"), notes)


def classify_measure(mu: MeasureSpec, plan: Optional[SamplePlan] = None, M=None,
                     cfg: QuadratureConfig = DEFAULT_CONFIG, threshold=DEFAULT_THRESHOLD) -> FactorSummary:
    """Growth, Nevanlinna and Lebesgue-multiple verdicts for one measure.

    On the torus ``growth`` means finite mass and ``nevanlinna`` means
    vanishing mixed Fourier coefficients up to ``M`` (default
    ``plan.max_index``).

    Examples
    --------
    >>> from nevanlinna.measures import make_dirac
    >>> s = classify_measure(make_dirac([0.0]))
    >>> s.nevanlinna.value, s.lebesgue_multiple.value
    ('Holds', 'Fails')
    """
    plan = plan or SamplePlan.default(mu.dim)
    if mu.domain is TORUS:
        return _summary_torus(mu, plan.max_index if M is None else M, plan, cfg, threshold)
    return _summary_real(mu, plan, cfg, threshold)


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------

def _build_product(mu1, mu2, b1):
    if mu1.domain is not mu2.domain:
        raise DomainError("both factors must live on the same domain")
    return tensor(mu1, mu2) if b1 is None else permuted_product(b1, mu1, mu2)


def _degenerate(domain, b1):
    return ProductRecord(domain.value, DEGENERATE, None, None, (), None if b1 is None else tuple(b1),
                         [DEGENERATE_NOTE])


def _finish(domain, f1, f2, observed_report, b1, notes):
    predicted = _and(f1.nevanlinna, f2.nevanlinna, _or(f1.lebesgue_multiple, f2.lebesgue_multiple))
    observed = observed_report.verdict
    if Verdict.INCONCLUSIVE in (predicted, observed):
        verdict = Verdict.INCONCLUSIVE.value
    else:
        verdict = observed.value
    rec = ProductRecord(domain.value, verdict, predicted, observed, (f1, f2),
                        None if b1 is None else tuple(b1), notes, observed_report)
    if verdict != Verdict.INCONCLUSIVE.value and not rec.agree:
        rec.notes.append("predicted and observed verdicts disagree")
    return rec


def classify_product(mu1: MeasureSpec, mu2: MeasureSpec, plan: Optional[SamplePlan] = None, b1=None,
                     cfg: QuadratureConfig = DEFAULT_CONFIG, threshold=DEFAULT_THRESHOLD) -> ProductRecord:
    """Classify ``mu1 (x) mu2`` (or the permuted product with ``mu1`` on coordinates ``b1``).

    ``plan`` is a plan for the product dimension; the factor plans are drawn
    with the same sample count, seed and index bound. A zero factor gives a
    ``Degenerate`` record.

    Examples
    --------
    >>> import math
    >>> from nevanlinna.measures import make_lebesgue, make_dirac
    >>> rec = classify_product(make_lebesgue(1), make_dirac([0.0], math.pi), SamplePlan.default(2, 5))
    >>> rec.verdict, rec.agree
    ('Holds', True)
    """
    for mu in (mu1, mu2):
        if mu.domain is not REAL:
            raise DomainError("classify_product needs real-side factors; use classify_product_torus")
    product = _build_product(mu1, mu2, b1)
    if mu1.is_zero or mu2.is_zero:
        return _degenerate(REAL, b1)
    plan = plan or SamplePlan.default(product.dim)
    f1 = _summary_real(mu1, _factor_plan(plan, mu1.dim), cfg, threshold)
    f2 = _summary_real(mu2, _factor_plan(plan, mu2.dim), cfg, threshold)
    growth = growth_check(product, cfg, threshold)
    if growth.holds:
        observed = nevanlinna_check(product, plan, "c", cfg=cfg, threshold=threshold)
    else:
        observed = growth
    return _finish(REAL, f1, f2, observed, b1, [])


def classify_product_torus(nu1: MeasureSpec, nu2: MeasureSpec, M=8, b1=None, plan: Optional[SamplePlan] = None,
                           cfg: QuadratureConfig = DEFAULT_CONFIG, threshold=DEFAULT_THRESHOLD) -> ProductRecord:
    """Torus analogue of :func:`classify_product` with mixed Fourier checks up to ``M``."""
    for nu in (nu1, nu2):
        if nu.domain is not TORUS:
            raise DomainError("classify_product_torus needs torus factors")
    product = _build_product(nu1, nu2, b1)
    if nu1.is_zero or nu2.is_zero:
        return _degenerate(TORUS, b1)
    plan = plan or SamplePlan.default(product.dim, max_index=M)
    f1 = _summary_torus(nu1, M, _factor_plan(plan, nu1.dim), cfg, threshold)
    f2 = _summary_torus(nu2, M, _factor_plan(plan, nu2.dim), cfg, threshold)
    observed = mixed_fourier_check(product, M, cfg, threshold)
    return _finish(TORUS, f1, f2, observed, b1, [])
