"""Residual evaluators and sampled verdicts for conditions on measures on ``R^n``.

Every condition in this module has the shape "an integral against ``mu``
vanishes for all ``z`` in the poly-upper half-plane (or all multi-indices in
some set)". A residual evaluator computes one such integral; a check sweeps
a deterministic :class:`SamplePlan` and turns the largest residual into a
verdict. ``Holds`` therefore always means *holds on the plan*.

Coordinate indices (``l1``, ``l2``, ``j``) are 1-based throughout, matching
the usual mathematical notation.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .errors import DimensionError, DomainError, PreconditionError
from .measures import REAL, MeasureSpec
from .quadrature import (
    DEFAULT_CONFIG,
    GROWTH_FACTOR,
    AxisFactor,
    Integrand,
    QuadratureConfig,
    QuadratureResult,
    growth_integral,
    integrate,
)

DEFAULT_THRESHOLD = 1e-6


class Verdict(str, enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INCONCLUSIVE = "Inconclusive"


# ---------------------------------------------------------------------------
# Sample plans and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SamplePlan:
    """Deterministic sample points for the "for all z" quantifiers.

    ``z`` holds points of the poly-upper half-plane, ``w`` points of the open
    polydisk (for torus checks) and ``max_index`` bounds ``|m_j|`` for the
    multi-index conditions.
    """

    dim: int
    z: tuple
    w: tuple
    max_index: int = 4
    seed: int = 0

    def __post_init__(self):
        for z in self.z:
            if len(z) != self.dim or any(complex(c).imag <= 0 for c in z):
                raise DomainError("plan z-samples must lie in the poly-upper half-plane")
        for w in self.w:
            if len(w) != self.dim or any(abs(c) >= 1 for c in w):
                raise DomainError("plan w-samples must lie in the open polydisk")
        if self.max_index < 1:
            raise DimensionError("max_index must be at least 1")

    @classmethod
    def default(cls, dim, samples=50, seed=0, max_index=4):
        """Seeded plan: the first point is ``i (1, ..., 1)`` (resp. ``0``), the
        rest have ``Re z`` in ``[-3, 3]``, ``Im z`` in ``[0.5, 3]`` and ``|w| <= 0.8``."""
        if dim < 1 or samples < 1:
            raise DimensionError("need dim >= 1 and samples >= 1")
        rng = np.random.default_rng(seed)
        zs = [tuple([1j] * dim)]
        ws = [tuple([0j] * dim)]
        for _ in range(samples - 1):
            re = rng.uniform(-3.0, 3.0, dim)
            im = rng.uniform(0.5, 3.0, dim)
            zs.append(tuple(complex(a, b) for a, b in zip(re, im)))
            r = 0.8 * np.sqrt(rng.uniform(0.0, 1.0, dim))
            ang = rng.uniform(0.0, 2 * math.pi, dim)
            ws.append(tuple(complex(v) for v in r * np.exp(1j * ang)))
        return cls(dim, tuple(zs), tuple(ws), max_index, seed)

    def multi_indices(self, kind):
        """Multi-indices with ``|m_j| <= max_index`` of the given ``kind``.

        ``"mixed"``: at least one positive and one negative entry;
        ``"nonneg"``: entries in ``N_0``, not all zero; ``"nonzero"``: ``Z^n`` minus 0.
        """
        M = self.max_index
        for m in itertools.product(range(-M, M + 1), repeat=self.dim):
            if kind == "mixed" and not (max(m) > 0 and min(m) < 0):
                continue
            if kind == "nonneg" and (min(m) < 0 or not any(m)):
                continue
            if kind == "nonzero" and not any(m):
                continue
            yield m


@dataclass(frozen=True)
class SampleRecord:
    point: Optional[tuple]
    selector: object
    residual: complex
    error_estimate: float = 0.0
    converged: bool = True

    def to_dict(self):
        out = {}
        if self.point is not None:
            out["point"] = [[complex(c).real, complex(c).imag] for c in self.point]
        if self.selector is not None:
            out["selector"] = list(self.selector) if isinstance(self.selector, tuple) else self.selector
        r = complex(self.residual)
        out["residual"] = [r.real, r.imag]
        out["error_estimate"] = self.error_estimate
        out["converged"] = self.converged
        return out


@dataclass
class ConditionReport:
    """Outcome of one sampled condition check."""

    condition_id: str
    formula: str
    samples: list
    max_abs_residual: float
    verdict: Verdict
    threshold: float
    extras: dict = field(default_factory=dict)

    @property
    def holds(self):
        return self.verdict is Verdict.HOLDS

    def worst(self) -> Optional[SampleRecord]:
        if not self.samples:
            return None
        return max(self.samples, key=lambda s: abs(s.residual))

    def to_dict(self, config=None):
        return {
            "condition": self.condition_id,
            "paper_eq": self.formula,
            "verdict": self.verdict.value,
            "threshold": self.threshold,
            "max_abs_residual": self.max_abs_residual,
            "samples": [s.to_dict() for s in self.samples],
            "config": dict(config or {}),
            "extras": _jsonable(self.extras),
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    return obj


def make_report(condition_id, formula, records, threshold, extras=None) -> ConditionReport:
    """Aggregate records; ``Inconclusive`` wins over the residual test."""
    records = list(records)
    max_abs = max((abs(r.residual) for r in records), default=0.0)
    if not all(r.converged for r in records):
        verdict = Verdict.INCONCLUSIVE
    elif max_abs < threshold:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.FAILS
    extras = dict(extras or {})
    extras.setdefault("note", "verdicts are evaluated on a finite sample plan")
    return ConditionReport(condition_id, formula, records, float(max_abs), verdict, threshold, extras)


def _record(point, selector, result: QuadratureResult) -> SampleRecord:
    return SampleRecord(
        None if point is None else tuple(complex(c) for c in point),
        selector, complex(result.value), float(result.error_estimate), bool(result.converged),
    )


# ---------------------------------------------------------------------------
# Axis factors (module-level so that they hash stably)
# ---------------------------------------------------------------------------

def _n_axis(t, k, z):
    return kernels.n_factor(k, z, t)


def _poisson_diff(t, z):
    return kernels.poisson_axis(z, t)


def _double_pole(t, z, order):
    return kernels.double_pole(z, t, order)


def _cayley_power(t, m):
    return kernels.cayley_power_axis(m, t)


def _kernel_axis(t, z):
    return kernels.kernel_axis(z, t)


def n_axis(k, z):
    return AxisFactor(_n_axis, (int(k), 0j if k == 0 else complex(z)))


def poisson_diff_axis(z):
    return AxisFactor(_poisson_diff, (complex(z),))


def double_pole_axis(z, order=1):
    return AxisFactor(_double_pole, (complex(z), int(order)))


def cayley_power(m):
    return AxisFactor(_cayley_power, (int(m),))


def kernel_axis(z):
    return AxisFactor(_kernel_axis, (complex(z),))


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _as_z(mu: MeasureSpec, z):
    z = kernels.half_plane_point(z)
    if len(z) != mu.dim:
        raise DimensionError(f"point has {len(z)} coordinates, measure has dimension {mu.dim}")
    return z


def _require_real(mu):
    if mu.domain is not REAL:
        raise DomainError("this condition applies to measures on R^n")


def _index(j, n, name="j"):
    if isinstance(j, bool) or not isinstance(j, (int, np.integer)) or not 1 <= j <= n:
        raise DimensionError(f"{name} must be an index in 1..{n}, got {j!r}")
    return int(j)


def sign_vectors(n, kind):
    """Sign vectors in ``{-1, 0, 1}^n``.

    ``"mixed"``: contain both -1 and 1; ``"no_plus"``: non-zero without 1;
    ``"nonzero"``: all non-zero vectors.
    """
    for rho in itertools.product((-1, 0, 1), repeat=n):
        if kind == "mixed" and not (-1 in rho and 1 in rho):
            continue
        if kind == "no_plus" and (1 in rho or not any(rho)):
            continue
        if kind == "nonzero" and not any(rho):
            continue
        yield rho


def n_product_integrand(rho, z) -> Integrand:
    return Integrand.product([n_axis(k, zj) for k, zj in zip(rho, z)])


def _n_sum_integrand(z, kind) -> Integrand:
    terms = []
    for rho in sign_vectors(len(z), kind):
        terms.extend(n_product_integrand(rho, z).terms)
    return Integrand(len(z), tuple(terms))


def cayley_power_integrand(m) -> Integrand:
    """``prod ((t_j - i)/(t_j + i))^{m_j} / (1 + t_j^2)``."""
    return Integrand.product([cayley_power(mj) for mj in m])


def nevanlinna_pair_integrand(z, l1, l2, strict=False) -> Integrand:
    """``1/((t_l1 - z_l1)^2 (t_l2 - conj z_c)^2) prod_{other} (1/(t - z) - 1/(t - conj z))``.

    ``c = l2`` by default; ``strict=True`` conjugates ``z_l1`` instead.
    """
    n = len(z)
    factors = []
    for j in range(1, n + 1):
        if j == l1:
            factors.append(double_pole_axis(z[l1 - 1]))
        elif j == l2:
            conj = z[l1 - 1] if strict else z[l2 - 1]
            factors.append(double_pole_axis(np.conj(conj)))
        else:
            factors.append(poisson_diff_axis(z[j - 1]))
    return Integrand.product(factors)


def lebesgue_pole_integrand(z, j, refined=False) -> Integrand:
    """``1/(t_j - z_j)^2 prod_{l != j} (1/(t_l - z_l) - 1/(t_l - conj z_l))``.

    ``refined=True`` uses ``1/(t_l - z_l) - 1/(t_l + i)`` for the other axes.
    """
    factors = []
    for l in range(1, len(z) + 1):
        if l == j:
            factors.append(double_pole_axis(z[l - 1]))
        elif refined:
            factors.append(kernel_axis(z[l - 1]))
        else:
            factors.append(poisson_diff_axis(z[l - 1]))
    return Integrand.product(factors)


def _multi_index(m, n, kind):
    m = tuple(int(v) for v in np.atleast_1d(m))
    if len(m) != n:
        raise DimensionError(f"multi-index {m} must have {n} entries")
    if kind == "mixed" and not (max(m) > 0 and min(m) < 0):
        raise DimensionError(f"multi-index {m} needs a positive and a negative entry")
    if kind == "nonneg" and (min(m) < 0 or not any(m)):
        raise DimensionError(f"multi-index {m} must be non-negative and non-zero")
    if kind == "nonzero" and not any(m):
        raise DimensionError("multi-index must be non-zero")
    return m


def _sign_vector(rho, n, kind):
    rho = tuple(int(r) for r in np.atleast_1d(rho))
    if len(rho) != n or any(r not in (-1, 0, 1) for r in rho):
        raise DimensionError(f"sign vector {rho} must have {n} entries in {{-1, 0, 1}}")
    if rho not in set(sign_vectors(n, kind)):
        raise DimensionError(f"sign vector {rho} is not admissible here")
    return rho


# ---------------------------------------------------------------------------
# Growth
# ---------------------------------------------------------------------------

FORMULAS = {
    "growth": "int prod 1/(1+t_l^2) dmu < inf",
    "nevanlinna.a": "sum_{rho: -1 in rho, 1 in rho} int prod N_{rho_j,j} dmu = 0",
    "nevanlinna.b": "int prod N_{rho_j,j} dmu = 0 for rho containing -1 and 1",
    "nevanlinna.c": "int 1/((t_l1-z_l1)^2 (t_l2-conj z_l2)^2) prod_{j != l1,l2} (1/(t_j-z_j) - 1/(t_j-conj z_j)) dmu = 0",
    "nevanlinna.c.strict": "int 1/((t_l1-z_l1)^2 (t_l2-conj z_l1)^2) prod_{j != l1,l2} (1/(t_j-z_j) - 1/(t_j-conj z_j)) dmu = 0",
    "nevanlinna.d": "int prod ((t_j-i)/(t_j+i))^{m_j} / (1+t_j^2) dmu = 0 for mixed-sign m",
    "lebesgue.a": "sum_{rho != 0, 1 not in rho} int prod N_{rho_j,j} dmu = 0",
    "lebesgue.b": "int prod N_{rho_j,j} dmu = 0 for rho != 0 without entries 1",
    "lebesgue.c": "int 1/(t_j-z_j)^2 prod_{l != j} (1/(t_l-z_l) - 1/(t_l-conj z_l)) dmu = 0",
    "lebesgue.d": "int prod ((t_j-i)/(t_j+i))^{m_j} / (1+t_j^2) dmu = 0 for m in N_0^n \\ 0",
    "lebesgue.corollary.a": "sum_{rho != 0} int prod N_{rho_j,j} dmu = 0",
    "lebesgue.corollary.b": "int prod N_{rho_j,j} dmu = 0 for every rho != 0",
    "lebesgue.corollary.c": "pair condition (nevanlinna.c) and int 1/(t_j-z_j)^2 prod_{l != j} (...) dmu = 0",
    "lebesgue.corollary.d": "int prod ((t_j-i)/(t_j+i))^{m_j} / (1+t_j^2) dmu = 0 for m in Z^n \\ 0",
    "lebesgue.refined": "int 1/(t_j-z_j)^2 prod_{l != j} (1/(t_l-z_l) - 1/(t_l+i)) dmu = 0",
    "lebesgue.dim1.a": "int (Im z/|t-z|^2 - 1/(1+t^2)) dmu = 0",
    "lebesgue.dim1.b": "int (1/(t-z) - 1/(t-i)) dmu = 0",
    "lebesgue.dim1.c": "int 1/(t-z)^2 dmu = 0",
    "lebesgue.dim1.d": "int ((t-i)/(t+i))^m / (1+t^2) dmu = 0 for m != 0",
    "lebesgue.dim2.a": "int (P_2(z,t) - 1/((1+t_1^2)(1+t_2^2))) dmu = 0",
    "lebesgue.dim2.b": "four N-product integrals with rho in {(-1,0), (0,-1), (-1,-1), (-1,1)} vanish",
    "lebesgue.dim2.c": "int 1/((t_1-z_1)^2 (t_2-conj z_2)^2), int 1/(t_1-z_1)^2 (...)_2 and int (...)_1 / (t_2-conj z_2)^2 vanish",
    "lebesgue.dim2.d": "int ((t_1-i)/(t_1+i))^{m_1} ((t_2-i)/(t_2+i))^{m_2} / ((1+t_1^2)(1+t_2^2)) dmu = 0 for m != 0",
}


def growth_check(mu: MeasureSpec, cfg: QuadratureConfig = DEFAULT_CONFIG,
                 threshold=DEFAULT_THRESHOLD) -> ConditionReport:
    """Finiteness of the growth integral.

    The residual is 0 for a finite integral and ``inf`` for a divergent one;
    the integral itself is reported in ``extras["growth_integral"]``.
    """
    _require_real(mu)
    res = growth_integral(mu, cfg)
    residual = math.inf if res.divergent else 0.0
    rec = SampleRecord(None, None, complex(residual), float(res.error_estimate), bool(res.converged or res.divergent))
    report = make_report("growth", FORMULAS["growth"], [rec], threshold,
                         {"growth_integral": complex(res.value).real,
                          "growth_error": float(res.error_estimate)})
    return report


def _require_growth(mu, cfg):
    """Raise when the growth condition fails.

    An unconverged growth integral does not block the check; its record is
    returned so that it can be prepended to the check's records, which makes
    the resulting verdict ``Inconclusive``.
    """
    report = growth_check(mu, cfg)
    if report.verdict is Verdict.FAILS:
        raise PreconditionError("the growth condition fails, so the check is undefined")
    return [] if report.holds else list(report.samples)


# ---------------------------------------------------------------------------
# Nevanlinna condition
# ---------------------------------------------------------------------------

def nevanlinna_residual(mu: MeasureSpec, z, l1=1, l2=2, strict=False,
                        cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """The pair integral of the Nevanlinna condition at ``z`` for indices ``l1 < l2``.

    Examples
    --------
    >>> from nevanlinna.measures import make_dirac
    >>> r = nevanlinna_residual(make_dirac([0.0, 0.0]), [1j, 1j])
    >>> round(r.value.real, 12), round(r.value.imag, 12)
    (1.0, 0.0)
    """
    _require_real(mu)
    n = mu.dim
    if n < 2:
        raise DimensionError("the Nevanlinna condition is vacuous for n = 1")
    l1, l2 = _index(l1, n, "l1"), _index(l2, n, "l2")
    if not l1 < l2:
        raise DimensionError("need l1 < l2")
    z = _as_z(mu, z)
    return integrate(mu, nevanlinna_pair_integrand(z, l1, l2, strict), cfg)


def nevanlinna_form_residual(mu: MeasureSpec, form, z=None, selector=None, strict=False,
                             cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """One residual of the Nevanlinna condition in the given form.

    ``selector`` is ignored for ``"a"``, a sign vector for ``"b"``, a pair
    ``(l1, l2)`` for ``"c"`` and a mixed multi-index for ``"d"`` (which needs no ``z``).
    """
    _require_real(mu)
    n = mu.dim
    if n < 2:
        raise DimensionError("the Nevanlinna condition is vacuous for n = 1")
    if form == "d":
        return integrate(mu, cayley_power_integrand(_multi_index(selector, n, "mixed")), cfg)
    z = _as_z(mu, z)
    if form == "a":
        return integrate(mu, _n_sum_integrand(z, "mixed"), cfg)
    if form == "b":
        return integrate(mu, n_product_integrand(_sign_vector(selector, n, "mixed"), z), cfg)
    if form == "c":
        l1, l2 = selector if selector is not None else (1, 2)
        return nevanlinna_residual(mu, z, l1, l2, strict, cfg)
    raise DimensionError(f"unknown form {form!r}; expected a, b, c or d")


def _nevanlinna_items(mu, plan, form, strict):
    n = mu.dim
    if form == "d":
        for m in plan.multi_indices("mixed"):
            yield None, m, cayley_power_integrand(m)
        return
    for z in plan.z:
        if form == "a":
            yield z, None, _n_sum_integrand(z, "mixed")
        elif form == "b":
            for rho in sign_vectors(n, "mixed"):
                yield z, rho, n_product_integrand(rho, z)
        elif form == "c":
            for l1, l2 in itertools.combinations(range(1, n + 1), 2):
                yield z, (l1, l2), nevanlinna_pair_integrand(z, l1, l2, strict)
        else:
            raise DimensionError(f"unknown form {form!r}; expected a, b, c or d")


def _run(mu, items, cfg):
    return [_record(z, sel, integrate(mu, f, cfg)) for z, sel, f in items]


def nevanlinna_check(mu: MeasureSpec, plan: Optional[SamplePlan] = None, form="c",
                     strict=False, cfg: QuadratureConfig = DEFAULT_CONFIG,
                     threshold=DEFAULT_THRESHOLD) -> ConditionReport:
    """Sampled Nevanlinna condition in form ``a``, ``b``, ``c`` or ``d``.

    For ``n = 1`` the condition is vacuous and the report holds as soon as
    the growth condition does.

    Raises
    ------
    PreconditionError
        If the growth condition fails.
    """
    _require_real(mu)
    if form not in ("a", "b", "c", "d"):
        raise DimensionError(f"unknown form {form!r}; expected a, b, c or d")
    plan = plan or SamplePlan.default(mu.dim)
    _check_plan(plan, mu)
    pre = _require_growth(mu, cfg)
    cid = f"nevanlinna.{form}" + (".strict" if strict and form == "c" else "")
    extras = {"form": form, "strict_conjugation": bool(strict)}
    if form == "d":
        extras["max_index"] = plan.max_index
    if mu.dim == 1:
        extras["note"] = "vacuous for n = 1; every measure satisfying the growth condition qualifies"
        return make_report(cid, FORMULAS[cid], pre, threshold, extras)
    records = pre + _run(mu, _nevanlinna_items(mu, plan, form, strict), cfg)
    return make_report(cid, FORMULAS[cid], records, threshold, extras)


def _check_plan(plan, mu):
    if plan.dim != mu.dim:
        raise DimensionError(f"plan dimension {plan.dim} does not match measure dimension {mu.dim}")


# ---------------------------------------------------------------------------
# Lebesgue characterizations
# ---------------------------------------------------------------------------

def lebesgue_residual(mu: MeasureSpec, z=None, variant="c", selector=None, corollary=False,
                      cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """One residual of a Lebesgue characterization.

    ``selector`` is ignored for ``"a"``; it is a sign vector for ``"b"``, an
    index ``j`` for ``"c"`` and a multi-index for ``"d"`` (no ``z`` needed).
    With ``corollary=True`` the admissible sets grow (all non-zero sign
    vectors, all of ``Z^n`` minus 0) and variant ``"c"`` also accepts a pair
    ``(l1, l2)`` selecting the Nevanlinna pair integral.
    """
    _require_real(mu)
    n = mu.dim
    if variant == "d":
        kind = "nonzero" if corollary else "nonneg"
        return integrate(mu, cayley_power_integrand(_multi_index(selector, n, kind)), cfg)
    z = _as_z(mu, z)
    rho_kind = "nonzero" if corollary else "no_plus"
    if variant == "a":
        return integrate(mu, _n_sum_integrand(z, rho_kind), cfg)
    if variant == "b":
        return integrate(mu, n_product_integrand(_sign_vector(selector, n, rho_kind), z), cfg)
    if variant == "c":
        if corollary and isinstance(selector, (tuple, list)) and len(selector) == 2:
            return nevanlinna_residual(mu, z, selector[0], selector[1], cfg=cfg)
        j = _index(1 if selector is None else selector, n)
        return integrate(mu, lebesgue_pole_integrand(z, j), cfg)
    raise DimensionError(f"unknown variant {variant!r}; expected a, b, c or d")


def _lebesgue_items(mu, plan, variant, corollary):
    n = mu.dim
    if variant == "d":
        for m in plan.multi_indices("nonzero" if corollary else "nonneg"):
            yield None, m, cayley_power_integrand(m)
        return
    rho_kind = "nonzero" if corollary else "no_plus"
    for z in plan.z:
        if variant == "a":
            yield z, None, _n_sum_integrand(z, rho_kind)
        elif variant == "b":
            for rho in sign_vectors(n, rho_kind):
                yield z, rho, n_product_integrand(rho, z)
        elif variant == "c":
            if corollary:
                for l1, l2 in itertools.combinations(range(1, n + 1), 2):
                    yield z, (l1, l2), nevanlinna_pair_integrand(z, l1, l2)
            for j in range(1, n + 1):
                yield z, j, lebesgue_pole_integrand(z, j)
        else:
            raise DimensionError(f"unknown variant {variant!r}; expected a, b, c or d")


def fitted_constant(mu: MeasureSpec, cfg: QuadratureConfig = DEFAULT_CONFIG):
    """``c = growth_integral(mu) / pi^n`` with its quadrature error bar."""
    res = growth_integral(mu, cfg)
    scale = math.pi ** mu.dim
    return complex(res.value).real / scale, float(res.error_estimate) / scale


def _precondition(mu, plan, corollary, cfg, nevanlinna_report):
    pre = _require_growth(mu, cfg)
    if corollary or mu.dim == 1:
        return pre
    report = nevanlinna_report or nevanlinna_check(mu, plan, "c", cfg=cfg)
    if not report.holds:
        raise PreconditionError(
            "the theorem form assumes a Nevanlinna measure; the Nevanlinna check "
            f"returned {report.verdict.value} (use corollary=True to drop the assumption)"
        )
    return pre


def _finish_lebesgue(mu, cid, records, threshold, extras, cfg):
    report = make_report(cid, FORMULAS[cid], records, threshold, extras)
    if report.holds:
        c, c_err = fitted_constant(mu, cfg)
        report.extras["c"] = c
        report.extras["c_error"] = c_err
    return report


def lebesgue_check(mu: MeasureSpec, plan: Optional[SamplePlan] = None, variant="c",
                   corollary=False, cfg: QuadratureConfig = DEFAULT_CONFIG,
                   threshold=DEFAULT_THRESHOLD, nevanlinna_report=None) -> ConditionReport:
    """Decide on the plan whether ``mu`` is a constant multiple of Lebesgue measure.

    The theorem form (default) assumes a Nevanlinna measure and enforces it
    by running the Nevanlinna check first (or by inspecting
    ``nevanlinna_report``). ``corollary=True`` only assumes the growth
    condition and uses the enlarged condition sets. When the verdict is
    ``Holds`` the report carries the fitted ``c`` in ``extras``.

    Raises
    ------
    PreconditionError
        When the growth condition or (theorem form) the Nevanlinna condition fails.
    """
    _require_real(mu)
    if variant not in ("a", "b", "c", "d"):
        raise DimensionError(f"unknown variant {variant!r}; expected a, b, c or d")
    plan = plan or SamplePlan.default(mu.dim)
    _check_plan(plan, mu)
    pre = _precondition(mu, plan, corollary, cfg, nevanlinna_report)
    cid = f"lebesgue{'.corollary' if corollary else ''}.{variant}"
    extras = {"variant": variant, "corollary": bool(corollary)}
    if variant == "d":
        extras["max_index"] = plan.max_index
    records = pre + _run(mu, _lebesgue_items(mu, plan, variant, corollary), cfg)
    return _finish_lebesgue(mu, cid, records, threshold, extras, cfg)


def refined_lebesgue_check(mu: MeasureSpec, plan: Optional[SamplePlan] = None,
                           cfg: QuadratureConfig = DEFAULT_CONFIG,
                           threshold=DEFAULT_THRESHOLD, nevanlinna_report=None) -> ConditionReport:
    """Variant ``c`` with ``1/(t_l - z_l) - 1/(t_l + i)`` on the non-selected axes."""
    _require_real(mu)
    plan = plan or SamplePlan.default(mu.dim)
    _check_plan(plan, mu)
    pre = _precondition(mu, plan, False, cfg, nevanlinna_report)
    items = ((z, j, lebesgue_pole_integrand(z, j, refined=True))
             for z in plan.z for j in range(1, mu.dim + 1))
    return _finish_lebesgue(mu, "lebesgue.refined", pre + _run(mu, items, cfg), threshold, {}, cfg)


def lebesgue_check_dim1(mu: MeasureSpec, plan: Optional[SamplePlan] = None, variant="c",
                        cfg: QuadratureConfig = DEFAULT_CONFIG,
                        threshold=DEFAULT_THRESHOLD) -> ConditionReport:
    """Lebesgue characterization on ``R`` assuming only the growth condition."""
    _require_real(mu)
    if mu.dim != 1:
        raise DimensionError("lebesgue_check_dim1 needs a measure on R")
    plan = plan or SamplePlan.default(1)
    _check_plan(plan, mu)
    pre = _require_growth(mu, cfg)
    if variant == "a":
        items = ((z, None, Integrand.product([poisson_diff_axis(z[0])], 1 / 2j)
                  + Integrand.product([GROWTH_FACTOR], -1.0)) for z in plan.z)
    elif variant == "b":
        items = ((z, None, Integrand.product([n_axis(-1, z[0])], 2j)) for z in plan.z)
    elif variant == "c":
        items = ((z, None, Integrand.product([double_pole_axis(z[0])])) for z in plan.z)
    elif variant == "d":
        items = ((None, m, cayley_power_integrand(m)) for m in plan.multi_indices("nonzero"))
    else:
        raise DimensionError(f"unknown variant {variant!r}; expected a, b, c or d")
    return _finish_lebesgue(mu, f"lebesgue.dim1.{variant}", pre + _run(mu, items, cfg), threshold,
                            {"variant": variant}, cfg)


def lebesgue_check_dim2(mu: MeasureSpec, plan: Optional[SamplePlan] = None, variant="c",
                        cfg: QuadratureConfig = DEFAULT_CONFIG,
                        threshold=DEFAULT_THRESHOLD) -> ConditionReport:
    """Lebesgue characterization on ``R^2`` assuming only the growth condition."""
    _require_real(mu)
    if mu.dim != 2:
        raise DimensionError("lebesgue_check_dim2 needs a measure on R^2")
    plan = plan or SamplePlan.default(2)
    _check_plan(plan, mu)
    pre = _require_growth(mu, cfg)

    def items():
        if variant == "d":
            for m in plan.multi_indices("nonzero"):
                yield None, m, cayley_power_integrand(m)
            return
        for z in plan.z:
            z1, z2 = z
            if variant == "a":
                f = (Integrand.product([poisson_diff_axis(z1), poisson_diff_axis(z2)], -0.25)
                     + Integrand.product([GROWTH_FACTOR, GROWTH_FACTOR], -1.0))
                yield z, None, f
            elif variant == "b":
                for rho in ((-1, 0), (0, -1), (-1, -1), (-1, 1)):
                    yield z, rho, n_product_integrand(rho, z)
            elif variant == "c":
                yield z, "pair", Integrand.product([double_pole_axis(z1), double_pole_axis(np.conj(z2))])
                yield z, "pole1", Integrand.product([double_pole_axis(z1), poisson_diff_axis(z2)])
                yield z, "pole2", Integrand.product([poisson_diff_axis(z1), double_pole_axis(np.conj(z2))])
            else:
                raise DimensionError(f"unknown variant {variant!r}; expected a, b, c or d")

    return _finish_lebesgue(mu, f"lebesgue.dim2.{variant}", pre + _run(mu, items(), cfg), threshold,
                            {"variant": variant}, cfg)
