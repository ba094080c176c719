"""Polytorus side: Fourier coefficients, the polydisk representation and torus Lebesgue checks.

A finite positive measure ``nu`` on ``[0, 2*pi)^n`` with vanishing mixed
Fourier coefficients and a real ``alpha`` define

    f(w) = i alpha + (2 pi)^{-n} int (2 prod 1/(1 - w_j e^{-i s_j}) - 1) dnu(s),

a holomorphic function with non-negative real part on the polydisk.
Coordinate indices are 1-based, as in :mod:`nevanlinna.conditions`.
"""
from __future__ import annotations

import itertools
import math
from typing import Optional

import numpy as np

from . import kernels
from .conditions import (
    DEFAULT_THRESHOLD,
    SamplePlan,
    SampleRecord,
    _record,
    make_report,
    sign_vectors,
)
from .errors import DimensionError, DivergenceError, DomainError, PreconditionError
from .measures import (
    TORUS,
    TWO_PI,
    CayleyImage,
    Density,
    Dirac,
    Lebesgue,
    MeasureSpec,
    Permuted,
    Tensor,
    _TorusGrid,
    _TorusPoisson,
    is_finite,
)
from .quadrature import (
    DEFAULT_CONFIG,
    AxisFactor,
    Integrand,
    QuadratureConfig,
    QuadratureResult,
    _product,
    _sum,
    integrate,
    total_mass,
)

FORMULAS = {
    "fourier.mixed": "int prod e^{i m_j s_j} dnu = 0 for m with a positive and a negative entry",
    "torus_lebesgue.a": "sum_{rho != 0, 1 not in rho} int prod D_{rho_j,j} dnu = 0",
    "torus_lebesgue.b": "int prod D_{rho_j,j} dnu = 0 for rho != 0 without entries 1",
    "torus_lebesgue.c": "int prod e^{i m_j s_j} dnu = 0 for m in N_0^n \\ 0",
    "torus_lebesgue.d": "int e^{is_j}((w_j-1)/(w_j-e^{is_j}))^2 prod_{l != j} i(1-|w_l|^2)/|e^{is_l}-w_l|^2 dnu = 0",
    "torus_lebesgue.corollary.a": "sum_{rho != 0} int prod D_{rho_j,j} dnu = 0",
    "torus_lebesgue.corollary.b": "int prod D_{rho_j,j} dnu = 0 for every rho != 0",
    "torus_lebesgue.corollary.c": "int prod e^{i m_j s_j} dnu = 0 for m in Z^n \\ 0",
    "torus_lebesgue.corollary.d": "variant d together with the pair integrals "
                                  "e^{is_j1}((w_j1-1)/(w_j1-e^{is_j1}))^2 e^{is_j2}((conj w_j2-1)/(conj w_j2 e^{is_j2}-1))^2 prod(...)",
}


def _require_torus(nu):
    if nu.domain is not TORUS:
        raise DomainError("this operation applies to measures on the torus")


def _require_finite(nu):
    if not is_finite(nu):
        raise DivergenceError("the torus measure has infinite mass")


# ---------------------------------------------------------------------------
# Axis factors
# ---------------------------------------------------------------------------

def _fourier(s, m):
    return kernels.fourier_axis(m, s)


def _d(s, k, w):
    return kernels.d_factor(k, w, s)


def _kp(s, w):
    return kernels.kp_axis(w, s)


def _kp_derivative(s, w):
    return kernels.kp_derivative_axis(w, s)


def _disk_pole(s, w):
    return kernels.disk_double_pole(w, s)


def _disk_conj_pole(s, w):
    return kernels.disk_conjugate_double_pole(w, s)


def _disk_poisson(s, w):
    return kernels.disk_poisson_axis(w, s)


def fourier_integrand(m) -> Integrand:
    return Integrand.product([AxisFactor(_fourier, (int(mj),)) for mj in m])


def d_product_integrand(rho, w) -> Integrand:
    return Integrand.product([AxisFactor(_d, (int(k), 0j if k == 0 else complex(c))) for k, c in zip(rho, w)])


def _d_sum_integrand(w, kind) -> Integrand:
    terms = []
    for rho in sign_vectors(len(w), kind):
        terms.extend(d_product_integrand(rho, w).terms)
    return Integrand(len(w), tuple(terms))


def disk_pole_integrand(w, j, j2=None) -> Integrand:
    """Torus image of the pole integrands: double pole on ``j`` (and a conjugate one on ``j2``)."""
    factors = []
    for l in range(1, len(w) + 1):
        c = complex(w[l - 1])
        if l == j:
            factors.append(AxisFactor(_disk_pole, (c,)))
        elif l == j2:
            factors.append(AxisFactor(_disk_conj_pole, (c,)))
        else:
            factors.append(AxisFactor(_disk_poisson, (c,)))
    return Integrand.product(factors)


# ---------------------------------------------------------------------------
# Fourier coefficients
# ---------------------------------------------------------------------------

def _grid_coefficient(values, m):
    """Exact coefficient of the periodic piecewise-linear interpolant of ``values``.

    Each hat function of width ``h = 2 pi / N`` has transform
    ``h sinc^2(m h / 2)``, so the coefficient is a discrete transform of the
    samples times one sinc factor per axis.
    """
    values = np.asarray(values, dtype=float)
    n = values.shape[0]
    h = TWO_PI / n
    coeffs = np.fft.ifftn(values) * values.size
    idx = tuple(int(mj) % n for mj in m)
    factor = 1.0
    for mj in m:
        factor *= h * np.sinc(mj * h / (2 * math.pi)) ** 2
    return complex(coeffs[idx]) * factor


def _component_coefficient(comp, dim, m, cfg) -> QuadratureResult:
    if isinstance(comp, Lebesgue):
        return QuadratureResult(complex(comp.weight * TWO_PI ** dim) if not any(m) else 0j)
    if isinstance(comp, Dirac):
        return QuadratureResult(comp.weight * complex(np.exp(1j * np.dot(m, comp.point))))
    if isinstance(comp, Density):
        kind = comp.kind
        if isinstance(kind, _TorusPoisson):
            r, theta = float(comp.params["r"]), float(comp.params.get("theta", 0.0))
            mj = m[0]
            return QuadratureResult(comp.weight * TWO_PI * r ** abs(mj) * complex(np.exp(1j * mj * theta)))
        if isinstance(kind, _TorusGrid):
            return QuadratureResult(comp.weight * _grid_coefficient(comp.params["values"], m))
    if isinstance(comp, Tensor):
        parts, start = [], 0
        for f in comp.factors:
            parts.append(_coefficient(f, m[start:start + f.dim], cfg))
            start += f.dim
        return _product(parts)
    if isinstance(comp, Permuted):
        first, second = comp.axes(dim)
        f1, f2 = comp.factors
        return _product([_coefficient(f1, tuple(m[a] for a in first), cfg),
                         _coefficient(f2, tuple(m[a] for a in second), cfg)])
    # images of real measures and anything else: quadrature
    return integrate(MeasureSpec(dim, TORUS, (comp,)), fourier_integrand(m), cfg)


def _coefficient(nu, m, cfg):
    return _sum([_component_coefficient(c, nu.dim, tuple(m), cfg) for c in nu.components])


def fourier_coefficient(nu: MeasureSpec, m, cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """``int prod e^{i m_j s_j} dnu(s)``.

    Lebesgue, atoms, Poisson densities and grid densities are handled in
    closed form (grids through one discrete transform); images of real
    measures go through quadrature.

    Examples
    --------
    >>> from nevanlinna.measures import make_lebesgue
    >>> fourier_coefficient(make_lebesgue(2, domain="torus"), (1, -1)).value
    0j
    """
    _require_torus(nu)
    _require_finite(nu)
    m = tuple(int(v) for v in np.atleast_1d(m))
    if len(m) != nu.dim:
        raise DimensionError(f"multi-index {m} must have {nu.dim} entries")
    return _coefficient(nu, m, cfg)


def _index_set(n, M, kind):
    for m in itertools.product(range(-M, M + 1), repeat=n):
        if kind == "mixed" and not (max(m) > 0 and min(m) < 0):
            continue
        if kind == "nonneg" and (min(m) < 0 or not any(m)):
            continue
        if kind == "nonzero" and not any(m):
            continue
        yield m


def mixed_fourier_check(nu: MeasureSpec, M=8, cfg: QuadratureConfig = DEFAULT_CONFIG,
                        threshold=DEFAULT_THRESHOLD):
    """Vanishing of all mixed Fourier coefficients with ``|m_j| <= M``; vacuous for ``n = 1``."""
    _require_torus(nu)
    _require_finite(nu)
    records = [_record(None, m, fourier_coefficient(nu, m, cfg)) for m in _index_set(nu.dim, M, "mixed")]
    extras = {"max_index": M}
    if nu.dim == 1:
        extras["note"] = "vacuous for n = 1"
    return make_report("fourier.mixed", FORMULAS["fourier.mixed"], records, threshold, extras)


# ---------------------------------------------------------------------------
# Polydisk functions
# ---------------------------------------------------------------------------

def _disk(nu, w):
    w = kernels.disk_point(w)
    if len(w) != nu.dim:
        raise DimensionError(f"point has {len(w)} coordinates, measure has dimension {nu.dim}")
    return w


def evaluate_f(alpha, nu: MeasureSpec, w, cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """``f(w)`` for the pair ``(alpha, nu)``; the result's ``value`` is the function value."""
    _require_torus(nu)
    _require_finite(nu)
    w = _disk(nu, w)
    n = nu.dim
    kern = Integrand.product([AxisFactor(_kp, (complex(c),)) for c in w], 2.0) + Integrand.constant(n, -1.0)
    res = integrate(nu, kern, cfg).scaled(TWO_PI ** -n)
    return QuadratureResult(res.value + 1j * float(alpha), res.error_estimate, res.evaluations,
                            res.converged, res.tolerance)


def evaluate_f_derivative(alpha, nu: MeasureSpec, j, w, cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """``df/dw_j`` at ``w`` (``alpha`` does not contribute)."""
    _require_torus(nu)
    _require_finite(nu)
    w = _disk(nu, w)
    n = nu.dim
    if isinstance(j, bool) or not isinstance(j, (int, np.integer)) or not 1 <= j <= n:
        raise DimensionError(f"j must be an index in 1..{n}")
    factors = [AxisFactor(_kp_derivative if l == j else _kp, (complex(c),))
               for l, c in enumerate(w, start=1)]
    return integrate(nu, Integrand.product(factors), cfg).scaled(TWO_PI ** -n)


# ---------------------------------------------------------------------------
# Lebesgue characterizations on the torus
# ---------------------------------------------------------------------------

def torus_lebesgue_residual(nu: MeasureSpec, w=None, variant="c", selector=None, corollary=False,
                            cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """One residual of a torus Lebesgue characterization.

    ``selector``: ignored for ``"a"``; a sign vector for ``"b"``; a
    multi-index for ``"c"`` (no ``w`` needed); an index ``j`` or, with
    ``corollary=True``, a pair ``(j1, j2)`` for ``"d"``.
    """
    _require_torus(nu)
    _require_finite(nu)
    n = nu.dim
    if variant == "c":
        m = tuple(int(v) for v in np.atleast_1d(selector))
        bad = len(m) != n or not any(m) or (not corollary and min(m) < 0)
        if bad:
            raise DimensionError(f"multi-index {m} is not admissible")
        return fourier_coefficient(nu, m, cfg)
    w = _disk(nu, w)
    kind = "nonzero" if corollary else "no_plus"
    if variant == "a":
        return integrate(nu, _d_sum_integrand(w, kind), cfg)
    if variant == "b":
        rho = tuple(int(r) for r in np.atleast_1d(selector))
        if rho not in set(sign_vectors(n, kind)):
            raise DimensionError(f"sign vector {rho} is not admissible")
        return integrate(nu, d_product_integrand(rho, w), cfg)
    if variant == "d":
        if corollary and isinstance(selector, (tuple, list)) and len(selector) == 2:
            j1, j2 = (int(v) for v in selector)
            if not 1 <= j1 < j2 <= n:
                raise DimensionError("need 1 <= j1 < j2 <= n")
            return integrate(nu, disk_pole_integrand(w, j1, j2), cfg)
        j = 1 if selector is None else selector
        if isinstance(j, bool) or not isinstance(j, (int, np.integer)) or not 1 <= j <= n:
            raise DimensionError(f"j must be an index in 1..{n}")
        return integrate(nu, disk_pole_integrand(w, int(j)), cfg)
    raise DimensionError(f"unknown variant {variant!r}; expected a, b, c or d")


def _torus_items(nu, plan, variant, corollary, M):
    n = nu.dim
    if variant == "c":
        for m in _index_set(n, M, "nonzero" if corollary else "nonneg"):
            yield None, m, None
        return
    kind = "nonzero" if corollary else "no_plus"
    for w in plan.w:
        if variant == "a":
            yield w, None, _d_sum_integrand(w, kind)
        elif variant == "b":
            for rho in sign_vectors(n, kind):
                yield w, rho, d_product_integrand(rho, w)
        elif variant == "d":
            for j in range(1, n + 1):
                yield w, j, disk_pole_integrand(w, j)
            if corollary:
                for j1, j2 in itertools.combinations(range(1, n + 1), 2):
                    yield w, (j1, j2), disk_pole_integrand(w, j1, j2)
        else:
            raise DimensionError(f"unknown variant {variant!r}; expected a, b, c or d")


def torus_lebesgue_check(nu: MeasureSpec, plan: Optional[SamplePlan] = None, variant="c",
                         corollary=False, M=None, cfg: QuadratureConfig = DEFAULT_CONFIG,
                         threshold=DEFAULT_THRESHOLD, mixed_report=None):
    """Decide on the plan whether ``nu`` is a constant multiple of Lebesgue measure on the torus.

    The theorem form assumes vanishing mixed Fourier coefficients and checks
    that first (or inspects ``mixed_report``); ``corollary=True`` drops the
    assumption. ``M`` bounds the indices of variant ``c`` and defaults to
    ``plan.max_index``. A ``Holds`` verdict reports ``c = mass / (2 pi)^n``.

    Raises
    ------
    PreconditionError
        Theorem form on a measure whose mixed coefficients do not vanish.
    """
    _require_torus(nu)
    _require_finite(nu)
    if variant not in ("a", "b", "c", "d"):
        raise DimensionError(f"unknown variant {variant!r}; expected a, b, c or d")
    plan = plan or SamplePlan.default(nu.dim)
    if plan.dim != nu.dim:
        raise DimensionError("plan dimension does not match the measure")
    M = plan.max_index if M is None else int(M)
    if not corollary and nu.dim > 1:
        report = mixed_report or mixed_fourier_check(nu, M, cfg, threshold)
        if not report.holds:
            raise PreconditionError(
                "the theorem form assumes vanishing mixed Fourier coefficients; the mixed check "
                f"returned {report.verdict.value} (use corollary=True to drop the assumption)"
            )
    records = []
    for w, sel, f in _torus_items(nu, plan, variant, corollary, M):
        res = fourier_coefficient(nu, sel, cfg) if f is None else integrate(nu, f, cfg)
        records.append(_record(w, sel, res))
    cid = f"torus_lebesgue{'.corollary' if corollary else ''}.{variant}"
    extras = {"variant": variant, "corollary": bool(corollary)}
    if variant == "c":
        extras["max_index"] = M
    report = make_report(cid, FORMULAS[cid], records, threshold, extras)
    if report.holds:
        mass = total_mass(nu, cfg)
        scale = TWO_PI ** nu.dim
        report.extras["c"] = complex(mass.value).real / scale
        report.extras["c_error"] = float(mass.error_estimate) / scale
    return report
