"""Herglotz-Nevanlinna functions on the poly-upper half-plane from their data ``(a, b, mu)``.

``q(z) = a + sum_l b_l z_l + pi^{-n} int K_n(z, t) dmu(t)``. The integral is
finite for every ``z`` in ``(C \\ R)^n``, so the same formula evaluates the
symmetric extension when some coordinates lie in the lower half-plane.
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
    double_pole_axis,
    kernel_axis,
    make_report,
)
from .errors import DimensionError, RepresentationError
from .measures import RepresentationData, is_finite
from .quadrature import (
    DEFAULT_CONFIG,
    GROWTH_FACTOR,
    Integrand,
    QuadratureConfig,
    QuadratureResult,
    integrate,
)


def kernel_integrand(z) -> Integrand:
    """``K_n(z, .)`` as a sum of two separable terms.

    ``K_n = (2i/(2i)^n) prod(1/(t_l - z_l) - 1/(t_l + i)) - i prod 1/(1 + t_l^2)``.
    """
    n = len(z)
    first = Integrand.product([kernel_axis(c) for c in z], 2j / (2j) ** n)
    second = Integrand.product([GROWTH_FACTOR] * n, -1j)
    return first + second


def kernel_derivative_integrand(k, z) -> Integrand:
    """``d^k K_n / dz^k`` as one separable term (see :func:`kernels.kernel_K_derivative`)."""
    factors = [kernel_axis(c) if kj == 0 else double_pole_axis(c, kj) for kj, c in zip(k, z)]
    return Integrand.product(factors, 1 / (2j) ** (len(z) - 1))


def _check_data(data: RepresentationData):
    if not is_finite(data.mu):
        raise RepresentationError("the growth integral of mu diverges; (a, b, mu) defines no function")


def _point(data, z):
    z = kernels.half_plane_point(z)
    if len(z) != data.dim:
        raise DimensionError(f"point has {len(z)} coordinates, data has dimension {data.dim}")
    return z


def _multi_index(k, n):
    k = tuple(int(v) for v in np.atleast_1d(k))
    if len(k) != n or any(v < 0 for v in k):
        raise DimensionError(f"multi-index {k} must have {n} non-negative entries")
    if sum(k) == 0:
        raise DimensionError("|k| = 0: use evaluate_q instead")
    return k


def evaluate_q(data: RepresentationData, z, cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """Value of ``q`` (or its symmetric extension) at ``z``.

    Returns a :class:`QuadratureResult` whose ``value`` is ``q(z)``.

    Raises
    ------
    RepresentationError
        If the growth integral of ``mu`` diverges.
    DomainError
        If a coordinate of ``z`` is real.
    """
    _check_data(data)
    z = _point(data, z)
    n = data.dim
    res = integrate(data.mu, kernel_integrand(z), cfg).scaled(math.pi ** -n)
    linear = data.a + complex(np.dot(data.b, z))
    return QuadratureResult(res.value + linear, res.error_estimate, res.evaluations,
                            res.converged, res.tolerance, res.divergent)


def evaluate_q_derivative(data: RepresentationData, k, z, cfg: QuadratureConfig = DEFAULT_CONFIG,
                          include_linear=True) -> QuadratureResult:
    """Partial derivative ``d^|k| q / dz^k`` at ``z`` for ``|k| >= 1``.

    The constant ``a`` drops out, ``b_l`` contributes only to first
    derivatives in ``z_l`` (skipped with ``include_linear=False``), and the
    integral term is differentiated under the integral sign.
    """
    _check_data(data)
    z = _point(data, z)
    k = _multi_index(k, data.dim)
    res = integrate(data.mu, kernel_derivative_integrand(k, z), cfg).scaled(math.pi ** -data.dim)
    linear = 0.0
    if include_linear and sum(k) == 1:
        linear = data.b[k.index(1)]
    return QuadratureResult(res.value + linear, res.error_estimate, res.evaluations,
                            res.converged, res.tolerance, res.divergent)


def check_variable_dependence(data: RepresentationData, plan: Optional[SamplePlan] = None,
                              cfg: QuadratureConfig = DEFAULT_CONFIG,
                              threshold=DEFAULT_THRESHOLD):
    """Check that ``q_sym`` ignores upper coordinates once some coordinate is in the lower half-plane.

    For every plan point and ordered pair ``j != l`` the coordinate ``z_j``
    is conjugated into the lower half-plane and the derivative in ``z_l`` is
    sampled. The linear part ``b_l z_l`` is holomorphic in ``z_l`` on its
    own and does not belong to the integral representation the property is
    about, so only the integral term enters the residual.
    """
    _check_data(data)
    n = data.dim
    if n < 2:
        raise DimensionError("variable dependence needs n >= 2")
    plan = plan or SamplePlan.default(n)
    if plan.dim != n:
        raise DimensionError("plan dimension does not match the data")
    records = []
    for z in plan.z:
        for j, l in itertools.permutations(range(n), 2):
            zz = np.array(z, dtype=complex)
            zz[j] = np.conj(zz[j])
            k = [0] * n
            k[l] = 1
            res = evaluate_q_derivative(data, k, zz, cfg, include_linear=False)
            records.append(_record(zz, (j + 1, l + 1), res))
    return make_report("variable_dependence",
                       "d q_sym / d z_l = 0 when Im z_j < 0 and Im z_l > 0 (l != j)",
                       records, threshold)


def check_positivity(data: RepresentationData, plan: Optional[SamplePlan] = None,
                     cfg: QuadratureConfig = DEFAULT_CONFIG, threshold=DEFAULT_THRESHOLD):
    """``Im q >= -threshold`` on the plan; the residual is the negative part of ``Im q``."""
    _check_data(data)
    plan = plan or SamplePlan.default(data.dim)
    if plan.dim != data.dim:
        raise DimensionError("plan dimension does not match the data")
    records, imags = [], []
    for z in plan.z:
        res = evaluate_q(data, z, cfg)
        imags.append(complex(res.value).imag)
        deficit = max(0.0, -complex(res.value).imag)
        records.append(SampleRecord(tuple(z), None, complex(deficit),
                                    float(res.error_estimate), bool(res.converged)))
    return make_report("positivity", "Im q(z) >= 0 on the poly-upper half-plane", records, threshold,
                       {"min_imag": min(imags)})
