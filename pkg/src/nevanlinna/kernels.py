"""Pointwise kernels of the poly-upper half-plane and the polydisk.

All functions broadcast over ``t`` (or ``s``): a single point has shape
``(n,)``, a batch has shape ``(N, n)``. Points ``z`` are never batched.

The one-axis factors further down (``resolvent_difference``, ``double_pole``,
...) are the building blocks the condition checks integrate; they are written
in combined-fraction form so that they keep full relative accuracy for large
``|t|``.
"""
import itertools
import math

import numpy as np

from .errors import DimensionError, DomainError


def half_plane_point(z, upper_only=False):
    """Validate a point of ``(C \\ R)^n`` (or ``C^{+n}``) and return it as a complex array."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if z.ndim != 1:
        raise DimensionError("a half-plane point must be a 1-d vector")
    if np.any(z.imag == 0) or not np.all(np.isfinite(z)):
        raise DomainError(f"coordinates must lie off the real axis: {z}")
    if upper_only and np.any(z.imag < 0):
        raise DomainError(f"coordinates must lie in the upper half-plane: {z}")
    return z


def disk_point(w):
    """Validate a point of the open polydisk."""
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    if w.ndim != 1:
        raise DimensionError("a polydisk point must be a 1-d vector")
    if np.any(np.abs(w) >= 1) or not np.all(np.isfinite(w)):
        raise DomainError(f"coordinates must lie in the open unit disk: {w}")
    return w


def _batch(t, n):
    t = np.asarray(t, dtype=float)
    single = t.ndim == 1
    t = np.atleast_2d(t)
    if t.shape[-1] != n:
        raise DimensionError(f"point dimension {t.shape[-1]} does not match {n}")
    return t, single


def _out(values, single):
    return values[0] if single else values


def _sign_vector(rho, allowed, n):
    rho = tuple(int(r) for r in rho)
    if len(rho) != n:
        raise DimensionError(f"sign vector {rho} has wrong length, expected {n}")
    if any(r not in allowed for r in rho):
        raise DimensionError(f"sign vector entries must lie in {sorted(allowed)}: {rho}")
    return rho


# ---------------------------------------------------------------------------
# One-axis factors (vectorized over t or s)
# ---------------------------------------------------------------------------

def resolvent_difference(z, w, t):
    """``1/(t - z) - 1/(t - w)`` in the cancellation-free form ``(z - w)/((t - z)(t - w))``."""
    return (z - w) / ((t - z) * (t - w))


def kernel_axis(z, t):
    """``1/(t - z) - 1/(t + i)``, the per-axis factor of the kernel ``K_n``."""
    return resolvent_difference(z, -1j, t)


def poisson_axis(z, t):
    """``1/(t - z) - 1/(t - conj z) = 2 i Im z / |t - z|^2``."""
    return 2j * z.imag / ((t - z.real) ** 2 + z.imag ** 2)


def double_pole(z, t, order=1):
    """``order! / (t - z)^(order + 1)``, the ``order``-th ``z``-derivative of ``1/(t - z)``."""
    return math.factorial(order) / (t - z) ** (order + 1)


def cayley_power_axis(m, t):
    """``((t - i)/(t + i))^m / (1 + t^2)`` for integer ``m``."""
    return ((t - 1j) / (t + 1j)) ** m / (1.0 + t * t)


def n_factor(k, z, t):
    """The factor ``N_{k,j}`` at ``z_j = z`` and ``t_j = t``.

    ``N_{-1} = (1/2i)(1/(t-z) - 1/(t-i))``, ``N_0 = 1/(1+t^2)`` and
    ``N_1 = (1/2i)(1/(t+i) - 1/(t-conj z))``; for real ``t`` this gives
    ``N_1 = conj(N_{-1})`` and a real ``N_0``.
    """
    t = np.asarray(t, dtype=float)
    if k == 0:
        return 1.0 / (1.0 + t * t) + 0j
    z = complex(z)
    if z.imag == 0:
        raise DomainError("N_{k,j} with k != 0 needs z_j off the real axis")
    if k == -1:
        return resolvent_difference(z, 1j, t) / 2j
    if k == 1:
        return resolvent_difference(-1j, z.conjugate(), t) / 2j
    raise DimensionError(f"k must be -1, 0 or 1, got {k}")


def d_factor(k, w, s):
    """The disk factor ``D_{k,j}`` at ``w_j = w`` and angle ``s_j = s``.

    ``D_{-1} = w / (2 (e^{is} - w))``, ``D_0 = 1/2`` and
    ``D_1 = conj(w) / (2 (e^{-is} - conj w)) = conj(D_{-1})``, the image of
    ``N_{k,j} dt`` under the Cayley change of variables.
    """
    w = complex(w)
    if abs(w) >= 1:
        raise DomainError("D_{k,j} needs |w_j| < 1")
    s = np.asarray(s, dtype=float)
    if k == 0:
        return np.full(s.shape, 0.5 + 0j) if s.ndim else 0.5 + 0j
    if k == -1:
        return 0.5 * w / (np.exp(1j * s) - w)
    if k == 1:
        wc = w.conjugate()
        return 0.5 * wc / (np.exp(-1j * s) - wc)
    raise DimensionError(f"k must be -1, 0 or 1, got {k}")


def fourier_axis(m, s):
    return np.exp(1j * m * np.asarray(s, dtype=float))


def kp_axis(w, s):
    """``1 / (1 - w e^{-is})``, the per-axis factor of the polydisk kernel."""
    return 1.0 / (1.0 - w * np.exp(-1j * np.asarray(s, dtype=float)))


def kp_derivative_axis(w, s):
    """``2 e^{-is} / (1 - w e^{-is})^2``."""
    e = np.exp(-1j * np.asarray(s, dtype=float))
    return 2.0 * e / (1.0 - w * e) ** 2


def disk_double_pole(w, s):
    """``e^{is} ((w - 1)/(w - e^{is}))^2``, the image of ``2/(t - z)^2``."""
    e = np.exp(1j * np.asarray(s, dtype=float))
    return e * ((w - 1.0) / (w - e)) ** 2


def disk_conjugate_double_pole(w, s):
    """``e^{is} ((conj w - 1)/(conj w e^{is} - 1))^2``, the image of ``2/(t - conj z)^2``."""
    e = np.exp(1j * np.asarray(s, dtype=float))
    wc = complex(w).conjugate()
    return e * ((wc - 1.0) / (wc * e - 1.0)) ** 2


def disk_poisson_axis(w, s):
    """``i (1 - |w|^2) / |e^{is} - w|^2``, the image of ``1/(t - z) - 1/(t - conj z)``.

    Equals ``i`` times the disk Poisson kernel ``Re((e^{is} + w)/(e^{is} - w))``.
    """
    e = np.exp(1j * np.asarray(s, dtype=float))
    w = complex(w)
    return 1j * (1.0 - abs(w) ** 2) / np.abs(e - w) ** 2


# ---------------------------------------------------------------------------
# Kernels on C^n x R^n
# ---------------------------------------------------------------------------

def kernel_K(z, t):
    """The integral-representation kernel ``K_n(z, t)``.

    ``K_n = i (2/(2i)^n prod(1/(t-z) - 1/(t+i)) - 1/(2i)^n prod(1/(t-i) - 1/(t+i)))``,
    well defined for ``z`` in ``(C \\ R)^n``.

    Examples
    --------
    >>> complex(kernel_K([1j], [0.0]))
    1j
    """
    z = half_plane_point(z)
    n = len(z)
    t, single = _batch(t, n)
    first = np.prod(kernel_axis(z, t), axis=-1)
    second = np.prod(2j / (1.0 + t * t), axis=-1)
    values = 1j * (2.0 * first - second) / (2j) ** n
    return _out(values, single)


def poisson(z, t):
    """Poisson kernel of ``C^{+n}``, ``prod Im z_l / |t_l - z_l|^2``."""
    z = half_plane_point(z, upper_only=True)
    t, single = _batch(t, len(z))
    values = np.prod(z.imag / ((t - z.real) ** 2 + z.imag ** 2), axis=-1)
    return _out(values, single)


def n_product(rho, z, t):
    """``prod_j N_{rho_j, j}(z_j, t_j)`` for ``rho`` in ``{-1, 0, 1}^n``."""
    z = half_plane_point(z)
    rho = _sign_vector(rho, {-1, 0, 1}, len(z))
    t, single = _batch(t, len(z))
    values = np.ones(len(t), dtype=complex)
    for j, k in enumerate(rho):
        values = values * n_factor(k, z[j], t[:, j])
    return _out(values, single)


def d_product(rho, w, s):
    """``prod_j D_{rho_j, j}(w_j, s_j)``."""
    w = disk_point(w)
    rho = _sign_vector(rho, {-1, 0, 1}, len(w))
    s, single = _batch(s, len(w))
    values = np.ones(len(s), dtype=complex)
    for j, k in enumerate(rho):
        values = values * d_factor(k, w[j], s[:, j])
    return _out(values, single)


def kernel_K_derivative(k, z, t):
    """Partial derivative ``d^|k| K_n / dz^k`` for a multi-index with ``|k| >= 1``.

    Only the ``z``-dependent product survives differentiation, giving
    ``(2i)^{1-n} prod_{k_l = 0}(1/(t_l - z_l) - 1/(t_l + i)) prod_{k_l > 0} k_l!/(t_l - z_l)^{k_l + 1}``.
    """
    z = half_plane_point(z)
    n = len(z)
    k = tuple(int(v) for v in k)
    if len(k) != n or any(v < 0 for v in k):
        raise DimensionError(f"multi-index {k} must have {n} non-negative entries")
    if sum(k) == 0:
        raise DimensionError("|k| = 0: use kernel_K instead")
    t, single = _batch(t, n)
    values = np.ones(len(t), dtype=complex)
    for j, kj in enumerate(k):
        col = t[:, j]
        values = values * (kernel_axis(z[j], col) if kj == 0 else double_pole(z[j], col, kj))
    return _out(values / (2j) ** (n - 1), single)


# ---------------------------------------------------------------------------
# Conjugation patterns
# ---------------------------------------------------------------------------

def psi(rho, z):
    """``psi_0(z) = z`` and ``psi_1(z) = conj z``."""
    return np.conj(z) if rho else z


def combinatorial_sum(xi, eta):
    """Closed form ``prod_j (xi_j - conj xi_j)`` of the alternating conjugation sum.

    ``eta`` does not influence the result; it is accepted to mirror
    :func:`brute_combinatorial_sum`.
    """
    xi = np.atleast_1d(np.asarray(xi, dtype=complex))
    eta = np.atleast_1d(np.asarray(eta, dtype=complex))
    if xi.shape != eta.shape:
        raise DimensionError("xi and eta must have equal length")
    return complex(np.prod(xi - np.conj(xi)))


def brute_combinatorial_sum(xi, eta):
    """Literal ``sum_{rho in {0,1}^n} (-1)^|rho| prod_j (psi_{rho_j}(xi_j) - eta_j)``."""
    xi = np.atleast_1d(np.asarray(xi, dtype=complex))
    eta = np.atleast_1d(np.asarray(eta, dtype=complex))
    if xi.shape != eta.shape:
        raise DimensionError("xi and eta must have equal length")
    total = 0j
    for rho in itertools.product((0, 1), repeat=len(xi)):
        term = complex((-1) ** sum(rho))
        for r, x, e in zip(rho, xi, eta):
            term *= psi(r, x) - e
        total += term
    return total
