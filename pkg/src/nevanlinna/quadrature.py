"""Integration of complex integrands against a :class:`~nevanlinna.measures.MeasureSpec`.

Two paths share one result type.

* The *structural* path walks the component tree. Atoms are evaluated
  exactly, products of measures against separable integrands factor into
  lower-dimensional integrals, and every remaining 1-D integral goes to a
  globally adaptive Gauss-Kronrod (10/21) rule. The real line is mapped to
  ``(-pi/2, pi/2)`` by ``t = tan(theta)``, which turns the ``|t|^-2`` tails of
  all kernels in this package into bounded integrands.
* The *rule* path expands a component into a tensor grid of composite
  Gauss-Legendre nodes and refines by doubling the panel count. It handles
  non-separable integrands and multi-dimensional densities up to three
  continuous dimensions.

Integrands are either plain callables on ``(N, n)`` point arrays or
:class:`Integrand` objects that carry a separable structure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DivergenceError, DomainError, UnsupportedIntegralError
from .measures import (
    REAL,
    TORUS,
    TWO_PI,
    CayleyImage,
    Density,
    Dirac,
    Lebesgue,
    Line,
    MeasureSpec,
    Permuted,
    Tensor,
    _RealGrid,
    _TorusGrid,
    angle_jacobian,
    angle_to_real,
    is_finite,
    real_to_angle,
)

HALF_PI = 0.5 * math.pi

# Gauss-Kronrod 10/21 nodes and weights on [-1, 1] (non-negative half).
_XGK = np.array([
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0,
])
_WGK = np.array([
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
_WG = np.array([
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])
# full 21-point layout: -x_0 .. -x_9, 0, x_9 .. x_0
GK_NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[:-1][::-1]])
GK_WEIGHTS = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[:-1][::-1]])
_gauss = np.zeros(21)
_gauss[1:10:2] = _WG
_gauss[11:20:2] = _WG[::-1]
GAUSS_WEIGHTS = _gauss

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(8)


# ---------------------------------------------------------------------------
# Config and result
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances of the quadrature engine.

    ``max_subdivisions`` bounds the panel bisections of one 1-D adaptive
    integral; ``max_nodes`` bounds the size of one tensor grid on the rule path.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    max_subdivisions: int = 2000
    initial_panels: int = 16
    rule_panels: int = 4
    max_nodes: int = 2_000_000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1 or self.initial_panels < 1:
            raise ValueError("subdivision limits must be positive")

    def target(self, value):
        return max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class QuadratureResult:
    """Value of one integral with its error bookkeeping.

    ``tolerance`` is the accuracy that was requested for this value (after
    propagation through sums and products), so ``converged`` implies
    ``error_estimate <= tolerance``. ``divergent`` marks integrals that are
    known to be infinite.
    """

    value: complex
    error_estimate: float = 0.0
    evaluations: int = 0
    converged: bool = True
    tolerance: float = 0.0
    divergent: bool = False

    def __add__(self, other):
        if not isinstance(other, QuadratureResult):
            return NotImplemented
        return QuadratureResult(
            self.value + other.value,
            self.error_estimate + other.error_estimate,
            self.evaluations + other.evaluations,
            self.converged and other.converged,
            self.tolerance + other.tolerance,
            self.divergent or other.divergent,
        )

    def scaled(self, c):
        c = complex(c)
        return QuadratureResult(self.value * c, self.error_estimate * abs(c), self.evaluations,
                                self.converged, self.tolerance * abs(c), self.divergent)

    def to_dict(self):
        v = complex(self.value)
        return {
            "value": [v.real, v.imag],
            "error_estimate": self.error_estimate,
            "evaluations": self.evaluations,
            "converged": self.converged,
        }


EXACT_ZERO = QuadratureResult(0j)


def exact(value):
    return QuadratureResult(complex(value))


def _product(results: Sequence[QuadratureResult]) -> QuadratureResult:
    """Product of independent integrals with first-order error propagation."""
    value = complex(np.prod([complex(r.value) for r in results])) if results else 1 + 0j
    err = tol = 0.0
    for k, r in enumerate(results):
        others = [abs(o.value) + o.error_estimate for i, o in enumerate(results) if i != k]
        others_tol = [abs(o.value) + o.tolerance for i, o in enumerate(results) if i != k]
        err += r.error_estimate * float(np.prod(others))
        tol += r.tolerance * float(np.prod(others_tol))
    return QuadratureResult(
        value, err, sum(r.evaluations for r in results),
        all(r.converged for r in results), tol, any(r.divergent for r in results),
    )


def _sum(results: Sequence[QuadratureResult]) -> QuadratureResult:
    total = EXACT_ZERO
    for r in results:
        total = total + r
    return total


# ---------------------------------------------------------------------------
# Adaptive Gauss-Kronrod on an interval
# ---------------------------------------------------------------------------

def _gk_panels(f, a, b):
    """Kronrod value and |Kronrod - Gauss| on each panel ``[a_k, b_k]`` (vectorized)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    x = mid[:, None] + half[:, None] * GK_NODES[None, :]
    fx = np.asarray(f(x.ravel()), dtype=complex).reshape(x.shape)
    kron = half * (fx @ GK_WEIGHTS)
    gauss = half * (fx @ GAUSS_WEIGHTS)
    return kron, np.abs(kron - gauss)


def adaptive_gk(f: Callable, breakpoints, cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """Globally adaptive G10/K21 integration of a vectorized complex ``f``.

    ``breakpoints`` is a sorted sequence of at least two finite numbers; the
    panels between them form the initial partition. Every sweep bisects all
    panels whose error exceeds their length-proportional share of the target
    (and always the worst panel). Panel sums use pairwise summation in a fixed
    order, so the result is deterministic.
    """
    edges = np.asarray(breakpoints, dtype=float)
    a, b = edges[:-1].copy(), edges[1:].copy()
    val, err = _gk_panels(f, a, b)
    evaluations = 21 * len(a)
    length = float(edges[-1] - edges[0])
    subdivisions = 0
    while True:
        order = np.argsort(a, kind="stable")
        a, b, val, err = a[order], b[order], val[order], err[order]
        total = complex(np.sum(val))
        total_err = float(np.sum(err))
        target = cfg.target(total)
        if total_err <= target:
            return QuadratureResult(total, total_err, evaluations, True, target)
        share = target * (b - a) / length
        split = err > share
        split[np.argmax(err)] = True
        # panels that can no longer be halved in floating point stay put
        split &= (b - a) > 64 * np.finfo(float).eps * np.maximum(1.0, np.abs(a))
        if not split.any() or subdivisions + int(split.sum()) > cfg.max_subdivisions:
            return QuadratureResult(total, total_err, evaluations, False, target)
        subdivisions += int(split.sum())
        sa, sb = a[split], b[split]
        mid = 0.5 * (sa + sb)
        na = np.concatenate([sa, mid])
        nb = np.concatenate([mid, sb])
        nv, ne = _gk_panels(f, na, nb)
        evaluations += 21 * len(na)
        keep = ~split
        a = np.concatenate([a[keep], na])
        b = np.concatenate([b[keep], nb])
        val = np.concatenate([val[keep], nv])
        err = np.concatenate([err[keep], ne])


def integrate_real_line(h: Callable, cfg: QuadratureConfig = DEFAULT_CONFIG,
                        breakpoints: Optional[Sequence[float]] = None) -> QuadratureResult:
    """``int_R h(t) dt`` via ``t = tan(theta)``; ``h`` must be vectorized.

    Extra ``breakpoints`` (in ``t``) are added to the initial partition.
    """
    def g(theta):
        c = np.cos(theta)
        return h(np.tan(theta)) / (c * c)

    edges = np.linspace(-HALF_PI, HALF_PI, cfg.initial_panels + 1)
    if breakpoints is not None and len(breakpoints):
        edges = np.union1d(edges, np.arctan(np.asarray(breakpoints, dtype=float)))
    return adaptive_gk(g, edges, cfg)


def integrate_circle(h: Callable, cfg: QuadratureConfig = DEFAULT_CONFIG,
                     breakpoints: Optional[Sequence[float]] = None) -> QuadratureResult:
    """``int_0^{2 pi} h(s) ds``."""
    edges = np.linspace(0.0, TWO_PI, cfg.initial_panels + 1)
    if breakpoints is not None and len(breakpoints):
        edges = np.union1d(edges, np.asarray(breakpoints, dtype=float))
    return adaptive_gk(h, edges, cfg)


# ---------------------------------------------------------------------------
# Integrands
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AxisFactor:
    """A one-variable factor ``fn(x, *params)``.

    Instances are hashable as long as ``fn`` and ``params`` are, which lets
    the engine cache 1-D integrals against Lebesgue measure.
    """

    fn: Callable
    params: tuple = ()

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=float), *self.params)


@dataclass(frozen=True)
class Term:
    """``coef * prod_j factors[j](x_j)``; a ``None`` factor is the constant 1."""

    coef: complex
    factors: tuple

    def __call__(self, x):
        out = np.full(len(x), complex(self.coef))
        for j, fac in enumerate(self.factors):
            if fac is not None:
                out = out * fac(x[:, j])
        return out


@dataclass(frozen=True)
class Integrand:
    """Complex integrand on ``R^dim`` or the torus.

    Either ``terms`` (a sum of separable products) or ``func`` (a vectorized
    callable on ``(N, dim)`` arrays) is set.
    """

    dim: int
    terms: Optional[tuple] = None
    func: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        if (self.terms is None) == (self.func is None):
            raise ValueError("give exactly one of terms and func")
        if self.terms is not None:
            terms = tuple(self.terms)
            if any(len(t.factors) != self.dim for t in terms):
                raise ValueError("every term needs one factor per axis")
            object.__setattr__(self, "terms", terms)

    @classmethod
    def product(cls, factors, coef=1.0):
        factors = tuple(factors)
        return cls(len(factors), (Term(complex(coef), factors),))

    @classmethod
    def constant(cls, dim, value=1.0):
        return cls(dim, (Term(complex(value), (None,) * dim),))

    @classmethod
    def wrap(cls, f, dim):
        if isinstance(f, Integrand):
            if f.dim != dim:
                raise DomainError(f"integrand has dimension {f.dim}, measure has {dim}")
            return f
        if not callable(f):
            raise TypeError("integrand must be callable")
        return cls(dim, func=f)

    @property
    def separable(self):
        return self.terms is not None

    def __call__(self, x):
        x = np.atleast_2d(np.asarray(x, dtype=float))
        if self.func is not None:
            return np.asarray(self.func(x), dtype=complex)
        out = np.zeros(len(x), dtype=complex)
        for t in self.terms:
            out = out + t(x)
        return out

    def __add__(self, other):
        if not isinstance(other, Integrand) or other.dim != self.dim:
            return NotImplemented
        if self.separable and other.separable:
            return Integrand(self.dim, self.terms + other.terms)
        a, b = self, other
        return Integrand(self.dim, func=lambda x: a(x) + b(x))

    def scaled(self, c):
        c = complex(c)
        if self.separable:
            return Integrand(self.dim, tuple(Term(t.coef * c, t.factors) for t in self.terms))
        f = self
        return Integrand(self.dim, func=lambda x: c * f(x))


# Cayley transport of axis factors --------------------------------------------

def _pushed_factor(t, inner):
    """Torus factor ``g`` seen from the real side: ``g(s(t)) * 2/(1+t^2)``."""
    s = real_to_angle(t)
    g = 1.0 if inner is None else inner(s)
    return g * angle_jacobian(t)


def _pulled_factor(s, inner):
    """Real factor ``g`` seen from the torus side: ``g(t(s)) * (1+t^2)/2``."""
    t = angle_to_real(s)
    g = 1.0 if inner is None else inner(t)
    return g / angle_jacobian(t)


def _transport_term(term: Term, source_domain) -> Term:
    fn = _pushed_factor if source_domain is REAL else _pulled_factor
    return Term(term.coef, tuple(AxisFactor(fn, (f,)) for f in term.factors))


def _transport_points(x, source_domain):
    """Map source points to target coordinates, returning points and Jacobian weights."""
    if source_domain is REAL:
        return np.mod(real_to_angle(x), TWO_PI), np.prod(angle_jacobian(x), axis=-1)
    t = angle_to_real(x)
    return t, 1.0 / np.prod(angle_jacobian(t), axis=-1)


# ---------------------------------------------------------------------------
# Structural path
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8192)
def _lebesgue_axis(factor: AxisFactor, domain, cfg: QuadratureConfig) -> QuadratureResult:
    if domain is TORUS:
        return integrate_circle(factor, cfg)
    return integrate_real_line(factor, cfg)


def clear_cache():
    """Drop cached 1-D Lebesgue integrals."""
    _lebesgue_axis.cache_clear()


def _density_1d(comp: Density, h: Callable, cfg) -> QuadratureResult:
    kind = comp.kind
    pdf = comp.pdf

    def g(x):
        return pdf(x[:, None]) * h(x)

    if comp.domain is TORUS:
        breaks = None
        if isinstance(kind, _TorusGrid):
            n = len(np.asarray(comp.params["values"]))
            breaks = np.linspace(0.0, TWO_PI, n + 1)
        return integrate_circle(g, cfg, breaks)
    if isinstance(kind, _RealGrid):
        axis = np.asarray(kind._arrays(comp.params)[0][0])
        edges = axis if len(axis) <= 4 * cfg.max_subdivisions else np.linspace(axis[0], axis[-1], 257)
        return adaptive_gk(g, edges, cfg)
    return integrate_real_line(g, cfg)


def _separable_component(comp, domain, factors: tuple, cfg) -> QuadratureResult:
    """Integral of ``prod_j factors[j](x_j)`` against one component."""
    n = len(factors)
    if isinstance(comp, Lebesgue):
        if comp.weight == 0:
            return EXACT_ZERO
        parts = []
        for fac in factors:
            if fac is None:
                if domain is REAL:
                    raise DivergenceError("a constant factor is not integrable against Lebesgue measure on R")
                parts.append(exact(TWO_PI))
            else:
                parts.append(_lebesgue_axis(fac, domain, cfg))
        return _product(parts).scaled(comp.weight)
    if isinstance(comp, Dirac):
        value = complex(comp.weight)
        for fac, p in zip(factors, comp.point):
            if fac is not None:
                value *= complex(np.asarray(fac(np.array([p])))[0])
        return QuadratureResult(value, 0.0, n, True, 0.0)
    if isinstance(comp, Line):
        return _line(comp, Term(1.0, factors), cfg)
    if isinstance(comp, Density):
        if comp.weight == 0:
            return EXACT_ZERO
        if comp.dim == 1:
            fac = factors[0]
            if fac is None and not comp.kind.is_finite(comp.params):
                raise DivergenceError(f"density {comp.name!r} has infinite mass")
            h = (lambda x: np.ones(len(x), dtype=complex)) if fac is None else fac
            return _density_1d(comp, h, cfg).scaled(comp.weight)
        spec = MeasureSpec(comp.dim, domain, (comp,))
        return _rule(spec, Term(1.0, factors), cfg)
    if isinstance(comp, Tensor):
        parts, start = [], 0
        for f in comp.factors:
            parts.append(_separable_spec(f, factors[start:start + f.dim], cfg))
            start += f.dim
        return _product(parts)
    if isinstance(comp, Permuted):
        first, second = comp.axes(n)
        f1, f2 = comp.factors
        return _product([
            _separable_spec(f1, tuple(factors[a] for a in first), cfg),
            _separable_spec(f2, tuple(factors[a] for a in second), cfg),
        ])
    if isinstance(comp, CayleyImage):
        src = comp.source
        moved = _transport_term(Term(1.0, factors), src.domain)
        return _separable_spec(src, moved.factors, cfg)
    raise UnsupportedIntegralError(f"cannot integrate against {comp!r}")


def _separable_spec(spec: MeasureSpec, factors: tuple, cfg) -> QuadratureResult:
    return _sum([_separable_component(c, spec.domain, factors, cfg) for c in spec.components])


def _line(comp: Line, f: Callable, cfg) -> QuadratureResult:
    if comp.weight == 0:
        return EXACT_ZERO
    base = np.asarray(comp.base)
    direction = np.asarray(comp.direction)

    def h(t):
        return f(base[None, :] + t[:, None] * direction[None, :])

    return integrate_real_line(h, cfg).scaled(comp.weight)


def _general_component(comp, spec: MeasureSpec, f: Integrand, cfg) -> QuadratureResult:
    if isinstance(comp, Dirac):
        value = comp.weight * complex(f(np.asarray(comp.point)[None, :])[0])
        return QuadratureResult(value, 0.0, 1, True, 0.0)
    if isinstance(comp, Line):
        return _line(comp, f, cfg)
    if isinstance(comp, CayleyImage):
        src = comp.source

        def moved(x):
            y, jac = _transport_points(x, src.domain)
            return f(y) * jac

        return _integrate(src, Integrand(spec.dim, func=moved), cfg, "auto")
    if isinstance(comp, (Lebesgue, Density)) and comp.weight == 0:
        return EXACT_ZERO
    return _rule(MeasureSpec(spec.dim, spec.domain, (comp,)), f, cfg)


def _integrate(spec: MeasureSpec, f: Integrand, cfg, method) -> QuadratureResult:
    if method == "grid":
        return _rule(spec, f, cfg)
    if f.separable:
        return _sum([
            _separable_spec(spec, t.factors, cfg).scaled(t.coef) for t in f.terms
        ])
    return _sum([_general_component(c, spec, f, cfg) for c in spec.components])


def integrate(mu: MeasureSpec, f, cfg: QuadratureConfig = DEFAULT_CONFIG,
              method: str = "auto") -> QuadratureResult:
    """Integrate ``f`` against ``mu``.

    Parameters
    ----------
    mu : MeasureSpec
    f : Integrand or callable
        A callable receives an ``(N, dim)`` array and returns ``N`` complex values.
    cfg : QuadratureConfig
    method : {"auto", "grid"}
        ``"grid"`` forces the tensor-grid rule path for every component.

    Raises
    ------
    DivergenceError
        When the integral is structurally infinite (a constant against
        Lebesgue measure on ``R``, a non-integrable density).
    UnsupportedIntegralError
        For tensor grids with more than three continuous dimensions.

    Examples
    --------
    >>> from nevanlinna.measures import make_lebesgue
    >>> f = Integrand.product([AxisFactor(lambda t: 1 / (1 + t * t))])
    >>> round(integrate(make_lebesgue(1), f).value.real, 9)
    3.141592654
    """
    if method not in ("auto", "grid"):
        raise ValueError(f"unknown method {method!r}")
    f = Integrand.wrap(f, mu.dim)
    return _integrate(mu, f, cfg, method)


def _growth_axis(t):
    return 1.0 / (1.0 + t * t)


GROWTH_FACTOR = AxisFactor(_growth_axis)


def growth_integral(mu: MeasureSpec, cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """``int prod 1/(1 + t_l^2) dmu``; catalogued divergent densities give ``divergent=True``."""
    if mu.domain is not REAL:
        raise DomainError("the growth integral is defined for measures on R^n")
    if not is_finite(mu):
        return QuadratureResult(complex(math.inf), math.inf, 0, False, cfg.abs_tol, True)
    return integrate(mu, Integrand.product([GROWTH_FACTOR] * mu.dim), cfg)


def total_mass(nu: MeasureSpec, cfg: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """Total mass of a torus measure."""
    if nu.domain is not TORUS:
        raise DomainError("total mass is computed for torus measures")
    if not is_finite(nu):
        return QuadratureResult(complex(math.inf), math.inf, 0, False, cfg.abs_tol, True)
    return integrate(nu, Integrand.constant(nu.dim), cfg)


# ---------------------------------------------------------------------------
# Rule path: tensor grids of composite Gauss-Legendre nodes
# ---------------------------------------------------------------------------

def _composite(edges, refine):
    """Composite 8-point Gauss-Legendre nodes on the cells ``edges``, each split ``refine`` times."""
    edges = np.asarray(edges, dtype=float)
    fine = np.concatenate([
        np.linspace(lo, hi, refine + 1)[:-1] for lo, hi in zip(edges[:-1], edges[1:])
    ] + [edges[-1:]])
    a, b = fine[:-1], fine[1:]
    half = 0.5 * (b - a)
    x = (0.5 * (a + b))[:, None] + half[:, None] * _GL_NODES[None, :]
    w = half[:, None] * _GL_WEIGHTS[None, :]
    return x.ravel(), w.ravel()


def _line_rule(level, base_panels):
    theta, w = _composite(np.linspace(-HALF_PI, HALF_PI, base_panels + 1), 2 ** level)
    c = np.cos(theta)
    return np.tan(theta), w / (c * c)


def _circle_rule(level, base_panels):
    return _composite(np.linspace(0.0, TWO_PI, base_panels + 1), 2 ** level)


def _tensor_nodes(axes_nodes):
    """Cartesian product of per-axis (nodes, weights) pairs."""
    grids = np.meshgrid(*[n for n, _ in axes_nodes], indexing="ij")
    wgrids = np.meshgrid(*[w for _, w in axes_nodes], indexing="ij")
    x = np.stack([g.ravel() for g in grids], axis=-1)
    w = np.prod(np.stack([g.ravel() for g in wgrids], axis=-1), axis=-1)
    return x, w


def _continuous_dim(spec: MeasureSpec) -> int:
    best = 0
    for comp in spec.components:
        if isinstance(comp, (Lebesgue, Density)):
            d = spec.dim
        elif isinstance(comp, Dirac):
            d = 0
        elif isinstance(comp, Line):
            d = 1
        elif isinstance(comp, Tensor):
            d = sum(_continuous_dim(f) for f in comp.factors)
        elif isinstance(comp, Permuted):
            d = sum(_continuous_dim(f) for f in comp.factors)
        else:
            d = _continuous_dim(comp.source)
        best = max(best, d)
    return best


def _component_nodes(comp, dim, domain, level, cfg):
    """Quadrature nodes ``(N, dim)`` and weights ``(N,)`` for one component."""
    p = cfg.rule_panels
    if isinstance(comp, Lebesgue):
        rule = _line_rule if domain is REAL else _circle_rule
        x, w = _tensor_nodes([rule(level, p)] * dim)
        return x, comp.weight * w
    if isinstance(comp, Dirac):
        return np.asarray(comp.point, dtype=float)[None, :], np.array([comp.weight])
    if isinstance(comp, Line):
        t, w = _line_rule(level, p)
        x = np.asarray(comp.base)[None, :] + t[:, None] * np.asarray(comp.direction)[None, :]
        return x, comp.weight * w
    if isinstance(comp, Density):
        kind = comp.kind
        if isinstance(kind, _RealGrid):
            axes = kind._arrays(comp.params)[0]
            per_axis = [_composite(a, 2 ** level) for a in axes]
        elif isinstance(kind, _TorusGrid):
            n = np.asarray(comp.params["values"]).shape[0]
            per_axis = [_composite(np.linspace(0.0, TWO_PI, n + 1), 2 ** level)] * dim
        elif domain is TORUS:
            per_axis = [_circle_rule(level, p)] * dim
        else:
            per_axis = [_line_rule(level, p)] * dim
        x, w = _tensor_nodes(per_axis)
        return x, comp.weight * w * comp.pdf(x)
    if isinstance(comp, Tensor):
        parts = [_spec_nodes(f, level, cfg) for f in comp.factors]
        return _combine(parts, [list(range(sum(f.dim for f in comp.factors[:i]),
                                               sum(f.dim for f in comp.factors[:i + 1])))
                                for i in range(len(comp.factors))], dim)
    if isinstance(comp, Permuted):
        parts = [_spec_nodes(f, level, cfg) for f in comp.factors]
        return _combine(parts, list(comp.axes(dim)), dim)
    if isinstance(comp, CayleyImage):
        x, w = _spec_nodes(comp.source, level, cfg)
        y, jac = _transport_points(x, comp.source.domain)
        return y, w * jac
    raise UnsupportedIntegralError(f"no rule for {comp!r}")


def _combine(parts, axes_lists, dim):
    x1, w1 = parts[0]
    axes = list(axes_lists[0])
    x, w = x1, w1
    for (x2, w2), ax2 in zip(parts[1:], axes_lists[1:]):
        i, j = np.meshgrid(np.arange(len(x)), np.arange(len(x2)), indexing="ij")
        x = np.concatenate([x[i.ravel()], x2[j.ravel()]], axis=-1)
        w = w[i.ravel()] * w2[j.ravel()]
        axes = axes + list(ax2)
    out = np.empty_like(x)
    out[:, axes] = x
    return out, w


def _spec_nodes(spec: MeasureSpec, level, cfg):
    xs, ws = [], []
    for comp in spec.components:
        x, w = _component_nodes(comp, spec.dim, spec.domain, level, cfg)
        xs.append(x)
        ws.append(w)
    if not xs:
        return np.zeros((0, spec.dim)), np.zeros(0)
    return np.concatenate(xs), np.concatenate(ws)


def _nodes_at_level(spec, level, cfg):
    d = _continuous_dim(spec)
    per_axis = 8 * cfg.rule_panels * 2 ** level
    return per_axis ** d if d else 1


def _rule(spec: MeasureSpec, f: Callable, cfg) -> QuadratureResult:
    """Tensor-grid quadrature with level doubling until two levels agree."""
    if _continuous_dim(spec) > 3:
        raise UnsupportedIntegralError("tensor grids are limited to three continuous dimensions")
    evaluations = 0
    previous = None
    level = 0
    while True:
        x, w = _spec_nodes(spec, level, cfg)
        value = complex(np.sum(w * np.asarray(f(x), dtype=complex))) if len(x) else 0j
        evaluations += len(x)
        if _continuous_dim(spec) == 0:
            return QuadratureResult(value, 0.0, evaluations, True, cfg.target(value))
        if previous is not None:
            err = abs(value - previous)
            target = cfg.target(value)
            if err <= target:
                return QuadratureResult(value, err, evaluations, True, target)
            if _nodes_at_level(spec, level + 1, cfg) > cfg.max_nodes:
                return QuadratureResult(value, err, evaluations, False, target)
        previous = value
        level += 1
