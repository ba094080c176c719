"""Symbolic positive measures on R^n and on the polytorus [0, 2*pi)^n.

A :class:`MeasureSpec` is a finite non-negative sum of structured components.
Every component in the family can be integrated with at most a
three-dimensional numerical quadrature, which is what makes the condition
checks in :mod:`nevanlinna.conditions` and :mod:`nevanlinna.torus` feasible.

Components
----------
``Lebesgue``   c * Lebesgue measure of the parent dimension.
``Dirac``      weighted point mass.
``Line``       w * (pushforward of dt under t -> base + t * direction), real side only.
``Density``    catalogued closed-form or gridded density.
``Tensor``     tensor product of lower dimensional specs (dims add up).
``Permuted``   product whose first factor lives on the coordinates ``b1``.
``CayleyImage`` image of a spec on the other domain under the per-axis Cayley map.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from types import MappingProxyType
from typing import Any, Mapping, Sequence, Union

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from .errors import (
    DimensionError,
    DivergenceError,
    DomainError,
    MeasureInvariantError,
    MeasureParseError,
)

TWO_PI = 2.0 * math.pi


class Domain(str, Enum):
    REAL = "real"
    TORUS = "torus"


REAL = Domain.REAL
TORUS = Domain.TORUS


# ---------------------------------------------------------------------------
# Cayley transform helpers
# ---------------------------------------------------------------------------

def cayley(z):
    """Map the upper half-plane onto the unit disk, ``z -> (z - i) / (z + i)``."""
    z = np.asarray(z, dtype=complex)
    return (z - 1j) / (z + 1j)


def inverse_cayley(w):
    """Map the unit disk onto the upper half-plane, ``w -> i (1 + w) / (1 - w)``."""
    w = np.asarray(w, dtype=complex)
    return 1j * (1.0 + w) / (1.0 - w)


def real_to_angle(t):
    """Angle ``s`` in (0, 2*pi) with ``exp(i s) = cayley(t)`` for real ``t``.

    Since ``cayley(tan(theta)) = -exp(2 i theta)`` this is ``pi + 2 arctan(t)``.
    """
    return math.pi + 2.0 * np.arctan(t)


def angle_to_real(s):
    """Inverse of :func:`real_to_angle`; ``s = 0`` maps to infinity."""
    return np.tan(0.5 * (np.asarray(s, dtype=float) - math.pi))


def angle_jacobian(t):
    """``ds/dt = 2 / (1 + t^2)`` for the change of variables ``s = real_to_angle(t)``."""
    t = np.asarray(t, dtype=float)
    return 2.0 / (1.0 + t * t)


# ---------------------------------------------------------------------------
# Density catalogue
# ---------------------------------------------------------------------------

def _num(params, key, default=None):
    if key not in params:
        if default is None:
            raise MeasureParseError(f"density parameter {key!r} is required")
        return float(default)
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MeasureParseError(f"density parameter {key!r} must be a number")
    return float(value)


class _DensityKind:
    """A named family of densities; subclasses fill in the hooks."""

    name = ""
    domain = REAL
    finite = True

    def dim(self, params):
        return 1

    def check(self, params):
        pass

    def pdf(self, params, x):
        raise NotImplementedError

    def is_finite(self, params):
        return self.finite


class _RealPoisson(_DensityKind):
    name = "poisson"

    def _z(self, params):
        z = params.get("z")
        if not isinstance(z, (list, tuple)) or len(z) != 2:
            raise MeasureParseError("poisson density needs z = [re, im]")
        return complex(float(z[0]), float(z[1]))

    def check(self, params):
        if self._z(params).imag <= 0:
            raise MeasureInvariantError("poisson density needs Im z > 0")

    def pdf(self, params, x):
        z = self._z(params)
        t = x[:, 0]
        return z.imag / ((t - z.real) ** 2 + z.imag ** 2)


class _Cauchy(_DensityKind):
    name = "cauchy"

    def check(self, params):
        if _num(params, "scale", 1.0) <= 0:
            raise MeasureInvariantError("cauchy scale must be positive")
        _num(params, "loc", 0.0)

    def pdf(self, params, x):
        loc, scale = _num(params, "loc", 0.0), _num(params, "scale", 1.0)
        u = (x[:, 0] - loc) / scale
        return 1.0 / (math.pi * scale * (1.0 + u * u))


class _Gaussian(_DensityKind):
    name = "gaussian"

    def check(self, params):
        if _num(params, "scale", 1.0) <= 0:
            raise MeasureInvariantError("gaussian scale must be positive")
        _num(params, "loc", 0.0)

    def pdf(self, params, x):
        loc, scale = _num(params, "loc", 0.0), _num(params, "scale", 1.0)
        u = (x[:, 0] - loc) / scale
        return np.exp(-0.5 * u * u) / (scale * math.sqrt(TWO_PI))


class _Quadratic(_DensityKind):
    """``1 + t^2``: the catalogued example with a divergent growth integral."""

    name = "quadratic"
    finite = False

    def pdf(self, params, x):
        return 1.0 + x[:, 0] ** 2


class _RealGrid(_DensityKind):
    """Multilinear interpolation of samples on a rectangular grid, zero outside it."""

    name = "grid"

    def _arrays(self, params):
        axes = params.get("axes")
        values = params.get("values")
        if not isinstance(axes, (list, tuple)) or values is None:
            raise MeasureParseError("grid density needs 'axes' and 'values'")
        try:
            axes = [np.asarray(a, dtype=float) for a in axes]
            values = np.asarray(values, dtype=float)
        except (TypeError, ValueError) as exc:
            raise MeasureParseError(f"grid density: {exc}") from None
        return axes, values

    def dim(self, params):
        return len(self._arrays(params)[0])

    def check(self, params):
        axes, values = self._arrays(params)
        if not 1 <= len(axes) <= 3:
            raise MeasureInvariantError("grid densities support 1 to 3 dimensions")
        if values.shape != tuple(len(a) for a in axes):
            raise MeasureInvariantError("grid values shape does not match axes")
        for a in axes:
            if a.ndim != 1 or len(a) < 2 or np.any(np.diff(a) <= 0) or not np.all(np.isfinite(a)):
                raise MeasureInvariantError("grid axes must be strictly increasing")
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise MeasureInvariantError("grid values must be finite and non-negative")

    def interpolator(self, params):
        axes, values = self._arrays(params)
        return RegularGridInterpolator(axes, values, bounds_error=False, fill_value=0.0)

    def pdf(self, params, x):
        return self.interpolator(params)(x)


class _TorusPoisson(_DensityKind):
    """Disk Poisson kernel ``(1 - r^2) / (1 - 2 r cos(s - theta) + r^2)``."""

    name = "poisson"
    domain = TORUS

    def check(self, params):
        r = _num(params, "r")
        _num(params, "theta", 0.0)
        if not 0 <= r < 1:
            raise MeasureInvariantError("torus poisson density needs 0 <= r < 1")

    def pdf(self, params, x):
        r, theta = _num(params, "r"), _num(params, "theta", 0.0)
        return (1 - r * r) / (1 - 2 * r * np.cos(x[:, 0] - theta) + r * r)


class _TorusGrid(_DensityKind):
    """Periodic multilinear interpolation of samples at ``2*pi*k/N`` on each axis."""

    name = "grid"
    domain = TORUS

    def _values(self, params):
        try:
            return np.asarray(params["values"], dtype=float)
        except KeyError:
            raise MeasureParseError("torus grid density needs 'values'") from None
        except (TypeError, ValueError) as exc:
            raise MeasureParseError(f"torus grid density: {exc}") from None

    def dim(self, params):
        return self._values(params).ndim

    def check(self, params):
        v = self._values(params)
        if not 1 <= v.ndim <= 3:
            raise MeasureInvariantError("grid densities support 1 to 3 dimensions")
        n = v.shape[0]
        if any(s != n for s in v.shape) or n < 2 or n & (n - 1):
            raise MeasureInvariantError("torus grid must be N x ... x N with N a power of two")
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise MeasureInvariantError("grid values must be finite and non-negative")

    def pdf(self, params, x):
        v = self._values(params)
        n, d = v.shape[0], v.ndim
        u = np.mod(x, TWO_PI) * (n / TWO_PI)
        lo = np.floor(u).astype(int)
        frac = u - lo
        out = np.zeros(len(x))
        for corner in np.ndindex(*(2,) * d):
            idx = tuple((lo[:, a] + corner[a]) % n for a in range(d))
            w = np.prod([frac[:, a] if corner[a] else 1 - frac[:, a] for a in range(d)], axis=0)
            out += w * v[idx]
        return out


_CATALOGUE = {
    (REAL, "poisson"): _RealPoisson(),
    (REAL, "cauchy"): _Cauchy(),
    (REAL, "gaussian"): _Gaussian(),
    (REAL, "quadratic"): _Quadratic(),
    (REAL, "grid"): _RealGrid(),
    (TORUS, "poisson"): _TorusPoisson(),
    (TORUS, "grid"): _TorusGrid(),
}


def density_names(domain=REAL):
    """Names available in the density catalogue for ``domain``."""
    return sorted(name for dom, name in _CATALOGUE if dom == Domain(domain))


# ---------------------------------------------------------------------------
# Components
# ---------------------------------------------------------------------------

def _freeze(obj):
    if isinstance(obj, Mapping):
        return MappingProxyType({k: _freeze(v) for k, v in obj.items()})
    if isinstance(obj, list):
        return tuple(_freeze(v) for v in obj)
    return obj


def _thaw(obj):
    if isinstance(obj, Mapping):
        return {k: _thaw(v) for k, v in obj.items()}
    if isinstance(obj, tuple):
        return [_thaw(v) for v in obj]
    return obj


@dataclass(frozen=True)
class Lebesgue:
    weight: float = 1.0

    def scaled(self, c):
        return Lebesgue(self.weight * c)


@dataclass(frozen=True)
class Dirac:
    point: tuple
    weight: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "point", tuple(float(p) for p in np.atleast_1d(self.point)))

    def scaled(self, c):
        return Dirac(self.point, self.weight * c)


@dataclass(frozen=True)
class Line:
    """``weight * integral f(base + t * direction) dt``."""

    base: tuple
    direction: tuple
    weight: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(float(p) for p in np.atleast_1d(self.base)))
        object.__setattr__(self, "direction", tuple(float(p) for p in np.atleast_1d(self.direction)))

    def scaled(self, c):
        return Line(self.base, self.direction, self.weight * c)


@dataclass(frozen=True, eq=False)
class Density:
    name: str
    params: Mapping = field(default_factory=dict)
    weight: float = 1.0
    domain: Domain = REAL

    def __post_init__(self):
        object.__setattr__(self, "params", _freeze(dict(self.params)))
        object.__setattr__(self, "domain", Domain(self.domain))

    @property
    def kind(self) -> _DensityKind:
        try:
            return _CATALOGUE[(self.domain, self.name)]
        except KeyError:
            raise MeasureParseError(
                f"unknown {self.domain.value} density {self.name!r}; "
                f"known: {density_names(self.domain)}"
            ) from None

    @property
    def dim(self):
        return self.kind.dim(self.params)

    @cached_property
    def _evaluator(self):
        if isinstance(self.kind, _RealGrid):
            interp = self.kind.interpolator(self.params)
            return lambda x: interp(x)
        return lambda x: self.kind.pdf(self.params, x)

    def pdf(self, x):
        """Unweighted density at points ``x`` of shape ``(N, dim)``."""
        x = np.atleast_2d(np.asarray(x, dtype=float))
        return self._evaluator(x)

    def bounds(self):
        """Bounding box of the support for grid densities, ``None`` otherwise."""
        if isinstance(self.kind, _RealGrid):
            axes, _ = self.kind._arrays(self.params)
            return [(a[0], a[-1]) for a in axes]
        return None

    def scaled(self, c):
        return Density(self.name, _thaw(self.params), self.weight * c, self.domain)

    def __eq__(self, other):
        return (
            isinstance(other, Density)
            and (self.name, self.weight, self.domain) == (other.name, other.weight, other.domain)
            and _thaw(self.params) == _thaw(other.params)
        )


@dataclass(frozen=True)
class Tensor:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def scaled(self, c):
        return Tensor((self.factors[0].scaled(c),) + self.factors[1:])


@dataclass(frozen=True)
class Permuted:
    """Product whose first factor acts on the (1-based, sorted) coordinates ``b1``."""

    b1: tuple
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "b1", tuple(sorted(int(b) for b in self.b1)))
        object.__setattr__(self, "factors", tuple(self.factors))

    def axes(self, dim):
        """0-based coordinate lists for the two factors."""
        first = [b - 1 for b in self.b1]
        return first, [a for a in range(dim) if a not in first]

    def scaled(self, c):
        return Permuted(self.b1, (self.factors[0].scaled(c), self.factors[1]))


@dataclass(frozen=True)
class CayleyImage:
    """Pushforward (real source) or pullback (torus source) through the Cayley map.

    For a real source ``mu`` the torus measure is
    ``int g dnu = int g(s(t)) prod 2/(1+t_l^2) dmu(t)``; a torus source is pulled
    back with the reciprocal Jacobian.
    """

    source: "MeasureSpec"

    def scaled(self, c):
        return CayleyImage(self.source.scaled(c))


Component = Union[Lebesgue, Dirac, Line, Density, Tensor, Permuted, CayleyImage]


def _check_weight(w, what):
    if isinstance(w, bool) or not isinstance(w, (int, float, np.floating, np.integer)):
        raise MeasureInvariantError(f"{what} weight must be a real number")
    if not math.isfinite(w) or w < 0:
        raise MeasureInvariantError(f"{what} weight must be finite and non-negative, got {w}")


# ---------------------------------------------------------------------------
# MeasureSpec
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MeasureSpec:
    """Positive measure on ``R^dim`` or ``[0, 2*pi)^dim`` as a sum of components.

    Instances are immutable and validated on construction; an empty component
    list is the zero measure.
    """

    dim: int
    domain: Domain = REAL
    components: tuple = ()

    def __post_init__(self):
        if isinstance(self.dim, bool) or not isinstance(self.dim, (int, np.integer)) or self.dim < 1:
            raise MeasureInvariantError(f"dimension must be a positive integer, got {self.dim!r}")
        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "domain", Domain(self.domain))
        object.__setattr__(self, "components", tuple(self.components))
        for comp in self.components:
            self._validate(comp)

    def _validate(self, comp):
        n, dom = self.dim, self.domain
        if isinstance(comp, Lebesgue):
            _check_weight(comp.weight, "lebesgue")
        elif isinstance(comp, Dirac):
            _check_weight(comp.weight, "dirac")
            if len(comp.point) != n:
                raise MeasureInvariantError(f"dirac point has {len(comp.point)} coordinates, expected {n}")
            if not all(math.isfinite(p) for p in comp.point):
                raise MeasureInvariantError("dirac point must be finite")
            if dom is TORUS and not all(0 <= p < TWO_PI for p in comp.point):
                raise MeasureInvariantError("torus dirac coordinates must lie in [0, 2*pi)")
        elif isinstance(comp, Line):
            _check_weight(comp.weight, "line")
            if dom is TORUS:
                raise MeasureInvariantError("line components are only defined on the real side")
            if len(comp.base) != n or len(comp.direction) != n:
                raise MeasureInvariantError(f"line base/direction must have {n} coordinates")
            if not all(math.isfinite(v) for v in comp.base + comp.direction):
                raise MeasureInvariantError("line base/direction must be finite")
            if not any(comp.direction):
                raise MeasureInvariantError("line direction must be non-zero")
        elif isinstance(comp, Density):
            _check_weight(comp.weight, "density")
            if comp.domain is not dom:
                raise MeasureInvariantError("density domain does not match the spec domain")
            comp.kind.check(comp.params)
            if comp.dim != n:
                raise MeasureInvariantError(f"density {comp.name!r} has dimension {comp.dim}, expected {n}")
        elif isinstance(comp, Tensor):
            if not comp.factors:
                raise MeasureInvariantError("tensor needs at least one factor")
            self._check_factors(comp.factors)
            if sum(f.dim for f in comp.factors) != n:
                raise MeasureInvariantError("tensor factor dimensions must add up to the spec dimension")
        elif isinstance(comp, Permuted):
            if len(comp.factors) != 2:
                raise MeasureInvariantError("permuted product needs exactly two factors")
            self._check_factors(comp.factors)
            f1, f2 = comp.factors
            if f1.dim + f2.dim != n:
                raise MeasureInvariantError("permuted factor dimensions must add up to the spec dimension")
            if len(set(comp.b1)) != len(comp.b1) or len(comp.b1) != f1.dim:
                raise DimensionError(f"b1 must list {f1.dim} distinct indices, got {list(comp.b1)}")
            if not all(1 <= b <= n for b in comp.b1):
                raise DimensionError(f"b1 indices must lie in 1..{n}")
        elif isinstance(comp, CayleyImage):
            src = comp.source
            if not isinstance(src, MeasureSpec) or src.domain is dom or src.dim != n:
                raise MeasureInvariantError("cayley source must be a spec of equal dimension on the other domain")
        else:
            raise MeasureParseError(f"unknown component {comp!r}")

    def _check_factors(self, factors):
        for f in factors:
            if not isinstance(f, MeasureSpec):
                raise MeasureInvariantError("product factors must be MeasureSpec instances")
            if f.domain is not self.domain:
                raise DomainError("product factors must share the domain of the product")

    # -- algebra -----------------------------------------------------------

    def scaled(self, c):
        """The measure ``c * self`` for ``c >= 0``."""
        _check_weight(c, "scale")
        return MeasureSpec(self.dim, self.domain, tuple(comp.scaled(c) for comp in self.components))

    def __rmul__(self, c):
        return self.scaled(c)

    def __add__(self, other):
        if not isinstance(other, MeasureSpec):
            return NotImplemented
        if other.dim != self.dim or other.domain is not self.domain:
            raise DomainError("can only add measures of equal dimension and domain")
        return MeasureSpec(self.dim, self.domain, self.components + other.components)

    @property
    def is_zero(self):
        """Structural test for the zero measure."""
        return all(_component_is_zero(c) for c in self.components)

    # -- serialization -----------------------------------------------------

    def to_dict(self):
        return {
            "dim": self.dim,
            "domain": self.domain.value,
            "components": [_component_to_dict(c) for c in self.components],
        }

    @classmethod
    def from_dict(cls, doc, parent_domain=None):
        return spec_from_dict(doc, parent_domain)


def _component_is_zero(comp):
    if isinstance(comp, (Tensor, Permuted)):
        return any(f.is_zero for f in comp.factors)
    if isinstance(comp, CayleyImage):
        return comp.source.is_zero
    return comp.weight == 0


def _component_to_dict(comp):
    if isinstance(comp, Lebesgue):
        return {"type": "lebesgue", "weight": comp.weight}
    if isinstance(comp, Dirac):
        return {"type": "dirac", "point": list(comp.point), "weight": comp.weight}
    if isinstance(comp, Line):
        return {"type": "line", "base": list(comp.base), "direction": list(comp.direction),
                "weight": comp.weight}
    if isinstance(comp, Density):
        out = {"type": "density", "name": comp.name, "params": _thaw(comp.params)}
        if comp.weight != 1.0:
            out["weight"] = comp.weight
        return out
    if isinstance(comp, Tensor):
        return {"type": "tensor", "factors": [f.to_dict() for f in comp.factors]}
    if isinstance(comp, Permuted):
        return {"type": "permuted", "b1": list(comp.b1), "factors": [f.to_dict() for f in comp.factors]}
    if isinstance(comp, CayleyImage):
        return {"type": "cayley", "source": comp.source.to_dict()}
    raise TypeError(comp)


def _field(doc, key, kind=None):
    if key not in doc:
        raise MeasureParseError(f"component {doc.get('type', '?')!r} is missing field {key!r}")
    value = doc[key]
    if kind == "number":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MeasureParseError(f"field {key!r} must be a number")
        return float(value)
    if kind == "vector":
        if not isinstance(value, list) or not value or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
        ):
            raise MeasureParseError(f"field {key!r} must be a non-empty list of numbers")
        return tuple(float(v) for v in value)
    if kind == "list":
        if not isinstance(value, list):
            raise MeasureParseError(f"field {key!r} must be a list")
    return value


def _component_from_dict(doc, domain):
    if not isinstance(doc, dict):
        raise MeasureParseError("each component must be a JSON object")
    ctype = doc.get("type")
    if ctype == "lebesgue":
        return Lebesgue(_field(doc, "weight", "number") if "weight" in doc else 1.0)
    if ctype == "dirac":
        weight = _field(doc, "weight", "number") if "weight" in doc else 1.0
        return Dirac(_field(doc, "point", "vector"), weight)
    if ctype == "line":
        weight = _field(doc, "weight", "number") if "weight" in doc else 1.0
        return Line(_field(doc, "base", "vector"), _field(doc, "direction", "vector"), weight)
    if ctype == "density":
        name = _field(doc, "name")
        params = doc.get("params", {})
        if not isinstance(name, str) or not isinstance(params, dict):
            raise MeasureParseError("density needs a string 'name' and an object 'params'")
        weight = _field(doc, "weight", "number") if "weight" in doc else 1.0
        comp = Density(name, params, weight, domain)
        comp.kind  # unknown names are parse errors
        return comp
    if ctype == "tensor":
        factors = _field(doc, "factors", "list")
        return Tensor(tuple(spec_from_dict(f, domain) for f in factors))
    if ctype == "permuted":
        b1 = _field(doc, "b1", "list")
        if not all(isinstance(b, int) and not isinstance(b, bool) for b in b1):
            raise MeasureParseError("b1 must be a list of integers")
        factors = _field(doc, "factors", "list")
        return Permuted(tuple(b1), tuple(spec_from_dict(f, domain) for f in factors))
    if ctype == "cayley":
        other = TORUS if domain is REAL else REAL
        return CayleyImage(spec_from_dict(_field(doc, "source"), other))
    raise MeasureParseError(f"unknown component type {ctype!r}")


def spec_from_dict(doc: Any, parent_domain=None) -> MeasureSpec:
    """Parse a measure-spec document.

    Raises
    ------
    MeasureParseError
        Structural problems: unknown component types, missing or mistyped fields.
    MeasureInvariantError
        Well-formed documents describing an invalid measure (negative weight, ...).
    """
    if not isinstance(doc, dict):
        raise MeasureParseError("a measure spec must be a JSON object")
    if "dim" not in doc or "components" not in doc:
        raise MeasureParseError("a measure spec needs 'dim' and 'components'")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise MeasureParseError("'dim' must be an integer")
    raw_domain = doc.get("domain", parent_domain.value if parent_domain else "real")
    try:
        domain = Domain(raw_domain)
    except ValueError:
        raise MeasureParseError(f"domain must be 'real' or 'torus', got {raw_domain!r}") from None
    if parent_domain is not None and domain is not Domain(parent_domain):
        raise MeasureInvariantError("factor domain differs from its parent")
    if not isinstance(doc["components"], list):
        raise MeasureParseError("'components' must be a list")
    comps = tuple(_component_from_dict(c, domain) for c in doc["components"])
    return MeasureSpec(dim, domain, comps)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def _dim(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise DimensionError(f"dimension must be a positive integer, got {n!r}")
    return int(n)


def zero_measure(n, domain=REAL):
    return MeasureSpec(_dim(n), domain, ())


def make_lebesgue(n, c=1.0, domain=REAL):
    """``c`` times Lebesgue measure on ``R^n`` or ``[0, 2*pi)^n``."""
    return MeasureSpec(_dim(n), domain, (Lebesgue(float(c)),))


def make_dirac(point, weight=1.0, domain=REAL):
    point = tuple(float(p) for p in np.atleast_1d(point))
    return MeasureSpec(_dim(len(point)), domain, (Dirac(point, float(weight)),))


def make_line(base, direction, weight=1.0):
    base = tuple(float(p) for p in np.atleast_1d(base))
    return MeasureSpec(_dim(len(base)), REAL, (Line(base, direction, float(weight)),))


def convex_line_measure(k1, k2):
    """The line measure interpolating ``pi delta_0 (x) lambda`` and ``lambda (x) pi delta_0``.

    Supported on ``{(-k2/k1 t, t)}`` with weight ``pi (1 + k2/k1)``; for
    ``k1 + k2 = 1`` it represents ``-1 / (k1 z1 + k2 z2)``.
    """
    if k1 <= 0 or k2 < 0:
        raise MeasureInvariantError("need k1 > 0 and k2 >= 0")
    ratio = k2 / k1
    return make_line((0.0, 0.0), (-ratio, 1.0), math.pi * (1.0 + ratio))


def make_density(name, params=None, weight=1.0, domain=REAL):
    comp = Density(name, params or {}, float(weight), domain)
    return MeasureSpec(comp.dim, domain, (comp,))


def tensor(*specs):
    """Tensor product ``mu1 (x) mu2 (x) ...``; integrals of separable functions factor."""
    if len(specs) < 2:
        raise DimensionError("tensor needs at least two factors")
    domain = specs[0].domain
    if any(s.domain is not domain for s in specs):
        raise DomainError("tensor factors must share a domain")
    return MeasureSpec(sum(s.dim for s in specs), domain, (Tensor(tuple(specs)),))


def permuted_product(b1, mu1, mu2):
    """Product measure with ``mu1`` on the coordinates ``b1`` (1-based) and ``mu2`` on the rest."""
    if mu1.domain is not mu2.domain:
        raise DomainError("factors must share a domain")
    if len(set(b1)) != mu1.dim:
        raise DimensionError(f"|b1| = {len(set(b1))} does not match dim(mu1) = {mu1.dim}")
    return MeasureSpec(mu1.dim + mu2.dim, mu1.domain, (Permuted(tuple(b1), (mu1, mu2)),))


# ---------------------------------------------------------------------------
# Finiteness and the Cayley correspondence
# ---------------------------------------------------------------------------

def is_finite(spec: MeasureSpec) -> bool:
    """Structural finiteness: the growth integral (real) or total mass (torus) is finite."""
    for comp in spec.components:
        if _component_is_zero(comp):
            continue
        if isinstance(comp, Density) and not comp.kind.is_finite(comp.params):
            return False
        if isinstance(comp, (Tensor, Permuted)) and not all(is_finite(f) for f in comp.factors):
            return False
        if isinstance(comp, CayleyImage) and not is_finite(comp.source):
            return False
    return True


def _push_component(comp, dim):
    if isinstance(comp, Lebesgue):
        return comp
    if isinstance(comp, Dirac):
        t = np.asarray(comp.point)
        s = tuple(float(v) % TWO_PI for v in real_to_angle(t))
        return Dirac(s, comp.weight * float(np.prod(angle_jacobian(t))))
    if isinstance(comp, Tensor):
        return Tensor(tuple(cayley_pushforward(f) for f in comp.factors))
    if isinstance(comp, Permuted):
        return Permuted(comp.b1, tuple(cayley_pushforward(f) for f in comp.factors))
    if isinstance(comp, CayleyImage):
        return None  # unwrapped by the caller
    return CayleyImage(MeasureSpec(dim, REAL, (comp,)))


def _pull_component(comp, dim):
    if isinstance(comp, Lebesgue):
        return comp
    if isinstance(comp, Dirac):
        if comp.weight and any(p == 0.0 for p in comp.point):
            raise DivergenceError("a torus atom with a coordinate at s = 0 has no preimage in R^n")
        t = angle_to_real(comp.point)
        return Dirac(tuple(float(v) for v in t), comp.weight / float(np.prod(angle_jacobian(t))))
    if isinstance(comp, Tensor):
        return Tensor(tuple(cayley_pullback(f) for f in comp.factors))
    if isinstance(comp, Permuted):
        return Permuted(comp.b1, tuple(cayley_pullback(f) for f in comp.factors))
    if isinstance(comp, CayleyImage):
        return None
    return CayleyImage(MeasureSpec(dim, TORUS, (comp,)))


def _transfer(spec, expected, target, per_component):
    if spec.domain is not expected:
        raise DomainError(f"expected a {expected.value} measure, got {spec.domain.value}")
    comps = []
    for comp in spec.components:
        mapped = per_component(comp, spec.dim)
        if mapped is None:
            comps.extend(comp.source.components)
        else:
            comps.append(mapped)
    return MeasureSpec(spec.dim, target, tuple(comps))


def cayley_pushforward(mu: MeasureSpec) -> MeasureSpec:
    """Torus measure ``nu`` with ``int g dnu = int g(s(t)) prod 2/(1+t_l^2) dmu(t)``.

    Lebesgue maps to Lebesgue and atoms to atoms exactly; lines and densities
    are wrapped in :class:`CayleyImage`. Raises :class:`DivergenceError` when
    the growth integral of ``mu`` is infinite.
    """
    if mu.domain is REAL and not is_finite(mu):
        raise DivergenceError("growth condition fails; the Cayley image would be infinite")
    return _transfer(mu, REAL, TORUS, _push_component)


def cayley_pullback(nu: MeasureSpec) -> MeasureSpec:
    """Inverse of :func:`cayley_pushforward`."""
    if nu.domain is TORUS and not is_finite(nu):
        raise DivergenceError("torus measure has infinite mass")
    return _transfer(nu, TORUS, REAL, _pull_component)


# ---------------------------------------------------------------------------
# Representation data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RepresentationData:
    """Data ``(a, b, mu)`` of a Herglotz-Nevanlinna function on the poly-upper half-plane."""

    a: float
    b: tuple
    mu: MeasureSpec

    def __post_init__(self):
        b = tuple(float(v) for v in np.atleast_1d(self.b))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", b)
        if self.mu.domain is not REAL:
            raise DomainError("half-plane data needs a real-side measure")
        if len(b) != self.mu.dim:
            raise DimensionError(f"b has {len(b)} entries, measure has dimension {self.mu.dim}")
        if any(v < 0 or not math.isfinite(v) for v in b):
            raise MeasureInvariantError("b must be a vector of non-negative reals")

    @property
    def dim(self):
        return self.mu.dim

    def to_dict(self):
        return {"a": self.a, "b": list(self.b), "measure": self.mu.to_dict()}

    @classmethod
    def from_dict(cls, doc):
        if not isinstance(doc, dict) or "measure" not in doc:
            raise MeasureParseError("representation document needs 'measure'")
        mu = spec_from_dict(doc["measure"])
        return cls(doc.get("a", 0.0), doc.get("b", [0.0] * mu.dim), mu)


@dataclass(frozen=True)
class PolydiskData:
    """Data ``(alpha, nu)`` of a function with non-negative real part on the polydisk."""

    alpha: float
    nu: MeasureSpec

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        if self.nu.domain is not TORUS:
            raise DomainError("polydisk data needs a torus measure")
        if not is_finite(self.nu):
            raise DivergenceError("nu must have finite total mass")

    @property
    def dim(self):
        return self.nu.dim

    def to_dict(self):
        return {"alpha": self.alpha, "measure": self.nu.to_dict()}

    @classmethod
    def from_dict(cls, doc):
        if not isinstance(doc, dict) or "measure" not in doc:
            raise MeasureParseError("representation document needs 'measure'")
        return cls(doc.get("alpha", 0.0), spec_from_dict(doc["measure"]))


def as_points(x, dim) -> np.ndarray:
    """Coerce ``x`` to an ``(N, dim)`` float array."""
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        x = x.reshape(-1, dim) if dim > 1 else x[:, None]
    if x.ndim != 2 or x.shape[1] != dim:
        raise DimensionError(f"expected points of dimension {dim}, got shape {x.shape}")
    return x
