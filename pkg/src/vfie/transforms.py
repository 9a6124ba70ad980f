"""Conformal maps from the real line onto a finite interval (a, b).

Three variants: the tanh map, with single-exponential decay of the
Jacobian towards the endpoints; the tanh-of-sinh map, with
double-exponential decay; and the half-argument variant of the latter
used by the de-johnogbonna baseline.  Mesh-size selection lives here as
well, since each of the four solver flavours is a (transform, h-rule)
pair.
"""

import math
from dataclasses import dataclass
from enum import Enum, unique

import numpy as np

__all__ = [
    "TransformKind",
    "Method",
    "Interval",
    "MeshParams",
    "strip_limit",
    "forward",
    "inverse",
    "derivative",
    "select_h",
    "sinc_points",
]


@unique
class TransformKind(Enum):
    """Which change of variables maps the real axis onto (a, b)."""

    SE = "se"
    DE = "de"
    JO_DE = "jo-de"


@unique
class Method(Enum):
    """The four collocation flavours the solver knows about.

    The values double as the CLI spellings.
    """

    NEW_SE = "se-new"
    NEW_DE = "de-new"
    SHAMLOO_SE = "se-shamloo"
    JOHN_OGBONNA_DE = "de-johnogbonna"

    @property
    def transform(self) -> "TransformKind":
        return _METHOD_TRANSFORM[self]

    @property
    def is_original(self) -> bool:
        """True for the two fixed-mesh baseline variants."""
        return self in (Method.SHAMLOO_SE, Method.JOHN_OGBONNA_DE)


_METHOD_TRANSFORM = {
    Method.NEW_SE: TransformKind.SE,
    Method.NEW_DE: TransformKind.DE,
    Method.SHAMLOO_SE: TransformKind.SE,
    Method.JOHN_OGBONNA_DE: TransformKind.JO_DE,
}

# Inner scale factor applied to sinh(x) by the two double-exponential maps.
_DE_SCALE = {TransformKind.DE: 0.5 * math.pi, TransformKind.JO_DE: 0.25 * math.pi}

# sinh overflows past ~710; tanh is fully saturated long before that.
_SINH_OVERFLOW = 700.0


@dataclass(frozen=True)
class Interval:
    """A finite interval [a, b] with a < b."""

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError(f"interval endpoints must be finite, got [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise ValueError(f"interval needs a < b, got [{self.a}, {self.b}]")

    @property
    def length(self) -> float:
        return self.b - self.a

    def contains(self, t: float) -> bool:
        return self.a <= t <= self.b


def strip_limit(kind: TransformKind) -> float:
    """Exclusive upper bound for the strip half-width d of a transform."""
    return math.pi if kind is TransformKind.SE else 0.5 * math.pi


@dataclass(frozen=True)
class MeshParams:
    """Mesh data: truncation index N, mesh size h, endpoint regularity
    exponent alpha, and strip half-width d."""

    N: int
    h: float
    alpha: float
    d: float

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")
        if not self.h > 0.0:
            raise ValueError(f"h must be positive, got {self.h}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not self.d > 0.0:
            raise ValueError(f"d must be positive, got {self.d}")

    @classmethod
    def for_kind(cls, kind: TransformKind, N: int, h: float, alpha: float, d: float) -> "MeshParams":
        """Construct with d validated against the strip limit of `kind`."""
        if not d < strip_limit(kind):
            raise ValueError(
                f"d must be below {strip_limit(kind):g} for the {kind.value} transform, got {d}"
            )
        return cls(N=N, h=h, alpha=alpha, d=d)

    @property
    def n(self) -> int:
        """Number of mesh nodes, 2N + 1."""
        return 2 * self.N + 1


def forward(kind: TransformKind, iv: Interval, x: float) -> float:
    """Image of x under the transform; strictly increasing, with
    forward(-inf) = a and forward(+inf) = b.

    Once tanh saturates in floating point the value is clamped to [a, b],
    so extreme nodes can land exactly on an endpoint.
    """
    if math.isnan(x):
        return math.nan
    if kind is TransformKind.SE:
        u = math.tanh(0.5 * x)
    elif abs(x) >= _SINH_OVERFLOW:  # also covers +-inf
        u = math.copysign(1.0, x)
    else:
        u = math.tanh(_DE_SCALE[kind] * math.sinh(x))
    t = 0.5 * (iv.a + iv.b) + 0.5 * iv.length * u
    return min(max(t, iv.a), iv.b)


def inverse(kind: TransformKind, iv: Interval, t: float) -> float:
    """Preimage of t in [a, b]; returns -inf at t = a and +inf at t = b.

    The inner argument is formed as log((t - a)/(b - t)), which is the
    tanh inverse rearranged to avoid the cancellation the naive atanh
    form suffers near the endpoints.
    """
    if not iv.contains(t):
        raise ValueError(f"t = {t} lies outside [{iv.a}, {iv.b}]")
    if t == iv.a:
        return -math.inf
    if t == iv.b:
        return math.inf
    r = math.log((t - iv.a) / (iv.b - t))
    if kind is TransformKind.SE:
        return r
    if kind is TransformKind.DE:
        return math.asinh(r / math.pi)
    return math.asinh(2.0 * r / math.pi)


def derivative(kind: TransformKind, iv: Interval, x: float) -> float:
    """Jacobian dt/dx of the forward map; positive, and permitted to
    underflow to 0 for large |x|."""
    if math.isnan(x):
        return math.nan
    w = iv.length
    if kind is TransformKind.SE:
        e = math.exp(-abs(x))  # (1/4) sech^2(x/2) = e / (1 + e)^2
        return w * e / ((1.0 + e) * (1.0 + e))
    if abs(x) >= _SINH_OVERFLOW:
        return 0.0
    c = _DE_SCALE[kind]
    u = c * math.sinh(x)
    if abs(u) > 350.0:  # cosh(u)^2 would overflow; true value is < 1e-300
        return 0.0
    ch = math.cosh(u)
    return w * 0.5 * c * math.cosh(x) / (ch * ch)


def select_h(method: Method, alpha: float, d: float, N: int,
             parametric_baseline: bool = False) -> float:
    """Mesh size for one solver flavour at truncation index N.

    se-new uses sqrt(pi d / (alpha N)) and de-new uses log(2 d N / alpha)/N.
    The baselines default to their fixed published rules, pi/sqrt(N) and
    log(pi N)/N; `parametric_baseline=True` switches the de-johnogbonna
    baseline to its (alpha, d)-dependent rule log(4 d N / alpha)/N.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if method is Method.NEW_SE:
        _check_mesh_args(TransformKind.SE, alpha, d)
        return math.sqrt(math.pi * d / (alpha * N))
    if method is Method.NEW_DE:
        _check_mesh_args(TransformKind.DE, alpha, d)
        return _log_rule(2.0 * d * N / alpha, N)
    if method is Method.SHAMLOO_SE:
        return math.pi / math.sqrt(N)
    if parametric_baseline:
        _check_mesh_args(TransformKind.JO_DE, alpha, d)
        return _log_rule(4.0 * d * N / alpha, N)
    return math.log(math.pi * N) / N


def _log_rule(arg, N):
    if arg <= 1.0:
        raise ValueError(f"mesh rule log({arg:g})/N is nonpositive; increase N or d")
    return math.log(arg) / N


def _check_mesh_args(kind, alpha, d):
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    if not 0.0 < d < strip_limit(kind):
        raise ValueError(
            f"d must lie in (0, {strip_limit(kind):g}) for the {kind.value} transform, got {d}"
        )


def sinc_points(kind: TransformKind, iv: Interval, N: int, h: float) -> np.ndarray:
    """The 2N+1 node images t_j = forward(j h), j = -N..N, in increasing
    order (ties possible once tanh saturates)."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if not h > 0.0:
        raise ValueError(f"h must be positive, got {h}")
    return np.array([forward(kind, iv, j * h) for j in range(-N, N + 1)])
