"""Four-vector algebra on flat space-time with signature (+, -, -, -).

Components may be floats, numpy arrays (a batch of points evaluated at once)
or dual numbers; every operation here is written so all three flow through.
Vectors and covectors share one representation and every contraction goes
through :func:`dot4` or :func:`dot3`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from .dual import Dual, real_part, sqrt
from .errors import NegativeRadicand, NonTimelike

# Guard below which u.u counts as null; the curvature has a |u|^3 pole.
NULL_EPS = 1e-12


def _check_finite(*components: Any) -> None:
    for c in components:
        if not np.all(np.isfinite(real_part(c))):
            raise ValueError(f"non-finite component {c!r}")


@dataclass(frozen=True, slots=True)
class ThreeVector:
    s1: Any
    s2: Any
    s3: Any

    def __post_init__(self) -> None:
        _check_finite(self.s1, self.s2, self.s3)

    def __iter__(self) -> Iterator[Any]:
        return iter((self.s1, self.s2, self.s3))

    def __add__(self, o: ThreeVector) -> ThreeVector:
        return ThreeVector(self.s1 + o.s1, self.s2 + o.s2, self.s3 + o.s3)

    def __sub__(self, o: ThreeVector) -> ThreeVector:
        return ThreeVector(self.s1 - o.s1, self.s2 - o.s2, self.s3 - o.s3)

    def __neg__(self) -> ThreeVector:
        return ThreeVector(-self.s1, -self.s2, -self.s3)

    def __mul__(self, c: Any) -> ThreeVector:
        return ThreeVector(self.s1 * c, self.s2 * c, self.s3 * c)

    __rmul__ = __mul__

    def __truediv__(self, c: Any) -> ThreeVector:
        return ThreeVector(self.s1 / c, self.s2 / c, self.s3 / c)

    def to_array(self) -> np.ndarray:
        return np.array([self.s1, self.s2, self.s3], dtype=float)

    @classmethod
    def zero(cls) -> ThreeVector:
        return cls(0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class FourVector:
    t: Any
    s1: Any
    s2: Any
    s3: Any

    def __post_init__(self) -> None:
        _check_finite(self.t, self.s1, self.s2, self.s3)

    def __iter__(self) -> Iterator[Any]:
        return iter((self.t, self.s1, self.s2, self.s3))

    def __getitem__(self, i: int) -> Any:
        return (self.t, self.s1, self.s2, self.s3)[i]

    def __add__(self, o: FourVector) -> FourVector:
        return FourVector(self.t + o.t, self.s1 + o.s1, self.s2 + o.s2, self.s3 + o.s3)

    def __sub__(self, o: FourVector) -> FourVector:
        return FourVector(self.t - o.t, self.s1 - o.s1, self.s2 - o.s2, self.s3 - o.s3)

    def __neg__(self) -> FourVector:
        return FourVector(-self.t, -self.s1, -self.s2, -self.s3)

    def __mul__(self, c: Any) -> FourVector:
        return FourVector(self.t * c, self.s1 * c, self.s2 * c, self.s3 * c)

    __rmul__ = __mul__

    def __truediv__(self, c: Any) -> FourVector:
        return FourVector(self.t / c, self.s1 / c, self.s2 / c, self.s3 / c)

    @property
    def spatial(self) -> ThreeVector:
        return ThreeVector(self.s1, self.s2, self.s3)

    def lowered(self) -> FourVector:
        """Apply the metric: (t, s) -> (t, -s). The metric is its own inverse."""
        return FourVector(self.t, -self.s1, -self.s2, -self.s3)

    def to_array(self) -> np.ndarray:
        return np.array([self.t, self.s1, self.s2, self.s3], dtype=float)

    @classmethod
    def of(cls, seq) -> FourVector:
        t, s1, s2, s3 = seq
        return cls(t, s1, s2, s3)

    @classmethod
    def zero(cls) -> FourVector:
        return cls(0.0, 0.0, 0.0, 0.0)


def dot4(a: FourVector, b: FourVector):
    return a.t * b.t - a.s1 * b.s1 - a.s2 * b.s2 - a.s3 * b.s3


def dot3(a: ThreeVector, b: ThreeVector):
    """Spatial contraction with the metric sign, i.e. minus the Euclidean dot."""
    return -(a.s1 * b.s1 + a.s2 * b.s2 + a.s3 * b.s3)


def euclid4(a: FourVector, b: FourVector):
    """Plain component sum a^i b_i, used when pairing a vector with a raw gradient."""
    return a.t * b.t + a.s1 * b.s1 + a.s2 * b.s2 + a.s3 * b.s3


def require_timelike(u: FourVector):
    """Return u.u, raising NonTimelike if it is not safely positive."""
    uu = dot4(u, u)
    if np.any(real_part(uu) <= NULL_EPS):
        raise NonTimelike(f"u.u = {real_part(uu)!r} is not timelike")
    return uu


def norm_timelike(u: FourVector):
    return sqrt(require_timelike(u))


def gram(udot: FourVector, u: FourVector):
    """(u.u)(u'.u') - (u.u')^2: the Gram determinant of the pair under the metric.

    Non-positive for timelike u, and equal to u'.u' when u.u = 1 and u.u' = 0.
    """
    uv = dot4(u, udot)
    return dot4(u, u) * dot4(udot, udot) - uv * uv


def wedge_norm(udot: FourVector, u: FourVector):
    """Norm of the bivector u' ^ u, taken positive on timelike u."""
    radicand = -gram(udot, u)
    r = real_part(radicand)
    scale = np.maximum(np.abs(real_part(dot4(u, u)) * real_part(dot4(udot, udot))), 1.0)
    if np.any(r < -1e-12 * scale):
        raise NegativeRadicand(f"|u' ^ u|^2 = {r!r} < 0")
    if not isinstance(radicand, Dual):
        radicand = np.maximum(radicand, 0.0)
    return sqrt(radicand)


def curvature(u: FourVector, udot: FourVector):
    """First curvature |u' ^ u| / |u|^3 of the worldline (a magnitude)."""
    n = norm_timelike(u)
    return wedge_norm(udot, u) / (n * n * n)


def curvature_squared(u: FourVector, udot: FourVector):
    """Signed squared curvature gram(u', u) / |u|^6.

    Reduces to u'.u' in the unit gauge, so it is negative on worldlines with
    spacelike acceleration. This is the quantity the Bopp action is built on.
    """
    uu = require_timelike(u)
    return gram(udot, u) / (uu * uu * uu)
