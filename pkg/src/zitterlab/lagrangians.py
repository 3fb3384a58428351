"""The Bopp second-order Lagrangian and Zermelo-condition checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dual import real_part, sqrt
from .errors import RankConditionError, SuperluminalVelocity
from .jetcalc import ContactFunction, ContactJet, JetFunction, JetPoint, grad_jet
from .minkowski import curvature_squared, dot3, euclid4, norm_timelike


@dataclass(frozen=True)
class BoppParams:
    """Couplings of L = a L_r + A L_e. ``a`` must be nonzero (rank condition)."""

    a: float
    A: float

    def __post_init__(self) -> None:
        if not np.isfinite(self.a) or not np.isfinite(self.A):
            raise ValueError(f"couplings must be finite, got a={self.a!r}, A={self.A!r}")
        if self.a == 0:
            raise RankConditionError(
                "a = 0 violates the rank condition: rank d2L/du'du' must equal dim M - 1 = 3"
            )


def curvature_term(p: JetPoint):
    """L_r = |u| k^2 / 2 with the signed squared curvature (u'.u' in the unit gauge)."""
    return 0.5 * norm_timelike(p.u) * curvature_squared(p.u, p.udot)


def free_term(p: JetPoint):
    """L_e = |u| / 2."""
    return 0.5 * norm_timelike(p.u)


def bopp_lagrangian(p: JetPoint, params: BoppParams):
    n = norm_timelike(p.u)
    return 0.5 * n * (params.a * curvature_squared(p.u, p.udot) + params.A)


def bopp(params: BoppParams) -> JetFunction:
    return JetFunction(lambda p: bopp_lagrangian(p, params), order=2)


def _one_plus_v2(v):
    w = 1 + dot3(v, v)
    if np.any(real_part(w) <= 0):
        raise SuperluminalVelocity(f"1 + v.v = {real_part(w)!r} <= 0")
    return w


def contact_density(c: ContactJet, params: BoppParams):
    """L(v, v') with L dx^0 the contact-chart Lagrangian density."""
    w = _one_plus_v2(c.v)
    sw = sqrt(w)
    vv1 = dot3(c.v, c.vdot)
    curv = dot3(c.vdot, c.vdot) / (w * w) - vv1 * vv1 / (w * w * w)
    return 0.5 * sw * (params.a * curv + params.A)


def contact_lagrangian(params: BoppParams) -> ContactFunction:
    return ContactFunction(lambda c: contact_density(c, params), order=2)


def zermelo_residuals(L, p: JetPoint):
    """(u^a dL/du'^a, u^a dL/du^a + 2 u'^a dL/du'^a - L); both vanish for homogeneous L."""
    _, gu, gud = grad_jet(L, p)
    first = euclid4(p.u, gud)
    second = euclid4(p.u, gu) + 2 * euclid4(p.udot, gud) - L(p)
    return first, second


def zermelo_scale(L, p: JetPoint):
    """Magnitude of the terms entering :func:`zermelo_residuals`, for relative comparisons."""
    _, gu, gud = grad_jet(L, p)
    terms = [euclid4(p.u, gu), 2 * euclid4(p.udot, gud), L(p)]
    return sum(np.abs(real_part(t)) for t in terms)
