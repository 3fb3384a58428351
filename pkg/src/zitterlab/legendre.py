"""Ostrohradskyj momenta on T^3 M and in the contact chart.

Convention: every momentum is stored with the index position of the explicit
closed forms, i.e. as the metric-raised partial derivative. The generic
dual-number routes therefore finish with one ``lowered()`` call (the metric is
its own inverse), and every contraction afterwards goes through dot4 / dot3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np


def _reduce_max(items):
    return reduce(np.maximum, items)

from .dual import real_part, sqrt
from .jetcalc import (
    ContactJet,
    JetFunction,
    JetPoint,
    _require_order,
    contact_grad,
    contact_partial,
    grad_jet,
    partial,
    project_contact,
    total_derivative_t,
    total_derivative_tau,
)
from .lagrangians import BoppParams, _one_plus_v2, contact_density, curvature_term
from .minkowski import FourVector, ThreeVector, dot3, dot4, norm_timelike, require_timelike


@dataclass(frozen=True, slots=True)
class CanonicalState:
    """Phase point (x, u, wp, wp1) of the homogeneous formalism; wp1 is the u'-momentum."""

    x: FourVector
    u: FourVector
    wp: FourVector
    wp1: FourVector

    def to_array(self) -> np.ndarray:
        return np.concatenate([v.to_array() for v in (self.x, self.u, self.wp, self.wp1)])

    @classmethod
    def from_array(cls, y) -> CanonicalState:
        y = np.asarray(y, dtype=float)
        return cls(*(FourVector(*y[4 * k : 4 * k + 4]) for k in range(4)))


@dataclass(frozen=True, slots=True)
class ContactMomenta:
    p: ThreeVector
    p1: ThreeVector


def momenta_explicit(p: JetPoint, params: BoppParams) -> tuple[FourVector, FourVector]:
    """Closed-form (wp, wp1) of the Bopp Lagrangian. wp needs u'', so order >= 3."""
    _require_order(p.order, 3, "momenta_explicit")
    u, ud, udd = p.u, p.udot, p.uddot
    a, A = params.a, params.A
    uu = require_timelike(u)
    n = sqrt(uu)
    n3 = n * uu
    n5 = n3 * uu
    n7 = n5 * uu
    u_ud = dot4(u, ud)
    wp1 = (ud * uu - u * u_ud) * (a / n5)
    bracket = (
        udd / n3
        - ud * (3 * u_ud / n5)
        - u * (dot4(u, udd) / n5)
        + u * (dot4(ud, ud) / (2 * n5))
        + u * (2.5 * u_ud * u_ud / n7)
    )
    wp = u * (A / (2 * n)) - bracket * a
    return wp, wp1


def legendre_map(p: JetPoint, params: BoppParams) -> CanonicalState:
    wp, wp1 = momenta_explicit(p, params)
    return CanonicalState(p.x, p.u, wp, wp1)


def momenta_ad(L, p: JetPoint) -> tuple[FourVector, FourVector]:
    """wp1 = dL/du', wp = dL/du - D_tau wp1, by dual numbers, returned metric-raised."""
    _require_order(p.order, 3, "momenta_ad")
    _, gu, gud = grad_jet(L, p)
    d_gud = [
        total_derivative_tau(JetFunction(lambda q, i=i: partial(L, q, 2, i), order=L.order), p)
        for i in range(4)
    ]
    wp = gu - FourVector(*d_gud)
    return wp.lowered(), gud.lowered()


def zermelo_momentum_residuals(p: JetPoint, L):
    """(u.wp1, u.wp + u'.wp1 - L); both vanish when L satisfies the Zermelo conditions."""
    wp, wp1 = momenta_ad(L, p)
    return dot4(p.u, wp1), dot4(p.u, wp) + dot4(p.udot, wp1) - L(p)


def contact_momenta(c: ContactJet, params: BoppParams) -> ContactMomenta:
    """Closed-form contact momenta (p, p1) of the Bopp density; p needs v'', so order >= 3."""
    _require_order(c.order, 3, "contact_momenta")
    v, v1, v2 = c.v, c.vdot, c.vddot
    w = _one_plus_v2(v)
    sw = sqrt(w)
    w32 = w * sw
    w52 = w32 * w
    w72 = w52 * w
    vv1 = dot3(v, v1)
    p1_r = v1 / w32 - v * (vv1 / w52)
    p_r = (
        -v2 / w32
        + v1 * (3 * vv1 / w52)
        + v * (dot3(v, v2) / w52)
        - v * (0.5 * dot3(v1, v1) / w52)
        - v * (2.5 * vv1 * vv1 / w72)
    )
    p_e = v * (0.5 / sw)
    return ContactMomenta(p_r * params.a + p_e * params.A, p1_r * params.a)


def contact_momenta_ad(Lc, c: ContactJet) -> ContactMomenta:
    """p1 = dL/dv', p = dL/dv - D_t p1 by dual numbers, returned metric-raised (spatial sign flip)."""
    _require_order(c.order, 3, "contact_momenta_ad")
    g1 = contact_grad(Lc, c, "vdot")
    gv = contact_grad(Lc, c, "v")
    from .jetcalc import ContactFunction

    d_g1 = ThreeVector(
        *(
            total_derivative_t(ContactFunction(lambda q, i=i: contact_partial(Lc, q, "vdot", i), order=Lc.order), c)
            for i in range(3)
        )
    )
    return ContactMomenta(-(gv - d_g1), -g1)


def _max_abs(vec: ThreeVector):
    return _reduce_max([np.abs(real_part(c)) for c in vec])


def pullback_residuals(p: JetPoint, params: BoppParams):
    """Residuals of the four relations tying (wp, wp1) to the pulled-back contact momenta.

    1. wp1_0 + u_s . p1 / u0^2
    2. wp1_s - p1 / u0                (max-abs over components)
    3. wp_0 - (L - v.p - v'.p1)
    4. wp_s - p                        (max-abs over components)
    """
    c = project_contact(p)
    wp, wp1 = momenta_explicit(p, params)
    cm = contact_momenta(c, params)
    u0 = p.u.t
    r1 = wp1.t + dot3(p.u.spatial, cm.p1) / (u0 * u0)
    r2 = _max_abs(wp1.spatial - cm.p1 / u0)
    r3 = wp.t - (contact_density(c, params) - dot3(c.v, cm.p) - dot3(c.vdot, cm.p1))
    r4 = _max_abs(wp.spatial - cm.p)
    return r1, r2, r3, r4


def pullback_scales(p: JetPoint, params: BoppParams):
    """Term magnitudes matching :func:`pullback_residuals`, for relative comparisons."""
    c = project_contact(p)
    wp, wp1 = momenta_explicit(p, params)
    cm = contact_momenta(c, params)
    u0 = np.abs(p.u.t)
    mag = lambda x: np.abs(real_part(x))  # noqa: E731
    s1 = mag(wp1.t) + _max_abs(p.u.spatial) * 3 * _max_abs(cm.p1) / (u0 * u0)
    s2 = _max_abs(wp1.spatial) + _max_abs(cm.p1) / u0
    s3 = mag(wp.t) + mag(contact_density(c, params)) + mag(dot3(c.v, cm.p)) + mag(dot3(c.vdot, cm.p1))
    s4 = _max_abs(wp.spatial) + _max_abs(cm.p)
    return s1, s2, s3, s4


def elimination_identities(p: JetPoint, params: BoppParams):
    """Residuals of wp1.u' = |u|^3 wp1^2 / a and L_r = |u|^3 wp1^2 / (2 a^2)."""
    a = params.a
    q = p if p.order >= 3 else JetPoint(p.x, p.u, p.udot, order=3)
    _, wp1 = momenta_explicit(q, params)
    n = norm_timelike(p.u)
    rhs = n * n * n * dot4(wp1, wp1) / a
    return dot4(wp1, p.udot) - rhs, curvature_term(p) - rhs / (2 * a)
