"""Contact Hamilton function H and Rund's homogeneous Hamiltonian on T^3 M."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .dual import sqrt
from .jetcalc import JetPoint, _require_order, project_contact
from .lagrangians import BoppParams, _one_plus_v2, bopp_lagrangian, contact_density
from .legendre import CanonicalState, contact_momenta, legendre_map
from .minkowski import ThreeVector, dot3, dot4, require_timelike

# Value of the homogeneous Hamiltonian along every Legendre image.
H_LEVEL = 1.0


@dataclass(frozen=True, slots=True)
class ContactState:
    x0: Any
    x: ThreeVector
    v: ThreeVector
    p: ThreeVector
    p1: ThreeVector


def contact_H(s: ContactState, params: BoppParams):
    """H = p.v + (1/2a)(1 + v^2)^{3/2} (p1^2 + (p1.v)^2) - (A/2) sqrt(1 + v^2)."""
    w = _one_plus_v2(s.v)
    sw = sqrt(w)
    p1v = dot3(s.p1, s.v)
    kinetic = w * sw * (dot3(s.p1, s.p1) + p1v * p1v) / (2 * params.a)
    return dot3(s.p, s.v) + kinetic - 0.5 * params.A * sw


def contact_state(p: JetPoint, params: BoppParams) -> ContactState:
    """Contact-chart phase point over the projection of an order-3 jet."""
    c = project_contact(p)
    m = contact_momenta(c, params)
    return ContactState(c.x0, c.x, c.v, m.p, m.p1)


def contact_H_standard(p: JetPoint, params: BoppParams):
    """p.v + p1.v' - L, still written in the velocity v' (before eliminating it)."""
    c = project_contact(p)
    m = contact_momenta(c, params)
    return dot3(m.p, c.v) + dot3(m.p1, c.vdot) - contact_density(c, params)


def homogeneous_H(s: CanonicalState, params: BoppParams):
    """wp.u + (1/2a)|u|^3 wp1^2 - (A/2)|u| + 1."""
    uu = require_timelike(s.u)
    n = sqrt(uu)
    return dot4(s.wp, s.u) + n * uu * dot4(s.wp1, s.wp1) / (2 * params.a) - 0.5 * params.A * n + H_LEVEL


def h_on_legendre_residual(p: JetPoint, params: BoppParams):
    _require_order(p.order, 3, "h_on_legendre_residual")
    return homogeneous_H(legendre_map(p, params), params) - H_LEVEL


def lift_relation_residual(p: JetPoint, params: BoppParams):
    """H_hom(Le(p)) - [u0 H(pr p) + u0 wp_0 + 1]."""
    _require_order(p.order, 3, "lift_relation_residual")
    s = legendre_map(p, params)
    u0 = p.u.t
    return homogeneous_H(s, params) - (u0 * contact_H(contact_state(p, params), params) + u0 * s.wp.t + H_LEVEL)


def direct_form_residual(p: JetPoint, params: BoppParams):
    """[wp.u + wp1.u' - L + 1] - H_hom(Le(p))."""
    _require_order(p.order, 3, "direct_form_residual")
    s = legendre_map(p, params)
    direct = dot4(s.wp, p.u) + dot4(s.wp1, p.udot) - bopp_lagrangian(p, params) + H_LEVEL
    return direct - homogeneous_H(s, params)
