"""Worldline jets, dual-number gradients and total derivatives.

A :class:`JetPoint` carries (x, u, u', u'', u''') on T^4 M and a
:class:`ContactJet` carries (x^0, x, v, v', v'') in the contact chart obtained
by using x^0 as the curve parameter. Scalar functions on either space are
wrapped in :class:`JetFunction` / :class:`ContactFunction` together with the
highest derivative level they read.

Gradients are raw partial derivatives with respect to the stored components
(no index raising); callers that want vector components apply
:meth:`FourVector.lowered` themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Callable

import numpy as np

from .dual import Dual, new_tag, real_part, tangent
from .errors import OrderTooLow, ZeroTimeComponent
from .minkowski import FourVector, ThreeVector

_ZERO4 = FourVector(0.0, 0.0, 0.0, 0.0)
_ZERO3 = ThreeVector(0.0, 0.0, 0.0)

JET_LEVELS = ("x", "u", "udot", "uddot", "utdot")
CONTACT_LEVELS = ("x", "v", "vdot", "vddot")


def _is_zero(vec) -> bool:
    return all(np.all(real_part(c) == 0) for c in vec)


@dataclass(frozen=True, slots=True)
class JetPoint:
    x: FourVector
    u: FourVector
    udot: FourVector = _ZERO4
    uddot: FourVector = _ZERO4
    utdot: FourVector = _ZERO4
    order: int = 4

    def __post_init__(self) -> None:
        if not 1 <= self.order <= 4:
            raise ValueError(f"jet order must be in 1..4, got {self.order}")
        for name in JET_LEVELS[self.order + 1 :]:
            if not _is_zero(getattr(self, name)):
                raise ValueError(f"level {name} lies above order {self.order} and must be zero")

    def level(self, k: int) -> FourVector:
        return getattr(self, JET_LEVELS[k])


@dataclass(frozen=True, slots=True)
class ContactJet:
    x0: Any
    x: ThreeVector
    v: ThreeVector
    vdot: ThreeVector = _ZERO3
    vddot: ThreeVector = _ZERO3
    order: int = 3

    def __post_init__(self) -> None:
        if not 1 <= self.order <= 3:
            raise ValueError(f"contact jet order must be in 1..3, got {self.order}")
        for name in CONTACT_LEVELS[self.order + 1 :]:
            if not _is_zero(getattr(self, name)):
                raise ValueError(f"level {name} lies above order {self.order} and must be zero")


@dataclass(frozen=True)
class JetFunction:
    """A scalar function on jets that reads levels up to ``order`` (2 means up to u')."""

    fn: Callable[[JetPoint], Any]
    order: int = 2

    def __call__(self, p: JetPoint):
        return self.fn(p)


@dataclass(frozen=True)
class ContactFunction:
    """A scalar function on contact jets that reads levels up to ``order`` (2 means up to v')."""

    fn: Callable[[ContactJet], Any]
    order: int = 2

    def __call__(self, c: ContactJet):
        return self.fn(c)


# -- seeding helpers ---------------------------------------------------------


def _seed4(v: FourVector, w: FourVector | None, tag: int) -> FourVector:
    if w is None:
        return v
    return FourVector(*(Dual(a, b, tag) for a, b in zip(v, w)))


def _seed3(v: ThreeVector, w: ThreeVector | None, tag: int) -> ThreeVector:
    if w is None:
        return v
    return ThreeVector(*(Dual(a, b, tag) for a, b in zip(v, w)))


def _basis4(i: int) -> FourVector:
    c = [0.0, 0.0, 0.0, 0.0]
    c[i] = 1.0
    return FourVector(*c)


def _basis3(i: int) -> ThreeVector:
    c = [0.0, 0.0, 0.0]
    c[i] = 1.0
    return ThreeVector(*c)


def _require_order(have: int, need: int, what: str) -> None:
    if have < need:
        raise OrderTooLow(f"{what} needs jet order >= {need}, got {have}")


# -- gradients -----------------------------------------------------------------


def partial(f: Callable, p: JetPoint, level: int, index: int):
    """Raw partial derivative of f with respect to component ``index`` of jet level ``level``."""
    tag = new_tag()
    name = JET_LEVELS[level]
    q = replace(p, **{name: _seed4(p.level(level), _basis4(index), tag)})
    return tangent(f(q), tag)


def grad_jet(f: Callable, p: JetPoint) -> tuple[FourVector, FourVector, FourVector]:
    """Partial gradients of f with respect to x, u and u' at p, by forward-mode duals."""
    _require_order(p.order, 2, "grad_jet")
    return tuple(
        FourVector(*(partial(f, p, level, i) for i in range(4))) for level in (0, 1, 2)
    )


def grad_jet_fd(f: Callable, p: JetPoint, h: float = 1e-6) -> tuple[FourVector, FourVector, FourVector]:
    """Central finite-difference counterpart of :func:`grad_jet` (cross-check oracle).

    The step is scaled by the magnitude of the coordinate being perturbed.
    """
    out = []
    for level in (0, 1, 2):
        name = JET_LEVELS[level]
        base = p.level(level)
        comps = []
        for i in range(4):
            step = h * np.maximum(1.0, np.abs(base[i]))
            plus = replace(p, **{name: base + _basis4(i) * step})
            minus = replace(p, **{name: base - _basis4(i) * step})
            comps.append((f(plus) - f(minus)) / (2 * step))
        out.append(FourVector(*comps))
    return tuple(out)


# -- total derivatives -------------------------------------------------------


def _flow(p: JetPoint, tag: int) -> JetPoint:
    # Advance every level by the next one; u''' has no successor on T^4 M.
    return JetPoint(
        _seed4(p.x, p.u, tag),
        _seed4(p.u, p.udot, tag),
        _seed4(p.udot, p.uddot, tag),
        _seed4(p.uddot, p.utdot, tag),
        p.utdot,
        p.order,
    )


def total_derivative_tau(f, p: JetPoint):
    """D_tau f = u d/dx + u' d/du + u'' d/du' (+ u''' d/du'' for third-order f).

    ``f`` must expose an ``order`` attribute (see :class:`JetFunction`).
    """
    _require_order(p.order, f.order + 1, "total_derivative_tau")
    tag = new_tag()
    return tangent(f(_flow(p, tag)), tag)


def total_derivative_t(f, c: ContactJet):
    """D_t f, the total derivative with respect to x^0 in the contact chart.

    Includes the explicit d/dx^0 term, which vanishes for x^0-independent f.
    """
    _require_order(c.order, f.order + 1, "total_derivative_t")
    tag = new_tag()
    shifted = ContactJet(
        Dual(c.x0, 1.0, tag),
        _seed3(c.x, c.v, tag),
        _seed3(c.v, c.vdot, tag),
        _seed3(c.vdot, c.vddot, tag),
        c.vddot,
        c.order,
    )
    return tangent(f(shifted), tag)


def contact_partial(f: Callable, c: ContactJet, level: str, index: int):
    """Raw partial derivative of f with respect to one component of a contact level."""
    tag = new_tag()
    if level == "x0":
        return tangent(f(replace(c, x0=Dual(c.x0, 1.0, tag))), tag)
    q = replace(c, **{level: _seed3(getattr(c, level), _basis3(index), tag)})
    return tangent(f(q), tag)


def contact_grad(f: Callable, c: ContactJet, level: str) -> ThreeVector:
    return ThreeVector(*(contact_partial(f, c, level, i) for i in range(3)))


# -- contact projection --------------------------------------------------------


def project_contact(p: JetPoint) -> ContactJet:
    """Quotient projection T^3 M -> C^3(1, M), taking x^0 as the parameter.

    v   = u_s / u0
    v'  = u'_s / u0^2 - (u'0 / u0^3) u_s
    v'' = u''_s / u0^3 - 3 (u'0 / u0^4) u'_s + (3 u'0^2 / u0^5 - u''0 / u0^4) u_s

    The u''0 coefficient is 1, as the chain rule gives.
    """
    u0 = p.u.t
    if np.any(real_part(u0) == 0):
        raise ZeroTimeComponent("u^0 = 0: the contact chart breaks down")
    us, uds, udds = p.u.spatial, p.udot.spatial, p.uddot.spatial
    d0, dd0 = p.udot.t, p.uddot.t
    u0_2 = u0 * u0
    u0_3 = u0_2 * u0
    u0_4 = u0_3 * u0
    v = us / u0
    order = min(p.order, 3)
    vdot = uds / u0_2 - us * (d0 / u0_3) if order >= 2 else _ZERO3
    if order >= 3:
        vddot = udds / u0_3 - uds * (3 * d0 / u0_4) + us * (3 * d0 * d0 / (u0_4 * u0) - dd0 / u0_4)
    else:
        vddot = _ZERO3
    return ContactJet(p.x.t, p.x.spatial, v, vdot, vddot, order)


def correspondence_residual(f: ContactFunction, p: JetPoint):
    """D_tau(f o pr) - u^0 (D_t f) o pr; vanishes identically."""
    _require_order(p.order, 3, "correspondence_residual")
    pulled = JetFunction(lambda q: f(project_contact(q)), order=f.order)
    return total_derivative_tau(pulled, p) - p.u.t * total_derivative_t(f, project_contact(p))


# -- reparametrization ----------------------------------------------------------


def reparametrize(p: JetPoint, c: float, b: float = 0.0, e: float = 0.0, d: float = 0.0) -> JetPoint:
    """Jet of the same curve under tau -> sigma(tau), sigma' = c, sigma'' = b, sigma''' = e, sigma'''' = d.

    Faa di Bruno to fourth order; levels above ``p.order`` stay zero.
    """
    u, u1, u2, u3 = p.u, p.udot, p.uddot, p.utdot
    nu = u * c
    nu1 = u1 * (c * c) + u * b
    nu2 = u2 * (c**3) + u1 * (3 * c * b) + u * e
    nu3 = u3 * (c**4) + u2 * (6 * c * c * b) + u1 * (4 * c * e + 3 * b * b) + u * d
    levels = [nu, nu1, nu2, nu3]
    for k in range(p.order, 4):
        levels[k] = _ZERO4
    return JetPoint(p.x, *levels, order=p.order)


# -- Euler-Poisson oracle --------------------------------------------------------


def euler_poisson_residual_oracle(L, p: JetPoint) -> FourVector:
    """dL/dx - D_tau(dL/du) + D_tau^2(dL/du') per component, as a raw covector.

    Brute force: every derivative is a nested dual-number pass over L itself.
    """
    _require_order(p.order, 4, "euler_poisson_residual_oracle")
    comps = []
    for i in range(4):
        d_x = partial(L, p, 0, i)
        d_u = JetFunction(lambda q, i=i: partial(L, q, 1, i), order=2)
        d_ud = JetFunction(lambda q, i=i: partial(L, q, 2, i), order=2)
        dt_ud = JetFunction(lambda q, g=d_ud: total_derivative_tau(g, q), order=3)
        comps.append(d_x - total_derivative_tau(d_u, p) + total_derivative_tau(dt_ud, p))
    return FourVector(*comps)
