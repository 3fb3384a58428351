"""Identity suites over seeded random jets.

Each suite returns per-jet residuals and the magnitude of the terms that
produced them. A residual is compared as ``|r| / max(scale, 1)``: relative to
the participating terms when they are large, absolute when they are small.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable

import numpy as np


def _reduce_max(items):
    return reduce(np.maximum, items)

from .dual import real_part
from .hamiltonian import (
    contact_H,
    contact_H_standard,
    contact_state,
    direct_form_residual,
    h_on_legendre_residual,
    homogeneous_H,
    lift_relation_residual,
)
from .jetcalc import (
    ContactFunction,
    JetFunction,
    JetPoint,
    correspondence_residual,
    grad_jet,
    grad_jet_fd,
    project_contact,
    total_derivative_t,
    total_derivative_tau,
)
from .lagrangians import (
    BoppParams,
    bopp,
    bopp_lagrangian,
    contact_density,
    zermelo_residuals,
    zermelo_scale,
)
from .legendre import (
    elimination_identities,
    legendre_map,
    momenta_ad,
    momenta_explicit,
    pullback_residuals,
    pullback_scales,
)
from .minkowski import dot3, dot4, norm_timelike
from .sampling import random_jets, stack_jets

Suite = Callable[[BoppParams, JetPoint], tuple]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    max_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tolerance)


def _mag(x):
    return np.abs(real_part(x))


def _vmax(vec):
    return _reduce_max([_mag(c) for c in vec])


def _zermelo(index):
    def suite(params, jets):
        L = bopp(params)
        return zermelo_residuals(L, jets)[index], zermelo_scale(L, jets)

    return suite


def _momenta_agreement(params, jets):
    wp, wp1 = momenta_explicit(jets, params)
    wa, wa1 = momenta_ad(bopp(params), jets)
    res = np.maximum(_vmax(wp - wa), _vmax(wp1 - wa1))
    return res, np.maximum(_vmax(wp), _vmax(wp1))


def _gradient_fd(params, jets):
    L = bopp(params)
    ad = grad_jet(L, jets)
    fd = grad_jet_fd(L, jets)
    res = _reduce_max([_vmax(a - b) for a, b in zip(ad, fd)])
    return res, _reduce_max([_vmax(a) for a in ad])


def _constraint_u_wp1(params, jets):
    wp, wp1 = momenta_explicit(jets, params)
    return dot4(jets.u, wp1), _mag(jets.u.t * wp1.t) + np.abs(jets.u.spatial.to_array() * wp1.spatial.to_array()).sum(axis=0)


def _constraint_energy(params, jets):
    wp, wp1 = momenta_explicit(jets, params)
    L = bopp_lagrangian(jets, params)
    terms = [dot4(jets.u, wp), dot4(jets.udot, wp1), L]
    return terms[0] + terms[1] - terms[2], sum(_mag(t) for t in terms)


def _h_normalization(params, jets):
    # Absolute criterion: the normalization constant is fixed to 1.
    return h_on_legendre_residual(jets, params), np.ones_like(_mag(jets.u.t))


def _lift(params, jets):
    s = legendre_map(jets, params)
    u0 = jets.u.t
    scale = _mag(homogeneous_H(s, params)) + _mag(u0 * contact_H(contact_state(jets, params), params)) + _mag(u0 * s.wp.t) + 1
    return lift_relation_residual(jets, params), scale


def _direct(params, jets):
    s = legendre_map(jets, params)
    terms = [dot4(s.wp, jets.u), dot4(s.wp1, jets.udot), bopp_lagrangian(jets, params)]
    return direct_form_residual(jets, params), sum(_mag(t) for t in terms) + 1


def _elimination(index):
    def suite(params, jets):
        _, wp1 = momenta_explicit(jets, params)
        n = norm_timelike(jets.u)
        scale = _mag(dot4(wp1, jets.udot)) + _mag(n**3 * dot4(wp1, wp1) / params.a)
        if index == 1:
            scale = scale / (2 * abs(params.a))
        return elimination_identities(jets, params)[index], scale

    return suite


def _pullback(index):
    def suite(params, jets):
        return pullback_residuals(jets, params)[index], pullback_scales(jets, params)[index]

    return suite


def _factorization(params, jets):
    L = bopp_lagrangian(jets, params)
    return jets.u.t * contact_density(project_contact(jets), params) - L, _mag(L)


def _contact_hamiltonian(params, jets):
    H = contact_H(contact_state(jets, params), params)
    return H - contact_H_standard(jets, params), _mag(H)


_CONTACT_TESTS = [
    ("v1", ContactFunction(lambda c: c.v.s1, order=1)),
    ("v2", ContactFunction(lambda c: c.v.s2, order=1)),
    ("v3", ContactFunction(lambda c: c.v.s3, order=1)),
    ("vdot1", ContactFunction(lambda c: c.vdot.s1, order=2)),
    ("vdot3", ContactFunction(lambda c: c.vdot.s3, order=2)),
    ("one_plus_v2", ContactFunction(lambda c: 1 + dot3(c.v, c.v), order=1)),
    ("v1_vdot2", ContactFunction(lambda c: c.v.s1 * c.vdot.s2, order=2)),
]


def _correspondence(params, jets):
    res, scale = [], []
    for _, f in _CONTACT_TESTS:
        pulled = JetFunction(lambda q, f=f: f(project_contact(q)), order=f.order)
        lhs = total_derivative_tau(pulled, jets)
        rhs = jets.u.t * total_derivative_t(f, project_contact(jets))
        res.append(_mag(correspondence_residual(f, jets)))
        scale.append(_mag(lhs) + _mag(rhs))
    return _reduce_max(res), _reduce_max(scale)


# name -> (suite, tolerance)
SUITES: dict[str, tuple[Suite, float]] = {
    "zermelo_u_dL_dudot": (_zermelo(0), 1e-8),
    "zermelo_homogeneity": (_zermelo(1), 1e-8),
    "gradient_ad_vs_fd": (_gradient_fd, 1e-6),
    "momenta_ad_vs_explicit": (_momenta_agreement, 1e-7),
    "constraint_u_wp1": (_constraint_u_wp1, 1e-8),
    "constraint_u_wp_plus_udot_wp1": (_constraint_energy, 1e-8),
    "hamiltonian_on_legendre": (_h_normalization, 1e-8),
    "lift_relation": (_lift, 1e-7),
    "direct_form": (_direct, 1e-9),
    "elimination_wp1_udot": (_elimination(0), 1e-9),
    "elimination_curvature_term": (_elimination(1), 1e-9),
    "pullback_wp1_time": (_pullback(0), 1e-7),
    "pullback_wp1_space": (_pullback(1), 1e-7),
    "pullback_wp_time": (_pullback(2), 1e-7),
    "pullback_wp_space": (_pullback(3), 1e-7),
    "total_derivative_correspondence": (_correspondence, 1e-8),
    "contact_factorization": (_factorization, 1e-10),
    "contact_hamiltonian_elimination": (_contact_hamiltonian, 1e-8),
}


def relative(residual, scale) -> np.ndarray:
    return _mag(residual) / np.maximum(_mag(scale), 1.0)


def run_suite(name: str, params: BoppParams, jets: JetPoint) -> SuiteResult:
    suite, tol = SUITES[name]
    res, scale = suite(params, jets)
    return SuiteResult(name, float(np.max(relative(res, scale))), tol)


def run_all(params: BoppParams, seed: int, count: int, names=None) -> list[SuiteResult]:
    if count < 1:
        raise ValueError("sample_count must be positive")
    jets = stack_jets(random_jets(seed, count, order=3))
    return [run_suite(n, params, jets) for n in (names or SUITES)]
