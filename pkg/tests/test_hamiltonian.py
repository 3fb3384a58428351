import math

import numpy as np
import pytest

from conftest import HELIX_PARAMS, jet
from zitterlab.hamiltonian import (
    ContactState,
    contact_H,
    contact_H_standard,
    contact_state,
    direct_form_residual,
    h_on_legendre_residual,
    homogeneous_H,
    lift_relation_residual,
)
from zitterlab.jetcalc import JetPoint, reparametrize
from zitterlab.lagrangians import BoppParams
from zitterlab.legendre import CanonicalState, legendre_map
from zitterlab.minkowski import FourVector, ThreeVector

Z3 = ThreeVector.zero()
Z4 = FourVector.zero()


class TestContactH:
    def test_rest(self):
        assert contact_H(ContactState(0.0, Z3, Z3, Z3, Z3), BoppParams(1.0, 3.0)) == pytest.approx(-1.5)

    def test_unit_p1(self):
        s = ContactState(0.0, Z3, Z3, Z3, ThreeVector(1.0, 0, 0))
        assert contact_H(s, BoppParams(1.0, 0.0)) == pytest.approx(-0.5)

    def test_equals_standard_form(self, jets3, params):
        H = contact_H(contact_state(jets3, params), params)
        H_std = contact_H_standard(jets3, params)
        assert np.max(np.abs(H - H_std) / np.maximum(1.0, np.abs(H))) <= 1e-8

    def test_translation_independent(self, params):
        s = ContactState(0.0, Z3, ThreeVector(0.2, -0.1, 0.3), ThreeVector(1, 2, 3), ThreeVector(-1, 0.5, 0))
        moved = ContactState(7.5, ThreeVector(1, -4, 2), s.v, s.p, s.p1)
        assert contact_H(moved, params) == contact_H(s, params)


class TestHomogeneousH:
    def test_free_particle_extremal(self):
        s = legendre_map(jet((1, 0, 0, 0)), BoppParams(1.0, 2.0))
        assert list(s.wp) == [1.0, 0, 0, 0]
        assert homogeneous_H(s, BoppParams(1.0, 2.0)) == pytest.approx(1.0)

    def test_zero_momenta(self):
        s = CanonicalState(Z4, FourVector(1.3, 0.5, 0, 0), Z4, Z4)
        assert homogeneous_H(s, BoppParams(1.0, 0.0)) == 1.0

    def test_legendre_images(self, jets3, params):
        assert np.max(np.abs(h_on_legendre_residual(jets3, params))) <= 1e-8

    def test_helix(self, helix_solution):
        j = helix_solution.jet
        assert abs(h_on_legendre_residual(JetPoint(j.x, j.u, j.udot, j.uddot, order=3), HELIX_PARAMS)) <= 1e-10

    def test_rest_jet_exact(self):
        assert h_on_legendre_residual(jet((1, 0, 0, 0)), BoppParams(1.0, 2.0)) == pytest.approx(0.0, abs=1e-15)

    def test_reparametrization_keeps_value(self, jets3, params):
        H1 = homogeneous_H(legendre_map(jets3, params), params)
        H2 = homogeneous_H(legendre_map(reparametrize(jets3, 1.8, 0.4, -0.3), params), params)
        assert np.max(np.abs(H1 - H2)) <= 1e-9


class TestLiftRelation:
    def test_random(self, jets3, params):
        s = legendre_map(jets3, params)
        scale = 1 + np.abs(jets3.u.t * s.wp.t)
        assert np.max(np.abs(lift_relation_residual(jets3, params)) / scale) <= 1e-7

    def test_rest(self, params):
        assert abs(lift_relation_residual(jet((1, 0, 0, 0)), params)) <= 1e-12

    def test_boosted_free_particle(self, params):
        p = jet((math.cosh(1.0), math.sinh(1.0), 0, 0))
        assert abs(lift_relation_residual(p, params)) <= 1e-10


class TestDirectForm:
    def test_random(self, jets3, params):
        s = legendre_map(jets3, params)
        from zitterlab.minkowski import dot4

        scale = 1 + np.abs(dot4(s.wp, jets3.u)) + np.abs(dot4(s.wp1, jets3.udot))
        assert np.max(np.abs(direct_form_residual(jets3, params)) / scale) <= 1e-9

    def test_parallel_acceleration(self, params):
        assert abs(direct_form_residual(jet((1.5, 0.3, 0, 0), (0.6, 0.12, 0, 0)), params)) <= 1e-12

    def test_helix(self, helix_solution):
        j = helix_solution.jet
        assert abs(direct_form_residual(JetPoint(j.x, j.u, j.udot, j.uddot, order=3), HELIX_PARAMS)) <= 1e-10
