import numpy as np
import pytest

from conftest import jet
from zitterlab.errors import NonTimelike, RankConditionError, SuperluminalVelocity
from zitterlab.jetcalc import ContactJet, JetFunction, project_contact, reparametrize
from zitterlab.lagrangians import BoppParams, bopp, bopp_lagrangian, contact_density, zermelo_residuals
from zitterlab.minkowski import ThreeVector, dot4, norm_timelike


def test_rank_condition():
    with pytest.raises(RankConditionError, match="rank"):
        BoppParams(0.0, 1.0)


class TestBopp:
    def test_rest_mass_term(self):
        assert bopp_lagrangian(jet((1, 0, 0, 0)), BoppParams(1.0, 2.0)) == pytest.approx(1.0)

    # The curvature term carries k^2 = u'.u' (unit gauge), negative for spacelike acceleration.
    def test_unit_acceleration(self):
        assert bopp_lagrangian(jet((1, 0, 0, 0), (0, 1, 0, 0)), BoppParams(1.0, 0.0)) == pytest.approx(-0.5)

    def test_scaled_jet(self):
        assert bopp_lagrangian(jet((2, 0, 0, 0), (0, 2, 0, 0)), BoppParams(2.0, 0.0)) == pytest.approx(-0.5)

    def test_null_velocity_rejected(self):
        with pytest.raises(NonTimelike):
            bopp_lagrangian(jet((1, 1, 0, 0)), BoppParams(1.0, 1.0))

    @pytest.mark.parametrize("c, b", [(2.0, 0.0), (0.5, 1.3), (3.1, -0.7)])
    def test_weight_one_covariance(self, jets3, params, c, b):
        L = bopp_lagrangian(jets3, params)
        L_new = bopp_lagrangian(reparametrize(jets3, c, b), params)
        assert np.all(np.abs(L_new - c * L) <= 1e-10 * np.maximum(1.0, np.abs(c * L)))


class TestContactDensity:
    def test_rest(self):
        z = ThreeVector.zero()
        assert contact_density(ContactJet(0.0, z, z, z), BoppParams(1.0, 3.0)) == pytest.approx(1.5)

    def test_unit_vdot(self):
        z = ThreeVector.zero()
        c = ContactJet(0.0, z, z, ThreeVector(1.0, 0, 0))
        assert contact_density(c, BoppParams(2.0, 0.0)) == pytest.approx(-1.0)

    def test_factorization(self, jets3, params):
        L = bopp_lagrangian(jets3, params)
        Lc = contact_density(project_contact(jets3), params)
        assert np.all(np.abs(jets3.u.t * Lc - L) <= 1e-10 * np.maximum(1.0, np.abs(L)))

    def test_superluminal(self):
        z = ThreeVector.zero()
        with pytest.raises(SuperluminalVelocity):
            contact_density(ContactJet(0.0, z, ThreeVector(1.0, 0, 0), z), BoppParams(1.0, 1.0))


class TestZermelo:
    def test_bopp_satisfies_both(self, jets3, params):
        L = bopp(params)
        r1, r2 = zermelo_residuals(L, jets3)
        scale = np.maximum(1.0, np.abs(L(jets3)))
        assert np.max(np.abs(r1) / scale) <= 1e-8
        assert np.max(np.abs(r2) / scale) <= 1e-8

    def test_wrong_degree_fails(self):
        L = JetFunction(lambda q: dot4(q.u, q.u))
        p = jet((1.5, 0.3, 0, 0), (0, 1, 0, 0), order=2)
        r1, r2 = zermelo_residuals(L, p)
        assert r1 == 0
        assert r2 == pytest.approx(L(p))

    def test_norm_is_homogeneous(self):
        L = JetFunction(lambda q: norm_timelike(q.u), order=1)
        r1, r2 = zermelo_residuals(L, jet((1.5, 0.3, -0.2, 0.1), (0.3, 1, 0, 0), order=2))
        assert (r1, r2) == pytest.approx((0.0, 0.0), abs=1e-14)
