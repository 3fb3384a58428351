"""Canonical equations of the Bopp model, their unit-gauge reduction and solutions.

Integration works on packed 16-vectors ``(x, u, wp, wp1)``; the
:class:`CanonicalState` wrappers exist for the public API and for tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from .dual import Dual, new_tag, tangent
from .errors import GaugeViolation, NoHelix, NotHelical, StepRejected
from .hamiltonian import H_LEVEL, homogeneous_H
from .jetcalc import JetPoint
from .lagrangians import BoppParams
from .legendre import CanonicalState, legendre_map
from .minkowski import FourVector, curvature, dot4, norm_timelike

GAUGE_TOL = 1e-6
MAX_STEP_ERROR = 1e-3
CHANNELS = ("x", "u", "wp", "wp1")

Field = Callable[[np.ndarray], np.ndarray]

_METRIC = np.array([1.0, -1.0, -1.0, -1.0])


def _mdot(a: np.ndarray, b: np.ndarray):
    """Minkowski product over the last axis of packed arrays."""
    return np.sum(a * b * _METRIC, axis=-1)


@dataclass(frozen=True)
class UnitVelocity:
    """Proper-time gauge u.u = 1, in which lambda = 1 and mu = 0."""

    tol: float = GAUGE_TOL


@dataclass(frozen=True)
class FreeMultipliers:
    lam: float
    mu: float


GaugeChoice = UnitVelocity | FreeMultipliers


# -- right-hand sides ------------------------------------------------------------


def canonical_vec(y: np.ndarray, params: BoppParams, lam: float, mu: float) -> np.ndarray:
    _, _, _, _, u0, u1, u2, u3, p0, p1, p2, p3, q0, q1, q2, q3 = y.tolist()
    uu = u0 * u0 - u1 * u1 - u2 * u2 - u3 * u3
    if uu <= 0:
        raise GaugeViolation(f"u.u = {uu!r} is not timelike")
    n = math.sqrt(uu)
    a, A = params.a, params.A
    cq = lam * n * uu / a
    c = 0.5 * A * lam / n - 1.5 * lam * n / a * (q0 * q0 - q1 * q1 - q2 * q2 - q3 * q3)
    return np.array(
        [
            lam * u0, lam * u1, lam * u2, lam * u3,
            cq * q0 + mu * u0, cq * q1 + mu * u1, cq * q2 + mu * u2, cq * q3 + mu * u3,
            0.0, 0.0, 0.0, 0.0,
            c * u0 - lam * p0 - mu * q0, c * u1 - lam * p1 - mu * q1,
            c * u2 - lam * p2 - mu * q2, c * u3 - lam * p3 - mu * q3,
        ]
    )  # fmt: skip


def reduced_vec(y: np.ndarray, params: BoppParams, tol: float = GAUGE_TOL) -> np.ndarray:
    # Scalar unpacking is ~5x faster than numpy slicing on 16 elements.
    _, _, _, _, u0, u1, u2, u3, p0, p1, p2, p3, q0, q1, q2, q3 = y.tolist()
    uu = u0 * u0 - u1 * u1 - u2 * u2 - u3 * u3
    if abs(uu - 1.0) > tol:
        raise GaugeViolation(f"|u.u - 1| = {abs(uu - 1.0):.3e} exceeds {tol:g}")
    ia = 1.0 / params.a
    c = 0.5 * params.A - 1.5 * ia * (q0 * q0 - q1 * q1 - q2 * q2 - q3 * q3)
    return np.array(
        [
            u0, u1, u2, u3,
            q0 * ia, q1 * ia, q2 * ia, q3 * ia,
            0.0, 0.0, 0.0, 0.0,
            c * u0 - p0, c * u1 - p1, c * u2 - p2, c * u3 - p3,
        ]
    )  # fmt: skip


def reduced_field(params: BoppParams) -> Field:
    """Unit-gauge vector field for the integrator.

    Runge-Kutta stages sit O(h^2) off the gauge surface, so the field itself
    does not check u.u; pass ``gauge_tol`` to :func:`integrate` instead.
    """
    return lambda y: reduced_vec(y, params, math.inf)


def canonical_field(params: BoppParams, gauge: GaugeChoice) -> Field:
    if isinstance(gauge, UnitVelocity):
        return reduced_field(params)
    return lambda y: canonical_vec(y, params, gauge.lam, gauge.mu)


def canonical_rhs(s: CanonicalState, params: BoppParams, lam: float, mu: float) -> CanonicalState:
    """d(x, u, wp, wp1)/dtau of the general canonical system with multipliers lam, mu."""
    norm_timelike(s.u)
    return CanonicalState.from_array(canonical_vec(s.to_array(), params, lam, mu))


def reduced_rhs(s: CanonicalState, params: BoppParams, tol: float = GAUGE_TOL) -> CanonicalState:
    """Unit-gauge system: u' = wp1/a, wp1' = (A/2)u - wp - (3/2a) wp1^2 u, x' = u, wp' = 0."""
    return CanonicalState.from_array(reduced_vec(s.to_array(), params, tol))


def gauge_mu(u: FourVector, dudtau: FourVector):
    """Multiplier fixed by contracting the u-equation with u: u.(du/dtau) / |u|^2."""
    n = norm_timelike(u)
    return dot4(u, dudtau) / (n * n)


def make_initial_state(
    u0: FourVector, udot0: FourVector, uddot0: FourVector, params: BoppParams
) -> CanonicalState:
    """Unit-gauge phase point at x = 0 from an initial (u, u', u'') via the explicit momenta."""
    uu = dot4(u0, u0)
    if abs(uu - 1.0) > 1e-10:
        raise GaugeViolation(f"initial u.u = {uu!r}, expected 1")
    if abs(dot4(u0, udot0)) > 1e-10:
        raise GaugeViolation(f"initial u.u' = {dot4(u0, udot0)!r}, expected 0")
    return legendre_map(JetPoint(FourVector.zero(), u0, udot0, uddot0, order=3), params)


# -- integration -------------------------------------------------------------------


def _rk4_increment(f: Field, y: np.ndarray, h: float) -> np.ndarray:
    k1 = f(y)
    k2 = f(y + 0.5 * h * k1)
    k3 = f(y + 0.5 * h * k2)
    k4 = f(y + h * k3)
    return (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _rk4(f: Field, y: np.ndarray, h: float) -> np.ndarray:
    return y + _rk4_increment(f, y, h)


def _renormalize(y: np.ndarray) -> np.ndarray:
    u = y[4:8] / math.sqrt(_mdot(y[4:8], y[4:8]))
    wp1 = y[12:16] - _mdot(u, y[12:16]) * u
    return np.concatenate([y[0:4], u, y[8:12], wp1])


@dataclass
class Trajectory:
    tau: np.ndarray
    states: np.ndarray  # (samples, 16)
    params: BoppParams
    step: float
    stride: int
    error_estimate: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if np.any(np.diff(self.tau) <= 0):
            raise ValueError("trajectory samples must have increasing tau")
        if not np.all(np.isfinite(self.states)):
            raise ValueError("trajectory contains non-finite samples")

    def __len__(self) -> int:
        return len(self.tau)

    @property
    def dt(self) -> float:
        return self.step * self.stride

    @property
    def x(self) -> np.ndarray:
        return self.states[:, 0:4]

    @property
    def u(self) -> np.ndarray:
        return self.states[:, 4:8]

    @property
    def wp(self) -> np.ndarray:
        return self.states[:, 8:12]

    @property
    def wp1(self) -> np.ndarray:
        return self.states[:, 12:16]

    def state(self, i: int) -> CanonicalState:
        return CanonicalState.from_array(self.states[i])

    def batch_state(self, idx=slice(None)) -> CanonicalState:
        """All selected samples as one CanonicalState with array components."""
        cols = self.states[idx].T
        return CanonicalState(*(FourVector(*cols[4 * k : 4 * k + 4]) for k in range(4)))

    # monitors
    @property
    def H(self) -> np.ndarray:
        u, wp, wp1 = self.u, self.wp, self.wp1
        uu = _mdot(u, u)
        n = np.sqrt(uu)
        return _mdot(wp, u) + n * uu * _mdot(wp1, wp1) / (2 * self.params.a) - 0.5 * self.params.A * n + H_LEVEL

    @property
    def u_sq(self) -> np.ndarray:
        return _mdot(self.u, self.u)

    @property
    def wp_drift(self) -> np.ndarray:
        return np.max(np.abs(self.wp - self.wp[0]), axis=1)

    @property
    def u_wp1(self) -> np.ndarray:
        return _mdot(self.u, self.wp1)


def integrate(
    rhs: Field,
    s0: CanonicalState,
    tau_end: float,
    step: float,
    *,
    params: BoppParams,
    sample_every: int = 1,
    error_estimate: bool = True,
    renormalize: bool = False,
    max_error: float = MAX_STEP_ERROR,
    gauge_tol: float | None = None,
) -> Trajectory:
    """Fixed-step classical RK4 from tau = 0 to tau_end.

    The step is shrunk slightly if needed so an integer number of steps lands
    on tau_end. Increments are accumulated with compensated (Kahan)
    summation so round-off stays below the O(h^4) truncation error even at
    small steps. With ``error_estimate`` each step is repeated as two half
    steps and the Richardson difference (/15) is tracked per channel; the run
    aborts with StepRejected when it exceeds ``max_error``. The trajectory
    itself is always the full-step solution. ``gauge_tol`` enforces
    |u.u - 1| at every accepted step (GaugeViolation otherwise).
    """
    if step <= 0 or tau_end <= 0:
        raise ValueError("step and tau_end must be positive")
    if sample_every < 1:
        raise ValueError("sample_every must be >= 1")
    n = max(1, math.ceil(tau_end / step - 1e-9))
    h = tau_end / n
    y = s0.to_array()
    samples = [y]
    taus = [0.0]
    worst = np.zeros(4)
    carry = np.zeros(16)
    for k in range(1, n + 1):
        dy = _rk4_increment(rhs, y, h) - carry
        y_new = y + dy
        carry = (y_new - y) - dy
        if error_estimate:
            y_half = _rk4(rhs, _rk4(rhs, y, 0.5 * h), 0.5 * h)
            err = np.abs(y_new - y_half).reshape(4, 4).max(axis=1) / 15.0
            worst = np.maximum(worst, err)
            if err.max() > max_error:
                raise StepRejected(f"step-halving estimate {err.max():.3e} at tau={k * h:.6g} exceeds {max_error:g}")
        if renormalize:
            y_new = _renormalize(y_new)
            carry[:] = 0.0
        if gauge_tol is not None:
            drift = abs(_mdot(y_new[4:8], y_new[4:8]) - 1.0)
            if drift > gauge_tol:
                raise GaugeViolation(f"|u.u - 1| = {drift:.3e} at tau={k * h:.6g} exceeds {gauge_tol:g}")
        y = y_new
        if k % sample_every == 0 or k == n:
            samples.append(y)
            taus.append(k * h)
    errors = dict(zip(CHANNELS, worst.tolist())) if error_estimate else {}
    return Trajectory(np.array(taus), np.array(samples), params, h, sample_every, errors)


# -- fourth-order equation and helices ----------------------------------------------


def eom_residual(jet4: JetPoint, params: BoppParams, tol: float = GAUGE_TOL) -> FourVector:
    """u''' + ((3/2) u'^2 - A/(2a)) u' + 3 (u'.u'') u, for a unit-gauge jet."""
    uu = dot4(jet4.u, jet4.u)
    if np.any(np.abs(uu - 1.0) > tol):
        raise GaugeViolation("eom_residual needs a unit-gauge jet (u.u = 1)")
    u, u1, u2, u3 = jet4.u, jet4.udot, jet4.uddot, jet4.utdot
    coeff = 1.5 * dot4(u1, u1) - params.A / (2 * params.a)
    return u3 + u1 * coeff + u * (3 * dot4(u1, u2))


class HelixSolution(NamedTuple):
    worldline: Callable[[float], JetPoint]
    jet: JetPoint
    state: CanonicalState
    radius: float
    gamma: float
    k0: float


def helix_radius(params: BoppParams, omega: float) -> float:
    """Radius of the circular helix with spatial angular frequency omega.

    Substituting x = (gamma tau, r cos, r sin, 0) into the fourth-order equation
    gives omega^2 = -(3/2) k0^2 - A/(2a) with k0 = r omega^2.
    """
    if omega == 0:
        raise NoHelix("omega = 0 is a straight worldline, not a helix")
    r_sq = (-params.A / (2 * params.a) - omega**2) / (1.5 * omega**4)
    if not r_sq > 0:
        raise NoHelix(f"no real radius for a={params.a}, A={params.A}, omega={omega} (r^2 = {r_sq:.6g})")
    return math.sqrt(r_sq)


def helix(params: BoppParams, omega: float, phase: float = 0.0) -> HelixSolution:
    r = helix_radius(params, omega)
    gamma = math.sqrt(1.0 + (r * omega) ** 2)

    def worldline(tau: float) -> JetPoint:
        th = omega * tau + phase
        c, s = np.cos(th), np.sin(th)
        w1, w2, w3, w4 = r * omega, r * omega**2, r * omega**3, r * omega**4
        return JetPoint(
            FourVector(gamma * tau, r * c, r * s, 0.0 * c),
            FourVector(gamma + 0.0 * c, -w1 * s, w1 * c, 0.0 * c),
            FourVector(0.0 * c, -w2 * c, -w2 * s, 0.0 * c),
            FourVector(0.0 * c, w3 * s, -w3 * c, 0.0 * c),
            FourVector(0.0 * c, w4 * c, w4 * s, 0.0 * c),
            order=4,
        )

    jet = worldline(0.0)
    res = eom_residual(jet, params)
    if max(abs(c) for c in res) > 1e-10 * max(1.0, abs(params.A / params.a)):
        raise NoHelix(f"helix consistency check failed, residual {res}")
    state = legendre_map(JetPoint(jet.x, jet.u, jet.udot, jet.uddot, order=3), params)
    return HelixSolution(worldline, jet, state, r, gamma, r * omega**2)


def helix_with_radius(params_a: float, omega: float, radius: float) -> BoppParams:
    """Couplings (a, A) for which a helix of the given omega and radius exists."""
    return BoppParams(params_a, -2 * params_a * (omega**2 + 1.5 * radius**2 * omega**4))


# -- trajectory diagnostics -----------------------------------------------------------


def _d1(y: np.ndarray, h: float) -> np.ndarray:
    return (y[:-4] - 8 * y[1:-3] + 8 * y[3:-1] - y[4:]) / (12 * h)


def _d2(y: np.ndarray, h: float) -> np.ndarray:
    return (-y[:-4] + 16 * y[1:-3] - 30 * y[2:-2] + 16 * y[3:-1] - y[4:]) / (12 * h * h)


def trajectory_jets(traj: Trajectory) -> JetPoint:
    """Order-4 jets at the interior samples: u' = wp1/a, u'' from the reduced
    equations, u''' by a centred five-point stencil on u'."""
    if len(traj) < 5:
        raise ValueError("need at least five samples for the stencil")
    a = traj.params.a
    ud = traj.wp1 / a
    udd = np.array([reduced_vec(y, traj.params, math.inf)[12:16] for y in traj.states[2:-2]]) / a
    uddd = _d2(ud, traj.dt)
    mid = slice(2, -2)
    vec = lambda arr: FourVector(*arr.T)  # noqa: E731
    return JetPoint(vec(traj.x[mid]), vec(traj.u[mid]), vec(ud[mid]), vec(udd), vec(uddd), order=4)


def eom_residual_along(traj: Trajectory) -> np.ndarray:
    """Max-abs fourth-order-equation residual at each interior sample."""
    res = eom_residual(trajectory_jets(traj), traj.params)
    return np.max(np.abs(np.array(list(res))), axis=0)


@dataclass(frozen=True)
class RieweFit:
    frequency: float
    varpi_sq: float
    residual: float
    zero_crossing_frequency: float
    predicted_varpi_sq: float


def riewe_form_check(traj: Trajectory, k_tol: float = 1e-4) -> RieweFit:
    """Fit d^2 xdd/ds^2 + varpi^2 xdd = 0 to the acceleration xdd = u' of a unit-gauge run.

    ``predicted_varpi_sq`` is (3/2) u'.u' - A/(2a) at the first sample, the value the
    fourth-order equation predicts when u'.u'' = 0.
    """
    a, A = traj.params.a, traj.params.A
    xdd = traj.wp1 / a
    amp = np.max(np.abs(xdd))
    predicted = float(1.5 * _mdot(xdd[0], xdd[0]) - A / (2 * a))
    if amp < 1e-12:
        return RieweFit(0.0, 0.0, 0.0, 0.0, predicted)
    k = curvature(FourVector(*traj.u.T), FourVector(*xdd.T))
    if np.max(np.abs(k - k[0])) > k_tol:
        raise NotHelical(f"curvature varies by {np.max(np.abs(k - k[0])):.3e} > {k_tol:g}")
    if len(traj) < 5:
        raise ValueError("need at least five samples for the stencil")
    acc = _d2(xdd, traj.dt)
    mid = xdd[2:-2]
    varpi_sq = float(-np.sum(mid * acc) / np.sum(mid * mid))
    residual = float(np.max(np.abs(acc + varpi_sq * mid)) / amp)

    comp = int(np.argmax(np.max(np.abs(xdd[:, 1:]), axis=0))) + 1
    sig = xdd[:, comp]
    idx = np.nonzero(np.signbit(sig[:-1]) != np.signbit(sig[1:]))[0]
    zc = 0.0
    if len(idx) >= 2:
        t = traj.tau
        cross = t[idx] - sig[idx] * (t[idx + 1] - t[idx]) / (sig[idx + 1] - sig[idx])
        zc = math.pi * (len(cross) - 1) / (cross[-1] - cross[0])
    freq = math.sqrt(varpi_sq) if varpi_sq > 0 else 0.0
    return RieweFit(freq, varpi_sq, residual, zc, predicted)


# -- Poisson evolution ------------------------------------------------------------------


def state_gradient(f: Callable[[CanonicalState], object], s: CanonicalState) -> list[FourVector]:
    """Raw partials of f with respect to x, u, wp, wp1 (dual numbers, one pass per component)."""
    blocks = [s.x, s.u, s.wp, s.wp1]
    out = []
    for b in range(4):
        comps = []
        for i in range(4):
            tag = new_tag()
            seeded = list(blocks[b])
            seeded[i] = Dual(seeded[i], 1.0, tag)
            args = list(blocks)
            args[b] = FourVector(*seeded)
            comps.append(tangent(f(CanonicalState(*args)), tag))
        out.append(FourVector(*comps))
    return out


def poisson_bracket(f, g, s: CanonicalState):
    """{f, g} with momenta stored metric-raised, so each pairing is a dot4 of raw partials."""
    fx, fu, fp, fp1 = state_gradient(f, s)
    gx, gu, gp, gp1 = state_gradient(g, s)
    return dot4(fx, gp) + dot4(fu, gp1) - dot4(fp, gx) - dot4(fp1, gu)


def poisson_evolution_residual(f, traj: Trajectory, params: BoppParams | None = None) -> float:
    """max |df/dtau (five-point stencil) - {f, H_hom}| over interior samples (lam = 1, mu = 0)."""
    params = params or traj.params
    values = np.array([f(traj.state(i)) for i in range(len(traj))], dtype=float)
    fd = _d1(values, traj.dt)
    s = traj.batch_state(slice(2, -2))
    bracket = poisson_bracket(f, lambda q: homogeneous_H(q, params), s)
    return float(np.max(np.abs(fd - bracket)))
