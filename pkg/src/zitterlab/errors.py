"""Exception hierarchy shared by every module."""


class ZitterError(Exception):
    """Base class for all domain errors raised by zitterlab."""


class NonTimelike(ZitterError):
    """A velocity that should be timelike has u.u <= 0."""


class NegativeRadicand(ZitterError):
    """The bivector u' ^ u is not spacelike, so its norm is undefined."""


class OrderTooLow(ZitterError):
    """A jet does not carry enough derivative levels for the requested operation."""


class ZeroTimeComponent(ZitterError):
    """u^0 vanishes and the contact chart breaks down."""


class SuperluminalVelocity(ZitterError):
    """1 + v.v <= 0 in the contact chart."""


class RankConditionError(ZitterError, ValueError):
    """The curvature coupling a is zero, so the Hessian in u' has rank below dim M - 1."""


class GaugeViolation(ZitterError):
    """The unit-velocity gauge u.u = 1 (or u.u' = 0) is violated."""


class StepRejected(ZitterError):
    """The step-halving error estimate exceeds the accepted bound."""


class NoHelix(ZitterError):
    """No helical solution with real positive radius exists for the given couplings."""


class NotHelical(ZitterError):
    """A trajectory does not keep constant curvature, so the helix test does not apply."""
