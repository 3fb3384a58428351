"""Seeded random jets.

The generator is xorshift64* (Vigna): state update
``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` on 64 bits, output
``x * 0x2545F4914F6CDD1D mod 2^64``. The seed is expanded into a nonzero state
by one round of splitmix64. A uniform double on [0, 1) is ``(out >> 11) * 2^-53``.
Jets are drawn level by level: u is redrawn (four fresh uniforms on [-2, 2])
until u.u >= 0.25 and its time component is replaced by its absolute value
(future-pointing, so x^0 grows along the curve), then x, u', u'', u''' in that order, each component in
t, s1, s2, s3 order. Levels above the requested order are not drawn.
"""

from __future__ import annotations

import numpy as np

from .jetcalc import JetPoint
from .minkowski import FourVector, dot4

_MASK = (1 << 64) - 1
LOW, HIGH = -2.0, 2.0
MIN_UU = 0.25


def splitmix64(seed: int) -> int:
    z = (seed + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & _MASK) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def uniform(self, low: float, high: float) -> float:
        return low + (high - low) * self.random()


def _vec(rng: XorShift64Star) -> FourVector:
    return FourVector(*(rng.uniform(LOW, HIGH) for _ in range(4)))


def random_jet(rng: XorShift64Star, order: int = 3) -> JetPoint:
    while True:
        u = _vec(rng)
        if dot4(u, u) >= MIN_UU:
            break
    u = FourVector(abs(u.t), u.s1, u.s2, u.s3)
    x = _vec(rng)
    levels = [_vec(rng) if k < order else FourVector.zero() for k in range(1, 4)]
    return JetPoint(x, u, *levels, order=order)


def random_jets(seed: int, count: int, order: int = 3) -> list[JetPoint]:
    rng = XorShift64Star(seed)
    return [random_jet(rng, order) for _ in range(count)]


def stack_jets(jets: list[JetPoint]) -> JetPoint:
    """Pack a list of jets into one jet whose components are arrays (batched evaluation)."""
    order = jets[0].order
    if any(j.order != order for j in jets):
        raise ValueError("cannot stack jets of different order")

    def level(name):
        return FourVector(*np.array([list(getattr(j, name)) for j in jets], dtype=float).T)

    return JetPoint(*(level(n) for n in ("x", "u", "udot", "uddot", "utdot")), order=order)
