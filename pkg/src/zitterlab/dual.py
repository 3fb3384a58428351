"""Tagged forward-mode dual numbers.

Every differentiation pass allocates a fresh tag. Duals with a higher tag are
always the outer layer, which keeps nested passes (a total derivative of a
gradient, say) free of perturbation confusion. The real and tangent parts may
be floats, numpy arrays (batched evaluation) or lower-tag duals.
"""

from __future__ import annotations

import itertools

import numpy as np

_tags = itertools.count(1)


def new_tag() -> int:
    return next(_tags)


class Dual:
    __slots__ = ("re", "eps", "tag")
    __array_ufunc__ = None  # make numpy defer to our reflected operators

    def __init__(self, re, eps, tag: int):
        self.re = re
        self.eps = eps
        self.tag = tag

    def _parts(self, other):
        if isinstance(other, Dual) and other.tag == self.tag:
            return other.re, other.eps
        return other, None

    def _outer(self, other) -> bool:
        return isinstance(other, Dual) and other.tag > self.tag

    def __add__(self, other):
        if self._outer(other):
            return other.__radd__(self)
        re, eps = self._parts(other)
        if eps is None:
            return Dual(self.re + re, self.eps, self.tag)
        return Dual(self.re + re, self.eps + eps, self.tag)

    __radd__ = __add__

    def __sub__(self, other):
        if self._outer(other):
            return other.__rsub__(self)
        re, eps = self._parts(other)
        if eps is None:
            return Dual(self.re - re, self.eps, self.tag)
        return Dual(self.re - re, self.eps - eps, self.tag)

    def __rsub__(self, other):
        return Dual(other - self.re, -self.eps, self.tag)

    def __neg__(self):
        return Dual(-self.re, -self.eps, self.tag)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if self._outer(other):
            return other.__rmul__(self)
        re, eps = self._parts(other)
        if eps is None:
            return Dual(self.re * re, self.eps * re, self.tag)
        return Dual(self.re * re, self.re * eps + self.eps * re, self.tag)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if self._outer(other):
            return other.__rtruediv__(self)
        re, eps = self._parts(other)
        if eps is None:
            return Dual(self.re / re, self.eps / re, self.tag)
        q = self.re / re
        return Dual(q, (self.eps - q * eps) / re, self.tag)

    def __rtruediv__(self, other):
        q = other / self.re
        return Dual(q, -q * self.eps / self.re, self.tag)

    def __pow__(self, n):
        if isinstance(n, Dual):
            raise TypeError("dual exponents are not supported")
        if n == 2:
            return self * self
        return Dual(self.re**n, n * self.re ** (n - 1) * self.eps, self.tag)

    def __repr__(self) -> str:
        return f"Dual({self.re!r}, {self.eps!r}, tag={self.tag})"


def sqrt(x):
    if isinstance(x, Dual):
        s = sqrt(x.re)
        return Dual(s, x.eps / (2 * s), x.tag)
    return np.sqrt(x)


def real_part(x):
    """Strip every dual layer and return the underlying float or array."""
    while isinstance(x, Dual):
        x = x.re
    return x


def tangent(y, tag: int):
    """Coefficient of the infinitesimal with the given tag (zero if y is constant in it)."""
    if isinstance(y, Dual) and y.tag == tag:
        return y.eps
    return 0.0


def derivative(f, x0):
    """d f / d x at x0 for a scalar function of one variable."""
    tag = new_tag()
    return tangent(f(Dual(x0, 1.0, tag)), tag)
