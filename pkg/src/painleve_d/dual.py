"""First-order dual numbers over exact rationals.

Used to take exact directional derivatives (Jacobian-vector products) of the
birational symmetry maps: evaluating a map at ``x + eps*v`` returns its value
and its derivative along ``v`` with no truncation error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Dual:
    """a + b*eps with eps^2 = 0; components are exact rationals."""

    a: Fraction
    b: Fraction

    @staticmethod
    def lift(x):
        return x if isinstance(x, Dual) else Dual(Fraction(x), Fraction(0))

    def __add__(self, other):
        other = Dual.lift(other)
        return Dual(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Dual.lift(other))

    def __rsub__(self, other):
        return Dual.lift(other) - self

    def __mul__(self, other):
        other = Dual.lift(other)
        return Dual(self.a * other.a, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Dual.lift(other)
        if other.a == 0:
            raise ZeroDivisionError("dual division with zero value part")
        value = self.a / other.a
        return Dual(value, (self.b - value * other.b) / other.a)

    def __rtruediv__(self, other):
        return Dual.lift(other) / self

    def __pow__(self, k):
        result = Dual(Fraction(1), Fraction(0))
        base = self
        if k < 0:
            base = Dual(Fraction(1), Fraction(0)) / base
            k = -k
        for _ in range(k):
            result = result * base
        return result

    def __eq__(self, other):
        other = Dual.lift(other)
        return self.a == other.a and self.b == other.b
