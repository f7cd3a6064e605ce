"""Sparse multivariate polynomials over exact rationals.

The Hamiltonian and its partial derivatives are represented as formal
polynomials (exponent tuple -> coefficient) so that vector fields come from
actual differentiation rather than hand-transcribed formulas.  Evaluation is
duck-typed: points may be Fractions, floats, complex, or dual numbers.
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    """Polynomial in ``nvars`` variables with sparse exact coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    clean[exps] = clean.get(exps, Fraction(0)) + coeff
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    @classmethod
    def const(cls, nvars, c):
        c = Fraction(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, index):
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        return self == Poly.const(self.nvars, other)

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable-count mismatch")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, Fraction(0)) + coeff
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def diff(self, index):
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e:
                key = exps[:index] + (e - 1,) + exps[index + 1:]
                out[key] = out.get(key, Fraction(0)) + coeff * e
        return Poly(self.nvars, out)

    def eval(self, values):
        """Evaluate at a point; scalar type follows the inputs."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = None
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                for _ in range(e):
                    term = term * v
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for exps, coeff in sorted(self.terms.items()):
            mono = "*".join(f"x{i}^{e}" for i, e in enumerate(exps) if e)
            bits.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return "Poly(" + " + ".join(bits) + ")"
