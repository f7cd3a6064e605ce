"""Sparse Laurent-polynomial matrices: finite sums  sum_k z^k A_k.

Elements of the loop algebra so(4n+4)[z, z^-1] live here.  Coefficient
matrices are sparse dicts keyed by 1-based (row, col); entries are exact
rationals in verification paths, floats or complex in numeric paths.
The z-grading is respected by every operation: (z^j A)(z^k B) contributes
at degree j+k.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


class LoopMatrix:
    """Immutable sparse square matrix over Laurent polynomials in z."""

    __slots__ = ("size", "terms")

    def __init__(self, size, terms=None):
        self.size = size
        clean = {}
        if terms:
            for degree, mat in terms.items():
                entries = {pos: val for pos, val in mat.items() if val}
                if entries:
                    clean[degree] = entries
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, size):
        return cls(size, {})

    @classmethod
    def unit(cls, size, i, j, value=Fraction(1), degree=0):
        """z^degree * E_{i,j} (1-based indices)."""
        if not (1 <= i <= size and 1 <= j <= size):
            raise ValueError("matrix-unit index out of range")
        return cls(size, {degree: {(i, j): value}})

    @classmethod
    def diagonal(cls, values, degree=0):
        size = len(values)
        return cls(size, {degree: {(i + 1, i + 1): v for i, v in enumerate(values) if v}})

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted(self.terms)

    def coeff(self, degree):
        """Sparse dict of the z^degree coefficient matrix."""
        return dict(self.terms.get(degree, {}))

    def entry(self, degree, i, j):
        return self.terms.get(degree, {}).get((i, j), Fraction(0))

    def entries(self):
        for degree, mat in self.terms.items():
            for (i, j), val in mat.items():
                yield degree, i, j, val

    def max_abs(self):
        """Largest |entry| as a float; 0.0 for the zero matrix."""
        return max((abs(float(v)) for _, _, _, v in self.entries()), default=0.0)

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if self.size != other.size:
            raise ValueError("matrix size mismatch")

    def __add__(self, other):
        self._check(other)
        out = {d: dict(m) for d, m in self.terms.items()}
        for d, mat in other.terms.items():
            tgt = out.setdefault(d, {})
            for pos, val in mat.items():
                tgt[pos] = tgt.get(pos, 0) + val
        return LoopMatrix(self.size, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LoopMatrix(
            self.size,
            {d: {pos: -v for pos, v in m.items()} for d, m in self.terms.items()},
        )

    def __mul__(self, scalar):
        if isinstance(scalar, LoopMatrix):
            raise TypeError("use @ for matrix products")
        return LoopMatrix(
            self.size,
            {d: {pos: v * scalar for pos, v in m.items()} for d, m in self.terms.items()},
        )

    __rmul__ = __mul__

    def __matmul__(self, other):
        self._check(other)
        rows = {}
        for d, mat in other.terms.items():
            by_row = rows.setdefault(d, {})
            for (i, j), val in mat.items():
                by_row.setdefault(i, []).append((j, val))
        out = {}
        for d1, mat in self.terms.items():
            for d2, other_rows in rows.items():
                tgt = out.setdefault(d1 + d2, {})
                for (i, k), val in mat.items():
                    for j, w in other_rows.get(k, ()):
                        tgt[(i, j)] = tgt.get((i, j), 0) + val * w
        return LoopMatrix(self.size, out)

    def zshift(self, k):
        """Multiply by z^k."""
        return LoopMatrix(self.size, {d + k: dict(m) for d, m in self.terms.items()})

    def zscale_by_degree(self):
        """Apply z d/dz: scale each z^k coefficient by k."""
        return LoopMatrix(
            self.size,
            {d: {pos: v * d for pos, v in m.items()} for d, m in self.terms.items() if d},
        )

    def transpose(self):
        return LoopMatrix(
            self.size,
            {d: {(j, i): v for (i, j), v in m.items()} for d, m in self.terms.items()},
        )

    def __eq__(self, other):
        return (
            isinstance(other, LoopMatrix)
            and self.size == other.size
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("unhashable")

    def __repr__(self):
        n = sum(len(m) for m in self.terms.values())
        return f"LoopMatrix(size={self.size}, degrees={self.degrees()}, nnz={n})"

    # -- numeric view --------------------------------------------------------

    def to_dense(self, z):
        """Evaluate at a numeric z; returns a complex ndarray."""
        out = np.zeros((self.size, self.size), dtype=complex)
        for d, mat in self.terms.items():
            zk = z**d
            for (i, j), val in mat.items():
                out[i - 1, j - 1] += complex(val) * zk
        return out


def bracket(a: LoopMatrix, b: LoopMatrix) -> LoopMatrix:
    """Matrix commutator [a, b] = ab - ba."""
    return a @ b - b @ a


def invariant_form(a: LoopMatrix, b: LoopMatrix):
    """Normalized trace form (a|b) = 1/2 tr(ab), pairing z^k with z^-k."""
    a._check(b)
    total = Fraction(0)
    for d, mat in a.terms.items():
        other = b.terms.get(-d)
        if not other:
            continue
        for (i, j), val in mat.items():
            w = other.get((j, i))
            if w:
                total = total + val * w
    return total / 2


def exchange_matrix(size) -> LoopMatrix:
    """Anti-diagonal J defining the orthogonal form."""
    return LoopMatrix(size, {0: {(i, size + 1 - i): Fraction(1) for i in range(1, size + 1)}})


def check_so_membership(a: LoopMatrix) -> bool:
    """True iff every z-coefficient X satisfies J X + X^t J = 0."""
    j = exchange_matrix(a.size)
    return (j @ a + a.transpose() @ j).is_zero()
