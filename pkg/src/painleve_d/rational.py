"""Exact rational scalars and small exact linear solves.

All identity checks in this package run over arbitrary-precision rationals;
``fractions.Fraction`` already provides the canonical reduced form (positive
denominator, gcd-free) and exact field arithmetic, so it is the scalar type.
"""

from __future__ import annotations

from fractions import Fraction

ExactScalar = Fraction

Q = Fraction  # short constructor, used pervasively in tests and fixtures


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (or a bare integer string) into an exact rational."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render an exact rational as "num/den", or "num" when integral."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def linear_solve(rows, rhs):
    """Solve A x = b exactly by Gaussian elimination over Fraction.

    ``rows`` is a list of equal-length lists.  Returns the unique solution or
    raises ValueError when the system is singular or inconsistent.  Intended
    for the small dense systems that arise here (a few dozen unknowns).
    """
    m = len(rows)
    if m == 0:
        return []
    ncols = len(rows[0])
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][ncols] != 0:
            raise ValueError("inconsistent linear system")
    if len(pivots) < ncols:
        raise ValueError("underdetermined linear system")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return x
