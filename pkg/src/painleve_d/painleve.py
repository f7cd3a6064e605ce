"""The coupled sixth-Painleve Hamiltonian system of rank n.

Parameters are the 2n+3 root variables alpha_0..alpha_{2n+2} with the
normalization alpha_0 + alpha_1 + 2*sum(alpha_2..alpha_2n) + alpha_{2n+1}
+ alpha_{2n+2} = 1.  The Hamiltonian is built as a formal polynomial in
(q_1..q_n, p_1..p_n, s); vector fields come from formal differentiation, so
rational inputs give exact rational outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import Poly


@dataclass(frozen=True)
class SystemParams:
    n: int
    alpha: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank label n must be >= 1")
        if len(self.alpha) != 2 * self.n + 3:
            raise ValueError("expected 2n+3 root parameters")
        total = self.normalization_sum()
        if isinstance(total, Fraction):
            if total != 1:
                raise ValueError(f"parameters not normalized: sum = {total}")
        elif not math.isclose(total, 1.0, rel_tol=0, abs_tol=1e-9):
            raise ValueError(f"parameters not normalized: sum = {total}")

    def normalization_sum(self):
        a = self.alpha
        n = self.n
        return a[0] + a[1] + 2 * sum(a[2 : 2 * n + 1]) + a[2 * n + 1] + a[2 * n + 2]

    def to_float(self):
        return SystemParams(self.n, tuple(float(a) for a in self.alpha))


@dataclass(frozen=True)
class PhaseState:
    s: object
    q: tuple
    p: tuple

    def __post_init__(self):
        if len(self.q) != len(self.p):
            raise ValueError("q and p must have equal length")

    @property
    def n(self):
        return len(self.q)

    def to_float(self):
        return PhaseState(float(self.s), tuple(map(float, self.q)), tuple(map(float, self.p)))


@dataclass(frozen=True)
class DerivedBetas:
    """Per-block parameter combinations beta_{i,0|1|3|4}, i = 1..n."""

    n: int
    table: tuple  # table[i-1] = (b0, b1, b3, b4)

    def __getitem__(self, i):
        return self.table[i - 1]


def beta(params: SystemParams, i: int, kind: int):
    """beta_{i,kind}; kinds 3 and 4 extend naturally to i = n+1 (empty sums)."""
    a, n = params.alpha, params.n
    if kind == 0:
        return a[1] + sum(a[2 * j + 1] for j in range(1, i))
    if kind == 1:
        return a[0] + sum(2 * a[2 * j] for j in range(1, i)) + sum(
            a[2 * j + 1] for j in range(1, i)
        )
    if kind == 3:
        return (
            sum(a[2 * j + 1] for j in range(i, n))
            + sum(2 * a[2 * j] for j in range(i + 1, n + 1))
            + a[2 * n + 1]
        )
    if kind == 4:
        return sum(a[2 * j + 1] for j in range(i, n)) + a[2 * n + 2]
    raise ValueError("beta kind must be one of 0, 1, 3, 4")


def derived_betas(params: SystemParams) -> DerivedBetas:
    rows = tuple(
        tuple(beta(params, i, k) for k in (0, 1, 3, 4)) for i in range(1, params.n + 1)
    )
    return DerivedBetas(params.n, rows)


# -- Hamiltonian as a polynomial in (q_1..q_n, p_1..p_n, s) -----------------


def _vars(n):
    nv = 2 * n + 1
    q = [Poly.var(nv, i) for i in range(n)]
    p = [Poly.var(nv, n + i) for i in range(n)]
    s = Poly.var(nv, 2 * n)
    return q, p, s


@lru_cache(maxsize=None)
def hamiltonian_poly(params: SystemParams) -> Poly:
    """H = sum of n sixth-Painleve blocks plus the quadratic couplings."""
    n = params.n
    a = params.alpha
    q, p, s = _vars(n)
    H = Poly.const(2 * n + 1, 0)
    for i in range(1, n + 1):
        qi, pi = q[i - 1], p[i - 1]
        b0 = beta(params, i, 0)
        b1 = beta(params, i, 1)
        b3 = beta(params, i, 3)
        b4 = beta(params, i, 4)
        H = H + qi * (qi - 1) * (qi - s) * pi * pi
        H = H - ((b1 - 1) * qi * (qi - 1) + b3 * (qi - 1) * (qi - s) + b4 * qi * (qi - s)) * pi
        H = H + (a[2 * i] * (a[2 * i] + b0)) * qi
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            qi, pi = q[i - 1], p[i - 1]
            qj, pj = q[j - 1], p[j - 1]
            H = H + 2 * (qi - s) * pi * qj * ((qj - 1) * pj + a[2 * j])
    return H


@lru_cache(maxsize=None)
def _field_polys(params: SystemParams):
    H = hamiltonian_poly(params)
    n = params.n
    dq = tuple(H.diff(n + i) for i in range(n))      # dH/dp_i
    dp = tuple(-H.diff(i) for i in range(n))         # -dH/dq_i
    return dq, dp


def hamiltonian(state: PhaseState, params: SystemParams):
    values = state.q + state.p + (state.s,)
    return hamiltonian_poly(params).eval(values)


def scaled_vector_field(state: PhaseState, params: SystemParams):
    """(s(s-1) dq/ds, s(s-1) dp/ds): polynomial, exact on rational input."""
    dq, dp = _field_polys(params)
    values = state.q + state.p + (state.s,)
    return tuple(f.eval(values) for f in dq), tuple(f.eval(values) for f in dp)


def vector_field(state: PhaseState, params: SystemParams):
    """(dq/ds, dp/ds); requires s outside {0, 1}."""
    if state.s == 0 or state.s == 1:
        raise ValueError("vector field is singular at s in {0, 1}")
    wq, wp = scaled_vector_field(state, params)
    denom = state.s * (state.s - 1)
    return tuple(v / denom for v in wq), tuple(v / denom for v in wp)


# -- coordinate dictionary ----------------------------------------------------


@dataclass(frozen=True)
class PhiVector:
    """Values phi_0..phi_{2n+2} of the root-coordinate dictionary."""

    n: int
    values: tuple

    def __getitem__(self, i):
        return self.values[i]


def phi_coords(state: PhaseState, params: SystemParams) -> PhiVector:
    """Dictionary slots: (1/(2n+2), q1-s, -p1/(2n+2), q2-q1, -p2/(2n+2), ...,
    1-qn, -qn)."""
    n = params.n
    kappa = 2 * n + 2
    q, p, s = state.q, state.p, state.s
    one = Fraction(1) if isinstance(s, Fraction) else 1.0
    vals = [one / kappa, q[0] - s]
    for i in range(1, n):
        vals.append(-p[i - 1] / kappa)
        vals.append(q[i] - q[i - 1])
    vals.append(-p[n - 1] / kappa)
    vals.append(1 - q[n - 1])
    vals.append(-q[n - 1])
    return PhiVector(n, tuple(vals))


def phi_to_state(phi: PhiVector, s) -> PhaseState:
    """Invert the dictionary; the redundant slots are rechecked exactly."""
    n = phi.n
    kappa = 2 * n + 2
    v = phi.values
    if len(v) != 2 * n + 3:
        raise ValueError("wrong number of dictionary slots")
    p = tuple(-kappa * v[2 * j] for j in range(1, n + 1))
    q = [None] * n
    q[n - 1] = -v[2 * n + 2]
    for i in range(n - 1, 0, -1):
        q[i - 1] = q[i] - v[2 * i + 1]
    if v[0] * kappa != 1:
        raise ValueError("slot 0 must hold the constant 1/(2n+2)")
    if v[1] != q[0] - s:
        raise ValueError("inconsistent dictionary: slot 1 disagrees with q1 - s")
    if v[2 * n + 1] - v[2 * n + 2] != 1:
        raise ValueError("inconsistent dictionary: tail slots must differ by 1")
    return PhaseState(s, tuple(q), p)
