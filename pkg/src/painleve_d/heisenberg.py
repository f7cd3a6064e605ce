"""Graded Heisenberg family inside so(4n+4)[z, z^-1].

Two commuting degree-one cyclic elements generate the family: the general
member with labels (k, l, which) is z^k times the l-th matrix power of the
degree-one element, l odd between 1 and 2n+1.  At level zero all brackets
within the family vanish exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chevalley import ChevalleyBasis, build_chevalley
from .loop import LoopMatrix, bracket


@dataclass(frozen=True)
class HeisenbergElement:
    n: int
    k: int
    l: int
    which: int
    value: LoopMatrix

    @property
    def degree(self):
        return (2 * self.n + 2) * self.k + self.l


def _cyclic_sum(basis: ChevalleyBasis, which: int) -> LoopMatrix:
    n = basis.n
    E = basis.E
    inner = tuple(range(3, 2 * n, 2))  # odd nodes strictly between the forks
    if which == 1:
        total = E[0] + bracket(E[1], E[2])
        for j in inner:
            total = total + E[j] + bracket(E[j - 1], bracket(E[j], E[j + 1]))
        return total + E[2 * n + 1] + bracket(E[2 * n], E[2 * n + 2])
    total = E[1] + bracket(E[0], E[2])
    for j in inner:
        total = total + bracket(E[j - 1], E[j]) + bracket(E[j], E[j + 1])
    return total + E[2 * n + 2] + bracket(E[2 * n], E[2 * n + 1])


def lambda_one(n: int, which: int, basis: ChevalleyBasis | None = None) -> HeisenbergElement:
    """The degree-one generator (which = 1 or 2)."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    basis = basis or build_chevalley(n)
    return HeisenbergElement(n, 0, 1, which, _cyclic_sum(basis, which))


def lambda_general(
    n: int, k: int, l: int, which: int, basis: ChevalleyBasis | None = None
) -> HeisenbergElement:
    """z^k (Lambda_1)^l for odd l in 1..2n+1."""
    if l % 2 == 0 or not 1 <= l <= 2 * n + 1:
        raise ValueError("power l must be odd and within 1..2n+1")
    base = lambda_one(n, which, basis).value
    power = base
    for _ in range(l - 1):
        power = power @ base
    return HeisenbergElement(n, k, l, which, power.zshift(k))
