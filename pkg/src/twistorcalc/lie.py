"""Weyl dimension formula for so(2n) and the closed forms of dim A_k, dim B_k."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import UniPoly
from .errors import NonDominant
from .geometry import IndexPolynomial

__all__ = ["RootSystemDn", "DominantWeight", "weyl_dim", "dim_closed"]


@dataclass(frozen=True)
class DominantWeight:
    lam: tuple

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
            raise NonDominant(f"{lam} is not weakly decreasing and nonnegative")

    def __len__(self):
        return len(self.lam)


@dataclass(frozen=True)
class RootSystemDn:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("D_n needs n >= 2")

    @property
    def positive_roots(self) -> list[tuple]:
        """e_i + e_j for i<j, then e_i - e_j for i<j."""
        n = self.n
        plus, minus = [], []
        for i in range(n):
            for j in range(i + 1, n):
                r = [0] * n
                r[i] = r[j] = 1
                plus.append(tuple(r))
                r = [0] * n
                r[i], r[j] = 1, -1
                minus.append(tuple(r))
        return plus + minus

    @property
    def rho(self) -> tuple:
        return tuple(range(self.n - 1, -1, -1))


def weyl_dim(n: int, weight: Sequence[int] | DominantWeight) -> int:
    """Dimension of the irreducible so(2n)-module with the given highest weight."""
    w = weight if isinstance(weight, DominantWeight) else DominantWeight(tuple(weight))
    if len(w) != n:
        raise ValueError(f"weight has length {len(w)}, expected {n}")
    R = RootSystemDn(n)
    rho = R.rho
    shifted = [a + b for a, b in zip(rho, w.lam)]
    num = den = 1
    for alpha in R.positive_roots:
        num *= sum(a * x for a, x in zip(alpha, shifted))
        den *= sum(a * x for a, x in zip(alpha, rho))
    q = Fraction(num, den)
    assert q.denominator == 1 and q > 0
    return int(q)


def dim_closed(which: str) -> IndexPolynomial:
    """Closed-form dim A_k (``"A"``) or dim B_k (``"B"``) as polynomials in k."""
    lin = lambda a, b: UniPoly((b, a))  # a*k + b
    if which == "A":
        p = (lin(1, 1) * lin(1, 2) ** 3 * lin(2, 5) * lin(1, 3) ** 3 * lin(1, 4)) * Fraction(1, 4320)
    elif which == "B":
        p = (lin(1, 0) * lin(1, 1) ** 2 * lin(1, 2) * lin(2, 5) * lin(1, 3) * lin(1, 4) ** 2
             * lin(1, 5)) * Fraction(1, 1440)
    else:
        raise ValueError("which must be 'A' or 'B'")
    return IndexPolynomial(p, f"closed-{which}")
