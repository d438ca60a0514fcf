"""Exact rational substrate: univariate polynomials, Bernoulli numbers,
linear solving and truncated power series.

Rationals are :class:`fractions.Fraction` throughout; they are always kept in
lowest terms with a positive denominator by the standard library.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .errors import SingularMatrix

__all__ = [
    "Fraction",
    "UniPoly",
    "bernoulli",
    "solve_linear_system",
    "nullspace",
    "poly_substitute_affine",
    "interpolate",
    "series_mul",
    "series_div",
    "series_inverse",
    "series_log",
    "series_exp",
]

NEG_INF = float("-inf")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class UniPoly:
    """Dense univariate polynomial with :class:`Fraction` coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``. Instances are immutable and
    hashable, so they can serve as coefficients of ring elements.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # construction helpers
    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "UniPoly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    @classmethod
    def coerce(cls, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return cls((other,))

    @property
    def degree(self):
        """Index of the leading coefficient; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, (UniPoly, int, Fraction)):
            return NotImplemented
        o = UniPoly.coerce(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return UniPoly((a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0)
                       for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, (UniPoly, int, Fraction)):
            return NotImplemented
        return self + (-UniPoly.coerce(other))

    def __rsub__(self, other):
        return UniPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(c / other for c in self.coeffs)
        if isinstance(other, UniPoly) and other.is_constant() and other:
            return self / other[0]
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = UniPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "UniPoly"):
        other = UniPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = 1 / other.lead
        if len(rem) - 1 < db:
            return UniPoly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i] * inv_lead
            if c:
                quo[i - db] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - db + j] -= c * b
        return UniPoly(quo), UniPoly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> "UniPoly":
        p = self
        for _ in range(order):
            p = UniPoly(i * c for i, c in enumerate(p.coeffs) if i)
        return p

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self) -> "UniPoly":
        return self / self.lead if self else self

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self[0]

    def format(self, var: str = "k") -> str:
        """Render in descending powers, e.g. ``1/45*k^6 + 2/15*k^5 - 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"UniPoly({self.format()})"


def poly_substitute_affine(p: UniPoly, alpha, beta) -> UniPoly:
    """Return ``q`` with ``q(k) = p(alpha*k + beta)`` by binomial expansion."""
    alpha, beta = _frac(alpha), _frac(beta)
    out = [Fraction(0)] * len(p.coeffs)
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        # (alpha k + beta)^i = sum_j C(i,j) alpha^j beta^(i-j) k^j
        for j in range(i + 1):
            out[j] += c * comb(i, j) * alpha ** j * beta ** (i - j)
    return UniPoly(out)


def interpolate(points: Sequence[tuple]) -> UniPoly:
    """Exact interpolating polynomial through ``(x, y)`` pairs (Newton form)."""
    xs = [_frac(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    table = [_frac(y) for _, y in points]
    n = len(xs)
    coefs = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i])
                 for i in range(n - level)]
        coefs.append(table[0])
    result = UniPoly()
    for i in range(n - 1, -1, -1):
        result = result * UniPoly((-xs[i], 1)) + coefs[i]
    return result


_bernoulli_lock = threading.Lock()
_bernoulli_even: list[Fraction] = [Fraction(1)]  # classical B_0, B_2, B_4, ...


def bernoulli(j: int) -> Fraction:
    """Bernoulli number B_j in the positive convention (B_1=1/6, B_2=1/30, ...).

    ``bernoulli(j) == |B_{2j}|`` in the classical indexing.
    """
    if not isinstance(j, int) or j < 1:
        raise ValueError("bernoulli(j) requires an integer j >= 1")
    with _bernoulli_lock:
        while len(_bernoulli_even) <= j:
            m = len(_bernoulli_even)
            n = 2 * m
            # sum_{r=0}^{n} C(n+1, r) B_r = 0 with B_1 = -1/2, odd B_r = 0 for r>1
            s = Fraction(-(n + 1), 2)
            for i, b in enumerate(_bernoulli_even):
                s += comb(n + 1, 2 * i) * b
            _bernoulli_even.append(-s / (n + 1))
        return abs(_bernoulli_even[j])


def _as_matrix(A) -> list[list[Fraction]]:
    rows = [[_frac(x) for x in row] for row in A]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows have different lengths")
    return rows


def solve_linear_system(A, b) -> list[Fraction]:
    """Solve ``A x = b`` exactly by Gaussian elimination.

    Raises :class:`SingularMatrix` when ``A`` is not invertible.
    """
    M = _as_matrix(A)
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("solve_linear_system needs a square matrix")
    if len(b) != n:
        raise ValueError("right-hand side has the wrong length")
    for r, bi in zip(M, b):
        r.append(_frac(bi))
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot in column {col}")
        M[col], M[pivot] = M[pivot], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def nullspace(A) -> list[list[Fraction]]:
    """Basis of the right kernel of ``A`` (reduced row echelon form)."""
    M = _as_matrix(A)
    if not M:
        return []
    cols = len(M[0])
    pivots = []
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, len(M)) if M[r][col] != 0), None)
        if pivot is None:
            continue
        M[row], M[pivot] = M[pivot], M[row]
        inv = 1 / M[row][col]
        M[row] = [x * inv for x in M[row]]
        for r in range(len(M)):
            if r != row and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[row])]
        pivots.append(col)
        row += 1
        if row == len(M):
            break
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        vec = [Fraction(0)] * cols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -M[r][free]
        basis.append(vec)
    return basis


# Truncated power series: lists of coefficients, index = power.
# Coefficients may be Fractions or UniPolys; the constant term of a divisor
# must be a nonzero Fraction.

def series_mul(a: Sequence, b: Sequence, n: int) -> list:
    out = [Fraction(0)] * n
    for i in range(min(n, len(a))):
        if not a[i]:
            continue
        for j in range(min(n - i, len(b))):
            out[i + j] = out[i + j] + a[i] * b[j]
    return out


def series_div(num: Sequence, den: Sequence, n: int) -> list:
    """First ``n`` coefficients of ``num/den``; requires ``den[0] != 0``."""
    d0 = den[0]
    if not d0:
        raise ZeroDivisionError("series division by a series with zero constant term")
    inv = 1 / _frac(d0)
    q: list = []
    for j in range(n):
        acc = num[j] if j < len(num) else Fraction(0)
        for i in range(max(0, j - len(den) + 1), j):
            acc = acc - q[i] * den[j - i]
        q.append(acc * inv)
    return q


def series_inverse(a: Sequence, n: int) -> list:
    return series_div([Fraction(1)], a, n)


def series_log(a: Sequence, n: int) -> list:
    """log of a series with constant term 1, via log(a)' = a'/a."""
    if _frac(a[0]) != 1:
        raise ValueError("series_log needs constant term 1")
    da = [i * a[i] for i in range(1, min(len(a), n))]
    q = series_div(da, a, n - 1)
    return [Fraction(0)] + [q[i] / (i + 1) for i in range(n - 1)]


def series_exp(a: Sequence, n: int) -> list:
    """exp of a series with zero constant term, via exp(a)' = a' exp(a)."""
    if len(a) and a[0]:
        raise ValueError("series_exp needs zero constant term")
    out = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for m in range(1, n):
        acc = Fraction(0)
        for i in range(1, min(m, len(a) - 1) + 1):
            acc += i * a[i] * out[m - i]
        out[m] = acc / m
    return out


def exp_series_coeffs(scale, n: int) -> list:
    """Coefficients of exp(scale * x) up to x**(n-1)."""
    return [scale ** i / factorial(i) for i in range(n)]
