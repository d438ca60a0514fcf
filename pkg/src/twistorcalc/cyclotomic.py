"""Exact arithmetic in cyclotomic fields and the rank-2 Verlinde number.

Q(zeta_n) is realized as Q[x]/Phi_n(x) with ``zeta = x``; for the Verlinde
sum ``n = 4m`` so that ``zeta = exp(i pi / 2m)`` and ``i = zeta^m``.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .arith import UniPoly
from .errors import FloatUnreliable, NonIntegral, NotInvertible

__all__ = [
    "cyclotomic_polynomial",
    "CyclotomicElement",
    "VerlindeParams",
    "cosec_power",
    "verlinde_number",
    "verlinde_float",
    "FLOAT_MAX_GENUS",
    "FLOAT_MAX_LEVEL",
]

FLOAT_MAX_GENUS = 6
FLOAT_MAX_LEVEL = 20
FLOAT_RTOL = 1e-6

_cyclo_lock = threading.Lock()
_cyclo_cache: dict[int, UniPoly] = {}


def cyclotomic_polynomial(n: int) -> UniPoly:
    """Phi_n: x^n - 1 divided by Phi_d for every proper divisor d of n."""
    if n < 1:
        raise ValueError("n must be positive")
    with _cyclo_lock:
        return _cyclo(n)


def _cyclo(n: int) -> UniPoly:
    hit = _cyclo_cache.get(n)
    if hit is not None:
        return hit
    p = UniPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            q, r = divmod(p, _cyclo(d))
            assert not r
            p = q
    _cyclo_cache[n] = p
    return p


def _ext_gcd(a: UniPoly, b: UniPoly):
    """``(g, s)`` with ``s*a = g (mod b)`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly.const(1), UniPoly()
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    lead = r0.lead
    return r0 / lead, s0 / lead


class CyclotomicElement:
    """Residue class of a rational polynomial modulo Phi_n.

    Stored as integer numerators over one positive common denominator, which
    keeps multiplication and reduction in integer arithmetic.
    """

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, coeffs):
        p = coeffs if isinstance(coeffs, UniPoly) else UniPoly(coeffs)
        den = 1
        for c in p.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [int(c * den) for c in p.coeffs]
        self._set(n, num, den)

    def _set(self, n: int, num: list, den: int) -> None:
        self.n = n
        num = _reduce(num, _int_cyclo(n))
        g = den
        for c in num:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.num = tuple(num)
        self.den = den

    @classmethod
    def _raw(cls, n: int, num: list, den: int) -> "CyclotomicElement":
        obj = cls.__new__(cls)
        obj._set(n, num, den)
        return obj

    @property
    def coeffs(self) -> UniPoly:
        return UniPoly(Fraction(c, self.den) for c in self.num)

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> "CyclotomicElement":
        power %= n
        return cls._raw(n, [0] * power + [1], 1)

    @classmethod
    def rational(cls, n: int, q) -> "CyclotomicElement":
        q = Fraction(q)
        return cls._raw(n, [q.numerator], q.denominator)

    def _lift(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            if other.n != self.n:
                raise ValueError("elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.rational(self.n, other)
        raise TypeError(f"cannot combine with {type(other).__name__}")

    def __add__(self, other):
        o = self._lift(other)
        a = [c * o.den for c in self.num]
        b = [c * self.den for c in o.num]
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return CyclotomicElement._raw(self.n, out, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement._raw(self.n, [-c for c in self.num], self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.num or not o.num:
            return CyclotomicElement._raw(self.n, [], 1)
        out = [0] * (len(self.num) + len(o.num) - 1)
        for i, x in enumerate(self.num):
            if x:
                for j, y in enumerate(o.num):
                    out[i + j] += x * y
        return CyclotomicElement._raw(self.n, out, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if not self.num:
            raise NotInvertible("zero has no inverse")
        g, s = _ext_gcd(self.coeffs, cyclotomic_polynomial(self.n))
        if g.degree != 0:
            raise NotInvertible(f"{self} shares a factor with Phi_{self.n}")
        return CyclotomicElement(self.n, s)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, e: int):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = CyclotomicElement.rational(self.n, 1)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.rational(self.n, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.n == other.n and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.n, self.num, self.den))

    def is_rational(self) -> bool:
        return len(self.num) <= 1

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0] if self.num else 0, self.den)

    def to_complex(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.n), math.sin(2 * math.pi / self.n))
        return sum((c / self.den * z ** i for i, c in enumerate(self.num)), 0j)

    def __repr__(self):
        return f"CyclotomicElement({self.n}, {self.coeffs.format('z')})"


_int_cyclo_cache: dict[int, tuple] = {}


def _int_cyclo(n: int) -> tuple:
    hit = _int_cyclo_cache.get(n)
    if hit is None:
        hit = tuple(int(c) for c in cyclotomic_polynomial(n).coeffs)
        _int_cyclo_cache[n] = hit
    return hit


def _reduce(num: list, phi: tuple) -> list:
    """Remainder of an integer polynomial modulo a monic integer polynomial."""
    num = list(num)
    d = len(phi) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            for j in range(d):
                num[i - d + j] -= c * phi[j]
            num[i] = 0
    del num[d:]
    while num and num[-1] == 0:
        num.pop()
    return num


@dataclass(frozen=True)
class VerlindeParams:
    genus: int
    level: int

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("genus must be at least 2")
        if self.level < 1:
            raise ValueError("level must be at least 1")


def cosec_power(i: int, m: int, exponent: int) -> CyclotomicElement:
    """cosec(i pi / 2m) ** exponent in Q(zeta_{4m})."""
    if not 1 <= i <= 2 * m - 1:
        raise ValueError("need 1 <= i <= 2m-1")
    if exponent < 2 or exponent % 2:
        raise ValueError("exponent must be even and at least 2")
    n = 4 * m
    z = CyclotomicElement.zeta
    imag = z(n, m)
    denom = z(n, i) - z(n, n - i)  # zeta^i - zeta^{-i} = 2i sin
    try:
        cosec = 2 * imag * denom.inverse()
    except NotInvertible as exc:  # pragma: no cover - cannot happen for valid i
        raise NotInvertible(f"sin({i}pi/{2 * m}) vanished") from exc
    return cosec ** exponent


def verlinde_number(params: VerlindeParams | tuple, method: str = "exact") -> int:
    """``-m^{g-1} sum_{i=1}^{2m-1} (-1)^i cosec^{2g-2}(i pi / 2m)``."""
    if not isinstance(params, VerlindeParams):
        params = VerlindeParams(*params)
    if method == "float":
        return verlinde_float(params)[0]
    if method != "exact":
        raise ValueError(f"unknown method {method!r}")
    g, m = params.genus, params.level
    total = CyclotomicElement.rational(4 * m, 0)
    # cosec(i pi/2m) = cosec((2m-i) pi/2m) and (-1)^i = (-1)^(2m-i): fold the sum
    for i in range(1, m + 1):
        term = cosec_power(i, m, 2 * g - 2)
        if i < m:
            term = term * 2
        total = total - term if i % 2 else total + term
    total = total * (-(m ** (g - 1)))
    if not total.is_rational():
        raise NonIntegral(f"non-rational Verlinde value {total!r}")
    q = total.to_rational()
    if q.denominator != 1:
        raise NonIntegral(f"Verlinde value {q} is not an integer")
    return int(q)


def verlinde_float(params: VerlindeParams | tuple) -> tuple[int, float]:
    """Double-precision evaluation; returns ``(rounded value, residual)``."""
    if not isinstance(params, VerlindeParams):
        params = VerlindeParams(*params)
    g, m = params.genus, params.level
    if g > FLOAT_MAX_GENUS or m > FLOAT_MAX_LEVEL:
        raise FloatUnreliable(f"float method limited to g <= {FLOAT_MAX_GENUS}, m <= {FLOAT_MAX_LEVEL}")
    s = math.fsum((-1) ** i / math.sin(i * math.pi / (2 * m)) ** (2 * g - 2) for i in range(1, 2 * m))
    value = -(m ** (g - 1)) * s
    rounded = round(value)
    residual = abs(value - rounded)
    if residual > FLOAT_RTOL * max(1.0, abs(value)):
        raise FloatUnreliable(f"float residual {residual:.3g} too large at g={g}, m={m}")
    return int(rounded), residual
