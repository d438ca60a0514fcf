"""Multiplicative sequences, Chern/Pontrjagin conversions and characters of
symmetric powers of a rank-2 bundle.

Everything goes through power sums of formal roots and Newton's identities;
roots themselves are never materialized.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import factorial
from typing import Sequence

from .arith import (UniPoly, poly_substitute_affine, series_div, series_inverse,
                    series_log)
from .errors import RankMismatch
from .ring import RingElement, RingModel, exp_nilpotent, multiply, substitute

__all__ = [
    "CharPowerSeries",
    "GenusPolynomials",
    "ChernData",
    "PontryaginData",
    "ahat_series",
    "todd_series",
    "l_series",
    "genus_polynomials",
    "evaluate_genus",
    "chern_from_character",
    "character_from_chern",
    "pontrjagin_from_chern",
    "ch_sym_rank2",
    "sym_character_coeffs",
    "dn_ch_sym_at_zero",
    "tcoth_series",
]


@dataclass(frozen=True)
class CharPowerSeries:
    """Taylor coefficients of a power series ``Q(x)`` with ``Q(0) = 1``."""

    coefficients: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("characteristic power series must have constant term 1")

    def __len__(self):
        return len(self.coefficients)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coefficients[1::2])


def _sinh_over_x(n: int, scale=Fraction(1)) -> list[Fraction]:
    """Coefficients in y = x^2 of sinh(scale*x)/(scale*x)."""
    return [scale ** (2 * j) / factorial(2 * j + 1) for j in range(n)]


def ahat_series(n: int = 24) -> CharPowerSeries:
    """(x/2)/sinh(x/2), through x**(n-1)."""
    half = (n + 1) // 2
    inv = series_inverse(_sinh_over_x(half, Fraction(1, 2)), half)
    coeffs = [Fraction(0)] * n
    for j, c in enumerate(inv):
        if 2 * j < n:
            coeffs[2 * j] = c
    return CharPowerSeries(coeffs, "A-hat")


def todd_series(n: int = 24) -> CharPowerSeries:
    """x/(1 - exp(-x)), through x**(n-1)."""
    # (1 - e^{-x})/x = sum_j (-1)^j x^j / (j+1)!
    den = [Fraction((-1) ** j, factorial(j + 1)) for j in range(n)]
    return CharPowerSeries(series_inverse(den, n), "Todd")


def l_series(n: int = 24) -> CharPowerSeries:
    """x/tanh(x), through x**(n-1); the L-genus series in the root variable."""
    coeffs = [Fraction(0)] * n
    for j, c in enumerate(tcoth_series((n + 1) // 2)):
        if 2 * j < n:
            coeffs[2 * j] = c
    return CharPowerSeries(coeffs, "L")


def tcoth_series(nterms: int) -> list[Fraction]:
    """Coefficients in ``t**2`` of ``t*cosh(t)/sinh(t)`` by series division."""
    cosh = [Fraction(1, factorial(2 * j)) for j in range(nterms)]
    return series_div(cosh, _sinh_over_x(nterms), nterms)


@dataclass
class GenusPolynomials:
    """Universal polynomials K_1..K_n of a multiplicative sequence.

    ``polys[j-1]`` is K_j, an element of the formal model whose generators are
    ``p1..pn`` (degree 4i) or ``c1..cn`` (degree 2i).
    """

    kind: str
    series: CharPowerSeries
    model: RingModel
    polys: list = field(default_factory=list)

    def __getitem__(self, j: int) -> RingElement:
        return self.polys[j - 1]

    def __len__(self):
        return len(self.polys)

    def total(self) -> RingElement:
        return self.model.one() + sum(self.polys, self.model.zero())


@dataclass
class ChernData:
    rank: int
    classes: list  # c_1..c_r

    def __getitem__(self, i: int) -> RingElement:
        """c_i with c_0 = 1 and c_i = 0 above the rank."""
        if i == 0:
            return self.model.one()
        if i <= len(self.classes):
            return self.classes[i - 1]
        return self.model.zero()

    @property
    def model(self) -> RingModel:
        return self.classes[0].model

    def total(self) -> RingElement:
        return self.model.one() + sum(self.classes, self.model.zero())


@dataclass
class PontryaginData:
    classes: list  # p_1..p_n

    def __getitem__(self, i: int) -> RingElement:
        if i == 0:
            return self.model.one()
        if i <= len(self.classes):
            return self.classes[i - 1]
        return self.model.zero()

    @property
    def model(self) -> RingModel:
        return self.classes[0].model


def _newton_power_sums(e: Sequence, n: int, zero) -> list:
    """Power sums s_1..s_n from elementary symmetric e_1..e_n (e[0] unused)."""
    s = [None]
    for k in range(1, n + 1):
        acc = zero
        for i in range(1, k):
            term = e[i] * s[k - i]
            acc = acc + term if i % 2 else acc - term
        ek = e[k] if k < len(e) else zero
        acc = acc + ek * k if k % 2 else acc - ek * k
        s.append(acc)
    return s


def _newton_elementary(s: Sequence, n: int, one, zero) -> list:
    """Elementary symmetric e_0..e_n from power sums s_1..s_n."""
    e = [one]
    for k in range(1, n + 1):
        acc = zero
        for i in range(1, k + 1):
            term = e[k - i] * s[i]
            acc = acc + term if i % 2 else acc - term
        e.append(acc * Fraction(1, k))
    return e


_genus_lock = threading.Lock()
_genus_cache: dict = {}


def _formal_model(kind: str, n: int) -> RingModel:
    if kind == "pontrjagin":
        gens = [(f"p{i}", 4 * i) for i in range(1, n + 1)]
        return RingModel(gens, 4 * n, name=f"formal-p{n}")
    if kind == "chern":
        gens = [(f"c{i}", 2 * i) for i in range(1, n + 1)]
        return RingModel(gens, 2 * n, name=f"formal-c{n}")
    raise ValueError(f"unknown variable kind {kind!r}")


def genus_polynomials(Q: CharPowerSeries, up_to: int, variable_kind: str = "pontrjagin") -> GenusPolynomials:
    """Universal polynomials of the multiplicative sequence generated by ``Q``.

    For ``"pontrjagin"`` the series must be even and the variables are the
    elementary symmetric functions of the squared roots.
    """
    if up_to < 1:
        raise ValueError("up_to must be at least 1")
    if variable_kind == "pontrjagin":
        if not Q.is_even():
            raise ValueError("Pontrjagin genus needs an even characteristic series")
        need = 2 * up_to + 1
        base = list(Q.coefficients[::2])[: up_to + 1]
    else:
        need = up_to + 1
        base = list(Q.coefficients[: up_to + 1])
    if len(Q.coefficients) < need:
        raise ValueError(f"series has too few coefficients for weight {up_to}")
    key = (Q.coefficients[:need], up_to, variable_kind)
    with _genus_lock:
        hit = _genus_cache.get(key)
        if hit is not None:
            return hit
        model = _formal_model(variable_kind, up_to)
        unit = 4 if variable_kind == "pontrjagin" else 2
        e = [model.one()] + list(model.gens())
        s = _newton_power_sums(e, up_to, model.zero())
        logq = series_log(base, up_to + 1)
        exponent = model.zero()
        for j in range(1, up_to + 1):
            if logq[j]:
                exponent = exponent + s[j] * logq[j]
        total = exp_nilpotent(exponent, 1, model) if exponent else model.one()
        polys = [total.part(unit * j) for j in range(1, up_to + 1)]
        result = GenusPolynomials(variable_kind, Q, model, polys)
        _genus_cache[key] = result
        return result


def evaluate_genus(K: GenusPolynomials, data, model: RingModel | None = None) -> RingElement:
    """Substitute concrete classes into K and return ``1 + K_1 + K_2 + ...``."""
    model = model or data.model
    prefix = "p" if K.kind == "pontrjagin" else "c"
    images = {f"{prefix}{i}": data[i] for i in range(1, len(K) + 1)}
    return substitute(K.total(), model, images)


def chern_from_character(ch: RingElement, rank: int, model: RingModel | None = None) -> ChernData:
    """Chern classes c_1..c_rank from a Chern character via Newton's identities."""
    model = model or ch.model
    if ch.constant() != rank:
        raise RankMismatch(f"ch_0 = {ch.constant()} but rank = {rank}")
    n = min(rank, model.top_degree // 2)
    s = [None] + [ch.part(2 * j) * factorial(j) for j in range(1, n + 1)]
    e = _newton_elementary(s, n, model.one(), model.zero())
    classes = e[1:] + [model.zero()] * (rank - n)
    return ChernData(rank, classes)


def character_from_chern(c: ChernData, model: RingModel | None = None) -> RingElement:
    """Chern character ``rank + sum_k s_k / k!`` from Chern classes."""
    model = model or c.model
    n = model.top_degree // 2
    e = [model.one()] + [c[i] for i in range(1, n + 1)]
    s = _newton_power_sums(e, n, model.zero())
    ch = model.const(c.rank)
    for k in range(1, n + 1):
        ch = ch + s[k] * Fraction(1, factorial(k))
    return ch


def pontrjagin_from_chern(c: ChernData) -> PontryaginData:
    """p_k = (-1)^k c_{2k} of the complexification, in terms of the c_i."""
    model = c.model
    n = min(c.rank, model.top_degree // 4)
    out = []
    for k in range(1, n + 1):
        acc = model.zero()
        for a in range(0, 2 * k + 1):
            b = 2 * k - a
            term = multiply(c[a], c[b], model)
            acc = acc + term if (k + b) % 2 == 0 else acc - term
        out.append(acc)
    return PontryaginData(out)


_sym_lock = threading.Lock()
_sym_cache: dict[int, list] = {}


def sym_character_coeffs(nterms: int) -> list[UniPoly]:
    """Coefficients c_j(n) with ``ch(S^n U) = sum_j c_j(n) u^j``.

    Here ``sinh((n+1)t)/sinh(t)`` is divided as even series in ``t**2 = u``;
    each ``c_j`` is a polynomial in ``n`` of degree ``2j+1``.
    """
    with _sym_lock:
        hit = _sym_cache.get(nterms)
        if hit is not None:
            return hit
        n1 = UniPoly((1, 1))  # n + 1
        num = [n1 ** (2 * j + 1) * Fraction(1, factorial(2 * j + 1)) for j in range(nterms)]
        coeffs = series_div(num, _sinh_over_x(nterms), nterms)
        coeffs = [UniPoly.coerce(c) for c in coeffs]
        _sym_cache[nterms] = coeffs
        return coeffs


def _resolve_param(p: UniPoly, n):
    if isinstance(n, UniPoly):
        if n.degree > 1:
            raise ValueError("symmetric power parameter must be affine")
        return poly_substitute_affine(p, n[1], n[0])
    return p(Fraction(n))


def ch_sym_rank2(n, model: RingModel, var: str = "u") -> RingElement:
    """ch(S^n U) for a rank-2 bundle U with ``var = -c_2(U)``.

    ``n`` is an integer or an affine :class:`UniPoly` ``alpha*k + beta``; in the
    latter case coefficients are polynomials in ``k``.
    """
    x = model.gen(var)
    deg = model.degrees[model.names.index(var)]
    nterms = model.top_degree // deg + 1
    out = model.zero()
    power = model.one()
    for j, cj in enumerate(sym_character_coeffs(nterms)):
        coef = _resolve_param(cj, n)
        if coef:
            out = out + power * coef
        power = multiply(power, x, model)
        if power.is_zero():
            break
    return out


@lru_cache(maxsize=None)
def _line_model(var: str) -> RingModel:
    return RingModel([(var, 4)], 16, name=f"{var}-line")


def dn_ch_sym_at_zero(order: int, model: RingModel | None = None, var: str = "u") -> RingElement:
    """The ``order``-th derivative in ``n`` of ch(S^n U) at ``n = 0``."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if model is None:
        model = _line_model(var)
    x = model.gen(var)
    deg = model.degrees[model.names.index(var)]
    nterms = model.top_degree // deg + 1
    out = model.zero()
    power = model.one()
    for cj in sym_character_coeffs(nterms):
        coef = cj.derivative(order)(Fraction(0))
        if coef:
            out = out + power * coef
        power = multiply(power, x, model)
        if power.is_zero():
            break
    return out
