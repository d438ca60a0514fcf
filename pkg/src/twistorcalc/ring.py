"""Sparse graded commutative rings with rewrite relations, truncation above a
top degree, and an intersection pairing against a fundamental class.

Elements carry coefficients that are either :class:`~fractions.Fraction` or
:class:`~twistorcalc.arith.UniPoly` (a polynomial in a twist parameter), so
index polynomials can be computed symbolically in a single pass.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Callable, Iterable, Mapping, Sequence

from .arith import UniPoly, nullspace
from .errors import (AmbiguousRelation, NonNilpotent, NonTerminatingRewrite,
                     NoRelation, UnknownMonomial)

__all__ = [
    "GeneratorSpec",
    "RewriteRule",
    "RingModel",
    "RingElement",
    "normalize",
    "multiply",
    "exp_nilpotent",
    "pair",
    "substitute",
    "pushforward_flag",
    "find_middle_relation",
]

Monomial = tuple  # exponent vector, one entry per generator

REWRITE_BUDGET = 10_000


def _is_coeff(x) -> bool:
    return isinstance(x, (int, Fraction, UniPoly))


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int

    def __post_init__(self):
        if self.degree <= 0 or self.degree % 2:
            raise ValueError(f"generator {self.name!r} needs a positive even degree")


@dataclass(frozen=True)
class RewriteRule:
    """``lhs -> rhs`` where ``lhs`` is one monomial and ``rhs`` a sum of terms."""

    lhs: Monomial
    rhs: tuple  # tuple of (monomial, Fraction) pairs

    @classmethod
    def from_elements(cls, lhs: "RingElement", rhs: "RingElement") -> "RewriteRule":
        if len(lhs.terms) != 1 or next(iter(lhs.terms.values())) != 1:
            raise ValueError("rule left-hand side must be a single monic monomial")
        (mono,) = lhs.terms
        rhs_terms = tuple(sorted((m, Fraction(c)) for m, c in rhs.terms.items()))
        return cls(mono, rhs_terms)


class RingModel:
    """A graded ring presentation: generators, rewrite rules, top degree and
    the pairing table of the fundamental class.

    Models are immutable; use :meth:`with_rules` / :meth:`with_pairing` to
    derive new ones.
    """

    def __init__(self, generators: Sequence, top_degree: int,
                 rules: Iterable[RewriteRule] = (), pairing: Mapping | None = None,
                 name: str = ""):
        self.generators = tuple(g if isinstance(g, GeneratorSpec) else GeneratorSpec(*g)
                                for g in generators)
        self.names = tuple(g.name for g in self.generators)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self.degrees = tuple(g.degree for g in self.generators)
        self.top_degree = top_degree
        self.name = name
        self.rules = tuple(rules)
        for r in self.rules:
            rd = self.monomial_degree(r.lhs)
            for m, _ in r.rhs:
                if self.monomial_degree(m) != rd:
                    raise ValueError("rewrite rule is not homogeneous")
        self.pairing: dict[Monomial, Fraction] = {}
        for key, val in (pairing or {}).items():
            mono = self._as_monomial(key)
            if self.monomial_degree(mono) != top_degree:
                raise ValueError(f"pairing entry {key} is not of top degree")
            self.pairing[mono] = Fraction(val)
        self._nf_cache: dict[Monomial, dict] = {}

    # derived models
    def with_rules(self, rules: Iterable[RewriteRule], name: str | None = None) -> "RingModel":
        return RingModel(self.generators, self.top_degree, tuple(self.rules) + tuple(rules),
                         self.pairing, name or self.name)

    def with_pairing(self, pairing: Mapping, name: str | None = None) -> "RingModel":
        return RingModel(self.generators, self.top_degree, self.rules, pairing,
                         name or self.name)

    def __repr__(self):
        return f"RingModel({self.name or ','.join(self.names)}, top={self.top_degree})"

    # elements
    def _as_monomial(self, key) -> Monomial:
        if isinstance(key, RingElement):
            if len(key.terms) != 1:
                raise ValueError("expected a single monomial")
            (mono,) = key.terms
            return mono
        mono = tuple(key)
        if len(mono) != len(self.names):
            raise ValueError("monomial has the wrong number of exponents")
        return mono

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return self.const(1)

    def const(self, c) -> "RingElement":
        return RingElement(self, {(0,) * len(self.names): c})

    def gen(self, name: str) -> "RingElement":
        i = self.names.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(self.names)))
        return normalize(RingElement(self, {mono: Fraction(1)}), self)

    def gens(self) -> tuple["RingElement", ...]:
        return tuple(self.gen(n) for n in self.names)

    def monomials(self, degree: int, normal_only: bool = True) -> list[Monomial]:
        """All exponent vectors of the given degree, in normal form if asked."""
        out: list[Monomial] = []

        def rec(i, remaining, acc):
            if i == len(self.degrees):
                if remaining == 0:
                    out.append(tuple(acc))
                return
            for e in range(remaining // self.degrees[i] + 1):
                rec(i + 1, remaining - e * self.degrees[i], acc + [e])

        rec(0, degree, [])
        if normal_only:
            out = [m for m in out if not any(_divides(r.lhs, m) for r in self.rules)]
        return sorted(out, reverse=True)

    def monomial_nf(self, mono: Monomial, _budget: list | None = None,
                    _active: set | None = None) -> dict:
        """Normal form of a monomial as ``{monomial: Fraction}`` (cached).

        Raises NonTerminatingRewrite when the rules cycle back to a monomial
        still being rewritten, or when the step budget runs out.
        """
        hit = self._nf_cache.get(mono)
        if hit is not None:
            return hit
        budget = _budget if _budget is not None else [REWRITE_BUDGET]
        active = _active if _active is not None else set()
        if mono in active:
            raise NonTerminatingRewrite(f"rewrite rules cycle through {self.format_monomial(mono)}")
        if self.monomial_degree(mono) > self.top_degree:
            result: dict = {}
        else:
            rule = next((r for r in self.rules if _divides(r.lhs, mono)), None)
            if rule is None:
                result = {mono: Fraction(1)}
            else:
                budget[0] -= 1
                if budget[0] < 0:
                    raise NonTerminatingRewrite(f"rewriting {mono} in {self!r}")
                quotient = tuple(a - b for a, b in zip(mono, rule.lhs))
                active.add(mono)
                result = {}
                for m, c in rule.rhs:
                    target = tuple(a + b for a, b in zip(m, quotient))
                    for m2, c2 in self.monomial_nf(target, budget, active).items():
                        v = result.get(m2, 0) + c * c2
                        if v:
                            result[m2] = v
                        else:
                            result.pop(m2, None)
                active.discard(mono)
        self._nf_cache[mono] = result
        return result

    def format_monomial(self, mono: Monomial) -> str:
        parts = []
        for n, e in zip(self.names, mono):
            if e == 1:
                parts.append(n)
            elif e > 1:
                parts.append(f"{n}^{e}")
        return "*".join(parts) or "1"

    def fundamental_monomial(self) -> Monomial:
        """The top-degree monomial used to represent the fundamental cocycle."""
        for mono in sorted(self.pairing, reverse=True):
            if self.pairing[mono]:
                return mono
        raise UnknownMonomial("pairing table has no nonzero entry")


class RingElement:
    """A sparse element ``{exponent vector: coefficient}`` of a :class:`RingModel`.

    Arithmetic results are always normalized in the owning model. The raw
    constructor does not normalize; call :func:`normalize` for that.
    """

    __slots__ = ("model", "terms")

    def __init__(self, model: RingModel, terms: Mapping):
        self.model = model
        self.terms = {tuple(m): c for m, c in terms.items() if c}

    # coercion
    def _lift(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.model is not self.model:
                raise ValueError("elements belong to different ring models")
            return other
        if _is_coeff(other):
            return self.model.const(other)
        raise TypeError(f"cannot combine RingElement with {type(other).__name__}")

    def __add__(self, other):
        if not isinstance(other, RingElement) and not _is_coeff(other):
            return NotImplemented
        other = self._lift(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return RingElement(self.model, terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.model, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, RingElement) and not _is_coeff(other):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if _is_coeff(other):
            return RingElement(self.model, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, RingElement):
            return NotImplemented
        return multiply(self, other, self.model)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = self.model.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if _is_coeff(other):
            other = self.model.const(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.model is not self.model:
            return False
        a = normalize(self, self.model).terms
        b = normalize(other, self.model).terms
        return a == b

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono) -> Fraction | UniPoly:
        return self.terms.get(self.model._as_monomial(mono), Fraction(0))

    def part(self, degree: int) -> "RingElement":
        """Homogeneous component of the given (real cohomological) degree."""
        md = self.model.monomial_degree
        return RingElement(self.model, {m: c for m, c in self.terms.items() if md(m) == degree})

    def top_part(self) -> "RingElement":
        return self.part(self.model.top_degree)

    def constant(self):
        return self.terms.get((0,) * len(self.model.names), Fraction(0))

    def max_degree(self) -> int:
        md = self.model.monomial_degree
        return max((md(m) for m in self.terms), default=-1)

    def map_coeffs(self, fn: Callable) -> "RingElement":
        return RingElement(self.model, {m: fn(c) for m, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        md = self.model.monomial_degree
        items = sorted(self.terms.items(), key=lambda t: (md(t[0]), t[0]))
        parts = []
        for mono, c in items:
            name = self.model.format_monomial(mono)
            if isinstance(c, UniPoly) and not c.is_constant():
                coef = f"({c.format()})"
                parts.append(("+", coef if name == "1" else f"{coef}*{name}"))
                continue
            c = c.to_fraction() if isinstance(c, UniPoly) else Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if name == "1":
                body = str(a)
            else:
                body = name if a == 1 else f"{a}*{name}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"RingElement({self})"


def normalize(x: RingElement, model: RingModel | None = None) -> RingElement:
    """Rewrite every monomial to normal form and drop degrees above the top."""
    model = model or x.model
    out: dict = {}
    for mono, c in x.terms.items():
        for m, r in model.monomial_nf(mono).items():
            out[m] = out.get(m, 0) + c * r
    return RingElement(model, out)


def multiply(a: RingElement, b: RingElement, model: RingModel | None = None) -> RingElement:
    """Exact product in ``model``, truncated above the top degree and normalized."""
    model = model or a.model
    md = model.monomial_degree
    top = model.top_degree
    b_items = [(m, md(m), c) for m, c in b.terms.items()]
    out: dict = {}
    for ma, ca in a.terms.items():
        da = md(ma)
        for mb, db, cb in b_items:
            if da + db > top:
                continue
            c = ca * cb
            for m, r in model.monomial_nf(tuple(x + y for x, y in zip(ma, mb))).items():
                out[m] = out.get(m, 0) + c * r
    return RingElement(model, out)


def exp_nilpotent(x: RingElement, t=1, model: RingModel | None = None) -> RingElement:
    """``sum_i t^i x^i / i!`` truncated at the top degree.

    ``t`` may be a Fraction or a :class:`UniPoly` in a formal parameter.
    """
    model = model or x.model
    if x.constant():
        raise NonNilpotent("exponential of an element with a degree-0 component")
    result = model.one()
    power = model.one()
    tp = Fraction(1)
    i = 0
    while True:
        i += 1
        power = multiply(power, x, model)
        if power.is_zero():
            return result
        tp = tp * t
        result = result + power * (tp / factorial(i) if not isinstance(tp, UniPoly)
                                   else tp * Fraction(1, factorial(i)))


def pair(x: RingElement, model: RingModel | None = None):
    """Evaluate ``x`` on the fundamental class; non-top parts contribute zero."""
    model = model or x.model
    total = Fraction(0)
    for mono, c in normalize(x, model).top_part().terms.items():
        if mono not in model.pairing:
            raise UnknownMonomial(f"{model.format_monomial(mono)} not in pairing of {model!r}")
        total = total + c * model.pairing[mono]
    return total


def reduce_top_degree(x: RingElement, model: RingModel | None = None) -> RingElement:
    """Replace the top-degree part by its multiple of the fundamental monomial.

    Valid because top cohomology of a closed connected manifold is
    one-dimensional, so a top class vanishes iff it pairs to zero.
    """
    model = model or x.model
    x = normalize(x, model)
    top = x.top_part()
    if top.is_zero():
        return x
    ref = model.fundamental_monomial()
    scale = pair(top, model) * (Fraction(1) / model.pairing[ref])
    lower = x - top
    return lower + RingElement(model, {ref: scale})


def substitute(x: RingElement, target: RingModel, images: Mapping[str, object]) -> RingElement:
    """Ring homomorphism sending each generator of ``x.model`` to ``images[name]``."""
    src = x.model
    imgs = []
    for n in src.names:
        img = images.get(n, 0)
        if not isinstance(img, RingElement):
            img = target.const(img)
        imgs.append(img)
    powers: dict[tuple[int, int], RingElement] = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = imgs[i] ** e
        return powers[key]

    out = target.zero()
    for mono, c in x.terms.items():
        term = target.const(c)
        for i, e in enumerate(mono):
            if e:
                term = multiply(term, power(i, e), target)
        out = out + term
    return out


def pushforward_flag(x: RingElement, base: RingModel, fiber_gen: str = "l",
                     fiber_degree=2) -> RingElement:
    """Integrate over the CP^1 fibres of the twistor fibration.

    Writes ``x = l*p + q`` with ``p, q`` free of ``l`` and returns
    ``fiber_degree * p`` as an element of ``base``.
    """
    src = x.model
    x = normalize(x, src)
    i = src.names.index(fiber_gen)
    keep = [j for j in range(len(src.names)) if j != i]
    if tuple(src.names[j] for j in keep) != base.names:
        raise ValueError("base model generators do not match the fibre complement")
    out = {}
    for mono, c in x.terms.items():
        if mono[i] > 1:
            raise ValueError("element is not in normal form (fibre exponent > 1)")
        if mono[i] == 1:
            m = tuple(mono[j] for j in keep)
            out[m] = out.get(m, 0) + c * fiber_degree
    return normalize(RingElement(base, out), base)


def find_middle_relation(degree: int, candidates: Sequence[RingElement],
                         multipliers: Sequence[RingElement],
                         model: RingModel | None = None) -> list[int]:
    """Find the unique linear relation among ``candidates`` seen by the pairing.

    Returns integer coefficients ``a`` with gcd 1 and positive leading entry
    such that ``sum a_i * candidates[i]`` pairs to zero against every
    multiplier.
    """
    model = model or candidates[0].model
    for c in candidates:
        if normalize(c, model).max_degree() != degree or c.part(degree) != c:
            raise ValueError("candidate is not homogeneous of the stated degree")
    rows = [[pair(multiply(c, m, model), model) for c in candidates] for m in multipliers]
    basis = nullspace(rows)
    if not basis:
        raise NoRelation(f"pairing is nondegenerate on degree-{degree} candidates")
    if len(basis) > 1:
        raise AmbiguousRelation(f"{len(basis)}-dimensional space of relations")
    vec = basis[0]
    den = 1
    for q in vec:
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(q * den) for q in vec]
    g = 0
    for n in ints:
        g = gcd(g, n)
    ints = [n // g for n in ints]
    lead = next(n for n in ints if n)
    if lead < 0:
        ints = [-n for n in ints]
    return ints
