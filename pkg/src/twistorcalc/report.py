"""Named verification suites and the report they produce."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import __version__
from .arith import UniPoly, bernoulli, poly_substitute_affine
from .charclasses import ahat_series, dn_ch_sym_at_zero, genus_polynomials, tcoth_series
from .checks import FAIL, IMPOSED, PASS, Checker, CheckResult
from .cyclotomic import verlinde_float, verlinde_number
from .geometry import (EF_BASIS, _ef_poly, ef_row, flag_model, flag_tangent_chern,
                       grassmann_char_data, grassmann_model, homogeneous_index_checks,
                       index_ab, index_d_direct, index_d_koszul, index_X,
                       interpolation_crosscheck, moduli_chern, moduli_model,
                       moduli_todd_checks, _moduli_ahat, serre_vanishing_checks, uv_to_ef)
from .lie import dim_closed, weyl_dim
from .ring import RingElement, exp_nilpotent, pair, reduce_top_degree

__all__ = ["PAPER_TABLE", "SELECTORS", "Report", "run_suite", "table_rows"]

PAPER_TABLE = {
    "a": (1, 28, 300, 1925, 8918, 32928, 102816, 282150, 698775),
    "b": (0, 35, 567, 4312, 21840, 85050, 274890, 772464, 1945944),
    "d": (1, 28, 265, 1392, 5145, 15100, 37681, 83392, 168273),
}

D_CLOSED_M = UniPoly((0, 0, 11, 0, 20, 0, 14)) * Fraction(1, 45)  # in m = k + 1


def _natural_key(s: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


@dataclass
class Report:
    results: list = field(default_factory=list)
    tool_version: str = __version__

    def __post_init__(self):
        self.results = sorted(self.results, key=lambda r: _natural_key(r.id))

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, IMPOSED: 0}
        for r in self.results:
            counts[r.status] += 1
        counts["total"] = len(self.results)
        return counts

    @property
    def ok(self) -> bool:
        return not any(r.status == FAIL for r in self.results)

    def to_json(self) -> str:
        return json.dumps({"tool_version": self.tool_version, "summary": self.summary,
                           "results": [r.to_dict() for r in self.results]},
                          indent=2, sort_keys=True)

    def to_text(self) -> str:
        w = max((len(r.id) for r in self.results), default=2)
        lines = []
        for r in self.results:
            line = f"{r.status.upper():<20} {r.id:<{w}}  {r.paper_anchor}"
            if r.status == FAIL:
                line += f"\n{'':<21}expected: {r.expected}\n{'':<21}computed: {r.computed}"
            if r.note:
                line += f"\n{'':<21}note: {r.note}"
            lines.append(line)
        s = self.summary
        lines.append(f"\n{s['total']} checks: {s[PASS]} pass, {s[FAIL]} fail, "
                     f"{s[IMPOSED]} imposed-by-citation (twistorcalc {self.tool_version})")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# suites; each returns a Checker in non-strict mode


def _suite_prop_1_1() -> Checker:
    G = grassmann_model()
    ring = G.ring
    u, v = ring.gens()
    chk = Checker(strict=False)
    F = Fraction
    expected = {"u^4": F(21, 64), "u^3*v": F(-7, 64), "u^2*v^2": F(5, 64),
                "u*v^3": F(-7, 64), "v^4": F(21, 64)}
    for name, val in expected.items():
        mono = next(m for m in ring.monomials(16) if ring.format_monomial(m) == name)
        chk.equal(f"prop-1.1.{name}", val, pair(RingElement(ring, {mono: F(1)}), ring),
                  "Prop 1.1, u^4=21/64=v^4, u^3v=-7/64=uv^3, u^2v^2=5/64")
    e, f = G.e, G.f
    ef_expected = [("e^4", e ** 4, 2), ("e^3f", e ** 3 * f, 0), ("e^2f^2", e ** 2 * f ** 2, 2),
                   ("ef^3", e * f ** 3, 0), ("f^4", f ** 4, 4)]
    for name, x, val in ef_expected:
        chk.equal(f"prop-1.1.{name}", F(val), pair(x, ring), "Prop 1.1, e^4=2=e^2f^2, e^3f=0=ef^3, f^4=4",
                  note="the proof prints 'ef^3=0=ef^3'; the symmetric pair e^3f=ef^3=0 is used"
                  if name == "e^3f" else "")
    rows = G.constraint_rows
    paper_rows = [(-10, 16, -3), (16, 24, 1), (24, -26, 1)]
    # row 1 is the top A-hat class, row 2 is 64u^4 (P1 = 0), row 3 minus 3*(row 1) drops A_4
    derived = [rows[0], [x * 4 for x in rows[1]], [a - 3 * b for a, b in zip(rows[2], rows[0])]]
    for i, (d, p) in enumerate(zip(derived, paper_rows), start=1):
        scale = next(x for x in d if x) / next(x for x in p if x)
        chk.equal(f"prop-1.1.eq{i}-row", [F(x) for x in p], [x / scale for x in d],
                  f"Eq. ({i}) constraint row over (e^4, e^2f^2, f^4)")
    chk.equal("prop-1.1.eq2-rhs", F(84), G.constraint_rhs[1] * 4, "Eq. (2), 21=64u^4")
    chk.extend(homogeneous_index_checks(G, strict=False))
    return chk


def _suite_prop_1_2() -> Checker:
    cls, chk = grassmann_char_data(strict=False)
    K = genus_polynomials(ahat_series(), 4, "pontrjagin")
    denom = 2 ** 16 * 3 ** 4 * 5 ** 2 * 7
    m = K.model
    p1, p2, p3, p4 = m.gens()
    expected = (762 * p1 ** 4 - 1808 * p1 ** 2 * p2 + 416 * p2 ** 2 + 1024 * p1 * p3
                - 384 * p4) * Fraction(1, denom)
    chk.equal("eq-A4", expected, K[4], "Eq. (A4), (762P1^4-1808P1^2P2+416P2^2+1024P1P3-384P4)/(2^16 3^4 5^2 7)")
    chk.equal("eq-A4.K1", -p1 / 24, K[1], "Thm 2.3 proof, 1-p1/24")
    chk.equal("eq-A4.K2", (7 * p1 ** 2 - 4 * p2) * Fraction(1, 5760), K[2], "Thm 2.3 proof, (7p1^2-4p2)/(2^7 3^2 5)")
    a3 = uv_to_ef(cls.ahat_parts[2])
    chk.equal("prop-1.2.ahat-deg12", _ef_poly([(Fraction(-2, 3024), 2, 1), (Fraction(1, 3024), 0, 3)]), a3,
              "fact (iii), A-hat = 1 - f^2/240 + (1/1008)(2e^2f - f^3)",
              note="computed A_3 = -P3/60480 = -(2e^2f-f^3)/3024, not +(2e^2f-f^3)/1008 as displayed; "
                   "the third constraint row reduces to (24, -26, 1) only with the computed value")
    return chk


def _suite_prop_2_1() -> Checker:
    M = moduli_model()
    F_ = flag_model()
    chk = Checker(strict=False)
    l, u, v = F_.ring.gens()
    chk.equal("prop-2.1.c3-sigma", 4 * l * (u - v), M.c3_sigma, "Prop 2.1 proof, c3(sigma*)=4l(u-v)")
    x = 4 * l * (u ** 4 - u ** 3 * v)
    chk.equal("prop-2.1.pushforward", Fraction(7, 2), pair(F_.pushforward(x), F_.base.ring),
              "Prop 2.1 proof, <4l(u^4-u^3v),[F]>=8<u^4-u^3v,[G]>=7/2")
    chk.equal("prop-2.1.flag-pair", Fraction(7, 2), F_.pair(x), "pairing on F agrees with fibre integration")
    chk.equal("prop-2.1.relation", [3, 10, 3], M.relation, "Prop 2.1, 3u^2+10uv+3v^2=0")
    names = {"u^3": Fraction(7, 2), "u^2*v": Fraction(-3, 2), "u*v^2": Fraction(3, 2), "v^3": Fraction(-7, 2)}
    ring = M.ring
    mu, mv = ring.gen("u"), ring.gen("v")
    monos = {"u^3": mu ** 3, "u^2*v": mu ** 2 * mv, "u*v^2": mu * mv ** 2, "v^3": mv ** 3}
    for name, val in names.items():
        chk.equal(f"prop-2.1.restrict.{name}", val, M.restricted_pair(monos[name]),
                  "Prop 2.1, u^3=7/2=-v^3, uv^2=3/2=-u^2v")
        chk.equal(f"prop-2.1.rewrite.{name}", val, pair(monos[name], ring),
                  "Prop 2.1, pairing after rewriting with the relation")
    return chk


def _suite_prop_2_2() -> Checker:
    _, chk = moduli_chern(strict=False)
    _, fchk = flag_tangent_chern(strict=False)
    chk.extend(fchk)
    return chk


def _suite_thm_2_3() -> Checker:
    chk = moduli_todd_checks(strict=False)
    d = index_d_direct()
    chk.equal("thm-2.3.polynomial", D_CLOSED_M, d.in_m(), "Thm 2.3, d_{m-1}=m^2(11+20m^2+14m^4)/45")
    for m in range(1, 10):
        chk.equal(f"thm-2.3.m{m}", Fraction(PAPER_TABLE["d"][m - 1]), d(m - 1), "Thm 2.3 / table d_k")
    ring = moduli_model().ring
    l, u, v = ring.gens()
    mpar = UniPoly.x()
    ahat = _moduli_ahat()
    lhs = reduce_top_degree(exp_nilpotent(l, mpar, ring) * ahat, ring).top_part()
    m2, m4, m6 = mpar ** 2, mpar ** 4, mpar ** 6
    displayed = (u ** 2 * v * (m2 * Fraction(-22, 135)) + (u ** 3 + u ** 2 * v) * (m4 * Fraction(2, 9))
                 + u ** 3 * (m6 * Fraction(4, 45)))
    chk.equal("thm-2.3.intermediate", reduce_top_degree(displayed, ring).top_part(), lhs,
              "Thm 2.3 proof, -22/135 m^2 u^2v + 2/9 m^4 (u^3+u^2v) + 4/45 m^6 u^3")
    chk.equal("thm-2.3.interp", d.poly, interpolation_crosscheck("d_direct"),
              "exact interpolation through k=-10..10")
    return chk


def _suite_thm_3_1() -> Checker:
    chk = Checker(strict=False)
    direct = index_d_direct()
    a, b = index_ab("a"), index_ab("b")
    koszul = index_d_koszul(a, b)
    x = index_X()
    chk.equal("thm-3.1.koszul", direct.poly, koszul.poly, "Eq. (4), chi(M,O(k))=a_k-b_{k-1}+b_{k-2}-a_{k-3}")
    chk.equal("thm-3.1.X", direct.poly, x.poly, "Thm 3.1, d_k = A(G, X_k)")
    chk.equal("thm-3.1.koszul-k2", Fraction(265), a(2) - b(1) + b(0) - a(-1), "a_2-b_1+b_0-a_{-1}=300-35+0-0")
    chk.equal("thm-3.1.X-k1", Fraction(28), x(1), "table d_1")
    chk.equal("thm-3.1.X-k4", Fraction(5145), x(4), "table d_4")
    chk.equal("thm-3.1.X-interp", x.poly, interpolation_crosscheck("X"), "exact interpolation through k=-10..10")
    for p, name in ((direct, "direct"), (koszul, "koszul"), (x, "X")):
        chk.equal(f"thm-3.1.integer-valued.{name}", True, p.is_integer_valued(), "integer-valued on k=-10..10")
    return chk


def _lemma_3_3(chk: Checker) -> None:
    second = dn_ch_sym_at_zero(2)
    chk.equal("lemma-3.3.second", second.model.gen("u"), second,
              "Lemma 3.3, f''(0)=u")
    first = dn_ch_sym_at_zero(1)
    oracle = tcoth_series(5)
    ring = first.model
    uu = ring.gen("u")
    series = sum((uu ** j * c for j, c in enumerate(oracle)), ring.zero())
    bern = ring.one() + sum((uu ** j * ((-1) ** (j - 1) * 2 ** (2 * j) * bernoulli(j) / factorial(2 * j))
                             for j in range(1, 5)), ring.zero())
    chk.equal("lemma-3.3.first", series, first, "Lemma 3.3, f'(0)=(l/2)/tanh(l/2)",
              note="series is 1 + u/3 - u^2/45 + 2u^3/945 - u^4/4725; the displayed "
                   "'1/2(1 - u/3 - u^2/45 + ...)' has a spurious prefactor 1/2 and sign on u/3")
    chk.equal("lemma-3.3.bernoulli", bern, first, "1 - sum (-1)^j 2^{2j} B_j/(2j)! u^j")


def _suite_prop_3_2() -> Checker:
    chk = Checker(strict=False)
    for which in ("a", "b"):
        rr = index_ab(which, "riemann_roch_F")
        dg = index_ab(which, "dirac_G")
        chk.equal(f"prop-3.2.{which}-routes", rr.poly, dg.poly, "Eq. (ab) vs Eq. (ab2)")
        closed = dim_closed(which.upper())
        chk.equal(f"prop-3.2.{which}-closed", closed.poly, rr.poly,
                  "Prop 3.2, dim A_k / dim B_k closed forms")
        for route in ("riemann_roch_F", "dirac_G"):
            chk.equal(f"prop-3.2.{which}-interp.{route}", rr.poly,
                      interpolation_crosscheck(f"{which}:{route}"), "exact interpolation through k=-10..10")
        chk.equal(f"prop-3.2.{which}-degree", 9, rr.poly.degree, "degree 9 in k")
    a = index_ab("a")
    b = index_ab("b")
    for k in range(0, 13):
        chk.equal(f"prop-3.2.weyl-A.k{k}", a(k), Fraction(weyl_dim(4, (k, k, 0, 0))), "A_k = V(k,k,0,0)")
        if k >= 1:
            chk.equal(f"prop-3.2.weyl-B.k{k}", b(k), Fraction(weyl_dim(4, (k + 1, k - 1, 0, 0))),
                      "B_k = V(k+1,k-1,0,0)")
    lin = lambda c0: UniPoly((c0, 1))
    atilde = lin(2) ** 2 * lin(3) ** 2
    chk.equal("prop-3.2.a-tilde", a.poly,
              lin(1) * lin(2) * UniPoly((5, 2)) * lin(3) * lin(4) * atilde * Fraction(1, 4320),
              "Prop 3.2 proof, a-tilde_k=(k+2)^2(k+3)^2, a-tilde_0=36")
    btilde = lin(1) * lin(4)
    chk.equal("prop-3.2.b-tilde", b.poly,
              UniPoly.x() * lin(1) * lin(2) * UniPoly((5, 2)) * lin(3) * lin(4) * lin(5) * btilde
              * Fraction(1, 1440), "Prop 3.2 proof, b-tilde_k=(k+1)(k+4)")
    da = a.poly.derivative()
    chk.equal("prop-3.2.a-double-root", [Fraction(0), Fraction(0)], [da(-2), da.derivative()(-2)],
              "d/dk a_k = 0 = d^2/dk^2 a_k at k=-2")
    _lemma_3_3(chk)
    return chk


def _suite_serre() -> Checker:
    return serre_vanishing_checks(index_ab("a"), index_ab("b"), strict=False)


def table_rows(kmax: int = 8) -> list[tuple[int, int, int, int]]:
    a, b, d = index_ab("a"), index_ab("b"), index_d_direct()
    return [(k, int(a(k)), int(b(k)), int(d(k))) for k in range(kmax + 1)]


def _suite_table() -> Checker:
    chk = Checker(strict=False)
    for k, a, b, d in table_rows(8):
        for name, val in (("a", a), ("b", b), ("d", d)):
            chk.equal(f"table-row-{k}.{name}", PAPER_TABLE[name][k], val, f"§3 table, {name}_{k}")
    return chk


def _suite_verlinde_cross() -> Checker:
    chk = Checker(strict=False)
    d = index_d_direct()
    for m in range(1, 21):
        chk.equal(f"verlinde-cross.g3.m{m}", d(m - 1), Fraction(verlinde_number((3, m))),
                  "Eq. (V) at g=3 vs Thm 2.3")
    for g in range(2, 6):
        for m in range(1, 13):
            exact = verlinde_number((g, m))
            approx, _ = verlinde_float((g, m))
            chk.equal(f"verlinde-cross.float.g{g}.m{m}", exact, approx, "Eq. (V) float oracle")
            chk.equal(f"verlinde-cross.nonneg.g{g}.m{m}", True, exact >= 0, "Eq. (V) is a dimension")
    return chk


SELECTORS = {
    "prop-1.1": _suite_prop_1_1,
    "prop-1.2": _suite_prop_1_2,
    "prop-2.1": _suite_prop_2_1,
    "prop-2.2": _suite_prop_2_2,
    "thm-2.3": _suite_thm_2_3,
    "thm-3.1": _suite_thm_3_1,
    "prop-3.2": _suite_prop_3_2,
    "serre": _suite_serre,
    "table": _suite_table,
    "verlinde-cross": _suite_verlinde_cross,
}


def run_suite(selector: str = "all") -> Report:
    """Run one named suite (or ``"all"``) and return the ordered report."""
    if selector == "all":
        names = list(SELECTORS)
    elif selector in SELECTORS:
        names = [selector]
    else:
        raise ValueError(f"unknown selector {selector!r}; choose from all, {', '.join(SELECTORS)}")
    results: list[CheckResult] = []
    for name in names:
        results.extend(SELECTORS[name]().results)
    return Report(results)
