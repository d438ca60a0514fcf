"""Acceptance criteria 1-12 and the randomized property suites.

Each criterion prints one ``PASS``/``FAIL`` line.  Run directly with
``python3 tests/test_acceptance.py`` for just the summary lines.
"""
from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from twistorcalc import (UniPoly, ahat_series, ch_sym_rank2, character_from_chern,
                         chern_from_character, dim_closed, dn_ch_sym_at_zero,
                         genus_polynomials, grassmann_char_data, grassmann_model,
                         homogeneous_index_checks, index_ab, index_d_direct,
                         index_d_koszul, index_X, moduli_chern, moduli_model, normalize,
                         pair, reduce_top_degree, run_suite, serre_vanishing_checks, substitute,
                         verlinde_float, verlinde_number, weyl_dim)
from twistorcalc.charclasses import ChernData, tcoth_series
from twistorcalc.cyclotomic import CyclotomicElement
from twistorcalc.ring import RingElement, RingModel

sys.path.insert(0, str(Path(__file__).parent))
from strategies import quotient_model, ring_elements, small_fractions, small_ints  # noqa: E402

F = Fraction
EXAMPLES = 120
_props = settings(max_examples=EXAMPLES, deadline=None, database=None,
                  suppress_health_check=[HealthCheck.too_slow])


def _ok(results) -> bool:
    return all(r.status != "fail" for r in results)


def _status(suite: str, prefix: str = "") -> bool:
    rs = [r for r in run_suite(suite).results if r.id.startswith(prefix)]
    assert rs, f"no checks under {suite}/{prefix}"
    return _ok(rs)


# ---------------------------------------------------------------------------
# criteria


def crit_01_grassmann_pairing():
    G = grassmann_model()
    u, v = G.ring.gens()
    e, f = G.e, G.f
    ef = [pair(x, G.ring) for x in (e ** 4, e ** 3 * f, e ** 2 * f ** 2, e * f ** 3, f ** 4)]
    uv = [pair(x, G.ring) for x in (u ** 4, u ** 3 * v, u ** 2 * v ** 2)]
    return ef == [2, 0, 2, 0, 4] and uv == [F(21, 64), F(-7, 64), F(5, 64)]


def crit_02_ahat4_coefficients():
    K4 = genus_polynomials(ahat_series(), 4, "pontrjagin")[4]
    denom = 2 ** 16 * 3 ** 4 * 5 ** 2 * 7
    model = K4.model
    want = {"p1^4": 762, "p1^2*p2": -1808, "p2^2": 416, "p1*p3": 1024, "p4": -384}
    got = {model.format_monomial(m): c * denom for m, c in K4.terms.items()}
    return got == want


def crit_03_grassmann_classes():
    cls, chk = grassmann_char_data(strict=False)
    G = grassmann_model()
    u, v = G.ring.gens()
    f = G.f
    return (_ok(chk.results)
            and normalize(cls.P[1], G.ring).is_zero()
            and pair(cls.P[3] * u, G.ring) == 0 == pair(cls.P[3] * v, G.ring)
            and cls.ahat_parts[1] == -(f ** 2) / 240
            and pair(cls.ahat, G.ring) == 0)


def crit_04_homogeneous_indices():
    chk = homogeneous_index_checks(strict=False)
    values = {r.id: r.computed for r in chk.results}
    return (_ok(chk.results) and values["fact-iii.ahat-S2U"] == "0"
            and values["fact-ii.isometry-dim"] == "28" and values["remark.rarita-schwinger"] == "0")


def crit_05_moduli_relation():
    M = moduli_model()
    u, v = M.ring.gen("u"), M.ring.gen("v")
    restricted = [M.restricted_pair(x) for x in (u ** 3, u ** 2 * v, u * v ** 2, v ** 3)]
    return M.relation == [3, 10, 3] and restricted == [F(7, 2), F(-3, 2), F(3, 2), F(-7, 2)]


def crit_06_moduli_chern():
    data, chk = moduli_chern(strict=False)
    ring = moduli_model().ring
    l, u, v = ring.gens()
    c, p = data.chern_raw, data.pontrjagin
    return (_ok(chk.results)
            and c[1] == 2 * l and c[2] == 4 * (3 * u + v) and c[3] == 8 * l * u
            and c[4] == F(-112, 3) * u * v and pair(c[6], ring) == 0
            and pair(c[5] * l, ring) == 0
            and p[1] == -8 * (u + v) and p[2] == F(3, 8) * p[1] ** 2 and reduce_top_degree(p[3], ring).is_zero())


def crit_07_theorem_d():
    d = index_d_direct()
    closed = UniPoly((0, 0, 11, 0, 20, 0, 14)) * F(1, 45)
    table = [1, 28, 265, 1392, 5145, 15100, 37681, 83392, 168273]
    return d.in_m() == closed and [d(m - 1) for m in range(1, 10)] == table


def crit_08_route_agreement():
    direct = index_d_direct()
    a_rr, a_dg = index_ab("a", "riemann_roch_F"), index_ab("a", "dirac_G")
    b_rr, b_dg = index_ab("b", "riemann_roch_F"), index_ab("b", "dirac_G")
    koszul = index_d_koszul(a_rr, b_rr)
    nonzero = sum(1 for c in direct.poly.coeffs if c)
    return (direct.poly.coeffs == koszul.poly.coeffs == index_X().poly.coeffs and nonzero == 7
            and a_rr.poly.coeffs == a_dg.poly.coeffs and len(a_rr.poly.coeffs) == 10
            and b_rr.poly.coeffs == b_dg.poly.coeffs and len(b_rr.poly.coeffs) == 10)


def crit_09_prop_3_2():
    a, b = index_ab("a"), index_ab("b")
    weyl = all(a(k) == weyl_dim(4, (k, k, 0, 0)) and b(k) == weyl_dim(4, (k + 1, k - 1, 0, 0))
               for k in range(1, 13))
    serre = serre_vanishing_checks(a, b, strict=False)
    return (a == dim_closed("A") and b == dim_closed("B") and weyl and _ok(serre.results)
            and a(F(-5, 2)) == 0 and b(F(-5, 2)) == 0 and a(0) == 1 == -a(-5))


def crit_10_table():
    rep = run_suite("table")
    return len(rep.results) == 27 and rep.ok


def crit_11_verlinde():
    d = index_d_direct()
    exact = all(verlinde_number((3, m)) == d(m - 1) for m in range(1, 21))
    floats = True
    for g in range(2, 6):
        for m in range(1, 13):
            v = verlinde_number((g, m))
            approx, residual = verlinde_float((g, m))
            floats &= v >= 0 and approx == v and residual <= 1e-6 * max(1, abs(v))
    return exact and floats


def crit_12_lemma():
    second = dn_ch_sym_at_zero(2)
    first = dn_ch_sym_at_zero(1)
    u = first.model.gen("u")
    want = 1 + u / 3 - u ** 2 / 45 + F(2, 945) * u ** 3 - u ** 4 / 4725
    oracle = sum((u ** j * c for j, c in enumerate(tcoth_series(5))), first.model.zero())
    flagged = [r for r in run_suite("prop-3.2").results if r.id == "lemma-3.3.first"]
    return (second == second.model.gen("u") and first == want == oracle
            and flagged and flagged[0].status == "pass" and "prefactor" in flagged[0].note)


# ---------------------------------------------------------------------------
# randomized property suites


def prop_rewrite_idempotent():
    model = quotient_model()

    @_props
    @given(ring_elements(model, max_terms=6))
    def check(x):
        once = normalize(x, model)
        assert normalize(once, model).terms == once.terms
    check()
    return True


def prop_ring_axioms():
    model = quotient_model()

    @_props
    @given(ring_elements(model), ring_elements(model), ring_elements(model))
    def check(x, y, z):
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
    check()
    return True


def prop_newton_roundtrip():
    model = RingModel([("x", 2), ("y", 2)], 8, name="xy")

    def homogeneous(d):
        return st.fixed_dictionaries({m: small_fractions for m in model.monomials(d)})

    @_props
    @given(st.integers(min_value=1, max_value=5), homogeneous(2), homogeneous(4), homogeneous(6),
           homogeneous(8))
    def check(rank, c1, c2, c3, c4):
        classes = [RingElement(model, t) for t in (c1, c2, c3, c4)][:rank] + [model.zero()] * max(0, rank - 4)
        c = ChernData(rank, classes)
        ch = character_from_chern(c, model)
        back = chern_from_character(ch, rank, model)
        assert all(back[i] == c[i] for i in range(rank + 1))
        assert character_from_chern(back, model) == ch
    check()
    return True


def prop_cyclotomic_field():
    n_values = st.sampled_from([3, 4, 5, 8, 12, 20])

    @st.composite
    def triple(draw):
        n = draw(n_values)
        els = [CyclotomicElement(n, draw(st.lists(small_ints, max_size=8))) for _ in range(3)]
        return n, els

    @_props
    @given(triple())
    def check(data):
        n, (x, y, z) = data
        assert x + y == y + x and x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x - x == 0
        if x != 0:
            assert x * x.inverse() == 1
            assert (y / x) * x == y
        assert CyclotomicElement.zeta(n, 1) ** n == 1
    check()
    return True


def prop_clebsch_gordan():
    model = RingModel([("u", 4)], 20, name="u-line")

    @_props
    @given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=8))
    def check(a, b):
        lhs = ch_sym_rank2(a, model) * ch_sym_rank2(b, model)
        rhs = sum((ch_sym_rank2(a + b - 2 * j, model) for j in range(min(a, b) + 1)), model.zero())
        assert lhs == rhs
        assert ch_sym_rank2(a, model).constant() == a + 1
    check()
    return True


def prop_pairing_symmetry():
    G = grassmann_model()
    M = moduli_model()
    gu, gv = G.ring.gens()
    ml, mu, mv = M.ring.gens()

    @_props
    @given(st.lists(small_fractions, min_size=5, max_size=5),
           st.lists(small_fractions, min_size=4, max_size=4))
    def check(cg, cm):
        x = sum((gu ** (4 - i) * gv ** i * c for i, c in enumerate(cg)), G.ring.zero())
        swapped = substitute(x, G.ring, {"u": gv, "v": gu})
        assert pair(x, G.ring) == pair(swapped, G.ring)
        # u <-> v reverses the orientation of M
        y = sum((mu ** (3 - i) * mv ** i * c for i, c in enumerate(cm)), M.ring.zero())
        assert M.restricted_pair(y) == -M.restricted_pair(substitute(y, M.ring, {"l": ml, "u": mv, "v": mu}))
        assert M.restricted_pair(y) == pair(y, M.ring)
    check()
    return True


CRITERIA = {
    "1 grassmannian pairing": crit_01_grassmann_pairing,
    "2 A-hat_4 coefficients": crit_02_ahat4_coefficients,
    "3 grassmannian classes": crit_03_grassmann_classes,
    "4 homogeneous index checks": crit_04_homogeneous_indices,
    "5 moduli relation and restriction pairing": crit_05_moduli_relation,
    "6 moduli chern and pontrjagin classes": crit_06_moduli_chern,
    "7 d_k polynomial and values": crit_07_theorem_d,
    "8 route agreement": crit_08_route_agreement,
    "9 a_k, b_k closed forms, weyl, serre": crit_09_prop_3_2,
    "10 table reproduction": crit_10_table,
    "11 verlinde cross-check": crit_11_verlinde,
    "12 symmetric power derivatives": crit_12_lemma,
    "property: rewrite idempotence": prop_rewrite_idempotent,
    "property: ring axioms": prop_ring_axioms,
    "property: newton round-trip": prop_newton_roundtrip,
    "property: cyclotomic field axioms": prop_cyclotomic_field,
    "property: clebsch-gordan": prop_clebsch_gordan,
    "property: pairing symmetry": prop_pairing_symmetry,
}


def _run(name: str) -> tuple[bool, str]:
    try:
        ok = bool(CRITERIA[name]())
        detail = ""
    except Exception as exc:  # report the failure and keep going
        ok, detail = False, f" ({type(exc).__name__}: {exc})"
    return ok, f"{'PASS' if ok else 'FAIL'}  criterion {name}{detail}"


@pytest.mark.parametrize("name", list(CRITERIA))
def test_criterion(name, capsys):
    ok, line = _run(name)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for name in CRITERIA:
        ok, line = _run(name)
        failed += not ok
        print(line)
    sys.exit(1 if failed else 0)
