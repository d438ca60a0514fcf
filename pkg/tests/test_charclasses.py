from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistorcalc.arith import UniPoly
from twistorcalc.charclasses import (ChernData, PontryaginData, ahat_series, ch_sym_rank2,
                                     character_from_chern, chern_from_character, dn_ch_sym_at_zero,
                                     evaluate_genus, genus_polynomials, l_series,
                                     pontrjagin_from_chern, sym_character_coeffs, tcoth_series,
                                     todd_series)
from twistorcalc.errors import RankMismatch
from twistorcalc.ring import RingModel

F = Fraction


@pytest.fixture(scope="module")
def uline():
    return RingModel([("u", 4)], 16, name="u-line")


def test_series_are_normalized():
    for s in (ahat_series(), todd_series(), l_series()):
        assert s.coefficients[0] == 1
    assert ahat_series().is_even() and l_series().is_even()
    assert not todd_series().is_even()
    assert todd_series().coefficients[1] == F(1, 2)


def test_ahat_low_degree_polynomials():
    K = genus_polynomials(ahat_series(), 2, "pontrjagin")
    p1, p2 = K.model.gens()
    assert K[1] == -p1 / 24
    assert K[2] == (7 * p1 ** 2 - 4 * p2) / 5760


def test_todd_first_polynomials():
    T = genus_polynomials(todd_series(), 2, "chern")
    c1, c2 = T.model.gens()
    assert T[1] == c1 / 2
    assert T[2] == (c1 ** 2 + c2) / 12


def test_l_genus_signature_polynomial():
    L = genus_polynomials(l_series(), 2, "pontrjagin")
    p1, p2 = L.model.gens()
    assert L[1] == p1 / 3
    assert L[2] == (7 * p2 - p1 ** 2) / 45


def test_genus_on_flat_data(uline):
    K = genus_polynomials(ahat_series(), 4, "pontrjagin")
    zero = PontryaginData([uline.zero()] * 4)
    assert evaluate_genus(K, zero, uline) == 1


def test_chern_from_character_rank2(uline):
    u = uline.gen("u")
    ch = 2 + u + u ** 2 / 12 + u ** 3 / 360 + u ** 4 / 20160
    c = chern_from_character(ch, 2, uline)
    assert c[1].is_zero() and c[2] == -u
    assert c[3].is_zero()


def test_trivial_bundle(uline):
    c = chern_from_character(uline.const(3), 3, uline)
    assert all(c[i].is_zero() for i in (1, 2, 3))
    assert all(p.is_zero() for p in pontrjagin_from_chern(c).classes)


def test_rank_mismatch(uline):
    with pytest.raises(RankMismatch):
        chern_from_character(uline.const(2), 3, uline)


def test_sym_characters(uline):
    u = uline.gen("u")
    assert ch_sym_rank2(0, uline) == 1
    assert ch_sym_rank2(1, uline) == 2 + u + u ** 2 / 12 + u ** 3 / 360 + u ** 4 / 20160
    assert ch_sym_rank2(2, uline) == 3 + 4 * u + F(4, 3) * u ** 2 + F(8, 45) * u ** 3 + F(4, 315) * u ** 4


def test_sym_character_symbolic_matches_integers(uline):
    k = UniPoly.x()
    sym = ch_sym_rank2(2 * k + 4, uline)
    for kv in range(0, 5):
        at_k = sym.map_coeffs(lambda c: c(kv) if isinstance(c, UniPoly) else c)
        assert at_k == ch_sym_rank2(2 * kv + 4, uline)


def test_sym_coefficient_degrees():
    coeffs = sym_character_coeffs(5)
    assert [c.degree for c in coeffs] == [1, 3, 5, 7, 9]


def test_derivatives_at_zero(uline):
    first = dn_ch_sym_at_zero(1)
    u = first.model.gen("u")
    assert first == 1 + u / 3 - u ** 2 / 45 + F(2, 945) * u ** 3 - u ** 4 / 4725
    assert first.constant() == 1
    assert dn_ch_sym_at_zero(2) == dn_ch_sym_at_zero(2).model.gen("u")
    assert tcoth_series(5) == [1, F(1, 3), F(-1, 45), F(2, 945), F(-1, 4725)]
    with pytest.raises(ValueError):
        dn_ch_sym_at_zero(3)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 12))
def test_rank_of_symmetric_power(n):
    model = RingModel([("u", 4)], 8)
    assert ch_sym_rank2(n, model).constant() == n + 1


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=3, max_size=3), st.lists(st.integers(-6, 6), min_size=3, max_size=3))
def test_whitney_sum(a, b):
    """c(E+F) = c(E)c(F) while ch(E+F) = ch(E) + ch(F)."""
    model = RingModel([("x", 2)], 6)
    x = model.gen("x")
    ce = ChernData(3, [x * a[0], x ** 2 * a[1], x ** 3 * a[2]])
    cf = ChernData(3, [x * b[0], x ** 2 * b[1], x ** 3 * b[2]])
    ch_sum = character_from_chern(ce, model) + character_from_chern(cf, model)
    c_sum = chern_from_character(ch_sum, 6, model)
    assert c_sum.total() == ce.total() * cf.total()
