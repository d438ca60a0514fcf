"""Hypothesis strategies and small models shared by the tests."""
from fractions import Fraction

from hypothesis import strategies as st

from twistorcalc.arith import UniPoly
from twistorcalc.ring import RingElement, RingModel, RewriteRule

# st.fractions is slow to draw; numerator/denominator pairs cover the same ground
small_fractions = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
small_ints = st.integers(min_value=-12, max_value=12)


@st.composite
def unipolys(draw, max_degree=5):
    coeffs = draw(st.lists(small_fractions, max_size=max_degree + 1))
    return UniPoly(coeffs)


def quotient_model() -> RingModel:
    """l (deg 2), u, v (deg 4) with l^2 = 4u and v^2 = -u^2 - (10/3)uv, top degree 12."""
    free = RingModel([("l", 2), ("u", 4), ("v", 4)], 12, name="test-lquv")
    l, u, v = free.gens()
    return free.with_rules([
        RewriteRule.from_elements(l * l, 4 * u),
        RewriteRule.from_elements(v * v, -(u * u) - Fraction(10, 3) * u * v),
    ])


@st.composite
def ring_elements(draw, model, max_terms=5):
    monos = [m for d in range(0, model.top_degree + 1, 2)
             for m in model.monomials(d, normal_only=False)]
    picked = draw(st.lists(st.sampled_from(monos), max_size=max_terms))
    return RingElement(model, {m: draw(small_fractions) for m in picked})
