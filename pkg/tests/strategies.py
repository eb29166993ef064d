from fractions import Fraction

from hypothesis import strategies as st

from hitchinkit.algebra import RationalPoly

small_fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
nonzero_fractions = small_fractions.filter(bool)


@st.composite
def polys(draw, variables=("x", "y", "z"), max_terms=5, max_exp=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        mono = tuple(draw(st.integers(0, max_exp)) for _ in variables)
        terms[mono] = draw(small_fractions)
    return RationalPoly(variables, terms)


@st.composite
def fraction_points(draw, variables=("x", "y", "z")):
    return {v: draw(small_fractions) for v in variables}
