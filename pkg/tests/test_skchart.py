from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hitchinkit.algebra import RationalPoly, parse_poly
from hitchinkit.skchart import (Prepotential, affine_shift, conjugate, connection_matrix, contraction_cubic,
                                exterior_derivative_of_tau, from_prepotential, imaginary_part, kahler_hessian,
                                parse_complex, parse_samples, positivity_sample, reduce_imaginary)
from strategies import small_fractions


@st.composite
def prepotentials(draw):
    n = draw(st.integers(1, 3))
    names = ("z",) if n == 1 else tuple(f"z{k + 1}" for k in range(n))
    terms = {}
    for _ in range(draw(st.integers(1, 5))):
        mono = [draw(st.integers(0, 3)) for _ in names]
        while sum(mono) > 5:
            mono[mono.index(max(mono))] -= 1
        # the last slot is the imaginary unit
        terms[tuple(mono) + (draw(st.integers(0, 1)),)] = draw(small_fractions)
    return Prepotential(n, reduce_imaginary(RationalPoly(names + ("i",), terms)))


def test_quadratic_prepotential_is_flat():
    chart = from_prepotential(Prepotential.parse("i*z^2/2"))
    assert str(chart.tau[0][0]) == "i"
    assert all(c.is_zero() for c in chart.cubic.values())
    assert all(g.is_zero() for g in connection_matrix(chart).values())


def test_cubic_prepotential():
    chart = from_prepotential(Prepotential.parse("z^3/6"))
    assert str(chart.dual[0]) == "1/2*z^2"
    assert str(chart.tau[0][0]) == "z"
    assert chart.cubic[(0, 0, 0)] == RationalPoly.constant(1)
    assert connection_matrix(chart)[(0, 0, 0)] == RationalPoly.constant(Fraction(-1, 2))


def test_two_variable_example():
    chart = from_prepotential(Prepotential.parse("z1^2*z2/2"))
    z1, z2 = (RationalPoly.variable(v) for v in ("z1", "z2"))
    assert chart.tau[0][0] == z2 and chart.tau[0][1] == z1 and chart.tau[1][1].is_zero()
    one = RationalPoly.constant(1)
    for idx in [(0, 0, 1), (0, 1, 0), (1, 0, 0)]:
        assert chart.cubic[idx] == one
    assert chart.cubic[(0, 0, 0)].is_zero()


@given(prepotentials())
def test_chart_identities(p):
    chart = from_prepotential(p)
    assert chart.symmetric
    assert exterior_derivative_of_tau(chart) == {(k, a, b): chart.cubic[(a, b, k)] for (k, a, b) in
                                                exterior_derivative_of_tau(chart)}
    contr = contraction_cubic(chart)
    assert all(contr[idx] == chart.cubic[idx] for idx in chart.cubic)


@given(prepotentials(), st.lists(small_fractions, min_size=3, max_size=3), small_fractions)
def test_affine_shift_invariance(p, coeffs, const):
    a, b = from_prepotential(p), from_prepotential(affine_shift(p, coeffs[: p.n], const))
    assert a.tau == b.tau
    assert a.cubic == b.cubic


@given(prepotentials())
def test_kahler_hessian_is_half_imaginary_tau(p):
    chart = from_prepotential(p)
    hess = kahler_hessian(chart)
    for j in range(p.n):
        for k in range(p.n):
            im = imaginary_part(chart.tau[j][k], chart.names)
            assert (hess[j][k] - im * Fraction(1, 2)).is_zero()


def test_conjugation_is_an_involution():
    p = parse_poly("i*z1^2 + 3*zb1 - z2*i", ("z1", "z2", "zb1", "zb2", "i"))
    names, bars = ("z1", "z2"), ("zb1", "zb2")
    assert conjugate(conjugate(p, names, bars), names, bars) == p


@pytest.mark.parametrize("text,expected", [
    ("i*z^2/2", ["positive", "positive"]),
    ("z^3/6", ["positive", "not positive-definite"]),
])
def test_positivity_hand_values_one_variable(text, expected):
    chart = from_prepotential(Prepotential.parse(text))
    pts = positivity_sample(chart, parse_samples("i; -i"))
    assert [p.classification for p in pts] == expected


def test_positivity_values():
    chart = from_prepotential(Prepotential.parse("z^3/6"))
    up, down = positivity_sample(chart, parse_samples("i; -i"))
    assert up.min_eigenvalue == pytest.approx(1.0, abs=1e-12)
    assert down.min_eigenvalue == pytest.approx(-1.0, abs=1e-12)
    assert down.signature == "negative"


def test_degenerate_two_variable_point():
    chart = from_prepotential(Prepotential.parse("z1^2*z2/2"))
    (pt,) = positivity_sample(chart, parse_samples("0, i"))
    assert pt.imag_tau == ((1.0, 0.0), (0.0, 0.0))
    assert pt.classification == "not positive-definite"
    assert pt.signature == "degenerate"


def test_sample_parsing():
    assert parse_complex("2-3i") == complex(2, -3)
    assert parse_complex("-i") == -1j
    assert parse_samples("0, i; 1, 2i") == [(0j, 1j), (1 + 0j, 2j)]
    with pytest.raises(ValueError):
        positivity_sample(from_prepotential(Prepotential.parse("z^3")), [(1, 2)])
