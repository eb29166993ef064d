from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hitchinkit.algebra import LaurentSeries, RationalPoly, parse_poly
from hitchinkit.cubic import (CALIBRATION, CameralError, CurveError, CurveModel, CurvePoint, Differential,
                              adapted_quadratic_expansion, calibration_ratio, cubic_tensor,
                              residue_cubic_closed_form, residue_cubic_sl2, is_fully_symmetric, period_oracle,
                              quadratic_residue, rescale, rescaling_invariant, residue, residue_sum,
                              riemann_roch_dimension, section_basis, serre_pairing_nondegenerate,
                              sl2_cameral_data)
from strategies import small_fractions

U = ("u",)
ONE = parse_poly("1", U)
QUARTICS = {
    "0123": "u*(u-1)*(u-2)*(u-3)",
    "0134": "u*(u-1)*(u-3)*(u-4)",
    "0235": "u*(u-2)*(u-3)*(u-5)",
}
# period oracle at step 1e-4 (quad + Richardson), frozen
ORACLE = {
    "0123": (1.279261571171005j, -3.3715007096251934j, 0.6141731807129958j),
    "0134": (1.5634019226961098j, -2.156515647499645j, 0.18764722424717087j),
    "0235": (1.0522603857859478j, -2.412889993982108j, 0.12470838448315942j),
}


def sympy_cubic(b_text, xi, eta, zeta):
    """Independent reference: t^-2 coefficients of the pulled-back quadratic differential."""
    u, t = sympy.symbols("u t")
    b = sympy.sympify(b_text.replace("^", "**"))
    g = sympy.sympify(xi) * sympy.sympify(eta) * sympy.sympify(zeta)
    total = sympy.Integer(0)
    for r in sympy.roots(sympy.Poly(b, u)):
        sub = r + t ** 2
        q = (g / b ** 2).subs(u, sub) * (2 * t) ** 2
        total += sympy.series(q, t, 0, 1).removeO().coeff(t, -2)
    return Fraction(str(sympy.nsimplify(total / 2)))


# curves and section bases

@pytest.mark.parametrize("delta", [3, 4, 6])
@pytest.mark.parametrize("m", [1, 2])
def test_rational_section_bases(delta, m):
    sb = section_basis(CurveModel.rational(delta), m)
    assert sb.certified
    assert sb.dimension == m * (delta - 2) + 1


@pytest.mark.parametrize("f", ["u^5 - u", "u^6 - 1", "u^7 + u + 1"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_hyperelliptic_section_bases(f, m):
    curve = CurveModel.hyperelliptic(f)
    sb = section_basis(curve, m)
    assert sb.certified
    assert sb.dimension == riemann_roch_dimension(curve, m)
    assert serre_pairing_nondegenerate(sb)


def test_curve_validation():
    with pytest.raises(CurveError):
        CurveModel.hyperelliptic("u^2*(u-1)*(u-2)")
    with pytest.raises(CurveError):
        riemann_roch_dimension(CurveModel.rational(0), 2)


# residues

def test_basic_residues():
    line = CurveModel.rational(0)
    assert residue(line, Differential.of("1", "u"), CurvePoint.affine(0)) == 1
    assert residue(line, Differential.of("1", "u^2"), CurvePoint.affine(0)) == 0
    assert residue(line, Differential.of("1", "u"), CurvePoint.infinity()) == -1


@given(st.lists(small_fractions, min_size=1, max_size=3, unique=True), st.lists(small_fractions, max_size=4))
def test_residue_theorem_on_the_line(poles, numerator):
    line = CurveModel.rational(0)
    u = RationalPoly.variable("u", U)
    den = RationalPoly.constant(1, U)
    for p in poles:
        den = den * (u - p)
    num = RationalPoly.from_univariate(numerator or [1], "u")
    assert residue_sum(line, Differential.of(num, den)) == 0


@pytest.mark.parametrize("f,anti_pole", [("u^5 - u", "u"), ("u^5 - u", "u + 1"), ("u^6 - 1", "u - 1")])
def test_residue_theorem_on_hyperelliptic_curves(f, anti_pole):
    curve = CurveModel.hyperelliptic(f)
    omega = Differential.of("u^2 + 1", "u - 2", anti_num="u^3", anti_den=anti_pole)
    assert residue_sum(curve, omega) == 0


def test_quadratic_residue_conventions():
    q = (parse_poly("1", U), parse_poly("u^2*(u-1)^2", U))
    series = adapted_quadratic_expansion(q, Fraction(0), 10)
    assert rescaling_invariant(series, "double")
    assert quadratic_residue(series, "simple") == 0
    c = Fraction(3)
    assert quadratic_residue(rescale(series, c), "double") == quadratic_residue(series, "double")


def test_quadratic_residue_rejects_higher_poles():
    s = LaurentSeries("t", -3, [1], 5)
    with pytest.raises(ValueError):
        quadratic_residue(s)


# the SL2 residue cubic

@pytest.mark.parametrize("key,value", [("0123", Fraction(10, 9)), ("0134", Fraction(5, 36)),
                                       ("0235", Fraction(26, 225))])
def test_delta4_values_match_independent_reference(key, value):
    data = sl2_cameral_data(QUARTICS[key], 4)
    assert residue_cubic_sl2(data, ONE, ONE, ONE) == value
    assert residue_cubic_closed_form(data, ONE, ONE, ONE) == value
    assert sympy_cubic(QUARTICS[key], 1, 1, 1) == value


B6 = "u*(u-1)*(u-2)*(u-3)*(u-4)*(u-5)*(u-6)*(u-7)"


def test_delta6_tensor_is_fully_symmetric():
    data = sl2_cameral_data(B6, 6)
    assert data.leaf_dimension == 3 == data.cameral_genus
    t = cubic_tensor(data)
    assert is_fully_symmetric(t)
    assert t[(0, 1, 2)] == Fraction(77, 5400)
    assert t[(0, 1, 2)] == sympy_cubic(B6, 1, "u", "u**2")


@settings(max_examples=15)
@given(st.lists(small_fractions, min_size=3, max_size=3), st.lists(small_fractions, min_size=3, max_size=3),
       st.lists(small_fractions, min_size=3, max_size=3))
def test_cubic_is_trilinear_symmetric_and_matches_closed_form(a, b, c):
    data = sl2_cameral_data(B6, 6)
    xi, eta, zeta = (RationalPoly.from_univariate(v, "u") for v in (a, b, c))
    val = residue_cubic_sl2(data, xi, eta, zeta)
    assert val == residue_cubic_sl2(data, xi, zeta, eta) == residue_cubic_sl2(data, zeta, xi, eta)
    assert val == residue_cubic_closed_form(data, xi, eta, zeta)


def test_cameral_input_validation():
    with pytest.raises(CameralError):
        sl2_cameral_data("u^2*(u-1)*(u-2)", 4)
    with pytest.raises(CameralError):
        sl2_cameral_data("u*(u-1)*(u-2)", 4)
    with pytest.raises(CameralError):
        sl2_cameral_data("(u^2+1)*(u-1)*(u-2)", 4)
    data = sl2_cameral_data(QUARTICS["0123"], 4)
    with pytest.raises(CameralError):
        residue_cubic_sl2(data, parse_poly("u", U), ONE, ONE)


# period oracle

@pytest.mark.parametrize("key", sorted(QUARTICS))
def test_frozen_oracle_values(key):
    o = period_oracle(parse_poly(QUARTICS[key], U), ONE)
    tau, a, d = ORACLE[key]
    assert abs(o.tau - tau) <= 1e-9 * abs(tau)
    assert abs(o.a_period - a) <= 1e-9 * abs(a)
    assert abs(o.dtau_dt - d) <= 1e-7 * abs(d)


@pytest.mark.parametrize("key", sorted(QUARTICS))
def test_one_calibration_constant(key):
    data = sl2_cameral_data(QUARTICS[key], 4)
    o = period_oracle(data.b, ONE)
    ratio = calibration_ratio(o, residue_cubic_sl2(data, ONE, ONE, ONE))
    assert abs(ratio - CALIBRATION) <= 1e-5 * abs(CALIBRATION)


def test_simple_convention_reads_the_t_inverse_coefficient():
    assert quadratic_residue(LaurentSeries("t", -1, [1], 4), "simple") == 1
    assert quadratic_residue(LaurentSeries("t", -2, [1], 4), "simple") == 0
    assert quadratic_residue(LaurentSeries("t", -2, [1], 4), "double") == 1
    # the simple reading scales with t -> c t, the double reading does not
    s = LaurentSeries("t", -1, [1], 4)
    assert quadratic_residue(rescale(s, Fraction(2)), "simple") == 2


@settings(max_examples=10)
@given(st.lists(small_fractions, min_size=3, max_size=3), st.lists(small_fractions, min_size=3, max_size=3),
       small_fractions)
def test_cubic_is_linear_in_each_slot(a, b, c):
    data = sl2_cameral_data(B6, 6)
    xi, eta = (RationalPoly.from_univariate(v, "u") for v in (a, b))
    u = RationalPoly.variable("u", U)
    combo = xi * c + eta
    lhs = residue_cubic_sl2(data, combo, u, u)
    assert lhs == c * residue_cubic_sl2(data, xi, u, u) + residue_cubic_sl2(data, eta, u, u)


def test_genus_two_bases_match_their_dimensions():
    curve = CurveModel.hyperelliptic("u^5 - u")
    assert section_basis(curve, 1).labels() == ["1 du/w", "u du/w"]
    assert section_basis(curve, 2).dimension == 3
    assert section_basis(CurveModel.rational(4), 2).dimension == 5


def test_oracle_root_collision_guard():
    from hitchinkit.cubic import OracleError
    b = parse_poly("u*(u-1)*(u-2)*(u-3)", U)
    # b + t*(u - u^2 ...) collides when the direction closes the gap at t = step
    direction = parse_poly("-(u*(u-1)*(u-2)*(u-3) - u^2*(u-2)*(u-3))", U) * 10000
    with pytest.raises(OracleError):
        period_oracle(b, direction, 1e-4)
