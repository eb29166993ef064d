from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hitchinkit.algebra import RationalPoly, linalg, parse_poly
from hitchinkit.spectral import (FamilyError, FormalDivisor, MatrixFamily, branch_and_singular,
                                 linear_zero_set, norm_pushforward, numerology, sl2_prym_predicate,
                                 spectral_equation, tautological_family)
from strategies import small_fractions

FAMILIES = {
    "sl2_quadratic": MatrixFamily.from_strings(["s"], [["0", "s"], ["1", "0"]]),
    "two_param": MatrixFamily.from_strings(["a", "b"], [["a", "b^2"], ["1", "-a"]], trace_free=True),
    "three_by_three": MatrixFamily.from_strings(["s", "t"], [["0", "0", "t"], ["1", "0", "s"], ["0", "1", "0"]]),
    "mat2": tautological_family(2),
}


@pytest.mark.parametrize("name", sorted(FAMILIES))
@given(data=st.data())
def test_specialization_commutes_with_spectral_equation(name, data):
    fam = FAMILIES[name]
    point = {v: data.draw(small_fractions) for v in fam.variables}
    eq = spectral_equation(fam)
    lam = data.draw(small_fractions)
    mat = fam.specialize(point)
    n = fam.size
    shifted = [[(lam if i == j else 0) - mat[i][j] for j in range(n)] for i in range(n)]
    assert eq.polynomial.evaluate({**point, "lam": lam}) == linalg.det(shifted)


def test_sl2_family():
    fam = FAMILIES["sl2_quadratic"]
    assert str(spectral_equation(fam).polynomial) == "-s + lam^2"
    loci = branch_and_singular(fam)
    assert str(loci.branch) == "4*s"


def test_general_two_by_two_branch_is_trace_squared_minus_four_det():
    fam = tautological_family(2)
    m11, m12, m21, m22 = (RationalPoly.variable(v, fam.variables) for v in fam.variables)
    tr = m11 + m22
    det = m11 * m22 - m12 * m21
    assert branch_and_singular(fam).branch == tr ** 2 - det * 4


def test_mat2_singular_locus_is_the_scalar_line():
    loci = branch_and_singular(tautological_family(2))
    zs = linear_zero_set(loci.singular)
    assert zs["dimension"] == 1
    z = RationalPoly.variable("z1", ("z1",))
    img = zs["parametrization"]
    assert img["m11"] == img["m22"] == img["lam"] == z
    assert img["m12"].is_zero() and img["m21"].is_zero()


def test_smooth_total_space_has_empty_singular_locus():
    loci = branch_and_singular(FAMILIES["sl2_quadratic"])
    assert any(g.is_constant() and not g.is_zero() for g in loci.singular)
    assert linear_zero_set(loci.singular) is None


def test_family_validation():
    with pytest.raises(FamilyError):
        MatrixFamily.from_strings(["s"], [["s", "1"], ["0", "s"]], trace_free=True)
    with pytest.raises(FamilyError):
        MatrixFamily.from_strings(["lam"], [["lam"]])
    with pytest.raises(FamilyError):
        MatrixFamily.from_json({"matrix": [["1"]]})


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("g", range(0, 6))
def test_numerology_identities(n, g):
    rep = numerology("GL", n, g)
    v = rep.values
    assert v["dim_base_GL"] == n * n * (g - 1) + 1 == v["spectral_genus"]
    assert v["deg_det_pushforward_O"] == -n * (n - 1) * (g - 1)


@pytest.mark.parametrize("g", range(2, 8))
def test_sl2_numerology(g):
    v = numerology("SL", 2, g).values
    assert v["moduli_dim"] == 6 * g - 6
    assert v["sl2_cameral_genus"] == 4 * g - 3
    assert v["dim_base_SL"] == 3 * g - 3


def test_twisted_numerology():
    v = numerology("SL", 2, 0, delta=4).values
    # rational base, L = O(2): the elliptic spectral curve
    assert v["spectral_genus"] == 1
    assert v["dim_base_SL"] == 5


def test_numerology_caveats():
    assert numerology("GL", 1, 3).caveats
    assert numerology("GL", 2, 1).caveats
    assert not numerology("GL", 2, 3).caveats
    with pytest.raises(ValueError):
        numerology("SO", 3, 2)


def test_norm_and_prym_predicate():
    cover = {"p1": "x", "p2": "x", "p3": "y", "p4": "y"}
    sigma = {"p1": "p2", "p2": "p1", "p3": "p4", "p4": "p3"}
    d = FormalDivisor.make("C~", {"p1": 1, "p2": -1, "p3": 2, "p4": -2}, cover)
    assert norm_pushforward(d).as_dict() == {}
    assert sl2_prym_predicate(d, sigma)
    e = FormalDivisor.make("C~", {"p1": 1, "p3": 1}, cover)
    assert norm_pushforward(e).as_dict() == {"x": 1, "y": 1}
    assert not sl2_prym_predicate(e, sigma)
    assert (e + -e).degree == 0
    with pytest.raises(ValueError):
        sl2_prym_predicate(d, {"p1": "p2", "p2": "p3"})


@given(st.dictionaries(st.sampled_from(["p1", "p2", "p3", "p4"]), st.integers(-3, 3)))
def test_anti_invariant_divisors_have_zero_norm(mults):
    cover = {"p1": "x", "p2": "x", "p3": "y", "p4": "y"}
    sigma = {"p1": "p2", "p2": "p1", "p3": "p4", "p4": "p3"}
    d = FormalDivisor.make("C~", mults, cover)
    anti = d + -FormalDivisor.make("C~", {sigma[p]: k for p, k in d.multiplicities}, cover)
    assert sl2_prym_predicate(anti, sigma)
    assert norm_pushforward(anti).degree == 0


@pytest.mark.parametrize("name", sorted(FAMILIES))
@given(data=st.data())
def test_branch_vanishes_exactly_at_repeated_roots(name, data):
    from hitchinkit.algebra import discriminant_univariate
    fam = FAMILIES[name]
    point = {v: data.draw(small_fractions) for v in fam.variables}
    if data.draw(st.booleans()) and name == "sl2_quadratic":
        point = {"s": Fraction(0)}
    branch = branch_and_singular(fam).branch.evaluate(point)
    special = spectral_equation(fam).polynomial.subs(point).with_variables(("lam",))
    assert branch == discriminant_univariate(special, "lam").constant_value()
    assert (branch == 0) == (discriminant_univariate(special, "lam").is_zero())


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("g", range(0, 6))
def test_euler_characteristic_bookkeeping(n, g):
    v = numerology("GL", n, g).values
    assert 1 - v["spectral_genus"] == v["deg_det_pushforward_O"] - n * (g - 1)


def test_pushforward_degree_bookkeeping():
    v = numerology("GL", 2, 2).values
    # deg pi_* L = d + offset, and deg det pi_* L = deg Nm(L) + deg det pi_* O
    assert v["deg_pushforward_offset"] == v["deg_det_pushforward_O"] == -2


@given(st.dictionaries(st.sampled_from(["p1", "p2", "p3"]), st.integers(-3, 3)),
       st.dictionaries(st.sampled_from(["p1", "p2", "p3"]), st.integers(-3, 3)))
def test_norm_is_a_degree_preserving_homomorphism(a, b):
    cover = {"p1": "x", "p2": "x", "p3": "y"}
    da, db = FormalDivisor.make("C~", a, cover), FormalDivisor.make("C~", b, cover)
    assert norm_pushforward(da + db) == norm_pushforward(da) + norm_pushforward(db)
    assert norm_pushforward(da).degree == da.degree
