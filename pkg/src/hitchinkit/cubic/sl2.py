"""The residue cubic for SL2 cameral covers ``lam^2 = b`` over the rational model.

With ``D = delta * [inf]`` and ``L = K(D)``, a base point ``b`` is a
polynomial of degree ``2(delta - 2)``.  The leaf tangent space is
``H^0(L^2(-D)) = {xi(u) du^2 : deg xi <= delta - 4}``, matched with the
anti-invariant differentials ``xi du / lam``.  For these inputs

    c(xi)(eta, zeta) = 1/2 sum_p Res^2_p( (xi / b) * eta zeta du^2 / b )

where ``p`` runs over the zeros of ``b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..algebra import RationalPoly, parse_poly
from ..algebra.univariate import discriminant_univariate, rational_roots
from .curves import U
from .residues import adapted_quadratic_expansion, quadratic_residue, rescaling_invariant

Poly = RationalPoly


class CameralError(ValueError):
    pass


def _upoly(p) -> RationalPoly:
    if isinstance(p, RationalPoly):
        return p.with_variables((U,))
    return parse_poly(str(p), (U,))


@dataclass(frozen=True)
class SL2CameralData:
    b: RationalPoly
    delta: int
    ramification: tuple[Fraction, ...]

    @property
    def cameral_genus(self) -> int:
        return self.delta - 3

    @property
    def leaf_dimension(self) -> int:
        return self.delta - 3

    def leaf_basis(self) -> tuple[RationalPoly, ...]:
        return tuple(RationalPoly.variable(U, (U,)) ** k for k in range(self.delta - 3))

    def anti_invariant_count(self) -> int:
        # xi du / lam is holomorphic on lam^2 = b iff deg xi <= genus - 1
        return self.cameral_genus

    def in_leaf(self, xi: RationalPoly) -> bool:
        return xi.is_zero() or xi.degree_in(U) <= self.delta - 4


def sl2_cameral_data(b, delta: int) -> SL2CameralData:
    b = _upoly(b)
    if delta < 4:
        raise CameralError("delta >= 4 is needed for a nonzero leaf")
    if b.degree_in(U) != 2 * (delta - 2):
        raise CameralError(f"b must have degree 2(delta - 2) = {2 * (delta - 2)}")
    if discriminant_univariate(b, U).is_zero():
        raise CameralError("b has a repeated zero")
    roots = rational_roots(b, U)
    if len(roots) != b.degree_in(U):
        raise CameralError("zeros of b must be rational")
    return SL2CameralData(b, delta, tuple(r for r, _ in roots))


def quadratic_differential(data: SL2CameralData, xi, eta, zeta) -> tuple[RationalPoly, RationalPoly]:
    """``(xi/b) * (eta du/lam)(zeta du/lam)`` as a rational function times ``du^2``."""
    return _upoly(xi) * _upoly(eta) * _upoly(zeta), data.b * data.b


def residue_cubic_sl2(data: SL2CameralData, xi, eta, zeta, self_test: bool = True) -> Fraction:
    vals = [_upoly(v) for v in (xi, eta, zeta)]
    for v in vals:
        if not data.in_leaf(v):
            raise CameralError(f"{v} is outside the leaf tangent model")
    q = quadratic_differential(data, *vals)
    prec = 4 + 2 * data.b.degree_in(U)
    total = Fraction(0)
    for r in data.ramification:
        series = adapted_quadratic_expansion(q, r, prec)
        if self_test and not rescaling_invariant(series, "double"):
            raise ArithmeticError("quadratic residue changed under rescaling")
        total += quadratic_residue(series, "double")
    return total / 2


def residue_cubic_closed_form(data: SL2CameralData, xi, eta, zeta) -> Fraction:
    """Independent closed form ``2 sum_r xi eta zeta(r) / b'(r)^2``."""
    db = data.b.partial(U)
    prod = _upoly(xi) * _upoly(eta) * _upoly(zeta)
    return 2 * sum((prod.evaluate({U: r}) / db.evaluate({U: r}) ** 2 for r in data.ramification),
                   Fraction(0))


def cubic_tensor(data: SL2CameralData) -> dict[tuple[int, int, int], Fraction]:
    """All components ``c(e_i)(e_j, e_k)`` on the leaf monomial basis."""
    basis = data.leaf_basis()
    return {idx: residue_cubic_sl2(data, *(basis[i] for i in idx))
            for idx in itertools.product(range(len(basis)), repeat=3)}


def is_fully_symmetric(tensor: dict[tuple[int, int, int], Fraction]) -> bool:
    return all(tensor[tuple(p)] == v for idx, v in tensor.items()
               for p in itertools.permutations(idx))
