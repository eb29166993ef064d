"""Curve models over Q and explicit bases of twisted pluricanonical sections.

Rational model: ``P^1`` with affine coordinate ``u`` and ``D = delta * [inf]``,
so ``L = K(D)`` has degree ``delta - 2`` and ``H^0(L^m)`` is
``{P(u) du^m : deg P <= m(delta - 2)}``.

Hyperelliptic model: ``w^2 = f(u)`` with squarefree ``f`` and ``L = K``;
``H^0(K^m)`` is spanned by ``u^k (du/w)^m`` for ``k <= m(g-1)`` and
``w u^k (du/w)^m`` for ``k <= m(g-1) - g - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import RationalPoly, linalg, parse_poly
from ..algebra.univariate import discriminant_univariate
from ..spectral import FormalDivisor

U = "u"


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurveModel:
    kind: str  # "rational" or "hyperelliptic"
    f: RationalPoly | None
    genus: int
    delta: int
    twist: FormalDivisor

    @property
    def deg_l(self) -> int:
        return 2 * self.genus - 2 + self.delta

    @classmethod
    def rational(cls, delta: int) -> CurveModel:
        if delta < 0:
            raise CurveError("delta must be >= 0")
        twist = FormalDivisor.make("base", {"inf": delta} if delta else {})
        return cls("rational", None, 0, delta, twist)

    @classmethod
    def hyperelliptic(cls, f: RationalPoly | str) -> CurveModel:
        if isinstance(f, str):
            f = parse_poly(f, (U,))
        f = f.with_variables((U,))
        d = f.degree_in(U)
        if d < 3:
            raise CurveError("hyperelliptic model needs deg f >= 3")
        if discriminant_univariate(f, U).is_zero():
            raise CurveError("f is not squarefree")
        return cls("hyperelliptic", f, (d - 1) // 2, 0, FormalDivisor.make("base", {}))


@dataclass(frozen=True)
class SectionBasis:
    curve: CurveModel
    m: int
    # (coefficient polynomial in u, power of w) paired with the frame below
    basis: tuple[tuple[RationalPoly, int], ...]
    frame: str
    dimension: int
    riemann_roch: int
    pole_orders_ok: bool
    evaluation_rank: int

    @property
    def certified(self) -> bool:
        return (self.dimension == self.riemann_roch and self.pole_orders_ok
                and self.evaluation_rank == self.dimension)

    def labels(self) -> list[str]:
        out = []
        for p, wpow in self.basis:
            coef = str(p) if wpow == 0 else (f"w*({p})" if not p.is_constant() else
                                             ("w" if p.constant_value() == 1 else f"{p}*w"))
            out.append(f"{coef} {self.frame}")
        return out


def _u_power(k: int) -> RationalPoly:
    return RationalPoly.variable(U, (U,)) ** k


def riemann_roch_dimension(curve: CurveModel, m: int) -> int:
    deg = m * curve.deg_l
    g = curve.genus
    if curve.delta == 0 and m == 1:
        return g
    if deg > 2 * g - 2:
        return deg + 1 - g
    raise CurveError(f"deg L^{m} = {deg} is in the special range (<= 2g - 2)")


def _evaluation_rank(polys: list[RationalPoly]) -> int:
    if not polys:
        return 0
    pts = [Fraction(k) for k in range(len(polys))]
    mat = [[p.evaluate({U: x}) for p in polys] for x in pts]
    return linalg.rank(mat)


def section_basis(curve: CurveModel, m: int) -> SectionBasis:
    if m < 1:
        raise CurveError("m must be >= 1")
    rr = riemann_roch_dimension(curve, m)
    if curve.kind == "rational":
        top = m * (curve.delta - 2)
        basis = [(_u_power(k), 0) for k in range(top + 1)]
        # u^k du^m has pole order 2m + k at infinity; m*D allows m*delta
        poles_ok = all(2 * m + k <= m * curve.delta for k in range(top + 1))
        rank = _evaluation_rank([p for p, _ in basis])
        return SectionBasis(curve, m, tuple(basis), f"du^{m}" if m > 1 else "du",
                            len(basis), rr, poles_ok, rank)
    g = curve.genus
    even = curve.f.degree_in(U) % 2 == 0
    plain = [(_u_power(k), 0) for k in range(m * (g - 1) + 1)]
    twisted = [(_u_power(k), 1) for k in range(m * (g - 1) - g)]
    basis = plain + twisted
    poles_ok = all(_order_at_infinity(g, m, k, wpow, even) >= 0 for (p, wpow) in basis
                   for k in [p.total_degree()])
    rank = _evaluation_rank([p for p, w in basis if w == 0]) + \
        _evaluation_rank([p for p, w in basis if w == 1])
    frame = "du/w" if m == 1 else f"(du/w)^{m}"
    return SectionBasis(curve, m, tuple(basis), frame, len(basis), rr, poles_ok, rank)


def _order_at_infinity(g: int, m: int, k: int, wpow: int, even: bool) -> int:
    """Vanishing order of ``w^wpow u^k (du/w)^m`` at a point over infinity."""
    if even:
        # u = 1/s, w ~ s^-(g+1), du/w ~ s^(g-1) ds
        return m * (g - 1) - k - wpow * (g + 1)
    # u = s^-2, w ~ s^-(2g+1), du/w ~ s^(2g-2) ds
    return m * (2 * g - 2) - 2 * k - wpow * (2 * g + 1)


def serre_pairing_nondegenerate(sb: SectionBasis) -> bool:
    """Pairing against simple principal parts ``1/(u - p_j)`` at ``p_j = 1, 2, ...``.

    ``<s, 1/(u - p)> = Res_p(s / (u - p))`` is the value of the coefficient
    function at ``p``.  The ``w``-free and ``w``-twisted families pair
    separately on the hyperelliptic model.
    """
    plain = [p for p, w in sb.basis if w == 0]
    twisted = [p for p, w in sb.basis if w == 1]
    ok = True
    for fam in (plain, twisted):
        if fam:
            mat = [[p.evaluate({U: Fraction(j + 1)}) for p in fam] for j in range(len(fam))]
            ok = ok and linalg.det(mat) != 0
    return ok
