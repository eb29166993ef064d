"""G2 Hitchin base: the Langlands involution, discriminant factors, cameral equations, dimensions.

Base coordinates are the pinned invariants ``(f, q)`` with
``det(lam - X) = lam (lam^6 - f lam^4 + f^2/4 lam^2 - q)`` on the 7-dim
realization.  ``qcheck = -q + f^3/54``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import RationalPoly
from .algebra.univariate import discriminant_univariate, resultant
from .liecore import build_root_system, g2_duality_map, g2_epsilon_coordinates
from .quotient import cartan_names, discriminant_on_t, invariant_generators, rewrite_in_invariants

Scalar = Union[Fraction, RationalPoly]


def _cube_over_54(f):
    return f ** 3 * Fraction(1, 54)


@dataclass(frozen=True)
class G2BasePoint:
    f: Scalar
    q: Scalar

    @property
    def qcheck(self) -> Scalar:
        return -self.q + _cube_over_54(self.f)

    def as_tuple(self) -> tuple:
        return (self.f, self.q)


def langlands_involution(p: G2BasePoint) -> G2BasePoint:
    return G2BasePoint(p.f, p.qcheck)


def is_involution_fixed(p: G2BasePoint) -> bool:
    """``l(p) = p`` exactly when ``q = f^3/108``."""
    return langlands_involution(p) == p


@dataclass(frozen=True)
class G2Discriminant:
    value: Scalar  # 27 q qcheck
    short_root_factor: Scalar  # product over the six short roots
    long_root_factor: Scalar  # product over the six long roots


def g2_discriminant(p: G2BasePoint) -> G2Discriminant:
    short, long = root_factor_forms()
    point = {"f": p.f, "q": p.q}
    if isinstance(p.f, RationalPoly) or isinstance(p.q, RationalPoly):
        ev = lambda poly: poly.subs(point)  # noqa: E731
    else:
        ev = lambda poly: poly.evaluate({k: Fraction(v) for k, v in point.items()})  # noqa: E731
    return G2Discriminant(27 * p.q * p.qcheck, ev(short), ev(long))


_FACTOR_CACHE: dict = {}


def root_factor_forms() -> tuple[RationalPoly, RationalPoly]:
    """Short- and long-root products on ``t`` rewritten in ``(f, q)``."""
    if not _FACTOR_CACHE:
        disc = discriminant_on_t("G2")
        cart = invariant_generators("G2").on_cartan(cartan_names(2))
        short = rewrite_in_invariants(disc.short_factor, cart, (2, 6), ("f", "q"))
        long = rewrite_in_invariants(disc.long_factor, cart, (2, 6), ("f", "q"))
        _FACTOR_CACHE["forms"] = (short, long)
    return _FACTOR_CACHE["forms"]


# cameral curve equations

XY = ("x", "y")
SQRT3 = "r3"


def epsilon_frame_invariants() -> tuple[RationalPoly, RationalPoly]:
    """``(f, q)`` as polynomials in coordinates on ``(e1 - e2, 2 e2 - e1 - e3)``."""
    x, y = (RationalPoly.variable(v, XY) for v in XY)
    coords = g2_epsilon_coordinates(x, y)
    sub = {"x1": coords[0], "x2": coords[1]}
    return tuple(g.subs(sub).with_variables(XY) for g in invariant_generators("G2").on_cartan())


@dataclass(frozen=True)
class CameralSystems:
    f0: Scalar
    q0: Scalar
    system_invariant: tuple[RationalPoly, RationalPoly]
    system_rotated: tuple[RationalPoly, RationalPoly]
    system_hitchin: tuple[RationalPoly, RationalPoly]
    # epsilon-frame (x, y) = (A + sqrt(3) B) applied to rotated (x, y)
    change_rational: tuple[tuple[Fraction, ...], ...]
    change_sqrt3: tuple[tuple[Fraction, ...], ...]


CHANGE_RATIONAL = ((Fraction(3, 2), Fraction(0)), (Fraction(1), Fraction(0)))
CHANGE_SQRT3 = ((Fraction(0), Fraction(1, 2)), (Fraction(0), Fraction(0)))


def cameral_equations(f0: object, q0: object) -> CameralSystems:
    f0 = f0 if isinstance(f0, RationalPoly) else Fraction(f0)
    q0 = q0 if isinstance(q0, RationalPoly) else Fraction(q0)
    x, y = (RationalPoly.variable(v, XY) for v in XY)
    i1, i2 = epsilon_frame_invariants()
    inv = (i1 - f0, i2 - q0)
    rot = ((x ** 2 + y ** 2) * Fraction(3, 2) - f0,
           (x ** 6 - x ** 4 * y ** 2 * 6 + x ** 2 * y ** 4 * 9) * Fraction(1, 16) - q0)
    hit = (x ** 2 + y ** 2 - f0 * Fraction(2, 3),
           x ** 6 - f0 * x ** 4 + f0 * f0 * Fraction(1, 4) * x ** 2 - q0)
    return CameralSystems(f0, q0, inv, rot, hit, CHANGE_RATIONAL, CHANGE_SQRT3)


def _reduce_sqrt3(p: RationalPoly) -> RationalPoly:
    """Reduce modulo ``r3^2 = 3``."""
    if SQRT3 not in p.variables:
        return p
    i = p.variables.index(SQRT3)
    terms: dict = {}
    for m, c in p.items():
        e = m[i]
        mono = m[:i] + (e % 2,) + m[i + 1:]
        terms[mono] = terms.get(mono, Fraction(0)) + c * 3 ** (e // 2)
    return RationalPoly(p.variables, terms)


def change_is_exact(systems: CameralSystems | None = None) -> bool:
    """The recorded change carries the invariant system onto the rotated one, over Q(sqrt 3)."""
    s = systems or cameral_equations(0, 0)
    vs = XY + (SQRT3,)
    x, y, r3 = (RationalPoly.variable(v, vs) for v in vs)
    a, b = s.change_rational, s.change_sqrt3
    img = {
        "x": x * a[0][0] + y * a[0][1] + r3 * (x * b[0][0] + y * b[0][1]),
        "y": x * a[1][0] + y * a[1][1] + r3 * (x * b[1][0] + y * b[1][1]),
    }
    for inv, rot in zip(s.system_invariant, s.system_rotated):
        moved = _reduce_sqrt3(inv.subs(img))
        if moved != rot.with_variables(moved.variables):
            return False
    return True


def rotated_equals_hitchin_on_quadric(systems: CameralSystems) -> bool:
    """Second equations agree once ``f0`` is eliminated through the first (symbolic in x, y)."""
    x, y = (RationalPoly.variable(v, XY) for v in XY)
    f_quadric = (x ** 2 + y ** 2) * Fraction(3, 2)
    rot2 = systems.system_rotated[1] + systems.q0
    hit = x ** 6 - f_quadric * x ** 4 + f_quadric * f_quadric * Fraction(1, 4) * x ** 2
    return rot2.with_variables(hit.variables) == hit


def sample_solution_consistency(count: int = 10, rng: random.Random | None = None) -> bool:
    """Points ``(u, v)`` solving the rotated system map into solutions of the invariant system.

    Points are parametrized by rational ``(u, v)``, giving ``(f0, q0)`` and
    a point of the epsilon frame in ``Q(sqrt 3)^2``; everything is checked exactly.
    """
    rng = rng or random.Random(0)
    for _ in range(count):
        u = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        v = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        f0 = Fraction(3, 2) * (u * u + v * v)
        q0 = u * u * (u * u - 3 * v * v) ** 2 / 16
        s = cameral_equations(f0, q0)
        pt = {"x": u, "y": v}
        if any(eq.evaluate(pt) for eq in s.system_rotated + s.system_hitchin):
            return False
        r3 = RationalPoly.variable(SQRT3)
        a, b = s.change_rational, s.change_sqrt3
        img = {
            "x": r3 * (u * b[0][0] + v * b[0][1]) + (u * a[0][0] + v * a[0][1]),
            "y": r3 * (u * b[1][0] + v * b[1][1]) + (u * a[1][0] + v * a[1][1]),
        }
        for eq in s.system_invariant:
            if not _reduce_sqrt3(eq.subs(img)).is_zero():
                return False
    return True


def bezout_count(f0: object, q0: object, shears: range = range(0, 12)) -> dict:
    """Affine solution count of the invariant system via a sheared resultant.

    Bezout bounds the count by ``2 * 6``.  After ``x -> x + c*y`` a
    squarefree ``Res_y`` of degree 12 gives 12 distinct projections, hence
    exactly 12 solutions.  Shears ``c`` are tried in order.
    """
    s = cameral_equations(f0, q0)
    bound = s.system_invariant[0].total_degree() * s.system_invariant[1].total_degree()
    x, y = (RationalPoly.variable(v, XY) for v in XY)
    out = {"bezout_bound": bound, "resultant_degree": None, "squarefree": False,
           "shear": None, "solutions": None}
    for c in shears:
        sheared = [eq.subs({"x": x + y * c}).with_variables(XY) for eq in s.system_invariant]
        res = resultant(sheared[0], sheared[1], "y")
        deg = res.degree_in("x")
        out["resultant_degree"] = deg
        if deg > 1 and not discriminant_univariate(res, "x").is_zero():
            out.update(squarefree=True, shear=c, solutions=deg if deg == bound else None)
            break
    return out


# dimensions

@dataclass(frozen=True)
class G2DimensionTable:
    genus: int
    delta: int
    dim_base: int
    dim_higgs0: int
    dim_B0: int
    dim_leaf_space: int
    caveats: tuple[str, ...] = ()


def g2_dimension_table(genus: int, delta: int) -> G2DimensionTable:
    if genus < 0 or delta < 0:
        raise ValueError("genus and delta must be >= 0")
    g, d = genus, delta
    caveats = ()
    if 2 * (2 * g - 2 + d) <= 2 * g:
        caveats = ("formulas evaluated as stated; L^2 is not very ample for this (g, delta)",)
    return G2DimensionTable(g, d, 14 * (g - 1) + 8 * d, 28 * (g - 1) + 14 * d,
                            14 * (g - 1) + 6 * d, 2 * d, caveats)


# Cartan-level cross-check of the base involution

def cartan_involution_image(coroot_coords) -> tuple[Fraction, Fraction]:
    """``(f, q)`` at ``l(t)`` with ``l = R/sqrt(3)``: ``f(Rt)/3`` and ``q(Rt)/27``."""
    dmap = g2_duality_map(build_root_system("G2"))
    m = dmap.coroot_matrix
    t = [Fraction(c) for c in coroot_coords]
    rt = [m[i][0] * t[0] + m[i][1] * t[1] for i in range(2)]
    inv = invariant_generators("G2")
    f_val, q_val = (g.evaluate({"x1": rt[0], "x2": rt[1]}) for g in inv.on_cartan())
    s = dmap.scale_sq
    return (f_val * s, q_val * s ** 3)


def cartan_matches_base_formula(count: int = 20, rng: random.Random | None = None) -> bool:
    rng = rng or random.Random(0)
    inv = invariant_generators("G2").on_cartan()
    for _ in range(count):
        t = (Fraction(rng.randint(-20, 20), rng.randint(1, 7)),
             Fraction(rng.randint(-20, 20), rng.randint(1, 7)))
        f_val, q_val = (g.evaluate({"x1": t[0], "x2": t[1]}) for g in inv)
        expected = langlands_involution(G2BasePoint(f_val, q_val)).as_tuple()
        if cartan_involution_image(t) != expected:
            return False
    return True
