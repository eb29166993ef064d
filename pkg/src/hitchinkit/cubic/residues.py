"""Local expansions, residues of differentials and quadratic residues.

Differentials on a :class:`CurveModel` are ``R1(u) du + R2(u) du/w`` with
rational functions ``R1, R2`` given as (numerator, denominator) pairs of
polynomials in ``u``; on the rational model ``R2`` must be zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import LaurentSeries, RationalPoly, SeriesError, branch_expansion, parse_poly
from ..algebra.laurent import rational_sqrt
from .curves import U, CurveModel

T = "t"
RationalFn = tuple[RationalPoly, RationalPoly]


def rational_fn(num: RationalPoly | str | int, den: RationalPoly | str | int = 1) -> RationalFn:
    def conv(p):
        if isinstance(p, RationalPoly):
            return p.with_variables((U,))
        return parse_poly(str(p), (U,))
    d = conv(den)
    if d.is_zero():
        raise ZeroDivisionError("zero denominator")
    return conv(num), d


@dataclass(frozen=True)
class Differential:
    plain: RationalFn  # coefficient of du
    anti: RationalFn | None = None  # coefficient of du/w

    @classmethod
    def of(cls, num, den=1, anti_num=None, anti_den=1) -> Differential:
        anti = rational_fn(anti_num, anti_den) if anti_num is not None else None
        return cls(rational_fn(num, den), anti)


@dataclass(frozen=True)
class CurvePoint:
    """``u is None`` marks a point over infinity; ``sheet`` picks one of two such points."""

    u: Fraction | None
    w: Fraction | None = None
    sheet: int = 1

    @classmethod
    def affine(cls, u, w=None) -> CurvePoint:
        return cls(Fraction(u), None if w is None else Fraction(w))

    @classmethod
    def infinity(cls, sheet: int = 1) -> CurvePoint:
        return cls(None, None, sheet)


@dataclass(frozen=True)
class LocalChart:
    u: LaurentSeries
    du: LaurentSeries  # du/dt
    w: LaurentSeries | None  # None where w is irrelevant or unknown


def _reversed_poly(f: RationalPoly, degree: int, step: int) -> RationalPoly:
    """``t^(step*degree) f(t^-step)`` as a polynomial in ``t``."""
    coeffs = f.univariate_coefficients(U)
    terms = {((degree - k) * step,): c.constant_value() for k, c in enumerate(coeffs)}
    return RationalPoly((T,), terms)


def local_chart(curve: CurveModel, point: CurvePoint, prec: int = 30) -> LocalChart:
    one = LaurentSeries.constant(1, T, prec)
    if curve.kind == "rational":
        if point.u is None:
            return LocalChart(LaurentSeries(T, -1, [1], prec), LaurentSeries(T, -2, [-1], prec), None)
        return LocalChart(LaurentSeries(T, 0, [point.u, 1], prec), one, None)
    f = curve.f
    d = f.degree_in(U)
    if point.u is None:
        if d % 2:
            if point.sheet != 1:
                raise SeriesError("odd degree model has a single point at infinity")
            big = _reversed_poly(f, d, 2)
            w = LaurentSeries.from_poly(big, T, prec).sqrt() * LaurentSeries(T, -d, [1], prec + d)
            return LocalChart(LaurentSeries(T, -2, [1], prec), LaurentSeries(T, -3, [-2], prec), w)
        big = _reversed_poly(f, d, 1)
        w = LaurentSeries.from_poly(big, T, prec).sqrt() * LaurentSeries(T, -(d // 2), [point.sheet], prec + d)
        return LocalChart(LaurentSeries(T, -1, [1], prec), LaurentSeries(T, -2, [-1], prec), w)
    fu = f.evaluate({U: point.u})
    if fu == 0:
        # w is the local parameter
        s = branch_expansion(f, point.u, prec, T)
        u = s + point.u
        return LocalChart(u, s.derivative(), LaurentSeries(T, 1, [1], prec))
    u = LaurentSeries(T, 0, [point.u, 1], prec)
    if point.w is None:
        return LocalChart(u, one, None)
    if point.w * point.w != fu:
        raise ValueError(f"({point.u}, {point.w}) is not on the curve")
    w = LaurentSeries.from_poly(f, T, prec, point.u).sqrt()
    if w.leading_coefficient() != point.w:
        w = -w
    return LocalChart(u, one, w)


def _eval_fn(fn: RationalFn, u: LaurentSeries) -> LaurentSeries:
    num, den = fn
    return _as_series(num.evaluate({U: u}), u) / _as_series(den.evaluate({U: u}), u)


def _as_series(x, like: LaurentSeries) -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    return LaurentSeries.constant(x, like.variable, like.prec)


def residue(curve: CurveModel, omega: Differential, point: CurvePoint, prec: int = 30) -> Fraction:
    """Coefficient of ``t^-1 dt`` in a local parameter at ``point``."""
    if curve.kind == "rational" and omega.anti is not None:
        raise ValueError("the rational model has no du/w part")
    chart = local_chart(curve, point, prec)
    total = _as_series(_eval_fn(omega.plain, chart.u), chart.u) * chart.du
    if omega.anti is not None:
        part = _as_series(_eval_fn(omega.anti, chart.u), chart.u) * chart.du
        if chart.w is None:
            # w is a unit at this point (fibre over a non-branch u): du/w part is regular
            if part.valuation < 0:
                raise ValueError("du/w part has a pole here; give the w coordinate")
        else:
            total = total + part / chart.w
    return total.coefficient(-1)


def _polar_points(curve: CurveModel, omega: Differential) -> list[CurvePoint]:
    from ..algebra.univariate import rational_roots

    pts: list[CurvePoint] = []
    dens = [omega.plain[1]] + ([omega.anti[1]] if omega.anti else [])
    us: set[Fraction] = set()
    for den in dens:
        if not den.is_constant():
            roots = rational_roots(den, U)
            if sum(m for _, m in roots) != den.degree_in(U):
                raise ValueError("denominator must split over Q")
            us.update(r for r, _ in roots)
    if curve.kind == "hyperelliptic":
        us.update(r for r, _ in rational_roots(curve.f, U))
    for u0 in sorted(us):
        if curve.kind == "hyperelliptic" and curve.f.evaluate({U: u0}) != 0:
            w0 = _rational_sqrt_or_none(curve.f.evaluate({U: u0}))
            if w0 is None:
                # both points of the fibre see the same du-part residue
                if omega.anti is not None and omega.anti[1].evaluate({U: u0}) == 0:
                    raise ValueError("du/w part has a pole over a fibre with irrational w")
                pts.extend([CurvePoint.affine(u0), CurvePoint.affine(u0)])
            else:
                pts.extend([CurvePoint.affine(u0, w0), CurvePoint.affine(u0, -w0)])
        else:
            pts.append(CurvePoint.affine(u0))
    if curve.kind == "rational" or curve.f.degree_in(U) % 2:
        pts.append(CurvePoint.infinity())
    else:
        pts.extend([CurvePoint.infinity(1), CurvePoint.infinity(-1)])
    return pts


def _rational_sqrt_or_none(c: Fraction) -> Fraction | None:
    try:
        return rational_sqrt(c)
    except (ValueError, ArithmeticError):
        return None


def residue_sum(curve: CurveModel, omega: Differential, prec: int = 40) -> Fraction:
    """Sum of residues over every possible pole (finite poles, branch points, infinity)."""
    return sum((residue(curve, omega, p, prec) for p in _polar_points(curve, omega)), Fraction(0))


# quadratic residues

CONVENTIONS = {"double": -2, "simple": -1}


def adapted_quadratic_expansion(q: RationalFn, root: Fraction, prec: int = 20) -> LaurentSeries:
    """``R(u) du^2`` at a ramification point ``u = root``, in ``t`` with ``u = root + t^2``.

    Returns the coefficient series of ``dt^2``.
    """
    u = LaurentSeries(T, 0, [Fraction(root), 0, 1], prec)
    dudt = LaurentSeries(T, 1, [2], prec)
    return _as_series(_eval_fn(q, u), u) * dudt * dudt


def quadratic_residue(q_series: LaurentSeries, convention: str = "double") -> Fraction:
    """``Res^2`` of ``q(t) dt^2``.

    ``"double"`` reads the ``t^-2 dt^2`` coefficient, which is unchanged by
    ``t -> c t``; ``"simple"`` reads ``t^-1 dt^2``, which scales by ``c``.
    """
    try:
        k = CONVENTIONS[convention]
    except KeyError:
        raise ValueError(f"unknown convention {convention!r}") from None
    if q_series.valuation < -2:
        raise ValueError("pole of order > 2 is not supported")
    return q_series.coefficient(k)


def rescale(q_series: LaurentSeries, c: Fraction) -> LaurentSeries:
    """``q(t) dt^2`` rewritten in ``s`` with ``t = c s``."""
    c = Fraction(c)
    return LaurentSeries(q_series.variable, q_series.valuation,
                         [a * c ** (q_series.valuation + i + 2) for i, a in enumerate(q_series.coeffs)],
                         q_series.prec)


def rescaling_invariant(q_series: LaurentSeries, convention: str = "double", c: Fraction = Fraction(2)) -> bool:
    return quadratic_residue(q_series, convention) == quadratic_residue(rescale(q_series, c), convention)
