"""Truncated Laurent series with exact rational coefficients.

A series is ``sum(c_k * x^(valuation + k)) + O(x^prec)``.  Every
operation propagates ``prec`` so that the result is exact modulo the
returned truncation.  Ring operations accept Fractions, ints and other
series in the same variable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import RationalPoly, as_fraction


class SeriesError(ArithmeticError):
    pass


class LaurentSeries:
    __slots__ = ("variable", "valuation", "coeffs", "prec")

    def __init__(self, variable: str, valuation: int, coeffs: Sequence[object], prec: int):
        cs = [as_fraction(c) for c in coeffs]
        cs = cs[: max(prec - valuation, 0)]
        k = 0
        while k < len(cs) and not cs[k]:
            k += 1
        cs = cs[k:]
        valuation += k
        while cs and not cs[-1]:
            cs.pop()
        if not cs:
            valuation = prec
        self.variable = variable
        self.valuation = valuation
        self.coeffs = tuple(cs)
        self.prec = prec

    # constructors
    @classmethod
    def from_poly(cls, p: RationalPoly, var: str, prec: int, center: Fraction = Fraction(0)) -> LaurentSeries:
        """Expand a univariate polynomial around ``center`` in the local coordinate ``var``."""
        x = cls(var, 1, [1], prec)
        shifted = p.evaluate({p.variables[0]: x + center}) if p.variables else p.constant_value()
        if isinstance(shifted, LaurentSeries):
            return shifted.truncate(prec)
        return cls.constant(shifted, var, prec)

    @classmethod
    def constant(cls, c: object, var: str, prec: int) -> LaurentSeries:
        return cls(var, 0, [c], prec)

    @classmethod
    def monomial(cls, c: object, exponent: int, var: str, prec: int) -> LaurentSeries:
        return cls(var, exponent, [c], prec)

    # accessors
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> Fraction:
        if exponent >= self.prec:
            raise SeriesError(f"coefficient x^{exponent} beyond truncation O(x^{self.prec})")
        k = exponent - self.valuation
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise SeriesError("series is zero to its truncation order")
        return self.coeffs[0]

    def truncate(self, prec: int) -> LaurentSeries:
        return LaurentSeries(self.variable, self.valuation, self.coeffs, min(prec, self.prec))

    def terms(self) -> list[tuple[int, Fraction]]:
        return [(self.valuation + k, c) for k, c in enumerate(self.coeffs) if c]

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{self.variable}^{e}" for e, c in self.terms()) or "0"
        return f"LaurentSeries({body} + O({self.variable}^{self.prec}))"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.variable, self.prec, self.terms()) == (other.variable, other.prec, other.terms())

    __hash__ = None

    def _coerce(self, other: object) -> LaurentSeries:
        if isinstance(other, LaurentSeries):
            if other.variable != self.variable:
                raise SeriesError(f"series in {self.variable!r} and {other.variable!r}")
            return other
        return LaurentSeries.constant(as_fraction(other), self.variable, self.prec)

    # ring operations
    def __add__(self, other: object) -> LaurentSeries:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        prec = min(self.prec, other.prec)
        lo = min(self.valuation, other.valuation)
        size = max(prec - lo, 0)
        out = [Fraction(0)] * size
        for s in (self, other):
            for k, c in enumerate(s.coeffs):
                idx = s.valuation + k - lo
                if idx < size:
                    out[idx] += c
        return LaurentSeries(self.variable, lo, out, prec)

    __radd__ = __add__

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.variable, self.valuation, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other: object) -> LaurentSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> LaurentSeries:
        return (-self) + other

    def __mul__(self, other: object) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return LaurentSeries(self.variable, self.valuation, [x * c for x in self.coeffs], self.prec)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        va, vb = self.valuation, other.valuation
        prec = min(self.prec + vb, other.prec + va)
        val = va + vb
        size = max(prec - val, 0)
        out = [Fraction(0)] * size
        for i, a in enumerate(self.coeffs):
            if i >= size:
                break
            for j, b in enumerate(other.coeffs):
                if i + j >= size:
                    break
                out[i + j] += a * b
        return LaurentSeries(self.variable, val, out, prec)

    __rmul__ = __mul__

    def inverse(self) -> LaurentSeries:
        if not self.coeffs:
            raise SeriesError("cannot invert a series that vanishes to its truncation order")
        v = self.valuation
        rel = self.prec - v
        a = self.coeffs
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, rel):
            acc = Fraction(0)
            for k in range(1, min(n, len(a) - 1) + 1):
                acc += a[k] * out[n - k]
            out.append(-acc * inv0)
        return LaurentSeries(self.variable, -v, out, -v + rel)

    def __truediv__(self, other: object) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: object) -> LaurentSeries:
        return self.inverse() * other

    def __pow__(self, k: int) -> LaurentSeries:
        if not isinstance(k, int):
            raise SeriesError("integer powers only")
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentSeries.constant(1, self.variable, self.prec - self.valuation if self.coeffs else self.prec)
        base = self
        first = True
        while k:
            if k & 1:
                result = base if first else result * base
                first = False
            k >>= 1
            if k:
                base = base * base
        return result

    # analytic operations
    def derivative(self) -> LaurentSeries:
        return LaurentSeries(self.variable, self.valuation - 1,
                             [c * (self.valuation + k) for k, c in enumerate(self.coeffs)],
                             self.prec - 1)

    def sqrt(self) -> LaurentSeries:
        """Square root with positive rational leading coefficient root.

        Requires even valuation and a leading coefficient that is a square in Q.
        """
        if not self.coeffs:
            raise SeriesError("square root of a vanishing series")
        if self.valuation % 2:
            raise SeriesError("odd valuation has no Laurent square root")
        c0 = self.coeffs[0]
        r0 = rational_sqrt(c0)
        half = self.valuation // 2
        rel = self.prec - self.valuation
        a = list(self.coeffs) + [Fraction(0)] * max(0, rel - len(self.coeffs))
        out = [r0]
        for n in range(1, rel):
            acc = a[n]
            for k in range(1, n):
                acc -= out[k] * out[n - k]
            out.append(acc / (2 * r0))
        return LaurentSeries(self.variable, half, out, half + rel)

    def compose(self, inner: LaurentSeries) -> LaurentSeries:
        """``self(inner)`` for ``inner`` of positive valuation."""
        if inner.coeffs and inner.valuation < 1:
            raise SeriesError("inner series must have positive valuation")
        if not inner.coeffs:
            raise SeriesError("composition with a vanishing inner series")
        v = inner.valuation
        # inner = x^v * unit known to relative order r; truncation O(inner^prec)
        r = inner.prec - v
        prec = min(v * self.prec, v * self.valuation + r)
        total = LaurentSeries(inner.variable, prec, [], prec)
        power_cache: dict[int, LaurentSeries] = {}

        def power(e: int) -> LaurentSeries:
            if e not in power_cache:
                power_cache[e] = (inner ** e).truncate(prec)
            return power_cache[e]

        for e, c in self.terms():
            if e * v >= prec:
                break
            total = total + power(e) * c
        return total.truncate(prec)

    def reversion(self, new_variable: str | None = None) -> LaurentSeries:
        """Compositional inverse of ``c1 x + c2 x^2 + ...`` with c1 != 0."""
        if self.valuation != 1:
            raise SeriesError("reversion needs a series of valuation exactly one")
        var = new_variable or self.variable
        n_terms = self.prec - 1
        c1 = self.coeffs[0]
        g = [Fraction(0), 1 / c1]
        for n in range(2, n_terms + 1):
            trial = LaurentSeries(var, 0, g + [Fraction(0)], n + 1)
            hx = self.relabel(var).compose(trial)
            g.append(-hx.coefficient(n) / c1)
        return LaurentSeries(var, 0, g, n_terms + 1)

    def relabel(self, var: str) -> LaurentSeries:
        return LaurentSeries(var, self.valuation, self.coeffs, self.prec)

    def substitute_power(self, k: int, var: str | None = None) -> LaurentSeries:
        """Series in ``t`` obtained by putting ``x = t^k``."""
        out = [Fraction(0)] * (len(self.coeffs) * k)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return LaurentSeries(var or self.variable, self.valuation * k, out, self.prec * k)

    def evaluate_poly(self, p: RationalPoly) -> LaurentSeries:
        """Substitute this series into a univariate polynomial."""
        val = p.evaluate({p.variables[0]: self}) if p.variables else p.constant_value()
        if isinstance(val, LaurentSeries):
            return val
        return LaurentSeries.constant(val, self.variable, self.prec)


def rational_sqrt(c: Fraction) -> Fraction:
    c = Fraction(c)
    if c < 0:
        raise SeriesError(f"{c} has no rational square root")
    n, d = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if n * n != c.numerator or d * d != c.denominator:
        raise SeriesError(f"{c} is not a square in Q")
    return Fraction(n, d)


@dataclass(frozen=True)
class BranchSpec:
    """The local branch ``t^2 = h(u)`` near a simple zero ``center`` of ``h``."""

    relation: RationalPoly
    center: Fraction


def laurent_expand(expr, center: object = 0, order: int = 6, var: str = "x") -> LaurentSeries:
    """Local expansion at ``center``.

    ``expr`` is one of

    * a :class:`RationalPoly` in one variable;
    * a pair ``(numerator, denominator)`` of such polynomials (a rational function);
    * a :class:`BranchSpec`; the result is ``u - center`` expressed in the
      branch coordinate ``t`` (named ``var``), exact through ``t^(2*order)``.

    Polynomial and rational input is exact through ``x^order``.
    """
    c = as_fraction(center)
    if isinstance(expr, BranchSpec):
        return branch_expansion(expr.relation, expr.center, order, var)
    if isinstance(expr, RationalPoly):
        num, den = expr, None
    else:
        num, den = expr
    for p in (num, den):
        if p is not None and len(p.support_variables()) > 1:
            raise SeriesError("laurent_expand takes univariate input")
    if den is None:
        return LaurentSeries.from_poly(num, var, order + 1, c)
    if den.is_zero():
        raise SeriesError("zero denominator")
    d_series = LaurentSeries.from_poly(den, var, order + 1 + den.total_degree() + 1, c)
    v = d_series.valuation
    n_series = LaurentSeries.from_poly(num, var, order + 1 + v, c)
    return (n_series / d_series).truncate(order + 1)


def branch_expansion(h: RationalPoly, center: object, order: int, var: str = "t") -> LaurentSeries:
    """Solve ``t^2 = h(center + s)`` for ``s`` as a series in ``t``."""
    c = as_fraction(center)
    if h.evaluate({h.variables[0]: c}) != 0:
        raise SeriesError("branch center is not a zero of the relation")
    hs = LaurentSeries.from_poly(h, "z", order + 1, c)
    if hs.valuation != 1:
        raise SeriesError("branch center must be a simple zero")
    s_of_z = hs.reversion("z")
    return s_of_z.substitute_power(2, var)
