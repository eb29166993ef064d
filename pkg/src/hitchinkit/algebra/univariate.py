"""Resultants and discriminants with respect to one variable.

Sign convention, used everywhere in the package::

    disc(p) = (-1)^(d(d-1)/2) * Res(p, p') / lc(p)

so ``disc(x^2 + b x + c) = b^2 - 4c`` and
``disc(x^3 + p x + q) = -4 p^3 - 27 q^2``.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import ring_det
from .poly import PolynomialError, RationalPoly, exact_divide


def sylvester_matrix(p: RationalPoly, q: RationalPoly, var: str) -> list[list[RationalPoly]]:
    vs = tuple(v for v in p.variables + tuple(x for x in q.variables if x not in p.variables)
               if v != var)
    pc = [c.with_variables(vs) for c in p.univariate_coefficients(var)][::-1]
    qc = [c.with_variables(vs) for c in q.univariate_coefficients(var)][::-1]
    m, n = len(pc) - 1, len(qc) - 1
    if m < 0 or n < 0:
        raise PolynomialError("resultant of the zero polynomial")
    zero = RationalPoly.zero(vs)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: RationalPoly, q: RationalPoly, var: str) -> RationalPoly:
    """Sylvester resultant ``Res_var(p, q)``."""
    m, n = p.degree_in(var), q.degree_in(var)
    vs = tuple(v for v in p.variables + tuple(x for x in q.variables if x not in p.variables)
               if v != var)
    if m < 0 or n < 0:
        return RationalPoly.zero(vs)
    if m == 0 and n == 0:
        return RationalPoly.constant(1, vs)
    if m == 0:
        return p.coefficients_in(var)[0].with_variables(vs) ** n
    if n == 0:
        return q.coefficients_in(var)[0].with_variables(vs) ** m
    rows = sylvester_matrix(p, q, var)
    return ring_det(rows, RationalPoly.zero(vs), RationalPoly.constant(1, vs))


def discriminant_univariate(p: RationalPoly, var: str) -> RationalPoly:
    d = p.degree_in(var)
    if d <= 0:
        raise PolynomialError(f"{p} is constant in {var!r}")
    if d == 1:
        vs = tuple(v for v in p.variables if v != var)
        return RationalPoly.constant(1, vs)
    res = resultant(p, p.partial(var), var)
    lc = p.leading_coefficient(var).with_variables(res.variables)
    out = exact_divide(res, lc).with_variables(res.variables)
    return -out if (d * (d - 1) // 2) % 2 else out


def rational_roots(p: RationalPoly, var: str | None = None) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicities.

    Candidates come from numeric roots snapped to nearby fractions; each is
    confirmed by exact division, so every reported root is exact.
    """
    import numpy as np

    var = var or (p.support_variables() or p.variables or ("x",))[0]
    coeffs = [c.constant_value() for c in p.univariate_coefficients(var)]
    if len(coeffs) <= 1:
        return []
    found: dict[Fraction, int] = {}
    work = list(coeffs)
    for z in np.roots([float(c) for c in reversed(coeffs)]):
        if abs(z.imag) > 1e-3 * (1 + abs(z)):
            continue
        # clustered roots are poorly approximated, so try coarse snaps first;
        # a snap may confirm a different root, hence every bound is tried
        for bound in (1, 10, 100, 10 ** 4, 10 ** 6):
            r = Fraction(float(z.real)).limit_denominator(bound)
            while len(work) > 1:
                quotient, rem = _synthetic_division(work, r)
                if rem:
                    break
                work = quotient
                found[r] = found.get(r, 0) + 1
    return sorted(found.items())


def _synthetic_division(coeffs: list[Fraction], r: Fraction) -> tuple[list[Fraction], Fraction]:
    """Divide ``sum c_k x^k`` by ``x - r``; returns (quotient coefficients, remainder)."""
    n = len(coeffs) - 1
    q = [Fraction(0)] * n
    acc = Fraction(0)
    for k in range(n, 0, -1):
        acc = acc * r + coeffs[k]
        q[k - 1] = acc
    rem = acc * r + coeffs[0]
    return q, rem
