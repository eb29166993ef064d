"""Numerical period derivative for elliptic cameral curves ``lam^2 = b(u)``, ``deg b = 4``.

Periods of ``du/lam`` are integrated over ellipses around pairs of real
zeros with ``scipy.integrate.quad``; the square root is assembled from
branches that are analytic on each contour.  The A-cycle encircles the
two smallest zeros and the B-cycle the middle two; ``tau = B/A``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import integrate

from ..algebra import RationalPoly
from ..algebra.univariate import discriminant_univariate
from .curves import U


class OracleError(ArithmeticError):
    pass


def _pair_sqrt_inside(u, a, c):
    # sqrt((u-a)(u-c)), analytic off the segment [a, c]
    return (u - a) * np.sqrt((u - c) / (u - a))


def _pair_sqrt_outside(u, a, c):
    # analytic off the real line outside (a, c)
    return 1j * (u - a) * np.sqrt((c - u) / (u - a))


def _cycle(roots, i, j, lc):
    a, c = roots[i], roots[j]
    o1, o2 = (roots[k] for k in range(4) if k not in (i, j))
    center = (a + c) / 2
    semi = abs(c - a) / 2
    major, minor = 1.5 * semi, 0.8 * semi
    straddle = o1.real < a.real and o2.real > c.real
    root_lc = np.sqrt(complex(lc))

    def lam(u):
        v = _pair_sqrt_inside(u, a, c)
        v = v * (_pair_sqrt_outside(u, o1, o2) if straddle else _pair_sqrt_inside(u, o1, o2))
        return v * root_lc

    def integrand(th):
        u = center + major * np.cos(th) + 1j * minor * np.sin(th)
        du = -major * np.sin(th) + 1j * minor * np.cos(th)
        return du / lam(u)

    opts = dict(epsabs=1e-14, epsrel=1e-14, limit=400)
    # tolerances sit at roundoff level; the returned estimates are kept as the error
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        re, err_re = integrate.quad(lambda th: integrand(th).real, 0, 2 * np.pi, **opts)
        im, err_im = integrate.quad(lambda th: integrand(th).imag, 0, 2 * np.pi, **opts)
    return complex(re, im), err_re + err_im


def _coeffs(p: RationalPoly) -> list[float]:
    return [float(c.constant_value()) for c in p.univariate_coefficients(U)]


def periods(b: RationalPoly, direction: RationalPoly | None = None, t: float = 0.0):
    """``(tau, A, B, quadrature error)`` for ``lam^2 = b + t * direction``."""
    cb = _coeffs(b)
    if direction is not None:
        for k, c in enumerate(_coeffs(direction)):
            cb[k] += t * c
    if len(cb) != 5:
        raise OracleError("the oracle handles quartic b only")
    roots = np.roots(cb[::-1])
    if np.max(np.abs(roots.imag)) > 1e-9:
        raise OracleError("the oracle needs four real zeros")
    roots = np.sort(roots.real).astype(complex)
    if np.min(np.diff(roots.real)) < 1e-6:
        raise OracleError("zeros collide along the path")
    a_per, ea = _cycle(roots, 0, 1, cb[4])
    b_per, eb = _cycle(roots, 1, 2, cb[4])
    return b_per / a_per, a_per, b_per, ea + eb


@dataclass(frozen=True)
class OracleResult:
    dtau_dt: complex
    error_bound: float
    tau: complex
    a_period: complex
    step: float


def period_oracle(b: RationalPoly, direction: RationalPoly, step: float = 1e-4) -> OracleResult:
    """Central differences at ``step`` and ``step/2`` combined by Richardson extrapolation."""
    b = b.with_variables((U,))
    direction = direction.with_variables((U,))
    if b.degree_in(U) != 4:
        raise OracleError("the oracle handles quartic b only")
    for s in (step, -step, step / 2, -step / 2):
        moved = b + direction * Fraction(s)
        if discriminant_univariate(moved, U).is_zero():
            raise OracleError(f"zeros collide at t = {s}")
    d1 = (periods(b, direction, step)[0] - periods(b, direction, -step)[0]) / (2 * step)
    d2 = (periods(b, direction, step / 2)[0] - periods(b, direction, -step / 2)[0]) / step
    d = (4 * d2 - d1) / 3
    tau, a_per, _, quad_err = periods(b, direction, 0.0)
    if tau.imag <= 0:
        raise OracleError("period ratio is not in the upper half plane")
    return OracleResult(d, abs(d1 - d) + quad_err / step, tau, a_per, step)


# A^2 * dtau/dt = CALIBRATION * c(xi)(xi, xi) for the basis xi du/lam
CALIBRATION = -2j * np.pi


def calibration_ratio(oracle: OracleResult, residue_value: Fraction) -> complex:
    return oracle.a_period ** 2 * oracle.dtau_dt / float(residue_value)
