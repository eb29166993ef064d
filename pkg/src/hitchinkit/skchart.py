"""Special Kahler coordinate calculus from a polynomial prepotential.

Complex coefficients are written with the variable ``i`` and reduced
modulo ``i^2 + 1``.  Antiholomorphic variables ``zb1..zbn`` are formally
independent of ``z1..zn``; only positivity sampling is numeric.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import RationalPoly, parse_poly

IMAG = "i"


def reduce_imaginary(p: RationalPoly) -> RationalPoly:
    """Reduce modulo ``i^2 = -1``."""
    if IMAG not in p.variables:
        return p
    k = p.variables.index(IMAG)
    terms: dict = {}
    for m, c in p.items():
        e = m[k]
        sign = -1 if (e // 2) % 2 else 1
        mono = m[:k] + (e % 2,) + m[k + 1:]
        terms[mono] = terms.get(mono, Fraction(0)) + sign * c
    return RationalPoly(p.variables, terms)


def conjugate(p: RationalPoly, names: Sequence[str], bar_names: Sequence[str]) -> RationalPoly:
    """Complex conjugate: ``i -> -i`` and ``z_k <-> zb_k``."""
    mapping: dict = {z: RationalPoly.variable(zb) for z, zb in zip(names, bar_names)}
    mapping.update({zb: RationalPoly.variable(z) for z, zb in zip(names, bar_names)})
    if IMAG in p.variables:
        mapping[IMAG] = -RationalPoly.variable(IMAG)
    return reduce_imaginary(p.subs(mapping))


def coordinate_names(n: int) -> tuple[str, ...]:
    return ("z",) if n == 1 else tuple(f"z{k + 1}" for k in range(n))


@dataclass(frozen=True)
class Prepotential:
    n: int
    F: RationalPoly

    @property
    def names(self) -> tuple[str, ...]:
        return coordinate_names(self.n)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Prepotential:
        raw = parse_poly(text)
        used = [v for v in raw.support_variables() if v != IMAG]
        if n is None:
            n = 1 if set(used) <= {"z"} else max(int(v[1:]) for v in used)
        names = coordinate_names(n)
        unknown = [v for v in used if v not in names]
        if unknown:
            raise ValueError(f"prepotential uses {unknown}; expected variables from {names}")
        return cls(n, reduce_imaginary(raw.with_variables(names + (IMAG,))))


@dataclass(frozen=True)
class SKChart:
    prepotential: Prepotential
    dual: tuple[RationalPoly, ...]
    tau: tuple[tuple[RationalPoly, ...], ...]
    cubic: dict[tuple[int, int, int], RationalPoly]
    kahler_potential: RationalPoly
    symmetric: bool

    @property
    def n(self) -> int:
        return self.prepotential.n

    @property
    def names(self) -> tuple[str, ...]:
        return self.prepotential.names


def from_prepotential(p: Prepotential) -> SKChart:
    names = p.names
    dual = tuple(p.F.partial(z) for z in names)
    tau = tuple(tuple(w.partial(z) for z in names) for w in dual)
    cubic = {(a, b, c): tau[a][b].partial(names[c])
             for a, b, c in itertools.product(range(p.n), repeat=3)}
    bars = tuple("zb" + z[1:] if len(z) > 1 else "zb" for z in names)
    # K = 1/2 Im(sum w_k zb_k) = (X - conj X) / (4i); 1/i = -i
    x = sum((w * RationalPoly.variable(zb) for w, zb in zip(dual, bars)), RationalPoly.zero())
    potential = reduce_imaginary((x - conjugate(x, names, bars)) * RationalPoly.variable(IMAG)
                                 * Fraction(-1, 4))
    symmetric = all(tau[a][b] == tau[b][a] for a in range(p.n) for b in range(p.n)) and \
        all(cubic[idx] == cubic[tuple(perm)] for idx in cubic
            for perm in itertools.permutations(idx))
    return SKChart(p, dual, tau, cubic, potential, symmetric)


def exterior_derivative_of_tau(chart: SKChart) -> dict[tuple[int, int, int], RationalPoly]:
    """Components of ``d tau = sum_k d_k tau_ij dz_k`` indexed ``(k, i, j)``."""
    n, names = chart.n, chart.names
    return {(k, a, b): chart.tau[a][b].partial(names[k])
            for k, a, b in itertools.product(range(n), repeat=3)}


def kahler_hessian(chart: SKChart) -> tuple[tuple[RationalPoly, ...], ...]:
    """``d_{z_j} d_{zb_k} K``, which equals ``Im(tau)_jk / 2``."""
    names = chart.names
    bars = tuple("zb" + z[1:] if len(z) > 1 else "zb" for z in names)
    return tuple(tuple(reduce_imaginary(chart.kahler_potential.partial(z).partial(zb)) for zb in bars)
                 for z in names)


def imaginary_part(p: RationalPoly, names: Sequence[str]) -> RationalPoly:
    """Formal ``Im p = (p - conj p) / (2i)`` with ``zb`` independent of ``z``."""
    bars = tuple("zb" + z[1:] if len(z) > 1 else "zb" for z in names)
    diff = p - conjugate(p, names, bars)
    return reduce_imaginary(diff * RationalPoly.variable(IMAG) * Fraction(-1, 2))


# positivity

def _evaluate_complex(p: RationalPoly, point: dict[str, complex]) -> complex:
    total = 0j
    vs = p.variables
    for m, c in p.items():
        term = complex(float(c))
        for v, e in zip(vs, m):
            if e:
                term *= (1j if v == IMAG else point[v]) ** e
        total += term
    return total


def parse_complex(text: str) -> complex:
    s = text.strip().replace(" ", "").replace("I", "i")
    s = re.sub(r"(?<![0-9.])i", "1i", s).replace("i", "j")
    return complex(s)


def parse_samples(text: str) -> list[tuple[complex, ...]]:
    """``"i; -i"`` or ``"0, i; 1, 2i"``: points separated by ``;``, coordinates by ``,``."""
    return [tuple(parse_complex(c) for c in pt.split(",")) for pt in text.split(";") if pt.strip()]


@dataclass(frozen=True)
class PositivityPoint:
    point: tuple[complex, ...]
    imag_tau: tuple[tuple[float, ...], ...]
    min_eigenvalue: float
    classification: str  # "positive" or "not positive-definite"
    signature: str  # "positive", "degenerate", "indefinite" or "negative"


def positivity_sample(chart: SKChart, points: Sequence[Sequence[complex]],
                      tol: float = 1e-12) -> list[PositivityPoint]:
    out = []
    for pt in points:
        if len(pt) != chart.n:
            raise ValueError(f"sample point {pt} has {len(pt)} coordinates, expected {chart.n}")
        env = dict(zip(chart.names, (complex(z) for z in pt)))
        mat = np.array([[_evaluate_complex(e, env).imag for e in row] for row in chart.tau])
        mat = (mat + mat.T) / 2
        eig = np.linalg.eigvalsh(mat)
        lo, hi = float(eig.min()), float(eig.max())
        if lo > tol:
            sig = "positive"
        elif hi < -tol:
            sig = "negative"
        elif lo < -tol and hi > tol:
            sig = "indefinite"
        else:
            sig = "degenerate"
        out.append(PositivityPoint(tuple(complex(z) for z in pt),
                                   tuple(tuple(float(x) for x in row) for row in mat),
                                   lo, "positive" if sig == "positive" else "not positive-definite", sig))
    return out


# connection

def connection_matrix(chart: SKChart) -> dict[tuple[int, int, int], RationalPoly]:
    """``Gamma[(i, k, l)]``: coefficient of ``dz_k (x) d/dy_l`` in ``nabla(d/dz_i)``.

    The (0,1)-part vanishes identically, so only these components exist.
    """
    n = chart.n
    return {(a, k, l): chart.cubic[(k, l, a)] * Fraction(-1, 2)
            for a, k, l in itertools.product(range(n), repeat=3)}


def _frame_vector(chart: SKChart, a: int) -> tuple[list[RationalPoly], list[RationalPoly]]:
    """``d/dz_a = 1/2 (d/dx_a - sum_j tau_aj d/dy_j)`` as (x-part, y-part)."""
    n = chart.n
    zero = RationalPoly.zero()
    xs = [RationalPoly.constant(Fraction(1, 2)) if j == a else zero for j in range(n)]
    ys = [chart.tau[a][j] * Fraction(-1, 2) for j in range(n)]
    return xs, ys


def _omega(u, v) -> RationalPoly:
    ux, uy = u
    vx, vy = v
    total = RationalPoly.zero()
    for i in range(len(ux)):
        total = total + ux[i] * vy[i] - uy[i] * vx[i]
    return total


def contraction_cubic(chart: SKChart) -> dict[tuple[int, int, int], RationalPoly]:
    """``-4 omega(pi^{1,0}, nabla pi^{1,0})`` in special coordinates, indexed ``(i, j, k)``.

    Slot ``i`` comes from ``pi^{1,0}``, slot ``j`` from the frame vector that
    is differentiated and slot ``k`` from the connection form.
    """
    n = chart.n
    gamma = connection_matrix(chart)
    zero = RationalPoly.zero()
    out = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        image = ([zero] * n, [gamma[(j, k, l)] for l in range(n)])
        out[(i, j, k)] = _omega(_frame_vector(chart, i), image) * -4
    return out


def affine_shift(p: Prepotential, coeffs: Sequence[object], const: object = 0) -> Prepotential:
    shift = RationalPoly.constant(Fraction(const), p.names)
    for z, c in zip(p.names, coeffs):
        shift = shift + RationalPoly.variable(z, p.names) * Fraction(c)
    return Prepotential(p.n, reduce_imaginary(p.F + shift))
