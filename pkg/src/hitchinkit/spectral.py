"""Spectral covers of polynomial matrix families, their loci, and cover numerology.

The spectral equation of a family ``Phi(s)`` is ``det(lam*1 - Phi(s))``,
written ``lam^n + a_1 lam^(n-1) + ... + a_n`` with
``a_i = (-1)^i tr Lambda^i Phi``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import RationalPoly, linalg, parse_poly
from .algebra.univariate import discriminant_univariate

SPECTRAL_VAR = "lam"


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class MatrixFamily:
    variables: tuple[str, ...]
    matrix: tuple[tuple[RationalPoly, ...], ...]
    trace_free: bool = False

    def __post_init__(self):
        n = len(self.matrix)
        if n == 0 or any(len(row) != n for row in self.matrix):
            raise FamilyError("family matrix must be square and nonempty")
        if SPECTRAL_VAR in self.variables:
            raise FamilyError(f"base variable name {SPECTRAL_VAR!r} is reserved")
        if self.trace_free:
            tr = sum((self.matrix[i][i] for i in range(n)), RationalPoly.zero(self.variables))
            if not tr.is_zero():
                raise FamilyError("family flagged trace-free has nonzero trace")

    @property
    def size(self) -> int:
        return len(self.matrix)

    @classmethod
    def from_strings(cls, variables: Sequence[str], rows: Sequence[Sequence[str]],
                     trace_free: bool = False) -> MatrixFamily:
        vs = tuple(variables)
        mat = tuple(tuple(parse_poly(str(e), vs) for e in row) for row in rows)
        return cls(vs, mat, trace_free)

    @classmethod
    def from_json(cls, data: Mapping | str) -> MatrixFamily:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls.from_strings(data["vars"], data["matrix"], bool(data.get("trace_free", False)))
        except KeyError as exc:
            raise FamilyError(f"family JSON is missing {exc}") from None

    def specialize(self, point: Mapping[str, object]) -> list[list[Fraction]]:
        return [[Fraction(e.evaluate(point)) for e in row] for row in self.matrix]


def tautological_family(n: int) -> MatrixFamily:
    """``Mat_n`` itself: entry (i, j) is the coordinate ``m{i}{j}``."""
    names = tuple(f"m{i + 1}{j + 1}" for i in range(n) for j in range(n))
    mat = tuple(tuple(RationalPoly.variable(f"m{i + 1}{j + 1}", names) for j in range(n))
                for i in range(n))
    return MatrixFamily(names, mat)


@dataclass(frozen=True)
class SpectralEquation:
    polynomial: RationalPoly  # in (lam,) + base variables
    coefficients: tuple[RationalPoly, ...]  # a_1..a_n over the base variables
    variable: str = SPECTRAL_VAR

    @property
    def degree(self) -> int:
        return len(self.coefficients)


def spectral_equation(fam: MatrixFamily) -> SpectralEquation:
    vs = fam.variables
    zero = RationalPoly.zero(vs)
    one = RationalPoly.constant(1, vs)
    c = linalg.charpoly_coefficients([list(r) for r in fam.matrix], zero, one)
    allv = (SPECTRAL_VAR,) + vs
    lam = RationalPoly.variable(SPECTRAL_VAR, allv)
    n = fam.size
    p = RationalPoly.zero(allv)
    for i, ci in enumerate(c):
        p = p + ci.with_variables(allv) * lam ** (n - i)
    return SpectralEquation(p, tuple(c[1:]))


@dataclass(frozen=True)
class SpectralLoci:
    branch: RationalPoly
    ramification: tuple[RationalPoly, ...]
    singular: tuple[RationalPoly, ...]


def branch_and_singular(fam: MatrixFamily) -> SpectralLoci:
    eq = spectral_equation(fam)
    p = eq.polynomial
    if eq.degree == 1:
        branch = RationalPoly.constant(1, fam.variables)
    else:
        branch = discriminant_univariate(p, SPECTRAL_VAR).with_variables(fam.variables)
    ram = (p, p.partial(SPECTRAL_VAR))
    # sum_i lam^(n-i) da_i, split by base differential ds, is d_s p
    extra = tuple(p.partial(v) for v in fam.variables)
    return SpectralLoci(branch, ram, ram + extra)


def linear_zero_set(ideal: Sequence[RationalPoly]) -> dict | None:
    """Zero set of an ideal whose degree <= 1 generators cut out the whole locus.

    Solves the affine-linear generators, parametrizes the solution space and
    checks that every remaining generator vanishes identically on it.
    Returns ``None`` when that check fails or the linear part is inconsistent.
    """
    if not ideal:
        raise ValueError("empty ideal")
    vs = ideal[0].variables
    for g in ideal[1:]:
        vs = vs + tuple(v for v in g.variables if v not in vs)
    gens = [g.with_variables(vs) for g in ideal]
    linear = [g for g in gens if g.total_degree() <= 1]
    n = len(vs)
    rows, rhs = [], []
    for g in linear:
        row = [Fraction(0)] * n
        const = Fraction(0)
        for m, c in g.items():
            if sum(m) == 0:
                const = c
            else:
                row[m.index(1)] = c
        rows.append(row)
        rhs.append(-const)
    if rows:
        try:
            base = linalg.solve(rows, rhs)
        except linalg.SingularMatrix:
            return None
        directions = linalg.nullspace(rows, n)
    else:
        base = [Fraction(0)] * n
        directions = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    params = tuple(f"z{k + 1}" for k in range(len(directions)))
    param_vars = [RationalPoly.variable(p, params) for p in params]
    image = {}
    for i, v in enumerate(vs):
        expr = RationalPoly.constant(base[i], params)
        for pv, d in zip(param_vars, directions):
            if d[i]:
                expr = expr + pv * d[i]
        image[v] = expr
    for g in gens:
        if not g.subs(image).is_zero():
            return None
    return {"parameters": params, "parametrization": image, "dimension": len(params)}


# numerology

@dataclass(frozen=True)
class NumerologyReport:
    group: str
    n: int
    genus: int
    delta: int
    values: dict
    caveats: tuple[str, ...] = field(default=())


def _h0_power(m: int, genus: int, delta: int) -> int:
    """``h^0(L^m)`` for ``L = K(D)``, ``deg D = delta``, in the nonspecial range."""
    deg = m * (2 * genus - 2 + delta)
    if delta == 0:
        if m == 1:
            return genus
        if m == 0:
            return 1
    return deg + 1 - genus


def numerology(group: str, n: int, genus: int, delta: int = 0) -> NumerologyReport:
    group = group.upper()
    if group not in ("GL", "SL"):
        raise ValueError(f"numerology supports GL and SL, not {group!r}")
    if n < 1 or genus < 0 or delta < 0:
        raise ValueError("n must be >= 1, genus and delta >= 0")
    g, d = genus, delta
    deg_l = 2 * g - 2 + d
    caveats = []
    if n == 1:
        caveats.append("n=1 is the exceptional case: the spectral cover is the curve itself")
    if deg_l <= 0 or (d == 0 and g < 2):
        caveats.append("formulas evaluated as stated; outside their validity range for this (g, delta)")
    base_gl = sum(_h0_power(i, g, d) for i in range(1, n + 1))
    # adjunction in Tot(L): g~ = 1 + n(g-1) + n(n-1)/2 deg L
    spectral_genus = 1 + n * (g - 1) + n * (n - 1) * deg_l // 2
    det_push = -n * (n - 1) * deg_l // 2
    dim_group = n * n if group == "GL" else n * n - 1
    values = {
        "dim_base_GL": base_gl,
        "dim_base_SL": base_gl - _h0_power(1, g, d),
        "spectral_genus": spectral_genus,
        "deg_det_pushforward_O": det_push,
        # deg pi_* L' = d' + 1 - g~ + n(g-1), written with a symbolic d'
        "deg_pushforward_offset": 1 - spectral_genus + n * (g - 1),
        # dim G * deg L, i.e. dim G * (2g - 2) untwisted
        "moduli_dim": dim_group * deg_l,
    }
    if n == 2:
        values["sl2_cameral_genus"] = spectral_genus
    return NumerologyReport(group, n, g, d, values, tuple(caveats))


# formal divisors and the norm map

@dataclass(frozen=True)
class FormalDivisor:
    cover: str
    multiplicities: tuple[tuple[str, int], ...]
    covering_map: tuple[tuple[str, str], ...] = ()

    @classmethod
    def make(cls, cover: str, mults: Mapping[str, int],
             covering_map: Mapping[str, str] | None = None) -> FormalDivisor:
        clean = {p: int(k) for p, k in mults.items() if k}
        return cls(cover, tuple(sorted(clean.items())), tuple(sorted((covering_map or {}).items())))

    def as_dict(self) -> dict[str, int]:
        return dict(self.multiplicities)

    @property
    def degree(self) -> int:
        return sum(k for _, k in self.multiplicities)

    def __add__(self, other: FormalDivisor) -> FormalDivisor:
        if other.cover != self.cover:
            raise ValueError("divisors live on different covers")
        total = Counter(self.as_dict())
        total.update(other.as_dict())
        cmap = dict(self.covering_map)
        cmap.update(dict(other.covering_map))
        return FormalDivisor.make(self.cover, total, cmap)

    def __neg__(self) -> FormalDivisor:
        return FormalDivisor.make(self.cover, {p: -k for p, k in self.multiplicities},
                                  dict(self.covering_map))


def norm_pushforward(d: FormalDivisor, base: str = "base") -> FormalDivisor:
    cmap = dict(d.covering_map)
    out: Counter = Counter()
    for p, k in d.multiplicities:
        if p not in cmap:
            raise KeyError(f"point {p!r} has no image under the covering map")
        out[cmap[p]] += k
    return FormalDivisor.make(base, out)


def sl2_prym_predicate(d: FormalDivisor, involution: Mapping[str, str]) -> bool:
    """Divisor-level test of ``sigma^* d = -d``."""
    for p, q in involution.items():
        if involution.get(q) != p:
            raise ValueError(f"map is not an involution at {p!r}")
    pulled: Counter = Counter()
    for p, k in d.multiplicities:
        if p not in involution:
            raise KeyError(f"point {p!r} is not in the domain of the involution")
        pulled[involution[p]] += k
    neg = {p: -k for p, k in d.multiplicities}
    return {p: k for p, k in pulled.items() if k} == neg
