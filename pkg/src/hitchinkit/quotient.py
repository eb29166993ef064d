"""Invariant polynomials, the adjoint quotient chi, Kostant sections and the discriminant on t.

Pinned generators
-----------------
* A_n (realized on (n+1)x(n+1) matrices): ``I_j`` is the coefficient
  of ``lam^(n+1-d_j)`` in ``det(A - lam*1)``, ``d_j = j + 1``.  This equals
  ``(-1)^(n+1) a_{d_j}`` with ``a_i = (-1)^i tr(Lambda^i A)``; for A1 it
  is ``det`` and for A2 it gives ``det(A - lam) = -lam^3 + lam*I_1 + I_2``.
* G2 (7-dim realization): ``f = tr(X^2)/2`` and ``q`` with
  ``det(lam - X) = lam*(lam^6 - f lam^4 + f^2/4 lam^2 - q)``.

All evaluations are ring generic: the same code runs on Fraction
matrices and on matrices of :class:`RationalPoly` entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import RationalPoly, linalg
from .algebra.univariate import discriminant_univariate
from .liecore import (LieAlgebraModel, RootSystem, UnsupportedType, build_root_system,
                      chevalley_algebra, weyl_group)
from .principal import Epinglage, PrincipalTriple, ad_decomposition, principal_triple


class NormalizationError(ValueError):
    pass


def coordinate_names(model: LieAlgebraModel) -> tuple[str, ...]:
    return tuple(label.replace("_", "") for label in model.labels)


def cartan_names(rank: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(rank))


def invariants_of_matrix(type_name: str, matrix, zero=Fraction(0), one=Fraction(1)) -> list:
    """Pinned generators evaluated on a realization matrix (entries from any ring)."""
    n = len(matrix)
    if type_name.startswith("A"):
        c = linalg.charpoly_coefficients(matrix, zero, one)
        # det(A - lam) = (-1)^n det(lam - A); coefficient of lam^(n-d) is (-1)^n c_d
        sign = -1 if n % 2 else 1
        return [c[d] * sign for d in range(2, n + 1)]
    if type_name == "G2":
        x2 = linalg_ring_matmul(matrix, matrix, zero)
        x3 = linalg_ring_matmul(x2, matrix, zero)
        p2 = _trace(x2, zero)
        p4 = _trace_product(x2, x2, zero)
        p6 = _trace_product(x3, x3, zero)
        e2 = p2 * Fraction(-1, 2)
        e4 = (p2 * p2 * Fraction(1, 2) - p4) * Fraction(1, 4)
        e6 = (zero - e4 * p2 - e2 * p4 - p6) * Fraction(1, 6)
        return [p2 * Fraction(1, 2), zero - e6]
    raise UnsupportedType(type_name)


def linalg_ring_matmul(a, b, zero):
    n = len(a)
    m = len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for k in range(len(b)):
                x = a[i][k]
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def _trace(a, zero):
    acc = zero
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def _trace_product(a, b, zero):
    acc = zero
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] and b[j][i]:
                acc = acc + a[i][j] * b[j][i]
    return acc


@dataclass(frozen=True)
class InvariantSet:
    type_name: str
    model: LieAlgebraModel
    degrees: tuple[int, ...]

    @property
    def variables(self) -> tuple[str, ...]:
        return coordinate_names(self.model)

    @property
    def generators(self) -> tuple[RationalPoly, ...]:
        return _generators_cached(self.type_name)

    def evaluate(self, element: Sequence[object]) -> tuple[Fraction, ...]:
        """Values of the generators at an algebra element (via the realization)."""
        mat = self.model.represent([Fraction(c) for c in element])
        mat = [[Fraction(x) for x in row] for row in mat]
        return tuple(invariants_of_matrix(self.type_name, mat))

    def evaluate_symbolic(self, element: Sequence[RationalPoly]) -> tuple[RationalPoly, ...]:
        vs = element[0].variables
        zero = RationalPoly.zero(vs)
        one = RationalPoly.constant(1, vs)
        mat = self.model.represent(list(element))
        mat = [[x if isinstance(x, RationalPoly) else RationalPoly.constant(x, vs) for x in row]
               for row in mat]
        return tuple(invariants_of_matrix(self.type_name, mat, zero, one))

    def on_cartan(self, names: Sequence[str] | None = None) -> tuple[RationalPoly, ...]:
        """Restriction to t as polynomials in coroot coordinates."""
        l = self.model.rank
        names = tuple(names or cartan_names(l))
        coords = [RationalPoly.variable(v, names) for v in names]
        zero = RationalPoly.zero(names)
        elem = coords + [zero] * (self.model.dim - l)
        return self.evaluate_symbolic(elem)


def _model(type_name: str) -> LieAlgebraModel:
    return _model_cached(type_name.upper())


@lru_cache(maxsize=None)
def _model_cached(type_name: str) -> LieAlgebraModel:
    return chevalley_algebra(build_root_system(type_name))


@lru_cache(maxsize=None)
def _generators_cached(type_name: str) -> tuple[RationalPoly, ...]:
    model = _model(type_name)
    names = coordinate_names(model)
    elem = [RationalPoly.variable(v, names) for v in names]
    inv = InvariantSet(type_name, model, model.root_system.degrees)
    return inv.evaluate_symbolic(elem)


def invariant_generators(type_name: str) -> InvariantSet:
    model = _model(type_name)
    rs = model.root_system
    if not (rs.type_name.startswith("A") or rs.type_name == "G2"):
        raise UnsupportedType(type_name)
    return InvariantSet(rs.type_name, model, rs.degrees)


def adjoint_quotient(type_name: str, element: Sequence[object]) -> tuple[Fraction, ...]:
    return invariant_generators(type_name).evaluate(element)


# Kostant section

@dataclass(frozen=True)
class KostantSection:
    type_name: str
    triple: PrincipalTriple
    slice_vectors: tuple[tuple[Fraction, ...], ...]
    # I_j(y + sum a_i v_i) as polynomials in a_1..a_l
    slice_invariants: tuple[RationalPoly, ...]
    # lower-order parts p_j (I_j = a_j + p_j); all zero means clean normalization
    corrections: tuple[RationalPoly, ...]
    # a_i as polynomials in the target values b_1..b_l
    inverse: tuple[RationalPoly, ...]

    @property
    def certificate(self) -> dict:
        clean = all(p.is_zero() for p in self.corrections)
        return {
            "leading_coefficients_one": True,
            "normalization": "exact" if clean else "triangular",
            "corrections": [str(p) for p in self.corrections],
        }

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return tuple(f"a{i + 1}" for i in range(len(self.slice_vectors)))

    @property
    def target_names(self) -> tuple[str, ...]:
        return tuple(f"b{i + 1}" for i in range(len(self.slice_vectors)))

    def slice_point(self, params: Sequence[object]) -> tuple:
        m = self.triple.algebra
        out = list(self.triple.y)
        for a, v in zip(params, self.slice_vectors):
            for k, c in enumerate(v):
                if c:
                    out[k] = out[k] + a * c
        return tuple(out)

    def __call__(self, b: Sequence[object]) -> tuple[Fraction, ...]:
        point = {name: Fraction(v) for name, v in zip(self.target_names, b)}
        params = [p.evaluate(point) for p in self.inverse]
        return tuple(Fraction(x) for x in self.slice_point([Fraction(a) for a in params]))

    def symbolic(self) -> tuple[RationalPoly, ...]:
        """The section as algebra coordinates polynomial in ``b_1..b_l``."""
        names = self.target_names
        y = [RationalPoly.constant(c, names) for c in self.triple.y]
        params = [p.with_variables(names) for p in self.inverse]
        out = list(y)
        for a, v in zip(params, self.slice_vectors):
            for k, c in enumerate(v):
                if c:
                    out[k] = out[k] + a * c
        return tuple(out)


@lru_cache(maxsize=None)
def kostant_section_data(type_name: str) -> KostantSection:
    inv = invariant_generators(type_name)
    model = inv.model
    triple = principal_triple(Epinglage(model, tuple(Fraction(1) for _ in range(model.rank))))
    dec = ad_decomposition(triple)
    zx = [list(v) for v in dec["z_x"]]
    heights = model.heights
    zx.sort(key=lambda v: next(heights[k] for k, c in enumerate(v) if c))
    exps = [next(heights[k] for k, c in enumerate(v) if c) for v in zx]
    if sorted(m + 1 for m in exps) != sorted(inv.degrees):
        raise NormalizationError("slice degrees do not match invariant degrees")
    l = len(zx)
    names = tuple(f"a{i + 1}" for i in range(l))

    def slice_invariants(vectors):
        elem = [RationalPoly.constant(c, names) for c in triple.y]
        for i, v in enumerate(vectors):
            ai = RationalPoly.variable(names[i], names)
            for k, c in enumerate(v):
                if c:
                    elem[k] = elem[k] + ai * c
        return inv.evaluate_symbolic(elem)

    raw = slice_invariants(zx)
    # weighted homogeneity: I_j = c_j a_j + (terms in a_1..a_{j-1})
    scaled = []
    for j, (p, v) in enumerate(zip(raw, zx)):
        aj = names[j]
        lin = p.coefficients_in(aj)
        if max(lin) != 1 or not lin[1].is_constant():
            raise NormalizationError(f"I_{j + 1} is not linear in {aj} on the slice")
        cj = lin[1].constant_value()
        if not cj:
            raise NormalizationError(f"I_{j + 1} does not see the slice direction {aj}")
        scaled.append([c / cj for c in v])
    final = slice_invariants(scaled)
    corrections = []
    for j, p in enumerate(final):
        corr = p - RationalPoly.variable(names[j], names)
        if any(v in corr.support_variables() for v in names[j:]):
            raise NormalizationError("slice system is not triangular")
        corrections.append(corr)
    # invert a_j = b_j - p_j(a_1..a_{j-1})
    targets = tuple(f"b{i + 1}" for i in range(l))
    inverse: list[RationalPoly] = []
    for j in range(l):
        sub = {names[i]: inverse[i] for i in range(j)}
        pj = corrections[j].subs(sub).with_variables(targets) if j else corrections[j].with_variables(targets)
        inverse.append(RationalPoly.variable(targets[j], targets) - pj)
    return KostantSection(inv.type_name, triple, tuple(tuple(v) for v in scaled),
                          tuple(final), tuple(corrections), tuple(inverse))


def kostant_section(type_name: str, b: Sequence[object]) -> tuple[Fraction, ...]:
    data = kostant_section_data(type_name.upper())
    if len(b) != len(data.slice_vectors):
        raise ValueError(f"{type_name} needs {len(data.slice_vectors)} base coordinates")
    return data(b)


def chi_of_section_identity(type_name: str) -> tuple[RationalPoly, ...]:
    """``chi(k(b))`` computed symbolically in ``b``; equals ``(b_1,..,b_l)`` exactly."""
    data = kostant_section_data(type_name.upper())
    inv = invariant_generators(type_name)
    return inv.evaluate_symbolic(list(data.symbolic()))


# discriminant on t

@dataclass(frozen=True)
class DiscriminantPoly:
    type_name: str
    on_t: RationalPoly  # product of all roots, coroot coordinates
    invariant_form: RationalPoly | None  # in generator names g1..gl
    reference_name: str
    reference: RationalPoly | None  # reference in generator names
    constant: Fraction | None  # invariant_form = constant * reference
    short_factor: RationalPoly | None = None
    long_factor: RationalPoly | None = None


def _roots_as_forms(rs: RootSystem, names: Sequence[str]) -> list[RationalPoly]:
    coords = [RationalPoly.variable(v, names) for v in names]
    return [rs.pairing(r, coords) + RationalPoly.zero(names) for r in rs.roots]


def rewrite_in_invariants(target: RationalPoly, cart_gens: Sequence[RationalPoly],
                           degrees: Sequence[int], gen_names: Sequence[str]) -> RationalPoly:
    total = target.total_degree()
    exps = [e for e in itertools.product(*[range(total // d + 1) for d in degrees])
            if sum(k * d for k, d in zip(e, degrees)) == total]
    monos = []
    for e in exps:
        p = RationalPoly.constant(1, target.variables)
        for g, k in zip(cart_gens, e):
            p = p * g.with_variables(target.variables) ** k
        monos.append(p)
    keys = sorted({m for p in monos + [target] for m, _ in p.items()})
    mat = [[p.terms.get(k, Fraction(0)) for p in monos] for k in keys]
    rhs = [target.terms.get(k, Fraction(0)) for k in keys]
    sol = linalg.solve(mat, rhs)
    check = RationalPoly.zero(target.variables)
    for c, p in zip(sol, monos):
        check = check + p * c
    if check != target:
        raise ArithmeticError("discriminant is not a polynomial in the invariants")
    out = {tuple(e): c for e, c in zip(exps, sol) if c}
    return RationalPoly(gen_names, out)


def discriminant_on_t(type_name: str, rewrite: bool | None = None) -> DiscriminantPoly:
    inv = invariant_generators(type_name)
    rs = inv.model.root_system
    names = cartan_names(rs.rank)
    forms = _roots_as_forms(rs, names)
    prod = RationalPoly.constant(1, names)
    for f in forms:
        prod = prod * f
    if rewrite is None:
        rewrite = rs.rank <= 2
    if not rewrite:
        return DiscriminantPoly(rs.type_name, prod, None, "", None, None)
    if rs.rank > 2:
        raise UnsupportedType("invariant rewriting is supported for rank <= 2")
    cart = inv.on_cartan(names)
    gen_names = _generator_names(rs.type_name)
    form = rewrite_in_invariants(prod, cart, inv.degrees, gen_names)
    short = long = None
    if rs.type_name == "G2":
        f, q = (RationalPoly.variable(v, gen_names) for v in gen_names)
        qcheck = -q + f ** 3 * Fraction(1, 54)
        reference = q * qcheck
        ref_name = "q*qcheck"
        short = RationalPoly.constant(1, names)
        long = RationalPoly.constant(1, names)
        for r, p in zip(rs.roots, forms):
            if rs.root_lengths[r] == "short":
                short = short * p
            else:
                long = long * p
    else:
        # discriminant of the characteristic polynomial of the realization
        lam = "lam"
        size = rs.rank + 1
        gvars = gen_names
        # det(A - lam) = (-1)^size (lam^size + ...); coefficients via generators
        poly = RationalPoly.variable(lam, (lam,) + gvars) ** size * ((-1) ** size)
        for j, g in enumerate(gvars):
            d = j + 2
            allv = (lam,) + gvars
            poly = poly + RationalPoly.variable(g, allv) * RationalPoly.variable(lam, allv) ** (size - d)
        monic = poly * ((-1) ** size)
        reference = discriminant_univariate(monic, lam).with_variables(gvars)
        ref_name = "disc(charpoly)"
    const = None
    for m, c in form.items():
        rc = reference.terms.get(m)
        if rc:
            const = c / rc
            break
    if const is None or form != reference * const:
        raise ArithmeticError("discriminant is not proportional to the reference")
    return DiscriminantPoly(rs.type_name, prod, form, ref_name, reference, const, short, long)


def _generator_names(type_name: str) -> tuple[str, ...]:
    if type_name == "G2":
        return ("f", "q")
    n = int(type_name[1:])
    return tuple(f"I{j + 1}" for j in range(n))


def weyl_invariance_on_cartan(type_name: str) -> bool:
    inv = invariant_generators(type_name)
    rs = inv.model.root_system
    names = cartan_names(rs.rank)
    gens = inv.on_cartan(names)
    w = weyl_group(rs)
    for elem in w.elements:
        img = w.apply(elem, [RationalPoly.variable(v, names) for v in names])
        sub = {v: p + RationalPoly.zero(names) for v, p in zip(names, img)}
        for g in gens:
            if g.subs(sub).with_variables(names) != g:
                return False
    return True
