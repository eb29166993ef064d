"""Principal sl(2)-triples, their ad-decomposition and the splitting map P.

Elements of a :class:`~hitchinkit.liecore.LieAlgebraModel` are coefficient
tuples in its Chevalley basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .algebra import linalg
from .liecore import LieAlgebraModel, RootSystem, UnsupportedType, build_root_system, chevalley_algebra

Vector = tuple[Fraction, ...]


class TripleError(ValueError):
    pass


@dataclass(frozen=True)
class Epinglage:
    """A Chevalley model plus scalings ``f_{alpha_i} = c_i * f_i`` of the negative simple root vectors."""

    algebra: LieAlgebraModel
    scalings: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.scalings) != self.algebra.rank or any(c == 0 for c in self.scalings):
            raise TripleError("need one nonzero scaling per simple root")

    @classmethod
    def standard(cls, type_name: str, scalings: Sequence[object] | None = None) -> Epinglage:
        model = chevalley_algebra(build_root_system(type_name))
        cs = tuple(Fraction(c) for c in (scalings or [1] * model.rank))
        return cls(model, cs)

    def negative_simple(self, i: int) -> Vector:
        m = self.algebra
        simple = tuple(int(k == i) for k in range(m.rank))
        return m.element({m.f(simple): self.scalings[i]})


def kac_labels(rs: RootSystem) -> tuple[int, ...]:
    """Coefficients of ``2 rho-check`` in simple coroots: ``2 C^-1 (1,...,1)``."""
    cinv = linalg.inverse(linalg.to_fraction_matrix(rs.cartan))
    # rho-check pairs to 1 with every simple root: sum_k x_k C[i][k] = 1
    x = [sum(cinv[k][i] for i in range(rs.rank)) * 2 for k in range(rs.rank)]
    out = []
    for v in x:
        if v.denominator != 1 or v <= 0:
            raise TripleError(f"Kac label {v} is not a positive integer")
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class PrincipalTriple:
    algebra: LieAlgebraModel
    x: Vector
    h: Vector
    y: Vector
    kac_labels: tuple[int, ...]

    @cached_property
    def ad_x(self):
        return self.algebra.ad(self.x)

    @cached_property
    def ad_y(self):
        return self.algebra.ad(self.y)

    @cached_property
    def ad_h(self):
        return self.algebra.ad(self.h)

    def relations_hold(self) -> dict[str, bool]:
        m = self.algebra
        two = Fraction(2)
        return {
            "[x,y]=h": m.bracket(self.x, self.y) == self.h,
            "[h,x]=2x": m.bracket(self.h, self.x) == tuple(two * a for a in self.x),
            "[h,y]=-2y": m.bracket(self.h, self.y) == tuple(-two * a for a in self.y),
        }

    @cached_property
    def exponents(self) -> tuple[int, ...]:
        return ad_decomposition(self)["exponents"]


def principal_triple(ep: Epinglage) -> PrincipalTriple:
    m = ep.algebra
    rs = m.root_system
    r = kac_labels(rs)
    n = rs.rank
    h = m.cartan_element(r)
    # alpha_i(h) = 2 for every simple root
    for i in range(n):
        if rs.pairing(tuple(int(k == i) for k in range(n)), r) != 2:
            raise TripleError("2 rho-check does not pair to 2 with a simple root")
    y = [Fraction(0)] * m.dim
    x = [Fraction(0)] * m.dim
    for i in range(n):
        simple = tuple(int(k == i) for k in range(n))
        y[m.f(simple)] += ep.scalings[i]
        x[m.e(simple)] += Fraction(r[i]) / ep.scalings[i]
    t = PrincipalTriple(m, tuple(x), h, tuple(y), r)
    if not all(t.relations_hold().values()):
        raise TripleError("triple relations fail")
    return t


def _column_space(matrix) -> list[list[Fraction]]:
    """Basis (as vectors) of the image of ``matrix``."""
    cols = linalg.transpose(matrix)
    red, piv = linalg.rref(cols)
    return [row for row in red[: len(piv)]]


def _kernel(matrix) -> list[list[Fraction]]:
    return linalg.nullspace(matrix)


def _graded_kernel_dims(t: PrincipalTriple, kernel: list[list[Fraction]]) -> dict[int, int]:
    heights = t.algebra.heights
    dims: dict[int, int] = {}
    for v in kernel:
        hs = {heights[k] for k, c in enumerate(v) if c}
        if len(hs) != 1:
            raise TripleError("kernel basis vector is not homogeneous")
        hgt = hs.pop()
        dims[hgt] = dims.get(hgt, 0) + 1
    return dict(sorted(dims.items()))


def _graded_kernel(t: PrincipalTriple, ad_matrix) -> list[list[Fraction]]:
    """Kernel basis made of height-homogeneous vectors (ad x and ad y are homogeneous)."""
    m = t.algebra
    out = []
    for hgt in sorted(set(m.heights)):
        idx = [k for k in range(m.dim) if m.heights[k] == hgt]
        sub = [[ad_matrix[r][k] for k in idx] for r in range(m.dim)]
        for v in linalg.nullspace(sub, len(idx)):
            full = [Fraction(0)] * m.dim
            for k, c in zip(idx, v):
                full[k] = c
            out.append(full)
    return out


def ad_decomposition(t: PrincipalTriple) -> dict:
    """Exponents, summand dimensions and the highest/lowest weight spaces.

    ``z(x) = ker ad x`` is spanned by highest weight vectors; a highest
    weight vector of height m spans the top of a summand of dimension 2m+1.
    """
    m = t.algebra
    zx = _graded_kernel(t, t.ad_x)
    zy = _graded_kernel(t, t.ad_y)
    if not all(t.relations_hold().values()):
        raise TripleError("triple relations fail")
    zx_dims = _graded_kernel_dims(t, zx)
    zy_dims = _graded_kernel_dims(t, zy)
    exps = []
    for hgt, d in zx_dims.items():
        exps.extend([hgt] * d)
    summands = sorted(2 * e + 1 for e in exps)
    # ad h acts by 2 * height on the Chevalley basis
    ad_h_diag = all(t.ad_h[i][j] == (2 * m.heights[i] if i == j else 0)
                    for i in range(m.dim) for j in range(m.dim))
    return {
        "exponents": tuple(sorted(exps)),
        "summand_dimensions": tuple(summands),
        "z_x": tuple(tuple(v) for v in zx),
        "z_y": tuple(tuple(v) for v in zy),
        "z_x_height_dimensions": zx_dims,
        "z_y_height_dimensions": zy_dims,
        "ad_h_is_twice_height": ad_h_diag,
        "total_dimension": sum(summands),
    }


@dataclass(frozen=True)
class SplittingMap:
    """``P``: the inverse of ``ad y`` on ``Im ad y`` with image in ``Im ad x``.

    On the complement ``z(x)`` of ``Im ad y`` the map is extended by zero,
    which makes ``P`` a linear endomorphism of the whole algebra.
    """

    triple: PrincipalTriple
    domain: tuple[tuple[Fraction, ...], ...]  # basis of Im ad y
    matrix: tuple[tuple[Fraction, ...], ...]  # full dim x dim matrix

    def __call__(self, w: Sequence[object]) -> Vector:
        return tuple(linalg.matvec(self.matrix, [Fraction(c) for c in w]))


def splitting_map(t: PrincipalTriple) -> SplittingMap:
    m = t.algebra
    im_y = _column_space(t.ad_y)
    im_x = _column_space(t.ad_x)
    zx = _graded_kernel(t, t.ad_x)
    if len(im_y) + len(zx) != m.dim:
        raise TripleError("Im ad y and z(x) are not complementary")
    # coordinates: write g = Im ad y (+) z(x); P(w) = sum u_i for ad_y(u_i) = w_i
    images = []
    for w in im_y:
        # u = sum a_j im_x[j] with ad_y(u) = w
        cols = [linalg.matvec(t.ad_y, v) for v in im_x]
        a = linalg.solve(linalg.transpose(cols), w)
        u = [sum((aj * v[k] for aj, v in zip(a, im_x)), Fraction(0)) for k in range(m.dim)]
        images.append(u)
    basis = im_y + zx
    targets = images + [[Fraction(0)] * m.dim for _ in zx]
    # P = T B^{-1} where B has the basis as columns
    b = linalg.transpose(basis)
    binv = linalg.inverse(b)
    tmat = linalg.transpose(targets)
    p = linalg.matmul(tmat, binv)
    return SplittingMap(t, tuple(tuple(v) for v in im_y), tuple(tuple(r) for r in p))


def in_span(vectors: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    if not any(v):
        return True
    if not vectors:
        return False
    return linalg.rank([list(x) for x in vectors] + [list(v)]) == linalg.rank([list(x) for x in vectors])


def slice_series(t: PrincipalTriple, h_elem: Sequence[object], v: Sequence[object],
                 splitting: SplittingMap | None = None) -> dict:
    """Truncated alternating series ``sum_k (-1)^k (P ad_h)^k v``.

    Returns the series value, the list of terms, and membership diagnostics
    (whether the input commutes with ``y + h_elem`` and whether the output
    lies in ``z(y)``); no claim is made about which reading is intended.
    """
    m = t.algebra
    h_elem = tuple(Fraction(c) for c in h_elem)
    v = tuple(Fraction(c) for c in v)
    if any(m.bracket(t.x, h_elem)):
        raise TripleError("h_elem is not in the centralizer of x")
    p = splitting or splitting_map(t)
    bound = m.root_system.highest_height
    terms = [v]
    current = v
    for k in range(1, bound + 2):
        current = p(m.bracket(h_elem, current))
        terms.append(current)
    if any(terms[-1]):
        raise TripleError("series did not terminate at the grading bound")
    total = [Fraction(0)] * m.dim
    for k, term in enumerate(terms):
        sign = -1 if k % 2 else 1
        for i, c in enumerate(term):
            total[i] += sign * c
    shifted = tuple(a + b for a, b in zip(t.y, h_elem))
    zy = _graded_kernel(t, t.ad_y)
    nonzero = sum(1 for term in terms if any(term))
    return {
        "value": tuple(total),
        "terms": tuple(terms),
        "nonzero_terms": nonzero,
        "input_commutes_with_y_plus_h": not any(m.bracket(shifted, v)),
        "output_in_z_y": in_span(zy, total),
        "output_commutes_with_y_plus_h": not any(m.bracket(shifted, tuple(total))),
    }


def shifted_action(t: PrincipalTriple, scale: Fraction, v: Sequence[object]) -> Vector:
    """``t^2 * rho(t)``: multiply the height-m component by ``scale^(2 + 2m)``."""
    s = Fraction(scale)
    if not s:
        raise ValueError("scale must be nonzero")
    heights = t.algebra.heights
    return tuple(Fraction(c) * s ** (2 + 2 * heights[k]) for k, c in enumerate(v))

