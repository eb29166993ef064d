"""Root systems, Weyl groups and Chevalley-basis models for types A_n and G2.

Conventions
-----------
* Cartan matrices satisfy ``C[i][j] = alpha_i(coroot_j)``.
* G2 uses ``C = [[2, -1], [-3, 2]]``: the first simple root is short, so
  the first simple coroot is long.  :func:`g2_from_transpose_convention`
  relabels the other common convention.
* Roots are integer vectors in the simple-root basis, coroots integer
  vectors in the simple-coroot basis.  Cartan elements are written in
  coroot coordinates ``h = sum(x_k * h_k)``.
* ``highest_height`` M is the height of the highest root (= largest
  exponent); ``coxeter_number`` is M + 1.

Structure constants are produced from the Cartan matrix alone by
recursively computing the action of the generators on root vectors
``e_beta = [e_i, e_{beta - alpha_i}]`` (``i`` the smallest admissible
index).  Negative root vectors come from the Chevalley involution and
every pair ``e_beta, f_beta`` is rescaled so that ``[e_beta, f_beta]`` is
the coroot of ``beta``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .algebra import linalg
from .algebra.laurent import rational_sqrt

Vector = tuple[Fraction, ...]
IntMatrix = tuple[tuple[int, ...], ...]


class UnsupportedType(ValueError):
    pass


# Cartan matrices

def cartan_matrix(type_name: str) -> IntMatrix:
    m = re.fullmatch(r"\s*([AG])\s*(\d+)\s*", type_name.upper())
    if not m:
        raise UnsupportedType(f"unsupported type {type_name!r}; use A<n> or G2")
    kind, n = m.group(1), int(m.group(2))
    if kind == "G":
        if n != 2:
            raise UnsupportedType(f"unsupported type {type_name!r}")
        return ((2, -1), (-3, 2))
    if n < 1:
        raise UnsupportedType("A_n needs n >= 1")
    return tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
                 for i in range(n))


def classify_cartan(cartan: Sequence[Sequence[int]]) -> str:
    c = tuple(tuple(int(x) for x in row) for row in cartan)
    n = len(c)
    if any(len(row) != n for row in c) or n == 0:
        raise UnsupportedType("Cartan matrix must be square and non-empty")
    if c == ((2, -1), (-3, 2)):
        return "G2"
    if c == ((2, -3), (-1, 2)):
        raise UnsupportedType(
            "this is G2 in the transposed convention; relabel with g2_from_transpose_convention")
    if c == cartan_matrix(f"A{n}"):
        return f"A{n}"
    raise UnsupportedType(f"unsupported or invalid Cartan matrix {c}")


def g2_from_transpose_convention(cartan: Sequence[Sequence[int]],
                                 root_coords: Sequence[int] | None = None):
    """Relabel G2 data given with ``C = [[2,-3],[-1,2]]`` (first simple root long).

    Returns the Cartan matrix in this package's convention, and optionally a
    root vector converted to it (the two simple roots swap places).
    """
    c = tuple(tuple(int(x) for x in row) for row in cartan)
    if c != ((2, -3), (-1, 2)):
        raise UnsupportedType("expected G2 in the transposed convention")
    swapped = ((c[1][1], c[1][0]), (c[0][1], c[0][0]))
    if root_coords is None:
        return swapped
    return swapped, (root_coords[1], root_coords[0])


# root systems

@dataclass(frozen=True)
class RootSystem:
    type_name: str
    cartan: IntMatrix
    positive_roots: tuple[tuple[int, ...], ...]
    lengths_sq: tuple[Fraction, ...]  # squared length per positive root, long roots = 2

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        return self.positive_roots + tuple(tuple(-x for x in r) for r in self.positive_roots)

    @cached_property
    def root_lengths(self) -> dict[tuple[int, ...], str]:
        long = max(self.lengths_sq)
        out = {}
        for r, l in zip(self.positive_roots, self.lengths_sq):
            cls = "long" if l == long else "short"
            out[r] = cls
            out[tuple(-x for x in r)] = cls
        return out

    def length_sq(self, root: Sequence[int]) -> Fraction:
        r = tuple(root)
        if r not in self.root_lengths:
            raise KeyError(root)
        pos = r if r in self.positive_roots else tuple(-x for x in r)
        return self.lengths_sq[self.positive_roots.index(pos)]

    @cached_property
    def simple_lengths_sq(self) -> tuple[Fraction, ...]:
        return self.lengths_sq[: self.rank]

    def coroot(self, root: Sequence[int]) -> tuple[int, ...]:
        """Coroot ``2 beta / (beta, beta)`` in simple-coroot coordinates."""
        l2 = self.length_sq(root)
        out = []
        for c, li in zip(root, self.simple_lengths_sq):
            v = Fraction(c) * li / l2
            if v.denominator != 1:
                raise ArithmeticError("non-integral coroot")
            out.append(int(v))
        return tuple(out)

    @cached_property
    def coroots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.coroot(r) for r in self.roots)

    def height(self, root: Sequence[int]) -> int:
        return sum(root)

    @cached_property
    def exponents(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for r in self.positive_roots:
            counts[sum(r)] = counts.get(sum(r), 0) + 1
        out = []
        top = max(counts)
        for k in range(1, top + 1):
            mult = counts.get(k, 0) - counts.get(k + 1, 0)
            out.extend([k] * mult)
        return tuple(out)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m + 1 for m in self.exponents)

    @property
    def highest_height(self) -> int:
        return max(sum(r) for r in self.positive_roots)

    @property
    def coxeter_number(self) -> int:
        return self.highest_height + 1

    @property
    def dimension(self) -> int:
        return len(self.roots) + self.rank

    def pairing(self, root: Sequence[int], coroot_coords: Sequence[object]):
        """``root(h)`` for ``h`` given in simple-coroot coordinates."""
        total = 0
        for j, bj in enumerate(root):
            if bj:
                for k, xk in enumerate(coroot_coords):
                    total = total + bj * self.cartan[j][k] * xk
        return total

    def grading_dimensions(self) -> dict[int, int]:
        dims = {0: self.rank}
        for r in self.roots:
            dims[sum(r)] = dims.get(sum(r), 0) + 1
        return dict(sorted(dims.items()))

    def reflect_root(self, i: int, root: Sequence[int]) -> tuple[int, ...]:
        k = sum(root[j] * self.cartan[j][i] for j in range(self.rank))
        return tuple(r - k * (1 if j == i else 0) for j, r in enumerate(root))


def _symmetrizer(cartan: IntMatrix) -> list[Fraction]:
    n = len(cartan)
    ell: list[Fraction | None] = [None] * n
    ell[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and ell[j] is None:
                # C_ij l_j = C_ji l_i
                ell[j] = Fraction(cartan[j][i]) * ell[i] / cartan[i][j]
                stack.append(j)
    if any(x is None for x in ell):
        raise UnsupportedType("Cartan matrix is decomposable")
    top = max(ell)
    return [2 * x / top for x in ell]


def build_root_system(cartan: Sequence[Sequence[int]] | str) -> RootSystem:
    if isinstance(cartan, str):
        cartan = cartan_matrix(cartan)
    type_name = classify_cartan(cartan)
    c = tuple(tuple(int(x) for x in row) for row in cartan)
    n = len(c)
    ell = _symmetrizer(c)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    bound = 10 ** 4
    while frontier:
        new = []
        for r in frontier:
            for i in range(n):
                s = tuple(r[j] - sum(r[k] * c[k][i] for k in range(n)) * (1 if j == i else 0)
                          for j in range(n))
                if s not in found:
                    found.add(s)
                    new.append(s)
        frontier = new
        if len(found) > bound:
            raise UnsupportedType("root closure exceeded safety bound")
    positive = [r for r in found if all(x >= 0 for x in r)]
    if len(positive) * 2 != len(found):
        raise UnsupportedType("reflection closure is not a root system")
    positive.sort(key=lambda r: (sum(r), tuple(-x for x in r)))
    lengths = []
    for r in positive:
        l2 = sum(Fraction(r[i] * r[j] * c[i][j]) * ell[j] / 2 for i in range(n) for j in range(n))
        lengths.append(l2)
    return RootSystem(type_name, c, tuple(positive), tuple(lengths))


# Weyl groups

@dataclass(frozen=True)
class WeylGroup:
    generators: tuple[IntMatrix, ...]
    elements: tuple[IntMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @staticmethod
    def multiply(a: IntMatrix, b: IntMatrix) -> IntMatrix:
        n = len(a)
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                     for i in range(n))

    @staticmethod
    def apply(w: IntMatrix, coords: Sequence[object]) -> tuple:
        out = []
        for row in w:
            acc = 0
            for x, y in zip(row, coords):
                if x:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def element_order(self, w: IntMatrix) -> int:
        ident = self.elements[0]
        k, p = 1, w
        while p != ident:
            p = self.multiply(p, w)
            k += 1
        return k

    def contains(self, matrix: Sequence[Sequence[object]]) -> bool:
        key = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        return any(tuple(tuple(Fraction(x) for x in row) for row in w) == key for w in self.elements)


def weyl_group(rs: RootSystem, bound: int = 100000) -> WeylGroup:
    n = rs.rank
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    gens = []
    for i in range(n):
        gens.append(tuple(tuple(int(k == j) - (rs.cartan[i][j] if k == i else 0) for j in range(n))
                          for k in range(n)))
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for s in gens:
                p = WeylGroup.multiply(s, w)
                if p not in seen:
                    seen.add(p)
                    order.append(p)
                    new.append(p)
        frontier = new
        if len(seen) > bound:
            raise UnsupportedType("Weyl closure exceeded safety bound")
    return WeylGroup(tuple(gens), tuple(order))


# Lie algebra models

@dataclass(frozen=True)
class LieAlgebraModel:
    """Chevalley-basis model.

    Basis order: ``h_1..h_l``, then ``e_beta`` and ``f_beta`` for the
    positive roots in height order.  ``structure[(a, b)]`` maps ``c`` to the
    coefficient of basis element ``c`` in ``[b_a, b_b]``.
    """

    root_system: RootSystem
    labels: tuple[str, ...]
    weights: tuple[tuple[int, ...], ...]  # root of each basis vector, zero for Cartan
    structure: dict
    realization: tuple | None = None  # matrices (Fraction rows) per basis element
    realization_name: str = ""

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @cached_property
    def heights(self) -> tuple[int, ...]:
        return tuple(sum(w) for w in self.weights)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def e(self, root: Sequence[int]) -> int:
        return self.root_index[tuple(root)][0]

    def f(self, root: Sequence[int]) -> int:
        return self.root_index[tuple(root)][1]

    def h(self, i: int) -> int:
        return i

    @cached_property
    def root_index(self) -> dict[tuple[int, ...], tuple[int, int]]:
        l = self.rank
        npos = len(self.root_system.positive_roots)
        return {r: (l + k, l + npos + k) for k, r in enumerate(self.root_system.positive_roots)}

    def basis_vector(self, k: int) -> Vector:
        return tuple(Fraction(int(i == k)) for i in range(self.dim))

    def element(self, coeffs: dict[int, object]) -> Vector:
        v = [Fraction(0)] * self.dim
        for k, c in coeffs.items():
            v[k] += Fraction(c)
        return tuple(v)

    def bracket(self, u: Sequence[object], v: Sequence[object]) -> Vector:
        out = [Fraction(0)] * self.dim
        nu = [(a, x) for a, x in enumerate(u) if x]
        nv = [(b, y) for b, y in enumerate(v) if y]
        for a, x in nu:
            for b, y in nv:
                entry = self.structure.get((a, b))
                if entry:
                    xy = x * y
                    for c, coeff in entry.items():
                        out[c] += coeff * xy
        return tuple(out)

    def ad(self, u: Sequence[object]) -> list[list[Fraction]]:
        """Matrix of ``ad u`` (columns are images of basis vectors)."""
        cols = [self.bracket(u, self.basis_vector(b)) for b in range(self.dim)]
        return [[cols[b][c] for b in range(self.dim)] for c in range(self.dim)]

    @cached_property
    def ad_basis(self) -> tuple:
        return tuple(self.ad(self.basis_vector(a)) for a in range(self.dim))

    @cached_property
    def killing_form(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.dim
        mats = self.ad_basis
        out = [[Fraction(0)] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                # tr(ad_a ad_b)
                ma, mb = mats[a], mats[b]
                val = Fraction(0)
                for i in range(n):
                    row = ma[i]
                    for k in range(n):
                        if row[k]:
                            val += row[k] * mb[k][i]
                out[a][b] = out[b][a] = val
        return tuple(tuple(r) for r in out)

    def killing(self, u: Sequence[object], v: Sequence[object]) -> Fraction:
        k = self.killing_form
        return sum((Fraction(u[a]) * k[a][b] * v[b] for a in range(self.dim) if u[a]
                    for b in range(self.dim) if v[b]), Fraction(0))

    def cartan_element(self, coroot_coords: Sequence[object]) -> Vector:
        return tuple([Fraction(x) for x in coroot_coords] + [Fraction(0)] * (self.dim - self.rank))

    def represent(self, u: Sequence[object]):
        """Image of ``u`` under the attached matrix realization."""
        if self.realization is None:
            raise ValueError("no matrix realization attached")
        size = len(self.realization[0])
        out = [[0] * size for _ in range(size)]
        for a, x in enumerate(u):
            if not x:
                continue
            mat = self.realization[a]
            for i in range(size):
                for j in range(size):
                    if mat[i][j]:
                        out[i][j] = out[i][j] + mat[i][j] * x
        return out

    def from_matrix(self, matrix: Sequence[Sequence[object]]) -> Vector:
        """Coordinates of a matrix lying in the image of the realization."""
        if self.realization is None:
            raise ValueError("no matrix realization attached")
        size = len(self.realization[0])
        rows = []
        rhs = []
        for i in range(size):
            for j in range(size):
                rows.append([self.realization[a][i][j] for a in range(self.dim)])
                rhs.append(Fraction(matrix[i][j]))
        sol = linalg.solve(rows, rhs)
        return tuple(sol)

    def kernel_dimension(self, u: Sequence[object]) -> int:
        return self.dim - linalg.rank(self.ad(u))

    def jacobi_defect(self, a: int, b: int, c: int) -> Vector:
        x, y, z = (self.basis_vector(k) for k in (a, b, c))
        t1 = self.bracket(self.bracket(x, y), z)
        t2 = self.bracket(self.bracket(y, z), x)
        t3 = self.bracket(self.bracket(z, x), y)
        return tuple(p + q + r for p, q, r in zip(t1, t2, t3))


class _SerreRecursion:
    """Scalars of the generator actions on positive root vectors."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.c = rs.cartan
        self.n = rs.rank
        self.pos = set(rs.positive_roots)
        self.parent: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
        for r in rs.positive_roots:
            if sum(r) > 1:
                for i in range(self.n):
                    prev = self._minus(r, i)
                    if prev in self.pos:
                        self.parent[r] = (i, prev)
                        break
        self._F: dict = {}
        self._E: dict = {}

    def _minus(self, r, i):
        return tuple(x - (1 if k == i else 0) for k, x in enumerate(r))

    def _plus(self, r, i):
        return tuple(x + (1 if k == i else 0) for k, x in enumerate(r))

    def simple(self, i):
        return tuple(int(k == i) for k in range(self.n))

    def h_eigen(self, k: int, r) -> int:
        return sum(r[j] * self.c[j][k] for j in range(self.n))

    def F(self, j: int, beta) -> Fraction:
        """``[f_j, e_beta] = F e_{beta - alpha_j}`` for non-simple or non-matching beta."""
        key = (j, beta)
        if key in self._F:
            return self._F[key]
        val = Fraction(0)
        if sum(beta) > 1 and self._minus(beta, j) in self.pos:
            i, prev = self.parent[beta]
            if i == j:
                val -= self.h_eigen(i, prev)
            if prev == self.simple(j):
                val += self.c[i][j]
            else:
                prev2 = self._minus(prev, j)
                if prev2 in self.pos:
                    val += self.F(j, prev) * self.E(i, prev2)
        self._F[key] = val
        return val

    def E(self, i: int, gamma) -> Fraction:
        """``[e_i, e_gamma] = E e_{gamma + alpha_i}``."""
        key = (i, gamma)
        if key in self._E:
            return self._E[key]
        delta = self._plus(gamma, i)
        if delta not in self.pos:
            val = Fraction(0)
        else:
            k, prev = self.parent[delta]
            if k == i:
                val = Fraction(1)
            else:
                if gamma == self.simple(k):
                    num = Fraction(self.c[i][k])
                elif self._minus(gamma, k) in self.pos:
                    num = self.F(k, gamma) * self.E(i, self._minus(gamma, k))
                else:
                    num = Fraction(0)
                den = self.F(k, delta)
                if not den:
                    raise ArithmeticError("degenerate Serre recursion")
                val = num / den
        self._E[key] = val
        return val


def _generator_ad_matrices(rs: RootSystem):
    """ad matrices of e_i, f_i, h_i on the unnormalized basis."""
    rec = _SerreRecursion(rs)
    n = rs.rank
    pos = rs.positive_roots
    npos = len(pos)
    dim = n + 2 * npos
    eidx = {r: n + k for k, r in enumerate(pos)}
    fidx = {r: n + npos + k for k, r in enumerate(pos)}

    def blank():
        return [[Fraction(0)] * dim for _ in range(dim)]

    ad_e, ad_f, ad_h = [], [], []
    for i in range(n):
        ai = rec.simple(i)
        me, mf, mh = blank(), blank(), blank()
        for k in range(n):
            # [e_i, h_k] = -C_ik e_i ; [f_i, h_k] = C_ik f_i
            me[eidx[ai]][k] = Fraction(-rs.cartan[i][k])
            mf[fidx[ai]][k] = Fraction(rs.cartan[i][k])
        for r in pos:
            up = rec._plus(r, i)
            if up in rec.pos:
                me[eidx[up]][eidx[r]] = rec.E(i, r)
                mf[fidx[up]][fidx[r]] = -rec.E(i, r)
            if r == ai:
                me[i][fidx[r]] = Fraction(1)
                mf[i][eidx[r]] = Fraction(-1)
            else:
                down = rec._minus(r, i)
                if down in rec.pos:
                    mf[eidx[down]][eidx[r]] = rec.F(i, r)
                    me[fidx[down]][fidx[r]] = -rec.F(i, r)
            ev = rec.h_eigen(i, r)
            mh[eidx[r]][eidx[r]] = Fraction(ev)
            mh[fidx[r]][fidx[r]] = Fraction(-ev)
        ad_e.append(me)
        ad_f.append(mf)
        ad_h.append(mh)
    return rec, ad_e, ad_f, ad_h


def _g2_seven_dim_generators():
    # basis order v0, v1, v2, v3, v-1, v-2, v-3
    idx = {0: 0, 1: 1, 2: 2, 3: 3, -1: 4, -2: 5, -3: 6}

    def unit(pairs):
        m = [[Fraction(0)] * 7 for _ in range(7)]
        for (i, j), c in pairs.items():
            m[idx[i]][idx[j]] += Fraction(c)
        return m

    e1 = unit({(0, -1): 1, (1, 0): -2, (-3, 2): 1, (-2, 3): -1})
    f1 = unit({(0, 1): -1, (-1, 0): 2, (2, -3): 1, (3, -2): -1})
    e2 = unit({(2, 1): 1, (-1, -2): -1})
    f2 = unit({(1, 2): 1, (-2, -1): -1})
    return [e1, e2], [f1, f2]


def _an_generators(n: int):
    size = n + 1

    def unit(i, j):
        m = [[Fraction(0)] * size for _ in range(size)]
        m[i][j] = Fraction(1)
        return m

    return [unit(i, i + 1) for i in range(n)], [unit(i + 1, i) for i in range(n)]


def chevalley_algebra(rs: RootSystem, realize: bool = True) -> LieAlgebraModel:
    """Chevalley-basis model with an attached matrix realization.

    A_n is realized on traceless (n+1)x(n+1) matrices, G2 on the 7-dimensional
    representation inside so(7) with Cartan ``diag(0, l1, l2, l3, -l1, -l2, -l3)``.
    The realization is checked to be a homomorphism of the constructed bracket.
    """
    if not (rs.type_name.startswith("A") or rs.type_name == "G2"):
        raise UnsupportedType(rs.type_name)
    rec, ad_e, ad_f, ad_h = _generator_ad_matrices(rs)
    n = rs.rank
    pos = rs.positive_roots
    npos = len(pos)
    dim = n + 2 * npos
    ad_of: list = [None] * dim
    for i in range(n):
        ad_of[i] = ad_h[i]
        ad_of[n + i] = ad_e[i]
        ad_of[n + npos + i] = ad_f[i]
    if realize:
        gens_e, gens_f = (_g2_seven_dim_generators() if rs.type_name == "G2"
                          else _an_generators(n))
        rep: list = [None] * dim
        for i in range(n):
            rep[n + i] = gens_e[i]
            rep[n + npos + i] = gens_f[i]
            rep[i] = linalg.commutator(gens_e[i], gens_f[i])
    for k, r in enumerate(pos):
        if sum(r) == 1:
            continue
        i, prev = rec.parent[r]
        pk = pos.index(prev)
        ad_of[n + k] = linalg.commutator(ad_e[i], ad_of[n + pk])
        ad_of[n + npos + k] = linalg.mat_scale(linalg.commutator(ad_f[i], ad_of[n + npos + pk]), -1)
        if realize:
            rep[n + k] = linalg.commutator(gens_e[i], rep[n + pk])
            rep[n + npos + k] = linalg.mat_scale(linalg.commutator(gens_f[i], rep[n + npos + pk]), -1)
    # normalization so that [e_beta, f_beta] is the coroot of beta
    scale = [Fraction(1)] * dim
    for k, r in enumerate(pos):
        ea, fa = n + k, n + npos + k
        col = [ad_of[ea][c][fa] for c in range(dim)]
        if any(col[n:]):
            raise ArithmeticError("[e_beta, f_beta] left the Cartan subalgebra")
        cor = rs.coroot(r)
        ratio = None
        for c in range(n):
            if cor[c]:
                ratio = col[c] / cor[c]
                break
        if ratio is None or [ratio * x for x in cor] != col[:n]:
            raise ArithmeticError(f"[e_beta, f_beta] not proportional to the coroot of {r}")
        s = rational_sqrt(ratio)
        scale[ea] = scale[fa] = s
    structure: dict = {}
    for a in range(dim):
        mat = ad_of[a]
        for b in range(dim):
            entry = {}
            for c in range(dim):
                v = mat[c][b]
                if v:
                    entry[c] = v * scale[c] / (scale[a] * scale[b])
            if entry:
                structure[(a, b)] = entry
    labels = tuple([f"h{i + 1}" for i in range(n)]
                   + ["e_" + "".join(map(str, r)) for r in pos]
                   + ["f_" + "".join(map(str, r)) for r in pos])
    weights = tuple([tuple([0] * n)] * n + list(pos) + [tuple(-x for x in r) for r in pos])
    realization = None
    name = ""
    if realize:
        realization = tuple(tuple(tuple(x / scale[a] for x in row) for row in rep[a])
                            for a in range(dim))
        name = "so7-seven-dim" if rs.type_name == "G2" else f"sl{n + 1}-defining"
    model = LieAlgebraModel(rs, labels, weights, structure, realization, name)
    if realize:
        _check_homomorphism(model)
    return model


def _check_homomorphism(model: LieAlgebraModel) -> None:
    reps = model.realization
    for a in range(model.dim):
        for b in range(a + 1, model.dim):
            lhs = linalg.commutator(reps[a], reps[b])
            br = model.structure.get((a, b), {})
            size = len(lhs)
            rhs = [[Fraction(0)] * size for _ in range(size)]
            for c, coeff in br.items():
                for i in range(size):
                    for j in range(size):
                        if reps[c][i][j]:
                            rhs[i][j] += coeff * reps[c][i][j]
            if lhs != rhs:
                raise ArithmeticError(
                    f"realization is not a homomorphism on ({model.labels[a]}, {model.labels[b]})")


def structure_constant(model: LieAlgebraModel, alpha: Sequence[int], beta: Sequence[int]) -> Fraction:
    """``N_{alpha,beta}`` with ``[e_alpha, e_beta] = N e_{alpha+beta}`` (roots of any sign)."""

    def vec(root):
        root = tuple(root)
        if all(x >= 0 for x in root):
            return model.e(root)
        return model.f(tuple(-x for x in root))

    s = tuple(x + y for x, y in zip(alpha, beta))
    if s not in model.root_system.root_lengths:
        return Fraction(0)
    br = model.structure.get((vec(alpha), vec(beta)), {})
    return br.get(vec(s), Fraction(0))


def root_string_p(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Largest p with ``beta - p*alpha`` a root."""
    p = 0
    roots = rs.root_lengths
    while tuple(b - (p + 1) * a for a, b in zip(alpha, beta)) in roots:
        p += 1
    return p


# G2 Cartan coordinates and the duality map

def g2_cartan_to_lambda(coroot_coords: Sequence[object]) -> tuple:
    """Eigenvalues ``(l1, l2, l3)`` of the 7-dim realization at ``x1 h1 + x2 h2``."""
    x1, x2 = coroot_coords
    return (2 * x1 - x2, x2 - x1, -x1)


def g2_lambda_to_cartan(lam: Sequence[object]) -> tuple:
    l1, l2, l3 = (Fraction(x) for x in lam)
    if l1 + l2 + l3 != 0:
        raise ValueError("lambda coordinates must sum to zero")
    return (-l3, l2 - l3)


def g2_epsilon_coordinates(x: object, y: object) -> tuple:
    """Coroot coordinates of ``x (e1 - e2) + y (2 e2 - e1 - e3)``.

    Both sides have lambda coordinates ``(x - y, 2y - x, -y)``.
    """
    return (y, 3 * y - x)


_CROSS = ((0, -1, 1), (1, 0, -1), (-1, 1, 0))


@dataclass(frozen=True)
class DualityMap:
    """The rotation by a quarter turn on the real G2 Cartan.

    ``l = scale * rational_matrix`` with ``scale**2 = scale_sq``; the
    rational matrix is ``v -> (1,1,1) x v`` in lambda coordinates, which
    stretches the plane ``sum = 0`` by sqrt(3).
    """

    lambda_matrix: tuple[tuple[int, ...], ...]
    coroot_matrix: tuple[tuple[Fraction, ...], ...]
    scale_sq: Fraction
    maps_short_to_long: bool
    maps_long_to_three_short: bool
    square_in_weyl: bool
    in_weyl: bool


def killing_and_duality(rs: RootSystem, model: LieAlgebraModel | None = None) -> dict:
    model = model or chevalley_algebra(rs, realize=False)
    n = rs.rank
    kill = model.killing_form
    killing_t = tuple(tuple(kill[i][j] for j in range(n)) for i in range(n))
    out = {"killing_on_t": killing_t}
    if rs.type_name == "G2":
        out["duality"] = g2_duality_map(rs)
    return out


def g2_duality_map(rs: RootSystem) -> DualityMap:
    if rs.type_name != "G2":
        raise UnsupportedType("the short/long duality map is implemented for G2 only")

    def lam_of(cor):
        return g2_cartan_to_lambda(cor)

    def rot(lam):
        return tuple(sum(_CROSS[i][j] * lam[j] for j in range(3)) for i in range(3))

    # coroot-coordinate matrix of the rational map
    cols = []
    for basis in ((1, 0), (0, 1)):
        cols.append(g2_lambda_to_cartan(rot(lam_of(basis))))
    coroot_matrix = tuple(tuple(Fraction(cols[j][i]) for j in range(2)) for i in range(2))
    short = {tuple(lam_of(c)) for r, c in zip(rs.roots, rs.coroots) if rs.root_lengths[r] == "long"}
    long = {tuple(lam_of(c)) for r, c in zip(rs.roots, rs.coroots) if rs.root_lengths[r] == "short"}
    # long roots have short coroots and vice versa
    img_short = {rot(v) for v in short}
    img_long = {rot(v) for v in long}
    weyl = weyl_group(rs)
    sq = linalg.matmul(coroot_matrix, coroot_matrix)
    # l^2 = (1/3) R^2 = -1
    l_sq = [[Fraction(x) / 3 for x in row] for row in sq]
    square_in = weyl.contains(l_sq)
    # a Weyl element w equal to l would satisfy w^2 = l^2; the dihedral group
    # of order 12 contains no element whose square is -1
    in_weyl = any(weyl.multiply(w, w) == tuple(tuple(int(x) for x in row) for row in l_sq)
                  for w in weyl.elements)
    return DualityMap(_CROSS, coroot_matrix, Fraction(1, 3),
                      img_short == long,
                      img_long == {tuple(3 * x for x in v) for v in short},
                      square_in, in_weyl)


TYPES = ("A1", "A2", "A3", "A4", "G2")
