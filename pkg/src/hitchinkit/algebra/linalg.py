"""Exact linear algebra over the rationals, plus division-free determinants.

Matrices are lists of rows.  The Fraction routines (rank, nullspace,
solve, inverse) use Gauss-Jordan elimination.  :func:`charpoly_coefficients`
implements the Samuelson-Berkowitz recursion, which needs only ring
operations and therefore works for matrices of polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

Matrix = list[list[Fraction]]


class SingularMatrix(ArithmeticError):
    pass


def to_fraction_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def matmul(a, b):
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * b[k][j] for k, x in nz), Fraction(0)) for j in range(cols)])
    assert all(len(r) == inner for r in a)
    return out


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v) if x), Fraction(0)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def commutator(a, b):
    ab = matmul(a, b)
    ba = matmul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def mat_add(a, b, scale=1):
    return [[x + scale * y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def trace(a):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(map(Fraction, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : a v = 0}``."""
    cols = len(a[0]) if a else (ncols or 0)
    if not a:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    m, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Sequence[Fraction]) -> list[Fraction]:
    """One exact solution of ``a x = b``; raises if inconsistent."""
    cols = len(a[0])
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if cols in pivots:
        raise SingularMatrix("inconsistent linear system")
    x = [Fraction(0)] * cols
    for r, p in enumerate(pivots):
        x[p] = m[r][cols]
    return x


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    m, pivots = rref(aug)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in m]


def det(a: Matrix) -> Fraction:
    n = len(a)
    m = [list(map(Fraction, row)) for row in a]
    sign = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    out = sign
    for i in range(n):
        out *= m[i][i]
    return out


def charpoly_coefficients(a: Sequence[Sequence[object]], zero: object = 0,
                          one: object = 1) -> list:
    """Coefficients ``[1, c_1, ..., c_n]`` of ``det(t*1 - a)`` in descending powers.

    Division free, so entries may come from any commutative ring (for
    example :class:`~hitchinkit.algebra.poly.RationalPoly`).
    """
    n = len(a)
    if n == 0:
        return [one]
    # start from the bottom-right 1x1 block and grow upwards
    coeffs = [one, zero - a[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        size = n - k  # current block a[k:, k:]
        sub = [row[k + 1:] for row in a[k + 1:]]
        r = a[k][k + 1:]
        col = [a[i][k] for i in range(k + 1, n)]
        # Toeplitz column: 1, -a_kk, -R C, -R M C, ..., -R M^{size-2} C
        toeplitz = [one, zero - a[k][k]]
        vec = col
        for _ in range(size - 1):
            val = zero
            for x, y in zip(r, vec):
                val = val + x * y
            toeplitz.append(zero - val)
            vec = [_dot(row, vec, zero) for row in sub]
        new = []
        for i in range(size + 1):
            acc = zero
            for j in range(min(i, size - 1) + 1):
                acc = acc + toeplitz[i - j] * coeffs[j]
            new.append(acc)
        coeffs = new
    return coeffs


def _dot(row, vec, zero):
    acc = zero
    for x, y in zip(row, vec):
        acc = acc + x * y
    return acc


def ring_det(a: Sequence[Sequence[object]], zero: object = 0, one: object = 1):
    """Determinant over any commutative ring (via Berkowitz)."""
    n = len(a)
    c = charpoly_coefficients(a, zero, one)[-1]
    return c if n % 2 == 0 else zero - c


def apply_elementwise(a, fn: Callable):
    return [[fn(x) for x in row] for row in a]
