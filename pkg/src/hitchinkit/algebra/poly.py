"""Exact multivariate polynomials over the rationals.

A :class:`RationalPoly` is an immutable map from exponent vectors to
:class:`fractions.Fraction` coefficients over an ordered variable list.
Monomials are compared in graded lexicographic order.  The canonical
string lists terms by ascending total degree and, within one degree, in
lexicographic order of the variable list (so ``x`` comes before ``y``).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]
Monomial = tuple[int, ...]


class PolynomialError(ValueError):
    """Raised for ill-formed polynomial operations."""


class VariableMismatch(PolynomialError):
    """Raised when a strict operation receives incompatible variable lists."""


def as_fraction(value: object) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def _merge_vars(a: Sequence[str], b: Sequence[str]) -> tuple[str, ...]:
    out = list(a)
    seen = set(a)
    for v in b:
        if v not in seen:
            out.append(v)
            seen.add(v)
    return tuple(out)


class RationalPoly:
    """Immutable exact polynomial.  Zero coefficients are never stored."""

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: Iterable[str],
                 terms: Mapping[Monomial, Scalar] | None = None):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise PolynomialError(f"duplicate variables in {vs}")
        n = len(vs)
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise PolynomialError(f"exponent vector {mono} does not match {vs}")
            if any(e < 0 for e in mono):
                raise PolynomialError(f"negative exponent in {mono}")
            c = as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
                if not clean[mono]:
                    del clean[mono]
        self._vars = vs
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Monomial, Fraction]) -> RationalPoly:
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str] = ()) -> RationalPoly:
        vs = tuple(variables)
        c = as_fraction(value)
        return cls._raw(vs, {(0,) * len(vs): c} if c else {})

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> RationalPoly:
        return cls._raw(tuple(variables), {})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str] | None = None) -> RationalPoly:
        vs = tuple(variables) if variables is not None else (name,)
        if name not in vs:
            vs = vs + (name,)
        mono = tuple(1 if v == name else 0 for v in vs)
        return cls._raw(vs, {mono: Fraction(1)})

    @classmethod
    def from_univariate(cls, coeffs: Sequence[Scalar], var: str) -> RationalPoly:
        """Build ``sum(coeffs[k] * var**k)``."""
        return cls((var,), {(k,): c for k, c in enumerate(coeffs)})

    # basic accessors
    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolynomialError(f"{self} is not constant")
        return next(iter(self._terms.values()), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        if var not in self._vars:
            return 0 if self._terms else -1
        i = self._vars.index(var)
        return max((m[i] for m in self._terms), default=-1)

    def support_variables(self) -> tuple[str, ...]:
        used = [False] * len(self._vars)
        for m in self._terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self._vars, used) if u)

    # variable bookkeeping
    def with_variables(self, variables: Iterable[str]) -> RationalPoly:
        """Re-express over ``variables``, which must contain every used variable."""
        vs = tuple(variables)
        if vs == self._vars:
            return self
        pos = {v: i for i, v in enumerate(vs)}
        missing = [v for v in self.support_variables() if v not in pos]
        if missing:
            raise VariableMismatch(f"variables {missing} dropped from {vs}")
        idx = [pos.get(v) for v in self._vars]
        out: dict[Monomial, Fraction] = {}
        n = len(vs)
        for m, c in self._terms.items():
            new = [0] * n
            for i, e in enumerate(m):
                if e:
                    new[idx[i]] = e
            out[tuple(new)] = c
        return RationalPoly._raw(vs, out)

    def _coerce(self, other: object) -> RationalPoly:
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly.constant(as_fraction(other), self._vars)

    def _aligned(self, other: RationalPoly) -> tuple[tuple[str, ...], dict, dict]:
        if other._vars == self._vars:
            return self._vars, self._terms, other._terms
        vs = _merge_vars(self._vars, other._vars)
        return vs, self.with_variables(vs)._terms, other.with_variables(vs)._terms

    # ring operations
    def __add__(self, other: object) -> RationalPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        vs, a, b = self._aligned(other)
        out = dict(a)
        for m, c in b.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return RationalPoly._raw(vs, out)

    __radd__ = __add__

    def __neg__(self) -> RationalPoly:
        return RationalPoly._raw(self._vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> RationalPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> RationalPoly:
        return (-self) + other

    def scale(self, c: Scalar) -> RationalPoly:
        c = as_fraction(c)
        if not c:
            return RationalPoly.zero(self._vars)
        return RationalPoly._raw(self._vars, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other: object) -> RationalPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        vs, a, b = self._aligned(other)
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, Fraction] = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        return RationalPoly._raw(vs, {m: c for m, c in out.items() if c})

    def __rmul__(self, other: object) -> RationalPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other: object) -> RationalPoly:
        if isinstance(other, RationalPoly):
            if not other.is_constant():
                return exact_divide(self, other)
            other = other.constant_value()
        c = as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / c)

    def __pow__(self, k: int) -> RationalPoly:
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("only non-negative integer powers are supported")
        result = RationalPoly.constant(1, self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison
    def _canonical_key(self) -> frozenset:
        out = []
        for m, c in self._terms.items():
            out.append((tuple(sorted((v, e) for v, e in zip(self._vars, m) if e)), c))
        return frozenset(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalPoly.constant(other, self._vars)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if other._vars == self._vars:
            return self._terms == other._terms
        return self._canonical_key() == other._canonical_key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._canonical_key())
        return self._hash

    # calculus and substitution
    def partial(self, var: str) -> RationalPoly:
        if var not in self._vars:
            return RationalPoly.zero(self._vars)
        i = self._vars.index(var)
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return RationalPoly._raw(self._vars, out)

    def evaluate(self, point: Mapping[str, object]):
        """Evaluate at a point; every used variable needs a value.

        Values may be any ring elements supporting ``+`` and ``*`` with
        Fractions (Fractions, complex numbers, numpy scalars, series).
        """
        vals = []
        for v in self._vars:
            vals.append(point.get(v) if v in point else None)
        total = 0
        powers: dict[tuple[int, int], object] = {}
        for m, c in self._terms.items():
            term = c
            for i, e in enumerate(m):
                if not e:
                    continue
                if vals[i] is None:
                    raise PolynomialError(f"no value for variable {self._vars[i]!r}")
                key = (i, e)
                if key not in powers:
                    powers[key] = vals[i] ** e
                term = term * powers[key]
            total = total + term
        return total

    def __call__(self, **point):
        return self.evaluate(point)

    def subs(self, mapping: Mapping[str, object]) -> RationalPoly:
        """Substitute polynomials or scalars for some variables."""
        keep = tuple(v for v in self._vars if v not in mapping)
        images = {}
        for v, val in mapping.items():
            if v not in self._vars:
                continue
            if isinstance(val, RationalPoly):
                images[v] = val
            else:
                images[v] = RationalPoly.constant(as_fraction(val), ())
        target = keep
        for img in images.values():
            target = _merge_vars(target, img.variables)
        images = {v: p.with_variables(target) for v, p in images.items()}
        kept_idx = [(i, target.index(v)) for i, v in enumerate(self._vars) if v not in mapping]
        result = RationalPoly.zero(target)
        cache: dict[tuple[str, int], RationalPoly] = {}
        for m, c in self._terms.items():
            mono = [0] * len(target)
            for i, j in kept_idx:
                mono[j] = m[i]
            term = RationalPoly._raw(target, {tuple(mono): c})
            for i, v in enumerate(self._vars):
                e = m[i]
                if e and v in images:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = images[v] ** e
                    term = term * cache[key]
            result = result + term
        return result

    def compose(self, mapping: Mapping[str, RationalPoly | Scalar]) -> RationalPoly:
        return self.subs(mapping)

    def coefficients_in(self, var: str) -> dict[int, RationalPoly]:
        """View as a univariate polynomial in ``var`` over the remaining variables."""
        rest = tuple(v for v in self._vars if v != var)
        if var not in self._vars:
            return {0: self} if self._terms else {}
        i = self._vars.index(var)
        out: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            out.setdefault(m[i], {})[m[:i] + m[i + 1:]] = c
        return {k: RationalPoly._raw(rest, t) for k, t in out.items()}

    def univariate_coefficients(self, var: str) -> list[RationalPoly]:
        coeffs = self.coefficients_in(var)
        d = max(coeffs, default=-1)
        rest = tuple(v for v in self._vars if v != var)
        return [coeffs.get(k, RationalPoly.zero(rest)) for k in range(d + 1)]

    def leading_coefficient(self, var: str) -> RationalPoly:
        coeffs = self.coefficients_in(var)
        if not coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return coeffs[max(coeffs)]

    def homogeneous_part(self, degree: int, weights: Mapping[str, int] | None = None) -> RationalPoly:
        w = [(weights or {}).get(v, 1) for v in self._vars]
        return RationalPoly._raw(self._vars, {
            m: c for m, c in self._terms.items()
            if sum(a * b for a, b in zip(m, w)) == degree})

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical print order."""
        return sorted(self._terms.items(),
                      key=lambda mc: (sum(mc[0]), tuple(-e for e in mc[0])))

    def leading_term(self) -> tuple[Monomial, Fraction]:
        """Largest monomial in graded lex order."""
        if not self._terms:
            raise PolynomialError("zero polynomial has no leading term")
        m = max(self._terms, key=lambda mono: (sum(mono), mono))
        return m, self._terms[m]

    # printing and serialization
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"RationalPoly({format_poly(self)!r}, vars={self._vars})"

    def to_json(self) -> dict:
        return {
            "variables": list(self._vars),
            "terms": [[list(m), str(c)] for m, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> RationalPoly:
        return cls(data["variables"], {tuple(m): Fraction(c) for m, c in data["terms"]})


def _format_monomial(variables: Sequence[str], mono: Monomial) -> str:
    parts = []
    for v, e in zip(variables, mono):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(p: RationalPoly) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for i, (mono, c) in enumerate(p.sorted_terms()):
        mono_s = _format_monomial(p.variables, mono)
        mag = abs(c)
        if not mono_s:
            body = str(mag)
        elif mag == 1:
            body = mono_s
        else:
            body = f"{mag}*{mono_s}"
        if i == 0:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append((" - " if c < 0 else " + ") + body)
    return "".join(chunks)


def exact_divide(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Return ``a / b``, raising :class:`PolynomialError` unless it divides exactly."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    vs = _merge_vars(a.variables, b.variables)
    rem = a.with_variables(vs)
    b = b.with_variables(vs)
    lm_b, lc_b = b.leading_term()
    quotient: dict[Monomial, Fraction] = {}
    while not rem.is_zero():
        lm_r, lc_r = rem.leading_term()
        delta = tuple(x - y for x, y in zip(lm_r, lm_b))
        if any(d < 0 for d in delta):
            raise PolynomialError(f"{b} does not divide {a}")
        c = lc_r / lc_b
        quotient[delta] = quotient.get(delta, 0) + c
        rem = rem - RationalPoly._raw(vs, {delta: c}) * b
    return RationalPoly(vs, quotient)


def poly_arith(a: RationalPoly, b: RationalPoly | Mapping[str, RationalPoly] | str,
               op: str) -> RationalPoly:
    """Strict arithmetic front end: ``op`` in {add, mul, compose, partial}.

    ``add`` and ``mul`` require identical variable lists; ``compose`` takes a
    substitution map whose keys must be variables of ``a``; ``partial``
    takes a variable name.
    """
    if op in ("add", "mul"):
        if not isinstance(b, RationalPoly) or b.variables != a.variables:
            raise VariableMismatch(f"variable lists differ: {a.variables} vs "
                                   f"{getattr(b, 'variables', None)}")
        return a + b if op == "add" else a * b
    if op == "compose":
        if not isinstance(b, Mapping):
            raise PolynomialError("compose needs a substitution map")
        extra = [v for v in b if v not in a.variables]
        if extra:
            raise VariableMismatch(f"substitution for unknown variables {extra}")
        return a.compose(b)
    if op == "partial":
        if not isinstance(b, str) or b not in a.variables:
            raise VariableMismatch(f"cannot differentiate in {b!r}")
        return a.partial(b)
    raise PolynomialError(f"unknown operation {op!r}")
