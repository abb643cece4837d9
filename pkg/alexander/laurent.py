"""
Arithmetic in the Laurent polynomial ring Z[t, t^-1].

A ``LaurentPoly`` is an immutable map exponent -> nonzero coefficient.
Ring operations are done here directly; gcd and exact division are handed
to sympy's dense univariate arithmetic over ZZ after shifting both
arguments into Z[t] (t is a unit, so the shift does not change the
answer up to units).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from math import gcd as igcd
from typing import Iterable, Mapping, Sequence

from sympy import Poly, Symbol, ZZ
from sympy.polys.polyerrors import ExactQuotientFailed


_t = Symbol("t")

# Cofactor expansion up to this size, Bareiss elimination above it.
COFACTOR_LIMIT = 4


@dataclass(frozen=True)
class LaurentPoly:
    terms: tuple = ()

    def __post_init__(self):
        # accept any mapping or pair list; store sorted (exponent, coeff) pairs
        raw = dict(self.terms) if not isinstance(self.terms, Mapping) else self.terms
        clean = tuple(sorted((int(e), int(c)) for e, c in raw.items() if c))
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], shift: int = 0) -> LaurentPoly:
        """Ascending coefficient list c0, c1, ... times t**shift."""
        return cls({shift + k: c for k, c in enumerate(coeffs)})

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def ord(self) -> int:
        if not self.terms:
            raise ValueError("ord of the zero polynomial is undefined")
        return self.terms[0][0]

    @property
    def deg(self) -> int:
        if not self.terms:
            raise ValueError("deg of the zero polynomial is undefined")
        return self.terms[-1][0]

    @property
    def width(self) -> int:
        """deg - ord: the degree of the normalized associate."""
        return self.deg - self.ord

    @property
    def leading(self) -> int:
        return self.terms[-1][1] if self.terms else 0

    @property
    def trailing(self) -> int:
        return self.terms[0][1] if self.terms else 0

    def coeff(self, e: int) -> int:
        return self.as_dict().get(e, 0)

    def coefficients(self) -> list[int]:
        """Dense ascending coefficients from ord to deg."""
        if not self.terms:
            return []
        d = self.as_dict()
        return [d.get(e, 0) for e in range(self.ord, self.deg + 1)]

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t**k."""
        return LaurentPoly({e + k: c for e, c in self.terms})

    @property
    def is_unit(self) -> bool:
        return len(self.terms) == 1 and abs(self.terms[0][1]) == 1

    def inverse_unit(self) -> LaurentPoly:
        if not self.is_unit:
            raise ArithmeticError(f"{format_poly(self)} is not a unit")
        e, c = self.terms[0]
        return LaurentPoly({-e: c})

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = self.as_dict()
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = {}
        for (e1, c1), (e2, c2) in itertools.product(self.terms, other.terms):
            acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def _as_poly(x) -> LaurentPoly:
    p = _coerce(x)
    if p is NotImplemented:
        raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")
    return p


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1, 1)


def arith(p: LaurentPoly, q: LaurentPoly, kind: str) -> LaurentPoly:
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown operation {kind!r}")


def normalize_unit(p: LaurentPoly) -> LaurentPoly:
    """Canonical associate: ord 0 and positive leading coefficient."""
    if p.is_zero:
        return ZERO
    q = p.shift(-p.ord)
    return -q if q.leading < 0 else q


def associated(p: LaurentPoly, q: LaurentPoly) -> bool:
    """p and q differ by a unit +-t**i."""
    return normalize_unit(p) == normalize_unit(q)


def content(p: LaurentPoly) -> int:
    return reduce(igcd, (c for _, c in p.terms), 0)


def reverse(p: LaurentPoly) -> LaurentPoly:
    """p(t^-1)"""
    return LaurentPoly({-e: c for e, c in p.terms})


def is_palindromic(p: LaurentPoly) -> bool:
    return associated(p, reverse(p))


# sympy bridge: Laurent polynomials with ord 0 are ordinary polynomials.

def _to_poly(p: LaurentPoly) -> Poly:
    return Poly.from_list(list(reversed(p.coefficients())), _t, domain=ZZ)


def _from_poly(f: Poly, shift: int = 0) -> LaurentPoly:
    coeffs = [int(c) for c in reversed(f.all_coeffs())]
    return LaurentPoly.from_coeffs(coeffs, shift)


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.is_zero:
        return normalize_unit(q)
    if q.is_zero:
        return normalize_unit(p)
    g = _to_poly(p.shift(-p.ord)).gcd(_to_poly(q.shift(-q.ord)))
    return normalize_unit(_from_poly(g))


def exquo(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / q in Z[t, t^-1]."""
    if q.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return ZERO
    try:
        f = _to_poly(p.shift(-p.ord)).exquo(_to_poly(q.shift(-q.ord)), auto=False)
    except ExactQuotientFailed:
        raise ArithmeticError(
            f"{format_poly(q)} does not divide {format_poly(p)}"
        ) from None
    return _from_poly(f, p.ord - q.ord)


def divides(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True when q = p * r for some r in the ring."""
    if p.is_zero:
        if q.is_zero:
            return True
        raise ZeroDivisionError("divisibility by zero is only defined for zero")
    try:
        r = exquo(q, p)
    except ArithmeticError:
        return False
    return r * p == q


def format_poly(p: LaurentPoly) -> str:
    """Descending powers, explicit signs, ``t^k``, coefficient 1 omitted."""
    if p.is_zero:
        return "0"
    parts = []
    for e, c in reversed(p.terms):
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            power = "t" if e == 1 else f"t^{e}"
            body = power if a == 1 else f"{a}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


@dataclass(frozen=True)
class LaurentMatrix:
    """Row-major matrix over Z[t, t^-1]."""

    rows: int
    cols: int
    entries: tuple = ()

    def __post_init__(self):
        entries = tuple(_as_poly(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> LaurentMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_int(cls, A) -> LaurentMatrix:
        return cls(A.rows, A.cols, tuple(LaurentPoly.constant(x) for x in A.entries))

    @classmethod
    def identity(cls, n: int) -> LaurentMatrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self[i, j] for i in range(self.rows))

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> LaurentMatrix:
        return LaurentMatrix.from_rows(
            (self.col(j) for j in range(self.cols)), self.rows
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def pencil(G, F) -> LaurentMatrix:
    """t*G - F for integer matrices G, F of equal shape."""
    if (G.rows, G.cols) != (F.rows, F.cols):
        raise ValueError("pencil needs matrices of equal shape")
    return LaurentMatrix(
        G.rows, G.cols,
        tuple(LaurentPoly({1: g, 0: -f}) for g, f in zip(G.entries, F.entries)),
    )


def _det_cofactor(M: list) -> LaurentPoly:
    n = len(M)
    if n == 0:
        return ONE
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = ZERO
    for j, a in enumerate(M[0]):
        if a.is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = a * _det_cofactor(minor)
        total = total - term if j % 2 else total + term
    return total


def _det_bareiss(M: list) -> LaurentPoly:
    n = len(M)
    M = [list(r) for r in M]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if M[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return ZERO
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = exquo(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
            M[i][k] = ZERO
        prev = M[k][k]
    return M[n - 1][n - 1] if sign > 0 else -M[n - 1][n - 1]


def det_laurent(M: LaurentMatrix) -> LaurentPoly:
    """Exact determinant, not unit-normalized."""
    if not M.is_square:
        raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    rows = M.to_rows()
    if M.rows <= COFACTOR_LIMIT:
        return _det_cofactor(rows)
    return _det_bareiss(rows)
