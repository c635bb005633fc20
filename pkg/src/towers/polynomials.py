"""Exact polynomial arithmetic used by the elimination and guessing code.

Three layers, all over the integers:

* IntPoly: dense univariate polynomials (used both for polynomials in t
  and for recurrence coefficients in n).
* PolyTY: sparse polynomials in the two variables t and y.
* polynomials in an outer variable with PolyTY coefficients, on which the
  fraction-free subresultant polynomial remainder sequence computes
  resultants without ever leaving the integers (Brown's algorithm).

A Sylvester-determinant resultant over Fractions is included as an
independent cross-check route for evaluation-based testing.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ConsistencyError

__all__ = ["IntPoly", "PolyTY", "h_prem", "h_resultant", "sylvester_resultant"]


class IntPoly:
    """Dense univariate integer polynomial, coefficients in ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, power: int) -> "IntPoly":
        return cls((0,) * power + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == (IntPoly.constant(other)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        result = IntPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def content(self) -> int:
        return math.gcd(*(abs(c) for c in self.coeffs)) if self.coeffs else 0

    def divide_int(self, d: int) -> "IntPoly":
        """Exact division of every coefficient by the integer d."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ConsistencyError(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return IntPoly(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


class PolyTY:
    """Sparse integer polynomial in t and y; keys are (t_power, y_power)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for key, coeff in items:
            if coeff:
                key = (key[0], key[1])
                clean[key] = clean.get(key, 0) + coeff
                if not clean[key]:
                    del clean[key]
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PolyTY is immutable")

    @classmethod
    def constant(cls, c: int) -> "PolyTY":
        return cls({(0, 0): c})

    @classmethod
    def from_t_poly(cls, p: IntPoly) -> "PolyTY":
        return cls({(i, 0): c for i, c in enumerate(p.coeffs)})

    def items(self):
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyTY):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == PolyTY.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "PolyTY":
        return PolyTY({k: -c for k, c in self._terms.items()})

    def __add__(self, other: "PolyTY") -> "PolyTY":
        out = dict(self._terms)
        for k, c in other._terms.items():
            new = out.get(k, 0) + c
            if new:
                out[k] = new
            else:
                del out[k]
        result = PolyTY.__new__(PolyTY)
        object.__setattr__(result, "_terms", out)
        return result

    def __sub__(self, other: "PolyTY") -> "PolyTY":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyTY({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, PolyTY):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                new = out.get(key, 0) + c1 * c2
                if new:
                    out[key] = new
                else:
                    del out[key]
        result = PolyTY.__new__(PolyTY)
        object.__setattr__(result, "_terms", out)
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyTY":
        result = PolyTY.constant(1)
        for _ in range(n):
            result = result * self
        return result

    @property
    def degree_t(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def content(self) -> int:
        return math.gcd(*(abs(c) for c in self._terms.values())) if self._terms else 0

    def _leading_key(self) -> tuple[int, int]:
        # Lexicographic with y major; any fixed monomial order works for
        # the exact divisions performed here.
        return max(self._terms, key=lambda k: (k[1], k[0]))

    def exact_div(self, divisor: "PolyTY") -> "PolyTY":
        """Quotient self / divisor, valid only when the division is exact."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        remainder = dict(self._terms)
        quotient: dict[tuple[int, int], int] = {}
        dk = divisor._leading_key()
        dc = divisor._terms[dk]
        while remainder:
            lk = max(remainder, key=lambda k: (k[1], k[0]))
            qt = (lk[0] - dk[0], lk[1] - dk[1])
            qc, rc = divmod(remainder[lk], dc)
            if qt[0] < 0 or qt[1] < 0 or rc:
                raise ConsistencyError("inexact polynomial division in the remainder sequence")
            quotient[qt] = qc
            for (i, j), c in divisor._terms.items():
                key = (i + qt[0], j + qt[1])
                new = remainder.get(key, 0) - qc * c
                if new:
                    remainder[key] = new
                else:
                    remainder.pop(key, None)
        result = PolyTY.__new__(PolyTY)
        object.__setattr__(result, "_terms", quotient)
        return result

    def evaluate(self, t_value: Fraction, y_value: Fraction) -> Fraction:
        return sum(
            (c * t_value**i * y_value**j for (i, j), c in self._terms.items()),
            Fraction(0),
        )

    def to_y_coefficients(self) -> list[IntPoly]:
        """Coefficients of powers of y, each an IntPoly in t."""
        by_y: dict[int, dict[int, int]] = {}
        for (i, j), c in self._terms.items():
            by_y.setdefault(j, {})[i] = c
        top = max(by_y, default=-1)
        out = []
        for j in range(top + 1):
            row = by_y.get(j, {})
            width = max(row, default=-1) + 1
            out.append(IntPoly(row.get(i, 0) for i in range(width)))
        return out

    def __repr__(self) -> str:
        if not self._terms:
            return "PolyTY(0)"
        parts = []
        for (i, j), c in self.items():
            part = str(c)
            if i:
                part += f"*t^{i}" if i > 1 else "*t"
            if j:
                part += f"*y^{j}" if j > 1 else "*y"
            parts.append(part)
        return "PolyTY(" + " + ".join(parts) + ")"


# Polynomials in the eliminated variable are plain lists of PolyTY
# coefficients, ascending, with no trailing zeros.

HPoly = list[PolyTY]


def _h_trim(f: HPoly) -> HPoly:
    while f and not f[-1]:
        f.pop()
    return f


def h_prem(f: HPoly, g: HPoly) -> HPoly:
    """Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g in the outer variable."""
    df, dg = len(f) - 1, len(g) - 1
    if dg < 0:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    if df < dg:
        return list(f)
    r = list(f)
    n = df - dg + 1
    lc_g = g[-1]
    while True:
        dr = len(r) - 1
        if dr < dg:
            break
        lc_r = r[-1]
        n -= 1
        # r = lc_g * r - lc_r * g * x^(dr - dg); both sides have length dr + 1
        shifted = [PolyTY()] * (dr - dg) + [c * lc_r for c in g]
        r = _h_trim([a * lc_g - b for a, b in zip(r, shifted)])
        if not r:
            break
    if n > 0 and r:
        factor = lc_g**n
        r = [c * factor for c in r]
    return r


def h_resultant(f: HPoly, g: HPoly) -> PolyTY:
    """Resultant of f and g with respect to the outer variable.

    Brown's subresultant polynomial remainder sequence: fraction-free, every
    division exact over the integers.  If deg f < deg g the arguments are
    swapped, which can only flip the overall sign; callers that care
    normalize signs afterwards.
    """
    f, g = _h_trim(list(f)), _h_trim(list(g))
    if not f or not g:
        return PolyTY()
    n, m = len(f) - 1, len(g) - 1
    if n < m:
        f, g = g, f
        n, m = m, n
    if n == 0:
        return PolyTY.constant(1)  # two non-zero constants
    d = n - m
    b = PolyTY.constant((-1) ** (d + 1))
    h = [c * b for c in h_prem(f, g)]
    lc = g[-1]
    c = lc**d
    subres = [PolyTY.constant(1), c]
    c = -c
    while h:
        k = len(h) - 1
        f, g, m, d = g, h, k, m - k
        b = (-lc) * c**d
        h = [ch.exact_div(b) for ch in h_prem(f, g)]
        lc = g[-1]
        if d > 1:
            c = ((-lc) ** d).exact_div(c ** (d - 1))
        else:
            c = -lc
        subres.append(-c)
    if len(g) - 1 > 0:
        return PolyTY()  # non-trivial common factor
    return subres[-1]


def sylvester_resultant(f: Sequence[Fraction], g: Sequence[Fraction]) -> Fraction:
    """Resultant of univariate polynomials as a Sylvester determinant.

    Coefficients ascending; exact rational Gaussian elimination.  Serves as
    the second, independent route for testing the remainder-sequence code.
    """
    fc = list(f)
    while fc and not fc[-1]:
        fc.pop()
    gc = list(g)
    while gc and not gc[-1]:
        gc.pop()
    if not fc or not gc:
        return Fraction(0)
    n, m = len(fc) - 1, len(gc) - 1
    size = n + m
    if size == 0:
        return Fraction(1)
    rows = []
    rev_f = fc[::-1]
    rev_g = gc[::-1]
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in rev_f]
                    + [Fraction(0)] * (size - i - n - 1))
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in rev_g]
                    + [Fraction(0)] * (size - i - m - 1))
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            factor = rows[r][col] * inv
            if factor:
                for k in range(col, size):
                    rows[r][k] -= factor * rows[col][k]
    return det
