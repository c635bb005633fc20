"""Truncated power series in t and the tower generating functions.

All coefficients are exact: Python integers in plain mode, ZPolynomial
values (integer polynomials in the z_i markers) in weighted mode.  The
half-pyramid series H is the fixed point of

    H = sum over sizes i of  t^i * z_i * (1 + H)^i,

or, with a single size k under the no-exact-alignment rule,

    H = t^k * ((1 + H)^k - H).

Every term of the right-hand side has t-order at least 1, so the fixed
point is determined order by order; `solve_half_pyramids` exploits that
and fills in one coefficient at a time, which is what makes high orders
(thousands of terms) affordable.  `iterate_half_pyramids` is the plain
repeated-substitution version, kept as a slow reference implementation.

Pyramids and towers are rational in H:

    P = H / (1 - sum over sizes i of (i-1) * t^i * z_i * (1+H)^i)
    P = H / (1 - (k-1) * H)              (single size, no exact alignment)
    M = P / (1 - H)

Both denominators have constant term 1, so series division stays in the
integers.
"""

from __future__ import annotations

import math
from typing import Sequence, Union

from .errors import ConsistencyError, UnsupportedConfigurationError
from .model import PieceSet, Rule
from .zpoly import ZPolynomial

__all__ = [
    "TruncatedSeries",
    "solve_half_pyramids",
    "iterate_half_pyramids",
    "half_pyramid_rhs",
    "series_pyramids",
    "series_towers",
    "coefficients_by_pieces",
    "piece_count_sequence",
    "closed_form_half_pyramids",
    "closed_form_pyramids",
    "closed_form_dimer_towers",
]

Coefficient = Union[int, ZPolynomial]


def _zero_like(sample: Coefficient) -> Coefficient:
    return ZPolynomial.zero(sample.sizes) if isinstance(sample, ZPolynomial) else 0


def _one_like(sample: Coefficient) -> Coefficient:
    return ZPolynomial.constant(sample.sizes, 1) if isinstance(sample, ZPolynomial) else 1


class TruncatedSeries:
    """A power series in t kept exactly through t^order.

    Immutable; all arithmetic truncates at the common order.  Coefficients
    are either all ints or all ZPolynomials over the same marker set.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Coefficient], order: int | None = None):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        zero = _zero_like(coeffs[0])
        if len(coeffs) < order + 1:
            coeffs = coeffs + (zero,) * (order + 1 - len(coeffs))
        elif len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order: int, sizes: tuple[int, ...] | None = None) -> "TruncatedSeries":
        z: Coefficient = ZPolynomial.zero(sizes) if sizes is not None else 0
        return cls((z,) * (order + 1), order)

    @classmethod
    def one(cls, order: int, sizes: tuple[int, ...] | None = None) -> "TruncatedSeries":
        s = cls.zero(order, sizes)
        return s + 1

    def coefficient(self, n: int) -> Coefficient:
        return self.coeffs[n]

    @property
    def is_weighted(self) -> bool:
        return isinstance(self.coeffs[0], ZPolynomial)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def _require_same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other)
            return TruncatedSeries(
                tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order
            )
        if isinstance(other, int):
            head = self.coeffs[0] + other
            return TruncatedSeries((head,) + self.coeffs[1:], self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, int)):
            return self + (-other if isinstance(other, TruncatedSeries) else -other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._require_same_order(other)
            n = self.order
            zero = _zero_like(self.coeffs[0])
            out = [zero] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = out[i + j] + a * b
            return TruncatedSeries(tuple(out), n)
        if isinstance(other, (int, ZPolynomial)):
            return TruncatedSeries(tuple(c * other for c in self.coeffs), self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("negative powers are not supported; use reciprocal")
        result = TruncatedSeries.one(
            self.order, self.coeffs[0].sizes if self.is_weighted else None
        )
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k, dropping coefficients past the order."""
        if k == 0:
            return self
        zero = _zero_like(self.coeffs[0])
        return TruncatedSeries((zero,) * k + self.coeffs[: self.order + 1 - k], self.order)

    def reciprocal(self) -> "TruncatedSeries":
        """Inverse of a series whose constant term is 1 or -1.

        With a unit constant term the usual back-substitution never leaves
        the integers, which is why no rational arithmetic is needed.
        """
        c0 = self.coeffs[0]
        if c0 == 1:
            unit = 1
        elif c0 == -1:
            unit = -1
        else:
            raise ValueError(f"reciprocal needs constant term +-1, got {c0!r}")
        n = self.order
        zero = _zero_like(c0)
        out: list[Coefficient] = [zero] * (n + 1)
        out[0] = _one_like(c0) * unit
        for m in range(1, n + 1):
            acc = zero
            for j in range(1, m + 1):
                if self.coeffs[j]:
                    acc = acc + self.coeffs[j] * out[m - j]
            out[m] = acc * (-unit)
        return TruncatedSeries(tuple(out), n)

    def evaluate_ones(self) -> "TruncatedSeries":
        """Set every z marker to 1, turning a weighted series plain."""
        if not self.is_weighted:
            return self
        return TruncatedSeries(
            tuple(c.eval_ones() for c in self.coeffs), self.order  # type: ignore[union-attr]
        )

    def __repr__(self) -> str:
        shown = ", ".join(repr(c) for c in self.coeffs[: min(8, self.order + 1)])
        tail = ", ..." if self.order + 1 > 8 else ""
        return f"TruncatedSeries(order={self.order}, [{shown}{tail}])"


def _check_rule(pieces: PieceSet, weighted: bool) -> None:
    if pieces.rule is Rule.NO_EXACT_ALIGNMENT:
        if len(pieces.sizes) > 1:
            raise UnsupportedConfigurationError(
                "series under the no-exact-alignment rule support a single piece "
                f"size only, got sizes {pieces.sizes}"
            )
        if weighted:
            raise UnsupportedConfigurationError(
                "weighted series are not defined under the no-exact-alignment rule"
            )


def solve_half_pyramids(pieces: PieceSet, order: int, weighted: bool = False) -> TruncatedSeries:
    """The half-pyramid series H through t^order, solved order by order.

    Coefficient n of H only involves coefficients below n on the right-hand
    side (every summand carries at least one factor t), so each pass of the
    loop pins down one new coefficient; the result is the unique fixed
    point, reached after at most order+1 corrections.
    """
    _check_rule(pieces, weighted)
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    sizes = pieces.sizes
    k = pieces.max_size
    if weighted:
        zero: Coefficient = ZPolynomial.zero(sizes)
        one: Coefficient = ZPolynomial.constant(sizes, 1)
        marker = {i: ZPolynomial.marker(sizes, i) for i in sizes}
    else:
        zero, one = 0, 1
        marker = {i: 1 for i in sizes}
    no_align = pieces.rule is Rule.NO_EXACT_ALIGNMENT

    # powers[i][n] = coefficient of t^n in (1 + H)^i, maintained as H grows.
    powers = [[zero] * (order + 1) for _ in range(k + 1)]
    for i in range(k + 1):
        powers[i][0] = one
    h = [zero] * (order + 1)
    for n in range(1, order + 1):
        if no_align:
            coeff = (powers[k][n - k] - h[n - k]) if n >= k else zero
        else:
            coeff = zero
            for i in sizes:
                if i <= n:
                    coeff = coeff + marker[i] * powers[i][n - i]
        h[n] = coeff
        if k >= 1:
            powers[1][n] = coeff
        for i in range(2, k + 1):
            prev = powers[i - 1]
            lin = powers[1]
            acc = prev[n]  # j = n term: prev[n] * lin[0] with lin[0] = 1
            for j in range(n):
                pj = prev[j]
                lj = lin[n - j]
                if pj and lj:
                    acc = acc + pj * lj
            powers[i][n] = acc
    return TruncatedSeries(tuple(h), order)


def half_pyramid_rhs(h: TruncatedSeries, pieces: PieceSet, weighted: bool = False) -> TruncatedSeries:
    """Right-hand side of the half-pyramid equation evaluated at h.

    Useful for residual checks: h solves the equation iff the result equals
    h coefficientwise through the shared order.
    """
    _check_rule(pieces, weighted)
    sizes = pieces.sizes
    one_plus = h + 1
    if pieces.rule is Rule.NO_EXACT_ALIGNMENT:
        k = pieces.single_size
        return (one_plus**k - h).shift(k)
    total = TruncatedSeries.zero(h.order, sizes if weighted else None)
    for i in sizes:
        term = (one_plus**i).shift(i)
        if weighted:
            term = term * ZPolynomial.marker(sizes, i)
        total = total + term
    return total


def iterate_half_pyramids(
    pieces: PieceSet, order: int, steps: int | None = None, weighted: bool = False
) -> TruncatedSeries:
    """Reference fixed-point iteration: repeated substitution from H = 0.

    Runs order+1 full substitutions by default (each corrects at least one
    more t-order).  Quadratic in the order per step, so only suitable for
    small orders; `solve_half_pyramids` is the fast equivalent.
    """
    _check_rule(pieces, weighted)
    h = TruncatedSeries.zero(order, pieces.sizes if weighted else None)
    for _ in range(order + 1 if steps is None else steps):
        h = half_pyramid_rhs(h, pieces, weighted)
    return h


def _pyramid_denominator(h: TruncatedSeries, pieces: PieceSet, weighted: bool) -> TruncatedSeries:
    if pieces.rule is Rule.NO_EXACT_ALIGNMENT:
        return 1 - (pieces.single_size - 1) * h
    total = TruncatedSeries.zero(h.order, pieces.sizes if weighted else None)
    one_plus = h + 1
    for i in pieces.sizes:
        if i == 1:
            continue
        term = (one_plus**i).shift(i) * (i - 1)
        if weighted:
            term = term * ZPolynomial.marker(pieces.sizes, i)
        total = total + term
    return 1 - total


def series_pyramids(h: TruncatedSeries, pieces: PieceSet, weighted: bool = False) -> TruncatedSeries:
    """Pyramid series P from the half-pyramid series h."""
    _check_rule(pieces, weighted)
    return h * _pyramid_denominator(h, pieces, weighted).reciprocal()


def series_towers(p: TruncatedSeries, h: TruncatedSeries) -> TruncatedSeries:
    """Tower series M = P / (1 - H)."""
    return p * (1 - h).reciprocal()


def coefficients_by_pieces(series: TruncatedSeries, pieces: PieceSet) -> list[int]:
    """Per-piece-count sequence for a single-size set: a(n) = [t^(k*n)].

    Only defined for plain series over one piece size k, where the area of
    an n-piece structure is exactly k*n.  A non-zero coefficient off the
    k-grid means the series cannot belong to this piece set and raises
    ConsistencyError.  The returned list starts at n = 1.
    """
    k = pieces.single_size
    if series.is_weighted:
        raise ValueError("coefficients_by_pieces expects a plain series")
    for n, c in enumerate(series.coeffs):
        if n % k and c:
            raise ConsistencyError(
                f"non-zero coefficient {c} at t^{n} is off the {k}-grid"
            )
    return [series.coeffs[k * n] for n in range(1, series.order // k + 1)]


def piece_count_sequence(series: TruncatedSeries, pieces: PieceSet) -> list[int]:
    """Counts by piece count extracted from a weighted series.

    Towers with n pieces have area at most n * max(sizes), so the counts
    are complete for n up to order // max(sizes); the list starts at n = 1.
    """
    if not series.is_weighted:
        raise ValueError("piece_count_sequence expects a weighted series")
    limit = series.order // pieces.max_size
    out = [0] * (limit + 1)
    for c in series.coeffs:
        for total, value in c.total_degree_counts().items():  # type: ignore[union-attr]
            if total <= limit:
                out[total] += value
    return out[1:]


def closed_form_half_pyramids(k: int, n: int) -> int:
    """Number of half-pyramids of n pieces of one size k: (kn)!/(n!(kn-n+1)!)."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    numerator = math.factorial(k * n)
    denominator = math.factorial(n) * math.factorial(k * n - n + 1)
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise ConsistencyError(f"half-pyramid closed form not integral at k={k}, n={n}")
    return value


def closed_form_pyramids(k: int, n: int) -> int:
    """Number of pyramids of n pieces of one size k: C(kn, n) / k."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    value, remainder = divmod(math.comb(k * n, n), k)
    if remainder:
        raise ConsistencyError(f"pyramid closed form not integral at k={k}, n={n}")
    return value


def closed_form_dimer_towers(rule: Rule, n: int) -> int:
    """Number of dimer towers with n pieces: 4^(n-1), or 3^(n-1) without exact alignment."""
    if n < 1:
        raise ValueError("n must be >= 1")
    base = 4 if rule is Rule.ALL_INTERFACES else 3
    return base ** (n - 1)
