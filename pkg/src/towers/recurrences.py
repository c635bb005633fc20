"""Guessing, verifying and unrolling linear recurrences with polynomial coefficients.

A recurrence of order r and degree d is sum_{j=0..r} p_j(n) a(n+j) = 0 with
integer polynomials p_j of degree at most d.  Guessing builds the exact
linear system over consecutive windows of the sequence and extracts an
integer kernel vector by fraction-free Gaussian elimination; floating point
is never involved, so a returned recurrence is exact on the data it saw.
A guess is accepted only if it also annihilates a held-out block of
trailing terms that the solver never touched.

Unrolling a recurrence forward divides by p_r(n) at every step; the
division must come out exact, otherwise the recurrence does not govern the
sequence and an error is raised rather than silently truncating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import IntPoly
from .series import TruncatedSeries

__all__ = [
    "Sequence",
    "Recurrence",
    "InsufficientTermsError",
    "SingularRecurrenceError",
    "InconsistentRecurrenceError",
    "guess_recurrence",
    "verify_recurrence",
    "extend_sequence",
    "sequence_from_series",
]


class InsufficientTermsError(ValueError):
    """Too few terms for the requested operation (distinct from a failed guess)."""


class SingularRecurrenceError(RuntimeError):
    """The leading coefficient p_r(n) vanishes at an index needed for unrolling."""


class InconsistentRecurrenceError(RuntimeError):
    """A division during unrolling was not exact: the recurrence does not govern the data."""


@dataclass(frozen=True)
class Sequence:
    """Integer terms a(offset), a(offset+1), ... with a free-text label."""

    offset: int
    terms: tuple[int, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("a sequence needs at least one term")
        object.__setattr__(self, "terms", tuple(self.terms))

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class Recurrence:
    """sum_{j=0..r} p_j(n) a(n+j) = 0, normalized.

    Normal form: the polynomials have collective integer content 1, p_r is
    not identically zero, and the leading coefficient of p_r is positive.
    """

    coeff_polys: tuple[IntPoly, ...]

    def __post_init__(self) -> None:
        polys = tuple(self.coeff_polys)
        if len(polys) < 2:
            raise ValueError("a recurrence needs order at least 1")
        if polys[-1].is_zero:
            raise ValueError("the leading coefficient polynomial must be non-zero")
        content = math.gcd(*(p.content() for p in polys))
        if content > 1:
            polys = tuple(p.divide_int(content) for p in polys)
        if polys[-1].leading < 0:
            polys = tuple(-p for p in polys)
        object.__setattr__(self, "coeff_polys", polys)

    @property
    def order(self) -> int:
        return len(self.coeff_polys) - 1

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.coeff_polys)


def _integer_kernel(matrix: list[list[int]]) -> list[list[int]]:
    """Basis of the kernel of an integer matrix, as coprime integer vectors.

    Forward elimination is fraction-free (Bareiss), so all intermediate
    entries stay integral; back-substitution runs over Fractions and the
    result is scaled to integers.  Basis vectors come out in order of their
    free column.
    """
    rows = [row[:] for row in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[tuple[int, int]] = []
    prev = 1
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if rows[i][col]), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][col]
        for i in range(r + 1, nrows):
            head = rows[i][col]
            for j in range(col + 1, ncols):
                rows[i][j] = (rows[i][j] * pivot - head * rows[r][j]) // prev
            rows[i][col] = 0
        prev = pivot
        pivots.append((r, col))
        r += 1
    pivot_cols = {c for _, c in pivots}
    basis: list[list[int]] = []
    for free in (c for c in range(ncols) if c not in pivot_cols):
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for pr, pc in reversed(pivots):
            rhs = sum((rows[pr][j] * x[j] for j in range(pc + 1, ncols)), Fraction(0))
            x[pc] = -rhs / rows[pr][pc]
        scale = math.lcm(*(f.denominator for f in x))
        vec = [int(f * scale) for f in x]
        content = math.gcd(*(abs(v) for v in vec))
        basis.append([v // content for v in vec])
    return basis


def guess_recurrence(
    s: Sequence, max_order: int, max_degree: int, guard: int = 10
) -> Recurrence | None:
    """Search for a recurrence governing s, smallest order+degree first.

    Candidate shapes (r, d) are tried in increasing r+d, then increasing r.
    For each shape the linear system uses every window except the last
    `guard`, which are held out; a kernel vector is accepted only if the
    recurrence it defines annihilates the entire sequence, held-out terms
    included.  Returns None when no shape within the bounds works.
    """
    if max_order < 1 or max_degree < 0 or guard < 0:
        raise ValueError("need max_order >= 1, max_degree >= 0, guard >= 0")
    needed = (max_order + 1) * (max_degree + 1) + max_order + guard
    if len(s) < needed:
        raise InsufficientTermsError(
            f"guessing up to order {max_order}, degree {max_degree} with guard "
            f"{guard} needs {needed} terms, got {len(s)}"
        )
    for total in range(1, max_order + max_degree + 1):
        for r in range(max(1, total - max_degree), min(max_order, total) + 1):
            rec = _candidate(s, r, total - r, guard)
            if rec is not None:
                return rec
    return None


def _candidate(s: Sequence, r: int, d: int, guard: int) -> Recurrence | None:
    windows = len(s) - r
    system_rows = windows - guard
    unknowns = (r + 1) * (d + 1)
    if system_rows < unknowns:
        return None
    matrix = []
    for w in range(system_rows):
        n = s.offset + w
        row = []
        for j in range(r + 1):
            term = s.terms[w + j]
            power = 1
            for _ in range(d + 1):
                row.append(term * power)
                power *= n
        matrix.append(row)
    for vec in _integer_kernel(matrix):
        polys = tuple(IntPoly(vec[j * (d + 1) : (j + 1) * (d + 1)]) for j in range(r + 1))
        if polys[-1].is_zero:
            continue
        rec = Recurrence(polys)
        if verify_recurrence(rec, s):
            return rec
    return None


def verify_recurrence(rec: Recurrence, s: Sequence) -> bool:
    """Check the recurrence on every full window of the sequence.

    Vacuously true when the sequence is shorter than order + 1.
    """
    r = rec.order
    for w in range(len(s) - r):
        n = s.offset + w
        total = 0
        for j, poly in enumerate(rec.coeff_polys):
            c = poly(n)
            if c:
                total += c * s.terms[w + j]
        if total:
            return False
    return True


def extend_sequence(rec: Recurrence, initial: Sequence, target_length: int) -> Sequence:
    """Unroll the recurrence until the sequence has target_length terms.

    Each new term is determined by exact division by p_r(n); a vanishing
    p_r(n) raises SingularRecurrenceError naming n, and a non-exact
    division raises InconsistentRecurrenceError (the recurrence does not
    govern these initial terms).
    """
    r = rec.order
    if len(initial) < r:
        raise InsufficientTermsError(
            f"unrolling an order-{r} recurrence needs {r} initial terms, got {len(initial)}"
        )
    if target_length <= len(initial):
        return Sequence(initial.offset, initial.terms[:target_length], initial.label)
    terms = list(initial.terms)
    polys = rec.coeff_polys
    while len(terms) < target_length:
        n = initial.offset + len(terms) - r
        lead = polys[r](n)
        if lead == 0:
            raise SingularRecurrenceError(f"leading coefficient vanishes at n={n}")
        base = len(terms) - r
        acc = 0
        for j in range(r):
            c = polys[j](n)
            if c:
                acc += c * terms[base + j]
        quotient, remainder = divmod(-acc, lead)
        if remainder:
            raise InconsistentRecurrenceError(
                f"division by p_r({n}) = {lead} is not exact; "
                "the recurrence does not govern these terms"
            )
        terms.append(quotient)
    return Sequence(initial.offset, tuple(terms), initial.label)


def sequence_from_series(series: TruncatedSeries, label: str = "") -> Sequence:
    """Coefficient sequence of a plain series, indexed from n = 1.

    The constant coefficient (always 0 for the tower series) is dropped, so
    term n is the coefficient of t^n.
    """
    if series.is_weighted:
        raise ValueError("sequence_from_series expects a plain series")
    return Sequence(1, tuple(series.coeffs[1:]), label)
