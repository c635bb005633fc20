import math
from fractions import Fraction

import pytest

from towers.asymptotics import ZeroTermError, estimate_asymptotics
from towers.model import PieceSet, Rule
from towers.polynomials import IntPoly
from towers.recurrences import (
    InsufficientTermsError,
    Recurrence,
    Sequence,
    extend_sequence,
    guess_recurrence,
)
from towers.series import coefficients_by_pieces, solve_half_pyramids


def catalan_sequence(length):
    return Sequence(0, tuple(math.comb(2 * n, n) // (n + 1) for n in range(length)), "catalan")


def motzkin_sequence(length):
    """Motzkin numbers via the guessed recurrence, seeded from the series."""
    pieces = PieceSet.of(2, rule=Rule.NO_EXACT_ALIGNMENT)
    h = solve_half_pyramids(pieces, 160)
    seed = Sequence(1, tuple(coefficients_by_pieces(h, pieces)), "motzkin")
    rec = guess_recurrence(seed, 3, 3)
    assert rec is not None
    return extend_sequence(rec, seed, length)


class TestEstimates:
    def test_catalan_growth(self):
        est = estimate_asymptotics(catalan_sequence(2000), depth=4)
        assert abs(est.mu - 4) < Fraction(1, 10**6)
        assert abs(est.theta + Fraction(3, 2)) < Fraction(1, 100)
        # amplitude should resemble 1/sqrt(pi)
        assert est.c_amplitude == pytest.approx(1 / math.sqrt(math.pi), rel=0.01)

    def test_motzkin_growth(self):
        est = estimate_asymptotics(motzkin_sequence(2000), depth=4)
        assert abs(est.mu - 3) < Fraction(1, 10**6)
        assert abs(est.theta + Fraction(3, 2)) < Fraction(1, 100)

    def test_geometric_is_exact_at_any_depth(self):
        seq = Sequence(1, tuple(3 ** (n - 1) for n in range(1, 60)))
        for depth in (0, 2, 5):
            est = estimate_asymptotics(seq, depth=depth)
            assert est.mu == 3
            assert est.theta == 0
            assert est.stability["mu"] == 0
            assert est.stability["theta"] == 0


class TestInvariants:
    def test_scale_invariance_is_exact(self):
        base = catalan_sequence(400)
        scaled = Sequence(base.offset, tuple(7 * t for t in base.terms))
        a = estimate_asymptotics(base, depth=3)
        b = estimate_asymptotics(scaled, depth=3)
        assert a.mu == b.mu
        assert a.theta == b.theta
        assert a.stability == b.stability
        assert a.c_amplitude != b.c_amplitude

    def test_shift_robustness(self):
        base = catalan_sequence(1000)
        dropped = Sequence(10, base.terms[10:])
        a = estimate_asymptotics(base, depth=4)
        b = estimate_asymptotics(dropped, depth=4)
        assert abs(a.mu - b.mu) <= max(a.stability["mu"], Fraction(1, 10**12))

    def test_stability_shrinks_with_depth(self):
        cat = catalan_sequence(2000)
        mot = motzkin_sequence(2000)
        for seq in (cat, mot):
            stabilities = [estimate_asymptotics(seq, depth=m).stability["mu"] for m in range(7)]
            assert all(b <= a for a, b in zip(stabilities, stabilities[1:]))


class TestErrors:
    def test_zero_term_in_window_names_index(self):
        terms = [1] * 40
        terms[-2] = 0
        seq = Sequence(0, tuple(terms))
        with pytest.raises(ZeroTermError, match="n=38"):
            estimate_asymptotics(seq, depth=4)

    def test_early_zeroes_are_fine(self):
        terms = (0, 0) + tuple(2**n for n in range(38))
        est = estimate_asymptotics(Sequence(0, terms), depth=3)
        assert est.mu == 2

    def test_insufficient_length(self):
        with pytest.raises(InsufficientTermsError):
            estimate_asymptotics(Sequence(0, (1, 2, 3)), depth=4)

    def test_negative_depth_rejected(self):
        with pytest.raises(ValueError):
            estimate_asymptotics(catalan_sequence(50), depth=-1)


def test_extension_feeds_estimation():
    """Recurrence-extended terms give the same estimate as closed-form terms."""
    rec = Recurrence((IntPoly((-2, -4)), IntPoly((2, 1))))
    extended = extend_sequence(rec, Sequence(0, (1,)), 1500)
    direct = catalan_sequence(1500)
    assert extended.terms == direct.terms
    est = estimate_asymptotics(extended, depth=5)
    assert abs(est.mu - 4) < Fraction(1, 10**8)
