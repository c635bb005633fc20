import pytest

from towers.enumeration import (
    BoundKind,
    EnumerationQuery,
    count_towers,
    enumerate_towers,
    weight_polynomial,
)
from towers.model import PieceSet, Rule, Shape, is_legal_tower
from towers.series import series_pyramids, series_towers, solve_half_pyramids
from towers.zpoly import ZPolynomial

DIMER = PieceSet.of(2)
DIMER_NOALIGN = PieceSet.of(2, rule=Rule.NO_EXACT_ALIGNMENT)


def by_pieces(pieces, shape, bound):
    return count_towers(EnumerationQuery(pieces, shape, BoundKind.BY_PIECE_COUNT, bound))


def test_dimer_two_piece_towers():
    towers = list(enumerate_towers(EnumerationQuery(DIMER, Shape.TOWER, BoundKind.BY_PIECE_COUNT, 2)))
    assert len(towers) == 5  # one single-piece tower plus four two-piece towers
    assert sum(t.piece_count == 1 for t in towers) == 1
    assert sum(t.piece_count == 2 for t in towers) == 4


def test_dimer_counts_follow_powers_of_four():
    counts = by_pieces(DIMER, Shape.TOWER, 5)
    assert [counts[n] for n in range(1, 6)] == [1, 4, 16, 64, 256]


def test_noalign_dimer_towers_match_powers_of_three():
    counts = by_pieces(DIMER_NOALIGN, Shape.TOWER, 4)
    assert counts[4] == 27
    assert [counts[n] for n in range(1, 5)] == [1, 3, 9, 27]


def test_dimer_half_pyramids_are_fuss_catalan():
    counts = by_pieces(DIMER, Shape.HALF_PYRAMID, 3)
    assert [counts[n] for n in range(1, 4)] == [1, 2, 5]


def test_unit_piece_base_case():
    towers = list(enumerate_towers(EnumerationQuery(PieceSet.of(1), Shape.TOWER, BoundKind.BY_PIECE_COUNT, 1)))
    assert [t.to_lists() for t in towers] == [[[[0, 1]]]]


def test_empty_stream_when_bound_below_min_size():
    query = EnumerationQuery(PieceSet.of(3), Shape.TOWER, BoundKind.BY_AREA, 2)
    assert list(enumerate_towers(query)) == []
    assert count_towers(query) == {1: 0, 2: 0}


def test_counts_by_area_match_series():
    pieces = PieceSet.of(1, 2, 3)
    h = solve_half_pyramids(pieces, 6)
    m = series_towers(series_pyramids(h, pieces), h)
    counts = count_towers(EnumerationQuery(pieces, Shape.TOWER, BoundKind.BY_AREA, 6))
    assert [counts[n] for n in range(1, 7)] == list(m.coeffs[1:])


def test_no_duplicates_and_lexicographic_order():
    for pieces, shape in [(PieceSet.of(1, 2), Shape.TOWER), (DIMER_NOALIGN, Shape.PYRAMID)]:
        query = EnumerationQuery(pieces, shape, BoundKind.BY_AREA, 8)
        keys = [t.sort_key() for t in enumerate_towers(query)]
        assert len(keys) == len(set(keys))
        assert keys == sorted(keys)


def test_stream_is_deterministic():
    query = EnumerationQuery(PieceSet.of(1, 2), Shape.TOWER, BoundKind.BY_AREA, 6)
    first = [t.to_lists() for t in enumerate_towers(query)]
    second = [t.to_lists() for t in enumerate_towers(query)]
    assert first == second


def test_removing_top_floor_keeps_towers_legal():
    for pieces, shape in [
        (PieceSet.of(1, 2), Shape.TOWER),
        (DIMER_NOALIGN, Shape.TOWER),
        (PieceSet.of(2, 3), Shape.HALF_PYRAMID),
    ]:
        query = EnumerationQuery(pieces, shape, BoundKind.BY_AREA, 8)
        for tower in enumerate_towers(query):
            if len(tower.floors) > 1:
                trimmed = [list(map(list, floor)) for floor in tower.floors[:-1]]
                assert is_legal_tower(trimmed, pieces, shape)


def test_weight_polynomial_requires_weighted_by_area():
    with pytest.raises(ValueError):
        weight_polynomial(EnumerationQuery(DIMER, Shape.TOWER, BoundKind.BY_AREA, 4))
    with pytest.raises(ValueError):
        weight_polynomial(
            EnumerationQuery(DIMER, Shape.TOWER, BoundKind.BY_PIECE_COUNT, 4, weighted=True)
        )


def test_weight_polynomial_small_cases():
    table = weight_polynomial(
        EnumerationQuery(DIMER, Shape.TOWER, BoundKind.BY_AREA, 2, weighted=True)
    )
    assert table[2] == ZPolynomial((2,), {(1,): 1})

    pieces = PieceSet.of(1, 2)
    table = weight_polynomial(
        EnumerationQuery(pieces, Shape.TOWER, BoundKind.BY_AREA, 2, weighted=True)
    )
    # area 2: one dimer, two unit pieces side by side, two unit pieces stacked
    assert table[2] == ZPolynomial(pieces.sizes, {(0, 1): 1, (2, 0): 2})
    assert table[2].eval_ones() == 3


def test_weight_polynomial_tracks_mixed_compositions_at_area_twelve():
    pieces = PieceSet.of(1, 2, 3)
    table = weight_polynomial(
        EnumerationQuery(pieces, Shape.TOWER, BoundKind.BY_AREA, 12, weighted=True)
    )
    assert table[12].coefficient((2, 2, 2)) > 0


def test_weights_at_one_recover_counts():
    pieces = PieceSet.of(2, 3)
    bound = 9
    table = weight_polynomial(
        EnumerationQuery(pieces, Shape.TOWER, BoundKind.BY_AREA, bound, weighted=True)
    )
    counts = count_towers(EnumerationQuery(pieces, Shape.TOWER, BoundKind.BY_AREA, bound))
    assert {a: z.eval_ones() for a, z in table.items()} == counts


def test_bound_must_be_positive():
    with pytest.raises(ValueError):
        EnumerationQuery(DIMER, Shape.TOWER, BoundKind.BY_AREA, 0)
