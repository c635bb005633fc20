import pytest

from towers.identities import ACCEPTANCE_SETS, verify_identities
from towers.series import TruncatedSeries


def test_acceptance_sets_are_the_documented_five():
    assert ACCEPTANCE_SETS == ((2,), (3,), (1, 2), (2, 3), (1, 2, 3))


@pytest.mark.slow
def test_default_run_passes():
    results = verify_identities()
    failures = [r for r in results if not r.passed]
    assert not failures, failures


def test_small_scale_run_passes():
    results = verify_identities(max_area=6, max_pieces=4)
    failures = [r for r in results if not r.passed]
    assert not failures, failures


def test_degenerate_bound_still_passes():
    results = verify_identities(max_area=3, max_pieces=2)
    assert all(r.passed for r in results)


def test_corrupted_series_is_caught_with_counterexample():
    def corrupt(label, series):
        if label == "S={1,2} all tower" and series.order >= 7:
            coeffs = list(series.coeffs)
            coeffs[7] += 1
            return TruncatedSeries(coeffs, series.order)
        return series

    results = verify_identities(max_area=8, max_pieces=3, _tamper=corrupt)
    failures = [r for r in results if not r.passed]
    assert failures
    assert any("area 7" in f.detail or "t^7" in f.detail for f in failures)
    names = " ".join(f.name for f in failures)
    assert "S={1,2}" in names
