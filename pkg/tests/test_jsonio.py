import json
from fractions import Fraction

from towers import jsonio
from towers.algebra import annihilating_polynomial
from towers.asymptotics import estimate_asymptotics
from towers.enumeration import BoundKind
from towers.identities import CheckResult
from towers.model import PieceSet, Shape
from towers.polynomials import IntPoly
from towers.recurrences import Recurrence, Sequence
from towers.series import solve_half_pyramids


def test_counts_payload_shape():
    payload = jsonio.counts_to_json(BoundKind.BY_PIECE_COUNT, {1: 1, 2: 4})
    assert payload == {"bound_kind": "ByPieceCount", "counts": {"1": "1", "2": "4"}}


def test_counts_csv_and_text():
    counts = {1: 1, 2: 4}
    assert jsonio.counts_to_csv(counts) == "bound,count\n1,1\n2,4\n"
    assert jsonio.counts_to_text(counts) == "1: 1\n2: 4\n"


def test_series_payload_plain_and_weighted():
    pieces = PieceSet.of(1, 2)
    plain = jsonio.series_to_json(solve_half_pyramids(pieces, 3))
    assert plain == {"variable": "t", "order": 3, "coeffs": ["0", "1", "2", "4"]}
    weighted = jsonio.series_to_json(solve_half_pyramids(pieces, 2, weighted=True))
    assert weighted["sizes"] == [1, 2]
    assert weighted["coeffs"][2] == {"0,1": "1", "2,0": "1"}


def test_sequence_roundtrip_with_huge_terms():
    seq = Sequence(1, (1, 3**9000), "big")
    payload = jsonio.sequence_to_json(seq)
    assert jsonio.sequence_from_json(json.loads(jsonio.dumps(payload))) == seq


def test_recurrence_roundtrip():
    rec = Recurrence((IntPoly((-2, -4)), IntPoly((2, 1))))
    payload = jsonio.recurrence_to_json(rec)
    assert payload == {"order": 1, "degree": 1, "coeffs": [["-2", "-4"], ["2", "1"]]}
    assert jsonio.recurrence_from_json(payload) == rec


def test_polynomial_payload():
    q = annihilating_polynomial(PieceSet.of(2), Shape.TOWER, verify_order=60)
    payload = jsonio.polynomial_to_json(q)
    assert payload == {"y_degree": 1, "coeffs_in_t": [["0", "0", "1"], ["-1", "0", "4"]]}


def test_estimate_payload_uses_decimal_strings():
    seq = Sequence(1, tuple(3 ** (n - 1) for n in range(1, 40)))
    payload = jsonio.estimate_to_json(estimate_asymptotics(seq, depth=2))
    assert payload["mu"] == "3"
    assert payload["theta"] == "0"
    assert payload["stability"] == {"mu": "0", "theta": "0"}
    assert payload["empirical"] is True


def test_decimal_str_rounding_and_trimming():
    assert jsonio.decimal_str(Fraction(1, 4), 6) == "0.25"
    assert jsonio.decimal_str(Fraction(-3, 2), 4) == "-1.5"
    assert jsonio.decimal_str(Fraction(2, 3), 6) == "0.666667"
    assert jsonio.decimal_str(Fraction(5), 6) == "5"
    assert jsonio.decimal_str(Fraction(1, 10**8), 6) == "0"


def test_report_payload():
    results = [CheckResult("a", True, ""), CheckResult("b", False, "area 3: 1 != 2")]
    payload = jsonio.report_to_json(results)
    assert payload["passed"] is False
    assert payload["checks"][1]["detail"] == "area 3: 1 != 2"


def test_dumps_is_deterministic():
    payload = jsonio.counts_to_json(BoundKind.BY_AREA, {2: 7, 1: 3})
    assert jsonio.dumps(payload) == jsonio.dumps(payload)
    assert list(json.loads(jsonio.dumps(payload))["counts"]) == ["1", "2"]
