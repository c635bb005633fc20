"""Command-line front end.

Subcommands: enumerate, series, eliminate, guess, extend, asympt, render,
verify.  Everything is deterministic for fixed inputs and flags; big
integers always travel as decimal strings.

Exit codes: 0 success, 2 argument or configuration error, 3 a recurrence
guess came back empty, 4 a recurrence hit a vanishing leading coefficient,
5 an internal consistency check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import jsonio
from .algebra import annihilating_polynomial
from .asymptotics import estimate_asymptotics
from .enumeration import BoundKind, EnumerationQuery, count_towers, enumerate_towers, weight_polynomial
from .errors import ConsistencyError, DegreeCapError, MalformedInputError, UnsupportedConfigurationError
from .gallery import render_gallery
from .identities import verify_identities
from .model import PieceSet, Rule, Shape
from .recurrences import (
    InconsistentRecurrenceError,
    Sequence,
    SingularRecurrenceError,
    extend_sequence,
    guess_recurrence,
)
from .series import (
    coefficients_by_pieces,
    piece_count_sequence,
    series_pyramids,
    series_towers,
    solve_half_pyramids,
)

_RULES = {"all": Rule.ALL_INTERFACES, "noalign": Rule.NO_EXACT_ALIGNMENT}
_SHAPES = {"tower": Shape.TOWER, "pyramid": Shape.PYRAMID, "half": Shape.HALF_PYRAMID}


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse sizes {text!r}") from None
    if not sizes:
        raise argparse.ArgumentTypeError("at least one piece size is required")
    return sizes


def _piece_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sizes", type=_parse_sizes, required=True,
                        help="comma-separated piece sizes, e.g. 1,2,3")
    parser.add_argument("--rule", choices=sorted(_RULES), default="all",
                        help="interface rule (default: all)")
    parser.add_argument("--shape", choices=["tower", "pyramid", "half"], default="tower",
                        help="shape class (default: tower)")


def _piece_set(args: argparse.Namespace) -> PieceSet:
    return PieceSet(args.sizes, _RULES[args.rule])


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _shape_series(pieces: PieceSet, shape: Shape, order: int, weighted: bool):
    h = solve_half_pyramids(pieces, order, weighted)
    if shape is Shape.HALF_PYRAMID:
        return h
    p = series_pyramids(h, pieces, weighted)
    if shape is Shape.PYRAMID:
        return p
    return series_towers(p, h)


def cmd_enumerate(args: argparse.Namespace) -> int:
    pieces = _piece_set(args)
    shape = _SHAPES[args.shape]
    if args.area is not None:
        kind, bound = BoundKind.BY_AREA, args.area
    else:
        kind, bound = BoundKind.BY_PIECE_COUNT, args.pieces
    query = EnumerationQuery(pieces, shape, kind, bound, weighted=args.weighted)
    if args.list:
        lines = [jsonio.tower_to_json(t.to_lists()) for t in enumerate_towers(query)]
        _emit(args, "\n".join(lines) + ("\n" if lines else ""))
        return 0
    if args.weighted:
        table = weight_polynomial(query)
        _emit(args, jsonio.dumps(jsonio.weight_table_to_json(table, pieces.sizes)))
        return 0
    counts = count_towers(query)
    if args.format == "csv":
        _emit(args, jsonio.counts_to_csv(counts))
    elif args.format == "text":
        _emit(args, jsonio.counts_to_text(counts))
    else:
        _emit(args, jsonio.dumps(jsonio.counts_to_json(kind, counts)))
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    pieces = _piece_set(args)
    shape = _SHAPES[args.shape]
    if args.by_pieces:
        if len(pieces.sizes) == 1:
            series = _shape_series(pieces, shape, args.order, weighted=False)
            terms = coefficients_by_pieces(series, pieces)
        else:
            # multi-size sets need the z-markers to recover piece counts
            series = _shape_series(pieces, shape, args.order, weighted=True)
            terms = piece_count_sequence(series, pieces)
        seq = Sequence(1, tuple(terms)) if terms else None
        if seq is None:
            raise UnsupportedConfigurationError(
                f"order {args.order} is too small for even one piece of the largest size"
            )
        if args.format == "csv":
            _emit(args, jsonio.sequence_to_csv(seq))
        elif args.format == "text":
            _emit(args, jsonio.sequence_to_text(seq))
        else:
            _emit(args, jsonio.dumps(jsonio.sequence_to_json(seq)))
        return 0
    series = _shape_series(pieces, shape, args.order, args.weighted)
    if args.format in ("csv", "text") and not args.weighted:
        seq = Sequence(0, tuple(series.coeffs))
        text = jsonio.sequence_to_csv(seq) if args.format == "csv" else jsonio.sequence_to_text(seq)
        _emit(args, text)
        return 0
    _emit(args, jsonio.dumps(jsonio.series_to_json(series)))
    return 0


def cmd_eliminate(args: argparse.Namespace) -> int:
    pieces = _piece_set(args)
    poly = annihilating_polynomial(pieces, _SHAPES[args.shape], verify_order=args.order)
    _emit(args, jsonio.dumps(jsonio.polynomial_to_json(poly)))
    return 0


def cmd_guess(args: argparse.Namespace) -> int:
    seq = jsonio.sequence_from_json(_load_json(args.input))
    rec = guess_recurrence(seq, args.max_order, args.max_degree, args.guard)
    if rec is None:
        print("no recurrence found within the order/degree bounds", file=sys.stderr)
        return 3
    _emit(args, jsonio.dumps(jsonio.recurrence_to_json(rec)))
    return 0


def cmd_extend(args: argparse.Namespace) -> int:
    rec = jsonio.recurrence_from_json(_load_json(args.rec))
    init = jsonio.sequence_from_json(_load_json(args.init))
    seq = extend_sequence(rec, init, args.terms)
    _emit(args, jsonio.dumps(jsonio.sequence_to_json(seq)))
    return 0


def cmd_asympt(args: argparse.Namespace) -> int:
    seq = jsonio.sequence_from_json(_load_json(args.input))
    est = estimate_asymptotics(seq, depth=args.depth)
    _emit(args, jsonio.dumps(jsonio.estimate_to_json(est)))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    pieces = _piece_set(args)
    document = render_gallery(pieces, _SHAPES[args.shape], args.pieces, out_path=None)
    _emit(args, document)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = verify_identities(max_area=args.max_area, max_pieces=args.max_pieces)
    _emit(args, jsonio.dumps(jsonio.report_to_json(results)))
    return 0 if all(r.passed for r in results) else 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="towers",
        description="Exact enumeration of towers built from 1xk horizontal pieces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="brute-force counts (the oracle)")
    _piece_args(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pieces", type=int, help="bound by piece count")
    group.add_argument("--area", type=int, help="bound by total area")
    p.add_argument("--weighted", action="store_true", help="emit weight polynomials by area")
    p.add_argument("--list", action="store_true", help="emit towers, one JSON array per line")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("series", help="generating-function coefficients")
    _piece_args(p)
    p.add_argument("--order", type=int, default=200, help="series order (default: 200)")
    p.add_argument("--weighted", action="store_true", help="track z-markers per piece size")
    p.add_argument("--by-pieces", action="store_true",
                   help="emit the per-piece-count sequence instead of t-coefficients")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("eliminate", help="polynomial annihilating the series")
    _piece_args(p)
    p.add_argument("--order", type=int, default=200,
                   help="verification order for factor selection (default: 200)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("guess", help="guess a linear recurrence from a sequence")
    p.add_argument("--input", required=True, help="sequence JSON path, or - for stdin")
    p.add_argument("--max-order", type=int, default=5)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--guard", type=int, default=10, help="held-out trailing terms")
    p.add_argument("--out")
    p.set_defaults(func=cmd_guess)

    p = sub.add_parser("extend", help="unroll a recurrence to many terms")
    p.add_argument("--rec", required=True, help="recurrence JSON path")
    p.add_argument("--init", required=True, help="initial-terms sequence JSON path")
    p.add_argument("--terms", type=int, required=True, help="target length")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("asympt", help="empirical growth estimate from a sequence")
    p.add_argument("--input", required=True, help="sequence JSON path, or - for stdin")
    p.add_argument("--depth", type=int, default=4, help="extrapolation depth (default: 4)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_asympt)

    p = sub.add_parser("render", help="SVG gallery of all towers with n pieces")
    _piece_args(p)
    p.add_argument("--pieces", type=int, required=True, help="exact piece count")
    p.add_argument("--out", help="output SVG path (default: stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run the cross-module identity suite")
    p.add_argument("--max-area", type=int, default=12)
    p.add_argument("--max-pieces", type=int, default=7)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def _check_thread_env() -> None:
    raw = os.environ.get("TOWERS_THREADS")
    if raw is None:
        return
    try:
        value = int(raw)
    except ValueError:
        raise UnsupportedConfigurationError(f"TOWERS_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise UnsupportedConfigurationError("TOWERS_THREADS must be >= 0")
    # Execution is sequential either way; the variable is validated so a cap
    # can be honored later without changing the interface.


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _check_thread_env()
        return args.func(args)
    except SingularRecurrenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (InconsistentRecurrenceError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except (MalformedInputError, UnsupportedConfigurationError, DegreeCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
