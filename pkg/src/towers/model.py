"""Core model: piece sets, towers, legality, canonical form, weights.

A tower is described floor by floor.  Each floor is a list of horizontal
pieces, a piece of size i occupying the integer interval [x, x+i].  The
bottom floor must be gap-free, and every piece on a higher floor must rest
on the floor directly below it with a contact segment of positive integer
length.  Pieces on the same floor may touch at endpoints but never overlap.

Two interface rules are supported for vertical contacts: either every
positive-length contact is allowed, or a piece may not sit exactly aligned
on top of an identical interval on the floor directly below.

Towers are counted up to horizontal translation; the canonical
representative places the left end of the leftmost bottom piece at 0.
Legality itself is translation invariant (a legal tower stays legal when
shifted), so `is_legal_tower` does not require canonical placement.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import MalformedInputError

__all__ = [
    "Rule",
    "Shape",
    "PieceSet",
    "Piece",
    "Tower",
    "WeightMonomial",
    "is_legal_tower",
    "canonicalize_tower",
    "weight_of_tower",
]


class Rule(enum.Enum):
    """Which vertical contacts between stacked pieces are allowed."""

    ALL_INTERFACES = "all"
    NO_EXACT_ALIGNMENT = "noalign"


class Shape(enum.Enum):
    """Shape classes: general towers, pyramids, half-pyramids."""

    TOWER = "tower"
    PYRAMID = "pyramid"
    HALF_PYRAMID = "half"


@dataclass(frozen=True)
class PieceSet:
    """The allowed piece sizes together with the interface rule.

    `sizes` is stored strictly increasing and duplicate-free; every size is
    a positive integer.
    """

    sizes: tuple[int, ...]
    rule: Rule = Rule.ALL_INTERFACES

    def __post_init__(self) -> None:
        sizes = tuple(sorted(self.sizes))
        if not sizes:
            raise ValueError("piece set must be non-empty")
        if any(not isinstance(s, int) or isinstance(s, bool) or s < 1 for s in sizes):
            raise ValueError(f"piece sizes must be positive integers, got {sizes}")
        if len(set(sizes)) != len(sizes):
            raise ValueError(f"duplicate piece sizes in {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def of(cls, *sizes: int, rule: Rule = Rule.ALL_INTERFACES) -> "PieceSet":
        return cls(tuple(sizes), rule)

    @property
    def max_size(self) -> int:
        return self.sizes[-1]

    @property
    def single_size(self) -> int:
        """The unique size, for |sizes| = 1 piece sets."""
        if len(self.sizes) != 1:
            raise ValueError(f"piece set {self.sizes} has more than one size")
        return self.sizes[0]

    def __contains__(self, size: int) -> bool:
        return size in self.sizes


@dataclass(frozen=True, order=True)
class Piece:
    """A 1 x size piece whose left end sits at an integer coordinate."""

    left: int
    size: int

    @property
    def right(self) -> int:
        return self.left + self.size

    @property
    def interval(self) -> tuple[int, int]:
        return (self.left, self.left + self.size)


# A floor is a tuple of (left, right) pairs sorted by left; raw integer
# pairs rather than Piece objects keep bulk enumeration cheap.
Floor = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Tower:
    """An immutable tower, bottom floor first.

    `floors[i]` is a tuple of (left, right) integer pairs sorted by left.
    Construction does not check legality; use `is_legal_tower` for raw
    input, or trust the enumerator, which only emits legal towers.
    """

    floors: tuple[Floor, ...]

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[Sequence[int]]]) -> "Tower":
        """Build a tower from nested [left, right] lists, sorting each floor.

        Raises MalformedInputError for non-integer endpoints, empty floors,
        or intervals with right <= left.
        """
        floors = _raw_floors(lists)
        if not floors or any(not floor for floor in floors):
            raise MalformedInputError("a tower needs at least one non-empty floor")
        return cls(floors)

    def to_lists(self) -> list[list[list[int]]]:
        return [[[left, right] for left, right in floor] for floor in self.floors]

    def pieces(self) -> Iterator[Piece]:
        for floor in self.floors:
            for left, right in floor:
                yield Piece(left, right - left)

    @property
    def area(self) -> int:
        return sum(right - left for floor in self.floors for left, right in floor)

    @property
    def piece_count(self) -> int:
        return sum(len(floor) for floor in self.floors)

    def sort_key(self) -> tuple[Floor, ...]:
        """Key for the canonical lexicographic ordering of towers."""
        return self.floors


@dataclass(frozen=True)
class WeightMonomial:
    """Weight of a configuration: t^area times a product of z_i markers.

    `z_exponents` maps each used piece size to its multiplicity, stored as
    sorted (size, count) pairs; `t_exponent` always equals the total area
    sum(size * count).
    """

    t_exponent: int
    z_exponents: tuple[tuple[int, int], ...]

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "WeightMonomial":
        counts: dict[int, int] = {}
        for s in sizes:
            counts[s] = counts.get(s, 0) + 1
        pairs = tuple(sorted(counts.items()))
        return cls(sum(s * c for s, c in pairs), pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.z_exponents)


def _raw_floors(candidate: Sequence) -> tuple[Floor, ...]:
    """Normalize raw floor lists to tuples, sorting pieces within floors.

    Raises MalformedInputError if the structure is not a sequence of
    sequences of integer pairs, or any interval has right <= left.
    Emptiness is left to the caller: an empty candidate is not malformed,
    merely not a tower.
    """
    floors = []
    try:
        outer = list(candidate)
    except TypeError:
        raise MalformedInputError(f"not a floor list: {candidate!r}") from None
    for floor in outer:
        pieces = []
        try:
            raw_pieces = list(floor)
        except TypeError:
            raise MalformedInputError(f"not a floor: {floor!r}") from None
        for interval in raw_pieces:
            try:
                left, right = interval
            except (TypeError, ValueError):
                raise MalformedInputError(f"not an interval: {interval!r}") from None
            if isinstance(left, bool) or isinstance(right, bool) \
                    or not isinstance(left, int) or not isinstance(right, int):
                raise MalformedInputError(f"non-integer endpoints: {interval!r}")
            if right <= left:
                raise MalformedInputError(f"empty or reversed interval: {interval!r}")
            pieces.append((left, right))
        pieces.sort()
        floors.append(tuple(pieces))
    return tuple(floors)


def is_legal_tower(candidate: Sequence, pieces: PieceSet, shape: Shape = Shape.TOWER) -> bool:
    """Check whether raw floor lists describe a legal tower of the shape.

    The checks, in order: every size belongs to the piece set; pieces on a
    floor have pairwise disjoint interiors; the bottom floor is gap-free;
    every piece above the bottom floor has positive-length contact with the
    floor directly below; under NO_EXACT_ALIGNMENT no piece duplicates an
    interval of the floor directly below; the shape constraint holds
    (pyramid: single bottom piece; half-pyramid: additionally no piece
    starts left of the bottom piece).

    Malformed input (bad structure, right <= left, non-integers) raises
    MalformedInputError; a well-formed but illegal tower returns False.
    """
    floors = _raw_floors(candidate)
    if not floors or any(not floor for floor in floors):
        return False
    for floor in floors:
        for left, right in floor:
            if right - left not in pieces:
                return False
        for (_, r1), (l2, _) in zip(floor, floor[1:]):
            if r1 > l2:
                return False
    for (_, r1), (l2, _) in zip(floors[0], floors[0][1:]):
        if r1 != l2:
            return False
    no_align = pieces.rule is Rule.NO_EXACT_ALIGNMENT
    for below, floor in zip(floors, floors[1:]):
        for left, right in floor:
            if not any(max(left, a) < min(right, b) for a, b in below):
                return False
            if no_align and (left, right) in below:
                return False
    if shape is not Shape.TOWER:
        if len(floors[0]) != 1:
            return False
        if shape is Shape.HALF_PYRAMID:
            base_left = floors[0][0][0]
            if any(left < base_left for floor in floors for left, _ in floor):
                return False
    return True


def canonicalize_tower(tower: Tower) -> Tower:
    """Translate so the leftmost bottom piece starts at 0 (idempotent)."""
    shift = tower.floors[0][0][0]
    if shift == 0:
        return tower
    return Tower(
        tuple(
            tuple((left - shift, right - shift) for left, right in floor)
            for floor in tower.floors
        )
    )


def weight_of_tower(tower: Tower | Sequence) -> WeightMonomial:
    """Weight of a configuration, the product of per-piece weights t^i z_i.

    Accepts a Tower or raw floor lists; legality is not required, only
    well-formed pieces.
    """
    if isinstance(tower, Tower):
        floors: tuple[Floor, ...] = tower.floors
    else:
        floors = _raw_floors(tower)
    return WeightMonomial.from_sizes(
        right - left for floor in floors for left, right in floor
    )
