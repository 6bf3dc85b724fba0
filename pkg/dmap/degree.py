"""
Crossings, degree, digit portraits, generated partitions and the
piecewise-linear witness map certifying deg(C) <= eta(C).

Every function accepts a `Cycle` or a `Precycle`; crossings always follow
the strict rule 0 < d*c_{i+1} (mod 1) < d*c_i (mod 1) < 1, so a pair of
precycle points with equal images is never a crossing.
"""
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import List, Tuple

from dmap.exceptions import DegenerateMapError, InvalidMapError, NoCrossingError
from dmap.orbits import Orbit


@dataclass(frozen=True)
class CrossingSet:
    indices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices


@dataclass(frozen=True)
class DigitPortrait:
    base: int
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def dig(self) -> int:
        return len({value for value in self.values if value > 0})


@dataclass(frozen=True)
class PartitionSpec:
    blocks: Tuple[Tuple[int, ...], ...]
    i1: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(block)) for block in self.blocks))

    @property
    def m(self) -> int:
        return len(self.blocks)

    def crossing_indices(self) -> Tuple[int, ...]:
        """i_1, ..., i_m recovered through i_{t+1} = i_t + |P_t|."""
        indices = [self.i1]
        for block in self.blocks[:-1]:
            indices.append(indices[-1] + len(block))
        return tuple(indices)


@dataclass(frozen=True)
class LinearPiece:
    start: Fraction
    end: Fraction
    start_value: Fraction
    end_value: Fraction

    def at(self, x: Fraction) -> Fraction:
        slope = (self.end_value - self.start_value) / (self.end - self.start)
        return self.start_value + slope * (x - self.start)


@dataclass(frozen=True)
class WitnessMap:
    """
    Piecewise-linear circle map given by linear pieces of its lift.

    Positions and values are lift coordinates: pieces are contiguous, the
    last one ends one full turn after the first one starts.
    """
    pieces: Tuple[LinearPiece, ...]

    @property
    def breakpoints(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        return tuple((piece.start % 1, piece.start_value % 1) for piece in self.pieces)

    def evaluate(self, x: Fraction) -> Fraction:
        origin = self.pieces[0].start
        lifted = origin + (Fraction(x) - origin) % 1
        starts = [piece.start for piece in self.pieces]
        piece = self.pieces[bisect_right(starts, lifted) - 1]
        return piece.at(lifted) % 1


def crossings(C: Orbit) -> CrossingSet:
    images = C.images
    n = C.n
    indices = tuple(
        i for i in range(1, n + 1)
        if 0 < images[i % n] < images[i - 1]
    ) if n > 1 else ()
    return CrossingSet(indices)


def degree(C: Orbit) -> int:
    """The crossing number eta(C); equal to deg(C) for cycles."""
    return len(crossings(C))


def leading_digits(C: Orbit) -> Tuple[int, ...]:
    return tuple(k * C.base // C.denominator for k in C.numerators)


def digit_portrait(C: Orbit) -> DigitPortrait:
    counts = [0] * C.base
    for digit in leading_digits(C):
        counts[digit] += 1
    values, running = [], 0
    for count in counts:
        running += count
        values.append(running)
    return DigitPortrait(C.base, tuple(values))


def dig(C: Orbit) -> int:
    return digit_portrait(C).dig


def partition_of(C: Orbit) -> PartitionSpec:
    indices = crossings(C).indices
    if not indices:
        raise NoCrossingError(f"{C!r} generates no crossing, so its partition is undefined")

    n, sigma = C.n, C.sigma
    blocks: List[Tuple[int, ...]] = []
    for t in range(len(indices) - 1):
        blocks.append(tuple(sorted({sigma[r - 1] for r in range(indices[t] + 1, indices[t + 1] + 1)})))
    wrap = [sigma[r - 1] for r in range(indices[-1] + 1, n + 1)]
    wrap += [sigma[r - 1] for r in range(1, indices[0] + 1)]
    blocks.append(tuple(sorted(set(wrap))))
    return PartitionSpec(tuple(blocks), indices[0])


def crosses_only_at_digit_changes(C: Orbit) -> bool:
    digits = leading_digits(C)
    return all(i == C.n or digits[i - 1] < digits[i] for i in crossings(C).indices)


def portrait_within_crossings(C: Orbit) -> bool:
    """
    Whether every positive F(j) is a crossing index or n.

    True exactly when every change of leading digit between sorted
    neighbours is a crossing. Some cycles fail it: base 3, word 012 has
    F = (1, 2, 3) and crossings {2}.
    """
    allowed = set(crossings(C).indices) | {C.n}
    return {value for value in digit_portrait(C).values if value > 0} <= allowed


def _lift(x: Fraction, floor_at: Fraction) -> Fraction:
    """Smallest representative of x strictly above floor_at."""
    return x + floor(floor_at - x) + 1


def witness_map(C: Orbit) -> WitnessMap:
    n = C.n
    if n == 1:
        raise DegenerateMapError("a fixed point has no witness map, the d-map itself is one")

    points, images = C.points, [Fraction(k, C.denominator) for k in C.images]
    indices = crossings(C).indices
    crossing = set(indices)

    if not indices:
        nodes = [(points[r], images[r]) for r in range(n)]
        nodes.append((points[0] + 1, images[0]))
    else:
        first = indices[0]
        origin = (points[first - 1] + _lift(points[first % n], points[first - 1])) / 2
        nodes = [(origin, Fraction(0))]
        level, position = 0, origin
        for s in range(n):
            r = (first + s) % n
            position = _lift(points[r], position)
            nodes.append((position, level + images[r]))
            if r + 1 in crossing and s < n - 1:
                following = _lift(points[(r + 1) % n], position)
                level += 1
                position = (position + following) / 2
                nodes.append((position, Fraction(level)))
        nodes.append((origin + 1, Fraction(level + 1)))

    pieces = tuple(
        LinearPiece(start, end, start_value, end_value)
        for (start, start_value), (end, end_value) in zip(nodes, nodes[1:])
    )
    return WitnessMap(pieces)


def map_degree(W: WitnessMap) -> int:
    pieces = W.pieces
    if not pieces:
        raise InvalidMapError("a witness map needs at least one piece")
    for piece in pieces:
        if piece.end <= piece.start:
            raise InvalidMapError(f"piece starting at {piece.start} has non-positive length")
    for current, following in zip(pieces, pieces[1:]):
        if current.end != following.start:
            raise InvalidMapError(f"pieces leave a gap between {current.end} and {following.start}")
        if (current.end_value - following.start_value) % 1:
            raise InvalidMapError(f"map jumps at {current.end}")
    first, last = pieces[0], pieces[-1]
    if last.end != first.start + 1:
        raise InvalidMapError("pieces do not close up after one full turn")
    if (last.end_value - first.start_value) % 1:
        raise InvalidMapError(f"map jumps at {first.start}")

    winding = sum(piece.end_value - piece.start_value for piece in pieces)
    return int(winding)
