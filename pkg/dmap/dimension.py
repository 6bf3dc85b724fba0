"""
Box counting over d-adic grids.

Boxes at scale k are [j d^-k, (j+1) d^-k); every count here is an exact
integer. Floating point is confined to `fit_dimension`.
"""
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import log
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import numpy as np

from dmap import logger
from dmap.degree import degree
from dmap.enumeration import enumerate_cycles, enumerate_precycles, precycle_count_bound
from dmap.exceptions import InsufficientDataError, InvalidInputError
from dmap.numerics import check_base, digits_to_int, to_point
from dmap.utils.concurrency import run_sharded


@dataclass(frozen=True)
class CoverReport:
    base: int
    scale_exponent: int
    box_count: int


@dataclass(frozen=True)
class DimensionFit:
    beta: float
    intercept: float
    max_residual: float
    scales_used: Tuple[int, ...]


def _check_digit_count(m: int, d: int) -> None:
    check_base(d)
    if not 1 <= m <= d:
        raise InvalidInputError(f"digit count m must satisfy 1 <= m <= {d}, got {m}")


def cantor_intervals(m: int, d: int, k: int) -> List[Tuple[Fraction, Fraction]]:
    """Closed intervals of X_k: points whose first k digits lie in 0..m-1."""
    _check_digit_count(m, d)
    if k < 0:
        raise InvalidInputError("scale exponent must be non-negative")
    width = Fraction(1, d ** k)
    return [
        (digits_to_int(word, d) * width, (digits_to_int(word, d) + 1) * width)
        for word in product(range(m), repeat=k)
    ]


def cantor_boxes(m: int, d: int, k: int) -> CoverReport:
    _check_digit_count(m, d)
    if k < 0:
        raise InvalidInputError("scale exponent must be non-negative")
    return CoverReport(d, k, m ** k)


def box_indices(points: Iterable[Fraction], d: int, k: int) -> Set[int]:
    """floor(x d^k) for every point; unions of these sets merge batches."""
    scale = d ** k
    return {x.numerator * scale // x.denominator for x in map(to_point, points)}


def pointset_boxcount(points: Iterable[Fraction], d: int, k: int) -> CoverReport:
    check_base(d)
    if k < 0:
        raise InvalidInputError("scale exponent must be non-negative")
    indices = box_indices(points, d, k)
    if not indices:
        raise InvalidInputError("cannot count boxes of an empty point set")
    return CoverReport(d, k, len(indices))


def degree_points(
    d: int, m: int, n: int,
    work_limit: Optional[int] = None,
    shard_index: int = 0,
    shard_count: int = 1
) -> FrozenSet[Fraction]:
    """Points of all n-cycles of degree m inside one shard."""
    points: Set[Fraction] = set()
    for C in enumerate_cycles(d, n, work_limit, shard_index, shard_count):
        if degree(C) == m:
            points.update(C.points)
    return frozenset(points)


def build_E_approx(
    d: int, m: int, n_max: int,
    work_limit: Optional[int] = None,
    workers: int = 1
) -> Set[Fraction]:
    _check_digit_count(m, d)
    if n_max < 1:
        raise InvalidInputError("n_max must be positive")

    points: Set[Fraction] = set()
    for n in range(1, n_max + 1):
        for part in run_sharded(degree_points, d, m, n, work_limit,
                                shard_count=max(workers, 1), workers=workers):
            points |= part
    logger.debug("E(%d, %d) up to n=%d has %d points", m, d, n_max, len(points))
    return points


@dataclass(frozen=True)
class PrecycleCover:
    """Points of every precycle of size <= max_size and degree <= max_degree."""
    base: int
    max_degree: int
    max_size: int
    points: Tuple[Fraction, ...]
    counts_by_degree: Dict[int, int] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return sum(self.counts_by_degree.values())

    @property
    def bound(self) -> int:
        """Precycle count bound summed over sizes 1..n and degrees 1..m; degree 0 is not bounded."""
        return sum(
            precycle_count_bound(self.base, k, j)
            for k in range(1, self.max_size + 1)
            for j in range(1, self.max_degree + 1)
        )

    def distance(self, x: Fraction) -> Fraction:
        """Circular distance from x to the nearest cover point."""
        x = to_point(x)
        i = bisect_left(self.points, x)
        left = self.points[i - 1] if i else self.points[-1] - 1
        right = self.points[i] if i < len(self.points) else self.points[0] + 1
        return min(x - left, right - x)

    def radius(self, points: Iterable[Fraction]) -> Fraction:
        return max((self.distance(x) for x in points), default=Fraction(0))


def precycle_cover(d: int, m: int, n: int, work_limit: Optional[int] = None) -> PrecycleCover:
    _check_digit_count(m, d)
    if n < 1:
        raise InvalidInputError("cover size n must be positive")

    points: Set[Fraction] = set()
    counts: Counter = Counter()
    for size in range(1, n + 1):
        for P in enumerate_precycles(d, size, work_limit):
            k = degree(P)
            if k <= m:
                counts[k] += 1
                points.update(P.points)
    logger.debug("precycle cover d=%d m=%d n=%d: %d precycles, %d points",
                 d, m, n, sum(counts.values()), len(points))
    return PrecycleCover(d, m, n, tuple(sorted(points)), dict(sorted(counts.items())))



def scale_ladder(points: Iterable[Fraction], d: int, depth: int, k_min: int = 1) -> List[CoverReport]:
    points = list(points)
    return [pointset_boxcount(points, d, k) for k in range(k_min, depth + 1)]


def unsaturated(reports: List[CoverReport], n_points: int) -> List[CoverReport]:
    """
    Keeps scales whose count is below half the grid and below the number of
    points. If fewer than two survive, only the point bound is applied.
    """
    kept = [
        r for r in reports
        if r.box_count < r.base ** r.scale_exponent / 2 and r.box_count < n_points
    ]
    if len({r.scale_exponent for r in kept}) >= 2:
        dropped = [r.scale_exponent for r in reports if r not in kept]
        if dropped:
            logger.warning("excluding saturated scales k=%s", dropped)
        return kept

    relaxed = [r for r in reports if r.box_count < n_points]
    logger.warning("fewer than two unsaturated scales, keeping every k with N < %d (%d scales)",
                   n_points, len(relaxed))
    return relaxed


def fit_dimension(reports: List[CoverReport]) -> DimensionFit:
    scales = sorted({r.scale_exponent for r in reports})
    if len(scales) < 2:
        raise InsufficientDataError(f"a slope needs at least 2 distinct scales, got {len(scales)}")

    x = np.array([r.scale_exponent * log(r.base) for r in reports])
    y = np.array([log(r.box_count) for r in reports])
    beta, intercept = np.polyfit(x, y, 1)
    residuals = y - (beta * x + intercept)
    return DimensionFit(
        beta=float(beta),
        intercept=float(intercept),
        max_residual=float(np.max(np.abs(residuals))),
        scales_used=tuple(scales)
    )
