"""
Exhaustive generation of cycles and precycles of the d-map.

Cycles come from Lyndon words (aperiodic necklace representatives) of
length n, generated in lexicographic order. The word (d-1) is skipped at
n = 1 since its value is identified with 0.
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, Optional, Tuple

from sympy import divisors, mobius

from config import WORK_LIMIT
from dmap import logger
from dmap.degree import degree
from dmap.exceptions import CensusMismatchError, InvalidInputError, WorkLimitExceededError
from dmap.numerics import DigitWord, check_base, digits_to_int
from dmap.orbits import Cycle, Precycle, cycle_of_lyndon, precycle_of_words

SHARD_PREFIX_LEN = 6


def check_work(d: int, n: int, work_limit: Optional[int] = None) -> None:
    check_base(d)
    if n < 1:
        raise InvalidInputError(f"orbit size must be positive, got {n}")
    limit = WORK_LIMIT if work_limit is None else work_limit
    if d ** n > limit:
        raise WorkLimitExceededError(d, n, limit)


def lyndon_words(d: int, n: int) -> Iterator[Tuple[int, ...]]:
    """All Lyndon words of length n over range(d), by Duval's algorithm."""
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            yield tuple(w)
        while len(w) < n:
            w.append(w[-m])
        while w and w[-1] == d - 1:
            w.pop()


def shard_of(digits: Tuple[int, ...], d: int, shard_count: int) -> int:
    return digits_to_int(digits[:SHARD_PREFIX_LEN], d) % shard_count


def cycle_words(d: int, n: int, shard_index: int = 0, shard_count: int = 1) -> Iterator[Tuple[int, ...]]:
    for digits in lyndon_words(d, n):
        if n == 1 and digits[0] == d - 1:
            continue
        if shard_count > 1 and shard_of(digits, d, shard_count) != shard_index:
            continue
        yield digits


def enumerate_cycles(
    d: int, n: int,
    work_limit: Optional[int] = None,
    shard_index: int = 0,
    shard_count: int = 1
) -> Iterator[Cycle]:
    check_work(d, n, work_limit)
    for digits in cycle_words(d, n, shard_index, shard_count):
        yield cycle_of_lyndon(d, digits)


def enumerate_precycles(
    d: int, n: int,
    work_limit: Optional[int] = None,
    shard_index: int = 0,
    shard_count: int = 1
) -> Iterator[Precycle]:
    """
    Every n-element precycle exactly once, as the orbit of (0.t ppp...)_d.

    t runs over transients whose last digit differs from the last digit of
    the period p (so the transient is minimal) and p over every rotation of
    a Lyndon word; with an empty transient one precycle per cycle is kept.
    """
    check_work(d, n, work_limit)
    empty = DigitWord(d, ())
    for transient_len in range(n):
        period_len = n - transient_len
        for digits in cycle_words(d, period_len, shard_index, shard_count):
            lyndon = DigitWord(d, digits)
            if not transient_len:
                yield precycle_of_words(empty, lyndon)
                continue
            for period in lyndon.rotations():
                for transient in product(range(d), repeat=transient_len):
                    if transient[-1] == period.digits[-1]:
                        continue
                    yield precycle_of_words(DigitWord(d, transient), period)


def cycle_count_bound(d: int, n: int, m: int) -> int:
    return n ** (d - m + 1) * m ** (n - 1)


def precycle_count_bound(d: int, n: int, m: int) -> int:
    return n ** (d - m + 3) * m ** (n - 1)


@dataclass
class CensusRow:
    d: int
    n: int
    counts_by_degree: Dict[int, int] = field(default_factory=dict)
    precycles: bool = False

    @property
    def total(self) -> int:
        return sum(self.counts_by_degree.values())

    def bound(self, m: int) -> int:
        if self.precycles:
            return precycle_count_bound(self.d, self.n, m)
        return cycle_count_bound(self.d, self.n, m)

    @property
    def bound_ratio(self) -> Dict[int, Fraction]:
        """count / bound per degree; degrees whose bound vanishes (m = 0, n > 1) have no ratio."""
        return {
            m: Fraction(count, self.bound(m))
            for m, count in sorted(self.counts_by_degree.items())
            if self.bound(m)
        }

    @property
    def max_ratio(self) -> Fraction:
        return max(self.bound_ratio.values(), default=Fraction(0))

    def merge(self, other: "CensusRow") -> "CensusRow":
        if (self.d, self.n, self.precycles) != (other.d, other.n, other.precycles):
            raise InvalidInputError("only rows of the same (d, n) and kind can be merged")
        counts = Counter(self.counts_by_degree)
        counts.update(other.counts_by_degree)
        return CensusRow(self.d, self.n, dict(sorted(counts.items())), self.precycles)


def census(
    d: int, n: int,
    work_limit: Optional[int] = None,
    shard_index: int = 0,
    shard_count: int = 1
) -> CensusRow:
    counts = Counter(degree(C) for C in enumerate_cycles(d, n, work_limit, shard_index, shard_count))
    row = CensusRow(d, n, dict(sorted(counts.items())))
    logger.debug("census d=%d n=%d shard %d/%d: %s", d, n, shard_index, shard_count, row.counts_by_degree)

    if shard_count == 1 and row.total != necklace_count(d, n):
        raise CensusMismatchError(d, n, row.total, necklace_count(d, n))
    return row


def precycle_census(
    d: int, n: int,
    work_limit: Optional[int] = None,
    shard_index: int = 0,
    shard_count: int = 1
) -> CensusRow:
    counts = Counter(
        degree(P) for P in enumerate_precycles(d, n, work_limit, shard_index, shard_count))
    row = CensusRow(d, n, dict(sorted(counts.items())), precycles=True)
    logger.debug("precycle census d=%d n=%d shard %d/%d: %s",
                 d, n, shard_index, shard_count, row.counts_by_degree)
    return row


def necklace_count(d: int, n: int) -> int:
    """Number of n-cycles: primitive necklaces (1/n) sum mu(n/k) d^k, with (d-1) identified with 0."""
    check_base(d)
    if n == 1:
        return d - 1
    return sum(int(mobius(n // k)) * d ** k for k in divisors(n)) // n
