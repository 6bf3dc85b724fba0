from collections import Counter
from fractions import Fraction as F
from functools import reduce

import pytest
from sympy import binomial, totient

from dmap.degree import degree, digit_portrait
from dmap.enumeration import (CensusRow, census, enumerate_cycles, enumerate_precycles, cycle_count_bound,
                              precycle_count_bound, lyndon_words, necklace_count, precycle_census)
from dmap.exceptions import CensusMismatchError, InvalidInputError, WorkLimitExceededError
from dmap.orbits import is_cycle, orbit


# count/bound never exceeds this for 2 <= n <= 14, d <= 4; fixed points (n = 1) reach d - 1
CENSUS_RATIO_CEILING = 1


def point_sets(orbits):
    return [frozenset(C.points) for C in orbits]


def precycle_sizes_bruteforce(d: int, a_max: int, b_max: int) -> Counter:
    """Sizes of the distinct forward orbits of every k / (d^a (d^b - 1))."""
    orbits = set()
    for a in range(a_max + 1):
        for b in range(1, b_max + 1):
            den = d ** a * (d ** b - 1)
            for k in range(den):
                orbits.add(frozenset(orbit(F(k, den), d).points))
    return Counter(len(points) for points in orbits)


def test_lyndon_words():
    assert list(lyndon_words(2, 4)) == [(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1)]
    assert list(lyndon_words(3, 1)) == [(0,), (1,), (2,)]
    assert len(list(lyndon_words(3, 6))) == 116


def test_enumerate_cycles_small():
    assert point_sets(enumerate_cycles(2, 3)) == [
        frozenset({F(1, 7), F(2, 7), F(4, 7)}),
        frozenset({F(3, 7), F(5, 7), F(6, 7)}),
    ]
    assert point_sets(enumerate_cycles(2, 1)) == [frozenset({F(0)})]
    assert [str(C.word) for C in enumerate_cycles(2, 4)] == ["0001", "0011", "0111"]


def test_fixed_points():
    assert [C.points for C in enumerate_cycles(4, 1)] == [(F(0),), (F(1, 3),), (F(2, 3),)]


def test_totals_match_necklace_formula():
    assert [sum(1 for _ in enumerate_cycles(2, n)) for n in range(1, 7)] == [1, 1, 2, 3, 6, 9]
    for d in (2, 3, 4):
        for n in range(1, 9):
            cycles = list(enumerate_cycles(d, n))
            assert len(cycles) == necklace_count(d, n)
            assert len(set(point_sets(cycles))) == len(cycles)
            assert all(is_cycle(C.points, d) for C in cycles)


def test_necklace_count():
    assert necklace_count(2, 1) == 1
    assert necklace_count(3, 1) == 2
    assert necklace_count(2, 6) == 9
    assert necklace_count(3, 4) == 18


@pytest.mark.parametrize("d, n, counts", [
    (2, 3, {1: 2}),
    (2, 4, {1: 2, 2: 1}),
    (2, 1, {0: 1}),
    (3, 1, {0: 2}),
])
def test_census(d, n, counts):
    row = census(d, n)
    assert row.counts_by_degree == counts
    assert row.total == sum(counts.values())


def test_census_degrees_stay_within_digit_count():
    for d in (2, 3, 4):
        for n in range(2, 8):
            row = census(d, n)
            assert 0 not in row.counts_by_degree
            assert max(row.counts_by_degree) <= min(d, n)


def test_bound_ratios():
    row = census(2, 4)
    assert row.bound(1) == cycle_count_bound(2, 4, 1) == 16
    assert row.bound(2) == cycle_count_bound(2, 4, 2) == 32
    assert row.bound_ratio == {1: F(2, 16), 2: F(1, 32)}
    assert row.max_ratio == F(1, 8)
    assert precycle_count_bound(2, 3, 1) == 81
    assert cycle_count_bound(2, 1, 0) == 1


def test_sharded_census_matches_single_shard():
    for d, n in [(2, 8), (3, 6), (4, 7)]:
        whole = census(d, n)
        parts = [census(d, n, shard_index=i, shard_count=4) for i in range(4)]
        assert reduce(CensusRow.merge, parts) == whole


def test_merge_rejects_mismatched_rows():
    with pytest.raises(InvalidInputError):
        census(2, 3).merge(census(2, 4))


def test_work_limit():
    with pytest.raises(WorkLimitExceededError):
        list(enumerate_cycles(2, 10, work_limit=512))
    assert len(list(enumerate_cycles(2, 9, work_limit=512))) == necklace_count(2, 9)
    with pytest.raises(WorkLimitExceededError):
        census(3, 5, work_limit=100)


def test_enumerate_rejects_bad_sizes():
    with pytest.raises(InvalidInputError):
        list(enumerate_cycles(2, 0))


def test_enumerate_precycles_small():
    assert point_sets(enumerate_precycles(2, 1)) == [frozenset({F(0)})]
    assert set(point_sets(enumerate_precycles(2, 2))) == {
        frozenset({F(1, 3), F(2, 3)}), frozenset({F(0), F(1, 2)})
    }
    assert frozenset({F(1, 3), F(2, 3), F(5, 6)}) in point_sets(enumerate_precycles(2, 3))


def test_precycles_are_distinct_orbits():
    for n in range(1, 7):
        precycles = list(enumerate_precycles(2, n))
        sets = point_sets(precycles)
        assert len(set(sets)) == len(sets)
        assert all(len(s) == n for s in sets)
        for P in precycles:
            images = {P.point(s) for s in P.sigma}
            roots = [x for x in P.points if x not in images] or [P.points[0]]
            assert orbit(roots[0], 2).points == P.points


def test_precycle_counts_match_orbit_scan():
    sizes = precycle_sizes_bruteforce(2, 6, 6)
    for n in range(1, 6):
        assert sum(1 for _ in enumerate_precycles(2, n)) == sizes[n]


def test_precycle_census():
    assert precycle_census(2, 1).counts_by_degree == {0: 1}
    row = precycle_census(2, 3)
    assert row.counts_by_degree[1] >= 1
    assert all(0 <= m <= 2 for m in row.counts_by_degree)
    assert row.bound(1) == precycle_count_bound(2, 3, 1)

    degrees = Counter(degree(P) for P in enumerate_precycles(2, 3))
    assert row.counts_by_degree == dict(degrees)


def test_portraits_of_enumerated_cycles_end_at_n():
    for C in enumerate_cycles(3, 5):
        assert digit_portrait(C).values[-1] == 5


@pytest.mark.slow
def test_precycle_counts_match_orbit_scan_exhaustively():
    sizes = precycle_sizes_bruteforce(2, 8, 8)
    for n in range(1, 9):
        assert sum(1 for _ in enumerate_precycles(2, n)) == sizes[n]


@pytest.mark.slow
def test_census_over_acceptance_range():
    for d in range(2, 5):
        for n in range(1, 15):
            if d ** n > 2 ** 26:
                continue
            row = census(d, n)
            assert row.total == necklace_count(d, n)
            assert max(row.counts_by_degree) <= min(d, n)


def test_base_two_ratios_stay_below_one():
    # phi(n) rotation cycles of degree 1, at most 2^n / n of degree 2
    for n in range(1, 13):
        assert census(2, n).max_ratio <= 1


def test_precycle_ratios_stay_below_one():
    row = precycle_census(2, 2)
    assert row.counts_by_degree == {0: 1, 1: 1}
    assert row.bound(0) == 0
    assert row.bound_ratio == {1: F(1, 16)}
    for n in range(1, 7):
        assert precycle_census(2, n).max_ratio <= 1


def test_census_raises_on_necklace_mismatch(monkeypatch):
    monkeypatch.setattr("dmap.enumeration.necklace_count", lambda d, n: 0)
    with pytest.raises(CensusMismatchError) as error:
        census(2, 4)
    assert (error.value.found, error.value.expected) == (3, 0)
    # shards are only checked once merged
    assert census(2, 4, shard_index=0, shard_count=2).total <= 3


def test_degree_one_counts_are_rotation_counts():
    # phi(n) rotation numbers p/n, each carried by C(n+d-2, d-2) cycles
    for d in (2, 3, 4):
        for n in range(2, 8):
            assert census(d, n).counts_by_degree[1] == totient(n) * binomial(n + d - 2, d - 2)


def test_fixed_points_have_degree_zero():
    for d in (2, 3, 4):
        row = census(d, 1)
        assert row.counts_by_degree == {0: d - 1}
        assert row.max_ratio == d - 1


def test_census_ratios_stay_below_ceiling():
    for d in (2, 3, 4):
        for n in range(2, 9):
            assert census(d, n).max_ratio <= CENSUS_RATIO_CEILING


@pytest.mark.slow
def test_census_ratios_stay_below_ceiling_over_acceptance_range():
    for d in range(2, 5):
        for n in range(2, 15):
            if d ** n > 2 ** 26:
                continue
            assert census(d, n).max_ratio <= CENSUS_RATIO_CEILING
