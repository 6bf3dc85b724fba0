import logging
from fractions import Fraction as F
from math import log

import pytest

from dmap.constructors import ApproximationRequest, approximate_with_cycle
from dmap.dimension import (CoverReport, box_indices, build_E_approx, cantor_boxes, cantor_intervals,
                            fit_dimension, pointset_boxcount, precycle_cover, scale_ladder, unsaturated)
from dmap.enumeration import enumerate_cycles
from dmap.exceptions import InsufficientDataError, InvalidInputError
from dmap.degree import degree
from dmap.numerics import DigitWord

DEGREE_ONE_UP_TO_3 = {F(0), F(1, 3), F(2, 3), F(1, 7), F(2, 7), F(4, 7), F(3, 7), F(5, 7), F(6, 7)}


@pytest.mark.parametrize("m, d, k, expected", [
    (2, 3, 5, 32),
    (3, 3, 4, 81),
    (1, 2, 7, 1),
    (2, 5, 0, 1),
])
def test_cantor_boxes(m, d, k, expected):
    assert cantor_boxes(m, d, k) == CoverReport(d, k, expected)


def test_cantor_intervals():
    assert cantor_intervals(2, 3, 2) == [
        (F(0), F(1, 9)), (F(1, 9), F(2, 9)), (F(3, 9), F(4, 9)), (F(4, 9), F(5, 9))
    ]
    assert len(cantor_intervals(2, 3, 5)) == cantor_boxes(2, 3, 5).box_count


def test_cantor_rejects_invalid_digit_counts():
    with pytest.raises(InvalidInputError):
        cantor_boxes(4, 3, 2)
    with pytest.raises(InvalidInputError):
        cantor_boxes(0, 3, 2)


def test_pointset_boxcount():
    # 3/7 lies in [0, 1/2), the other two in [1/2, 1)
    assert pointset_boxcount({F(3, 7), F(5, 7), F(6, 7)}, 2, 1).box_count == 2
    assert box_indices({F(3, 7), F(5, 7), F(6, 7)}, 2, 1) == {0, 1}
    assert pointset_boxcount({F(0)}, 5, 6).box_count == 1
    assert pointset_boxcount(DEGREE_ONE_UP_TO_3, 2, 3).box_count == 7
    assert box_indices(DEGREE_ONE_UP_TO_3, 2, 3) == {0, 1, 2, 3, 4, 5, 6}
    with pytest.raises(InvalidInputError):
        pointset_boxcount(set(), 2, 3)


def test_boxcount_is_monotone():
    points = build_E_approx(2, 2, 8)
    counts = [r.box_count for r in scale_ladder(points, 2, 8)]
    assert counts == sorted(counts)
    subset = set(list(points)[:20])
    for k in range(1, 9):
        assert pointset_boxcount(subset, 2, k).box_count <= pointset_boxcount(points, 2, k).box_count


def test_box_indices_merge_across_batches():
    points = sorted(build_E_approx(3, 2, 6))
    half = len(points) // 2
    merged = box_indices(points[:half], 3, 4) | box_indices(points[half:], 3, 4)
    assert merged == box_indices(points, 3, 4)


def test_build_E_approx():
    assert build_E_approx(2, 1, 3) == DEGREE_ONE_UP_TO_3 - {F(0)}
    assert build_E_approx(2, 2, 4) == {F(1, 5), F(2, 5), F(3, 5), F(4, 5)}


def test_build_E_approx_with_workers():
    assert build_E_approx(3, 2, 6, workers=2) == build_E_approx(3, 2, 6)


def test_approximations_meet_every_cantor_interval():
    points = build_E_approx(3, 2, 9)
    for k in (1, 2):
        for lo, hi in cantor_intervals(2, 3, k):
            assert any(lo <= x <= hi for x in points)


def test_constructed_cycles_meet_cantor_intervals():
    for k in (1, 2, 3, 4):
        for lo, hi in cantor_intervals(2, 3, k):
            prefix = DigitWord(3, tuple(int(lo * 3 ** k) // 3 ** i % 3 for i in reversed(range(k))))
            sizing = ApproximationRequest(3, (0, 1), prefix, 0)
            c, C = approximate_with_cycle(ApproximationRequest(3, (0, 1), prefix, sizing.min_block_len))
            assert lo <= c <= hi
            assert C.n == k + 2 * sizing.min_block_len + 1


@pytest.mark.parametrize("m, d", [(m, d) for d in range(2, 6) for m in range(1, d + 1)])
def test_fit_of_cantor_set(m, d):
    fit = fit_dimension([cantor_boxes(m, d, k) for k in range(1, 11)])
    assert fit.beta == pytest.approx(log(m) / log(d), abs=1e-9)
    assert fit.max_residual < 1e-9
    assert fit.scales_used == tuple(range(1, 11))


def test_fit_of_middle_third_style_set():
    fit = fit_dimension([cantor_boxes(2, 3, k) for k in range(1, 11)])
    assert fit.beta == pytest.approx(0.630929753571, abs=1e-9)
    assert fit.max_residual < 1e-12


def test_fit_needs_two_scales():
    with pytest.raises(InsufficientDataError):
        fit_dimension([cantor_boxes(2, 3, 4)])
    with pytest.raises(InsufficientDataError):
        fit_dimension([cantor_boxes(2, 3, 4), cantor_boxes(2, 3, 4)])


def test_unsaturated_drops_saturated_scales(caplog):
    reports = [CoverReport(2, 1, 2), CoverReport(2, 2, 3), CoverReport(2, 3, 3),
               CoverReport(2, 4, 5), CoverReport(2, 5, 7), CoverReport(2, 6, 9)]
    with caplog.at_level(logging.WARNING, logger="dmap"):
        kept = unsaturated(reports, 9)
    assert [r.scale_exponent for r in kept] == [3, 4, 5]
    assert "excluding saturated scales" in caplog.text


def test_unsaturated_falls_back_for_full_grids(caplog):
    reports = [cantor_boxes(2, 2, k) for k in range(1, 6)]
    with caplog.at_level(logging.WARNING, logger="dmap"):
        kept = unsaturated(reports, 1000)
    assert kept == reports
    assert "fewer than two unsaturated scales" in caplog.text


def test_full_circle_slope():
    points = build_E_approx(2, 2, 12)
    reports = scale_ladder(points, 2, 5)
    assert [r.box_count for r in reports] == [2, 4, 8, 16, 32]
    fit = fit_dimension(reports)
    assert fit.beta == pytest.approx(1.0, abs=1e-9)


def test_degree_one_set_is_thinner():
    rotation = build_E_approx(2, 1, 12)
    full = build_E_approx(2, 2, 12)
    reports = scale_ladder(rotation, 2, 6)
    # balanced words of length k bound the degree-one counts
    assert all(r.box_count <= bound for r, bound in zip(reports, [2, 4, 8, 14, 24, 36]))
    assert fit_dimension(scale_ladder(rotation, 2, 8)).beta < fit_dimension(scale_ladder(full, 2, 8)).beta


@pytest.mark.slow
def test_cantor_like_cycle_sets():
    fits = []
    for n_max in (8, 10, 12):
        points = build_E_approx(3, 2, n_max)
        reports = unsaturated(scale_ladder(points, 3, 6), len(points))
        fits.append(fit_dimension(reports).beta)
    assert all(0 < beta < 1 for beta in fits)


# fit_dimension(unsaturated(scale_ladder(E, d, 6))) at k = 1..6
@pytest.mark.parametrize("d, m, n_max, beta", [
    (3, 2, 8, 0.9913),
    (3, 2, 9, 0.9920),
    pytest.param(3, 2, 10, 0.9920, marks=pytest.mark.slow),
    pytest.param(3, 2, 11, 0.9920, marks=pytest.mark.slow),
    pytest.param(3, 2, 12, 0.9920, marks=pytest.mark.slow),
    (2, 1, 12, 0.8403),
    (2, 1, 14, 0.8403),
    (2, 2, 12, 1.0),
])
def test_pinned_cycle_set_fits(d, m, n_max, beta):
    points = build_E_approx(d, m, n_max)
    fit = fit_dimension(unsaturated(scale_ladder(points, d, 6), len(points)))
    assert fit.beta == pytest.approx(beta, abs=5e-4)
    assert len(fit.scales_used) >= 2


def test_degree_one_counts_settle_at_balanced_word_counts():
    for n_max in (12, 14):
        points = build_E_approx(2, 1, n_max)
        reports = unsaturated(scale_ladder(points, 2, 6), len(points))
        assert [r.box_count for r in reports] == [2, 4, 8, 14, 24, 36]
        assert fit_dimension(reports).scales_used == (1, 2, 3, 4, 5, 6)


def test_precycle_cover_small():
    cover = precycle_cover(2, 1, 3)
    assert set(cover.points) == {
        F(0), F(1, 2), F(1, 4), F(3, 4), F(1, 3), F(2, 3), F(1, 6), F(5, 6),
        F(1, 7), F(2, 7), F(4, 7), F(3, 7), F(5, 7), F(6, 7)
    }
    assert list(cover.points) == sorted(cover.points)
    # {0}, {0, 1/2}, {0, 1/2, 1/4} and {0, 1/2, 3/4} have degree 0
    assert cover.counts_by_degree == {0: 4, 1: 5}
    assert cover.count == 9


def test_precycle_cover_distance():
    cover = precycle_cover(2, 1, 3)
    assert cover.distance(F(2, 7)) == 0
    assert cover.distance(F(1, 5)) == F(1, 5) - F(1, 6)
    assert cover.distance(F(99, 100)) == F(1, 100)
    assert cover.distance(F(3, 2)) == 0
    assert cover.radius([]) == 0


def test_precycle_cover_holds_the_short_cycles():
    for d, m, n in [(2, 1, 4), (2, 2, 4), (3, 2, 3)]:
        cover = precycle_cover(d, m, n)
        for size in range(1, n + 1):
            for C in enumerate_cycles(d, size):
                if degree(C) <= m:
                    assert cover.radius(C.points) == 0


@pytest.mark.parametrize("d, m, n, n_max", [
    (2, 1, 4, 10),
    (2, 2, 4, 10),
    (2, 1, 5, 10),
    (3, 2, 3, 6),
    (3, 3, 3, 6),
])
def test_cycle_sets_lie_near_the_precycle_cover(d, m, n, n_max):
    cover = precycle_cover(d, m, n)
    assert cover.radius(build_E_approx(d, m, n_max)) <= F(1, d ** (n - 1))


def test_precycle_cover_size_against_bound():
    for m in (1, 2):
        for n in range(1, 7):
            cover = precycle_cover(2, m, n)
            positive = sum(count for k, count in cover.counts_by_degree.items() if k)
            assert positive <= cover.bound


def test_precycle_cover_rejects_bad_arguments():
    with pytest.raises(InvalidInputError):
        precycle_cover(2, 3, 4)
    with pytest.raises(InvalidInputError):
        precycle_cover(2, 1, 0)
