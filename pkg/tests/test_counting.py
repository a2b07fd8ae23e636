import dataclasses
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexcount import (
    AggregateSums,
    InconsistentCountsError,
    Placement,
    RegionCounts,
    TypeCounts4,
    TypeCounts5,
    aggregate_regions,
    canonical_triangle,
    count4_from_regions,
    count4_naive,
    count5_from_regions,
    count5_naive,
    delta_count5,
    region_counts,
    region_table,
)
from convexcount.counting import _aggregate_pure
from convexcount.geometry import find_violation

from conftest import parabola, random_disc


def test_count4_naive_examples(square_center, triangle_two_inside):
    assert count4_naive(square_center) == TypeCounts4(quad=3, tridot=2)
    assert count4_naive(triangle_two_inside) == TypeCounts4(quad=1, tridot=4)
    assert count4_naive(parabola(7)) == TypeCounts4(quad=comb(7, 4), tridot=0)


def test_count5_naive_examples(square_center, triangle_two_inside):
    assert count5_naive(square_center) == TypeCounts5(0, 1, 0)
    assert count5_naive(triangle_two_inside) == TypeCounts5(0, 0, 1)
    assert count5_naive(parabola(7)) == TypeCounts5(comb(7, 5), 0, 0)


def test_counts_require_enough_points():
    tri = Placement.from_points([(0, 0), (6, 0), (0, 6)])
    quad = Placement.from_points([(0, 0), (6, 0), (0, 6), (1, 1)])
    with pytest.raises(ValueError):
        count4_naive(tri)
    with pytest.raises(ValueError):
        count5_naive(quad)


def test_region_counts_parabola():
    p = parabola(6)
    for ijk in combinations(range(6), 3):
        rc = region_counts(p, canonical_triangle(p, *ijk))
        assert rc.interior == 0
        assert rc.beta_total == 0
        assert rc.gamma_total == 3


def test_region_counts_mixed_example():
    # triangle (0,0),(6,0),(0,6): one interior point, one corner point, one edge point
    p = Placement.from_points([(0, 0), (6, 0), (0, 6), (1, 1), (7, 8), (-1, -2)])
    rc = region_counts(p, canonical_triangle(p, 0, 1, 2))
    assert rc.interior == 1
    assert rc.beta == (1, 0, 0)
    assert rc.gamma == (1, 0, 0)


def test_region_counts_trivial_triangle():
    p = Placement.from_points([(0, 0), (6, 0), (0, 6)])
    rc = region_counts(p, canonical_triangle(p, 0, 1, 2))
    assert rc == RegionCounts(interior=0, beta=(0, 0, 0), gamma=(0, 0, 0))


def test_region_counts_partition():
    p = random_disc(10, seed=7)
    for ijk in combinations(range(10), 3):
        rc = region_counts(p, canonical_triangle(p, *ijk))
        assert rc.interior + rc.beta_total + rc.gamma_total == p.n - 3


def test_region_table_matches_region_counts():
    p = random_disc(9, seed=3)
    table = region_table(p)
    assert len(table) == comb(9, 3)
    for ref, rc in table[:20]:
        assert ref == canonical_triangle(p, *ref.indices)
        assert rc == region_counts(p, ref)


def test_region_table_size_cap():
    with pytest.raises(ValueError):
        region_table(parabola(61))


def test_aggregate_examples(square_center):
    agg = aggregate_regions(parabola(6))
    assert agg.n == 6 and agg.triangles == comb(6, 3)
    assert agg.sum_gamma == 60
    assert agg.sum_beta == 0
    assert agg.sum_interior == 0
    agg2 = aggregate_regions(square_center)
    assert agg2.sum_gamma == 12
    assert agg2.sum_beta == 6


def test_aggregate_matches_pure_reference():
    for p in (parabola(8), random_disc(12, seed=1), random_disc(17, seed=2)):
        assert aggregate_regions(p) == _aggregate_pure(p)


def test_aggregate_thread_count_is_immaterial():
    p = random_disc(15, seed=5)
    base = aggregate_regions(p, threads=1)
    assert aggregate_regions(p, threads=3) == base
    assert aggregate_regions(p, threads=None) == base


def test_engines_agree_on_examples(square_center, triangle_two_inside):
    for p in (square_center, triangle_two_inside, parabola(9)):
        agg = aggregate_regions(p)
        assert count4_from_regions(agg) == count4_naive(p)
        assert count5_from_regions(agg) == count5_naive(p)


@pytest.mark.parametrize("n", range(5, 13))
def test_engines_agree_on_random_placements(n):
    p = random_disc(n, seed=100 + n)
    agg = aggregate_regions(p)
    assert count4_from_regions(agg) == count4_naive(p)
    assert count5_from_regions(agg) == count5_naive(p)


grid_pts = st.lists(
    st.tuples(st.integers(-15, 15), st.integers(-15, 15)),
    min_size=5,
    max_size=8,
    unique=True,
)


@settings(max_examples=80, deadline=None)
@given(grid_pts)
def test_engines_agree_property(pts):
    if find_violation(pts) is not None:
        return
    p = Placement.from_points(pts)
    agg = aggregate_regions(p, threads=1)
    c4 = count4_from_regions(agg)
    c5 = count5_from_regions(agg)
    assert c4 == count4_naive(p)
    assert c5 == count5_naive(p)
    assert c4.total == comb(p.n, 4)
    assert c5.total == comb(p.n, 5)


def test_pentagon_count_monotone_under_point_removal():
    p = random_disc(11, seed=9)
    full = count5_naive(p).pentagon
    for drop in range(p.n):
        sub = Placement.from_points([p[i] for i in range(p.n) if i != drop])
        assert count5_naive(sub).pentagon <= full


def test_delta_count5_examples():
    p5 = parabola(5)
    assert delta_count5(p5, 2) == count5_naive(p5)
    p7 = parabola(7)
    assert delta_count5(p7, 0) == TypeCounts5(comb(6, 4), 0, 0)


def test_delta_count5_difference_law():
    p = random_disc(9, seed=42)
    total = count5_naive(p)
    for m in range(p.n):
        rest = Placement.from_points([p[i] for i in range(p.n) if i != m])
        delta = delta_count5(p, m)
        kept = count5_naive(rest)
        assert kept.pentagon + delta.pentagon == total.pentagon
        assert kept.four_hull + delta.four_hull == total.four_hull
        assert kept.three_hull + delta.three_hull == total.three_hull


def test_delta_count5_index_validation():
    p = parabola(6)
    with pytest.raises(ValueError):
        delta_count5(p, 6)
    with pytest.raises(ValueError):
        delta_count5(p, -1)


def _corrupt(agg: AggregateSums, **changes: int) -> AggregateSums:
    return dataclasses.replace(agg, **changes)


def test_count4_rejects_corrupted_sums():
    agg = aggregate_regions(random_disc(8, seed=11))
    with pytest.raises(InconsistentCountsError):
        count4_from_regions(_corrupt(agg, sum_gamma=agg.sum_gamma + 1))
    with pytest.raises(InconsistentCountsError):
        count4_from_regions(_corrupt(agg, sum_interior=agg.sum_interior + 1))


def test_count5_rejects_corrupted_sums():
    agg = aggregate_regions(random_disc(8, seed=11))
    bad_fields = [
        {"sum_gamma_cross": agg.sum_gamma_cross + 5},
        {"sum_beta_gamma": agg.sum_beta_gamma + 1},
        {"sum_beta_pair_binom": agg.sum_beta_pair_binom + 1},
        {"sum_beta_cross": agg.sum_beta_cross + 3},
    ]
    for changes in bad_fields:
        with pytest.raises(InconsistentCountsError):
            count5_from_regions(_corrupt(agg, **changes))
