"""Counting engines for 4- and 5-point subset types.

Two independent routes produce the same numbers:

- the naive engines enumerate every C(n,4) / C(n,5) subset and classify it
  directly (pure Python, exact, the oracle);
- the region engine classifies every point against every triangle (O(n^4)
  work, vectorized) and derives all type counts from the aggregated region
  sums through exact double-counting identities, cross-checking itself four
  ways before returning.

Any disagreement between the routes, any failed divisibility, and any failed
cross-check raises InconsistentCountsError: the underlying identities are
theorems, so a mismatch always means a bug or corrupted input.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Tuple

from . import _kernels
from .classification import (
    RegionKind,
    TriangleRef,
    Type4,
    Type5,
    canonical_triangle,
    classify_region,
    tridot_subsets5,
    type4_of_points,
)
from .geometry import ConvexCountError, Placement


class InconsistentCountsError(ConvexCountError):
    """Derived counts violate an identity that holds for every valid
    placement; indicates a bug or corrupted aggregate data."""


@dataclass(frozen=True)
class RegionCounts:
    """Points of a placement classified against one triangle: the interior
    count and the per-slot counts for the three corner (beta) and three edge
    (gamma) regions.  interior + sum(beta) + sum(gamma) = n - 3."""

    interior: int
    beta: Tuple[int, int, int]
    gamma: Tuple[int, int, int]

    @property
    def beta_total(self) -> int:
        return sum(self.beta)

    @property
    def gamma_total(self) -> int:
        return sum(self.gamma)


@dataclass(frozen=True)
class TypeCounts4:
    """Counts of the two 4-point types; quad + tridot = C(n,4)."""

    quad: int
    tridot: int

    @property
    def total(self) -> int:
        return self.quad + self.tridot


@dataclass(frozen=True)
class TypeCounts5:
    """Counts of the three 5-point types by hull size 5/4/3;
    pentagon + four_hull + three_hull = C(n,5)."""

    pentagon: int
    four_hull: int
    three_hull: int

    @property
    def total(self) -> int:
        return self.pentagon + self.four_hull + self.three_hull


@dataclass(frozen=True)
class AggregateSums:
    """Placement-wide sums of per-triangle region counts over all C(n,3)
    canonical triangles.

    With beta_T, gamma_T the corner/edge totals of triangle T and
    beta_T^(i), gamma_T^(i) the per-slot counts:

    - sum_beta, sum_gamma, sum_interior: plain sums
    - sum_beta_sq, sum_gamma_sq, sum_beta_gamma: sums of beta_T^2,
      gamma_T^2, beta_T * gamma_T
    - sum_gamma_pair_binom: sum over T and slots of C(gamma_T^(i), 2)
    - sum_gamma_cross: sum over T of the products of distinct slots
    - sum_beta_pair_binom, sum_beta_cross: the beta analogues

    All values are exact arbitrary-precision ints.
    """

    n: int
    triangles: int
    sum_beta: int
    sum_gamma: int
    sum_beta_sq: int
    sum_gamma_sq: int
    sum_beta_gamma: int
    sum_gamma_pair_binom: int
    sum_gamma_cross: int
    sum_beta_pair_binom: int
    sum_beta_cross: int
    sum_interior: int


def count4_naive(placement: Placement) -> TypeCounts4:
    """Classify every 4-subset directly.  The oracle engine: O(n^4), exact."""
    if placement.n < 4:
        raise ValueError(f"4-subset counting needs n >= 4, got {placement.n}")
    quad = 0
    tridot = 0
    for a, b, c, d in combinations(placement.points, 4):
        if type4_of_points(a, b, c, d) is Type4.TRI_DOT:
            tridot += 1
        else:
            quad += 1
    return TypeCounts4(quad, tridot)


def count5_naive(placement: Placement) -> TypeCounts5:
    """Classify every 5-subset directly.  The oracle engine: O(n^5), exact."""
    if placement.n < 5:
        raise ValueError(f"5-subset counting needs n >= 5, got {placement.n}")
    pentagon = 0
    four_hull = 0
    three_hull = 0
    for a, b, c, d, e in combinations(placement.points, 5):
        t = tridot_subsets5(a, b, c, d, e)
        if t == 0:
            pentagon += 1
        elif t == 2:
            four_hull += 1
        else:
            three_hull += 1
    return TypeCounts5(pentagon, four_hull, three_hull)


def region_counts(placement: Placement, tri: TriangleRef) -> RegionCounts:
    """Classify every non-vertex point against one triangle and tally."""
    interior = 0
    beta = [0, 0, 0]
    gamma = [0, 0, 0]
    for x in range(placement.n):
        if x in tri:
            continue
        label = classify_region(placement, tri, x)
        if label.kind is RegionKind.INTERIOR:
            interior += 1
        elif label.kind is RegionKind.BETA:
            beta[label.slot - 1] += 1
        else:
            gamma[label.slot - 1] += 1
    return RegionCounts(interior, tuple(beta), tuple(gamma))


def region_table(placement: Placement) -> List[Tuple[TriangleRef, RegionCounts]]:
    """Full per-triangle region table, for diagnostics; capped at n <= 60
    because it materializes all C(n,3) rows."""
    if placement.n > 60:
        raise ValueError("region_table is a diagnostic aid, capped at n <= 60")
    table = []
    for i, j, k in combinations(range(placement.n), 3):
        tri = canonical_triangle(placement, i, j, k)
        table.append((tri, region_counts(placement, tri)))
    return table


def _aggregate_pure(placement: Placement) -> AggregateSums:
    """Reference aggregation: one region_counts call per triangle, Python
    ints throughout.  Slow; exists to validate the vectorized path."""
    n = placement.n
    acc = [0] * 10
    for i, j, k in combinations(range(n), 3):
        tri = canonical_triangle(placement, i, j, k)
        rc = region_counts(placement, tri)
        b1, b2, b3 = rc.beta
        g1, g2, g3 = rc.gamma
        beta = b1 + b2 + b3
        gamma = g1 + g2 + g3
        acc[0] += beta
        acc[1] += gamma
        acc[2] += beta * beta
        acc[3] += gamma * gamma
        acc[4] += beta * gamma
        acc[5] += comb(g1, 2) + comb(g2, 2) + comb(g3, 2)
        acc[6] += g1 * g2 + g1 * g3 + g2 * g3
        acc[7] += comb(b1, 2) + comb(b2, 2) + comb(b3, 2)
        acc[8] += b1 * b2 + b1 * b3 + b2 * b3
        acc[9] += rc.interior
    return AggregateSums(n, comb(n, 3), *acc)


def aggregate_regions(placement: Placement, threads: Optional[int] = None) -> AggregateSums:
    """Aggregate region counts over all C(n,3) canonical triangles.

    Runs on the vectorized kernel in chunks of triangles; with threads > 1
    the chunks are distributed over a thread pool and merged by field-wise
    addition, so the result is bit-identical to the sequential run.
    """
    n = placement.n
    if n < 3:
        raise ValueError(f"aggregation needs n >= 3, got {n}")
    coords = placement.coords
    chunk_rows = max(64, 1_500_000 // n)
    chunks = _kernels.iter_triangle_chunks(n, chunk_rows)
    if threads is None:
        threads = os.cpu_count() or 1
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(lambda c: _kernels.aggregate_chunk(coords, *c), chunks)
            )
    else:
        parts = [_kernels.aggregate_chunk(coords, *c) for c in chunks]
    acc = [0] * 10
    for part in parts:
        for idx, value in enumerate(part):
            acc[idx] += value
    return AggregateSums(n, comb(n, 3), *acc)


def count4_from_regions(agg: AggregateSums) -> TypeCounts4:
    """Derive the 4-point type counts from region sums.

    Every convex quad is seen four times as an edge-region configuration and
    every tridot three times as a corner-region configuration, so the two
    sums divide exactly by 4 and 3; the results must also satisfy
    quad + tridot = C(n,4) and tridot = sum_interior.
    """
    n = agg.n
    if agg.sum_gamma % 4 != 0:
        raise InconsistentCountsError(
            f"sum_gamma = {agg.sum_gamma} is not divisible by 4"
        )
    if agg.sum_beta % 3 != 0:
        raise InconsistentCountsError(
            f"sum_beta = {agg.sum_beta} is not divisible by 3"
        )
    quad = agg.sum_gamma // 4
    tridot = agg.sum_beta // 3
    if quad + tridot != comb(n, 4):
        raise InconsistentCountsError(
            f"quad + tridot = {quad + tridot} != C({n},4) = {comb(n, 4)}"
        )
    if tridot != agg.sum_interior:
        raise InconsistentCountsError(
            f"tridot = {tridot} != sum_interior = {agg.sum_interior}"
        )
    return TypeCounts4(quad, tridot)


def count5_from_regions(agg: AggregateSums) -> TypeCounts5:
    """Derive the 5-point type counts from region sums.

    With A = sum_gamma_pair_binom = 5*pentagon + 2*four_hull and
    B = sum_gamma_cross = 5*pentagon + four_hull:
    four_hull = A - B, pentagon = (2B - A)/5 (exact division), and
    three_hull = sum_beta_cross.  Four independent identities are then
    re-checked; failing any of them raises InconsistentCountsError.
    """
    n = agg.n
    a = agg.sum_gamma_pair_binom
    b = agg.sum_gamma_cross
    four_hull = a - b
    if (2 * b - a) % 5 != 0:
        raise InconsistentCountsError(
            f"2*sum_gamma_cross - sum_gamma_pair_binom = {2 * b - a} "
            "is not divisible by 5"
        )
    pentagon = (2 * b - a) // 5
    three_hull = agg.sum_beta_cross
    if pentagon < 0 or four_hull < 0 or three_hull < 0:
        raise InconsistentCountsError(
            f"negative type count: {(pentagon, four_hull, three_hull)}"
        )

    total5 = comb(n, 5)
    if 4 * pentagon != 4 * total5 - agg.sum_beta_gamma:
        raise InconsistentCountsError(
            "mixed-region identity failed: "
            f"4*{pentagon} != 4*{total5} - {agg.sum_beta_gamma}"
        )
    if pentagon + four_hull + three_hull != total5:
        raise InconsistentCountsError(
            f"type totals {pentagon}+{four_hull}+{three_hull} != C({n},5) = {total5}"
        )
    if agg.sum_beta_pair_binom != four_hull + 2 * three_hull:
        raise InconsistentCountsError(
            f"corner pair identity failed: {agg.sum_beta_pair_binom} != "
            f"{four_hull} + 2*{three_hull}"
        )
    quads = count4_from_regions(agg)
    if (n - 4) * quads.quad != 5 * pentagon + 3 * four_hull + three_hull:
        raise InconsistentCountsError(
            f"quad-extension identity failed: ({n}-4)*{quads.quad} != "
            f"5*{pentagon} + 3*{four_hull} + {three_hull}"
        )
    return TypeCounts5(pentagon, four_hull, three_hull)


def delta_count5(placement: Placement, moved: int) -> TypeCounts5:
    """Type counts over exactly the C(n-1,4) five-subsets containing one
    point.  Pure reference used by the incremental search machinery."""
    n = placement.n
    if not 0 <= moved < n:
        raise ValueError(f"index {moved} out of range for n = {n}")
    if n < 5:
        raise ValueError(f"5-subset counting needs n >= 5, got {n}")
    q = placement.points[moved]
    others = placement.points[:moved] + placement.points[moved + 1 :]
    pentagon = 0
    four_hull = 0
    three_hull = 0
    for a, b, c, d in combinations(others, 4):
        t = tridot_subsets5(a, b, c, d, q)
        if t == 0:
            pentagon += 1
        elif t == 2:
            four_hull += 1
        else:
            three_hull += 1
    return TypeCounts5(pentagon, four_hull, three_hull)
