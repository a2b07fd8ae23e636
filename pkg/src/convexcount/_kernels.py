"""Vectorized numpy kernels for region aggregation and incremental 5-subset
evaluation.

Exactness: coordinates are bounded by 10**7, so every 3-point determinant
has magnitude at most 8 * 10**14 and fits int64 with headroom.  Per-chunk
reductions stay far below int64 range (chunk sizes are capped), and all
cross-chunk accumulation happens in Python ints, which are unbounded.
"""

from __future__ import annotations

from typing import Iterator, Tuple

import numpy as np

from .geometry import CollinearError

# Aggregate field order shared with counting.AggregateSums:
AGGREGATE_FIELDS = (
    "sum_beta",
    "sum_gamma",
    "sum_beta_sq",
    "sum_gamma_sq",
    "sum_beta_gamma",
    "sum_gamma_pair_binom",
    "sum_gamma_cross",
    "sum_beta_pair_binom",
    "sum_beta_cross",
    "sum_interior",
)


def iter_triangle_chunks(
    n: int, chunk_rows: int
) -> Iterator[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Yield (i, j, k) index arrays covering all i < j < k triples, in
    lexicographic order, each chunk at most chunk_rows triples."""
    for i in range(n - 2):
        m = n - 1 - i
        jj, kk = np.triu_indices(m, k=1)
        jj = (jj + i + 1).astype(np.int64)
        kk = (kk + i + 1).astype(np.int64)
        total = jj.shape[0]
        for start in range(0, total, chunk_rows):
            stop = min(start + chunk_rows, total)
            j_part = jj[start:stop]
            k_part = kk[start:stop]
            i_part = np.full(j_part.shape[0], i, dtype=np.int64)
            yield i_part, j_part, k_part


def aggregate_chunk(
    coords: np.ndarray, ti: np.ndarray, tj: np.ndarray, tk: np.ndarray
) -> Tuple[int, ...]:
    """Region sums over one chunk of triangles, every point classified
    against every triangle.

    Returns the tuple matching AGGREGATE_FIELDS as Python ints.  Raises
    CollinearError when any point falls in no region (a zero determinant,
    impossible for a validated placement).
    """
    n = coords.shape[0]
    x = coords[:, 0]
    y = coords[:, 1]

    pi = coords[ti]
    pj = coords[tj]
    pk = coords[tk]
    # Canonical orientation: smallest index first (already true for ti),
    # remaining two counterclockwise.
    det = (pj[:, 0] - pi[:, 0]) * (pk[:, 1] - pi[:, 1]) - (pj[:, 1] - pi[:, 1]) * (
        pk[:, 0] - pi[:, 0]
    )
    if (det == 0).any():
        raise CollinearError("collinear triangle encountered during aggregation")
    swap = det < 0
    if swap.any():
        pj, pk = np.where(swap[:, None], pk, pj), np.where(swap[:, None], pj, pk)

    def edge_signs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        # sign of (b - a) x (q - a) for every point q, shape (chunk, n)
        ex = (b[:, 0] - a[:, 0])[:, None]
        ey = (b[:, 1] - a[:, 1])[:, None]
        return ex * (y[None, :] - a[:, 1][:, None]) - ey * (x[None, :] - a[:, 0][:, None])

    s1 = edge_signs(pj, pk)
    s2 = edge_signs(pk, pi)
    s3 = edge_signs(pi, pj)

    p1 = s1 > 0
    p2 = s2 > 0
    p3 = s3 > 0
    n1 = s1 < 0
    n2 = s2 < 0
    n3 = s3 < 0

    # Triangle vertices produce one positive and two zero signs, so they
    # fall through every mask below.
    interior = (p1 & p2 & p3).sum(axis=1, dtype=np.int64)
    g1 = (n1 & p2 & p3).sum(axis=1, dtype=np.int64)
    g2 = (p1 & n2 & p3).sum(axis=1, dtype=np.int64)
    g3 = (p1 & p2 & n3).sum(axis=1, dtype=np.int64)
    b1 = (p1 & n2 & n3).sum(axis=1, dtype=np.int64)
    b2 = (n1 & p2 & n3).sum(axis=1, dtype=np.int64)
    b3 = (n1 & n2 & p3).sum(axis=1, dtype=np.int64)

    beta = b1 + b2 + b3
    gamma = g1 + g2 + g3
    if not (interior + beta + gamma == n - 3).all():
        raise CollinearError(
            "region partition lost a point; the placement has a collinear triple"
        )

    sum_beta = int(beta.sum())
    sum_gamma = int(gamma.sum())
    sum_beta_sq = int((beta * beta).sum())
    sum_gamma_sq = int((gamma * gamma).sum())
    sum_beta_gamma = int((beta * gamma).sum())
    sum_gamma_pair_binom = int(
        ((g1 * (g1 - 1) + g2 * (g2 - 1) + g3 * (g3 - 1)) // 2).sum()
    )
    sum_gamma_cross = int((g1 * g2 + g1 * g3 + g2 * g3).sum())
    sum_beta_pair_binom = int(
        ((b1 * (b1 - 1) + b2 * (b2 - 1) + b3 * (b3 - 1)) // 2).sum()
    )
    sum_beta_cross = int((b1 * b2 + b1 * b3 + b2 * b3).sum())
    sum_interior = int(interior.sum())

    return (
        sum_beta,
        sum_gamma,
        sum_beta_sq,
        sum_gamma_sq,
        sum_beta_gamma,
        sum_gamma_pair_binom,
        sum_gamma_cross,
        sum_beta_pair_binom,
        sum_beta_cross,
        sum_interior,
    )


def pair_sign_matrix(coords: np.ndarray, q: Tuple[int, int]) -> np.ndarray:
    """(n, n) int8 matrix of orientation signs or(p_a, p_b, q).

    Entry [a, b] is the sign of (p_b - p_a) x (q - p_a); the diagonal is 0.
    A zero off the diagonal means q is collinear with the pair (or equals
    one of the points).
    """
    dx = coords[:, 0] - int(q[0])
    dy = coords[:, 1] - int(q[1])
    # (p_b - p_a) x (q - p_a) = (q - p_a) x (q - p_b) written in differences
    cross = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]
    return np.sign(cross).astype(np.int8)


def degenerate_with_pair(coords: np.ndarray, q: Tuple[int, int]) -> bool:
    """True when q is collinear with (or equal to) some pair of the points."""
    m = coords.shape[0]
    if m < 2:
        return False
    s = pair_sign_matrix(coords, q)
    iu = np.triu_indices(m, k=1)
    return bool((s[iu] == 0).any())


def full_sign_tensor(coords: np.ndarray) -> np.ndarray:
    """(n, n, n) int8 tensor of orientation signs or(p_i, p_j, p_k).

    Entries with repeated indices are 0; any other zero means the placement
    is degenerate.  Memory is n**3 bytes, fine for the search sizes (n well
    under 100).
    """
    x = coords[:, 0]
    y = coords[:, 1]
    dx = x[None, :] - x[:, None]  # dx[i, j] = x_j - x_i
    dy = y[None, :] - y[:, None]
    cross = dx[:, :, None] * dy[:, None, :] - dy[:, :, None] * dx[:, None, :]
    return np.sign(cross).astype(np.int8)


def _tridot_mask(w: np.ndarray, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
    s = w + x + y + z
    return (s == 2) | (s == -2)


def _pentagon_count(
    s_abc: np.ndarray,
    s_abd: np.ndarray,
    s_acd: np.ndarray,
    s_bcd: np.ndarray,
    base_tridot: np.ndarray,
    pairs: np.ndarray,
    qa: np.ndarray,
    qb: np.ndarray,
    qc: np.ndarray,
    qd: np.ndarray,
) -> int:
    v_ab = pairs[qa, qb]
    v_ac = pairs[qa, qc]
    v_ad = pairs[qa, qd]
    v_bc = pairs[qb, qc]
    v_bd = pairs[qb, qd]
    v_cd = pairs[qc, qd]
    t = (
        base_tridot.astype(np.int8)
        + _tridot_mask(s_abc, v_ab, v_ac, v_bc)
        + _tridot_mask(s_abd, v_ab, v_ad, v_bd)
        + _tridot_mask(s_acd, v_ac, v_ad, v_cd)
        + _tridot_mask(s_bcd, v_bc, v_bd, v_cd)
    )
    return int((t == 0).sum())


def pentagon_pair_delta(
    signs3: np.ndarray,
    old_pairs: np.ndarray,
    new_pairs: np.ndarray,
    qa: np.ndarray,
    qb: np.ndarray,
    qc: np.ndarray,
    qd: np.ndarray,
) -> Tuple[int, int]:
    """Pentagon counts among all 5-subsets {a, b, c, d, x} with the moving
    point x at its old and at its proposed position.

    signs3 is the orientation sign tensor of the current points; old_pairs
    and new_pairs give the signs of or(p_a, p_b, x) for the two positions of
    x; (qa..qd) rows list the 4-subsets of the fixed points (none equal to
    the moved index).  A 5-subset is a pentagon exactly when none of its
    five 4-subsets is a tridot, each tested by its orientation sign sum.
    Returns (old_pentagons, new_pentagons).
    """
    s_abc = signs3[qa, qb, qc]
    s_abd = signs3[qa, qb, qd]
    s_acd = signs3[qa, qc, qd]
    s_bcd = signs3[qb, qc, qd]
    base_tridot = _tridot_mask(s_abc, s_abd, s_acd, s_bcd)
    old_pent = _pentagon_count(
        s_abc, s_abd, s_acd, s_bcd, base_tridot, old_pairs, qa, qb, qc, qd
    )
    new_pent = _pentagon_count(
        s_abc, s_abd, s_acd, s_bcd, base_tridot, new_pairs, qa, qb, qc, qd
    )
    return old_pent, new_pent
