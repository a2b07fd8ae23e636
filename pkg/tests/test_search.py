from itertools import combinations

import numpy as np
import pytest

from convexcount import (
    AnnealConfig,
    ExhaustedRejectionError,
    GENERATOR_KINDS,
    GenerationError,
    GeneratorSpec,
    Placement,
    SearchResult,
    count5_naive,
    delta_count5,
    generate,
    minimize_pentagons,
)
from convexcount import _kernels
from convexcount.geometry import find_violation
from convexcount.search import CONSISTENCY_OK, KNOWN_MIN_PENTAGONS

from conftest import hull_size, random_disc


def test_parabola_generator_exact_points():
    p = generate(GeneratorSpec("parabola", 5))
    assert p.points == ((0, 0), (1, 1), (2, 4), (3, 9), (4, 16))


def test_parabola_generator_ignores_seed():
    a = generate(GeneratorSpec("parabola", 9, seed=1))
    b = generate(GeneratorSpec("parabola", 9, seed=2))
    assert a == b


def test_parabola_generator_bound_check():
    assert generate(GeneratorSpec("parabola", 101, coord_bound=10_000)).n == 101
    with pytest.raises(GenerationError):
        generate(GeneratorSpec("parabola", 102, coord_bound=10_000))


@pytest.mark.parametrize("kind", GENERATOR_KINDS)
@pytest.mark.parametrize("n", [5, 12])
def test_generators_produce_valid_placements(kind, n):
    spec = GeneratorSpec(kind, n, seed=7, coord_bound=1000)
    p = generate(spec)
    assert isinstance(p, Placement)
    assert p.n == n
    assert find_violation(p.points) is None
    assert all(abs(x) <= 1000 and abs(y) <= 1000 for x, y in p.points)


@pytest.mark.parametrize("kind", GENERATOR_KINDS)
def test_generators_deterministic_in_seed(kind):
    spec = GeneratorSpec(kind, 10, seed=3, coord_bound=1000)
    assert generate(spec) == generate(spec)


def test_random_generators_vary_with_seed():
    for kind in ("random_disc", "grid_perturbed", "convex"):
        a = generate(GeneratorSpec(kind, 10, seed=0, coord_bound=1000))
        b = generate(GeneratorSpec(kind, 10, seed=1, coord_bound=1000))
        assert a != b, kind


@pytest.mark.parametrize("n", [5, 9, 16])
def test_convex_generator_gives_convex_position(n):
    p = generate(GeneratorSpec("convex", n, seed=2, coord_bound=5000))
    assert hull_size(p.points) == n


def test_random_disc_rejection_exhausts():
    # a radius-3 disc holds 29 lattice points; 40 distinct ones cannot exist
    with pytest.raises(ExhaustedRejectionError):
        generate(GeneratorSpec("random_disc", 40, seed=0, coord_bound=3))


def test_generator_spec_validation():
    with pytest.raises(ValueError):
        GeneratorSpec("spiral", 8)
    with pytest.raises(ValueError):
        GeneratorSpec("parabola", 2)
    with pytest.raises(ValueError):
        GeneratorSpec("parabola", 8, coord_bound=2)
    with pytest.raises(ValueError):
        GeneratorSpec("parabola", 8, coord_bound=10_000_001)


def _quad_columns(n, u):
    others = [i for i in range(n) if i != u]
    quads = np.array(
        [[others[a], others[b], others[c], others[d]]
         for a, b, c, d in combinations(range(n - 1), 4)],
        dtype=np.intp,
    )
    return tuple(quads[:, c] for c in range(4))


def test_pentagon_pair_delta_matches_naive_delta():
    p = random_disc(10, seed=3)
    coords = np.array(p.coords, dtype=np.int64)
    signs = _kernels.full_sign_tensor(coords)
    for u in range(p.n):
        qa, qb, qc, qd = _quad_columns(p.n, u)
        old_pairs = signs[:, :, u]
        old_pent, same = _kernels.pentagon_pair_delta(
            signs, old_pairs, old_pairs, qa, qb, qc, qd
        )
        assert old_pent == same == delta_count5(p, u).pentagon


def test_pentagon_pair_delta_after_move():
    p = random_disc(9, seed=8, bound=100)
    coords = np.array(p.coords, dtype=np.int64)
    signs = _kernels.full_sign_tensor(coords)
    u = 4
    new_pt = (37, -61)
    moved_pts = list(p.points)
    moved_pts[u] = new_pt
    moved = Placement.from_points(moved_pts)
    qa, qb, qc, qd = _quad_columns(p.n, u)
    new_pairs = _kernels.pair_sign_matrix(coords, new_pt)
    old_pent, new_pent = _kernels.pentagon_pair_delta(
        signs, signs[:, :, u], new_pairs, qa, qb, qc, qd
    )
    assert old_pent == delta_count5(p, u).pentagon
    assert new_pent == delta_count5(moved, u).pentagon


def test_anneal_config_validation():
    for bad in (
        dict(n=4),
        dict(n=8, iterations=0),
        dict(n=8, restarts=0),
        dict(n=8, initial_temp=0.0),
        dict(n=8, cooling=0.0),
        dict(n=8, cooling=1.5),
        dict(n=8, global_move_prob=1.5),
        dict(n=8, coord_bound=2),
    ):
        with pytest.raises(ValueError):
            AnnealConfig(**bad)


def test_minimize_is_deterministic():
    cfg = AnnealConfig(n=6, iterations=300, restarts=2, seed=5, coord_bound=50)
    r1 = minimize_pentagons(cfg)
    r2 = minimize_pentagons(cfg)
    assert r1 == r2
    assert isinstance(r1, SearchResult)


def test_minimize_reaches_zero_at_n8():
    cfg = AnnealConfig(n=8, iterations=20_000, restarts=2, seed=1, target=0)
    res = minimize_pentagons(cfg)
    assert res.best_pentagons == 0
    assert res.consistency == CONSISTENCY_OK
    assert res.iterations_used <= 40_000


def test_minimize_result_invariants():
    cfg = AnnealConfig(n=7, iterations=400, restarts=3, seed=9, coord_bound=300)
    res = minimize_pentagons(cfg)
    # the reported best always equals an independent full recount
    assert count5_naive(res.best_placement).pentagon == res.best_pentagons
    assert res.best_placement.n == 7
    bests = [b for (_, _, b) in res.trace]
    assert all(later < earlier for earlier, later in zip(bests, bests[1:]))
    assert bests[-1] == res.best_pentagons
    assert len(res.restart_bests) <= cfg.restarts
    assert min(res.restart_bests) == res.best_pentagons
    assert all(
        abs(x) <= cfg.coord_bound and abs(y) <= cfg.coord_bound
        for x, y in res.best_placement.points
    )


def test_minimize_with_recount_every_accepted_move():
    cfg = AnnealConfig(
        n=7, iterations=150, restarts=1, seed=3, coord_bound=200, recount_every=1
    )
    res = minimize_pentagons(cfg)
    assert count5_naive(res.best_placement).pentagon == res.best_pentagons


def test_known_minimum_table():
    assert KNOWN_MIN_PENTAGONS == {16: 112, 18: 252}
