"""Placement generators and a simulated-annealing pentagon minimizer.

The minimizer moves one point at a time, evaluating each proposal through an
incremental kernel that touches only the C(n-1,4) five-subsets containing
the moved point.  Published exact minima act as tripwires: since 16-point
placements always contain at least 112 pentagons and 18-point placements at
least 252, any search result below those values proves a counting bug, so
the result carries a consistency flag and the periodic recounts raise on
divergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil, exp, pi, sqrt
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import _kernels
from .counting import InconsistentCountsError, aggregate_regions, count5_from_regions
from .geometry import COORD_BOUND, ConvexCountError, Placement, Point, find_violation


class GenerationError(ConvexCountError):
    """A generator could not produce a valid placement."""


class ExhaustedRejectionError(GenerationError):
    """Rejection sampling hit its attempt budget without finding a valid
    point (bounds too tight for the requested size)."""


GENERATOR_KINDS = ("parabola", "random_disc", "convex", "grid_perturbed")

# Proven minimum pentagon counts; a search result below these is a bug.
KNOWN_MIN_PENTAGONS = {16: 112, 18: 252}

CONSISTENCY_OK = "ok"
CONSISTENCY_VIOLATION = "violation"


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic placement recipe: kind, size, seed, coordinate bound."""

    kind: str
    n: int
    seed: int = 0
    coord_bound: int = COORD_BOUND

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(
                f"unknown generator kind {self.kind!r}; expected one of {GENERATOR_KINDS}"
            )
        if self.n < 3:
            raise ValueError(f"generators need n >= 3, got {self.n}")
        if not 3 <= self.coord_bound <= COORD_BOUND:
            raise ValueError(
                f"coord_bound must lie in [3, {COORD_BOUND}], got {self.coord_bound}"
            )


def _generate_parabola(spec: GeneratorSpec) -> Placement:
    top = (spec.n - 1) ** 2
    if top > spec.coord_bound:
        raise GenerationError(
            f"parabola needs (n-1)^2 <= coord_bound; {top} > {spec.coord_bound}"
        )
    return Placement(tuple(Point(i, i * i) for i in range(spec.n)))


def _generate_random_disc(spec: GeneratorSpec) -> Placement:
    rng = np.random.default_rng(spec.seed)
    radius = spec.coord_bound
    r2 = radius * radius
    points: List[Point] = []
    taken = set()
    coords = np.empty((spec.n, 2), dtype=np.int64)
    attempts_left = 400 * spec.n + 2000
    while len(points) < spec.n:
        if attempts_left == 0:
            raise ExhaustedRejectionError(
                f"could not place {spec.n} disc points within bound {radius}"
            )
        attempts_left -= 1
        x = int(rng.integers(-radius, radius + 1))
        y = int(rng.integers(-radius, radius + 1))
        if x * x + y * y > r2 or (x, y) in taken:
            continue
        if _kernels.degenerate_with_pair(coords[: len(points)], (x, y)):
            continue
        coords[len(points)] = (x, y)
        points.append(Point(x, y))
        taken.add((x, y))
    return Placement(tuple(points))


def _generate_convex(spec: GeneratorSpec) -> Placement:
    """Points on a circular arc, rounded to integers, resampled until the
    rounded polygon is strictly convex (which also forces general
    position)."""
    rng = np.random.default_rng(spec.seed)
    radius = spec.coord_bound
    n = spec.n
    for _ in range(200):
        jitter = rng.random(n) * 0.6
        angles = (np.arange(n) + jitter) * (2.0 * pi / n)
        xs = np.rint(radius * np.cos(angles)).astype(np.int64)
        ys = np.rint(radius * np.sin(angles)).astype(np.int64)
        pts = [Point(int(x), int(y)) for x, y in zip(xs, ys)]
        if len(set(pts)) != n:
            continue
        convex = True
        for i in range(n):
            a = pts[i]
            b = pts[(i + 1) % n]
            c = pts[(i + 2) % n]
            det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
            if det <= 0:
                convex = False
                break
        if convex:
            return Placement(tuple(pts))
    raise ExhaustedRejectionError(
        f"no strictly convex rounded {n}-gon found within bound {radius}"
    )


def _generate_grid_perturbed(spec: GeneratorSpec) -> Placement:
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    side = ceil(sqrt(n))
    spacing = max(4, (2 * spec.coord_bound) // (side + 1))
    jitter_max = max(1, spacing // 3)
    origin = -(spacing * (side - 1)) // 2
    cells = [(origin + col * spacing, origin + row * spacing)
             for row in range(side) for col in range(side)][:n]
    for _ in range(200):
        jit = rng.integers(-jitter_max, jitter_max + 1, size=(n, 2))
        pts = [Point(int(cx + jx), int(cy + jy))
               for (cx, cy), (jx, jy) in zip(cells, jit)]
        if any(abs(p.x) > spec.coord_bound or abs(p.y) > spec.coord_bound for p in pts):
            continue
        if find_violation(pts) is None:
            return Placement(tuple(pts))
    raise ExhaustedRejectionError(
        f"no valid perturbed {side}x{side} grid found within bound {spec.coord_bound}"
    )


def generate(spec: GeneratorSpec) -> Placement:
    """Produce a valid placement for the spec; deterministic in the seed."""
    if spec.kind == "parabola":
        return _generate_parabola(spec)
    if spec.kind == "random_disc":
        return _generate_random_disc(spec)
    if spec.kind == "convex":
        return _generate_convex(spec)
    return _generate_grid_perturbed(spec)


@dataclass(frozen=True)
class AnnealConfig:
    """Budget and schedule of the pentagon minimizer.

    Each restart runs `iterations` proposals from a fresh random placement;
    temperature decays geometrically per proposal.  Moves resample one
    point: with probability global_move_prob uniformly in the full box,
    otherwise inside a local box of side 2*local_box+1 around the current
    position (default bound // 8, at least 2).  Every recount_every accepted
    moves the incrementally tracked count is recomputed from scratch and
    must match exactly.  A target stops the search early once reached.
    """

    n: int
    iterations: int = 60_000
    restarts: int = 4
    seed: int = 0
    initial_temp: float = 3.0
    cooling: float = 0.9999
    coord_bound: int = 10_000
    global_move_prob: float = 0.5
    local_box: Optional[int] = None
    recount_every: int = 5_000
    target: Optional[int] = None

    def __post_init__(self):
        if self.n < 5:
            raise ValueError(f"minimization needs n >= 5, got {self.n}")
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if not self.initial_temp > 0:
            raise ValueError("initial temperature must be positive")
        if not 0 < self.cooling <= 1:
            raise ValueError("cooling factor must lie in (0, 1]")
        if not 0 <= self.global_move_prob <= 1:
            raise ValueError("global_move_prob must lie in [0, 1]")
        if not 3 <= self.coord_bound <= COORD_BOUND:
            raise ValueError(f"coord_bound must lie in [3, {COORD_BOUND}]")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a minimization run.

    best_pentagons always equals a from-scratch recount of best_placement;
    trace records (restart, proposal index, new best) at every improvement;
    consistency is "violation" when the result undercuts a proven minimum.
    """

    best_placement: Placement
    best_pentagons: int
    iterations_used: int
    trace: Tuple[Tuple[int, int, int], ...]
    restart_bests: Tuple[int, ...]
    consistency: str


class _Chain:
    """One annealing chain over a fixed-size placement.

    Maintains the full orientation sign tensor of the current points; a
    proposal touches only the pair-sign matrix of the moved point, and an
    accepted move rewrites three tensor slices.
    """

    def __init__(self, placement: Placement, rng: np.random.Generator, cfg: AnnealConfig):
        self.cfg = cfg
        self.rng = rng
        self.n = placement.n
        self.points: List[Point] = list(placement.points)
        self.taken = set(self.points)
        self.coords = np.array(placement.coords, dtype=np.int64)
        self.signs = _kernels.full_sign_tensor(self.coords)
        self.current = count5_from_regions(aggregate_regions(Placement(tuple(self.points)), threads=1)).pentagon
        self.temp = cfg.initial_temp
        self.local_box = cfg.local_box if cfg.local_box is not None else max(2, cfg.coord_bound // 8)
        self.accepted = 0
        base = np.array(list(combinations(range(self.n - 1), 4)), dtype=np.intp)
        self._base_combs = base
        self._quad_cache: Dict[int, Tuple[np.ndarray, ...]] = {}

    def _quad_indices(self, u: int) -> Tuple[np.ndarray, ...]:
        cached = self._quad_cache.get(u)
        if cached is not None:
            return cached
        others = np.concatenate(
            [np.arange(0, u, dtype=np.intp), np.arange(u + 1, self.n, dtype=np.intp)]
        )
        quads = others[self._base_combs]
        cols = tuple(np.ascontiguousarray(quads[:, c]) for c in range(4))
        if self.n <= 26:
            self._quad_cache[u] = cols
        return cols

    def _propose_point(self, u: int) -> Point:
        bound = self.cfg.coord_bound
        if self.rng.random() < self.cfg.global_move_prob:
            x = int(self.rng.integers(-bound, bound + 1))
            y = int(self.rng.integers(-bound, bound + 1))
        else:
            px, py = self.points[u]
            d = self.local_box
            x = min(bound, max(-bound, px + int(self.rng.integers(-d, d + 1))))
            y = min(bound, max(-bound, py + int(self.rng.integers(-d, d + 1))))
        return Point(x, y)

    def step(self) -> None:
        u = int(self.rng.integers(self.n))
        cand = self._propose_point(u)
        old = self.points[u]
        if cand == old or cand in self.taken:
            return
        pair_new = _kernels.pair_sign_matrix(self.coords, cand)
        # degeneracy test over the fixed points only: ignore row/col u
        probe = pair_new.copy()
        probe[u, :] = 1
        probe[:, u] = 1
        np.fill_diagonal(probe, 1)
        if (probe == 0).any():
            return
        qa, qb, qc, qd = self._quad_indices(u)
        old_pent, new_pent = _kernels.pentagon_pair_delta(
            self.signs, self.signs[:, :, u], pair_new, qa, qb, qc, qd
        )
        delta = new_pent - old_pent
        if delta > 0:
            if self.temp <= 0 or self.rng.random() >= exp(-delta / self.temp):
                return
        pair_new[u, :] = 0
        pair_new[:, u] = 0
        self.signs[u, :, :] = pair_new
        self.signs[:, u, :] = -pair_new
        self.signs[:, :, u] = pair_new
        self.coords[u] = cand
        self.taken.discard(old)
        self.taken.add(cand)
        self.points[u] = cand
        self.current += delta
        self.accepted += 1
        if self.accepted % self.cfg.recount_every == 0:
            self._verify_recount()

    def _verify_recount(self) -> None:
        fresh = count5_from_regions(
            aggregate_regions(Placement(tuple(self.points)), threads=1)
        ).pentagon
        if fresh != self.current:
            raise InconsistentCountsError(
                f"incremental pentagon count {self.current} diverged from "
                f"recount {fresh} after {self.accepted} accepted moves"
            )

    def cool(self) -> None:
        self.temp *= self.cfg.cooling


def minimize_pentagons(cfg: AnnealConfig) -> SearchResult:
    """Simulated annealing over single-point moves, minimizing the pentagon
    count.  Deterministic in the config; restarts merge by best count with
    earlier restarts winning ties."""
    root = np.random.SeedSequence(cfg.seed)
    children = root.spawn(cfg.restarts)

    best_points: Optional[Tuple[Point, ...]] = None
    best = -1
    trace: List[Tuple[int, int, int]] = []
    restart_bests: List[int] = []
    used = 0
    done = False

    for r, child in enumerate(children):
        rng = np.random.Generator(np.random.PCG64(child))
        init_seed = int(rng.integers(2**63))
        start = generate(
            GeneratorSpec("random_disc", cfg.n, seed=init_seed, coord_bound=cfg.coord_bound)
        )
        chain = _Chain(start, rng, cfg)
        restart_best = chain.current
        if best_points is None or chain.current < best:
            best = chain.current
            best_points = tuple(chain.points)
            trace.append((r, 0, best))
        for it in range(cfg.iterations):
            chain.step()
            chain.cool()
            used += 1
            if chain.current < restart_best:
                restart_best = chain.current
            if chain.current < best:
                best = chain.current
                best_points = tuple(chain.points)
                trace.append((r, it + 1, best))
                if cfg.target is not None and best <= cfg.target:
                    done = True
                    break
        restart_bests.append(restart_best)
        if done:
            break

    assert best_points is not None
    final = Placement.from_points(best_points)
    recount = count5_from_regions(aggregate_regions(final, threads=1)).pentagon
    if recount != best:
        raise InconsistentCountsError(
            f"final recount {recount} does not match tracked best {best}"
        )
    floor = KNOWN_MIN_PENTAGONS.get(cfg.n)
    consistency = (
        CONSISTENCY_VIOLATION if floor is not None and best < floor else CONSISTENCY_OK
    )
    return SearchResult(
        best_placement=final,
        best_pentagons=best,
        iterations_used=used,
        trace=tuple(trace),
        restart_bests=tuple(restart_bests),
        consistency=consistency,
    )
