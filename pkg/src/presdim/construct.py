"""Constructive neighborhood-preserving embeddings.

Every construction returns an :class:`EmbeddingResult` whose claims are
self-contained: the level interval it promises, a witness threshold, and a
doubling-dimension bound for its target space. Coordinate dimensions convert
to doubling bounds with a factor log2(3) per axis in sup-norm spaces and
log2(5) in Euclidean ones (half-radius ball covers of a cube and a ball).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import DEFAULT_LIMITS
from .graph import (
    Graph,
    GenerationError,
    all_pairs_distances,
    bits,
    connected_components,
    neighborhood_class_masks,
    rng_for,
)
from .metric import FiniteMetric, PointSet, validate_metric
from .partition import VertexPartition, clique_cover
from .preserve import check
from .util import int_ceil

__all__ = [
    "EmbeddingResult",
    "JLProjectionError",
    "shortest_path_metric",
    "clique_collapse_linf",
    "ball_collapse_l2",
    "pseudo_metric_embedding",
    "grid_packing_linf",
    "sphere_packing_l2",
    "frechet_embedding",
    "frechet_quotient_embedding",
    "schoenberg_embedding",
    "jl_project",
    "simplex_embedding",
    "center_and_normalize",
    "result_to_json",
    "result_from_json",
]

LOG2_3 = math.log2(3.0)
LOG2_5 = math.log2(5.0)


class JLProjectionError(RuntimeError):
    """Random projection failed to certify within the retry budget."""

    def __init__(self, message: str, best_alpha_max: float):
        super().__init__(message)
        self.best_alpha_max = best_alpha_max


@dataclass(frozen=True, eq=False)
class EmbeddingResult:
    """A concrete embedding together with its certified claims.

    ``vertex_map`` sends each graph vertex to a point index of ``target``;
    ``claimed_alpha`` is the (open-ended) level interval the construction
    promises to pass, ``claimed_r`` a representative threshold witness and
    ``claimed_dim_bound`` the doubling-dimension bound of the target space.
    """

    target: FiniteMetric | PointSet
    vertex_map: tuple[int, ...]
    claimed_alpha: tuple[float, float]
    claimed_r: float
    claimed_dim_bound: int
    source: str

    @property
    def n_points(self) -> int:
        return self.target.n

    def vertex_distances(self) -> np.ndarray:
        base = (
            self.target.distance_matrix()
            if isinstance(self.target, PointSet)
            else self.target.dist
        )
        idx = np.asarray(self.vertex_map, dtype=int)
        return base[np.ix_(idx, idx)]


def _identity_map(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _cover_for(g: Graph, limit: int | None) -> VertexPartition:
    limit = DEFAULT_LIMITS.exact_cover if limit is None else limit
    mode = "exact" if g.n <= limit else "greedy"
    return clique_cover(g, mode=mode)


# -- shortest-path metric -----------------------------------------------------


def shortest_path_metric(g: Graph) -> EmbeddingResult:
    """Hop-distance metric: neighbors at 1, non-neighbors at >= 2.

    Disconnected inputs place components at mutual distance
    2*(max eccentricity) + 1, which keeps the triangle inequality and the
    non-neighbor separation intact.
    """
    if g.n < 1:
        raise ValueError("need at least one vertex")
    d = all_pairs_distances(g)
    finite = d[np.isfinite(d)]
    max_ecc = float(finite.max()) if finite.size else 0.0
    d = np.where(np.isfinite(d), d, 2.0 * max_ecc + 1.0)
    return EmbeddingResult(
        target=FiniteMetric(d),
        vertex_map=_identity_map(g.n),
        claimed_alpha=(0.0, 2.0),
        claimed_r=1.5,
        claimed_dim_bound=int_ceil(math.log2(g.n)) if g.n > 1 else 0,
        source="shortest_path",
    )


# -- sup-norm grid packings and collapses --------------------------------------


def grid_packing_linf(n: int, r: float, eps: float) -> PointSet:
    """n points in a sup-norm ball of diameter < r with pairwise gaps >= eps.

    Points are the first n nodes of the eps-resolution grid
    {w_0, ..., w_{s-1}}^d in lexicographic order, with
    d = ceil(log n / log ceil(r/eps)). Axis values are spaced so that
    consecutive gaps are >= eps exactly in floating point.
    """
    if not 0 < eps < r:
        raise ValueError("need 0 < eps < r")
    if n < 1:
        raise ValueError("need at least one point")
    if n == 1:
        return PointSet(np.zeros((1, 1)), norm=math.inf)
    s = int_ceil(r / eps)
    d = int_ceil(math.log(n) / math.log(s), tol=1e-12)
    while s**d < n:
        d += 1
    # Axis values: cumulative sums of eps, nudged up until each float gap
    # is >= eps (consecutive-term subtraction is exact by Sterbenz). Digits
    # never exceed min(s, n), so only that prefix is materialized.
    axis = [0.0]
    for _ in range(min(s, n) - 1):
        w = axis[-1] + eps
        while w - axis[-1] < eps:
            w = math.nextafter(w, math.inf)
        axis.append(w)
    if not axis[-1] < r:
        raise ValueError("grid spacing exceeded the requested diameter")
    pts = np.empty((n, d))
    for i in range(n):
        x = i
        for axis_idx in range(d - 1, -1, -1):
            pts[i, axis_idx] = axis[x % s]
            x //= s
    return PointSet(pts, norm=math.inf)


def clique_collapse_linf(
    g: Graph, alpha: float, limit: int | None = None
) -> EmbeddingResult:
    """Collapse each block of a clique partition to one sup-norm grid point.

    Valid for levels up to (and including) ``alpha`` < 1: blocks sit pairwise
    at gap >= alpha inside an open unit-diameter ball, so non-neighbors are
    separated while every neighbor pair lands strictly inside threshold 1.
    """
    if not 0 < alpha < 1:
        raise ValueError("collapse embedding needs alpha in (0, 1)")
    part = _cover_for(g, limit)
    pts = grid_packing_linf(part.size, 1.0, alpha) if part.size > 1 else PointSet(
        np.zeros((1, 1)), norm=math.inf
    )
    coord_dim = pts.dim if part.size > 1 else 0
    return EmbeddingResult(
        target=pts,
        vertex_map=tuple(part.part_index()),
        claimed_alpha=(0.0, alpha),
        claimed_r=1.0,
        claimed_dim_bound=int_ceil(LOG2_3 * coord_dim) if part.size > 1 else 0,
        source=f"linf_collapse[{part.mode}]",
    )


# -- Euclidean sphere packings and collapses ------------------------------------


def sphere_packing_l2(
    n: int,
    r: float,
    eps: float,
    seed: int,
    attempts: int = 10,
    samples_per_attempt: int = 100_000,
) -> PointSet:
    """n points inside an open Euclidean ball of diameter r, pairwise >= eps.

    Greedy maximal packing of uniform sphere samples in dimension
    d = ceil(4 log(n+1) / (2 - (2 eps/r)^2)); fresh sample batches are drawn
    until the packing is complete or the budget runs out. Deterministic
    given the seed.
    """
    if not 0 < eps < r:
        raise ValueError("need 0 < eps < r")
    gamma = 2.0 * eps / r
    denom = 2.0 - gamma * gamma
    if denom <= 0:
        raise ValueError(
            "packing separation too close to the diameter: need eps < r/sqrt(2)"
        )
    d = max(1, int_ceil(4.0 * math.log(n + 1) / denom))
    if n == 1:
        return PointSet(np.zeros((1, d)), norm=2.0)
    radius = (r / 2.0) * (1.0 - 1e-9)
    kept = np.empty((0, d))
    chunk = 1024
    for attempt in range(attempts):
        rng = rng_for(seed, attempt)
        drawn = 0
        while drawn < samples_per_attempt and kept.shape[0] < n:
            batch = rng.standard_normal((min(chunk, samples_per_attempt - drawn), d))
            drawn += batch.shape[0]
            batch /= np.linalg.norm(batch, axis=1, keepdims=True)
            batch *= radius
            for row in batch:
                if kept.shape[0] == 0 or np.linalg.norm(kept - row, axis=1).min() >= eps:
                    kept = np.vstack([kept, row[None, :]])
                    if kept.shape[0] == n:
                        break
        if kept.shape[0] == n:
            return PointSet(kept, norm=2.0)
    raise GenerationError(
        f"sphere packing reached {kept.shape[0]}/{n} points within budget"
    )


def ball_collapse_l2(
    g: Graph, alpha: float, seed: int, limit: int | None = None
) -> EmbeddingResult:
    """Euclidean analogue of the sup-norm collapse, for alpha < 1/sqrt(2)."""
    if not 0 < alpha < 1 / math.sqrt(2):
        raise ValueError("ball collapse needs alpha in (0, 1/sqrt(2))")
    part = _cover_for(g, limit)
    if part.size > 1:
        pts = sphere_packing_l2(part.size, 1.0, alpha, seed)
        bound = int_ceil(LOG2_5 * pts.dim)
    else:
        pts = PointSet(np.zeros((1, 1)), norm=2.0)
        bound = 0
    return EmbeddingResult(
        target=pts,
        vertex_map=tuple(part.part_index()),
        claimed_alpha=(0.0, alpha),
        claimed_r=1.0,
        claimed_dim_bound=bound,
        source=f"l2_ball_collapse[{part.mode}]",
    )


# -- pseudo-metric construction for levels in (1, 2) -----------------------------


def _largest_margin(alpha: float) -> tuple[float, int]:
    """Largest eps in (0, 0.5] keeping ceil((1-eps)/(alpha-1+eps)) at its
    eps -> 0 value ceil(1/(alpha-1)); located by bisection.

    The same tolerant ceiling used by the grid builder decides the predicate,
    so the packing grid resolution agrees with the claimed dimension bound.
    """
    m0 = int_ceil(1.0 / (alpha - 1.0))

    def keeps_ceiling(e: float) -> bool:
        return int_ceil((1.0 - e) / (alpha - 1.0 + e)) == m0

    # Bisect on the exponent so margins spanning many orders of magnitude
    # (alpha close to 1 leaves only ~1/m0^2) resolve to high relative
    # precision with its floor anchored at a provably admissible value.
    lo_exp, hi_exp = -60.0, math.log2(0.5)
    if not keeps_ceiling(2.0**lo_exp):
        raise ValueError(f"no admissible margin for alpha={alpha}")
    if keeps_ceiling(2.0**hi_exp):
        return 0.5, m0
    for _ in range(80):
        mid = (lo_exp + hi_exp) / 2
        if keeps_ceiling(2.0**mid):
            lo_exp = mid
        else:
            hi_exp = mid
    eps = 2.0**lo_exp
    if not (eps > 0 and keeps_ceiling(eps)):
        raise ValueError(f"no admissible margin for alpha={alpha}")
    return eps, m0


def pseudo_metric_embedding(
    g: Graph, alpha: float, limit: int | None = None
) -> EmbeddingResult:
    """Case-table metric realizing levels in (1, 2): non-neighbors at alpha,
    cross-block neighbors at 1-eps, blocks internally packed by neighborhood
    class at gaps >= alpha-1+eps inside diameter < 1-eps.

    Vertices with identical closed neighborhoods inside a block merge to one
    point (metric identification), so the target is a genuine metric.
    ``alpha = 1`` is accepted as the limiting case and realized at 1 + 1e-6.
    """
    if not 1 <= alpha < 2:
        raise ValueError("pseudo-metric construction needs alpha in [1, 2)")
    limiting = alpha == 1.0
    a = 1.0 + 1e-6 if limiting else alpha
    eps, m0 = _largest_margin(a)
    part = _cover_for(g, limit)

    # Per block: group members by closed neighborhood (full-graph), pack the
    # classes on a grid, and register one identified point per class.
    point_part: list[int] = []
    point_coords: list[np.ndarray] = []
    vmap = [-1] * g.n
    biggest_class_count = 1
    for bi, block in enumerate(part.blocks):
        classes: dict[int, list[int]] = {}
        for v in block:
            classes.setdefault(g.closed_row(v), []).append(v)
        ordered = sorted(classes.values(), key=lambda c: c[0])
        k = len(ordered)
        biggest_class_count = max(biggest_class_count, k)
        grid = (
            grid_packing_linf(k, 1.0 - eps, a - 1.0 + eps)
            if k > 1
            else PointSet(np.zeros((1, 1)), norm=math.inf)
        )
        for ci, members in enumerate(ordered):
            pid = len(point_part)
            point_part.append(bi)
            point_coords.append(grid.points[ci])
            for v in members:
                vmap[v] = pid

    n_pts = len(point_part)
    reps = [-1] * n_pts
    for v in range(g.n):
        if reps[vmap[v]] == -1:
            reps[vmap[v]] = v
    dist = np.zeros((n_pts, n_pts))
    for i in range(n_pts):
        for j in range(i + 1, n_pts):
            if point_part[i] == point_part[j]:
                dij = float(np.max(np.abs(point_coords[i] - point_coords[j])))
            else:
                dij = 1.0 - eps if g.has_edge(reps[i], reps[j]) else a
            dist[i, j] = dist[j, i] = dij

    target = FiniteMetric(dist)
    violation = validate_metric(target)
    if violation is not None:
        raise RuntimeError(f"construction produced a non-metric: {violation}")

    inner = (
        int_ceil(math.log(biggest_class_count) / math.log(m0))
        if biggest_class_count > 1
        else 0
    )
    bound = int_ceil(math.log2(part.size) + LOG2_3 * inner) if part.size > 1 or inner else 0
    label = "pseudo_metric[limit at 1]" if limiting else "pseudo_metric"
    return EmbeddingResult(
        target=target,
        vertex_map=tuple(vmap),
        claimed_alpha=(0.0, alpha),
        claimed_r=1.0,
        claimed_dim_bound=bound,
        source=f"{label}[{part.mode}]",
    )


# -- coordinate embeddings of the path metric ------------------------------------


def frechet_embedding(g: Graph) -> EmbeddingResult:
    """Distance-coordinate embedding into sup-norm space: v -> (d(v, u))_u
    over landmarks u = 1..n-1. Reproduces hop distances exactly."""
    if g.n < 1:
        raise ValueError("need at least one vertex")
    d = all_pairs_distances(g)
    if not np.isfinite(d).all():
        raise ValueError("distance-coordinate embedding needs a connected graph")
    pts = d[:, 1:] if g.n > 1 else np.zeros((1, 1))
    return EmbeddingResult(
        target=PointSet(pts, norm=math.inf),
        vertex_map=_identity_map(g.n),
        claimed_alpha=(0.0, 2.0),
        claimed_r=1.5,
        claimed_dim_bound=int_ceil(LOG2_3 * (g.n - 1)) if g.n > 1 else 0,
        source="frechet",
    )


def _quotient_with_map(g: Graph) -> tuple[Graph, list[int]]:
    masks = neighborhood_class_masks(g)
    vmap = [-1] * g.n
    reps = []
    for i, mask in enumerate(masks):
        reps.append((mask & -mask).bit_length() - 1)
        for v in bits(mask):
            vmap[v] = i
    k = len(masks)
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(reps[i], reps[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(k, tuple(rows)), vmap


def frechet_quotient_embedding(g: Graph) -> EmbeddingResult:
    """Distance-coordinate embedding of the neighborhood-class quotient,
    lifted back to the vertices through the class map.

    Disconnected quotients get per-component distance coordinates plus one
    indicator axis per component, placing components at mutual distance
    2*(max eccentricity) + 1.
    """
    h, vmap = _quotient_with_map(g)
    d = all_pairs_distances(h)
    finite = d[np.isfinite(d)]
    if np.isfinite(d).all():
        coords = d[:, 1:] if h.n > 1 else np.zeros((1, 1))
    else:
        comps = connected_components(h)
        max_ecc = float(finite.max()) if finite.size else 0.0
        spread = 2.0 * max_ecc + 1.0
        cols = sum(max(len(c) - 1, 0) for c in comps) + len(comps)
        coords = np.zeros((h.n, cols))
        col = 0
        for comp in comps:
            for landmark in comp[1:]:
                for v in comp:
                    coords[v, col] = d[v, landmark]
                col += 1
        for comp in comps:
            for v in comp:
                coords[v, col] = spread
            col += 1
    return EmbeddingResult(
        target=PointSet(coords, norm=math.inf),
        vertex_map=tuple(vmap),
        claimed_alpha=(1.0, 2.0),
        claimed_r=1.5,
        claimed_dim_bound=int_ceil(LOG2_3 * h.n),
        source="frechet_quotient",
    )


# -- spectral Euclidean embedding -------------------------------------------------


def schoenberg_embedding(g: Graph) -> EmbeddingResult:
    """Euclidean embedding of the neighborhood-class quotient from a squared
    distance matrix D = A_complement + (1 - 1/lambda) A.

    lambda is the top adjacency eigenvalue of the quotient; the centered Gram
    form of D is positive semidefinite (spectral-radius argument), so classic
    double-centering + eigendecomposition recovers exact coordinates.
    Neighbors land at sqrt(1 - 1/lambda), non-neighbors at 1, giving the
    supremal level (1 - 1/lambda)^(-1/2).
    """
    h, vmap = _quotient_with_map(g)
    if h.n == 1:
        # Single neighborhood class (complete graph): one point suffices.
        return EmbeddingResult(
            target=PointSet(np.zeros((1, 1)), norm=2.0),
            vertex_map=tuple(vmap),
            claimed_alpha=(0.0, 2.0),
            claimed_r=1.0,
            claimed_dim_bound=0,
            source="schoenberg",
        )
    if h.edge_count == 0:
        raise ValueError("spectral embedding needs at least one quotient edge")
    a = h.adjacency_matrix()
    lam = float(np.linalg.eigvalsh(a)[-1])
    comp = np.ones((h.n, h.n)) - np.eye(h.n) - a
    d2 = comp + (1.0 - 1.0 / lam) * a
    j = np.eye(h.n) - np.ones((h.n, h.n)) / h.n
    gram = -0.5 * j @ d2 @ j
    w, v = np.linalg.eigh(gram)
    if w.min() < -1e-9:
        raise RuntimeError(
            f"centered Gram matrix has eigenvalue {w.min():.3e} < -1e-9; "
            "top eigenvalue was miscomputed"
        )
    w = np.clip(w, 0.0, None)
    order = np.argsort(w)[::-1]
    pos = [i for i in order if w[i] > 0.0]
    pts = v[:, pos] * np.sqrt(w[pos]) if pos else np.zeros((h.n, 1))
    if lam <= 1.0:
        amax = math.inf
        hi = 2.0
    else:
        amax = (1.0 - 1.0 / lam) ** -0.5
        hi = min(amax, 2.0)
    big = math.sqrt(max(1.0 - 1.0 / lam, 0.0))
    return EmbeddingResult(
        target=PointSet(pts, norm=2.0),
        vertex_map=tuple(vmap),
        claimed_alpha=(0.0, hi),
        claimed_r=(big + 1.0) / 2,
        claimed_dim_bound=int_ceil(LOG2_5 * pts.shape[1]),
        source="schoenberg",
    )


# -- random projection --------------------------------------------------------------


def jl_project(
    p: PointSet,
    d_target: int,
    g: Graph,
    alpha_target: float,
    seed: int,
    retries: int = 5,
    vertex_map: Sequence[int] | None = None,
) -> EmbeddingResult:
    """Project a Euclidean embedding to ``d_target`` coordinates, keeping the
    requested preservation level.

    When ``d_target`` meets or exceeds the current dimension the inclusion is
    isometric (zero-padding) and deterministic. Otherwise scaled Gaussian
    projections are retried (seeds derived per attempt) until the certificate
    passes; exhausting the budget raises with the best level achieved, which
    is a legitimate probabilistic outcome rather than a bug.
    """
    if p.norm != 2.0:
        raise ValueError("random projection expects a Euclidean point set")
    if d_target < 1:
        raise ValueError("target dimension must be >= 1")
    vmap = tuple(range(p.n)) if vertex_map is None else tuple(vertex_map)
    if len(vmap) != g.n:
        raise ValueError("vertex_map must be total over the vertex set")

    def as_result(points: np.ndarray, src: str) -> EmbeddingResult:
        return EmbeddingResult(
            target=PointSet(points, norm=2.0),
            vertex_map=vmap,
            claimed_alpha=(0.0, alpha_target),
            claimed_r=1.0,
            claimed_dim_bound=int_ceil(LOG2_5 * points.shape[1]),
            source=src,
        )

    base = as_result(p.points, "jl_input")
    base_cert = check(g, base, alpha_target)
    if not base_cert.passed:
        raise ValueError(
            f"input embedding only reaches level {base_cert.alpha_max:.6f}, "
            f"below the target {alpha_target}"
        )
    if d_target >= p.dim:
        padded = np.hstack([p.points, np.zeros((p.n, d_target - p.dim))])
        result = as_result(padded, "jl_isometric")
        return EmbeddingResult(
            target=result.target,
            vertex_map=vmap,
            claimed_alpha=(0.0, alpha_target),
            claimed_r=base_cert.r if base_cert.r is not None else 1.0,
            claimed_dim_bound=result.claimed_dim_bound,
            source="jl_isometric",
        )
    best = 0.0
    for attempt in range(retries):
        rng = rng_for(seed, attempt)
        proj = rng.standard_normal((p.dim, d_target)) / math.sqrt(d_target)
        candidate = as_result(p.points @ proj, f"jl_gaussian[attempt={attempt}]")
        cert = check(g, candidate, alpha_target)
        best = max(best, cert.alpha_max if cert.alpha_max != math.inf else best)
        if cert.passed:
            return EmbeddingResult(
                target=candidate.target,
                vertex_map=vmap,
                claimed_alpha=(0.0, alpha_target),
                claimed_r=cert.r if cert.r is not None else 1.0,
                claimed_dim_bound=candidate.claimed_dim_bound,
                source=candidate.source,
            )
        if cert.alpha_max == math.inf:
            best = math.inf
    raise JLProjectionError(
        f"projection failed {retries} attempts at level {alpha_target}; "
        f"best achieved {best:.6f}",
        best_alpha_max=best,
    )


def simplex_embedding(
    g: Graph,
    alpha: float,
    seed: int,
    retries: int = 5,
    limit: int | None = None,
) -> EmbeddingResult:
    """Unit simplex on the clique-partition blocks, then a random projection
    to ceil(12 log m / eps^2) coordinates with eps = (1-alpha^2)/(1+alpha^2).

    Valid for alpha in (1/sqrt(3), 1): that range keeps eps <= 1/2, where the
    projection's squared-distance distortion translates into the requested
    level.
    """
    if not 1 / math.sqrt(3) < alpha < 1:
        raise ValueError("simplex embedding needs alpha in (1/sqrt(3), 1)")
    part = _cover_for(g, limit)
    m = part.size
    vmap = tuple(part.part_index())
    if m == 1:
        return EmbeddingResult(
            target=PointSet(np.zeros((1, 1)), norm=2.0),
            vertex_map=vmap,
            claimed_alpha=(0.0, alpha),
            claimed_r=1.0,
            claimed_dim_bound=0,
            source=f"simplex_jl[{part.mode}]",
        )
    simplex = PointSet(np.eye(m) / math.sqrt(2.0), norm=2.0)
    eps = (1.0 - alpha * alpha) / (1.0 + alpha * alpha)
    d_target = max(1, int_ceil(12.0 * math.log(m) / (eps * eps)))
    result = jl_project(
        simplex, d_target, g, alpha, seed, retries=retries, vertex_map=vmap
    )
    return EmbeddingResult(
        target=result.target,
        vertex_map=result.vertex_map,
        claimed_alpha=result.claimed_alpha,
        claimed_r=result.claimed_r,
        claimed_dim_bound=result.claimed_dim_bound,
        source=f"simplex_jl[{part.mode},{result.source}]",
    )


# -- normalization ------------------------------------------------------------------


def center_and_normalize(p: PointSet, r: float) -> PointSet:
    """Translate the centroid to the origin and rescale so threshold r maps to 1."""
    if r <= 0:
        raise ValueError("threshold must be positive")
    pts = p.points - p.points.mean(axis=0, keepdims=True)
    return PointSet(pts / r, norm=p.norm)


# -- JSON serialization ---------------------------------------------------------------


def result_to_json(res: EmbeddingResult) -> str:
    doc: dict = {
        "source": res.source,
        "alpha_interval": list(res.claimed_alpha),
        "r": res.claimed_r,
        "dim_bound": res.claimed_dim_bound,
        "vertex_map": list(res.vertex_map),
    }
    if isinstance(res.target, PointSet):
        doc["dim"] = res.target.dim
        doc["norm"] = "inf" if res.target.norm == math.inf else int(res.target.norm)
        doc["points"] = res.target.points.tolist()
    else:
        doc["dim"] = res.target.n
        doc["pseudo"] = res.target.pseudo
        doc["distance_matrix"] = res.target.dist.tolist()
    return json.dumps(doc, indent=2)


def result_from_json(text: str) -> EmbeddingResult:
    doc = json.loads(text)
    if "points" in doc:
        norm = math.inf if doc["norm"] == "inf" else float(doc["norm"])
        target: FiniteMetric | PointSet = PointSet(np.array(doc["points"]), norm=norm)
    else:
        target = FiniteMetric(
            np.array(doc["distance_matrix"]), pseudo=bool(doc.get("pseudo", False))
        )
    return EmbeddingResult(
        target=target,
        vertex_map=tuple(doc["vertex_map"]),
        claimed_alpha=tuple(doc["alpha_interval"]),
        claimed_r=float(doc["r"]),
        claimed_dim_bound=int(doc["dim_bound"]),
        source=doc["source"],
    )
