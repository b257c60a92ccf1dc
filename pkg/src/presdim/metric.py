"""Finite metric spaces and normed point sets; covering, packing, doubling.

Ball centers are restricted to the points of the metric itself, which is
the standard (and decidable) choice for finite spaces: the finite space IS
the ambient space, so its open balls are exactly the point-centered ones.
All ball predicates use strict inequality (open balls).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import DEFAULT_LIMITS
from .graph import bits

__all__ = [
    "FiniteMetric",
    "PointSet",
    "MetricViolation",
    "validate_metric",
    "induced_metric",
    "covering_number",
    "packing_number",
    "doubling_dimension",
    "write_metric",
    "read_metric",
    "write_points",
    "read_points",
]

METRIC_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class FiniteMetric:
    """Symmetric nonnegative distance matrix with zero diagonal.

    ``pseudo=True`` permits zero distance between distinct points.
    """

    dist: np.ndarray
    pseudo: bool = False

    def __post_init__(self) -> None:
        d = np.asarray(self.dist, dtype=np.float64)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValueError("distance matrix must be square")
        object.__setattr__(self, "dist", d)

    @property
    def n(self) -> int:
        return self.dist.shape[0]


@dataclass(frozen=True, eq=False)
class PointSet:
    """Coordinate vectors under an l_p norm, p in {1, 2, inf}."""

    points: np.ndarray
    norm: float = 2.0

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 2:
            raise ValueError("points must be a 2-d array (n, d)")
        if self.norm not in (1.0, 2.0, math.inf):
            raise ValueError("norm must be 1, 2, or inf")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def distance_matrix(self) -> np.ndarray:
        pts = self.points
        if pts.shape[1] == 0:
            return np.zeros((self.n, self.n))
        diff = pts[:, None, :] - pts[None, :, :]
        if self.norm == math.inf:
            d = np.abs(diff).max(axis=2)
        elif self.norm == 1.0:
            d = np.abs(diff).sum(axis=2)
        else:
            d = np.sqrt((diff * diff).sum(axis=2))
        d = 0.5 * (d + d.T)
        np.fill_diagonal(d, 0.0)
        return d


def induced_metric(p: PointSet) -> FiniteMetric:
    """Pairwise distances of a point set; pseudo iff points coincide."""
    d = p.distance_matrix()
    off = ~np.eye(p.n, dtype=bool)
    pseudo = bool(p.n > 1 and np.any(d[off] == 0.0))
    return FiniteMetric(d, pseudo=pseudo)


# -- metric axioms -------------------------------------------------------------


@dataclass(frozen=True)
class MetricViolation:
    axiom: str  # "symmetry" | "diagonal" | "nonnegativity" | "identity" | "triangle"
    witness: tuple[int, ...]
    detail: str


def validate_metric(m: FiniteMetric, tol: float = METRIC_TOL) -> MetricViolation | None:
    """Return the first violated metric axiom with a witness, or None."""
    d = m.dist
    n = m.n
    asym = np.abs(d - d.T)
    if n and asym.max() > tol:
        i, j = np.unravel_index(int(np.argmax(asym)), asym.shape)
        return MetricViolation("symmetry", (int(i), int(j)), f"|d_ij - d_ji| = {asym[i, j]:.3g}")
    diag = np.abs(np.diag(d))
    if n and diag.max() > tol:
        i = int(np.argmax(diag))
        return MetricViolation("diagonal", (i,), f"d_ii = {d[i, i]:.3g}")
    if n and d.min() < -tol:
        i, j = np.unravel_index(int(np.argmin(d)), d.shape)
        return MetricViolation("nonnegativity", (int(i), int(j)), f"d_ij = {d[i, j]:.3g}")
    if not m.pseudo and n > 1:
        off = d + np.diag(np.full(n, np.inf))
        if off.min() <= 0.0:
            i, j = np.unravel_index(int(np.argmin(off)), off.shape)
            return MetricViolation(
                "identity", (int(i), int(j)), "zero distance between distinct points"
            )
    for i in range(n):
        # excess[j, k] = d[i, k] - d[i, j] - d[j, k]
        excess = d[i][None, :] - d[i][:, None] - d
        worst = excess.max()
        if worst > tol:
            j, k = np.unravel_index(int(np.argmax(excess)), excess.shape)
            return MetricViolation(
                "triangle", (i, int(j), int(k)), f"excess = {worst:.3g}"
            )
    return None


# -- covering numbers ----------------------------------------------------------


def _ball_masks(d: np.ndarray, subset: Sequence[int], eps: float) -> list[int]:
    """For every center point, the bitmask of subset members it covers."""
    masks = []
    sub = np.asarray(subset, dtype=int)
    for c in range(d.shape[0]):
        inside = d[c, sub] < eps
        mask = 0
        for i in np.nonzero(inside)[0]:
            mask |= 1 << int(i)
        masks.append(mask)
    return masks


def _greedy_cover(universe: int, sets: list[int]) -> int:
    count = 0
    left = universe
    while left:
        best, best_gain = -1, 0
        for i, s in enumerate(sets):
            gain = (s & left).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        if best_gain == 0:
            raise ValueError("subset cannot be covered at this radius")
        left &= ~sets[best]
        count += 1
    return count


def _min_cover(universe: int, sets: list[int]) -> int:
    """Exact minimum set cover by branch and bound."""
    if universe == 0:
        return 0
    sets = [s & universe for s in sets if s & universe]
    # Drop dominated sets.
    sets.sort(key=lambda s: -s.bit_count())
    kept: list[int] = []
    for s in sets:
        if not any(s | k == k for k in kept):
            kept.append(s)
    sets = kept
    best = _greedy_cover(universe, sets)
    max_size = max(s.bit_count() for s in sets)

    def bnb(left: int, used: int) -> None:
        nonlocal best
        if left == 0:
            best = min(best, used)
            return
        if used + math.ceil(left.bit_count() / max_size) >= best:
            return
        # Branch on the uncovered element with the fewest candidate sets.
        elem, fewest = -1, None
        for e in bits(left):
            cands = [s for s in sets if (s >> e) & 1]
            if fewest is None or len(cands) < len(fewest):
                elem, fewest = e, cands
                if len(cands) <= 1:
                    break
        if not fewest:
            return  # uncoverable element: no solution down this branch
        for s in sorted(fewest, key=lambda s: -(s & left).bit_count()):
            bnb(left & ~s, used + 1)

    bnb(universe, 0)
    return best


def covering_number(
    m: FiniteMetric,
    subset: Sequence[int] | None,
    eps: float,
    mode: str = "exact",
    limit: int | None = None,
) -> int:
    """Minimum number of open eps-balls (centered at points of m) covering subset.

    Greedy mode (max-coverage) returns an upper bound on the exact value.
    """
    if eps <= 0:
        raise ValueError("radius must be positive")
    sub = list(range(m.n)) if subset is None else list(subset)
    if not sub:
        return 0
    limit = DEFAULT_LIMITS.exact_covering_number if limit is None else limit
    if mode == "exact" and len(sub) > limit:
        raise ValueError(f"exact covering limited to |subset| <= {limit}, got {len(sub)}")
    universe = (1 << len(sub)) - 1
    masks = _ball_masks(m.dist, sub, eps)
    if mode == "exact":
        return _min_cover(universe, masks)
    if mode != "greedy":
        raise ValueError("mode must be 'exact' or 'greedy'")
    return _greedy_cover(universe, masks)


def packing_number(
    m: FiniteMetric,
    subset: Sequence[int] | None,
    eps: float,
    mode: str = "exact",
    limit: int | None = None,
) -> int:
    """Largest subset with pairwise distance >= eps.

    Exact mode solves a maximum independent set on the conflict graph
    (equivalently max clique on the compatibility graph); greedy mode runs a
    farthest-point sweep and lower-bounds the exact value.
    """
    if eps <= 0:
        raise ValueError("packing distance must be positive")
    sub = list(range(m.n)) if subset is None else list(subset)
    k = len(sub)
    if k == 0:
        return 0
    limit = DEFAULT_LIMITS.exact_covering_number if limit is None else limit
    d = m.dist
    if mode == "exact":
        if k > limit:
            raise ValueError(f"exact packing limited to |subset| <= {limit}, got {k}")
        from .graph import Graph
        from .partition import clique_number

        rows = [0] * k
        for i in range(k):
            for j in range(i + 1, k):
                if d[sub[i], sub[j]] >= eps:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return clique_number(Graph(k, tuple(rows)), mode="exact")
    if mode != "greedy":
        raise ValueError("mode must be 'exact' or 'greedy'")
    chosen = [sub[0]]
    rest = sub[1:]
    while rest:
        gaps = [min(d[p, c] for c in chosen) for p in rest]
        best = max(range(len(rest)), key=lambda i: (gaps[i], -rest[i]))
        if gaps[best] < eps:
            break
        chosen.append(rest.pop(best))
    return len(chosen)


# -- doubling dimension --------------------------------------------------------


def doubling_dimension(
    m: FiniteMetric, mode: str = "exact", limit: int | None = None
) -> int:
    """Smallest d such that every open ball is covered by <= 2^d half-radius balls.

    Radii are scanned over all pairwise distances and tiny upward
    perturbations of each; ball contents only change at those thresholds.
    Returns ceil(log2) of the worst cover size.
    """
    limit = DEFAULT_LIMITS.exact_doubling if limit is None else limit
    if m.n == 0:
        raise ValueError("doubling dimension of an empty space is undefined")
    if mode == "exact" and m.n > limit:
        raise ValueError(f"exact doubling limited to n <= {limit}, got {m.n}")
    if mode not in ("exact", "greedy"):
        raise ValueError("mode must be 'exact' or 'greedy'")
    d = m.dist
    positive = sorted({float(x) for x in d[np.triu_indices(m.n, k=1)] if x > 0})
    radii: list[float] = []
    for r in positive:
        radii.append(r)
        radii.append(r * (1 + 1e-9))
    worst = 1
    for r in radii:
        half = r / 2
        for x in range(m.n):
            ball = [i for i in range(m.n) if d[x, i] < r]
            if len(ball) <= worst:
                continue
            cover = covering_number(m, ball, half, mode=mode, limit=max(limit, m.n))
            worst = max(worst, cover)
    return (worst - 1).bit_length()


# -- text formats ---------------------------------------------------------------
# FiniteMetric: first line "n", then n rows of n space-separated reals.
# PointSet: first line "n d p", then n coordinate rows.


def write_metric(m: FiniteMetric, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"{m.n}\n")
        for row in m.dist:
            fh.write(" ".join(repr(float(x)) for x in row) + "\n")


def read_metric(path: str, pseudo: bool = False) -> FiniteMetric:
    with open(path) as fh:
        lines = [ln for ln in (s.strip() for s in fh) if ln and not ln.startswith("#")]
    n = int(lines[0])
    rows = [[float(tok) for tok in ln.split()] for ln in lines[1 : n + 1]]
    return FiniteMetric(np.array(rows), pseudo=pseudo)


def write_points(p: PointSet, path: str) -> None:
    norm = "inf" if p.norm == math.inf else str(int(p.norm))
    with open(path, "w") as fh:
        fh.write(f"{p.n} {p.dim} {norm}\n")
        for row in p.points:
            fh.write(" ".join(repr(float(x)) for x in row) + "\n")


def read_points(path: str) -> PointSet:
    with open(path) as fh:
        lines = [ln for ln in (s.strip() for s in fh) if ln and not ln.startswith("#")]
    n_tok, d_tok, p_tok = lines[0].split()
    n, dim = int(n_tok), int(d_tok)
    norm = math.inf if p_tok == "inf" else float(p_tok)
    rows = [[float(tok) for tok in ln.split()] for ln in lines[1 : n + 1]]
    pts = np.array(rows, dtype=np.float64).reshape(n, dim)
    return PointSet(pts, norm=norm)
