"""Verify neighborhood preservation of concrete embeddings.

An embedding preserves a graph at level ``alpha`` when one threshold r > 0
puts every adjacent pair strictly inside r and every non-adjacent pair at
distance at least alpha*r. Feasibility is therefore the strict inequality
m > alpha*M, where M is the largest embedded neighbor distance and m the
smallest embedded non-neighbor distance; the supremal level is the ratio
m/M. Boundary levels fail: the supremum is not attained.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, asdict
from typing import Any

import numpy as np

from .graph import Graph, connected_components, all_pairs_distances
from .metric import FiniteMetric, PointSet

__all__ = [
    "PreservationCertificate",
    "vertex_distance_matrix",
    "alpha_max",
    "check",
    "alpha2_feasible",
    "measured_distortion",
    "certificate_to_json",
    "certificate_from_json",
]


@dataclass(frozen=True)
class PreservationCertificate:
    """Outcome of verifying one embedding against one graph at one level.

    ``r`` is a concrete witness threshold (None when the check fails);
    ``max_neighbor``/``min_nonneighbor`` are the measured extremes M and m,
    with the conventions M = 0 for edgeless graphs and m = inf when every
    pair is adjacent.
    """

    graph_digest: str
    space: str
    r: float | None
    max_neighbor: float
    min_nonneighbor: float
    alpha_max: float
    requested_alpha: float
    passed: bool


def _adjacency_masks(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    adj = g.adjacency_matrix() > 0
    off = ~np.eye(g.n, dtype=bool)
    return adj, (~adj) & off


def vertex_distance_matrix(g: Graph, emb: Any) -> tuple[np.ndarray, str]:
    """Vertex-indexed distance matrix plus a short space descriptor.

    Accepts a raw (n, n) array, a FiniteMetric or PointSet on the vertices,
    or any embedding result exposing ``target`` and ``vertex_map``.
    """
    if isinstance(emb, np.ndarray):
        if emb.shape != (g.n, g.n):
            raise ValueError("distance matrix shape must match vertex count")
        return np.asarray(emb, dtype=np.float64), f"matrix[{g.n}]"
    if isinstance(emb, FiniteMetric):
        if emb.n != g.n:
            raise ValueError("metric size must match vertex count")
        return emb.dist, f"metric[{g.n}]"
    if isinstance(emb, PointSet):
        if emb.n != g.n:
            raise ValueError("point count must match vertex count")
        norm = "inf" if emb.norm == math.inf else str(int(emb.norm))
        return emb.distance_matrix(), f"l{norm}^{emb.dim}"
    if hasattr(emb, "target") and hasattr(emb, "vertex_map"):
        target = emb.target
        vmap = list(emb.vertex_map)
        if len(vmap) != g.n:
            raise ValueError("vertex_map must be total over the vertex set")
        if isinstance(target, PointSet):
            base = target.distance_matrix()
            norm = "inf" if target.norm == math.inf else str(int(target.norm))
            kind = f"l{norm}^{target.dim}"
        else:
            base = target.dist
            kind = f"metric[{target.n}]"
        idx = np.asarray(vmap, dtype=int)
        source = getattr(emb, "source", "embedding")
        return base[np.ix_(idx, idx)], f"{source}:{kind}"
    raise TypeError(f"unsupported embedding object {type(emb).__name__}")


def _extremes(g: Graph, dists: np.ndarray) -> tuple[float, float]:
    adj, nonadj = _adjacency_masks(g)
    m_neigh = float(dists[adj].max()) if adj.any() else 0.0
    m_non = float(dists[nonadj].min()) if nonadj.any() else math.inf
    return m_neigh, m_non


def alpha_max(g: Graph, emb: Any) -> float:
    """Supremal preservation level of an embedding: m/M with conventions.

    Preservation holds exactly for levels strictly below the returned value.
    Coincident non-neighbors force 0; an edgeless extreme side forces inf.
    """
    dists, _ = vertex_distance_matrix(g, emb)
    big, small = _extremes(g, dists)
    if small == 0.0:
        return 0.0
    if big == 0.0 or small == math.inf:
        return math.inf
    return small / big


def check(g: Graph, emb: Any, alpha: float) -> PreservationCertificate:
    """Certify whether ``emb`` preserves ``g`` at level ``alpha``.

    On success the witness threshold is recorded as
    r = (M + min(m/alpha, next larger distance)) / 2, which satisfies
    M < r and alpha*r <= m.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    dists, space = vertex_distance_matrix(g, emb)
    big, small = _extremes(g, dists)
    if small == 0.0:
        amax = 0.0
    elif big == 0.0 or small == math.inf:
        amax = math.inf
    else:
        amax = small / big
    passed = small > alpha * big
    r: float | None = None
    if passed:
        caps = []
        if small != math.inf:
            caps.append(small / alpha)
        larger = dists[dists > big]
        if larger.size:
            caps.append(float(larger.min()))
        r = (big + min(caps)) / 2 if caps else big + 1.0
    return PreservationCertificate(
        graph_digest=g.digest(),
        space=space,
        r=r,
        max_neighbor=big,
        min_nonneighbor=small,
        alpha_max=amax,
        requested_alpha=alpha,
        passed=passed,
    )


def alpha2_feasible(g: Graph) -> bool:
    """True iff every connected component induces a clique.

    This characterizes the graphs that still admit preservation at levels
    >= 2 (one point per component, any tiny threshold).
    """
    for comp in connected_components(g):
        mask = 0
        for v in comp:
            mask |= 1 << v
        for v in comp:
            if (g.closed_row(v) & mask) != mask:
                return False
    return True


def measured_distortion(g: Graph, p: PointSet) -> float:
    """Best-scaling distortion of a point set against the shortest-path metric.

    Computed as (max ratio)/(min ratio) of embedded over path distance across
    all vertex pairs; the scale constant cancels. Requires a connected graph.
    """
    if p.n != g.n:
        raise ValueError("point count must match vertex count")
    paths = all_pairs_distances(g)
    if math.isinf(paths.max()):
        raise ValueError("distortion needs a connected graph")
    if g.n < 2:
        return 1.0
    emb = p.distance_matrix()
    iu = np.triu_indices(g.n, k=1)
    ratios = emb[iu] / paths[iu]
    lo = float(ratios.min())
    if lo == 0.0:
        return math.inf
    return float(ratios.max()) / lo


# -- JSON serialization ---------------------------------------------------------


def certificate_to_json(cert: PreservationCertificate) -> str:
    d = asdict(cert)
    for key in ("r", "max_neighbor", "min_nonneighbor", "alpha_max"):
        if d[key] is not None and math.isinf(d[key]):
            d[key] = "inf"
    return json.dumps(d, indent=2)


def certificate_from_json(text: str) -> PreservationCertificate:
    d = json.loads(text)
    for key in ("r", "max_neighbor", "min_nonneighbor", "alpha_max"):
        if d[key] == "inf":
            d[key] = math.inf
    return PreservationCertificate(**d)
