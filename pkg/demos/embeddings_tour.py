#!/usr/bin/env python3
"""Tour of the constructive embeddings: build each one on a sample graph,
certify it, and measure the doubling dimension it actually lands in.

Run: python3 demos/embeddings_tour.py
"""

import math

import numpy as np

from presdim import (
    JLProjectionError,
    alpha_max,
    check,
    clique_collapse_linf,
    doubling_dimension,
    frechet_embedding,
    frechet_quotient_embedding,
    gen_gnp,
    gen_named,
    induced_metric,
    jl_project,
    pseudo_metric_embedding,
    schoenberg_embedding,
    shortest_path_metric,
    simplex_embedding,
    validate_metric,
)
from presdim.metric import PointSet


def show(g, emb, alpha):
    cert = check(g, emb, alpha)
    target = emb.target
    metric = induced_metric(target) if isinstance(target, PointSet) else target
    dd = doubling_dimension(metric) if metric.n <= 14 else None
    dd_txt = f"doubling={dd}" if dd is not None else "doubling=(skipped, large)"
    print(f"  {emb.source:<28} level {alpha:<5} pass={cert.passed!s:<5} "
          f"supremal={cert.alpha_max:.4f}  claimed_dim<={emb.claimed_dim_bound}  {dd_txt}")


g = gen_named("two_cliques_matched", 10)
print("graph: two matched 5-cliques (10 vertices, 25 edges)")
print()
print("level 0.8 (overlap allowed between neighbor and non-neighbor ranges):")
show(g, shortest_path_metric(g), 0.8)
show(g, clique_collapse_linf(g, 0.8), 0.8)
show(g, simplex_embedding(g, 0.8, seed=3), 0.8)

print()
print("level 1.5 (recoverable: thresholding the distances returns the graph):")
show(g, shortest_path_metric(g), 1.5)
show(g, pseudo_metric_embedding(g, 1.5), 1.5)
show(g, frechet_quotient_embedding(g), 1.5)

print()
print("the pseudo-metric construction is a genuine metric:")
emb = pseudo_metric_embedding(g, 1.5)
print(f"  axiom check: {validate_metric(emb.target) or 'all axioms hold'}")

print()
print("spectral route: squared distances 1 - 1/lambda (edges) vs 1 (non-edges)")
c4 = gen_named("cycle", 4)
emb = schoenberg_embedding(c4)
print(f"  4-cycle: supremal level {alpha_max(c4, emb):.6f} (sqrt(2) = {math.sqrt(2):.6f})")

g2 = gen_gnp(24, 0.5, seed=11)
emb = schoenberg_embedding(g2)
print(f"  G(24, 1/2): supremal level {alpha_max(g2, emb):.4f} "
      f"in {emb.target.dim} Euclidean coordinates")

print()
print("random projection: meaningful targets need dimension ~ 12 log(n)/eps^2;")
print("below that the retry budget runs out and the best level is reported")
kmm = gen_named("complete_bipartite", 50)
simplex = PointSet(np.eye(50) / math.sqrt(2), norm=2.0)
loose = jl_project(simplex, 30, kmm, 0.35, seed=5)
print(f"  50-point simplex -> 30 coordinates at level 0.35: "
      f"supremal {alpha_max(kmm, loose):.4f} ({loose.source})")
try:
    jl_project(simplex, 3, kmm, 0.9, seed=5, retries=4)
except JLProjectionError as err:
    print(f"  ... -> 3 coordinates at level 0.9: {err}")

print()
print("distance coordinates reproduce hop distances exactly:")
path = gen_named("path", 6)
emb = frechet_embedding(path)
print(f"  path on 6 vertices -> sup-norm in {emb.target.dim} coordinates, "
      f"supremal level {alpha_max(path, emb):.1f}")
