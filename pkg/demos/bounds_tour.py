#!/usr/bin/env python3
"""Tour of the dimension bounds: how many doubling dimensions does a graph
need before neighbors can sit strictly inside a threshold and non-neighbors
at a multiple of it?

Run: python3 demos/bounds_tour.py
"""

import math

from presdim import (
    gen_gnp,
    gen_named,
    lower_clique_partition,
    lower_neighborhood,
    report,
    theorem_formulas,
)
from presdim.bounds import format_report

print("=" * 72)
print("1. A star: many leaves crammed into a diameter-2 ball")
print("=" * 72)
star = gen_named("star", 100)
value = lower_clique_partition(star, 1.0)
print(f"subset-maximized clique-partition bound at level 1: {value:.4f}")
print(f"  (99 leaves are pairwise non-adjacent, diameter 2: ln 99 / ln 8 = "
      f"{math.log(99)/math.log(8):.4f})")

print()
print("=" * 72)
print("2. A cycle: large partitions but large diameter, so no obstruction")
print("=" * 72)
cyc = gen_named("cycle", 30)
print(f"cycle on 30 vertices, level 1.0: bound = {lower_clique_partition(cyc, 1.0):.4f}")

print()
print("=" * 72)
print("3. Two matched cliques: invisible to the clique-partition bound,")
print("   caught by the neighborhood-class bound once levels exceed 1")
print("=" * 72)
tcm = gen_named("two_cliques_matched", 10)
print(f"clique-partition bound at 1.5:   {lower_clique_partition(tcm, 1.5):.4f}")
print(f"neighborhood-class bound at 1.5: {lower_neighborhood(tcm, 1.5):.4f}")
print(f"  (10 distinct closed neighborhoods, diameter 2: ln 10 / ln 16 = "
      f"{math.log(10)/math.log(16):.4f})")

print()
print("=" * 72)
print("4. Full report on a random graph, three levels")
print("=" * 72)
g = gen_gnp(16, 0.5, seed=7)
for alpha in (0.5, 1.0, 1.5):
    print(f"--- level {alpha} " + "-" * 50)
    print(format_report(report(g, alpha)))

print()
print("=" * 72)
print("5. Closed-form values for typical graphs and planted clusters")
print("=" * 72)
f = theorem_formulas(n=82, alpha=1.0)
print(f"typical-graph floor at n=82:        {f['typical_gnp_lower']:.4f} "
      f"(holds for {f['typical_gnp_fraction_floor']:.6f} of graphs)")
f = theorem_formulas(n=150)
print(f"Euclidean recoverability floor:     {f['euclidean_recovery_lower']}")
f = theorem_formulas(n=1024, k=16, c=1.0, p=0.5, q=0.5, alpha=1.0)
print(f"planted partition (unclustered):    {f['planted_lower']:.4f} "
      f"(saliency {f['cluster_saliency']})")
f = theorem_formulas(n=1024, k=16, c=1.0, p=1.0, q=0.3, alpha=1.0)
print(f"planted partition (clustered):      {f['planted_lower']:.4f} "
      f"(saliency {f['cluster_saliency']})")
