"""Closed-form lower/upper bounds on the preservation dimension, aggregated
into per-graph reports.

Lower bounds scan candidate vertex subsets (connected components, small BFS
balls, user-supplied sets): any connected subset yields a valid bound, so the
heuristic subset pool is sound, merely possibly loose. Upper bounds evaluate
the printed ceiling formulas of the constructions this package implements,
and a report can cross-validate each constructive bound by actually building
the embedding and certifying it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

from .config import DEFAULT_LIMITS, Limits
from .graph import (
    Graph,
    bfs_distances,
    connected_components,
    diameter,
    quotient_by_neighborhood,
    spectrum_top2,
)
from .partition import (
    SearchBudgetExceeded,
    clique_cover,
    greedy_coloring_size,
    independence_number,
    neighborhood_class_count,
)
from .preserve import alpha2_feasible, check
from .util import int_ceil

__all__ = [
    "LowerBound",
    "UpperBound",
    "BoundReport",
    "lower_clique_partition",
    "lower_neighborhood",
    "upper_bounds",
    "theorem_formulas",
    "report",
    "report_to_json",
    "format_report",
]

LOG2_3 = math.log2(3.0)
LOG2_5 = math.log2(5.0)


@dataclass(frozen=True)
class LowerBound:
    tag: str
    value: float


@dataclass(frozen=True)
class UpperBound:
    tag: str
    value: float
    constructive: bool
    verified: bool | None = None  # None: not cross-validated
    note: str = ""


@dataclass(frozen=True)
class BoundReport:
    graph_digest: str
    alpha: float
    feasible: bool
    lower_bounds: tuple[LowerBound, ...]
    upper_bounds: tuple[UpperBound, ...]
    omitted: tuple[tuple[str, str], ...]
    interval: tuple[float, float] | None
    notes: tuple[str, ...]


# -- candidate subsets for the subset-maximized lower bounds ---------------------


def _candidate_subsets(
    g: Graph,
    extra: Sequence[Sequence[int]] | None,
    ball_radii: Sequence[int] = (1, 2, 3),
) -> list[list[int]]:
    """Connected candidate subsets with at least two vertices, deduplicated."""
    seen: set[frozenset[int]] = set()
    out: list[list[int]] = []

    def add(vertices: Sequence[int]) -> None:
        key = frozenset(vertices)
        if len(key) < 2 or key in seen:
            return
        seen.add(key)
        out.append(sorted(key))

    for comp in connected_components(g):
        add(comp)
    for v in range(g.n):
        dist = bfs_distances(g, v)
        for rad in ball_radii:
            add([u for u in range(g.n) if dist[u] <= rad])
    for subset in extra or ():
        sub = sorted(set(subset))
        if len(sub) >= 2 and math.isfinite(diameter(g.induced(sub))):
            add(sub)
    return out


def _partition_floor(g: Graph, subset: list[int], limits: Limits) -> float:
    """A certified lower bound on the minimum clique-partition size of the
    induced subgraph: exact when small, else max of an independent set and
    |U| divided by a coloring upper bound on the clique number."""
    sub = g.induced(subset)
    if sub.n <= limits.exact_cover:
        return float(clique_cover(sub, mode="exact").size)
    try:
        iota = independence_number(sub, mode="exact", budget=limits.clique_budget)
    except SearchBudgetExceeded:
        iota = independence_number(sub, mode="greedy")
    kappa_upper = max(greedy_coloring_size(sub), 1)
    return float(max(iota, sub.n / kappa_upper))


def lower_clique_partition(
    g: Graph,
    alpha: float,
    subsets: Sequence[Sequence[int]] | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> float:
    """max over candidate subsets U of log|P(G|U)| / log(4 diam(G|U) / alpha).

    Returns -inf when no connected candidate subset exists (the stated
    convention for an empty maximum).
    """
    if not 0 < alpha < 2:
        raise ValueError("clique-partition bound needs alpha in (0, 2)")
    best = -math.inf
    for subset in _candidate_subsets(g, subsets):
        sub = g.induced(subset)
        diam = diameter(sub)
        if not math.isfinite(diam) or diam < 1:
            continue
        floor = _partition_floor(g, subset, limits)
        if floor < 1:
            continue
        best = max(best, math.log(floor) / math.log(4.0 * diam / alpha))
    return best


def lower_neighborhood(
    g: Graph,
    alpha: float,
    subsets: Sequence[Sequence[int]] | None = None,
    limits: Limits = DEFAULT_LIMITS,
) -> float:
    """max over candidate subsets U of log|C(G|U)| / log(4 diam(G|U)/(alpha-1)).

    Neighborhood classes are counted with respect to the full graph (that is
    what makes the count monotone under subsets); the diameter is of the
    induced subgraph. Only meaningful for alpha in (1, 2).
    """
    if not 1 < alpha < 2:
        raise ValueError("neighborhood bound needs alpha in (1, 2)")
    best = -math.inf
    for subset in _candidate_subsets(g, subsets):
        sub = g.induced(subset)
        diam = diameter(sub)
        if not math.isfinite(diam) or diam < 1:
            continue
        classes = neighborhood_class_count(g, subset)
        best = max(best, math.log(classes) / math.log(4.0 * diam / (alpha - 1.0)))
    return best


# -- upper bound formulas --------------------------------------------------------


def _class_counts_per_block(g: Graph, blocks) -> int:
    worst = 1
    for block in blocks:
        worst = max(worst, len({g.closed_row(v) for v in block}))
    return worst


def upper_bounds(
    g: Graph,
    alpha: float,
    limits: Limits = DEFAULT_LIMITS,
) -> tuple[list[UpperBound], list[tuple[str, str]]]:
    """Evaluate every applicable printed upper-bound formula.

    The clique-partition size enters upper formulas, so a greedy (over-)count
    is still valid when the graph is too large for the exact cover.
    """
    if not 0 < alpha < 2:
        raise ValueError("upper bounds cover alpha in (0, 2)")
    part = clique_cover(g, mode="exact" if g.n <= limits.exact_cover else "greedy")
    m = part.size
    c_size = neighborhood_class_count(g)
    ups: list[UpperBound] = []
    omitted: list[tuple[str, str]] = []

    ups.append(
        UpperBound(
            "shortest_path",
            float(int_ceil(math.log2(g.n))) if g.n > 1 else 0.0,
            constructive=True,
        )
    )

    if alpha < 1:
        v = (
            float(int_ceil(LOG2_3 * int_ceil(math.log(m) / math.log(int_ceil(1 / alpha)))))
            if m > 1
            else 0.0
        )
        ups.append(UpperBound("linf_collapse", v, constructive=True))
    else:
        omitted.append(("linf_collapse", "needs alpha < 1"))

    if alpha == 1:
        ups.append(
            UpperBound(
                "pseudo_metric",
                float(int_ceil(math.log2(m) + LOG2_3)),
                constructive=True,
                note="limit realization of the (1, 2) construction",
            )
        )
    elif alpha > 1:
        big_k = _class_counts_per_block(g, part.blocks)
        m0 = int_ceil(1.0 / (alpha - 1.0))
        inner = int_ceil(math.log(big_k) / math.log(m0)) if big_k > 1 else 0
        v = float(int_ceil(math.log2(m) + LOG2_3 * inner)) if (m > 1 or inner) else 0.0
        ups.append(UpperBound("pseudo_metric", v, constructive=True))
    else:
        omitted.append(("pseudo_metric", "needs alpha >= 1"))

    if alpha >= 1:
        ups.append(
            UpperBound(
                "linf_quotient", float(int_ceil(LOG2_3 * c_size)), constructive=True
            )
        )
    else:
        omitted.append(("linf_quotient", "collapse bound already applies below 1"))

    if alpha < 1 / math.sqrt(2):
        inner = int_ceil(4.0 * math.log(m + 1) / (2.0 - 4.0 * alpha * alpha))
        ups.append(
            UpperBound(
                "l2_ball_collapse", float(int_ceil(LOG2_5 * inner)), constructive=True
            )
        )
    else:
        omitted.append(("l2_ball_collapse", "needs alpha < 1/sqrt(2)"))

    if 1 / math.sqrt(3) < alpha < 1:
        ratio = (1.0 + alpha * alpha) / (1.0 - alpha * alpha)
        inner = int_ceil(12.0 * ratio * ratio * math.log(m)) if m > 1 else 0
        ups.append(
            UpperBound(
                "l2_simplex_jl", float(int_ceil(LOG2_5 * inner)), constructive=True
            )
        )
    elif alpha < 1:
        omitted.append(("l2_simplex_jl", "needs alpha in (1/sqrt(3), 1)"))
    else:
        omitted.append(("l2_simplex_jl", "needs alpha < 1"))

    if alpha >= 1:
        quotient = quotient_by_neighborhood(g)
        if quotient.edge_count == 0:
            omitted.append(("l2_spectral", "quotient has no edges"))
        else:
            lam = spectrum_top2(quotient)[0]
            ceiling = math.inf if lam <= 1 else (1.0 - 1.0 / (4.0 * lam)) ** -0.5
            if alpha < ceiling:
                inner = min(int_ceil(192.0 * lam * lam * math.log(c_size)), c_size - 1)
                ups.append(
                    UpperBound(
                        "l2_spectral",
                        float(int_ceil(LOG2_5 * inner)),
                        constructive=True,
                    )
                )
            else:
                omitted.append(
                    ("l2_spectral", f"alpha >= (1 - 1/(4 lambda))^-1/2 = {ceiling:.6f}")
                )
    else:
        omitted.append(("l2_spectral", "spectral route targets alpha >= 1"))

    degs = set(g.degrees())
    if len(degs) == 1 and g.n > 1:
        k = degs.pop()
        if k >= 1 and alpha < math.sqrt(1.0 + 1.0 / (4.0 * k)):
            ups.append(
                UpperBound(
                    "l2_regular",
                    float(int_ceil(192.0 * k * k * math.log(g.n))),
                    constructive=True,
                )
            )
        elif k >= 1:
            omitted.append(("l2_regular", "alpha outside (0, sqrt(1 + 1/(4k)))"))
        else:
            omitted.append(("l2_regular", "edgeless graph"))
    else:
        omitted.append(("l2_regular", "graph is not regular"))

    return ups, omitted


# -- named theorem formulas -------------------------------------------------------


def _clamped(x: float) -> tuple[float, bool]:
    if x < 0.0:
        return 0.0, True
    if x > 1.0:
        return 1.0, True
    return x, False


def cluster_saliency(p: float, q: float) -> float:
    """Interpolation weight p - q + pq between clustered and unclustered regimes."""
    return p - q + p * q


def diameter2_probability_floor(n: int, q: float) -> tuple[float, bool]:
    """Floor on P[diameter <= 2] when edges appear with probability >= q;
    clamped into [0, 1] (vacuous values flagged)."""
    return _clamped(1.0 - n * n * math.exp(-q * q * (n - 1)))


def clique_number_markov_ceiling(n: int) -> tuple[float, bool]:
    """Ceiling on P[clique number >= ceil(2 sqrt(n))]: n^m 2^(-C(m,2)), clamped."""
    m = math.ceil(2.0 * math.sqrt(n))
    log2_val = m * math.log2(n) - m * (m - 1) / 2.0
    return _clamped(2.0**log2_val)


def regular_diameter_bound(n: int, k: int) -> int:
    """Spectral diameter ceiling for k-regular graphs (k >= 4, n >= 6 even)."""
    return int_ceil(math.log(n - 1) / math.log(k / (2.0 * math.sqrt(k - 1.0) + 0.5)))


def theorem_formulas(
    n: int | None = None,
    alpha: float | None = None,
    k: int | None = None,
    p: float | None = None,
    q: float | None = None,
    c: float = 1.0,
    lam: float | None = None,
    log_size: float | None = None,
    R: float | None = None,
) -> dict[str, object]:
    """Evaluate every named closed-form bound whose parameters were supplied.

    Ratios of same-base logarithms are computed base-free (natural logs);
    formulas that print a base-2 logarithm use base 2. Probability bounds are
    clamped into [0, 1] and flagged when vacuous.
    """
    out: dict[str, object] = {}
    notes: list[str] = []
    if n is not None and alpha is not None and 0 < alpha < 2:
        out["typical_gnp_lower"] = (math.log(n) - 2 * math.log(2)) / (
            2 * math.log(8 / alpha)
        )
        out["typical_gnp_fraction_floor"] = 1.0 - 2.0 ** (-n / 5.0)
        if n < 82:
            notes.append("typical_gnp bounds are stated for n >= 82")
    if n is not None and alpha is not None and k is not None and k >= 4:
        diam = regular_diameter_bound(n, k)
        out["regular_diameter_bound"] = diam
        out["typical_regular_lower"] = math.log(n / (k + 1)) / math.log(
            (4.0 / alpha) * diam
        )
        out["typical_regular_failure_probability"] = "O(n^(-k+2))"
        notes.append(
            "regular-graph failure probability is reported symbolically; "
            "its constant is not specified"
        )
    if n is not None and alpha is not None and 1 < alpha < 2:
        out["normed_space_lower"] = n / (3.0 * math.log2(16.0 / (alpha - 1.0)))
        out["planted_recovery_lower"] = math.log(n) / math.log(8.0 / (alpha - 1.0))
    if n is not None:
        out["euclidean_recovery_lower"] = n / 15.0 - 0.25
    if log_size is not None and n is not None and R is not None and alpha is not None:
        out["family_lower"] = log_size / (n * math.log(8.0 * R / (alpha - 1.0)))
    if p is not None and q is not None:
        xi = cluster_saliency(p, q)
        out["cluster_saliency"] = xi
        if n is not None and k is not None and alpha is not None and 0 < alpha < 2:
            out["planted_lower"] = (
                (1.0 - xi) * math.log(n) + xi * math.log(k / (2.0 * c))
            ) / math.log(8.0 / alpha)
            notes.append(
                "planted bound uses log(k/2c) as printed in the theorem "
                "statement; the surrounding discussion prints log(k/3c)"
            )
        if n is not None and k is not None:
            val, clamped = _clamped(
                1.0
                - n * n * (max(q, 1.0 - q) ** (2.0 * n * (1.0 - c / k))
                           + math.exp(-q * q * (n - 1)))
            )
            out["planted_recovery_floor"] = val
            if clamped:
                notes.append("planted_recovery_floor clamped (vacuous bound)")
    if n is not None and q is not None:
        val, clamped = diameter2_probability_floor(n, q)
        out["diameter2_floor"] = val
        if clamped:
            notes.append("diameter2_floor clamped (vacuous bound)")
    if n is not None:
        val, clamped = clique_number_markov_ceiling(n)
        out["clique_markov_ceiling"] = val
        if clamped:
            notes.append("clique_markov_ceiling clamped (vacuous bound)")
    if lam is not None:
        out["l2_level_ceiling"] = (
            math.inf if lam <= 1.0 else (1.0 - 1.0 / lam) ** -0.5
        )
    if notes:
        out["_notes"] = notes
    return out


# -- aggregation -------------------------------------------------------------------


def _validate_constructive(g: Graph, alpha: float, tag: str) -> tuple[bool, str]:
    """Build the embedding behind an upper-bound tag and certify it at alpha."""
    from . import construct as ct

    try:
        if tag == "shortest_path":
            emb = ct.shortest_path_metric(g)
        elif tag == "linf_collapse":
            emb = ct.clique_collapse_linf(g, alpha)
        elif tag == "pseudo_metric":
            emb = ct.pseudo_metric_embedding(g, alpha)
        elif tag == "linf_quotient":
            emb = ct.frechet_quotient_embedding(g)
        elif tag == "l2_ball_collapse":
            emb = ct.ball_collapse_l2(g, alpha, seed=0)
        elif tag == "l2_simplex_jl":
            emb = ct.simplex_embedding(g, alpha, seed=0)
        elif tag in ("l2_spectral", "l2_regular"):
            base = ct.schoenberg_embedding(g)
            c_size = base.n_points
            if tag == "l2_spectral":
                quotient = quotient_by_neighborhood(g)
                lam = spectrum_top2(quotient)[0]
                d = min(int_ceil(192.0 * lam * lam * math.log(c_size)), c_size)
            else:
                k = g.degree(0)
                d = min(int_ceil(192.0 * k * k * math.log(g.n)), g.n)
            emb = ct.jl_project(
                base.target, max(d, 1), g, alpha, seed=0, vertex_map=base.vertex_map
            )
        else:
            return False, f"no construction registered for {tag}"
    except Exception as exc:  # noqa: BLE001 - negative outcome is reportable
        return False, f"{type(exc).__name__}: {exc}"
    cert = check(g, emb, alpha)
    return cert.passed, "" if cert.passed else "certificate failed"


def report(
    g: Graph,
    alpha: float,
    subsets: Sequence[Sequence[int]] | None = None,
    limits: Limits = DEFAULT_LIMITS,
    validate: bool | None = None,
) -> BoundReport:
    """Aggregate feasibility, lower bounds, and upper bounds at one level.

    ``validate`` controls whether constructive uppers are built and
    certified; default: only for graphs up to the validation size limit.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    notes: list[str] = []
    if alpha >= 2:
        feasible = alpha2_feasible(g)
        if not feasible:
            return BoundReport(
                graph_digest=g.digest(),
                alpha=alpha,
                feasible=False,
                lower_bounds=(),
                upper_bounds=(),
                omitted=(),
                interval=None,
                notes=("levels >= 2 need every component to induce a clique",),
            )
        ncomp = len(connected_components(g))
        value = 2.0 if ncomp > 1 else 0.0
        return BoundReport(
            graph_digest=g.digest(),
            alpha=alpha,
            feasible=True,
            lower_bounds=(LowerBound("trivial_nonneg", 0.0),),
            upper_bounds=(
                UpperBound(
                    "point_per_clique_component",
                    value,
                    constructive=True,
                    note="clique components collapse to separated points on a line",
                ),
            ),
            omitted=(),
            interval=(0.0, value),
            notes=(),
        )

    lowers = [LowerBound("trivial_nonneg", 0.0)]
    lc = lower_clique_partition(g, alpha, subsets=subsets, limits=limits)
    lowers.append(LowerBound("clique_partition_cover", lc))
    if alpha > 1:
        lowers.append(
            LowerBound(
                "neighborhood_classes",
                lower_neighborhood(g, alpha, subsets=subsets, limits=limits),
            )
        )

    ups, omitted = upper_bounds(g, alpha, limits=limits)
    if validate is None:
        validate = g.n <= limits.report_validation
    if validate:
        checked = []
        for ub in ups:
            ok, why = _validate_constructive(g, alpha, ub.tag)
            checked.append(
                UpperBound(ub.tag, ub.value, ub.constructive, verified=ok, note=why or ub.note)
            )
        ups = checked

    max_lower = max(lb.value for lb in lowers)
    min_upper = min(ub.value for ub in ups)
    return BoundReport(
        graph_digest=g.digest(),
        alpha=alpha,
        feasible=True,
        lower_bounds=tuple(lowers),
        upper_bounds=tuple(ups),
        omitted=tuple(omitted),
        interval=(max_lower, min_upper),
        notes=tuple(notes),
    )


def report_to_json(rep: BoundReport) -> str:
    def num(x: float) -> float | str:
        if math.isinf(x):
            return "-inf" if x < 0 else "inf"
        return x

    doc = {
        "graph_digest": rep.graph_digest,
        "alpha": rep.alpha,
        "feasible": rep.feasible,
        "lower_bounds": [[lb.tag, num(lb.value)] for lb in rep.lower_bounds],
        "upper_bounds": [
            {
                "tag": ub.tag,
                "value": num(ub.value),
                "constructive": ub.constructive,
                "verified": ub.verified,
                "note": ub.note,
            }
            for ub in rep.upper_bounds
        ],
        "omitted": [list(pair) for pair in rep.omitted],
        "interval": None if rep.interval is None else [num(x) for x in rep.interval],
        "notes": list(rep.notes),
    }
    return json.dumps(doc, indent=2)


def format_report(rep: BoundReport) -> str:
    lines = [
        f"graph {rep.graph_digest}  alpha={rep.alpha}  feasible={rep.feasible}",
    ]
    if rep.lower_bounds:
        lines.append("lower bounds:")
        for lb in rep.lower_bounds:
            lines.append(f"  {lb.tag:<24} {lb.value:.6g}")
    if rep.upper_bounds:
        lines.append("upper bounds:")
        for ub in rep.upper_bounds:
            mark = "" if ub.verified is None else ("  [verified]" if ub.verified else "  [FAILED]")
            note = f"  ({ub.note})" if ub.note else ""
            lines.append(f"  {ub.tag:<24} {ub.value:.6g}{mark}{note}")
    for tag, reason in rep.omitted:
        lines.append(f"  {tag:<24} omitted: {reason}")
    if rep.interval is not None:
        lines.append(f"interval: [{rep.interval[0]:.6g}, {rep.interval[1]:.6g}]")
    for note in rep.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)
