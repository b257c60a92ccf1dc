import math

import pytest

from presdim.experiment import (
    mc_clique_number,
    mc_diameter2,
    mc_planted,
    mc_theorem2,
    parse_config,
    results_to_json,
    rows_to_csv,
    sweep,
    write_csv,
)


def test_diameter2_complete_when_q_is_one():
    res = mc_diameter2(12, 1.0, 20, seed=1)
    assert res.empirical == 1.0 and res.bound_kind == "floor"


def test_diameter2_small_n_clamps():
    res = mc_diameter2(2, 0.5, 10, seed=1)
    assert res.bound == 0.0 and res.bound_clamped


def test_diameter2_deterministic_and_parallel_consistent():
    a = mc_diameter2(20, 0.5, 60, seed=5)
    b = mc_diameter2(20, 0.5, 60, seed=5)
    assert a == b
    c = mc_diameter2(20, 0.5, 60, seed=5, jobs=2)
    assert c.empirical == a.empirical


def test_clique_ceiling_small_n_clamps():
    res = mc_clique_number(4, 30, seed=2)
    assert res.bound == 1.0 and res.bound_clamped
    assert 0.0 <= res.empirical <= 1.0


def test_clique_empirical_respects_ceiling_with_slack():
    res = mc_clique_number(36, 60, seed=3)
    sigma = math.sqrt(max(res.bound * (1 - res.bound), 1e-12) / res.trials)
    assert res.empirical <= res.bound + 3 * sigma + 1e-9


def test_theorem2_out_of_regime_flag():
    res = mc_theorem2(30, 1.0, 20, seed=4)
    assert res.extras["in_regime"] is False
    assert 0.0 <= res.empirical <= 1.0


def test_theorem2_fraction_monotone_in_level():
    fractions = []
    for alpha in (0.5, 1.0, 1.5):
        fractions.append(mc_theorem2(40, alpha, 30, seed=6).empirical)
    assert all(a <= b + 1e-12 for a, b in zip(fractions, fractions[1:]))


def test_planted_fully_clustered():
    # p=1, q=0: k disjoint cliques; classes collapse and components separate
    res = mc_planted(24, 4, 1.0, 0.0, 1.5, 10, seed=7)
    assert res.empirical == 0.0  # |C| = k, never n
    assert res.extras["frac_diameter_le_2"] == 0.0  # disconnected
    assert res.extras["mean_clique_number"] == 6.0
    assert res.extras["cluster_saliency"] == 1.0


def test_planted_requires_equal_blocks():
    with pytest.raises(ValueError):
        mc_planted(25, 4, 1.0, 0.5, 1.5, 5, seed=0)


def test_results_json():
    res = mc_diameter2(10, 0.9, 5, seed=9)
    doc = results_to_json([res])
    assert '"diameter2"' in doc


SWEEP_CFG = {
    "family": "gnp",
    "n": "10",
    "p": "0.5",
    "trials": "1",
    "seed": "11",
    "alpha_grid": "0.5,1.0,1.5",
}


def test_sweep_rows_match_grid():
    records = sweep(dict(SWEEP_CFG))
    assert len(records) == 3
    alphas = [rec.row["alpha"] for rec in records]
    assert alphas == [0.5, 1.0, 1.5]
    # one graph per trial: the sampled seed is shared across the grid
    assert len({rec.row["trial_seed"] for rec in records}) == 1


def test_sweep_empty_grid_gives_header_only():
    cfg = dict(SWEEP_CFG, alpha_grid="")
    text = rows_to_csv(sweep(cfg))
    assert text.splitlines()[0].startswith("family,")
    assert len(text.splitlines()) == 1


def test_sweep_byte_identical(tmp_path):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(sweep(dict(SWEEP_CFG)), str(p1))
    write_csv(sweep(dict(SWEEP_CFG)), str(p2))
    assert p1.read_bytes() == p2.read_bytes()


def test_sweep_malformed_config():
    with pytest.raises(ValueError):
        sweep({"family": "gnp"})  # missing n
    with pytest.raises(ValueError):
        sweep(dict(SWEEP_CFG, n="ten"))


def test_parse_config(tmp_path):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("# sweep over levels\nfamily=gnp\nn = 8\nalpha_grid=0.5,1.5\n")
    parsed = parse_config(str(cfg))
    assert parsed == {"family": "gnp", "n": "8", "alpha_grid": "0.5,1.5"}
    bad = tmp_path / "bad.txt"
    bad.write_text("family gnp\n")
    with pytest.raises(ValueError):
        parse_config(str(bad))
