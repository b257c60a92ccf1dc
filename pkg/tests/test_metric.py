import math

import numpy as np
import pytest

from presdim.graph import gen_gnp, gen_named
from presdim.construct import shortest_path_metric
from presdim.metric import (
    FiniteMetric,
    PointSet,
    covering_number,
    doubling_dimension,
    induced_metric,
    packing_number,
    read_metric,
    read_points,
    validate_metric,
    write_metric,
    write_points,
)

from oracles import (
    covering_number_brute,
    doubling_dimension_brute,
    packing_number_brute,
)


def _uniform(n):
    return FiniteMetric(np.ones((n, n)) - np.eye(n))


def _line(coords):
    return induced_metric(PointSet(np.array(coords, dtype=float)[:, None], norm=2.0))


def _random_points(rng, n, d=2):
    return PointSet(rng.random((n, d)), norm=2.0)


def test_induced_metric_examples():
    collinear = _line([0.0, 1.0, 2.0])
    assert collinear.dist[0, 2] == 2.0
    simplex = induced_metric(PointSet(np.eye(4), norm=2.0))
    off = ~np.eye(4, dtype=bool)
    assert np.allclose(simplex.dist[off], math.sqrt(2))
    corner = induced_metric(PointSet(np.array([[0.0, 0.0], [1.0, 1.0]]), norm=math.inf))
    assert corner.dist[0, 1] == 1.0


def test_covering_examples():
    assert covering_number(_uniform(5), None, 0.5) == 5
    assert covering_number(_uniform(5), None, 1.5) == 1
    assert covering_number(_line([0, 1, 2, 3]), None, 1.1) == 2


def test_packing_examples():
    assert packing_number(_uniform(5), None, 1.0) == 5
    assert packing_number(_line([0, 1, 2, 3]), None, 2.0) == 2
    m = _line([0, 0.3, 1.1, 2.0, 5.0])
    assert packing_number(m, None, 1e-12) == 5


def test_covering_and_packing_match_brute():
    rng = np.random.default_rng(14)
    for _ in range(15):
        n = int(rng.integers(2, 9))
        m = induced_metric(_random_points(rng, n))
        eps = float(rng.uniform(0.05, 0.9))
        assert covering_number(m, None, eps) == covering_number_brute(m.dist, range(n), eps)
        assert packing_number(m, None, eps) == packing_number_brute(m.dist, range(n), eps)
        sub = [i for i in range(n) if rng.random() < 0.7]
        if sub:
            assert covering_number(m, sub, eps) == covering_number_brute(m.dist, sub, eps)


def test_greedy_modes_bound_exact():
    rng = np.random.default_rng(15)
    for _ in range(15):
        n = int(rng.integers(2, 11))
        m = induced_metric(_random_points(rng, n))
        eps = float(rng.uniform(0.05, 0.8))
        assert covering_number(m, None, eps, mode="greedy") >= covering_number(m, None, eps)
        assert packing_number(m, None, eps, mode="greedy") <= packing_number(m, None, eps)


def test_packing_covering_sandwich():
    # packing(2 eps) <= covering(eps) <= packing(eps)
    rng = np.random.default_rng(16)
    for _ in range(15):
        n = int(rng.integers(2, 12))
        m = induced_metric(_random_points(rng, n))
        eps = float(rng.uniform(0.05, 0.6))
        cover = covering_number(m, None, eps)
        assert packing_number(m, None, 2 * eps) <= cover <= packing_number(m, None, eps)


def test_exact_mode_limits():
    m = _uniform(25)
    with pytest.raises(ValueError):
        covering_number(m, None, 0.5, mode="exact")
    with pytest.raises(ValueError):
        packing_number(m, None, 0.5, mode="exact")
    with pytest.raises(ValueError):
        doubling_dimension(_uniform(16), mode="exact")


def test_doubling_examples():
    assert doubling_dimension(FiniteMetric(np.zeros((1, 1)))) == 0
    assert doubling_dimension(_uniform(4)) == 2
    for n in (2, 5, 9, 14):
        assert doubling_dimension(_uniform(n)) <= math.ceil(math.log2(n))


def test_doubling_matches_brute():
    rng = np.random.default_rng(17)
    for _ in range(10):
        n = int(rng.integers(2, 8))
        m = induced_metric(_random_points(rng, n))
        assert doubling_dimension(m) == doubling_dimension_brute(m.dist)


def test_doubling_greedy_upper_bounds_exact():
    rng = np.random.default_rng(18)
    for _ in range(8):
        m = induced_metric(_random_points(rng, 9))
        assert doubling_dimension(m, mode="greedy") >= doubling_dimension(m)


def test_covering_growth_against_estimate():
    # covering(B_R(x), eps) <= (2R/eps)^(2 d) for the estimated dimension d
    rng = np.random.default_rng(19)
    for _ in range(8):
        n = int(rng.integers(3, 10))
        m = induced_metric(_random_points(rng, n))
        d_est = doubling_dimension(m)
        for _ in range(5):
            x = int(rng.integers(0, n))
            big_r = float(rng.uniform(0.2, 1.2))
            eps = float(rng.uniform(0.05, big_r * 0.99))
            ball = [i for i in range(n) if m.dist[x, i] < big_r]
            cover = covering_number(m, ball, eps)
            assert cover <= (2 * big_r / eps) ** (2 * d_est) + 1e-9


def test_validate_metric():
    g = gen_gnp(10, 0.6, 4)
    spm = shortest_path_metric(g)
    assert validate_metric(spm.target) is None

    bad = np.array([[0, 1, 3], [1, 0, 1], [3, 1, 0]], dtype=float)
    violation = validate_metric(FiniteMetric(bad))
    assert violation is not None and violation.axiom == "triangle"
    assert violation.witness == (0, 1, 2)

    kissing = np.array([[0, 0.0], [0.0, 0]])
    violation = validate_metric(FiniteMetric(kissing, pseudo=False))
    assert violation is not None and violation.axiom == "identity"
    assert validate_metric(FiniteMetric(kissing, pseudo=True)) is None

    asym = np.array([[0, 1.0], [2.0, 0]])
    assert validate_metric(FiniteMetric(asym)).axiom == "symmetry"


def test_metric_serialization_round_trip(tmp_path):
    m = shortest_path_metric(gen_named("cycle", 5)).target
    path = tmp_path / "m.txt"
    write_metric(m, str(path))
    back = read_metric(str(path))
    assert np.array_equal(back.dist, m.dist)


def test_points_serialization_round_trip(tmp_path):
    p = PointSet(np.array([[0.0, 1.5], [2.0, -0.25]]), norm=math.inf)
    path = tmp_path / "p.txt"
    write_points(p, str(path))
    back = read_points(str(path))
    assert np.array_equal(back.points, p.points) and back.norm == math.inf
