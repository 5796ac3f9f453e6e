"""Operator means: named trio, axioms, ordering, non-monotone rejects."""

import math

import numpy as np
import pytest

from statgeom import (
    SingularError,
    ValidationError,
    arithmetic_mean,
    geometric_mean,
    harmonic_mean,
    mean_axioms_check,
    mean_function,
    operator_mean,
    operator_monotone_test,
    psd_order_geq,
    random_psd,
    square_monotonicity_counterexample,
    substream,
    validate_mean_function,
)

A2 = np.array([[2.0, 1.0], [1.0, 2.0]])


def _random_pd_pair(dim, rng):
    a = random_psd(dim, rng) + 0.05 * np.eye(dim)
    b = random_psd(dim, rng) + 0.05 * np.eye(dim)
    return a, b


def test_commuting_means_frozen():
    a = np.diag([1.0, 4.0]).astype(complex)
    b = np.diag([4.0, 1.0]).astype(complex)
    assert np.allclose(geometric_mean(a, b), np.diag([2.0, 2.0]), atol=1e-13)
    assert np.allclose(arithmetic_mean(a, b), np.diag([2.5, 2.5]), atol=1e-15)
    assert np.allclose(harmonic_mean(a, b), np.diag([1.6, 1.6]), atol=1e-13)


def test_geometric_mean_with_identity_is_sqrt():
    g = geometric_mean(A2, np.eye(2))
    d = (math.sqrt(3.0) + 1.0) / 2.0
    o = (math.sqrt(3.0) - 1.0) / 2.0
    assert np.allclose(g, [[d, o], [o, d]], atol=1e-13)


def test_geometric_mean_solves_riccati(rng):
    # G A^{-1} G = B characterizes the geometric mean of positive A, B
    for dim in (2, 3, 5):
        a, b = _random_pd_pair(dim, rng)
        g = geometric_mean(a, b)
        assert np.allclose(g @ np.linalg.inv(a) @ g, b, atol=1e-10)


def test_geometric_mean_is_symmetric(rng):
    a, b = _random_pd_pair(4, rng)
    assert np.allclose(geometric_mean(a, b), geometric_mean(b, a), atol=1e-10)


def test_harmonic_mean_matches_resolvent_formula(rng):
    # 2 (A^{-1} + B^{-1})^{-1}, computed without the sandwich construction
    a, b = _random_pd_pair(3, rng)
    direct = 2.0 * np.linalg.inv(np.linalg.inv(a) + np.linalg.inv(b))
    assert np.allclose(harmonic_mean(a, b), direct, atol=1e-11)


def test_arithmetic_mean_routes_agree(rng):
    a, b = _random_pd_pair(3, rng)
    assert np.allclose(
        operator_mean(a, b, "arithmetic"), (a + b) / 2.0, atol=1e-11
    )


def test_operator_mean_accepts_callable(rng):
    a, b = _random_pd_pair(3, rng)
    named = operator_mean(a, b, "geometric")
    custom = operator_mean(a, b, np.sqrt)
    assert np.allclose(named, custom, atol=1e-12)


def test_mean_ordering_harmonic_geometric_arithmetic(rng):
    for dim in (2, 3, 4, 5):
        for _ in range(10):
            a, b = _random_pd_pair(dim, rng)
            h = harmonic_mean(a, b)
            g = geometric_mean(a, b)
            m = arithmetic_mean(a, b)
            assert psd_order_geq(g, h)
            assert psd_order_geq(m, g)


def test_idempotence(rng):
    a = random_psd(4, rng) + 0.05 * np.eye(4)
    for name in ("arithmetic", "geometric", "harmonic"):
        assert np.allclose(operator_mean(a, a, name), a, atol=1e-11)


def test_operator_mean_requires_invertible_first_argument():
    with pytest.raises(SingularError):
        operator_mean(np.diag([1.0, 0.0]), np.eye(2), "geometric")


def test_validate_mean_function():
    validate_mean_function(lambda t: (1.0 + t) / 2.0)
    with pytest.raises(ValidationError):
        validate_mean_function(lambda t: t)  # f(1) = 1 but not symmetric
    with pytest.raises(ValidationError):
        validate_mean_function(lambda t: 2.0 * t / (1.0 + t) + 0.1)  # f(1) != 1


def test_mean_function_lookup():
    f = mean_function("geometric")
    assert f(4.0) == pytest.approx(2.0)
    with pytest.raises(ValidationError):
        mean_function("quadratic")


def test_axioms_hold_for_named_means():
    for name in ("arithmetic", "geometric", "harmonic"):
        report = mean_axioms_check(name, seed=3, trials=60)
        assert report["violations"] == 0, report


def test_operator_monotone_search_clears_sqrt():
    report = operator_monotone_test(np.sqrt, dim=3, seed=1, trials=200)
    assert report["counterexample"] is None
    assert report["min_gap"] > -1e-9


def test_operator_monotone_search_rejects_square():
    report = operator_monotone_test(lambda t: t**2, dim=2, seed=1, trials=500)
    assert report["counterexample"] is not None
    assert report["counterexample"]["min_eigenvalue"] < -1e-6
    a = report["counterexample"]["a"]
    b = report["counterexample"]["b"]
    # the witness pair really is ordered, and really violates after squaring
    assert np.linalg.eigvalsh(a - b)[0] >= -1e-9
    assert np.linalg.eigvalsh(a @ a - b @ b)[0] < -1e-6


def test_square_counterexample_frozen():
    report = square_monotonicity_counterexample()
    assert np.allclose(report["a"], [[2.0, 1.0], [1.0, 1.0]])
    assert np.allclose(report["b"], [[1.0, 0.0], [0.0, 0.0]])
    assert report["a_minus_b_min_eigenvalue"] >= -1e-12
    assert np.allclose(report["square_diff"], [[4.0, 3.0], [3.0, 2.0]])
    assert report["square_diff_min_eigenvalue"] == pytest.approx(
        3.0 - math.sqrt(10.0), abs=1e-12
    )
