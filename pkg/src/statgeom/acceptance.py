"""End-to-end verification suite.

Ten numbered criteria, each a deterministic seeded experiment exercising
one headline property of the library at fixed tolerances: classical
sphere geometry, monotonicity, the multinomial ellipse, operator-mean
ordering and axioms, monotone-metric consistency, the qubit hemisphere,
fidelity/lift/M contracts, measurement optimality, the pure-state
ambiguity formula, and the boundary billiard theorem.  Each criterion
returns a report dict with ``passed``, diagnostic metrics, and its
runtime; ``run_all`` executes the lot.
"""

from __future__ import annotations

import time

import numpy as np

from .billiard import verify_billiard_theorem
from .bures import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    bures_angle,
    fidelity,
    horizontal_lift,
    qubit_bures_ds2,
    qubit_perturbation,
    qubit_state,
)
from .classical import (
    euclidean_distance,
    fisher_rao_ds2,
    fr_geodesic_distance,
    monotonicity_stress,
    multinomial_ellipse_experiment,
    sphere_embed,
)
from .errors import NumericalError
from .linalg import hs_norm, matrix_sqrt, min_eigenvalue, psd_order_geq
from .means import (
    arithmetic_mean,
    geometric_mean,
    harmonic_mean,
    mean_axioms_check,
    operator_monotone_test,
)
from .measurement import (
    fuchs_caves_operator,
    povm_classical_angle,
    pure_state_qubit_angle,
    qubit_povm_search,
)
from .monotone import density_matrix, monotone_ds2
from .sampling import (
    random_density_matrix,
    random_povm,
    random_probability_vector,
    random_psd,
    random_traceless_hermitian,
    substream,
)

__all__ = ["DEFAULT_SEED", "CRITERIA", "run_criterion", "run_all"]

DEFAULT_SEED = 1729


def _mixed_state(dim: int, rng: np.random.Generator, mix: float = 0.1) -> np.ndarray:
    """Random full-rank state, blended toward the maximally mixed one."""
    rho = random_density_matrix(dim, rng)
    return density_matrix((1.0 - mix) * rho + mix * np.eye(dim) / dim)


def criterion_1_sphere(seed: int) -> tuple[bool, dict]:
    """Simplex geodesic distance == great-circle arc between embeddings."""
    rng = substream(seed, "acceptance-1")
    worst = 0.0
    for k in range(1000):
        n = 2 + k % 5
        p = random_probability_vector(n, rng)
        q = random_probability_vector(n, rng)
        direct = fr_geodesic_distance(p, q)
        cosine = float(np.dot(sphere_embed(p), sphere_embed(q)))
        arc = float(np.arccos(np.clip(cosine, 0.0, 1.0)))
        worst = max(worst, abs(direct - arc))
    return worst <= 1e-10, {"pairs": 1000, "max_abs_diff": worst, "tol": 1e-10}


def criterion_2_monotonicity(seed: int) -> tuple[bool, dict]:
    """No Fisher-Rao stretching under 10^4 random stochastic maps."""
    report = monotonicity_stress(seed, trials=10_000)
    p = np.array([1.0, 0.0, 0.0])
    q = np.array([0.0, 0.5, 0.5])
    t = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 1.0]])
    before = euclidean_distance(p, q)
    after = euclidean_distance(t @ p, t @ q)
    flat_ok = (
        abs(before - np.sqrt(1.5)) <= 1e-12
        and abs(after - np.sqrt(2.0)) <= 1e-12
        and after > before
    )
    passed = report["violations"] == 0 and flat_ok
    return passed, {
        "trials": 10_000,
        "violations": report["violations"],
        "max_excess": report["max_excess"],
        "flat_before": before,
        "flat_after": after,
        "flat_counterexample_reproduced": flat_ok,
    }


def criterion_3_multinomial(seed: int) -> tuple[bool, dict]:
    """Empirical frequency covariance within 5% of the multinomial law."""
    p = np.full(3, 1.0 / 3.0)
    report = multinomial_ellipse_experiment(
        p, samples_per_trial=100_000, trials=10_000, seed=seed
    )
    return report["max_rel_err"] <= 0.05, {
        "samples_per_trial": 100_000,
        "trials": 10_000,
        "max_rel_err": report["max_rel_err"],
        "tol": 0.05,
    }


def criterion_4_means(seed: int) -> tuple[bool, dict]:
    """Mean ordering, the four mean axioms, and the t^2 counterexample."""
    rng = substream(seed, "acceptance-4")
    min_slack = np.inf
    ordering_ok = True
    for k in range(1000):
        dim = 2 + k % 5
        a = random_psd(dim, rng) + 0.01 * np.eye(dim)
        b = random_psd(dim, rng) + 0.01 * np.eye(dim)
        h = harmonic_mean(a, b)
        g = geometric_mean(a, b)
        m = arithmetic_mean(a, b)
        min_slack = min(min_slack, min_eigenvalue(g - h), min_eigenvalue(m - g))
        if not (psd_order_geq(g, h, tol=1e-9) and psd_order_geq(m, g, tol=1e-9)):
            ordering_ok = False
    axiom_reports = {
        name: mean_axioms_check(name, seed, trials=300)
        for name in ("arithmetic", "geometric", "harmonic")
    }
    axioms_ok = all(r["violations"] == 0 for r in axiom_reports.values())
    square = operator_monotone_test(lambda t: t * t, dim=2, seed=seed, trials=10_000)
    found = square["counterexample"] is not None
    passed = ordering_ok and axioms_ok and found
    return passed, {
        "ordering_pairs": 1000,
        "ordering_min_slack": float(min_slack),
        "axiom_violations": {k: r["violations"] for k, r in axiom_reports.items()},
        "square_counterexample_found": found,
        "square_min_gap": square["min_gap"],
    }


def criterion_5_monotone_consistency(seed: int) -> tuple[bool, dict]:
    """Bures finite differences converge at third order to monotone_ds2."""
    rng = substream(seed, "acceptance-5")
    steps = 0.02 * 0.5 ** np.arange(5)
    min_order = np.inf
    orders = []
    for k in range(100):
        dim = 2 + k % 3
        rho = _mixed_state(dim, rng, mix=0.3)
        drho = random_traceless_hermitian(dim, rng)
        drho = drho / hs_norm(drho)
        ds2 = monotone_ds2(rho, drho, "arithmetic")
        errs = []
        for t in steps:
            angle = bures_angle(rho, density_matrix(rho + t * drho))
            errs.append(abs(angle * angle - ds2 * t * t))
        errs = np.maximum(np.asarray(errs), 1e-300)
        order = float(np.polyfit(np.log2(steps), np.log2(errs), 1)[0])
        orders.append(order)
        min_order = min(min_order, order)
    diag_worst = 0.0
    for k in range(50):
        dim = 2 + k % 3
        lam = random_probability_vector(dim, rng) * 0.9 + 0.1 / dim
        lam = lam / lam.sum()
        dp = rng.normal(size=dim)
        dp -= dp.mean()
        classical = fisher_rao_ds2(lam, dp)
        for f in ("arithmetic", "geometric", "harmonic"):
            quantum = monotone_ds2(np.diag(lam.astype(complex)), np.diag(dp.astype(complex)), f)
            diag_worst = max(diag_worst, abs(quantum - classical))
    passed = min_order >= 2.5 and diag_worst <= 1e-12
    return passed, {
        "samples": 100,
        "min_observed_order": float(min_order),
        "median_observed_order": float(np.median(orders)),
        "order_tol": 2.5,
        "diagonal_max_abs_diff": diag_worst,
        "diagonal_tol": 1e-12,
    }


def criterion_6_hemisphere(seed: int) -> tuple[bool, dict]:
    """Closed-form qubit line element == monotone metric with arithmetic f."""
    rng = substream(seed, "acceptance-6")
    worst = 0.0
    for _ in range(1000):
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        r = 0.95 * rng.uniform() ** (1.0 / 3.0)
        x, y, z = r * direction
        dx, dy, dz = rng.normal(size=3)
        closed = qubit_bures_ds2(x, y, z, dx, dy, dz)
        general = monotone_ds2(
            qubit_state(x, y, z), qubit_perturbation(dx, dy, dz), "arithmetic"
        )
        worst = max(worst, abs(closed - general))
    return worst <= 1e-10, {"points": 1000, "max_abs_diff": worst, "tol": 1e-10}


def criterion_7_fidelity_lift(seed: int) -> tuple[bool, dict]:
    """Fidelity symmetry and the lift/M algebraic contracts."""
    rng = substream(seed, "acceptance-7")
    worst = {"symmetry": 0.0, "lift_trace": 0.0, "riccati": 0.0, "inverse": 0.0}
    for k in range(1000):
        dim = 2 + k % 4
        rho1 = _mixed_state(dim, rng)
        rho2 = _mixed_state(dim, rng)
        f12 = fidelity(rho1, rho2)
        worst["symmetry"] = max(worst["symmetry"], abs(f12 - fidelity(rho2, rho1)))
        a1 = matrix_sqrt(rho1)
        a2 = horizontal_lift(rho1, rho2, a1)
        lift_trace = complex(np.trace(a1.conj().T @ a2))
        worst["lift_trace"] = max(
            worst["lift_trace"], abs(lift_trace - np.sqrt(f12))
        )
        m12 = fuchs_caves_operator(rho1, rho2)
        m21 = fuchs_caves_operator(rho2, rho1)
        worst["riccati"] = max(worst["riccati"], hs_norm(m12 @ rho1 @ m12 - rho2))
        worst["inverse"] = max(
            worst["inverse"], hs_norm(m12 @ m21 - np.eye(dim))
        )
    passed = (
        worst["symmetry"] <= 1e-10
        and worst["lift_trace"] <= 1e-9
        and worst["riccati"] <= 1e-9
        and worst["inverse"] <= 1e-9
    )
    return passed, {"pairs": 1000, **{f"max_{k}": v for k, v in worst.items()}}


def criterion_8_optimality(seed: int) -> tuple[bool, dict]:
    """Axis search attains the Bures angle; no POVM ever beats it."""
    rng = substream(seed, "acceptance-8")
    worst_angle_gap = 0.0
    worst_axis_gap = 0.0
    for _ in range(100):
        rho1 = _mixed_state(2, rng)
        rho2 = _mixed_state(2, rng)
        report = qubit_povm_search(rho1, rho2, grid_resolution=200)
        target = bures_angle(rho1, rho2)
        worst_angle_gap = max(worst_angle_gap, abs(report["best_angle"] - target))
        m = fuchs_caves_operator(rho1, rho2)
        m_axis = np.array(
            [
                float(np.trace(m @ SIGMA_X).real),
                float(np.trace(m @ SIGMA_Y).real),
                float(np.trace(m @ SIGMA_Z).real),
            ]
        )
        m_axis /= np.linalg.norm(m_axis)
        cosine = abs(float(np.dot(report["best_axis"], m_axis)))
        worst_axis_gap = max(worst_axis_gap, float(np.arccos(min(1.0, cosine))))
    worst_excess = -np.inf
    for k in range(1000):
        dim = 2 + k % 3
        rho1 = _mixed_state(dim, rng)
        rho2 = _mixed_state(dim, rng)
        elements = random_povm(dim, dim + 2, rng)
        excess = povm_classical_angle(elements, rho1, rho2) - bures_angle(rho1, rho2)
        worst_excess = max(worst_excess, excess)
    passed = (
        worst_angle_gap <= 1e-4
        and worst_axis_gap <= np.pi / 200
        and worst_excess <= 1e-9
    )
    return passed, {
        "search_pairs": 100,
        "max_angle_gap": worst_angle_gap,
        "angle_tol": 1e-4,
        "max_axis_gap": worst_axis_gap,
        "axis_tol": float(np.pi / 200),
        "random_povms": 1000,
        "max_suboptimality_excess": float(worst_excess),
    }


def criterion_9_ambiguity(seed: int) -> tuple[bool, dict]:
    """Analytic pure-pair diameter formula == measured classical angle."""
    worst = 0.0
    points = 0
    thetas = np.linspace(0.1, np.pi - 0.1, 25)
    fractions = np.linspace(0.0, 1.0, 20)
    for theta in thetas:
        rho1 = qubit_state(0.0, 0.0, 1.0)
        rho2 = qubit_state(np.sin(theta), 0.0, np.cos(theta))
        for frac in fractions:
            for inside in (True, False):
                theta_a = frac * (theta / 2 if inside else (np.pi - theta) / 2)
                beta = theta_a if inside else -theta_a
                axis = np.array([np.sin(beta), 0.0, np.cos(beta)])
                proj_up = 0.5 * (
                    np.eye(2, dtype=complex)
                    + axis[0] * SIGMA_X + axis[1] * SIGMA_Y + axis[2] * SIGMA_Z
                )
                elements = [proj_up, np.eye(2, dtype=complex) - proj_up]
                measured = povm_classical_angle(elements, rho1, rho2)
                analytic = pure_state_qubit_angle(theta, theta_a, inside=inside)
                worst = max(worst, abs(measured - analytic))
                points += 1
    return worst <= 1e-9, {"grid_points": points, "max_abs_diff": worst, "tol": 1e-9}


def criterion_10_billiard(seed: int) -> tuple[bool, dict]:
    """Bounce kernel states are M's eigenstates, 200 runs per dimension."""
    rng = substream(seed, "acceptance-10")
    per_dim = {}
    all_ok = True
    total_runs = 0
    total_flagged = 0
    for dim in (2, 3, 4, 5):
        flagged = 0
        mismatched = 0
        wrong_count = 0
        failures = 0
        for _ in range(200):
            rho1 = _mixed_state(dim, rng, mix=0.15)
            rho2 = _mixed_state(dim, rng, mix=0.15)
            try:
                report = verify_billiard_theorem(rho1, rho2)
            except NumericalError:
                failures += 1
                continue
            if report["flagged"]:
                flagged += 1
                continue
            if len(report["bounce_ts"]) != dim:
                wrong_count += 1
            if not report["matched"]:
                mismatched += 1
        per_dim[dim] = {
            "flagged": flagged,
            "mismatched": mismatched,
            "wrong_count": wrong_count,
            "failures": failures,
        }
        total_runs += 200
        total_flagged += flagged
        if mismatched or wrong_count or failures:
            all_ok = False
    flagged_fraction = total_flagged / total_runs
    passed = all_ok and flagged_fraction < 0.05
    return passed, {
        "runs_per_dim": 200,
        "per_dim": {str(k): v for k, v in per_dim.items()},
        "flagged_fraction": flagged_fraction,
        "flagged_tol": 0.05,
    }


CRITERIA = [
    (1, "fisher-rao-sphere-equivalence", criterion_1_sphere),
    (2, "classical-monotonicity", criterion_2_monotonicity),
    (3, "multinomial-ellipse", criterion_3_multinomial),
    (4, "mean-ordering-and-axioms", criterion_4_means),
    (5, "monotone-metric-consistency", criterion_5_monotone_consistency),
    (6, "qubit-hemisphere", criterion_6_hemisphere),
    (7, "fidelity-and-lift-contracts", criterion_7_fidelity_lift),
    (8, "measurement-optimality", criterion_8_optimality),
    (9, "pure-state-ambiguity", criterion_9_ambiguity),
    (10, "billiard-theorem", criterion_10_billiard),
]


def run_criterion(number: int, seed: int = DEFAULT_SEED) -> dict:
    """Run one numbered criterion and return its report."""
    for num, name, func in CRITERIA:
        if num == number:
            start = time.perf_counter()
            passed, details = func(seed)
            return {
                "criterion": num,
                "name": name,
                "seed": seed,
                "passed": bool(passed),
                "details": details,
                "runtime_s": time.perf_counter() - start,
            }
    raise ValueError(f"no criterion numbered {number}")


def run_all(seed: int = DEFAULT_SEED) -> list[dict]:
    """Run all ten criteria in order."""
    return [run_criterion(num, seed) for num, _, _ in CRITERIA]
