"""Quantum measurements and statistical distinguishability.

A POVM turns a pair of density matrices into a pair of classical outcome
distributions, whose Fisher-Rao angle can never exceed the Bures angle of
the states.  The bound is reached by the projective measurement in the
eigenbasis of the operator

    M(rho1, rho2) = rho1^(-1/2) sqrt(sqrt(rho1) rho2 sqrt(rho1)) rho1^(-1/2),

the geometric mean of rho1^(-1) and rho2.  The module provides the POVM
plumbing, the operator M, the optimal projective measurement, a brute
force qubit axis search that rediscovers it, and the closed-form answer
for a pair of pure qubit states measured along an arbitrary diameter of
their Bloch-disk section.
"""

from __future__ import annotations

import numpy as np

from .classical import fr_geodesic_distance, probability_vector
from .errors import DimensionMismatchError, DomainError, ValidationError
from .linalg import (
    eig_hermitian,
    hermitian_part,
    is_hermitian,
    matrix_inv_sqrt,
    matrix_sqrt,
    min_eigenvalue,
)
from .monotone import density_matrix
from .bures import bloch_vector

__all__ = [
    "povm",
    "induced_distribution",
    "povm_classical_angle",
    "fuchs_caves_operator",
    "optimal_measurement",
    "qubit_povm_search",
    "pure_state_qubit_angle",
]


def povm(elements) -> list[np.ndarray]:
    """Validate a POVM: PSD elements of equal shape resolving the identity."""
    if len(elements) == 0:
        raise ValidationError("a POVM needs at least one element")
    checked = []
    for k, e in enumerate(elements):
        e = np.asarray(e, dtype=complex)
        if e.shape != np.shape(elements[0]):
            raise DimensionMismatchError("POVM elements must share one shape")
        if not is_hermitian(e):
            raise ValidationError(f"POVM element {k} is not Hermitian")
        e = hermitian_part(e)
        if min_eigenvalue(e) < -1e-12:
            raise ValidationError(f"POVM element {k} is not positive semidefinite")
        checked.append(e)
    total = sum(checked)
    if np.max(np.abs(total - np.eye(total.shape[0]))) > 1e-10:
        raise ValidationError("POVM elements must sum to the identity")
    return checked


def induced_distribution(elements, rho) -> np.ndarray:
    """Outcome distribution p_k = Tr(E_k rho) of a POVM on a state."""
    elements = povm(elements)
    rho = density_matrix(rho)
    if elements[0].shape != rho.shape:
        raise DimensionMismatchError(
            f"POVM acts on dim {elements[0].shape[0]}, state has dim {rho.shape[0]}"
        )
    probs = [float(np.trace(e @ rho).real) for e in elements]
    return probability_vector(probs)


def povm_classical_angle(elements, rho1, rho2) -> float:
    """Fisher-Rao angle between the outcome distributions of one POVM.

    Bounded above by the Bures angle of the two states for every POVM.
    """
    p = induced_distribution(elements, rho1)
    q = induced_distribution(elements, rho2)
    return fr_geodesic_distance(p, q)


def fuchs_caves_operator(rho1, rho2) -> np.ndarray:
    """The operator M with rho2 = M rho1 M, optimal for telling the states apart.

    M = rho1^(-1/2) sqrt(sqrt(rho1) rho2 sqrt(rho1)) rho1^(-1/2) is Hermitian
    and positive semidefinite, coincides with the geometric mean of
    rho1^(-1) and rho2, and obeys M(rho1, rho2) M(rho2, rho1) = identity,
    so both argument orders define the same projective measurement.
    ``rho1`` must be invertible (SingularError otherwise).
    """
    rho1 = density_matrix(rho1)
    rho2 = density_matrix(rho2)
    if rho1.shape != rho2.shape:
        raise DimensionMismatchError(
            f"states have shapes {rho1.shape} and {rho2.shape}"
        )
    inv_root = matrix_inv_sqrt(rho1)
    root = matrix_sqrt(rho1)
    core = matrix_sqrt(hermitian_part(root @ rho2 @ root))
    return hermitian_part(inv_root @ core @ inv_root)


def optimal_measurement(rho1, rho2) -> list[np.ndarray]:
    """Projective measurement achieving the Bures angle classically.

    Returns the N rank-1 projectors onto the eigenvectors of
    fuchs_caves_operator(rho1, rho2).  When M has a degenerate eigenvalue
    the eigenbasis inside each eigenspace is an arbitrary orthonormal
    choice; any such refinement attains the bound.
    """
    m = fuchs_caves_operator(rho1, rho2)
    _, vectors = eig_hermitian(m)
    return [np.outer(v, v.conj()) for v in vectors.T]


def _fibonacci_axes(count: int) -> np.ndarray:
    """Near-uniform axis grid on the sphere (Fibonacci lattice)."""
    i = np.arange(count) + 0.5
    golden = np.pi * (1.0 + np.sqrt(5.0))
    cos_theta = 1.0 - 2.0 * i / count
    sin_theta = np.sqrt(np.clip(1.0 - cos_theta**2, 0.0, None))
    phi = golden * i
    return np.stack(
        [sin_theta * np.cos(phi), sin_theta * np.sin(phi), cos_theta], axis=1
    )


def _axis_cosine(axes: np.ndarray, r1: np.ndarray, r2: np.ndarray) -> np.ndarray:
    """cos of the classical angle for projective measurements along axes."""
    p_plus = np.clip(0.5 * (1.0 + axes @ r1), 0.0, 1.0)
    q_plus = np.clip(0.5 * (1.0 + axes @ r2), 0.0, 1.0)
    return np.sqrt(p_plus * q_plus) + np.sqrt((1.0 - p_plus) * (1.0 - q_plus))


def _spherical_axis(theta: float, phi: float) -> np.ndarray:
    s = np.sin(theta)
    return np.array([s * np.cos(phi), s * np.sin(phi), np.cos(theta)])


def qubit_povm_search(
    rho1, rho2, grid_resolution: int = 200, refine_iters: int = 60
) -> dict:
    """Brute-force the best projective measurement over Bloch axes.

    Evaluates the induced classical angle on a Fibonacci grid of
    grid_resolution^2 axes, then polishes the best axis by a shrinking
    compass search in spherical coordinates.  Reports the largest angle
    found and the axis attaining it; ``non_unique`` is set when both
    states are pure, where a continuum of measurements is optimal.
    """
    if grid_resolution < 2:
        raise ValidationError("grid_resolution must be >= 2")
    r1 = bloch_vector(rho1)
    r2 = bloch_vector(rho2)
    axes = _fibonacci_axes(grid_resolution * grid_resolution)
    cosines = _axis_cosine(axes, r1, r2)
    best = int(np.argmin(cosines))
    best_axis = axes[best]
    best_cos = float(cosines[best])

    theta = float(np.arccos(np.clip(best_axis[2], -1.0, 1.0)))
    phi = float(np.arctan2(best_axis[1], best_axis[0]))
    step = 4.0 / grid_resolution
    for _ in range(refine_iters):
        moved = False
        for dt, dp in (
            (step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step),
            (step, step), (step, -step), (-step, step), (-step, -step),
        ):
            axis = _spherical_axis(theta + dt, phi + dp)
            c = float(_axis_cosine(axis[None, :], r1, r2)[0])
            if c < best_cos:
                best_cos, theta, phi = c, theta + dt, phi + dp
                moved = True
        if not moved:
            step *= 0.5
    best_axis = _spherical_axis(theta, phi)
    if best_axis[np.argmax(np.abs(best_axis))] < 0:
        best_axis = -best_axis
    pure1 = np.linalg.norm(r1) >= 1.0 - 1e-9
    pure2 = np.linalg.norm(r2) >= 1.0 - 1e-9
    return {
        "best_angle": float(np.arccos(np.clip(best_cos, 0.0, 1.0))),
        "best_axis": best_axis,
        "non_unique": bool(pure1 and pure2),
    }


def pure_state_qubit_angle(theta: float, theta_a: float, inside: bool = True) -> float:
    """Classical angle for two pure qubit states and a diameter measurement.

    The two states subtend Bloch angle ``theta`` (twice their Fubini-Study
    angle); the measurement is the projective pair along a diameter of
    their common Bloch disk, at angle ``theta_a`` from the nearer state.
    When the diameter crosses the arc between the states (``inside``) the
    answer is theta/2 - theta_a; any diameter outside the arc gives
    theta/2, the Fubini-Study distance itself — so every outside
    measurement is optimal.
    """
    if not 0.0 < theta < np.pi:
        raise DomainError(f"theta must lie in (0, pi), got {theta!r}")
    if not 0.0 <= theta_a <= np.pi / 2:
        raise DomainError(f"theta_a must lie in [0, pi/2], got {theta_a!r}")
    if inside:
        if theta_a > theta / 2 + 1e-12:
            raise DomainError(
                "a diameter inside the arc lies within theta/2 of the nearer state"
            )
        return theta / 2 - theta_a
    if theta_a > (np.pi - theta) / 2 + 1e-12:
        raise DomainError(
            "a diameter outside the arc lies within (pi - theta)/2 "
            "of the nearer state"
        )
    return theta / 2
