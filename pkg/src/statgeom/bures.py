"""Bures-Uhlmann geometry on density matrices.

Fidelity and the Bures angle, purifications rho = A A* living on the
Hilbert-Schmidt unit sphere, the horizontal lift that aligns a second
state's purification with a first, the geodesic through two invertible
states (the projection of a great circle in the purification sphere),
the Fubini-Study distance on pure-state vectors, and the closed-form
qubit line element that exhibits interior state space as a round
hemisphere of radius 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundaryError,
    DegenerateError,
    DimensionMismatchError,
    SingularError,
    ValidationError,
    ZeroVectorError,
)
from .linalg import hermitian_part, hs_inner, matrix_inv_sqrt, matrix_sqrt
from .monotone import density_matrix

__all__ = [
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "fidelity",
    "bures_angle",
    "purification",
    "purify",
    "project",
    "horizontal_lift",
    "GeodesicPath",
    "geodesic",
    "fubini_study_distance",
    "qubit_state",
    "qubit_perturbation",
    "bloch_vector",
    "qubit_bures_ds2",
]

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def _matched_pair(rho1, rho2) -> tuple[np.ndarray, np.ndarray]:
    rho1 = density_matrix(rho1)
    rho2 = density_matrix(rho2)
    if rho1.shape != rho2.shape:
        raise DimensionMismatchError(
            f"states have shapes {rho1.shape} and {rho2.shape}"
        )
    return rho1, rho2


def fidelity(rho1, rho2) -> float:
    """Fidelity (Tr sqrt(sqrt(rho2) rho1 sqrt(rho2)))^2, in [0, 1].

    Equals 1 exactly when the states coincide, the squared overlap
    |<psi|phi>|^2 on pure states, and (sum_i sqrt(p_i q_i))^2 on
    commuting (classical) states.  Symmetric in its arguments, although
    the formula hides it.
    """
    rho1, rho2 = _matched_pair(rho1, rho2)
    r2 = matrix_sqrt(rho2)
    w = np.linalg.eigvalsh(hermitian_part(r2 @ rho1 @ r2))
    root_sum = float(np.sum(np.sqrt(np.clip(w, 0.0, None))))
    return min(1.0, root_sum * root_sum)


def bures_angle(rho1, rho2) -> float:
    """Bures-Uhlmann angle arccos(sqrt(fidelity)), in [0, pi/2]."""
    return float(np.arccos(np.clip(np.sqrt(fidelity(rho1, rho2)), 0.0, 1.0)))


def purification(a, atol: float = 1e-10) -> np.ndarray:
    """Validate a purification: square complex matrix with Tr A A* = 1."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"purification must be square, got shape {a.shape}")
    norm2 = float(np.sum(np.abs(a) ** 2))
    if abs(norm2 - 1.0) > atol:
        raise ValidationError(f"purification has squared norm {norm2!r}, expected 1")
    return a


def purify(rho) -> np.ndarray:
    """Canonical purification A = sqrt(rho), the positive-root gauge choice."""
    return matrix_sqrt(density_matrix(rho))


def project(a) -> np.ndarray:
    """Project a purification down to its density matrix A A*.

    Gauge invariant: project(A U) = project(A) for any unitary U.
    """
    a = purification(a)
    rho = hermitian_part(a @ a.conj().T)
    return density_matrix(rho / float(np.trace(rho).real))


def horizontal_lift(rho1, rho2, a1: np.ndarray | None = None) -> np.ndarray:
    """Purification of rho2 aligned with the purification a1 of rho1.

    Returns A2 = rho1^(-1/2) sqrt(sqrt(rho1) rho2 sqrt(rho1)) rho1^(-1/2) A1.
    The alignment makes A1* A2 positive semidefinite with
    Tr(A1* A2) = sqrt(fidelity(rho1, rho2)) — the largest overlap any
    purification of rho2 can reach, so the straight-line (great-circle)
    distance from A1 to A2 realizes the Bures angle downstairs.

    ``a1`` defaults to the canonical purification sqrt(rho1).  ``rho1``
    must be invertible (SingularError otherwise).
    """
    rho1, rho2 = _matched_pair(rho1, rho2)
    if a1 is None:
        a1 = matrix_sqrt(rho1)
    else:
        a1 = purification(a1)
        resid = float(np.linalg.norm(a1 @ a1.conj().T - rho1))
        if resid > 1e-8:
            raise ValidationError(f"a1 does not purify rho1 (residual {resid:.3e})")
    inv_root = matrix_inv_sqrt(rho1)
    root = matrix_sqrt(rho1)
    core = matrix_sqrt(hermitian_part(root @ rho2 @ root))
    return inv_root @ core @ inv_root @ a1


@dataclass(frozen=True)
class GeodesicPath:
    """Bures geodesic as the projection of a purification great circle.

    ``e1`` and ``e2`` are a Hilbert-Schmidt orthonormal pair spanning the
    real 2-plane of the circle; the state at arc parameter t is

        rho(t) = C(t) C(t)*,   C(t) = cos(t) e1 + sin(t) e2.

    rho(0) is the first endpoint and rho(t_star) the second, with t_star
    equal to the Bures angle, so t is Bures arc length.  rho(t) is
    pi-periodic: the circle covers the geodesic twice per revolution.
    """

    e1: np.ndarray
    e2: np.ndarray
    t_star: float

    @property
    def dim(self) -> int:
        return self.e1.shape[0]

    def chord(self, t) -> np.ndarray:
        """C(t) = cos(t) e1 + sin(t) e2; batched over an array of t."""
        t = np.asarray(t, dtype=float)
        return (
            np.cos(t)[..., None, None] * self.e1
            + np.sin(t)[..., None, None] * self.e2
        )

    def state(self, t) -> np.ndarray:
        """Density matrix rho(t) = C(t) C(t)*; batched over an array of t."""
        c = self.chord(t)
        rho = c @ np.conj(np.swapaxes(c, -1, -2))
        return 0.5 * (rho + np.conj(np.swapaxes(rho, -1, -2)))

    def min_eigenvalue(self, t):
        """Smallest eigenvalue of rho(t); zero exactly at boundary contact."""
        return np.linalg.eigvalsh(self.state(t))[..., 0]


def geodesic(rho1, rho2) -> GeodesicPath:
    """Unit-speed Bures geodesic from rho1 to rho2, both invertible.

    Built by horizontally lifting rho2 next to A1 = sqrt(rho1) and
    orthonormalizing the real span of the two purifications.  Raises
    SingularError for rank-deficient endpoints and DegenerateError when
    the states coincide (Bures angle below 1e-8), where no unique
    geodesic exists.
    """
    rho1, rho2 = _matched_pair(rho1, rho2)
    for rho in (rho1, rho2):
        w = np.linalg.eigvalsh(rho)
        if float(w[0]) <= 1e-12:
            raise SingularError(
                f"geodesic endpoint has eigenvalue {float(w[0]):.3e}; "
                "both endpoints must be strictly positive"
            )
    a1 = matrix_sqrt(rho1)
    a2 = horizontal_lift(rho1, rho2, a1)
    overlap = hs_inner(a1, a2).real  # = sqrt(fidelity), real by alignment
    overlap = min(1.0, max(-1.0, overlap))
    sine = np.sqrt(max(0.0, 1.0 - overlap * overlap))
    if sine < 1e-8:
        raise DegenerateError("states coincide; the geodesic is not unique")
    e2 = (a2 - overlap * a1) / sine
    return GeodesicPath(e1=a1, e2=e2, t_star=float(np.arccos(overlap)))


def fubini_study_distance(psi, phi) -> float:
    """Fubini-Study distance arccos(|<psi|phi>| / (|psi| |phi|)).

    Defined on rays: invariant under rescaling and rephasing of either
    vector; lies in [0, pi/2].
    """
    psi = np.asarray(psi, dtype=complex).ravel()
    phi = np.asarray(phi, dtype=complex).ravel()
    if psi.shape != phi.shape:
        raise DimensionMismatchError(
            f"vectors have lengths {psi.size} and {phi.size}"
        )
    norm_psi = float(np.linalg.norm(psi))
    norm_phi = float(np.linalg.norm(phi))
    if norm_psi < 1e-150 or norm_phi < 1e-150:
        raise ZeroVectorError("Fubini-Study distance needs nonzero vectors")
    overlap = abs(np.vdot(psi, phi)) / (norm_psi * norm_phi)
    return float(np.arccos(np.clip(overlap, 0.0, 1.0)))


def qubit_state(x: float, y: float, z: float) -> np.ndarray:
    """Qubit density matrix (I + x sx + y sy + z sz) / 2 from a Bloch vector."""
    r2 = x * x + y * y + z * z
    if r2 > 1.0 + 1e-12:
        raise ValidationError(f"Bloch vector has length {np.sqrt(r2)!r} > 1")
    rho = 0.5 * (np.eye(2, dtype=complex) + x * SIGMA_X + y * SIGMA_Y + z * SIGMA_Z)
    return hermitian_part(rho)


def qubit_perturbation(dx: float, dy: float, dz: float) -> np.ndarray:
    """Traceless Hermitian perturbation (dx sx + dy sy + dz sz) / 2."""
    return hermitian_part(0.5 * (dx * SIGMA_X + dy * SIGMA_Y + dz * SIGMA_Z))


def bloch_vector(rho) -> np.ndarray:
    """Bloch vector (Tr rho sx, Tr rho sy, Tr rho sz) of a qubit state."""
    rho = density_matrix(rho)
    if rho.shape != (2, 2):
        raise DimensionMismatchError("Bloch vector is defined for qubits only")
    return np.array(
        [
            float(np.trace(rho @ SIGMA_X).real),
            float(np.trace(rho @ SIGMA_Y).real),
            float(np.trace(rho @ SIGMA_Z).real),
        ]
    )


def qubit_bures_ds2(
    x: float, y: float, z: float, dx: float, dy: float, dz: float
) -> float:
    """Bures line element of a qubit in Bloch coordinates.

    ds^2 = (1/4) [dx^2 + dy^2 + dz^2 + (x dx + y dy + z dz)^2 / (1 - r^2)]

    — the round metric of a hemisphere of radius 1/2, with the maximally
    mixed state at the pole and pure states on the (boundary) equator.
    Only defined strictly inside the Bloch ball; the radial term diverges
    on the sphere.
    """
    r2 = x * x + y * y + z * z
    if r2 >= 1.0:
        raise BoundaryError("line element diverges on the Bloch sphere")
    flat = dx * dx + dy * dy + dz * dz
    radial = x * dx + y * dy + z * dz
    return 0.25 * (flat + radial * radial / (1.0 - r2))
