"""The geodesic billiard on the boundary of state space.

Extending a Bures geodesic between two invertible N-dimensional states
to its full great circle, the projected curve rho(t) stays a valid
density matrix for every t but loses rank at isolated parameters: in
one half-period it touches the boundary exactly N times (generically),
bouncing off rank-(N-1) states.  The pure states annihilated there —
the kernel states — are precisely the eigenstates of the optimal
measurement operator M(rho1, rho2), which this module verifies
numerically.

The minimum eigenvalue of rho(t) = C(t) C(t)* is nonnegative for all t,
so boundary contacts are tangential zeros rather than sign crossings;
they are located as local minima of the sampled eigenvalue curve and
polished by bounded scalar minimization.  The signed diagnostic is the
determinant of the chord C(t) itself, which is real (up to roundoff) on
horizontal circles and flips sign at each simple contact.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment, minimize_scalar

from .bures import GeodesicPath, geodesic
from .errors import DegenerateRootWarning, ScanFailureError
from .linalg import eig_hermitian, fix_phases, hermitian_part
from .measurement import fuchs_caves_operator

__all__ = [
    "BouncePoint",
    "bounce_points",
    "verify_billiard_theorem",
    "real_roots_check",
]

# Eigenvalues at a refined contact parameter below this are counted as
# vanishing; a contact with two of them is a multiple root.
_KERNEL_TOL = 1e-6
# A refined local minimum qualifies as a boundary contact when the
# minimum eigenvalue is this small.
_CONTACT_TOL = 1e-10


@dataclass(frozen=True)
class BouncePoint:
    """One boundary contact of the great circle.

    ``t`` is the contact parameter in [0, pi); ``rho_b`` the rank-deficient
    state there; ``kernel_state`` the unit vector it annihilates (the
    smallest-eigenvalue eigenvector, phase-fixed); ``multiplicity`` the
    number of vanishing eigenvalues (1 in the generic case).
    """

    t: float
    rho_b: np.ndarray
    kernel_state: np.ndarray
    multiplicity: int
    min_eigenvalue: float


def _contact_candidates(path: GeodesicPath, samples: int) -> list[tuple[float, float]]:
    """Brackets around local minima of the sampled min-eigenvalue curve."""
    ts = np.linspace(0.0, np.pi, samples, endpoint=False)
    lam = np.asarray(path.min_eigenvalue(ts))
    # rho(t) is pi-periodic, so the grid is circular.
    left = np.roll(lam, 1)
    right = np.roll(lam, -1)
    is_min = (lam <= left) & (lam <= right) & (lam < 1e-3)
    h = np.pi / samples
    return [(float(ts[i] - h), float(ts[i] + h)) for i in np.where(is_min)[0]]


def _refine_contact(path: GeodesicPath, lo: float, hi: float) -> tuple[float, float]:
    result = minimize_scalar(
        lambda t: float(path.min_eigenvalue(t)),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(result.x) % np.pi, float(result.fun)


def bounce_points(path: GeodesicPath, samples: int = 2048) -> list[BouncePoint]:
    """All boundary contacts of the great circle in one half-period [0, pi).

    Scans a dense parameter grid (densified up to 16x on shortfall),
    refines each candidate to |min eigenvalue| <= 1e-10, and returns the
    contacts sorted by parameter.  Generic input yields exactly N simple
    contacts.  Contacts closer than 1e-6 in parameter, or with more than
    one vanishing eigenvalue, raise DegenerateRootWarning and are merged
    with raised multiplicity.  If fewer than N vanishing eigenvalues are
    found at maximum refinement, ScanFailureError is raised.
    """
    dim = path.dim
    roots: list[tuple[float, float]] = []
    for factor in (1, 4, 16):
        roots = []
        for lo, hi in _contact_candidates(path, samples * factor):
            t, value = _refine_contact(path, lo, hi)
            if value <= _CONTACT_TOL:
                roots.append((t, value))
        roots.sort()
        deduped: list[tuple[float, float]] = []
        for t, value in roots:
            if deduped and abs(t - deduped[-1][0]) < 1e-9:
                continue  # the same contact found from adjacent brackets
            deduped.append((t, value))
        roots = deduped
        if sum(_multiplicity(path, t) for t, _ in roots) >= dim:
            break
    points: list[BouncePoint] = []
    for t, value in roots:
        if points and abs(t - points[-1].t) < 1e-6:
            warnings.warn(
                f"contacts at t = {points[-1].t:.9f} and {t:.9f} merged "
                "as a multiple root",
                DegenerateRootWarning,
                stacklevel=2,
            )
            prev = points.pop()
            points.append(
                BouncePoint(
                    t=prev.t,
                    rho_b=prev.rho_b,
                    kernel_state=prev.kernel_state,
                    multiplicity=prev.multiplicity + 1,
                    min_eigenvalue=min(prev.min_eigenvalue, value),
                )
            )
            continue
        points.append(_bounce_point(path, t, value))
    total = sum(p.multiplicity for p in points)
    if total < dim:
        raise ScanFailureError(
            f"found {total} vanishing eigenvalues, expected {dim}; "
            "the scan did not resolve every boundary contact"
        )
    return points


def _multiplicity(path: GeodesicPath, t: float) -> int:
    w = np.linalg.eigvalsh(path.state(t))
    return int(np.sum(w <= _KERNEL_TOL))


def _bounce_point(path: GeodesicPath, t: float, value: float) -> BouncePoint:
    rho_b = hermitian_part(path.state(t))
    w, v = eig_hermitian(rho_b)
    multiplicity = int(np.sum(w <= _KERNEL_TOL))
    if multiplicity > 1:
        warnings.warn(
            f"contact at t = {t:.9f} has {multiplicity} vanishing eigenvalues",
            DegenerateRootWarning,
            stacklevel=3,
        )
    kernel = fix_phases(v[:, :1])[:, 0]
    return BouncePoint(
        t=t,
        rho_b=rho_b,
        kernel_state=kernel,
        multiplicity=multiplicity,
        min_eigenvalue=float(w[0]),
    )


def verify_billiard_theorem(rho1, rho2) -> dict:
    """Match the bounce kernel states against the eigenstates of M.

    Builds the geodesic through the (distinct, invertible) pair, finds
    its boundary contacts, and pairs each kernel state with an
    eigenvector of fuchs_caves_operator(rho1, rho2) by maximum-overlap
    assignment.  ``matched`` is true when every pairing has squared
    overlap at least 1 - 1e-6; ``flagged`` reports whether any contact
    was degenerate (such runs fall outside the generic theorem).
    """
    path = geodesic(rho1, rho2)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateRootWarning)
        points = bounce_points(path)
    flagged = any(issubclass(w.category, DegenerateRootWarning) for w in caught)
    m = fuchs_caves_operator(rho1, rho2)
    m_eigenvalues, m_vectors = eig_hermitian(m)
    kernels = np.stack([p.kernel_state for p in points])
    overlap2 = np.abs(kernels.conj() @ m_vectors) ** 2
    rows, cols = linear_sum_assignment(-overlap2)
    pairings = [
        {
            "bounce": int(i),
            "t": float(points[i].t),
            "eigenvector": int(j),
            "overlap2": float(overlap2[i, j]),
        }
        for i, j in zip(rows, cols)
    ]
    max_infidelity = float(max(1.0 - p["overlap2"] for p in pairings))
    matched = (
        len(points) == path.dim
        and all(p["overlap2"] >= 1.0 - 1e-6 for p in pairings)
    )
    return {
        "dim": path.dim,
        "matched": bool(matched),
        "flagged": bool(flagged),
        "pairings": pairings,
        "max_infidelity": max_infidelity,
        "bounce_ts": [float(p.t) for p in points],
        "multiplicities": [int(p.multiplicity) for p in points],
        "kernel_states": [p.kernel_state for p in points],
        "m_eigenvalues": m_eigenvalues,
    }


def real_roots_check(
    path: GeodesicPath, samples: int = 2048, bounce_ts=None
) -> dict:
    """Diagnostics for the reality of the chord-determinant roots.

    det C(t) with C(t) = cos(t) e1 + sin(t) e2 is, on a horizontal great
    circle, a real function of t whose N simple zeros are the boundary
    contacts.  The report counts its sign changes over [0, pi) (expected
    N), the largest relative imaginary part (expected roundoff), and the
    relative magnitude of the determinant at the bounce parameters
    (expected roundoff).
    """
    ts = np.linspace(0.0, np.pi, samples, endpoint=False)
    dets = np.linalg.det(path.chord(ts))
    scale = float(np.max(np.abs(dets)))
    complex_residual = float(np.max(np.abs(dets.imag))) / scale
    real_part = dets.real
    keep = np.abs(real_part) > 1e-9 * scale
    signs = np.sign(real_part[keep])
    sign_changes = int(np.sum(signs[1:] != signs[:-1]))
    if bounce_ts is None:
        bounce_ts = [p.t for p in bounce_points(path, samples=samples)]
    bounce_dets = np.linalg.det(path.chord(np.asarray(bounce_ts, dtype=float)))
    bounce_residual = float(np.max(np.abs(bounce_dets))) / scale if len(bounce_ts) else 0.0
    return {
        "sign_changes": sign_changes,
        "complex_det_residual": complex_residual,
        "bounce_det_residual": bounce_residual,
    }
