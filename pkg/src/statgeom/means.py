"""Operator means of positive matrices.

A mean is built from an operator-monotone function f on (0, inf) with
f(1) = 1 via the congruence recipe

    M_f(A, B) = sqrt(A) f(A^(-1/2) B A^(-1/2)) sqrt(A).

The classical trio is arithmetic f = (1+t)/2, geometric f = sqrt(t), and
harmonic f = 2t/(1+t), ordered harmonic <= geometric <= arithmetic in the
positive-semidefinite sense.  The module also carries a randomized
operator-monotonicity tester and the standard 2x2 witness that t -> t^2
fails it.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, DomainError, ValidationError
from .linalg import (
    eig_hermitian,
    hermitian_part,
    hs_norm,
    is_hermitian,
    matrix_function,
    matrix_inv_sqrt,
    matrix_sqrt,
    min_eigenvalue,
    psd_order_geq,
)
from .sampling import random_psd, random_unitary, substream

__all__ = [
    "mean_function",
    "validate_mean_function",
    "operator_mean",
    "arithmetic_mean",
    "geometric_mean",
    "harmonic_mean",
    "mean_axioms_check",
    "operator_monotone_test",
    "square_monotonicity_counterexample",
]

_MEAN_FUNCTIONS = {
    "arithmetic": lambda t: 0.5 * (1.0 + t),
    "geometric": np.sqrt,
    "harmonic": lambda t: 2.0 * t / (1.0 + t),
}


def mean_function(name: str):
    """Return the representing function f for a named mean."""
    try:
        return _MEAN_FUNCTIONS[name]
    except KeyError:
        known = ", ".join(sorted(_MEAN_FUNCTIONS))
        raise ValidationError(f"unknown mean {name!r}; expected one of {known}") from None


def validate_mean_function(f, grid: np.ndarray | None = None) -> None:
    """Check the symmetric-mean conditions f(1) = 1 and f(1/t) = f(t)/t.

    The normalization is required to 1e-12 and the symmetry to 1e-10 on a
    log grid over [1e-3, 1e3].  Raises ValidationError on failure.
    """
    if grid is None:
        grid = np.logspace(-3.0, 3.0, 61)
    one = float(f(1.0))
    if abs(one - 1.0) > 1e-12:
        raise ValidationError(f"f(1) = {one!r}, expected 1")
    ft = np.asarray(f(grid), dtype=float)
    finv = np.asarray(f(1.0 / grid), dtype=float)
    defect = np.max(np.abs(finv - ft / grid) / np.maximum(1.0, np.abs(ft / grid)))
    if defect > 1e-10:
        raise ValidationError(f"f(1/t) = f(t)/t fails on the grid (defect {defect:.3e})")


def _check_pair(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"operands have shapes {a.shape} and {b.shape}")
    for m in (a, b):
        if not is_hermitian(m):
            raise ValidationError("operator means need Hermitian operands")
    return a, b


def operator_mean(a: np.ndarray, b: np.ndarray, f) -> np.ndarray:
    """Mean of positive matrices a and b built from the function f.

    ``f`` is either a mean name ("arithmetic", "geometric", "harmonic") or a
    callable applied to the eigenvalues of A^(-1/2) B A^(-1/2).  ``a`` must be
    positive definite; ``b`` positive semidefinite.
    """
    if isinstance(f, str):
        f = mean_function(f)
    a, b = _check_pair(a, b)
    if min_eigenvalue(b) < -1e-12:
        raise ValidationError("second operand is not positive semidefinite")
    ra = matrix_inv_sqrt(a)  # raises SingularError if a is not invertible
    inner = hermitian_part(ra @ b @ ra)
    mean = matrix_sqrt(a) @ matrix_function(inner, f, domain_floor=0.0) @ matrix_sqrt(a)
    return hermitian_part(mean)


def arithmetic_mean(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(A + B) / 2, computed directly (no invertibility needed)."""
    a, b = _check_pair(a, b)
    return 0.5 * (a + b)


def geometric_mean(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Geometric mean A # B = sqrt(A) sqrt(A^(-1/2) B A^(-1/2)) sqrt(A).

    Symmetric in its arguments, equal to the entrywise geometric mean of
    eigenvalues when the operands commute, and the unique positive solution
    G of the Riccati equation G A^(-1) G = B.
    """
    return operator_mean(a, b, np.sqrt)


def harmonic_mean(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Harmonic mean 2 (A^(-1) + B^(-1))^(-1), via its congruence form."""
    return operator_mean(a, b, _MEAN_FUNCTIONS["harmonic"])


def _shrink_below(a: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Random strictly positive C with C <= A, for the mixed-monotone axiom."""
    dim = a.shape[0]
    bump = random_psd(dim, rng)
    top = float(np.linalg.eigvalsh(bump)[-1])
    room = min_eigenvalue(a)
    return np.asarray(a, dtype=complex) - (0.4 * room / top) * bump


def mean_axioms_check(f, seed: int, trials: int, dim: int = 3) -> dict:
    """Randomized check of the four mean axioms for the function f.

    On random strictly positive pairs (A, B) it verifies
      a) idempotence        M(A, A) = A,
      b) homogeneity        M(aA, aB) = a M(A, B) for random a > 0,
      c) mixed monotonicity A >= C, B >= D  =>  M(A, B) >= M(C, D),
      d) unitary covariance M(UAU*, UBU*) = U M(A, B) U*.

    Equality axioms are checked in Hilbert-Schmidt norm to 1e-8 (relative),
    the order axiom with a -1e-8 eigenvalue tolerance.  Returns per-axiom
    violation counts plus the total.  The named trio passes; feeding the
    formula f(t) = t^2 produces axiom-c violations.
    """
    if isinstance(f, str):
        f = mean_function(f)
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    rng = substream(seed, "mean-axioms")
    counts = {"a": 0, "b": 0, "c": 0, "d": 0}
    for _ in range(trials):
        a = random_psd(dim, rng) + 0.05 * np.eye(dim)
        b = random_psd(dim, rng) + 0.05 * np.eye(dim)
        m = operator_mean(a, b, f)
        scale = max(1.0, hs_norm(m))

        if hs_norm(operator_mean(a, a, f) - a) > 1e-8 * max(1.0, hs_norm(a)):
            counts["a"] += 1

        alpha = float(rng.uniform(0.2, 5.0))
        if hs_norm(operator_mean(alpha * a, alpha * b, f) - alpha * m) > 1e-8 * alpha * scale:
            counts["b"] += 1

        c = _shrink_below(a, rng)
        d = _shrink_below(b, rng)
        if not psd_order_geq(m, operator_mean(c, d, f), tol=1e-8):
            counts["c"] += 1

        u = random_unitary(dim, rng)
        covariant = operator_mean(u @ a @ u.conj().T, u @ b @ u.conj().T, f)
        if hs_norm(covariant - u @ m @ u.conj().T) > 1e-8 * scale:
            counts["d"] += 1
    counts["violations"] = sum(counts.values())
    counts["trials"] = trials
    return counts


def operator_monotone_test(f, dim: int, seed: int, trials: int) -> dict:
    """Search for a counterexample to operator monotonicity of f.

    Samples pairs A >= B >= 0 of ``dim`` x ``dim`` matrices and tests whether
    f(A) >= f(B) in the positive-semidefinite order.  Returns a report with
    the first counterexample found (or None), the most negative ordering
    eigenvalue seen, and the number of pairs checked.

    Raises DomainError if f is undefined (non-finite) on a sampled spectrum.
    """
    if dim < 2:
        raise ValidationError("dim must be >= 2")
    rng = substream(seed, "operator-monotone")
    worst = np.inf
    counterexample = None
    for k in range(trials):
        b = random_psd(dim, rng)
        a = b + random_psd(dim, rng)
        fa = _apply_scalar(f, a)
        fb = _apply_scalar(f, b)
        gap = min_eigenvalue(fa - fb)
        worst = min(worst, gap)
        if gap < -1e-9 and counterexample is None:
            counterexample = {"a": a, "b": b, "min_eigenvalue": gap}
    return {
        "counterexample": counterexample,
        "min_gap": float(worst) if trials else 0.0,
        "trials": trials,
    }


def _apply_scalar(f, h: np.ndarray) -> np.ndarray:
    """f lifted to a Hermitian matrix, with a finiteness check on f(spectrum)."""
    w, v = eig_hermitian(h)
    fw = np.asarray(f(np.clip(w, 0.0, None)), dtype=float)
    if not np.all(np.isfinite(fw)):
        raise DomainError("f is undefined on part of the sampled spectrum")
    return hermitian_part((v * fw) @ v.conj().T)


def square_monotonicity_counterexample() -> dict:
    """Explicit 2x2 pair with A >= B >= 0 but A^2 not >= B^2.

    Returns the pair, the difference of squares, and its minimum eigenvalue
    (negative, certifying that t -> t^2 is not operator monotone and hence
    never generates an operator mean).
    """
    a = np.array([[2.0, 1.0], [1.0, 1.0]])
    b = np.array([[1.0, 0.0], [0.0, 0.0]])
    diff_sq = a @ a - b @ b
    return {
        "a": a,
        "b": b,
        "a_minus_b_min_eigenvalue": min_eigenvalue(a - b),
        "square_diff": diff_sq,
        "square_diff_min_eigenvalue": min_eigenvalue(diff_sq),
    }
