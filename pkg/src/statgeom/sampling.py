"""Seeded random generators for states, channels, and measurements.

All experiment entry points take a single integer seed.  Independent
sub-streams are derived by hashing a purpose label into the seed sequence,
so parallel or re-ordered consumers draw from uncorrelated, reproducible
streams.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .linalg import hermitian_part

__all__ = [
    "substream",
    "random_unitary",
    "random_pure_state",
    "random_psd",
    "random_density_matrix",
    "random_invertible_density_matrix",
    "random_traceless_hermitian",
    "random_probability_vector",
    "random_stochastic_matrix",
    "random_povm",
    "random_kraus_channel",
    "apply_channel",
]


def substream(seed: int, label: str) -> np.random.Generator:
    """Generator for the sub-stream identified by (seed, label)."""
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    key = int.from_bytes(digest[:8], "little")
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(key,)))


def _ginibre(dim: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Gaussian matrix."""
    q, r = np.linalg.qr(_ginibre(dim, rng))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_pure_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unit vector in C^dim."""
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_psd(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Random PSD matrix G G† with HS norm equal to ``scale``."""
    g = _ginibre(dim, rng)
    m = g @ g.conj().T
    return hermitian_part(m * (scale / np.linalg.norm(m)))


def random_density_matrix(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random density matrix from the Hilbert-Schmidt ensemble."""
    g = _ginibre(dim, rng)
    m = g @ g.conj().T
    return hermitian_part(m / np.trace(m).real)


def random_invertible_density_matrix(
    dim: int, rng: np.random.Generator, min_eig: float = 1e-3
) -> np.ndarray:
    """Random density matrix with all eigenvalues >= ``min_eig``.

    Rejection-samples the HS ensemble; after a few misses mixes toward the
    maximally mixed state, which preserves determinism under a fixed seed.
    """
    for _ in range(8):
        rho = random_density_matrix(dim, rng)
        if np.linalg.eigvalsh(rho)[0] >= min_eig:
            return rho
    alpha = min(1.0, 2.0 * min_eig * dim)
    mixed = (1 - alpha) * rho + alpha * np.eye(dim) / dim
    return hermitian_part(mixed)


def random_traceless_hermitian(
    dim: int, rng: np.random.Generator, scale: float = 1.0
) -> np.ndarray:
    """Random traceless Hermitian matrix with HS norm ``scale``."""
    h = hermitian_part(_ginibre(dim, rng))
    h -= np.trace(h) / dim * np.eye(dim)
    return h * (scale / np.linalg.norm(h))


def random_probability_vector(n: int, rng: np.random.Generator) -> np.ndarray:
    """Flat-Dirichlet point of the (n-1)-simplex."""
    return rng.dirichlet(np.ones(n))


def random_stochastic_matrix(
    n_out: int, n_in: int, rng: np.random.Generator
) -> np.ndarray:
    """Column-stochastic matrix with each column flat-Dirichlet."""
    return rng.dirichlet(np.ones(n_out), size=n_in).T


def _haar_isometry(
    dim_in: int, dim_out: int, rng: np.random.Generator
) -> np.ndarray:
    """Haar-random isometry C^dim_in -> C^dim_out (dim_out >= dim_in)."""
    g = rng.standard_normal((dim_out, dim_in)) + 1j * rng.standard_normal(
        (dim_out, dim_in)
    )
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_povm(
    dim: int, n_outcomes: int, rng: np.random.Generator
) -> np.ndarray:
    """Random POVM with ``n_outcomes`` elements on C^dim.

    Partitions the rows of a Haar-random isometry V: C^dim -> C^(k*dim)
    into k blocks B_i; the elements E_i = B_i† B_i resolve the identity by
    construction.
    """
    v = _haar_isometry(dim, dim * n_outcomes, rng)
    blocks = v.reshape(n_outcomes, dim, dim)
    return np.stack([hermitian_part(b.conj().T @ b) for b in blocks])


def random_kraus_channel(
    dim: int, rng: np.random.Generator, env_dim: int | None = None
) -> np.ndarray:
    """Kraus operators of a random CPTP map (Stinespring dilation).

    The environment dimension defaults to ``dim``.  Returns an array of
    shape (env_dim, dim, dim) with sum_i K_i† K_i = identity.
    """
    if env_dim is None:
        env_dim = dim
    v = _haar_isometry(dim, dim * env_dim, rng)
    return v.reshape(env_dim, dim, dim)


def apply_channel(kraus: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """Apply a channel given by Kraus operators: sum_i K_i rho K_i†."""
    out = np.zeros_like(np.asarray(rho, dtype=complex))
    for k in kraus:
        out += k @ rho @ k.conj().T
    return hermitian_part(out)
