"""Seeded random ensembles: determinism and structural guarantees."""

import numpy as np

from statgeom import (
    apply_channel,
    random_density_matrix,
    random_invertible_density_matrix,
    random_kraus_channel,
    random_povm,
    random_probability_vector,
    random_psd,
    random_pure_state,
    random_stochastic_matrix,
    random_traceless_hermitian,
    random_unitary,
    substream,
)


def test_substream_is_deterministic():
    a = substream(42, "alpha").normal(size=8)
    b = substream(42, "alpha").normal(size=8)
    assert np.array_equal(a, b)


def test_substream_labels_are_independent():
    a = substream(42, "alpha").normal(size=8)
    b = substream(42, "beta").normal(size=8)
    assert not np.allclose(a, b)


def test_random_unitary(rng):
    u = random_unitary(5, rng)
    assert np.allclose(u.conj().T @ u, np.eye(5), atol=1e-12)


def test_random_pure_state(rng):
    psi = random_pure_state(6, rng)
    assert psi.shape == (6,)
    assert np.linalg.norm(psi) == 1.0 or abs(np.linalg.norm(psi) - 1.0) < 1e-12


def test_random_psd(rng):
    a = random_psd(4, rng)
    assert np.allclose(a, a.conj().T)
    assert np.linalg.eigvalsh(a)[0] >= -1e-12


def test_random_density_matrix(rng):
    rho = random_density_matrix(5, rng)
    assert abs(np.trace(rho).real - 1.0) < 1e-12
    assert abs(np.trace(rho).imag) < 1e-14
    assert np.allclose(rho, rho.conj().T)
    assert np.linalg.eigvalsh(rho)[0] >= -1e-12


def test_random_invertible_density_matrix(rng):
    for _ in range(50):
        rho = random_invertible_density_matrix(4, rng, min_eig=1e-3)
        assert np.linalg.eigvalsh(rho)[0] >= 1e-3 * (1.0 - 1e-9)
        assert abs(np.trace(rho).real - 1.0) < 1e-12


def test_random_traceless_hermitian(rng):
    h = random_traceless_hermitian(4, rng)
    assert np.allclose(h, h.conj().T)
    assert abs(np.trace(h)) < 1e-12


def test_random_probability_vector(rng):
    p = random_probability_vector(7, rng)
    assert np.all(p >= 0.0)
    assert abs(p.sum() - 1.0) < 1e-12


def test_random_stochastic_matrix_is_column_stochastic(rng):
    t = random_stochastic_matrix(3, 5, rng)
    assert t.shape == (3, 5)
    assert np.all(t >= 0.0)
    assert np.allclose(t.sum(axis=0), 1.0, atol=1e-12)


def test_random_povm_resolves_identity(rng):
    elements = random_povm(3, 5, rng)
    assert elements.shape == (5, 3, 3)
    total = np.zeros((3, 3), dtype=complex)
    for e in elements:
        assert np.allclose(e, e.conj().T)
        assert np.linalg.eigvalsh(e)[0] >= -1e-12
        total += e
    assert np.allclose(total, np.eye(3), atol=1e-10)


def test_random_kraus_channel_preserves_states(rng):
    kraus = random_kraus_channel(3, rng, env_dim=4)
    total = sum(k.conj().T @ k for k in kraus)
    assert np.allclose(total, np.eye(3), atol=1e-10)
    rho = random_density_matrix(3, rng)
    out = apply_channel(kraus, rho)
    assert abs(np.trace(out).real - 1.0) < 1e-10
    assert np.linalg.eigvalsh(out)[0] >= -1e-12
