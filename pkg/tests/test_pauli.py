import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pulsepair.errors import NonHermitianInput
from pulsepair.pauli import (
    IDENTITY2,
    PAULIS,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    commutator_check,
    hermiticity_defect,
    hermitian_eigenvalues,
    hermitian_eigenvalues_batch,
    kron,
)

import oracles


def test_pauli_constants_are_the_standard_matrices():
    assert np.array_equal(SIGMA_X, oracles.SX)
    assert np.array_equal(SIGMA_Y, oracles.SY)
    assert np.array_equal(SIGMA_Z, oracles.SZ)
    assert np.array_equal(IDENTITY2, np.eye(2))
    assert PAULIS == (SIGMA_X, SIGMA_Y, SIGMA_Z)


def test_pauli_constants_are_immutable():
    with pytest.raises(ValueError):
        SIGMA_X[0, 0] = 9.0


def test_commutator_check_accepts_stored_basis():
    assert commutator_check()


def test_commutator_check_rejects_scaled_and_permuted_bases():
    assert not commutator_check(sx=2.0 * SIGMA_X)
    assert not commutator_check(sx=SIGMA_Y, sy=SIGMA_X, sz=SIGMA_Z)
    assert not commutator_check(sz=-SIGMA_Z)


def test_kron_matches_numpy_and_fixes_dtype():
    a = np.array([[1, 2], [3, 4]])
    b = np.array([[0, 1], [1, 0]])
    out = kron(a, b)
    assert out.dtype == np.complex128
    assert np.array_equal(out, np.kron(a, b))


def test_hermiticity_defect():
    assert hermiticity_defect(SIGMA_Y) == 0.0
    m = np.array([[0.0, 1.0], [1.0 + 1e-3, 0.0]])
    assert hermiticity_defect(m) == pytest.approx(1e-3)


def test_eigenvalues_of_pinned_correlation_projector():
    # (I + YY)/4 has a doubly degenerate pair {0, 1/2}
    m = 0.25 * (np.eye(4) + kron(SIGMA_Y, SIGMA_Y))
    eigs = hermitian_eigenvalues(m)
    assert np.allclose(eigs, [0.0, 0.0, 0.5, 0.5], atol=1e-14)


def test_eigenvalues_of_diagonal_matrix_are_exact():
    eigs = hermitian_eigenvalues(np.diag([3.0, -1.0, 2.0, 0.5]))
    assert np.array_equal(eigs, [-1.0, 0.5, 2.0, 3.0])


def test_eigenvalues_match_lapack_on_random_batches():
    rng = np.random.default_rng(7)
    for n in (2, 3, 4):
        raw = rng.normal(size=(300, n, n)) + 1j * rng.normal(size=(300, n, n))
        mats = 0.5 * (raw + raw.conj().transpose(0, 2, 1))
        ours = hermitian_eigenvalues_batch(mats)
        ref = np.linalg.eigvalsh(mats)
        assert np.abs(ours - ref).max() < 1e-12 * max(1.0, np.abs(mats).max())


def test_batch_result_is_bitwise_independent_of_batch_composition():
    rng = np.random.default_rng(11)
    raw = rng.normal(size=(64, 4, 4)) + 1j * rng.normal(size=(64, 4, 4))
    mats = 0.5 * (raw + raw.conj().transpose(0, 2, 1))
    batched = hermitian_eigenvalues_batch(mats)
    solo = np.array([hermitian_eigenvalues(m) for m in mats])
    assert np.array_equal(batched, solo)


def test_rows_come_out_sorted_and_trace_is_preserved():
    rng = np.random.default_rng(3)
    raw = rng.normal(size=(200, 4, 4)) + 1j * rng.normal(size=(200, 4, 4))
    mats = 0.5 * (raw + raw.conj().transpose(0, 2, 1))
    eigs = hermitian_eigenvalues_batch(mats)
    assert (np.diff(eigs, axis=1) >= 0.0).all()
    traces = np.einsum("nii->n", mats).real
    assert np.abs(eigs.sum(axis=1) - traces).max() < 1e-13 * max(1.0, np.abs(traces).max())


def test_non_hermitian_input_is_rejected():
    m = np.array([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(NonHermitianInput):
        hermitian_eigenvalues(m)
    batch = np.stack([np.eye(2), m])
    with pytest.raises(NonHermitianInput):
        hermitian_eigenvalues_batch(batch)


def test_shape_validation():
    with pytest.raises(ValueError):
        hermitian_eigenvalues(np.zeros(4))
    with pytest.raises(ValueError):
        hermitian_eigenvalues_batch(np.zeros((2, 3, 4)))


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_spectrum_invariant_under_random_unitary_conjugation(seed):
    rng = np.random.default_rng(seed)
    raw = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    herm = 0.5 * (raw + raw.conj().T)
    q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    rotated = q @ herm @ q.conj().T
    rotated = 0.5 * (rotated + rotated.conj().T)
    a = hermitian_eigenvalues(herm)
    b = hermitian_eigenvalues(rotated)
    assert np.abs(a - b).max() < 1e-12 * max(1.0, np.abs(a).max())
