import numpy as np
import pytest

from medilog.errors import DimensionError, NotHermitianError
from medilog.qmfl.linalg import (
    hermitian_eigenvalues,
    offdiagonal_norm,
    require_hermitian,
)


def random_hermitian(rng, d):
    x = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return (x + x.conj().T) / 2.0


class TestValidation:
    def test_rejects_non_square(self):
        with pytest.raises(DimensionError):
            require_hermitian(np.zeros((2, 3)))

    def test_rejects_dimension_out_of_range(self):
        with pytest.raises(DimensionError):
            require_hermitian(np.zeros((1, 1)))
        with pytest.raises(DimensionError):
            require_hermitian(np.zeros((17, 17)))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_tolerates_tiny_defect(self):
        m = np.array([[0.5, 0.1 + 5e-11j], [0.1, 0.5]])
        assert hermitian_eigenvalues(m)


class TestEigenvalues:
    def test_diagonal(self):
        assert hermitian_eigenvalues(np.diag([0.8, 0.4])) == pytest.approx([0.4, 0.8])

    def test_scaled_pauli_x(self):
        m = 0.5 * np.array([[0.0, 1.0], [1.0, 0.0]])
        assert hermitian_eigenvalues(m) == pytest.approx([-0.5, 0.5])

    def test_trace_identity(self, rng):
        for _ in range(50):
            d = int(rng.integers(2, 9))
            m = random_hermitian(rng, d)
            eigs = hermitian_eigenvalues(m)
            assert sum(eigs) == pytest.approx(float(np.trace(m).real), abs=1e-10)

    def test_matches_eigvalsh_oracle(self, rng):
        # independent solver cross-check across the supported dimensions
        for d in range(2, 17):
            for _ in range(5):
                m = random_hermitian(rng, d)
                mine = np.array(hermitian_eigenvalues(m))
                ref = np.linalg.eigvalsh(m)
                assert np.max(np.abs(mine - ref)) < 1e-10

    def test_ascending_order(self, rng):
        for _ in range(20):
            eigs = hermitian_eigenvalues(random_hermitian(rng, 5))
            assert eigs == sorted(eigs)

    def test_already_diagonal_terminates_immediately(self):
        m = np.diag([3.0, -1.0, 0.5])
        assert hermitian_eigenvalues(m) == pytest.approx([-1.0, 0.5, 3.0])


def test_offdiagonal_norm():
    m = np.array([[1.0, 3.0], [4.0, 2.0]])
    assert offdiagonal_norm(m) == pytest.approx(5.0)
