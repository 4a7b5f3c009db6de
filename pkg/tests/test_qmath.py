import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given
from hypothesis import strategies as st

from ricollide.errors import BadFactorization, DimensionMismatch, NonHermitianInput
from ricollide.qmath import (I2, SX, SY, SZ, TOL, check_density_matrix, hermitian_expm, kron,
                             partial_trace, random_density_matrix, random_hermitian,
                             trace_distance)

seeds = st.integers(0, 2**32 - 1)


def test_kron_identity():
    assert np.array_equal(kron(I2, I2), np.eye(4))


def test_kron_sz_identity():
    assert np.array_equal(kron(SZ, I2), np.diag([1, 1, -1, -1]))


def test_kron_sx_sx_antidiagonal():
    assert np.array_equal(kron(SX, SX), np.fliplr(np.eye(4)))


def test_kron_ordering_is_system_first():
    # flat index 4s + 2a1 + a2
    e = [np.array([1, 0]), np.array([0, 1])]
    v = np.kron(np.kron(e[1], e[0]), e[1])
    assert np.argmax(v) == 4 * 1 + 2 * 0 + 1


def test_expm_zero_generator():
    assert np.allclose(hermitian_expm(np.zeros((8, 8)), 3.7), np.eye(8), atol=1e-15)


def test_expm_diagonal():
    u = hermitian_expm(SZ, math.pi / 2)  # (omega/2) sz with omega = 2
    assert np.allclose(u, np.diag([np.exp(-1j * math.pi / 2), np.exp(1j * math.pi / 2)]),
                       atol=1e-15)


def test_expm_random_unitary(rng):
    u = hermitian_expm(random_hermitian(8, rng), 0.3)
    assert np.abs(u.conj().T @ u - np.eye(8)).max() <= TOL.unitarity


def test_expm_matches_scipy(rng):
    h = random_hermitian(8, rng)
    assert np.allclose(hermitian_expm(h, 1.7), scipy.linalg.expm(-1j * 1.7 * h), atol=1e-12)


def test_expm_rejects_non_hermitian():
    with pytest.raises(NonHermitianInput):
        hermitian_expm(np.array([[0, 1], [0, 0]]), 1.0)


@given(seeds, st.floats(-20, 20))
def test_expm_inverse(seed, t):
    h = random_hermitian(8, np.random.default_rng(seed))
    prod = hermitian_expm(h, t) @ hermitian_expm(h, -t)
    assert np.abs(prod - np.eye(8)).max() <= TOL.unitarity


def test_partial_trace_product_state(rng):
    rs, ra, rb = (random_density_matrix(2, rng) for _ in range(3))
    assert np.allclose(partial_trace(kron(rs, ra, rb), 0), rs, atol=1e-15)
    assert np.allclose(partial_trace(kron(rs, ra, rb), [0, 1]), kron(rs, ra), atol=1e-15)
    assert np.allclose(partial_trace(kron(rs, ra, rb), 2), rb, atol=1e-15)


def test_partial_trace_maximally_mixed():
    assert np.allclose(partial_trace(np.eye(8) / 8, 0), np.eye(2) / 2)


def test_partial_trace_four_dim(rng):
    a, b = random_density_matrix(2, rng), random_density_matrix(2, rng)
    assert np.allclose(partial_trace(kron(a, b), 1), b)


@pytest.mark.parametrize("dim", [2, 3, 6, 16])
def test_partial_trace_bad_dimension(dim):
    with pytest.raises(BadFactorization):
        partial_trace(np.eye(dim) / dim, 0)


@given(seeds)
def test_partial_trace_trace_preserving(seed):
    rho = random_density_matrix(8, np.random.default_rng(seed))
    red = partial_trace(rho, 0)
    assert abs(np.trace(red) - 1) <= TOL.trace
    check_density_matrix(red)


@given(seeds, st.floats(-3, 3), st.floats(-3, 3))
def test_partial_trace_linear(seed, x, y):
    rng = np.random.default_rng(seed)
    a, b = random_hermitian(8, rng), random_hermitian(8, rng)
    lhs = partial_trace(x * a + y * b, 0)
    rhs = x * partial_trace(a, 0) + y * partial_trace(b, 0)
    assert np.abs(lhs - rhs).max() <= 1e-12 * (1 + abs(x) + abs(y)) * 10


def test_trace_distance_examples():
    a = np.diag([0.7, 0.3])
    assert trace_distance(a, a) == 0
    assert trace_distance(np.diag([1, 0]), np.diag([0, 1])) == pytest.approx(1.0)
    assert trace_distance(a, np.diag([0.5, 0.5])) == pytest.approx(0.2, abs=1e-15)


def test_trace_distance_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        trace_distance(np.eye(2) / 2, np.eye(4) / 4)


@given(seeds)
def test_trace_distance_metric(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (random_density_matrix(2, rng) for _ in range(3))
    assert abs(trace_distance(a, b) - trace_distance(b, a)) <= 1e-12
    assert trace_distance(a, c) <= trace_distance(a, b) + trace_distance(b, c) + 1e-12
    assert 0 <= trace_distance(a, b) <= 1


def test_pauli_algebra():
    assert np.allclose(SX @ SY, 1j * SZ)
