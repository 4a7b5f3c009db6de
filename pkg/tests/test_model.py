import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ricollide.errors import InvalidState, UnequalTemperatures
from ricollide.model import (ModelParams, QubitState, build_hamiltonians, energy_params,
                             gibbs_ancilla, validate_for_analytics)
from ricollide.qmath import I2, SX, SY, SZ, commutator_norm, is_hermitian, kron

reals = st.floats(-5, 5)
pos = st.floats(0, 5)


@st.composite
def params(draw):
    return ModelParams(draw(pos), draw(pos), draw(reals), draw(reals), draw(reals),
                       draw(st.floats(0.01, 20)), draw(st.floats(0, 10)), draw(st.floats(0, 10)))


def test_gibbs_examples():
    assert gibbs_ancilla(1.0, 1.0).p == pytest.approx(0.731, abs=1e-3)
    assert gibbs_ancilla(0.0, 1.0).p == 0.5
    assert abs(gibbs_ancilla(50.0, 1.0).p - 1) <= 1e-12
    assert gibbs_ancilla(1.0, 1.0).c == 0


def test_params_defaults_and_validation():
    p = ModelParams(1, 1, 1, 1, 0, 1.0)
    assert p.beta2 == p.beta1 == 1.0
    with pytest.raises(ValueError):
        ModelParams(1, 1, 1, 1, 0, -1.0)
    with pytest.raises(ValueError):
        ModelParams(1, 1, 1, 1, 0, 1.0, beta1=-1)
    with pytest.raises(ValueError):
        ModelParams(1, 1, 1, 1, 0, 1.0, beta2=math.inf)


def test_qubit_state_positivity():
    QubitState(0.5, 0.5)
    with pytest.raises(InvalidState):
        QubitState(0.5, 0.6)
    with pytest.raises(InvalidState):
        QubitState(1.2)
    assert QubitState(0.3).chi is None
    assert QubitState(0.5, 0.2j).chi == pytest.approx(math.pi / 2)


def test_noninteracting_hamiltonian_diagonal():
    p = ModelParams(1.0, 0.7, 0, 0, 0, 1.0)
    h = build_hamiltonians(p).h_tot
    assert np.count_nonzero(h - np.diag(np.diag(h))) == 0
    # ground state energy -(omega_s + 2 omega_a)/2 at index 0, its negative at 7
    assert h[0, 0].real == pytest.approx(-(1.0 + 1.4) / 2)
    assert h[7, 7].real == pytest.approx((1.0 + 1.4) / 2)


def test_interaction_assembly():
    p = ModelParams(1, 1, 0.3, -0.8, 0.6, 1.0)
    h = build_hamiltonians(p)
    assert np.allclose(h.h_i1, 0.3 * kron(SX, SX, I2) - 0.8 * kron(SY, SY, I2))
    assert np.allclose(h.h_i2, 0.6 * kron(SZ, I2, SZ))
    assert np.allclose(h.h_tot, h.h_s + h.h_a1 + h.h_a2 + h.h_i1 + h.h_i2)


@given(params())
def test_hamiltonians_hermitian_and_dephasing_conserved(p):
    h = build_hamiltonians(p)
    for op in (h.h_s, h.h_a1, h.h_a2, h.h_i1, h.h_i2, h.h_tot):
        assert op.shape == (8, 8) and is_hermitian(op, 0.0)
    assert commutator_norm(h.h_tot, h.h_a2) <= 1e-12


def test_energy_params_examples():
    e = energy_params(ModelParams(1, 1, 1, 1, 0, 1.0))
    assert (e.xi, e.nu, e.kappa, e.alpha) == pytest.approx((4, 4, 2, 2))


@given(st.floats(0.1, 3), st.floats(0, 2), st.floats(0, 0.9))
def test_energy_params_resonant(w, j, frac):
    jzz = frac * w
    e = energy_params(ModelParams.resonant(w, j, jzz, 1.0, 1.0))
    assert e.xi == pytest.approx(2 * math.sqrt(4 * j * j + jzz * jzz))
    assert e.nu == pytest.approx(e.xi)
    assert e.kappa == pytest.approx(2 * (w - jzz))
    assert e.alpha == pytest.approx(2 * (w + jzz))


@pytest.mark.parametrize("jzz", [1e2, 1e3, 1e4])
def test_energy_params_large_jzz(jzz):
    w, j = 1.0, 1.0
    e = energy_params(ModelParams.resonant(w, j, jzz, 1.0, 1.0))
    for x in (e.xi, e.nu, e.kappa, e.alpha):
        assert abs(x - 2 * jzz) / (2 * jzz) <= (w + j) / jzz


@given(params())
def test_energy_params_bounds_and_swap(p):
    e = energy_params(p)
    assert e.xi >= 2 * abs(e.j_plus) - 1e-12 and e.nu >= 2 * abs(e.j_plus) - 1e-12
    assert e.kappa >= 2 * abs(e.j_minus) - 1e-12 and e.alpha >= 2 * abs(e.j_minus) - 1e-12
    s = energy_params(p.with_(j_xx=p.j_yy, j_yy=p.j_xx))
    assert s.j_minus == -e.j_minus
    assert (s.xi, s.nu, s.kappa, s.alpha) == (e.xi, e.nu, e.kappa, e.alpha)


def test_validate_for_analytics():
    validate_for_analytics(ModelParams(1, 1, 1, 1, 0, 1.0, 1.0, 1.0))
    validate_for_analytics(ModelParams(1, 1, 1, 1, 0, 1.0, 0.0, 0.0))
    with pytest.raises(UnequalTemperatures):
        validate_for_analytics(ModelParams(1, 1, 1, 1, 0, 1.0, 1.0, 2.0))
