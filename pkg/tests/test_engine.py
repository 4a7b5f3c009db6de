import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ricollide import analytics
from ricollide.engine import (Collision, RuntimeQuery, collision_unitary, evolve, fixed_point,
                              qubit_distance, ri_step, ri_step_matrix, runtime_analytic,
                              runtime_simulated, target_population)
from ricollide.errors import DiagonalOnly, NoSteadyState, NotConverged
from ricollide.model import ModelParams, QubitState
from ricollide.qmath import TOL, check_density_matrix, trace_distance

def resonant(jzz, tau, beta=1.0):
    return ModelParams.resonant(1.0, 1.0, jzz, tau, beta)


@st.composite
def params(draw, equal_beta=True):
    b1 = draw(st.floats(0, 10))
    return ModelParams(draw(st.floats(0.1, 5)), draw(st.floats(0.1, 5)), draw(st.floats(0, 5)),
                       draw(st.floats(0, 5)), draw(st.floats(0, 5)), draw(st.floats(0.01, 20)),
                       b1, b1 if equal_beta else draw(st.floats(0, 10)))


@st.composite
def states(draw):
    p = draw(st.floats(0, 1))
    r = math.sqrt(p * (1 - p)) * draw(st.floats(0, 1))
    return QubitState(p, r * complex(math.cos(phi := draw(st.floats(-3.14, 3.14))), math.sin(phi)))


def test_unitary_tau_zero_is_identity():
    assert np.allclose(collision_unitary(ModelParams(1, 2, 1, 0.5, 0.3, 0.0)), np.eye(8))


@given(params(equal_beta=False))
def test_unitary_is_unitary(p):
    u = collision_unitary(p)
    assert np.abs(u.conj().T @ u - np.eye(8)).max() <= TOL.unitarity


def test_free_evolution_keeps_populations_and_rotates_coherence():
    p = ModelParams(1.3, 0.7, 0, 0, 0, 2.1)
    s = QubitState(0.4, 0.3 + 0.2j)
    out = ri_step(s, p)
    assert out.p == pytest.approx(s.p, abs=1e-14)
    assert abs(out.c) == pytest.approx(abs(s.c), abs=1e-14)
    assert out.c == pytest.approx(s.c * np.exp(1j * 1.3 * 2.1), abs=1e-14)


@given(params(equal_beta=False), st.floats(0, 1))
def test_diagonal_stays_diagonal(p, pop):
    assert abs(ri_step(QubitState(pop), p).c) <= 1e-13


def test_single_step_half_relaxation():
    p = resonant(0.0, math.pi / 8)
    p_a = p.p_a
    out = ri_step(QubitState(1.0), p)
    assert out.p == pytest.approx(p_a + 0.5 * (1 - p_a), abs=1e-13)
    assert analytics.eta_exact(p) == pytest.approx(0.5, abs=1e-14)


@given(params(equal_beta=False), states())
def test_cptp(p, s):
    check_density_matrix(ri_step_matrix(s, p))


@given(params(), states())
def test_exact_recursion(p, s):
    out = ri_step(s, p)
    eta = analytics.eta_exact(p)
    assert abs(eta) <= 1 + 1e-14
    try:
        p_inf = analytics.p_infinity(p)
    except NoSteadyState:
        assert out.p == pytest.approx(s.p, abs=1e-10)
    else:
        assert abs(out.p - (p_inf + eta * (s.p - p_inf))) <= 1e-10
    if s.chi is not None:
        assert abs(out.c - analytics.psi_exact(p, s.chi) * abs(s.c)) <= 1e-10


def test_collision_matches_generic_path():
    p = ModelParams(1.1, 0.9, 0.4, 0.2, 0.7, 3.0, 0.5, 2.0)
    s = QubitState(0.3, 0.1 - 0.2j)
    assert np.allclose(Collision(p).matrix(s), ri_step_matrix(s, p, collision_unitary(p)))


def test_evolve_zero_steps():
    s = QubitState(0.2, 0.1)
    traj = evolve(s, resonant(0.5, 1.0), 0)
    assert len(traj) == 1 and traj[0].p == s.p and traj[0].c == s.c and traj[0].n == 0


def test_evolve_records_valid_and_ordered():
    traj = evolve(QubitState(0.9, 0.25j), resonant(1.0, 0.7), 60)
    assert [r.n for r in traj.records] == list(range(61))
    for s in traj.states():
        check_density_matrix(s.matrix())
    assert traj[-1].distance_to_target < traj[0].distance_to_target


def test_slowed_relaxation_strong_dephasing():
    p = resonant(5.0, 10.0)
    traj = evolve(QubitState(0.5), p, 40)
    assert p.p_a - traj[-1].p > 0.05
    # without the dephasing bath the same start is at p_A within 1e-6
    assert abs(evolve(QubitState(0.5), resonant(0.0, 10.0), 40)[-1].p - p.p_a) < 1e-6


def test_thermalizes_to_gibbs():
    p = resonant(0.0, 1.0)
    s = fixed_point(p)
    assert trace_distance(s.matrix(), QubitState(p.p_a).matrix()) <= 1e-8


def test_fixed_point_unequal_beta_is_fixed():
    p = ModelParams(1, 1, 1, 0.5, 0.5, 1.0, 0.5, 3.0)
    s = fixed_point(p)
    assert qubit_distance(ri_step(s, p), s) < 1e-12


def test_target_population_frozen():
    with pytest.raises(NoSteadyState):
        target_population(resonant(0.0, math.pi / 2))


def test_runtime_at_target_is_zero():
    p = resonant(0.3, 1.0)
    s = QubitState(analytics.p_infinity(p))
    assert runtime_simulated(s, p, RuntimeQuery(1e-6)) == 0


def test_runtime_analytic_scalar():
    # eta = 0.5, gap 0.23, eps 1e-6: ceil(log(1e-6/0.23)/log 0.5)
    p = resonant(0.0, math.pi / 8)
    p0 = p.p_a - 0.23
    assert math.ceil(math.log(1e-6 / 0.23) / math.log(0.5)) == 18
    assert runtime_analytic(p0, p, RuntimeQuery(1e-6)) == 18
    assert runtime_analytic(p0, p, RuntimeQuery(0.3)) == 0


def test_runtime_analytic_errors():
    with pytest.raises(DiagonalOnly):
        runtime_analytic(0.5, resonant(0.0, 1.0), RuntimeQuery(1e-6), c0=0.1)
    with pytest.raises(NoSteadyState):
        runtime_analytic(0.5, resonant(0.0, math.pi / 2), RuntimeQuery(1e-6))


def test_runtime_query_validation():
    with pytest.raises(ValueError):
        RuntimeQuery(0.0)
    with pytest.raises(ValueError):
        RuntimeQuery(1e-6, 0)


@pytest.mark.parametrize("jzz", [0.0, 0.4, 1.0, 3.0, 4.5])
def test_runtime_simulated_matches_analytic(jzz):
    p = resonant(jzz, 10.0)
    q = RuntimeQuery(1e-6)
    assert abs(runtime_simulated(QubitState(0.5), p, q) - runtime_analytic(0.5, p, q)) <= 1


def test_runtime_tracks_bound_across_beta():
    # from the maximally mixed state the gap |1/2 - p_A| grows with beta, so n* does too
    q = RuntimeQuery(1e-6)
    n = []
    for beta in (0.5, 1.0, 2.0, 4.0):
        p = resonant(1.0, 10.0, beta)
        n_an = runtime_analytic(0.5, p, q)
        assert abs(runtime_simulated(QubitState(0.5), p, q) - n_an) <= 1
        n.append(n_an)
    assert n == sorted(n)


def test_near_frozen_hits_cap():
    # J_zz = 2 sits on a point where eta is within 1e-4 of one
    p = resonant(2.0, 10.0)
    assert analytics.eta_exact(p) > 0.9999
    with pytest.raises(NotConverged):
        runtime_simulated(QubitState(0.5), p, RuntimeQuery(1e-6, 1000))


@given(states(), states())
def test_qubit_distance_is_trace_distance(a, b):
    assert qubit_distance(a, b) == pytest.approx(trace_distance(a.matrix(), b.matrix()), abs=1e-12)
