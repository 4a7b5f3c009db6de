"""Exact collision-by-collision evolution of the system qubit."""
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NoSteadyState, NotConverged
from .model import QubitState, build_hamiltonians, build_heisenberg_hamiltonians
from .qmath import dagger, hermitian_expm, kron, partial_trace

FROZEN_CUTOFF = 1e-14


@lru_cache(maxsize=256)
def collision_unitary(params):
    """exp(-i H_tot tau); identical for every collision of a run, hence cached."""
    return hermitian_expm(build_hamiltonians(params).h_tot, params.tau)


@lru_cache(maxsize=256)
def heisenberg_unitary(params):
    h_s, h_a, h_i = build_heisenberg_hamiltonians(params)
    return hermitian_expm(h_s + h_a + h_i, params.tau)


@lru_cache(maxsize=256)
def ancilla_product(params):
    """rho_A1 (x) rho_A2, both Gibbs states (4x4)."""
    a1 = np.diag([params.p_a1, 1 - params.p_a1]).astype(complex)
    a2 = np.diag([params.p_a2, 1 - params.p_a2]).astype(complex)
    return kron(a1, a2)


def initial_product(state, params):
    """rho_S (x) rho_A1 (x) rho_A2 with fresh Gibbs ancillas."""
    return np.kron(state.matrix(), ancilla_product(params))


class Collision:
    """One parameter set's collision map with the unitary and ancillas precomputed."""

    def __init__(self, params, u=None):
        self.params = params
        self.u = collision_unitary(params) if u is None else u
        self.u_dag = self.u.conj().T
        self.ancillas = ancilla_product(params)

    def matrix(self, state):
        rho_s = state.matrix()
        # kron(rho_s, ancillas) without the generic kron overhead
        rho = (rho_s[:, None, :, None] * self.ancillas[None, :, None, :]).reshape(8, 8)
        return partial_trace(self.u @ rho @ self.u_dag, keep=0)

    def __call__(self, state):
        return QubitState.from_matrix(self.matrix(state))


def ri_step_matrix(state, params, u=None):
    """One collision; returns the 2x2 reduced matrix without validation."""
    return Collision(params, u).matrix(state)


def ri_step(state, params, u=None):
    return Collision(params, u)(state)


def heisenberg_step(state, params, u=None):
    """One collision of the single-bath Heisenberg model (bath 1 only)."""
    u = heisenberg_unitary(params) if u is None else u
    a = np.diag([params.p_a1, 1 - params.p_a1]).astype(complex)
    rho = kron(state.matrix(), a)
    return QubitState.from_matrix(partial_trace(u @ rho @ dagger(u), keep=0))


@dataclass(frozen=True)
class StepRecord:
    n: int
    p: float
    c: complex
    distance_to_target: float


@dataclass
class Trajectory:
    params: object
    records: list = field(default_factory=list)
    target_p: float = math.nan

    def __len__(self):
        return len(self.records)

    def __getitem__(self, i):
        return self.records[i]

    @property
    def populations(self):
        return np.array([r.p for r in self.records])

    @property
    def coherences(self):
        return np.array([r.c for r in self.records])

    def states(self):
        return [QubitState(r.p, r.c) for r in self.records]


@dataclass(frozen=True)
class RuntimeQuery:
    epsilon: float
    max_steps: int = 100_000

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be > 0")
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")


def qubit_distance(a, b):
    """Trace distance between two qubit states: sqrt(dp^2 + |dc|^2)."""
    return math.hypot(a.p - b.p, abs(a.c - b.c))


def _distance(state, target_p):
    if math.isnan(target_p):
        return math.nan
    return math.hypot(state.p - target_p, abs(state.c))


def fixed_point(params, tol=1e-13, max_steps=100_000, start=None):
    """Iterate from ``start`` (default maximally mixed) until three successive
    steps each move the state by less than ``tol`` in trace distance."""
    step = Collision(params)
    state = QubitState(0.5) if start is None else start
    quiet = 0
    for n in range(1, max_steps + 1):
        nxt = step(state)
        moved = qubit_distance(nxt, state)
        state = nxt
        quiet = quiet + 1 if moved < tol else 0
        if quiet >= 3:
            return state
    raise NotConverged(f"no fixed point within {max_steps} steps", steps=max_steps)


def target_population(params, tol=1e-13):
    """Steady-state population: closed form when valid, else the numeric fixed point.

    Raises NoSteadyState for frozen dynamics.
    """
    from . import analytics

    if params.equal_temperatures:
        if abs(1 - analytics.eta_exact(params)) < FROZEN_CUTOFF:
            raise NoSteadyState("eta == 1: frozen dynamics")
        return analytics.p_infinity(params)
    return fixed_point(params, tol=tol).p


def evolve(initial, params, n_steps):
    """Trajectory of ``n_steps`` collisions, ``n_steps + 1`` records including ``initial``."""
    if n_steps < 0:
        raise ValueError("n_steps must be >= 0")
    try:
        target = target_population(params)
    except (NoSteadyState, NotConverged):
        target = math.nan
    step = Collision(params)
    traj = Trajectory(params, target_p=target)
    state = initial
    traj.records.append(StepRecord(0, state.p, state.c, _distance(state, target)))
    for n in range(1, n_steps + 1):
        state = step(state)
        traj.records.append(StepRecord(n, state.p, state.c, _distance(state, target)))
    return traj


def runtime_simulated(initial, params, query):
    """Smallest n with trace distance to the steady state <= epsilon.

    The target is diag(p_inf, 1 - p_inf). With unequal bath temperatures the
    target is the numeric fixed point, found to epsilon / 10.
    """
    if params.equal_temperatures:
        target = target_population(params)
    else:
        target = fixed_point(params, tol=query.epsilon / 10, max_steps=query.max_steps).p
    step = Collision(params)
    state = initial
    for n in range(query.max_steps + 1):
        if _distance(state, target) <= query.epsilon:
            return n
        state = step(state)
    raise NotConverged(f"not within {query.epsilon} after {query.max_steps} steps",
                       steps=query.max_steps)


def runtime_analytic(p0, params, query, c0=0j):
    """Lower bound ceil(ln(eps / |p0 - p_inf|) / ln|eta|) for diagonal starts."""
    from . import analytics
    from .errors import DiagonalOnly

    if c0 != 0:
        raise DiagonalOnly("the runtime bound holds only for states without coherence")
    eta = analytics.eta_exact(params)
    if abs(1 - eta) < FROZEN_CUTOFF or abs(eta) >= 1:
        raise NoSteadyState(f"|eta| = {abs(eta)} gives no contraction")
    gap = abs(p0 - analytics.p_infinity(params))
    if query.epsilon >= gap:
        return 0
    if eta == 0:
        return 1
    return math.ceil(math.log(query.epsilon / gap) / math.log(abs(eta)))
