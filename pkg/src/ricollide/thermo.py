"""Heat and work per collision.

Every quantity is the change of an energy operator over one collision,
Tr[(U^dag X U - X) rho_S (x) rho_A1 (x) rho_A2], so that

    dE_S + Q1 + Q2 + W1 + W2 = 0

holds because U commutes with H_tot. Q_i is the energy change of ancilla i,
W_i that of interaction term i.

The initial <H_I1> vanishes for diagonal ancillas, so W1 is the post-collision
interaction energy. The initial <H_I2> = J_zz (2p - 1)(2p_A2 - 1) does not
vanish in general.
"""
from dataclasses import dataclass

import numpy as np

from .analytics import _pa, half_sinc
from .engine import collision_unitary, initial_product
from .errors import LedgerViolation
from .model import build_hamiltonians, energy_params
from .qmath import commutator_norm, dagger

BALANCE_TOL = 1e-10
Q2_TOL = 1e-12


def energy_change(op, state, params, u=None):
    u = collision_unitary(params) if u is None else u
    rho = initial_product(state, params)
    return float(np.trace((dagger(u) @ op @ u - op) @ rho).real)


def _sector_terms(params, p_a):
    """sin^2-weighted transition factors of the four sectors: (alpha, kappa, nu, xi)."""
    e = energy_params(params)
    t = params.tau
    jm2, jp2 = e.j_minus ** 2, e.j_plus ** 2
    return e, (4 * jm2 * half_sinc(e.alpha, t) ** 2,
               4 * jm2 * half_sinc(e.kappa, t) ** 2,
               4 * jp2 * half_sinc(e.nu, t) ** 2,
               4 * jp2 * half_sinc(e.xi, t) ** 2)


def heat_bath1(state, params, method="trace"):
    if method == "trace":
        return energy_change(build_hamiltonians(params).h_a1, state, params)
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    p_a = _pa(params, None)
    p = state.p
    _, (ta, tk, tn, tx) = _sector_terms(params, p_a)
    return params.omega_a * (-tn * (p - p_a) * (1 - p_a)
                             + ta * (p - (1 - p_a)) * (1 - p_a)
                             + tk * (p - (1 - p_a)) * p_a
                             - tx * (p - p_a) * p_a)


def heat_bath2(state, params):
    """Energy change of the dephasing ancilla; zero for any temperatures."""
    return energy_change(build_hamiltonians(params).h_a2, state, params)


def work_bath1(state, params, method="trace"):
    if method == "trace":
        return energy_change(build_hamiltonians(params).h_i1, state, params)
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    p_a = _pa(params, None)
    p = state.p
    jz, wa, ws = params.j_zz, params.omega_a, params.omega_s
    _, (ta, tk, tn, tx) = _sector_terms(params, p_a)
    return (tk * (2 * jz - wa - ws) * p_a * (p - (1 - p_a))
            + tx * (2 * jz + wa - ws) * p_a * (p - p_a)
            - ta * (2 * jz + wa + ws) * (1 - p_a) * (p - (1 - p_a))
            - tn * (2 * jz - wa + ws) * (1 - p_a) * (p - p_a))


def work_bath2(state, params, method="trace"):
    if method == "trace":
        return energy_change(build_hamiltonians(params).h_i2, state, params)
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    p_a = _pa(params, None)
    p = state.p
    _, (ta, tk, tn, tx) = _sector_terms(params, p_a)
    return 2 * params.j_zz * (-tk * p_a * (p - (1 - p_a))
                              - tx * p_a * (p - p_a)
                              + ta * (1 - p_a) * (p - (1 - p_a))
                              + tn * (1 - p_a) * (p - p_a))


def system_energy_change(state, params):
    return energy_change(build_hamiltonians(params).h_s, state, params)


def dephasing_commutator_norm(params):
    """max |[H_tot, H_A2]| entry; the mechanism behind Q2 = 0."""
    h = build_hamiltonians(params)
    return commutator_norm(h.h_tot, h.h_a2)


@dataclass(frozen=True)
class StepEnergetics:
    q1: float
    q2: float
    w1: float
    w2: float
    delta_e_s: float

    @property
    def balance(self):
        return self.delta_e_s + self.q1 + self.q2 + self.w1 + self.w2

    def check(self, balance_tol=BALANCE_TOL, q2_tol=Q2_TOL):
        if not abs(self.balance) <= balance_tol:
            raise LedgerViolation(f"energy balance off by {self.balance:.3e}")
        if not abs(self.q2) <= q2_tol:
            raise LedgerViolation(f"dephasing-bath heat {self.q2:.3e} is not zero")
        return self


def energetics_step(state, params):
    """All five energy changes of one collision, checked against the ledger invariants."""
    h = build_hamiltonians(params)
    u = collision_unitary(params)
    rho = initial_product(state, params)
    ud = dagger(u)

    def change(op):
        return float(np.trace((ud @ op @ u - op) @ rho).real)

    return StepEnergetics(
        q1=change(h.h_a1),
        q2=change(h.h_a2),
        w1=change(h.h_i1),
        w2=change(h.h_i2),
        delta_e_s=change(h.h_s),
    ).check()


def steady_state_energetics(params):
    """Energetics of one collision starting from diag(p_inf, 1 - p_inf)."""
    from .analytics import p_infinity
    from .model import QubitState

    p = min(1.0, max(0.0, p_infinity(params)))
    return energetics_step(QubitState(p), params)

