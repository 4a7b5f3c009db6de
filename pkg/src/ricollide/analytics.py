"""Closed-form collision coefficients and their limiting regimes.

Population recursion:  p' - p_inf = eta (p - p_inf)
Coherence recursion:   c' = psi(chi) |c|,   chi = arg c

All exact forms take a ``ModelParams`` with equal bath temperatures; the
ancilla population p_A may be overridden with ``p_a=``.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainViolation
from .model import energy_params, validate_for_analytics


def half_sinc(x, tau):
    """sin(x tau / 2) / x, continuous through x = 0 where it equals tau / 2."""
    return 0.5 * tau * float(np.sinc(x * tau / (2 * math.pi)))


def _pa(params, p_a):
    if p_a is not None:
        return p_a
    validate_for_analytics(params)
    return params.p_a1


def _require_ec_resonant(params):
    if params.j_xx != params.j_yy or params.omega_a != params.omega_s:
        raise DomainViolation("formula requires J_xx == J_yy and omega_A == omega_S")


def _transition_weights(params, p_a):
    """The four sector transition probabilities entering eta, already p_A-weighted."""
    e = energy_params(params)
    t = params.tau
    jm2, jp2 = e.j_minus ** 2, e.j_plus ** 2
    return (
        4 * jm2 * half_sinc(e.alpha, t) ** 2 * (1 - p_a),
        4 * jm2 * half_sinc(e.kappa, t) ** 2 * p_a,
        4 * jp2 * half_sinc(e.nu, t) ** 2 * (1 - p_a),
        4 * jp2 * half_sinc(e.xi, t) ** 2 * p_a,
    )


def eta_exact(params, p_a=None):
    """Population relaxation coefficient for arbitrary couplings."""
    return 1.0 - sum(_transition_weights(params, _pa(params, p_a)))


def p_infinity(params, p_a=None):
    """Steady-state ground population.

    Written as gain / (1 - eta): the numerator is the population pumped into
    the ground state from an empty start. Both vanish together only for frozen
    dynamics, which raises NoSteadyState.
    """
    from .engine import FROZEN_CUTOFF
    from .errors import NoSteadyState

    p_a = _pa(params, p_a)
    w_alpha, w_kappa, w_nu, w_xi = _transition_weights(params, p_a)
    loss = w_alpha + w_kappa + w_nu + w_xi
    if loss < FROZEN_CUTOFF:
        raise NoSteadyState("eta == 1: frozen dynamics")
    # (1 - p_A) [A(1-p_A) + K p_A] + p_A [N(1-p_A) + X p_A] with the p_A weights
    # already folded into w_*
    gain = (1 - p_a) * (w_alpha + w_kappa) + p_a * (w_nu + w_xi)
    return gain / loss


def eta_ec_resonant(params):
    _require_ec_resonant(params)
    j, jz = params.j_xx, params.j_zz
    r = math.sqrt(4 * j ** 2 + jz ** 2)
    if r == 0:
        return 1.0
    return 1.0 - 4 * j ** 2 / r ** 2 * math.sin(params.tau * r) ** 2


def eta_large_jzz(params):
    """Strong-dephasing approximation; every detuning taken as 2 J_zz."""
    jz = params.j_zz
    if jz == 0:
        raise ZeroDivisionError("large-J_zz form is undefined at J_zz = 0")
    jp = params.j_xx + params.j_yy
    jm = params.j_xx - params.j_yy
    return 1.0 - (jp ** 2 + jm ** 2) / jz ** 2 * math.sin(jz * params.tau) ** 2


def eta_series_tau4(params, p_a=None):
    """Fourth-order short-collision expansion of eta."""
    p_a = _pa(params, p_a)
    e = energy_params(params)
    t = params.tau
    jm2, jp2 = e.j_minus ** 2, e.j_plus ** 2
    quartic = (e.alpha ** 2 * jm2 * (1 - p_a) + e.nu ** 2 * jp2 * (1 - p_a)
               + e.kappa ** 2 * jm2 * p_a + e.xi ** 2 * jp2 * p_a)
    return 1.0 - 2 * (params.j_xx ** 2 + params.j_yy ** 2) * t ** 2 + quartic * t ** 4 / 12


def eta_jtau1(params):
    """Weak-but-long collision form: alpha, kappa dropped, xi = nu = 2 sqrt(J+^2 + Jzz^2)."""
    jp2 = (params.j_xx + params.j_yy) ** 2
    r2 = jp2 + params.j_zz ** 2
    if r2 == 0:
        return 1.0
    return 1.0 - jp2 * math.sin(params.tau * math.sqrt(r2)) ** 2 / r2


def eta_jtau1_equal(j, tau):
    """All three couplings equal to ``j``."""
    return 1.0 - 0.8 * math.sin(math.sqrt(5) * j * tau) ** 2


def eta0(params):
    """J_zz = 0 reference of the weak-but-long form: 1 - sin^2(2 J tau), J = J_xx."""
    return 1.0 - math.sin(2 * params.j_xx * params.tau) ** 2


def psi_exact(params, chi, p_a=None):
    """Complex coherence multiplier for a coherence of phase ``chi``."""
    p_a = _pa(params, p_a)
    e = energy_params(params)
    t = params.tau
    jz, wa, ws = params.j_zz, params.omega_a, params.omega_s
    sa, sk, sn, sx = (half_sinc(x, t) for x in (e.alpha, e.kappa, e.nu, e.xi))
    ca, ck, cn, cx = (math.cos(x * t / 2) for x in (e.alpha, e.kappa, e.nu, e.xi))

    flip = 4 * (params.j_xx ** 2 - params.j_yy ** 2) * (sa * sn * (1 - p_a) + sk * sx * p_a)
    keep = ((ca + 1j * (2 * jz + wa + ws) * sa) * (cn + 1j * (2 * jz - wa + ws) * sn) * (1 - p_a)
            + (cx - 1j * (2 * jz + wa - ws) * sx) * (ck - 1j * (2 * jz - wa - ws) * sk) * p_a)
    return flip * cmath.exp(-1j * chi) + keep * cmath.exp(1j * chi)


def psi_ec_resonant(params, chi, p_a=None):
    _require_ec_resonant(params)
    p_a = _pa(params, p_a)
    e = energy_params(params)
    t, w, jz = params.tau, params.omega_s, params.j_zz
    cn = math.cos(e.nu * t / 2)
    sn = 2 * jz * half_sinc(e.nu, t)
    return (cmath.exp(1j * (w + jz) * t) * (cn + 1j * sn) * (1 - p_a)
            + cmath.exp(1j * (w - jz) * t) * (cn - 1j * sn) * p_a) * cmath.exp(1j * chi)


def psi_sq_ec_resonant(params, p_a=None):
    """|psi|^2 on the energy-conserving resonant manifold (phase independent)."""
    _require_ec_resonant(params)
    p_a = _pa(params, p_a)
    e = energy_params(params)
    t, jz = params.tau, params.j_zz
    s2 = math.sin(e.nu * t / 2) ** 2
    # 2 J_zz sin(nu tau/2) / nu, regular at nu = 0
    g = 2 * jz * half_sinc(e.nu, t)
    q = p_a * (1 - p_a)
    return (1 - s2 + (1 - 2 * p_a) ** 2 * g ** 2
            - 4 * q * math.sin(t * jz) ** 2 * (1 - s2 - g ** 2)
            - 4 * q * g * math.cos(e.nu * t / 2) * math.sin(2 * t * jz))


def psi_sq_0(params):
    """|psi|^2 at J_zz = 0 on the energy-conserving manifold."""
    return 1.0 - math.sin(2 * params.j_xx * params.tau) ** 2


def psi_sq_large_jzz(params, p_a=None):
    p_a = _pa(params, p_a)
    return 1.0 - 4 * p_a * (1 - p_a) * math.sin(2 * params.j_zz * params.tau) ** 2


def psi_sq_series(params, p_a=None):
    """Fourth-order short-collision expansion of |psi|^2 (needs J_xx == J_yy)."""
    if params.j_xx != params.j_yy:
        raise DomainViolation("series form requires J_xx == J_yy")
    p_a = _pa(params, p_a)
    j2, z2, t = params.j_xx ** 2, params.j_zz ** 2, params.tau
    q = p_a * (1 - p_a)
    return (1 - 4 * j2 * t ** 2 - 16 * z2 * q * t ** 2
            + 64 / 3 * t ** 4 * q * z2 * (2 * j2 + z2)
            + 16 / 3 * j2 ** 2 * t ** 4 + 4 / 3 * j2 * z2 * t ** 4)


def psi_sq_jtau1(params, p_a=None):
    """Weak-but-long |psi|^2 with nu = 2 sqrt(J+^2 + Jzz^2)."""
    p_a = _pa(params, p_a)
    jp2 = (params.j_xx + params.j_yy) ** 2
    z2 = params.j_zz ** 2
    nu = 2 * math.sqrt(jp2 + z2)
    frac = z2 / (jp2 + z2) if jp2 + z2 > 0 else 0.0
    return 1.0 - math.sin(nu * params.tau / 2) ** 2 * (1 - frac * (1 - 2 * p_a) ** 2)


def psi_sq_jtau1_equal(j, tau, p_a):
    return 1.0 - math.sin(math.sqrt(5) * j * tau) ** 2 * (1 - 0.2 * (1 - 2 * p_a) ** 2)


@dataclass(frozen=True)
class HeisenbergEnergyParams:
    theta: float
    phi: float


def heisenberg_energy_params(params):
    """Rabi frequencies of the single-bath Heisenberg collision.

    theta couples |01>,|10> (hopping 2 J+ relative to detuning omega_A - omega_S);
    phi couples |00>,|11>.
    """
    jp = params.j_xx + params.j_yy
    jm = params.j_xx - params.j_yy
    return HeisenbergEnergyParams(
        theta=math.sqrt(4 * jp ** 2 + (params.omega_a - params.omega_s) ** 2),
        phi=math.sqrt(4 * jm ** 2 + (params.omega_a + params.omega_s) ** 2),
    )


def psi_tilde_heisenberg(params, chi, p_a=None):
    """Coherence multiplier of the single-bath model with J_xx, J_yy, J_zz on one ancilla."""
    p_a = _pa(params, p_a)
    h = heisenberg_energy_params(params)
    t, jz = params.tau, params.j_zz
    wa, ws = params.omega_a, params.omega_s
    st, sp = half_sinc(h.theta, t), half_sinc(h.phi, t)
    flip = 4 * (params.j_xx ** 2 - params.j_yy ** 2) * st * sp
    keep = ((math.cos(h.theta * t / 2) - 1j * (wa - ws) * st)
            * (math.cos(h.phi * t / 2) + 1j * (wa + ws) * sp))
    phase = cmath.exp(1j * chi)
    return (flip * cmath.exp(-1j * (chi + 2 * jz * t)) + keep * phase * cmath.exp(2j * jz * t)
            + 2j * p_a * (flip / phase - keep * phase) * math.sin(2 * jz * t))


@dataclass(frozen=True)
class RateConstants:
    gamma: float
    gamma_zz: float
    omega_rate: float
    delta: float


def rate_constants(params, p_a=None):
    _require_ec_resonant(params)
    p_a = _pa(params, p_a)
    j, jz, w, t = params.j_xx, params.j_zz, params.omega_s, params.tau
    return RateConstants(
        gamma=j ** 2 * t,
        gamma_zz=jz ** 2 * t,
        omega_rate=w ** 2 * t / 2,
        delta=2 * jz * (jz + w * (1 - 2 * p_a)) * t,
    )


@dataclass(frozen=True)
class EOMCoefficients:
    """Short-collision equations of motion.

    dp/dt = -population_rate (p - p_inf)
    dc/dt = coherence_generator * c        (includes the order-tau correction)
    ``coherence_generator_markov`` is its tau -> 0 limit at fixed rate constants.
    """

    population_rate: float
    coherence_generator: complex
    coherence_generator_markov: complex
    rates: RateConstants


def eom_coefficients(params, p_a=None):
    p_a = _pa(params, p_a)
    r = rate_constants(params, p_a)
    jz, w, t = params.j_zz, params.omega_s, params.tau
    b = 1 - 2 * p_a
    pop = 4 * r.gamma - 16 / 3 * r.gamma ** 2 * t - 4 / 3 * r.gamma_zz * r.gamma * t
    markov = 1j * (2 * jz * b + w) - (2 * r.gamma + r.delta + r.omega_rate)
    correction = -1j * (8 / 3 * r.gamma * jz * b + 4 / 3 * r.gamma_zz * b * jz
                        + 2 * w * (r.gamma + r.gamma_zz) + 2 * jz * b * r.omega_rate
                        + w / 3 * r.omega_rate) * t
    return EOMCoefficients(pop, markov + correction, markov, r)


REGIMES = ("large_jzz", "series", "jtau1")


def regime_hint(params, regime):
    """Ratio of neglected to retained scales for an approximate form; small is good.

    large_jzz: (|J_xx| + |J_yy| + omega) / |J_zz|
    series:    tau * max(energy scale)
    jtau1:     max(|J|) / omega, plus detuning |omega_A - omega_S| / omega
    """
    js = (abs(params.j_xx), abs(params.j_yy), abs(params.j_zz))
    w = max(params.omega_a, params.omega_s)
    if regime == "large_jzz":
        if params.j_zz == 0:
            return math.inf
        return (js[0] + js[1] + w) / js[2]
    if regime == "series":
        e = energy_params(params)
        return params.tau * max(e.xi, e.nu, e.kappa, e.alpha)
    if regime == "jtau1":
        if w == 0:
            return math.inf
        return max(js) / w + abs(params.omega_a - params.omega_s) / w
    raise ValueError(f"unknown regime {regime!r}; expected one of {REGIMES}")
