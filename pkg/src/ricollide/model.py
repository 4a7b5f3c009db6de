"""Model parameters, Hamiltonians and derived energy scales."""
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidState, UnequalTemperatures
from .qmath import I2, SX, SY, SZ, TOL, kron


@dataclass(frozen=True)
class ModelParams:
    """Microscopic constants of one collision (hbar = 1).

    ``beta2`` defaults to ``beta1``. Only the collision engine and the
    dephasing-bath heat accept unequal temperatures; closed forms call
    :func:`validate_for_analytics` first.
    """

    omega_s: float
    omega_a: float
    j_xx: float
    j_yy: float
    j_zz: float
    tau: float
    beta1: float = 1.0
    beta2: float = None

    def __post_init__(self):
        if self.beta2 is None:
            object.__setattr__(self, "beta2", self.beta1)
        for name in ("omega_s", "omega_a", "j_xx", "j_yy", "j_zz", "tau", "beta1", "beta2"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.omega_s < 0 or self.omega_a < 0:
            raise ValueError("energy splittings must be >= 0")
        # tau = 0 is allowed: it is the identity channel
        if self.tau < 0:
            raise ValueError("tau must be >= 0")
        if self.beta1 < 0 or self.beta2 < 0:
            raise ValueError("inverse temperatures must be >= 0")

    @classmethod
    def resonant(cls, omega=1.0, j_xy=1.0, j_zz=0.0, tau=1.0, beta=1.0):
        """Energy-conserving resonant point: J_xx = J_yy, omega_A = omega_S."""
        return cls(omega, omega, j_xy, j_xy, j_zz, tau, beta, beta)

    def with_(self, **changes):
        # a single "beta" moves both baths together
        if "beta" in changes:
            b = changes.pop("beta")
            changes.setdefault("beta1", b)
            changes.setdefault("beta2", b)
        return replace(self, **changes)

    @property
    def equal_temperatures(self):
        return self.beta1 == self.beta2

    @property
    def p_a1(self):
        return gibbs_population(self.beta1, self.omega_a)

    @property
    def p_a2(self):
        return gibbs_population(self.beta2, self.omega_a)

    @property
    def p_a(self):
        validate_for_analytics(self)
        return self.p_a1

    @property
    def is_energy_conserving(self):
        return self.j_xx == self.j_yy

    @property
    def is_resonant(self):
        return self.omega_a == self.omega_s


def validate_for_analytics(params):
    if params.beta1 != params.beta2:
        raise UnequalTemperatures(
            f"closed forms assume one temperature, got beta1={params.beta1}, beta2={params.beta2}")
    return params


@dataclass(frozen=True)
class QubitState:
    """2x2 density matrix [[p, c], [c*, 1-p]] with p the ground-state population."""

    p: float
    c: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "c", complex(self.c))
        self.validate()

    def validate(self, slack=TOL.coherence):
        p, c = self.p, self.c
        if not (-slack <= p <= 1 + slack):
            raise InvalidState(f"population {p} outside [0, 1]")
        if abs(c) ** 2 > p * (1 - p) + slack:
            raise InvalidState(f"|c|^2={abs(c) ** 2:.6g} exceeds p(1-p)={p * (1 - p):.6g}")
        return self

    @property
    def chi(self):
        """Phase of the coherence, or None when c == 0 (undefined)."""
        if self.c == 0:
            return None
        return math.atan2(self.c.imag, self.c.real)

    def matrix(self):
        return np.array([[self.p, self.c], [np.conj(self.c), 1 - self.p]], dtype=complex)

    @classmethod
    def from_matrix(cls, rho):
        rho = np.asarray(rho)
        return cls(rho[0, 0].real, complex(rho[0, 1]))

    @classmethod
    def diagonal(cls, p):
        return cls(p, 0j)


def gibbs_population(beta, omega_a):
    """Ground-state population 1 / (1 + exp(-beta omega_A)) of a thermal qubit."""
    if beta < 0:
        raise ValueError("beta must be >= 0")
    return 1.0 / (1.0 + math.exp(-beta * omega_a))


def gibbs_ancilla(beta, omega_a):
    return QubitState(gibbs_population(beta, omega_a), 0j)


@dataclass(frozen=True, eq=False)
class Hamiltonians:
    """All operators embedded in the 8-dim S (x) A1 (x) A2 space."""

    h_s: np.ndarray
    h_a1: np.ndarray
    h_a2: np.ndarray
    h_i1: np.ndarray
    h_i2: np.ndarray

    @property
    def h_tot(self):
        return self.h_s + self.h_a1 + self.h_a2 + self.h_i1 + self.h_i2


def build_hamiltonians(params):
    ws, wa = params.omega_s, params.omega_a
    return Hamiltonians(
        h_s=kron(-0.5 * ws * SZ, I2, I2),
        h_a1=kron(I2, -0.5 * wa * SZ, I2),
        h_a2=kron(I2, I2, -0.5 * wa * SZ),
        h_i1=params.j_xx * kron(SX, SX, I2) + params.j_yy * kron(SY, SY, I2),
        h_i2=params.j_zz * kron(SZ, I2, SZ),
    )


def build_heisenberg_hamiltonians(params):
    """Single-bath model: one ancilla coupled by J_xx XX + J_yy YY + J_zz ZZ (4x4)."""
    ws, wa = params.omega_s, params.omega_a
    h_s = kron(-0.5 * ws * SZ, I2)
    h_a = kron(I2, -0.5 * wa * SZ)
    h_i = (params.j_xx * kron(SX, SX) + params.j_yy * kron(SY, SY)
           + params.j_zz * kron(SZ, SZ))
    return h_s, h_a, h_i


@dataclass(frozen=True)
class EnergyParams:
    xi: float
    nu: float
    kappa: float
    alpha: float
    j_plus: float
    j_minus: float


def energy_params(params):
    """Rabi frequencies of the four two-level sectors coupled by the collision."""
    jp = params.j_xx + params.j_yy
    jm = params.j_xx - params.j_yy
    jz, wa, ws = params.j_zz, params.omega_a, params.omega_s
    return EnergyParams(
        xi=math.sqrt(4 * jp ** 2 + (2 * jz + wa - ws) ** 2),
        nu=math.sqrt(4 * jp ** 2 + (2 * jz - wa + ws) ** 2),
        kappa=math.sqrt(4 * jm ** 2 + (-2 * jz + wa + ws) ** 2),
        alpha=math.sqrt(4 * jm ** 2 + (2 * jz + wa + ws) ** 2),
        j_plus=jp,
        j_minus=jm,
    )
