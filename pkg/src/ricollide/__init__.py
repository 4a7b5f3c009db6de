"""Exact repeated-interaction dynamics of a qubit coupled to a dissipative and a dephasing bath."""
from . import analytics, engine, model, qmath, thermo
from .engine import Collision, RuntimeQuery, evolve, fixed_point, ri_step, runtime_analytic, \
    runtime_simulated
from .errors import *  # noqa: F401,F403
from .model import ModelParams, QubitState, energy_params

__version__ = "0.1.0"
