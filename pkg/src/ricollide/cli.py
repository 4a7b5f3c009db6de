"""Command line front end: trajectories, sweeps, energetics, runtimes, self-checks.

Config files are ``key = value`` lines; ``#`` starts a comment. Keys:

    omega_s, omega_a   splittings (``omega`` sets both)
    jxx, jyy, jzz      couplings (default 0)
    beta               inverse temperature of both baths (or beta1, beta2; default 1)
    tau                collision duration (required, > 0)
    p0, c0_re, c0_im   initial ground population and coherence (default 0.5, 0, 0)
    steps              number of collisions (default 50)
    epsilon            trace-distance threshold for runtimes (default 1e-6)
"""
import argparse
import io
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import analytics, engine, oracles, thermo
from .errors import (DiagonalOnly, InvalidState, NoSteadyState, NotConverged, ParseError, RICollideError,
                     ValidationError)
from .model import ModelParams, QubitState

FLOAT_KEYS = ("omega", "omega_s", "omega_a", "jxx", "jyy", "jzz", "beta", "beta1", "beta2",
              "tau", "p0", "c0_re", "c0_im", "epsilon")
INT_KEYS = ("steps",)
SWEEP_VARIABLES = ("jzz", "tau", "beta", "jxx", "jyy")
QUANTITIES = ("eta", "eta0", "p_inf", "psi2", "psi2_0", "psi2_tilde",
              "q1", "q2", "w1", "w2", "n_star_sim", "n_star_an")
THREADS_ENV = "RI_COLLIDE_THREADS"


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    points: int

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValidationError("sweep_variable",
                                  f"cannot vary {self.variable!r}; choose from {SWEEP_VARIABLES}")
        if self.points < 2:
            raise ValidationError("sweep_points", "a sweep needs at least 2 points")

    def values(self):
        return np.linspace(self.start, self.stop, self.points)


@dataclass(frozen=True)
class RunConfig:
    params: ModelParams
    initial: QubitState
    steps: int = 50
    epsilon: float = 1e-6
    sweep: SweepSpec = None
    output: str = None
    values: dict = field(default_factory=dict, compare=False, repr=False)

    def with_variable(self, name, value):
        """Params with one sweep variable replaced."""
        key = {"jzz": "j_zz", "jxx": "j_xx", "jyy": "j_yy", "tau": "tau"}.get(name)
        if name == "beta":
            return self.params.with_(beta=value)
        return self.params.with_(**{key: value})


def _parse_lines(text):
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in FLOAT_KEYS and key not in INT_KEYS:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in values:
            raise ParseError(f"duplicate key {key!r}", lineno)
        try:
            values[key] = int(value) if key in INT_KEYS else float(value)
        except ValueError:
            raise ParseError(f"bad value {value!r} for {key}", lineno) from None
    return values


def parse_config(text, sweep=None, output=None):
    """Parse and validate config text into a RunConfig."""
    v = _parse_lines(text)
    if "tau" not in v:
        raise ValidationError("tau_required", "tau is required")
    if not v["tau"] > 0:
        raise ValidationError("tau_positive", "tau must be > 0")
    if "omega" in v and ("omega_s" in v or "omega_a" in v):
        raise ValidationError("omega_alias", "give omega or omega_s/omega_a, not both")
    omega_s = v.get("omega_s", v.get("omega"))
    omega_a = v.get("omega_a", v.get("omega"))
    if omega_s is None or omega_a is None:
        raise ValidationError("omega_required", "omega (or omega_s and omega_a) is required")
    if "beta" in v and ("beta1" in v or "beta2" in v):
        raise ValidationError("beta_alias", "give beta or beta1/beta2, not both")
    beta1 = v.get("beta1", v.get("beta", 1.0))
    beta2 = v.get("beta2", v.get("beta", beta1))
    try:
        params = ModelParams(omega_s, omega_a, v.get("jxx", 0.0), v.get("jyy", 0.0),
                             v.get("jzz", 0.0), v["tau"], beta1, beta2)
    except ValueError as exc:
        raise ValidationError("params", str(exc)) from None
    try:
        initial = QubitState(v.get("p0", 0.5), complex(v.get("c0_re", 0.0), v.get("c0_im", 0.0)))
    except InvalidState as exc:
        raise ValidationError("initial_state_positivity", str(exc)) from None
    steps = v.get("steps", 50)
    if steps < 0:
        raise ValidationError("steps_nonnegative", "steps must be >= 0")
    epsilon = v.get("epsilon", 1e-6)
    if not epsilon > 0:
        raise ValidationError("epsilon_positive", "epsilon must be > 0")
    return RunConfig(params, initial, steps, epsilon, sweep, output, v)


def fmt(x):
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return f"{float(x):.17g}"


def write_csv(header, rows, out):
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(fmt(x) for x in row) + "\n")


def worker_count():
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValidationError("threads", f"{THREADS_ENV} must be an integer") from None
    return min(8, os.cpu_count() or 1)


def parallel_map(fn, items):
    """Map preserving input order, so output does not depend on worker count."""
    items = list(items)
    n = worker_count()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _chi(cfg, params):
    chi = cfg.initial.chi
    if chi is None:
        if params.j_xx != params.j_yy:
            raise ValidationError("chi_required",
                                  "psi depends on the coherence phase when jxx != jyy; set c0")
        return 0.0
    return chi


def _evolved_state(cfg, params):
    state = cfg.initial
    step = engine.Collision(params)
    for _ in range(cfg.steps):
        state = step(state)
    return state


def _runtime(fn):
    try:
        return fn()
    except (NotConverged, NoSteadyState, DiagonalOnly):
        return math.nan


def step_budget(cfg, params, floor=100_000):
    """Simulation cap: the default, raised past the analytic bound near frozen points."""
    try:
        n_an = engine.runtime_analytic(cfg.initial.p, params, engine.RuntimeQuery(cfg.epsilon))
    except (NoSteadyState, RICollideError):
        return floor
    return max(floor, 2 * n_an + 10)


def quantity(name, cfg, params):
    """Value of one sweep quantity at ``params``."""
    if name == "eta":
        return analytics.eta_exact(params)
    if name == "eta0":
        return analytics.eta_exact(params.with_(j_zz=0.0))
    if name == "p_inf":
        try:
            return analytics.p_infinity(params)
        except NoSteadyState:
            return math.nan
    if name == "psi2":
        return abs(analytics.psi_exact(params, _chi(cfg, params))) ** 2
    if name == "psi2_0":
        return abs(analytics.psi_exact(params.with_(j_zz=0.0), _chi(cfg, params))) ** 2
    if name == "psi2_tilde":
        return abs(analytics.psi_tilde_heisenberg(params, _chi(cfg, params))) ** 2
    if name in ("q1", "q2", "w1", "w2"):
        return getattr(thermo.energetics_step(_evolved_state(cfg, params), params), name)
    if name == "n_star_an":
        return _runtime(lambda: engine.runtime_analytic(
            cfg.initial.p, params, engine.RuntimeQuery(cfg.epsilon), cfg.initial.c))
    if name == "n_star_sim":
        return _runtime(lambda: engine.runtime_simulated(
            cfg.initial, params, engine.RuntimeQuery(cfg.epsilon, step_budget(cfg, params))))
    raise ValidationError("quantity", f"unknown quantity {name!r}; choose from {QUANTITIES}")


def cmd_dynamics(cfg, out):
    traj = engine.evolve(cfg.initial, cfg.params, cfg.steps)
    rows = []
    for r in traj.records:
        QubitState(r.p, r.c)
        rows.append((r.n, r.p, r.c.real, r.c.imag, abs(r.c), r.distance_to_target))
    write_csv(("n", "p", "c_re", "c_im", "abs_c", "distance_to_target"), rows, out)
    return 0


def cmd_sweep(cfg, quantities, out):
    if cfg.sweep is None:
        raise ValidationError("sweep_required", "sweep needs --vary/--from/--to/--points")
    for q in quantities:
        if q not in QUANTITIES:
            raise ValidationError("quantity", f"unknown quantity {q!r}; choose from {QUANTITIES}")

    def row(x):
        params = cfg.with_variable(cfg.sweep.variable, x)
        return (x, *(quantity(q, cfg, params) for q in quantities))

    rows = parallel_map(row, cfg.sweep.values())
    write_csv((cfg.sweep.variable, *quantities), rows, out)
    return 0


def cmd_thermo(cfg, out):
    """Per-collision ledger along the trajectory."""
    state = cfg.initial
    step = engine.Collision(cfg.params)
    rows = []
    for n in range(cfg.steps + 1):
        e = thermo.energetics_step(state, cfg.params)
        rows.append((n, state.p, state.c.real, state.c.imag, e.q1, e.q2, e.w1, e.w2,
                     e.delta_e_s, e.balance))
        state = step(state)
    write_csv(("n", "p", "c_re", "c_im", "q1", "q2", "w1", "w2", "delta_e_s", "balance"),
              rows, out)
    return 0


def cmd_runtime(cfg, out):
    def row(params):
        return (quantity("n_star_sim", cfg, params), quantity("n_star_an", cfg, params))

    if cfg.sweep is None:
        write_csv(("n_sim", "n_an"), [row(cfg.params)], out)
        return 0
    xs = cfg.sweep.values()
    rows = parallel_map(lambda x: (x, *row(cfg.with_variable(cfg.sweep.variable, x))), xs)
    write_csv((cfg.sweep.variable, "n_sim", "n_an"), rows, out)
    return 0


def cmd_verify(seed, trials, out):
    results = oracles.run_suite(seed=seed, trials=trials)
    for r in results:
        for line in r.lines():
            out.write(line + "\n")
    return 0 if all(r.ok for r in results) else 1


CSV_HELP = """\
CSV output: header row, comma separated, floats at 17 significant digits, LF newlines.
  dynamics: n,p,c_re,c_im,abs_c,distance_to_target
  sweep:    <variable>,<quantity>...
  thermo:   n,p,c_re,c_im,q1,q2,w1,w2,delta_e_s,balance
  runtime:  [<variable>,]n_sim,n_an   (nan when frozen, not converged, or n_an with c0 != 0)
verify prints 'PASS <check> ...' or 'FAIL <check> <params> <residual>' lines.
Environment: RI_COLLIDE_THREADS caps sweep workers.
"""


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ricollide", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter, epilog=CSV_HELP)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_config(name, help_):
        p = sub.add_parser(name, help=help_, epilog=CSV_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("config", help="config file ('-' for stdin)")
        p.add_argument("-o", "--output", help="CSV path (default stdout)")
        return p

    with_config("dynamics", "trajectory of the system qubit")
    sw = with_config("sweep", "closed-form or simulated quantities along a 1-D sweep")
    sw.add_argument("--quantity", "-q", action="append", required=True, choices=QUANTITIES)
    for p in (sw, with_config("runtime", "simulated vs analytic thermalization runtime")):
        p.add_argument("--vary", choices=SWEEP_VARIABLES)
        p.add_argument("--from", dest="start", type=float)
        p.add_argument("--to", dest="stop", type=float)
        p.add_argument("--points", type=int, default=51)
    with_config("thermo", "per-collision heat/work ledger")

    v = sub.add_parser("verify", help="run the seeded oracle suite")
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("-o", "--output")
    return parser


def _load(args):
    text = sys.stdin.read() if args.config == "-" else open(args.config).read()
    sweep = None
    if getattr(args, "vary", None):
        if args.start is None or args.stop is None:
            raise ValidationError("sweep_range", "--vary needs --from and --to")
        sweep = SweepSpec(args.vary, args.start, args.stop, args.points)
    return parse_config(text, sweep=sweep, output=args.output)


def main(argv=None):
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        if args.command == "verify":
            status = cmd_verify(args.seed, args.trials, buf)
        else:
            cfg = _load(args)
            if args.command == "dynamics":
                status = cmd_dynamics(cfg, buf)
            elif args.command == "sweep":
                status = cmd_sweep(cfg, args.quantity, buf)
            elif args.command == "thermo":
                status = cmd_thermo(cfg, buf)
            else:
                status = cmd_runtime(cfg, buf)
    except (RICollideError, OSError) as exc:
        sys.stderr.write(f"FAIL {args.command} {type(exc).__name__}: {exc}\n")
        return 2
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return status


if __name__ == "__main__":
    sys.exit(main())
