"""Per-collision heat and work along a trajectory, with the energy balance residual."""
import argparse
import sys

from ricollide import thermo
from ricollide.cli import write_csv
from ricollide.engine import Collision
from ricollide.model import ModelParams, QubitState


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jzz", type=float, default=1.0)
    ap.add_argument("--tau", type=float, default=1.0)
    ap.add_argument("--beta", type=float, default=1.0)
    ap.add_argument("--steps", type=int, default=30)
    args = ap.parse_args()

    params = ModelParams.resonant(1.0, 1.0, args.jzz, args.tau, args.beta)
    step = Collision(params)
    state = QubitState(0.0)
    rows = []
    for n in range(args.steps + 1):
        e = thermo.energetics_step(state, params)
        rows.append((n, state.p, e.q1, e.q2, e.w1, e.w2, e.delta_e_s, e.balance))
        state = step(state)
    write_csv(("n", "p", "q1", "q2", "w1", "w2", "delta_e_s", "balance"), rows, sys.stdout)


if __name__ == "__main__":
    main()
