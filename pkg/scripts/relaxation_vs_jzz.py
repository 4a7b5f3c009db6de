"""eta and population trajectories across J_zz at resonance, for several collision times."""
import argparse
import sys

import numpy as np

from ricollide import analytics
from ricollide.cli import write_csv
from ricollide.engine import evolve
from ricollide.model import ModelParams, QubitState


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--taus", type=float, nargs="+", default=[0.1, 1.0, 5.0, 10.0])
    ap.add_argument("--jzz-max", type=float, default=5.0)
    ap.add_argument("--points", type=int, default=201)
    ap.add_argument("--steps", type=int, default=0, help="also emit p after this many collisions")
    args = ap.parse_args()

    rows = []
    for tau in args.taus:
        for jzz in np.linspace(0, args.jzz_max, args.points):
            params = ModelParams.resonant(1.0, 1.0, jzz, tau, 1.0)
            p_n = evolve(QubitState(0.5), params, args.steps)[-1].p
            rows.append((tau, jzz, analytics.eta_exact(params), analytics.eta0(params), p_n))
    write_csv(("tau", "jzz", "eta", "eta0", "p_n"), rows, sys.stdout)


if __name__ == "__main__":
    main()
