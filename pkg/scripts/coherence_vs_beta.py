"""|psi|^2 against inverse temperature at resonance for several J_zz."""
import argparse
import sys

import numpy as np

from ricollide import analytics
from ricollide.cli import write_csv
from ricollide.model import ModelParams


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tau", type=float, default=0.1)
    ap.add_argument("--jzz", type=float, nargs="+", default=[0.0, 0.5, 1.0, 2.0])
    ap.add_argument("--beta-max", type=float, default=10.0)
    ap.add_argument("--points", type=int, default=100)
    args = ap.parse_args()

    rows = []
    for jzz in args.jzz:
        for beta in np.linspace(0.1, args.beta_max, args.points):
            params = ModelParams.resonant(1.0, 1.0, jzz, args.tau, beta)
            rows.append((jzz, beta, analytics.psi_sq_ec_resonant(params)))
    write_csv(("jzz", "beta", "psi2"), rows, sys.stdout)


if __name__ == "__main__":
    main()
