"""eta - eta0 and |psi|^2 - |psi0|^2 against J in the weak-coupling, long-collision regime."""
import argparse
import math
import sys

import numpy as np

from ricollide import analytics
from ricollide.cli import write_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tau", type=float, default=1e3)
    ap.add_argument("--points", type=int, default=400)
    ap.add_argument("--p-a", type=float, default=1.0, help="ancilla ground population")
    args = ap.parse_args()

    rows = []
    for j in np.linspace(1e-4, 2 * math.pi / args.tau, args.points):
        eta = analytics.eta_jtau1_equal(j, args.tau)
        eta0 = math.cos(2 * j * args.tau) ** 2
        psi2 = analytics.psi_sq_jtau1_equal(j, args.tau, args.p_a)
        psi2_0 = math.cos(2 * j * args.tau) ** 2
        rows.append((j, eta - eta0, psi2 - psi2_0))
    write_csv(("j", "eta_minus_eta0", "psi2_minus_psi2_0"), rows, sys.stdout)


if __name__ == "__main__":
    main()
