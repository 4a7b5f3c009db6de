"""Simulated and analytic thermalization runtimes across J_zz (maximally mixed start)."""
import argparse
import sys

import numpy as np

from ricollide.cli import write_csv
from ricollide.engine import RuntimeQuery, runtime_analytic, runtime_simulated
from ricollide.errors import NoSteadyState
from ricollide.model import ModelParams, QubitState


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tau", type=float, default=10.0)
    ap.add_argument("--beta", type=float, default=1.0)
    ap.add_argument("--epsilon", type=float, default=1e-6)
    ap.add_argument("--jzz-max", type=float, default=5.0)
    ap.add_argument("--points", type=int, default=101)
    args = ap.parse_args()

    rows = []
    for jzz in np.linspace(0, args.jzz_max, args.points):
        params = ModelParams.resonant(1.0, 1.0, jzz, args.tau, args.beta)
        try:
            n_an = runtime_analytic(0.5, params, RuntimeQuery(args.epsilon))
        except NoSteadyState:
            rows.append((jzz, float("nan"), float("nan")))
            continue
        query = RuntimeQuery(args.epsilon, max(100_000, 2 * n_an + 10))
        rows.append((jzz, runtime_simulated(QubitState(0.5), params, query), n_an))
    write_csv(("jzz", "n_sim", "n_an"), rows, sys.stdout)


if __name__ == "__main__":
    main()
