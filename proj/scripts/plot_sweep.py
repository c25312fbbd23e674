#!/usr/bin/env python3
"""Plot a CSV written by wigner_cli.

    wigner_cli sweep-theta --two-j 4000 > legendre.csv
    scripts/plot_sweep.py legendre.csv -o legendre.png

theta and j sweeps plot |abs_error| against theta (or j) on log-log axes;
integral sweeps plot |rel_error| against l.
"""

import argparse

import matplotlib.pyplot as plt
import pandas as pd


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("csv", nargs="+")
    parser.add_argument("-o", "--out", help="image file; shows a window when omitted")
    parser.add_argument("--relative", action="store_true", help="plot |rel_error| for theta/j sweeps")
    args = parser.parse_args()

    fig, ax = plt.subplots()
    for path in args.csv:
        df = pd.read_csv(path)
        if "l" in df.columns:
            ax.semilogy(df["l"], df["rel_error"].abs(), label=path)
            ax.set_xlabel("l")
            ax.set_ylabel("|relative error|")
            continue
        column = "rel_error" if args.relative else "abs_error"
        x = "theta" if df["theta"].nunique() > 1 else "two_j"
        xs = df[x] / 2 if x == "two_j" else df[x]
        ax.loglog(xs, df[column].abs(), label=path)
        ax.set_xlabel("j" if x == "two_j" else "theta")
        ax.set_ylabel("|relative error|" if args.relative else "|absolute error|")
    ax.legend()
    fig.tight_layout()
    if args.out:
        fig.savefig(args.out, dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
