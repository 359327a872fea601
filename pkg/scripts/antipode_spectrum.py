#!/usr/bin/env python3
"""Print the antipode order and eigenspace decomposition of H_N^i.

Usage: antipode_spectrum.py [--n 1]
"""

import argparse

from hni.hopf import antipode_spectrum, build_hopf
from hni.quotient import build_hni


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=1)
    args = parser.parse_args()

    spec = antipode_spectrum(args.n)
    labels = build_hni(args.n).basis_labels
    print(f"H_{args.n}^i: antipode order {spec['order']}, "
          f"diagonalizable rank {spec['total_multiplicity']} of {len(labels)}")
    for space in spec["eigenspaces"].values():
        print(f"\neigenvalue {space['eigenvalue']} "
              f"(multiplicity {len(space['eigenvectors'])}):")
        for vec in space["eigenvectors"]:
            parts = [f"{c} {l}" for l, c in zip(labels, vec) if not c.is_zero()]
            print("  " + " + ".join(parts))


if __name__ == "__main__":
    main()
