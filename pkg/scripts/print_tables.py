#!/usr/bin/env python3
"""Print the named-basis multiplication table of H_N^i (N = 1 or 2).

Usage: print_tables.py [--n 1] [--block even|odd|all]
"""

import argparse

from hni.quotient import named_basis


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=1, choices=(1, 2))
    parser.add_argument("--block", choices=("even", "odd", "all"), default="all",
                        help="for N = 2, restrict to one diagonal block")
    args = parser.parse_args()

    algebra = named_basis(args.n).transport()
    labels = algebra.basis_labels
    if args.n == 2 and args.block != "all":
        half = labels[:8] if args.block == "even" else labels[8:]
        labels = half

    width = max(len(l) for l in labels) + 1
    pos = {l: algebra.basis_labels.index(l) for l in labels}

    def cell(x, y):
        vec = algebra.tensor[pos[x]][pos[y]]
        parts = [f"{c} {l}" for l, c in zip(algebra.basis_labels, vec)
                 if not c.is_zero()]
        return " + ".join(parts) if parts else "0"

    header = " " * width + " | " + " | ".join(f"{l:^{width}}" for l in labels)
    print(header)
    print("-" * len(header))
    for x in labels:
        print(f"{x:<{width}} | " + " | ".join(f"{cell(x, y):^{width}}" for y in labels))


if __name__ == "__main__":
    main()
