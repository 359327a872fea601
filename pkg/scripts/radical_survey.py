#!/usr/bin/env python3
"""Survey radical dimensions and trace-form kernels of H_N^i over a range of N.

For each N this prints the dimension of the nilradical, the kernel
dimensions of the two trace forms, and whether the radical is contained in
each kernel (the containment half of the semisimplicity conjecture).

Usage: radical_survey.py [--n-max 4] [--json]
"""

import argparse
import json

from hni.radical import conjecture_probe_json, radical_report


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=4)
    parser.add_argument("--json", action="store_true",
                        help="emit the full machine-readable probe instead")
    args = parser.parse_args()

    if args.json:
        print(conjecture_probe_json(args.n_max))
        return

    print(f"{'N':>3} {'dim':>5} {'radical':>8} {'form kernels':>16} {'contained':>10}")
    for n in range(1, args.n_max + 1):
        rep = radical_report(n)
        contained = "yes" if all(rep.containment_flags.values()) else "NO"
        print(f"{n:>3} {8 * n:>5} {rep.dim_radical:>8} "
              f"{str(rep.trace_kernel_dims):>16} {contained:>10}")


if __name__ == "__main__":
    main()
