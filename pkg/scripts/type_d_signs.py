"""Scan complete type-D Schur expansions for negative coefficients.

    python scripts/type_d_signs.py --max-vars 5 --max-degree 8
"""

import argparse

from lascoux.schur_oracle import OracleBudget, expand_pairsum_power


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-vars", type=int, default=5)
    parser.add_argument("--max-degree", type=int, default=8)
    args = parser.parse_args()
    budget = OracleBudget(max_vars=args.max_vars, max_degree=args.max_degree)

    total = 0
    for k in range(1, args.max_vars + 1):
        for d in range(args.max_degree + 1):
            exp = expand_pairsum_power("D", d, k, budget=budget)
            total += len(exp.coefficients)
            if exp.negative_entries:
                print(f"k={k} d={d}: negative {exp.negative_entries}")
    print(f"{total} coefficients scanned")


if __name__ == "__main__":
    main()
