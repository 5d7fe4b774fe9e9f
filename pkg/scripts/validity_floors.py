"""Smallest n from which each Lascoux polynomial agrees with the combinatorial function.

    python scripts/validity_floors.py --max-weight 8
"""

import argparse
from itertools import combinations

from lascoux.polynomials import lp_polynomial


def index_sets(max_weight):
    for r in range(max_weight + 1):
        for i_set in combinations(range(max_weight + 1), r):
            if r + sum(i_set) <= max_weight:
                yield i_set


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-weight", type=int, default=8)
    args = parser.parse_args()

    for kind in "CD":
        floors = {}
        for i_set in index_sets(args.max_weight):
            lp = lp_polynomial(kind, i_set)
            floors[i_set] = (lp.validity_floor, max(i_set, default=-1) + 1)
        above = {k: v for k, v in floors.items() if v[0] > 0}
        print(f"type {kind}: {len(floors)} sets, floor > 0 for {len(above)}")
        for i_set, (floor, anchor) in sorted(above.items()):
            print(f"  I={list(i_set)} floor={floor} anchor={anchor}")

    count, above = 0, []
    for r in range(3):
        for i_set in combinations(range(5), r):
            for j_set in combinations(range(5), r):
                lp = lp_polynomial("A", i_set, j_set)
                count += 1
                if lp.validity_floor > 0:
                    above.append((i_set, j_set, lp.validity_floor))
    print(f"type A: {count} pairs, floor > 0 for {len(above)}")
    for i_set, j_set, floor in above:
        print(f"  I={list(i_set)} J={list(j_set)} floor={floor}")


if __name__ == "__main__":
    main()
