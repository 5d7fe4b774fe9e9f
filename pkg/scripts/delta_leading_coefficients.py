"""Degree and leading coefficient of n -> delta(m, n, n - s), per instance.

For s = 1 the closed forms are printed alongside; for s >= 2 only the
computed values are shown.

    python scripts/delta_leading_coefficients.py --s-max 2 --m-max 7
"""

import argparse

from lascoux.sdp_degree import degree_threshold, delta_polynomial, lc_delta_s1


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--s-max", type=int, default=2)
    parser.add_argument("--m-max", type=int, default=6)
    args = parser.parse_args()

    print("type s m degree lc closed_form")
    for kind in "CAD":
        for s in range(1, args.s_max + 1):
            for m in range(degree_threshold(kind, s), args.m_max + 1):
                p = delta_polynomial(kind, m, s)
                closed = lc_delta_s1(kind, m) if s == 1 else "-"
                print(kind, s, m, p.degree, p.leading_coefficient, closed)


if __name__ == "__main__":
    main()
