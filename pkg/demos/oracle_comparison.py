"""Recursion engine against the exact closed forms, order by order.

Evaluates the first three computed coefficients on a momentum slice and
on the diagonal and prints the deviation from the closed-form oracles.

Run:  python3 demos/oracle_comparison.py
"""

import numpy as np

from colour3 import closedforms, recursion


def main():
    coeffs = recursion.compute_orders(3)
    fns = {1: closedforms.g2, 2: closedforms.g4, 3: closedforms.g6}

    print("slice p2 = 0.4, orders 1..3: |recursion - closed|\n")
    ps = [0.0, 0.1, 0.5, 1.0, 2.0, 3.5, 5.0, 8.0]
    print(f"{'p1':>5} " + " ".join(f"{'order %d' % n:>10}" for n in (1, 2, 3)))
    for p1 in ps:
        errs = [abs(float(coeffs[n](p1, 0.4)) - fns[n](p1, 0.4))
                for n in (1, 2, 3)]
        print(f"{p1:>5.2f} " + " ".join(f"{e:>10.1e}" for e in errs))

    print("\ndiagonal p1 = p2 = p, order 3 vs the exact diagonal limit:\n")
    print(f"{'p':>5} {'recursion':>16} {'closed':>16} {'abs err':>10}")
    for p in (0.0, 0.5, 1.0, 2.0, 5.0):
        r = recursion.diagonal(coeffs[3], p)
        c = closedforms.gp6_diag(p)
        print(f"{p:>5.2f} {r:>16.10f} {c:>16.10f} {abs(r - c):>10.1e}")

    print("\nresidual of the closed equation for the truncated series")
    print("(should scale like lambda^(2n+2) at truncation order n):\n")
    from colour3.quad import make_rule
    rule = make_rule(12, 24)
    for n in (1, 2):
        r = {}
        for lam in (0.05, 0.1):
            r[lam] = abs(recursion.closed_equation_residual(
                coeffs[:n + 1], lam, 1.3, 0.4, rule))
        slope = np.log(r[0.1] / r[0.05]) / np.log(2.0)
        print(f"  n={n}: residual {r[0.05]:.3e} -> {r[0.1]:.3e}, "
              f"exponent {slope:.3f} (expect {2 * n + 2})")


if __name__ == "__main__":
    main()
