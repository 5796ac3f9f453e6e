#!/usr/bin/env python3
"""Means of positive matrices and why squaring is not order-safe.

Every normalized symmetric operator-monotone function f generates a matrix
mean via A^1/2 f(A^-1/2 B A^-1/2) A^1/2.  The three classics (harmonic,
geometric, arithmetic) come out of f(t) = 2t/(1+t), sqrt(t), (1+t)/2, and
they are ordered exactly like their scalar namesakes.  The same machinery
shows that t^2, which is monotone on numbers, fails for matrices.
"""

import numpy as np

from statgeom import (
    arithmetic_mean,
    geometric_mean,
    harmonic_mean,
    mean_axioms_check,
    min_eigenvalue,
    operator_monotone_test,
    square_monotonicity_counterexample,
)


def three_means():
    a = np.array([[2.0, 1.0], [1.0, 2.0]])
    b = np.array([[3.0, 0.0], [0.0, 1.0]])
    h = harmonic_mean(a, b)
    g = geometric_mean(a, b)
    m = arithmetic_mean(a, b)

    print("== the classic trio ==")
    print("harmonic:\n", h)
    print("geometric:\n", g)
    print("arithmetic:\n", m)

    print("\nordering (harmonic <= geometric <= arithmetic):")
    print(f"  min eig of G - H: {min_eigenvalue(g - h):.6e}")
    print(f"  min eig of A - G: {min_eigenvalue(m - g):.6e}")

    print("\ngeometric mean solves G A^-1 G = B:")
    residual = g @ np.linalg.inv(a) @ g - b
    print(f"  residual norm: {np.linalg.norm(residual):.3e}")
    print()


def axioms_hold():
    print("== mean axioms on random positive pairs ==")
    for name in ("harmonic", "geometric", "arithmetic"):
        report = mean_axioms_check(name, seed=3, trials=40)
        print(f"  {name:>10}: {report['violations']} violations in {report['trials']} trials")
    print()


def squaring_breaks_order():
    print("== t^2 is monotone for numbers, not for matrices ==")
    report = operator_monotone_test(np.square, dim=2, seed=1, trials=500)
    witness = report["counterexample"]
    if witness is None:
        print("  no counterexample found (unexpected)")
        return
    a, b = witness["a"], witness["b"]
    print("  found A >= B >= 0 with A^2 - B^2 indefinite:")
    print("  A =\n", a)
    print("  B =\n", b)
    print(f"  min eig of A - B    : {min_eigenvalue(a - b):.3e}  (>= 0)")
    print(f"  min eig of A^2 - B^2: {witness['min_eigenvalue']:.3e}  (< 0)")

    fixed = square_monotonicity_counterexample()
    print("\n  a deterministic witness, for the record:")
    print("  A =\n", fixed["a"])
    print("  B =\n", fixed["b"])
    print(f"  min eig of A^2 - B^2 = {fixed['square_diff_min_eigenvalue']:.6f}"
          f"  (exactly 3 - sqrt(10))")
    print()


def sqrt_is_safe():
    print("== sqrt passes the same stress test ==")
    report = operator_monotone_test(np.sqrt, dim=3, seed=1, trials=200)
    print(f"  counterexample: {report['counterexample']}")
    print(f"  worst margin over {report['trials']} trials: {report['min_gap']:.3e}")


if __name__ == "__main__":
    np.set_printoptions(precision=6, suppress=True)
    three_means()
    axioms_hold()
    squaring_breaks_order()
    sqrt_is_safe()
