"""Gaussian binomials three ways, and what happens as q -> 1.

The product formula, the Pascal-type recursion and a brute-force count of
weighted compositions all give the same polynomial.  Setting q = 1 recovers
the ordinary binomial coefficient.
"""

from math import comb

from qbernoulli.exact import QRat, qrat_eval, qrat_limit_q1
from qbernoulli.qcore import gauss_binom, gauss_binom_partition_oracle, gauss_binom_recursive, q_falling, q_factorial

n, k = 6, 3
g = gauss_binom(n, k)
print(f"binom({n},{k})_q = {QRat(g)}")
print("  recursion agrees:", g == gauss_binom_recursive(n, k))
print("  partition count agrees:", g == gauss_binom_partition_oracle(n, k))
print(f"  at q=1: {qrat_limit_q1(QRat(g))} (classical {comb(n, k)})")
print(f"  at q=2: {qrat_eval(QRat(g), 2)} subspaces of dimension {k} in F_2^{n}")

# the q-falling factorial divided by [k]_q! is the same object
print("\n[6]_q [5]_q [4]_q / [3]_q! equals it:", q_falling(6, 3) / QRat(q_factorial(3)) == QRat(g))

print("\nRow n = 5:")
for j in range(6):
    print(f"  k={j}: {QRat(gauss_binom(5, j))}")
