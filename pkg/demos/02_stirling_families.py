"""Two second-kind q-Stirling families and the bridge between them.

S2(n, k) expands [x]_q^n over q-falling factorials.  The bivariate family
s2(n, k) looks different but is a relabelling: s2(n, k) = S2(n + k, n).
First-kind numbers invert the expansion.
"""

from qbernoulli.exact import qrat_limit_q1
from qbernoulli.stirling import classical_stirling2, stirling1, stirling2_C, stirling2_S

print("S2(4, k):")
for k in range(5):
    v = stirling2_S(4, k)
    print(f"  k={k}: {v}   -> {qrat_limit_q1(v)} (classical {classical_stirling2(4, k)})")

print("\nbridge s2(n, k) = S2(n + k, n):")
for n, k in [(1, 1), (2, 1), (2, 2), (3, 2)]:
    print(f"  s2({n},{k}) = {stirling2_C(n, k)}  ==  S2({n + k},{n}): {stirling2_C(n, k) == stirling2_S(n + k, n)}")

print("\nfirst kind, row 4 (coefficients of prod_{j<4} (X - [j]_q)):")
for k in range(5):
    print(f"  s1(4,{k}) = {stirling1(4, k)}")
