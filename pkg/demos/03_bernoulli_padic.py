"""Carlitz q-Bernoulli numbers, exactly and as p-adic integrals.

beta_m comes out of an umbral recursion as a rational function of q.  The
same number is the limit of Riemann sums of [x]_q^m against the q-measure on
Z_p.  With p = 5 and q = 6 the sums agree with beta_m to more 5-adic digits
at every level N.
"""

from qbernoulli.bernoulli import carlitz_beta, classical_bernoulli, euler_order
from qbernoulli.exact import qrat_limit_q1
from qbernoulli.padic import IntegrandSpec, PadicQ, convergence_probe, volkenborn

for m in range(6):
    b = carlitz_beta(m)
    print(f"beta_{m} = {b}   (q -> 1: {qrat_limit_q1(b)}, B_{m} = {classical_bernoulli(m)})")

q = PadicQ.from_offset(5, 1)
print(f"\nRiemann sums at p = 5, q = {q.q}")
for m in (1, 2, 3):
    rows = convergence_probe(IntegrandSpec.powq(m), q, range(1, 7), "bosonic", carlitz_beta(m))
    print(f"  m={m}: digits of agreement by N:", [v for _, v in rows])

print("\nlevel-6 sum for m = 2:", volkenborn(IntegrandSpec.powq(2), q, 6))

e = euler_order(1, 1, 0)
print(f"\nthe fermionic measure gives q-Euler numbers: E_1(0) = {e}, q -> 1: {qrat_limit_q1(e)}")
rows = convergence_probe(IntegrandSpec.powq(1), q, range(1, 6), "fermionic", e)
print("  digits of agreement by N:", [v for _, v in rows])
