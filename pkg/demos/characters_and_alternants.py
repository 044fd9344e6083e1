"""
Characters and alternants
=========================

The Schur expansion of a power sum p_mu has the irreducible characters of
the symmetric group as coefficients.  In finitely many variables the Schur
function times the Vandermonde product is an alternant, which gives a check
on the whole dictionary without any character theory.
"""

from bfcorr import apply_J, character_table, p, partitions_of, power_to_schur, schur, schur_to_power
from bfcorr import truncate_S, truncate_symm, vandermonde, verify_J_oracle

# p_2 p_1 = s(3) - s(1,1,1): the column mu = (2,1) of the table below
print("p2*p1 =", power_to_schur(p(2, 1)))

lambdas, mus, rows = character_table(4)
print(" " * 10 + "".join(f"{str(mu):>10}" for mu in mus))
for lam, row in zip(lambdas, rows):
    print(f"{str(lam):>10}" + "".join(f"{c:>10}" for c in row))

# s(2,1) in three variables, times prod_{i<j} (x_i - x_j) ...
n = 3
f = schur_to_power(schur(2, 1))
lhs = truncate_symm(f, n) * vandermonde(n)

# ... is the alternant labelled by the Maya diagram of (2,1)
image = apply_J(f)
print("J s(2,1) =", image)
[(l, c)] = image.items()
rhs = truncate_S(l, n).scale(c)
print("alternant:", rhs)
print("equal:", lhs == rhs)

# the same comparison for every partition of 5
print(all(verify_J_oracle(lam, 5) for lam in partitions_of(5)))
