"""
Three inner products that agree
===============================

Polynomials in z1, z2, ... carry an inner product in which the monomials
are orthogonal with squared norm prod k_j! j^k_j.  Sending z_j to the power
sum p_j carries it to the Hall inner product on symmetric functions, in
which the Schur functions are orthonormal.
"""

from fractions import Fraction

from bfcorr import apply_I, boson_inner, hall_inner, partitions_of, power_to_schur, schur, schur_to_power, z

f = z(1, 2) + Fraction(1, 2) * z(2)
g = z(1, 2) - z(2)
print("f =", f)
print("g =", g)
print("<f, g> =", boson_inner(f, g))

# the same number after z_j -> p_j
print("I f =", apply_I(f))
print("<If, Ig> =", hall_inner(apply_I(f), apply_I(g)))

# Schur functions written in power sums, and back
s21 = schur_to_power(schur(2, 1))
print("s(2,1) =", s21)
print("power sums of s(2,1) in the Schur basis:", power_to_schur(s21))

# orthonormality in weight 3
basis = [schur_to_power(schur(*lam)) for lam in partitions_of(3)]
for f in basis:
    print(" ".join(str(hall_inner(f, g)) for g in basis))
