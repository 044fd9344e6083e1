"""
Wedges and the full chain
=========================

Fermionic states are semi-infinite wedges xi_l1 xi_l2 ... of anticommuting
symbols whose indices eventually run l_j = j.  Reordering factors costs a
sign per transposition.  The composite map from polynomials in z_j to
wedges preserves inner products, which verify_isometry checks exhaustively.
"""

from bfcorr import boson_to_fermion, fermion_to_boson, fock_inner, normalize_wedge, verify_isometry, wedge, z

# xi_2 xi_-1 xi_3 xi_4 ... = -xi_-1 xi_2 xi_3 ...
sign, l = normalize_wedge([2, -1], tail_start=3)
print(sign, l.values(4), l.partition)

# a repeated index kills the product
print(normalize_wedge([0, 0]))

# z1^2 goes to two wedges, z2 to their difference
a = boson_to_fermion(z(1, 2))
b = boson_to_fermion(z(2))
print("z1^2 ->", a)
print("z2   ->", b)
print("<z1^2, z2> in the wedge space:", fock_inner(a, b))

# back again
print(fermion_to_boson(wedge(-1)))

report = verify_isometry(5)
print(report.to_text())
