"""
Exact arithmetic with roots of unity
====================================

Values of characters live in Q(zeta_n). Elements are stored in the power
basis modulo the n-th cyclotomic polynomial, so equality is exact.
"""
from steinitz.cyclotomic import cyclo_poly, root_of_unity

# Phi_12 = x^4 - x^2 + 1, lowest degree first
print("Phi_12:", cyclo_poly(12))

z3 = root_of_unity(3)
print("1 + z3 + z3^2 =", 1 + z3 + z3 * z3)

# sqrt(2) = zeta_8 + zeta_8^7, and sigma_3 flips its sign
s2 = root_of_unity(8) + root_of_unity(8, 7)
print("s2^2 =", s2 * s2, " sigma_3(s2) = -s2:", s2.galois(3) == -s2)

# the same number written over two conductors compares equal
print("zeta_4 == zeta_12^3:", root_of_unity(4) == root_of_unity(12, 3))
