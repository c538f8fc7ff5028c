"""
Groups and their character tables
=================================

A group is a Cayley table. The Frobenius group of order 21 has five classes
and irreducible degrees 1, 1, 1, 3, 3.
"""
from steinitz.characters import character_table, restrict_multiplicities, VirtualCharacter
from steinitz.group import abelianization, parse_group, sylow2_class

G = parse_group("metacyclic:7,3,2")
C = G.classes
print("order", G.order, "exponent", G.exponent)
print("class sizes", C.sizes, "orders", C.rep_orders)
print("abelianization", abelianization(G), "Sylow-2:", sylow2_class(G).name)

T = character_table(G)
print("degrees", T.degrees)

# eigenvalue multiplicities of an element of order 7 in a 3-dimensional irreducible
seven = C.rep_orders.index(7)
chi = VirtualCharacter.basis(len(T), T.degrees.index(3))
print("multiplicities of zeta_7^j:", restrict_multiplicities(T, chi, seven))
