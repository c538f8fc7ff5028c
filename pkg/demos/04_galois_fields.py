"""
The cyclotomic action on classes
================================

The base field enters only through H, the image of its Galois group in
(Z/eZ)^x. Classes fuse into orbits, and each orbit size is the degree of
the field K(s-bar) over K.
"""
from steinitz.galois import OmegaAction, field_of_class, omega_orbits
from steinitz.group import parse_group
from steinitz.verify import omega_actions

G = parse_group("metacyclic:7,3,2")
C = G.classes

for A in omega_actions(G.exponent):
    orbits = omega_orbits(G, A)
    print("H =", A.H.elements)
    for orbit in orbits:
        f = field_of_class(G, A, orbit[0])
        print("   classes", orbit, "m =", f.m, "degree", f.degree, "fixer", f.fixer.elements)

# over Q the two classes of order 7 merge; over Q(sqrt(-7)) they stay apart
print(omega_orbits(G, OmegaAction.generated(21, [2])))
