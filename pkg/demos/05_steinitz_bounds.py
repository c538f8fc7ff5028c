"""
Bounds on realizable Steinitz classes
=====================================

Each nontrivial orbit of classes contributes a factor N(K(s-bar)/K)^k.
When rho_G is outside A_G (cyclic nontrivial Sylow-2) the bound is for
squares of classes.
"""
from steinitz.bounds import merge_factors, steinitz_bound
from steinitz.galois import OmegaAction
from steinitz.group import parse_group


def show(desc, kappa=None):
    G = parse_group(desc)
    A = kappa(G.exponent) if kappa else OmegaAction.full(G.exponent)
    B = merge_factors(steinitz_bound(G, A))
    tag = "squares" if B.squared else "classes"
    print(desc, "->", tag)
    for f in B.factors:
        print(f"    m={f.m:<3} degree {f.field.degree}  exponent {f.exponent}")


show("metacyclic:7,3,2")
show("abelian:6")
show("abelian:2,2")
show("perm:4:(1 2),(1 2 3 4)")
show("abelian:5", OmegaAction.trivial)
