"""
Comparison with Long's exact answer
===================================

When K holds the e-th roots of unity the bound collapses to Cl(O_K)^k.
For abelian G the realizable set is known exactly, so we can see where the
bound is sharp.
"""
from steinitz.bounds import c_of, compare_with_long, d_of, gcd_claim
from steinitz.group import abelian_invariant_lists, from_abelian

print("c(e), d(e) for e = 3..15:", [(e, c_of(e), d_of(e)) for e in range(3, 16)])
print("gcd claim holds up to 2000:", all(gcd_claim(e) for e in range(2, 2001)))

for n in (8, 16, 24, 32):
    for invs in abelian_invariant_lists(n):
        out = compare_with_long(from_abelian(invs))
        mark = "" if out["tight"] else "   <- strict"
        print(f"{str(invs):<16} bound {out['bound_exponent']:>2}  exact {out['long_exponent']:>2}{mark}")
