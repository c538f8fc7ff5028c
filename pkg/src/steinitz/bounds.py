"""Symbolic upper bounds on realizable Steinitz classes.

A bound is a list of factors N(K(s-bar)/K)^k, one per nontrivial orbit of
conjugacy classes, where N(F/K) is the norm image of Cl(O_F) in Cl(O_K).
Class groups are never computed: a factor is a field descriptor and an
exponent.  When the regular character has nontrivial determinant the bound
holds for the squares of the realizable classes and is flagged ``squared``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .galois import FieldDescriptor, OmegaAction, field_of_class, omega_orbits
from .group import GroupTable, Sylow2, abelianization, sylow2_class
from .stickelberger import rho_in_AG

__all__ = [
    "BoundFactor",
    "BoundExpression",
    "steinitz_bound",
    "abelian_bound",
    "merge_factors",
    "c_of",
    "d_of",
    "gcd_claim",
    "kummer_bound_exponent",
    "long_exponent",
    "compare_with_long",
]


@dataclass(frozen=True)
class BoundFactor:
    orbit_rep: int
    m: int
    field: FieldDescriptor
    exponent: int

    def to_json(self) -> dict:
        return {"m": self.m, "field": self.field.to_json(), "exponent": self.exponent}


@dataclass(frozen=True)
class BoundExpression:
    group: str
    kappa: tuple[int, ...]
    squared: bool
    factors: tuple[BoundFactor, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "kappa": list(self.kappa),
            "squared": self.squared,
            "factors": [f.to_json() for f in self.factors],
        }


def _exponent(n: int, m: int, squared: bool) -> int:
    num = (n // m) * (m - 1)
    if squared:
        return num
    if num % 2:
        raise ArithmeticError(f"(n/m)(m-1) = {num} is odd although rho_G lies in A_G")
    return num // 2


def steinitz_bound(G: GroupTable, A: OmegaAction) -> BoundExpression:
    """One factor per nontrivial Omega-orbit of classes, sorted by (m, orbit representative)."""
    squared = not rho_in_AG(G)
    C = G.classes
    n = G.order
    factors = []
    for orbit in omega_orbits(G, A):
        rep = orbit[0]
        m = C.rep_orders[rep]
        if m == 1:
            continue
        factors.append(BoundFactor(rep, m, field_of_class(G, A, rep), _exponent(n, m, squared)))
    factors.sort(key=lambda f: (f.m, f.orbit_rep))
    return BoundExpression(G.descriptor(), tuple(A.H.generators()), squared, tuple(factors))


def merge_factors(B: BoundExpression) -> BoundExpression:
    """Collapse factors that name the same norm subgroup with the same exponent.

    Identical subgroups raised to one exponent multiply to themselves, so this
    leaves the bounded set unchanged.
    """
    seen = {}
    for f in B.factors:
        key = (f.m, f.field, f.exponent)
        if key not in seen:
            seen[key] = f
    return BoundExpression(B.group, B.kappa, B.squared, tuple(seen.values()))


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def abelian_bound(G: GroupTable, A: OmegaAction) -> BoundExpression:
    """Abelian form: one factor N(K(zeta_m)/K) per divisor m > 1 of the exponent."""
    if not G.is_abelian:
        raise ValueError("abelian_bound needs an abelian group")
    squared = not rho_in_AG(G)
    n, e = G.order, G.exponent
    present = set(G.orders)
    factors = []
    for m in _divisors(e):
        if m == 1:
            continue
        # every divisor of the exponent of an abelian group is an element order
        assert m in present
        rep = G.classes.class_of[G.orders.index(m)]
        Hm = A.image(m)
        fixer = type(Hm).trivial(m)
        factors.append(BoundFactor(rep, m, FieldDescriptor(m, Hm, fixer), _exponent(n, m, squared)))
    return BoundExpression(G.descriptor(), tuple(A.H.generators()), squared, tuple(factors))


def _primes(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def c_of(e: int) -> int:
    """gcd of p - 1 over primes p | e; c(1) = 0."""
    if e < 1:
        raise ValueError("c(e) needs e >= 1")
    return math.gcd(*(p - 1 for p in _primes(e))) if e > 1 else 0


def d_of(e: int) -> int:
    """Long's d(e): gcd of (p - 1)/2 over p | e for odd e, and 1 for even e."""
    if e < 1:
        raise ValueError("d(e) needs e >= 1")
    if e % 2 == 0:
        return 1
    return math.gcd(*((p - 1) // 2 for p in _primes(e))) if e > 1 else 0


def gcd_claim(e: int) -> bool:
    """gcd over m | e, m > 1, of (e/m)(m-1) equals c(e)."""
    if e < 2:
        raise ValueError("gcd_claim needs e >= 2")
    g = 0
    for m in _divisors(e)[1:]:
        g = math.gcd(g, (e // m) * (m - 1))
    return g == c_of(e)


def _require_abelian(G: GroupTable) -> None:
    if not G.is_abelian:
        raise ValueError("this bound is stated for abelian groups only")


def kummer_bound_exponent(G: GroupTable) -> tuple[int, bool]:
    """Exponent k with R_t contained in Cl(O)^k when K holds the e-th roots of unity.

    Returns (k, squared); squared is always False because the cyclic Sylow-2
    case is promoted from squares using that n/e is odd there.
    """
    _require_abelian(G)
    n, e = G.order, G.exponent
    kind = sylow2_class(G)
    if kind is Sylow2.CYCLIC_NONTRIVIAL:
        return (n // e) * c_of(e), False
    num = (n // e) * c_of(e)
    assert num % 2 == 0
    return num // 2, False


def _two_part_elementary_divisors(G: GroupTable) -> list[int]:
    invs = abelianization(G)  # an abelian group is its own abelianization
    out = []
    for d in invs:
        t = d & -d
        if t > 1:
            out.append(t)
    return sorted(out)


def long_exponent(G: GroupTable) -> int:
    _require_abelian(G)
    n, e = G.order, G.exponent
    kind = sylow2_class(G)
    if kind is Sylow2.ODD_ORDER:
        return (n // e) * d_of(e)
    if kind is Sylow2.CYCLIC_NONTRIVIAL:
        return n // e
    divs = _two_part_elementary_divisors(G)
    top = divs[-1]
    return n // (2 * e) if divs.count(top) >= 2 else n // e


def compare_with_long(G: GroupTable) -> dict:
    bound = kummer_bound_exponent(G)[0]
    exact = long_exponent(G)
    contains = exact == 0 if bound == 0 else exact % bound == 0
    return {
        "bound_exponent": bound,
        "long_exponent": exact,
        "contains": contains,
        "tight": bound == exact,
    }
