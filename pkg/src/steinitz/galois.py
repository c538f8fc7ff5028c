"""Cyclotomic action on conjugacy classes and the fields K(s-bar).

The Galois group of K enters only through its image H in (Z/eZ)^x, which the
caller declares.  For a class of elements of order m, the field K(s-bar)
sits inside K(zeta_m), whose Galois group over K is H reduced mod m; a
FieldDescriptor records that group, the subgroup fixing K(s-bar), and the
degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .group import GroupTable, ResidueGroup, normalizer_mu

__all__ = [
    "OmegaAction",
    "FieldDescriptor",
    "omega_orbits",
    "class_stabilizer",
    "field_of_class",
    "e_field_of_class",
    "orbit_degree_check",
    "parse_kappa",
]


@dataclass(frozen=True)
class OmegaAction:
    exponent: int
    H: ResidueGroup

    def __post_init__(self):
        if self.H.modulus != self.exponent:
            raise ValueError(f"H is taken mod {self.H.modulus}, expected mod {self.exponent}")

    @classmethod
    def full(cls, e: int) -> OmegaAction:
        return cls(e, ResidueGroup.units(e))

    @classmethod
    def trivial(cls, e: int) -> OmegaAction:
        return cls(e, ResidueGroup.trivial(e))

    @classmethod
    def generated(cls, e: int, gens: Iterable[int]) -> OmegaAction:
        return cls(e, ResidueGroup.generated(e, gens))

    def image(self, m: int) -> ResidueGroup:
        return self.H.reduce(m)


def parse_kappa(spec: str, e: int) -> OmegaAction:
    """'full' | 'trivial' | 'gens=a,b,...' (generators taken mod e)."""
    spec = spec.strip().replace(" ", "")
    if spec == "full":
        return OmegaAction.full(e)
    if spec == "trivial":
        return OmegaAction.trivial(e)
    if spec.startswith("gens="):
        body = spec[len("gens="):]
        gens = [int(x) for x in body.split(",")] if body else []
        bad = [g for g in gens if math.gcd(g, e) != 1]
        if bad:
            raise ValueError(f"kappa generators {bad} are not coprime to the exponent {e}")
        return OmegaAction.generated(e, gens)
    raise ValueError(f"malformed kappa spec {spec!r}")


@dataclass(frozen=True)
class FieldDescriptor:
    m: int
    H_m: ResidueGroup
    fixer: ResidueGroup

    def __post_init__(self):
        if not self.fixer.issubset(self.H_m):
            raise ValueError("fixer must be a subgroup of H_m")

    @property
    def degree(self) -> int:
        return len(self.H_m) // len(self.fixer)

    def to_json(self) -> dict:
        return {"m": self.m, "fixer_gens": self.fixer.generators(), "degree": self.degree}


def _check(G: GroupTable, A: OmegaAction) -> None:
    if G.exponent != A.exponent:
        raise ValueError(f"group exponent {G.exponent} differs from kappa modulus {A.exponent}")


def omega_orbits(G: GroupTable, A: OmegaAction, inverse: bool = False) -> list[list[int]]:
    """Orbits of classes under c -> class of rep(c)^h, h in H; each sorted, ordered by least id.

    ``inverse=True`` acts by h^-1 instead; the partition is the same because
    H is a group.
    """
    _check(G, A)
    C = G.classes
    e = A.exponent
    seen = [False] * len(C)
    orbits = []
    for c in range(len(C)):
        if seen[c]:
            continue
        orbit = set()
        for h in A.H:
            k = pow(h, -1, e) if inverse and e > 1 else h
            orbit.add(C.power_class(c, k))
        for d in orbit:
            seen[d] = True
        orbits.append(sorted(orbit))
    return orbits


def class_stabilizer(G: GroupTable, A: OmegaAction, c: int) -> ResidueGroup:
    """{h in H_m : rep(c)^h is conjugate to rep(c)}, by direct scan."""
    _check(G, A)
    C = G.classes
    m = C.rep_orders[c]
    Hm = A.image(m)
    return ResidueGroup(m, tuple(h for h in Hm if C.power_class(c, h) == c))


def field_of_class(G: GroupTable, A: OmegaAction, c: int) -> FieldDescriptor:
    """Fixer of K(s-bar) in Gal(K(zeta_m)/K) = H_m is H_m meet mu(N_G(<s>))."""
    _check(G, A)
    C = G.classes
    s = C.reps[c]
    m = C.rep_orders[c]
    Hm = A.image(m)
    mu = normalizer_mu(G, s)
    return FieldDescriptor(m=m, H_m=Hm, fixer=Hm.intersect(mu))


def e_field_of_class(G: GroupTable, A: OmegaAction, c: int) -> FieldDescriptor:
    """The same field reached through the cyclotomic character nu on Gal(K(zeta_m)/K).

    Builds the map mu_s : t -> r with t s t^-1 = s^r on the normalizer, then
    takes {omega : nu(omega)^-1 = mu_s(t) for some t}, the form in which
    omega moves s by the inverse of its cyclotomic exponent.
    """
    _check(G, A)
    C = G.classes
    s = C.reps[c]
    m = C.rep_orders[c]
    Hm = A.image(m)
    if m == 1:
        return FieldDescriptor(m=1, H_m=Hm, fixer=Hm)
    exps = {y: r for r, y in enumerate(G.powers(s))}
    mu_s = {}
    for t in range(G.order):
        y = G.conj(t, s)
        if y in exps:
            mu_s[t] = exps[y]
    image = set(mu_s.values())
    fixer = tuple(nu for nu in Hm if pow(nu, -1, m) in image)
    return FieldDescriptor(m=m, H_m=Hm, fixer=ResidueGroup(m, fixer))


def orbit_of(G: GroupTable, A: OmegaAction, c: int) -> list[int]:
    for orbit in omega_orbits(G, A):
        if c in orbit:
            return orbit
    raise KeyError(c)


def orbit_degree_check(G: GroupTable, A: OmegaAction, c: int) -> bool:
    """|Omega-orbit of c| equals [K(s-bar) : K]."""
    return len(orbit_of(G, A, c)) == field_of_class(G, A, c).degree
