"""The pairing <phi, s>, the Stickelberger maps and the lattices A_G and S_G.

For a character phi and an element s of order m, restrict phi to <s> and
write the restriction as sum_j m_j psi_j with psi_j(s) = exp(2 pi i j/m).
Then <phi, s> = sum_j (j/m) m_j.  Theta sends phi to sum_s <phi, s> s in QG,
and its class-sum form lives in the rational span of conjugacy classes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .characters import (
    CharacterTable,
    _dft_multiplicities,
    class_function,
    VirtualCharacter,
    galois_conjugate,
    regular_character,
    restrict_multiplicities,
)
from .group import ConjClassSet, GroupTable, Sylow2, sylow2_class
from .intlat import hermite_normal_form, kernel_mod, lattice_index

__all__ = [
    "GroupRingElt",
    "ClassSumElt",
    "pairing",
    "pairing_from_multiplicities",
    "theta",
    "theta_bar",
    "iota",
    "theta_regular_closed_form",
    "in_AG",
    "det_character",
    "AG_basis",
    "AG_index",
    "stickelberger_module",
    "rho_in_AG",
    "omega_equivariance_check",
    "theta_json",
]


@dataclass(frozen=True)
class GroupRingElt:
    """Rational combination of group elements, indexed by element index."""

    coeffs: tuple[Fraction, ...]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


@dataclass(frozen=True)
class ClassSumElt:
    """Rational combination of conjugacy classes, indexed by class id."""

    coeffs: tuple[Fraction, ...]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def permuted(self, C: ConjClassSet, k: int) -> ClassSumElt:
        """Image under the class map c -> class of rep(c)^k (a bijection for k coprime to e)."""
        out = [Fraction(0)] * len(self.coeffs)
        for c, a in enumerate(self.coeffs):
            out[C.power_class(c, k)] += a
        return ClassSumElt(tuple(out))


def pairing_from_multiplicities(mult: Sequence[int]) -> Fraction:
    m = len(mult)
    return Fraction(sum(j * mj for j, mj in enumerate(mult)), m)


def _weighted_exponent(T: CharacterTable, phi: VirtualCharacter, c: int) -> int:
    """sum_j j m_j for phi restricted to <rep(c)>, by linearity over irreducibles."""
    total = 0
    for a, per_class in zip(phi.coeffs, T.multiplicities):
        if a:
            total += a * sum(j * mj for j, mj in enumerate(per_class[c]))
    return total


def pairing(T: CharacterTable, phi: VirtualCharacter, c: int) -> Fraction:
    """<phi, s> for s in class c."""
    return Fraction(_weighted_exponent(T, phi, c), T.classes.rep_orders[c])


def theta_bar(T: CharacterTable, phi: VirtualCharacter) -> ClassSumElt:
    return ClassSumElt(tuple(pairing(T, phi, c) for c in range(len(T.classes))))


def iota(C: ConjClassSet, x: ClassSumElt) -> GroupRingElt:
    """Spread each class coefficient over the members of the class."""
    if C.class_of is None:
        raise ValueError("iota needs class membership from a Cayley table")
    return GroupRingElt(tuple(x.coeffs[c] for c in C.class_of))


def theta(T: CharacterTable, phi: VirtualCharacter) -> GroupRingElt:
    """Theta_G(phi) = sum_s <phi, s> s, evaluated element by element.

    Each element is restricted along its own power sequence, independently of
    the class-representative route used by ``theta_bar``.
    """
    G = T.group
    C = T.classes
    if G is None or C.class_of is None:
        raise ValueError("theta needs a table attached to a Cayley table")
    vals = class_function(T, phi)
    cache: dict[tuple[int, ...], Fraction] = {}
    out = []
    for x in range(G.order):
        seq = tuple(C.class_of[y] for y in G.powers(x))
        if seq not in cache:
            cache[seq] = pairing_from_multiplicities(_dft_multiplicities([vals[c] for c in seq]))
        out.append(cache[seq])
    return GroupRingElt(tuple(out))


def theta_regular_closed_form(C: ConjClassSet) -> ClassSumElt:
    """Coefficient (n/m)(m-1)/2 on each class of order m; no character table involved."""
    n = C.group_order
    return ClassSumElt(tuple(Fraction(n * (m - 1), 2 * m) for m in C.rep_orders))


def in_AG(T: CharacterTable, phi: VirtualCharacter) -> bool:
    return all(
        _weighted_exponent(T, phi, c) % T.classes.rep_orders[c] == 0 for c in range(len(T.classes))
    )


def det_character(T: CharacterTable, phi: VirtualCharacter) -> list[int]:
    """(det phi)(rep(c)) = exp(2 pi i k_c / m_c); returns the exponents k_c mod m_c.

    Uses restrict_multiplicities (a DFT of phi's values), not the cached
    per-irreducible data behind ``pairing``.
    """
    vals = class_function(T, phi)
    out = []
    for c in range(len(T.classes)):
        mult = restrict_multiplicities(T, phi, c, vals)
        out.append(sum(j * mj for j, mj in enumerate(mult)) % len(mult))
    return out


def _congruence_system(T: CharacterTable) -> tuple[list[list[int]], list[int]]:
    rows = []
    for per_class in T.multiplicities:
        rows.append([sum(j * mj for j, mj in enumerate(mult)) for mult in per_class])
    return rows, list(T.classes.rep_orders)


def AG_basis(T: CharacterTable) -> list[VirtualCharacter]:
    """HNF Z-basis of A_G = ker(det) inside R_G = Z^(irreducibles)."""
    A, moduli = _congruence_system(T)
    return [VirtualCharacter(tuple(row)) for row in kernel_mod(A, moduli)]


def AG_index(T: CharacterTable) -> int:
    """[R_G : A_G]; equals |G^ab| by exactness of A_G -> R_G -> hom(G^ab, C^x)."""
    return lattice_index([b.coeffs for b in AG_basis(T)])


def stickelberger_module(T: CharacterTable, classes: bool = False) -> list[list[int]]:
    """HNF basis of S_G = Theta_G(A_G), zero rows dropped.

    Coordinates are group elements by default, or conjugacy classes with
    ``classes=True``.
    """
    vecs = []
    for phi in AG_basis(T):
        x = theta_bar(T, phi) if classes else theta(T, phi)
        assert x.is_integral()
        vecs.append([int(c) for c in x.coeffs])
    if not vecs:
        return []
    return [row for row in hermite_normal_form(vecs) if any(row)]


def rho_in_AG(G: GroupTable) -> bool:
    """Whether the regular character has trivial determinant, from the Sylow-2 type alone."""
    return sylow2_class(G) in (Sylow2.ODD_ORDER, Sylow2.NONCYCLIC)


def omega_equivariance_check(T: CharacterTable, phi: VirtualCharacter, k: int) -> bool:
    """Theta_bar(phi^sigma_k) == Theta_bar(phi) moved along c -> c^(k^-1)."""
    e = T.exponent
    if math.gcd(k, e) != 1:
        raise ValueError(f"k = {k} is not coprime to the exponent {e}")
    lhs = theta_bar(T, galois_conjugate(T, phi, k))
    rhs = theta_bar(T, phi).permuted(T.classes, pow(k, -1, e))
    return lhs == rhs


def theta_json(T: CharacterTable, x: ClassSumElt) -> list[dict]:
    C = T.classes
    out = []
    for c, a in enumerate(x.coeffs):
        out.append(
            {
                "class_rep": C.reps[c] if C.reps is not None else c,
                "rep_order": C.rep_orders[c],
                "coeff": f"{a.numerator}/{a.denominator}",
            }
        )
    return out


def regular_theta_bar(T: CharacterTable) -> ClassSumElt:
    return theta_bar(T, regular_character(T))
