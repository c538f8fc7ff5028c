"""Invariant suite for one group: every finite claim checked against an independent route.

Each check returns a ``CheckResult``; nothing raises on a mismatch, so a
report always lists every check.  Checks are independent and may run on a
thread pool; results are returned in a fixed order either way.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .bounds import abelian_bound, merge_factors, steinitz_bound
from .characters import (
    CharacterTable,
    TableValidationError,
    VirtualCharacter,
    character_table,
    regular_character,
    validate_table,
)
from .galois import (
    OmegaAction,
    class_stabilizer,
    e_field_of_class,
    field_of_class,
    omega_orbits,
)
from .group import (
    GroupTable,
    ResidueGroup,
    abelianization,
    check_group_axioms,
    regular_sign,
)
from .stickelberger import (
    AG_index,
    det_character,
    in_AG,
    iota,
    omega_equivariance_check,
    rho_in_AG,
    theta,
    theta_bar,
    theta_regular_closed_form,
)

__all__ = ["CheckResult", "run_checks", "omega_actions", "random_characters", "CHECK_NAMES"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def random_characters(T: CharacterTable, seed: int, samples: int, bound: int = 3) -> list[VirtualCharacter]:
    rng = random.Random(seed)
    k = len(T)
    return [VirtualCharacter(tuple(rng.randint(-bound, bound) for _ in range(k))) for _ in range(samples)]


def omega_actions(e: int) -> list[OmegaAction]:
    """Full, trivial and every cyclic subgroup of (Z/eZ)^x, without repeats."""
    seen: list[ResidueGroup] = []
    for H in [ResidueGroup.units(e), ResidueGroup.trivial(e), *ResidueGroup.units(e).cyclic_subgroups()]:
        if H not in seen:
            seen.append(H)
    return [OmegaAction(e, H) for H in seen]


def _check_axioms(G, T, seed, samples):
    return check_group_axioms(G, seed=seed), f"order {G.order}"


def _check_table(G, T, seed, samples):
    try:
        validate_table(T)
    except TableValidationError as exc:
        return False, f"{exc.relation}: {exc}"
    return True, f"{len(T)} irreducibles, degrees {list(T.degrees)}"


def _check_integrality(G, T, seed, samples):
    bad = 0
    for phi in random_characters(T, seed, samples):
        a = theta_bar(T, phi).is_integral()
        b = in_AG(T, phi)
        c = not any(det_character(T, phi))
        bad += not (a == b == c)
    return bad == 0, f"{samples} samples, {bad} disagreements"


def _check_closed_form(G, T, seed, samples):
    lhs = theta_bar(T, regular_character(T))
    rhs = theta_regular_closed_form(T.classes)
    return lhs == rhs, ""


def _check_regular_pairing(G, T, seed, samples):
    n = G.order
    coeffs = theta(T, regular_character(T)).coeffs
    bad = sum(coeffs[x] != Fraction(n * (G.orders[x] - 1), 2 * G.orders[x]) for x in range(n))
    return bad == 0, f"{bad} elements off the closed form"


def _check_iota(G, T, seed, samples):
    bad = 0
    for phi in random_characters(T, seed + 1, max(1, samples // 10)):
        bad += iota(T.classes, theta_bar(T, phi)) != theta(T, phi)
    return bad == 0, f"{bad} disagreements"


def _check_parity(G, T, seed, samples):
    flag = rho_in_AG(G)
    oracle = all(regular_sign(G, s) == 1 for s in range(G.order))
    rho = regular_character(T)
    integral = theta_bar(T, rho).is_integral()
    doubled = theta_bar(T, rho * 2).is_integral()
    ok = flag == oracle == integral and doubled
    return ok, f"rho_in_AG={flag} sign_oracle={oracle} integral={integral} doubled_integral={doubled}"


def _check_equivariance(G, T, seed, samples):
    e = T.exponent
    ks = [k for k in range(1, e + 1) if math.gcd(k, e) == 1]
    bad = 0
    for i in range(len(T)):
        phi = VirtualCharacter.basis(len(T), i)
        bad += sum(not omega_equivariance_check(T, phi, k) for k in ks)
    return bad == 0, f"{len(T)} irreducibles x {len(ks)} residues, {bad} failures"


def _check_stabilizers(G, T, seed, samples):
    bad = 0
    for A in omega_actions(G.exponent):
        for c in range(len(G.classes)):
            if class_stabilizer(G, A, c) != field_of_class(G, A, c).fixer:
                bad += 1
    return bad == 0, f"{bad} mismatches"


def _check_field_equality(G, T, seed, samples):
    bad = 0
    for A in omega_actions(G.exponent):
        for c in range(len(G.classes)):
            if e_field_of_class(G, A, c) != field_of_class(G, A, c):
                bad += 1
    return bad == 0, f"{bad} mismatches"


def _check_orbits(G, T, seed, samples):
    bad = 0
    for A in omega_actions(G.exponent):
        orbits = omega_orbits(G, A)
        if orbits != omega_orbits(G, A, inverse=True):
            bad += 1
        if sum(len(o) for o in orbits) != len(G.classes):
            bad += 1
        for orbit in orbits:
            orders = {G.classes.rep_orders[c] for c in orbit}
            if len(orders) != 1:
                bad += 1
            if len(orbit) != field_of_class(G, A, orbit[0]).degree:
                bad += 1
    return bad == 0, f"{bad} failures"


def _check_index(G, T, seed, samples):
    idx = AG_index(T)
    ab = math.prod(abelianization(G))
    return idx == ab, f"[R_G:A_G]={idx} |G^ab|={ab}"


def _check_bounds(G, T, seed, samples):
    bad = 0
    for A in omega_actions(G.exponent):
        B = steinitz_bound(G, A)
        bad += sum(f.exponent <= 0 for f in B.factors)
        if G.is_abelian:
            merged = merge_factors(B)
            ref = abelian_bound(G, A)
            if sorted((f.m, f.field.degree, f.exponent) for f in merged.factors) != sorted(
                (f.m, f.field.degree, f.exponent) for f in ref.factors
            ):
                bad += 1
    return bad == 0, f"{bad} failures"


_CHECKS: list[tuple[str, Callable]] = [
    ("group_axioms", _check_axioms),
    ("table_orthogonality", _check_table),
    ("integrality_three_way", _check_integrality),
    ("regular_closed_form", _check_closed_form),
    ("regular_pairing", _check_regular_pairing),
    ("iota_theta_bar", _check_iota),
    ("regular_parity", _check_parity),
    ("galois_equivariance", _check_equivariance),
    ("stabilizer_agreement", _check_stabilizers),
    ("field_equality", _check_field_equality),
    ("orbit_degree", _check_orbits),
    ("ag_index", _check_index),
    ("bound_exponents", _check_bounds),
]

CHECK_NAMES = tuple(name for name, _ in _CHECKS)


def run_checks(
    G: GroupTable,
    T: Optional[CharacterTable] = None,
    seed: int = 0,
    samples: int = 200,
    workers: int = 1,
) -> list[CheckResult]:
    if T is None:
        T = character_table(G)

    def run(item):
        name, fn = item
        try:
            ok, detail = fn(G, T, seed, samples)
        except Exception as exc:  # a crash is a failed check, not a crashed report
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        return CheckResult(name, bool(ok), detail)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(run, _CHECKS))
    return [run(item) for item in _CHECKS]
