"""Irreducible character tables, virtual characters and restriction to cyclic subgroups.

Tables come from three places: a closed form for abelian groups (via a Smith
normal form of the Cayley-graph relations), the induced construction for
metacyclic groups, and JSON documents checked against orthogonality and, when
a Cayley table is supplied, against the group's class multiplication
coefficients.  No matrix representations are built; everything about a
character that the Stickelberger pairing needs comes from its restriction
multiplicities on cyclic subgroups.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import cyclotomic as cyc
from .cyclotomic import Cyclotomic, _power_table, root_of_unity
from .group import ConjClassSet, GroupTable, direct_product
from .intlat import smith_normal_form

__all__ = [
    "TableValidationError",
    "CharacterTable",
    "VirtualCharacter",
    "abelian_table",
    "metacyclic_table",
    "product_table",
    "ingest_table",
    "load_table",
    "table_to_json",
    "character_table",
    "regular_character",
    "trivial_character",
    "value",
    "restrict_multiplicities",
]


class TableValidationError(ValueError):
    """A character table failed validation; ``relation`` names what broke."""

    def __init__(self, relation: str, detail: str = ""):
        self.relation = relation
        super().__init__(f"{relation}: {detail}" if detail else relation)


@dataclass(frozen=True)
class VirtualCharacter:
    """Integer combination of the irreducibles of a fixed table."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __add__(self, other: VirtualCharacter) -> VirtualCharacter:
        return VirtualCharacter(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: VirtualCharacter) -> VirtualCharacter:
        return VirtualCharacter(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> VirtualCharacter:
        return VirtualCharacter(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> VirtualCharacter:
        return VirtualCharacter(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    @classmethod
    def basis(cls, size: int, i: int) -> VirtualCharacter:
        return cls(tuple(int(j == i) for j in range(size)))


@dataclass(frozen=True, eq=False)
class CharacterTable:
    classes: ConjClassSet
    irreducibles: tuple[tuple[Cyclotomic, ...], ...]
    group: Optional[GroupTable] = None

    @property
    def order(self) -> int:
        return self.classes.group_order

    @property
    def exponent(self) -> int:
        return self.classes.exponent

    def __len__(self) -> int:
        return len(self.irreducibles)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        e = self.classes.identity_class
        out = []
        for row in self.irreducibles:
            d = row[e].to_rational()
            if d is None or d.denominator != 1 or d <= 0:
                raise TableValidationError("degree", f"value at identity is {row[e]}")
            out.append(int(d))
        return tuple(out)

    @cached_property
    def multiplicities(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """multiplicities[i][c][j]: multiplicity of zeta_m^j in chi_i restricted to <rep(c)>."""
        return tuple(
            tuple(_irreducible_multiplicities(self, i, c) for c in range(len(self.classes)))
            for i in range(len(self.irreducibles))
        )

    def index_of(self, values: Sequence[Cyclotomic]) -> int:
        for i, row in enumerate(self.irreducibles):
            if all(a == b for a, b in zip(row, values)):
                return i
        raise KeyError("class function is not an irreducible of this table")

    @cached_property
    def terms(self) -> tuple[int, int, tuple[tuple[tuple[tuple[int, int], ...], ...], ...]]:
        """(L, D, rows): every value as integer (exponent, coeff) pairs over zeta_L / D.

        Sums and products of values are accumulated on these pairs and reduced
        modulo Phi_L once, instead of through Cyclotomic objects.
        """
        vals = [v for row in self.irreducibles for v in row]
        L = math.lcm(1, *(v.conductor for v in vals))
        D = math.lcm(1, *(v.denominator for v in vals))
        rows = []
        for row in self.irreducibles:
            out = []
            for v in row:
                step, scale = L // v.conductor, D // v.denominator
                out.append(tuple((i * step, c * scale) for i, c in v.exponent_terms().items()))
            rows.append(tuple(out))
        return L, D, tuple(rows)

    @cached_property
    def trivial_index(self) -> int:
        return self.index_of([Cyclotomic.rational(1)] * len(self.classes))


def _irreducible_multiplicities(T: CharacterTable, i: int, c: int) -> tuple[int, ...]:
    m = T.classes.rep_orders[c]
    row = T.irreducibles[i]
    if T.degrees[i] == 1:
        # a linear character is a single eigenvalue exp(2 pi i j/m)
        r = row[c].root_exponent()
        if r is None or (r * m).denominator != 1:
            raise TableValidationError(
                "linear character", f"value {row[c]} is not an m-th root of unity (m={m})"
            )
        out = [0] * m
        out[int(r * m)] = 1
        return tuple(out)
    return _dft_multiplicities([row[T.classes.power_class(c, k)] for k in range(m)])


@lru_cache(maxsize=None)
def _power_matrix(L: int) -> tuple[np.ndarray, int]:
    P = np.array(_power_table(L), dtype=np.int64)
    return P, int(np.abs(P).max())


def _dft_multiplicities(values: Sequence[Cyclotomic]) -> tuple[int, ...]:
    """m_j = (1/m) sum_k values[k] zeta_m^(-jk), exactly, asserting integrality.

    Each value is lifted to an integer vector indexed by powers of zeta_L;
    the twisted sums are integer gathers, reduced mod Phi_L by the power table.
    """
    m = len(values)
    L = math.lcm(m, *(v.conductor for v in values))
    den = math.lcm(*(v.denominator for v in values))
    rows = [[0] * L for _ in range(m)]
    for k, v in enumerate(values):
        step, scale = L // v.conductor, den // v.denominator
        for i, c in v.exponent_terms().items():
            rows[k][i * step] += c * scale
    P, pmax = _power_matrix(L)
    bound = sum(abs(x) for row in rows for x in row) * pmax * L
    # below 2^62 no intermediate can overflow int64
    dtype = np.int64 if bound < 2**62 else object
    V = np.array(rows, dtype=dtype)
    P = P.astype(dtype)
    shift = L // m
    j = np.arange(m)
    e = np.arange(L)
    # out[j, e] = sum_k V[k, e + j k shift]: coefficient of zeta_L^e in sum_k v_k zeta_L^(-j k shift)
    idx = (e[None, None, :] + (np.outer(j, j) * shift)[:, :, None]) % L
    out = V[j[None, :, None], idx].sum(axis=1)
    reduced = out @ P
    if reduced.shape[1] > 1 and np.any(reduced[:, 1:]):
        raise TableValidationError("restriction multiplicity", "twisted sum is not rational")
    mults = []
    for jj, total in enumerate(reduced[:, 0].tolist()):
        if total % (den * m):
            raise TableValidationError(
                "restriction multiplicity", f"non-integral multiplicity {total}/{den * m} at j={jj}"
            )
        mults.append(int(total) // (den * m))
    return tuple(mults)


# -- operations on virtual characters --------------------------------------


def trivial_character(T: CharacterTable) -> VirtualCharacter:
    return VirtualCharacter.basis(len(T), T.trivial_index)


def regular_character(T: CharacterTable) -> VirtualCharacter:
    """rho_G = sum of chi(1) chi."""
    return VirtualCharacter(T.degrees)


def value(T: CharacterTable, phi: VirtualCharacter, c: int) -> Cyclotomic:
    L, D, rows = T.terms
    acc: dict[int, int] = {}
    for a, row in zip(phi.coeffs, rows):
        if a:
            for e, x in row[c]:
                acc[e] = acc.get(e, 0) + a * x
    return Cyclotomic._from_int_exponents(L, acc, D)


def class_function(T: CharacterTable, phi: VirtualCharacter) -> list[Cyclotomic]:
    return [value(T, phi, c) for c in range(len(T.classes))]


def restrict_multiplicities(
    T: CharacterTable, phi: VirtualCharacter, c: int, values: Optional[Sequence[Cyclotomic]] = None
) -> tuple[int, ...]:
    """Multiplicities of zeta_m^j, j = 0..m-1, in phi restricted to <rep(c)>.

    Computed from the values of phi on the powers of the representative;
    ``values`` may carry phi's class function when it is already known.
    """
    m = T.classes.rep_orders[c]
    if values is None:
        values = class_function(T, phi)
    return _dft_multiplicities([values[T.classes.power_class(c, k)] for k in range(m)])


def field_galois(x: Cyclotomic, k: int, e: int) -> Cyclotomic:
    """sigma_k on x in Q(zeta_e), where only k mod e matters.

    Values read from files may carry a conductor that is a multiple of e; a
    representative k' = k mod e coprime to that conductor is used then.
    """
    if math.gcd(k, e) != 1:
        raise ValueError(f"k = {k} is not coprime to the exponent {e}")
    n = x.conductor
    k2 = k
    while math.gcd(k2, n) != 1:
        k2 += e
    return x.galois(k2)


def galois_conjugate_index(T: CharacterTable, i: int, k: int) -> int:
    """Index of the irreducible chi_i^sigma_k, sigma_k(zeta) = zeta^k."""
    e = T.exponent
    return T.index_of([field_galois(v, k, e) for v in T.irreducibles[i]])


def galois_conjugate(T: CharacterTable, phi: VirtualCharacter, k: int) -> VirtualCharacter:
    out = [0] * len(T)
    for i, a in enumerate(phi.coeffs):
        if a:
            out[galois_conjugate_index(T, i, k)] += a
    return VirtualCharacter(tuple(out))


# -- closed-form tables -----------------------------------------------------


def _abelian_coordinates(G: GroupTable) -> tuple[list[int], list[list[int]]]:
    """Invariant factors d_i > 1 and, per element, coordinates in prod Z/d_i."""
    n = G.order
    # generators: scan elements, keep those outside the span so far
    gens: list[int] = []
    span = {G.identity}
    for x in range(n):
        if x not in span:
            gens.append(x)
            frontier = list(span)
            while frontier:
                nxt = []
                for a in frontier:
                    for g in gens:
                        b = G.mul[a][g]
                        if b not in span:
                            span.add(b)
                            nxt.append(b)
                frontier = nxt
    k = len(gens)
    if k == 0:
        return [], [[] for _ in range(n)]
    # BFS spanning tree gives each element a word vector; Cayley-graph edges give relations
    word: dict[int, list[int]] = {G.identity: [0] * k}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for i, g in enumerate(gens):
            y = G.mul[x][g]
            if y not in word:
                w = list(word[x])
                w[i] += 1
                word[y] = w
                queue.append(y)
    relations = []
    for x in range(n):
        for i, g in enumerate(gens):
            y = G.mul[x][g]
            rel = [a - b for a, b in zip(word[x], word[y])]
            rel[i] += 1
            if any(rel):
                relations.append(rel)
    _, D, V = smith_normal_form(relations)
    diag = [D[i][i] for i in range(min(len(D), k))] + [0] * max(0, k - len(D))
    keep = [i for i, d in enumerate(diag) if d != 1]
    invariants = [diag[i] for i in keep]
    assert all(d > 1 for d in invariants) and math.prod(invariants) == n
    coords = []
    for x in range(n):
        y = [sum(word[x][r] * V[r][i] for r in range(k)) for i in keep]
        coords.append([a % d for a, d in zip(y, invariants)])
    return invariants, coords


def abelian_table(G: GroupTable) -> CharacterTable:
    """Characters chi_a(x) = prod zeta_{d_i}^(a_i x_i) over invariant coordinates."""
    if not G.is_abelian:
        raise ValueError("abelian_table needs an abelian group")
    C = G.classes
    invariants, coords = _abelian_coordinates(G)
    e = G.exponent
    rows = []
    for a in itertools.product(*(range(d) for d in invariants)):
        row = []
        for c in range(len(C)):
            x = C.reps[c]
            k = sum(ai * xi * (e // d) for ai, xi, d in zip(a, coords[x], invariants))
            row.append(root_of_unity(e, k))
        rows.append(tuple(row))
    return CharacterTable(classes=C, irreducibles=tuple(rows), group=G)


def metacyclic_table(G: GroupTable) -> CharacterTable:
    """Linear characters through G/<s> plus characters induced from <s>.

    The induced character from zeta_pa^u has value sum_i zeta_pa^(a u r^i)
    at s^a and vanishes off <s>.  Raises TableValidationError when some
    induced character is reducible (only possible when p divides q).
    """
    if not G.origin or G.origin[0] != "metacyclic":
        raise ValueError("metacyclic_table needs a group built by from_metacyclic")
    _, pa, q, r = G.origin
    C = G.classes
    rpow = [pow(r, i, pa) for i in range(q)]
    labels = G.labels  # (i, j) for s^i t^j
    rows: list[tuple[Cyclotomic, ...]] = []
    for b in range(q):
        rows.append(tuple(root_of_unity(q, b * labels[x][1]) for x in C.reps))
    seen: set[int] = set()
    for u in range(1, pa):
        if u in seen:
            continue
        orbit = [(u * rp) % pa for rp in rpow]
        if len(set(orbit)) != q:
            raise TableValidationError(
                "induced irreducibility",
                f"character u={u} of <s> has a nontrivial stabilizer; ingest a table instead",
            )
        seen.update(orbit)
        row = []
        for x in C.reps:
            i, j = labels[x]
            if j:
                row.append(Cyclotomic.rational(0))
            else:
                row.append(Cyclotomic.from_exponents(pa, ((1, i * v) for v in orbit)))
        rows.append(tuple(row))
    T = CharacterTable(classes=C, irreducibles=tuple(rows), group=G)
    validate_table(T, against_group=False)
    return T


def product_table(TG: CharacterTable, TH: CharacterTable, GH: Optional[GroupTable] = None) -> CharacterTable:
    """Outer tensor products chi x psi as a table of G x H."""
    if TG.group is None or TH.group is None:
        raise ValueError("product_table needs tables attached to Cayley tables")
    if GH is None:
        GH = direct_product(TG.group, TH.group)
    C = GH.classes
    nh = TH.group.order
    cg, ch = TG.classes.class_of, TH.classes.class_of
    rows = []
    for chi in TG.irreducibles:
        for psi in TH.irreducibles:
            row = []
            for x in C.reps:
                g, h = divmod(x, nh)
                row.append(chi[cg[g]] * psi[ch[h]])
            rows.append(tuple(row))
    return CharacterTable(classes=C, irreducibles=tuple(rows), group=GH)


# -- validation -------------------------------------------------------------


def _inner(T: CharacterTable, i: int, j: int) -> Cyclotomic:
    """|G| <chi_i, chi_j> = sum over classes of size * chi_i * conj(chi_j)."""
    L, D, rows = T.terms
    acc: dict[int, int] = {}
    for size, xs, ys in zip(T.classes.sizes, rows[i], rows[j]):
        for e1, c1 in xs:
            for e2, c2 in ys:
                key = (e1 - e2) % L
                acc[key] = acc.get(key, 0) + size * c1 * c2
    return Cyclotomic._from_int_exponents(L, acc, D * D)


def validate_table(T: CharacterTable, against_group: bool = True) -> None:
    """Raise TableValidationError unless T is a consistent irreducible table.

    With ``against_group`` and an attached Cayley table, the class
    multiplication coefficients implied by the characters are compared with
    those counted in the group.
    """
    C = T.classes
    n = C.group_order
    k = len(C)
    if len(T.irreducibles) != k:
        raise TableValidationError(
            "table shape", f"{len(T.irreducibles)} characters for {k} classes"
        )
    for row in T.irreducibles:
        if len(row) != k:
            raise TableValidationError("table shape", "character row length differs from class count")
    for c in range(k):
        m = C.rep_orders[c]
        if len(C.powers[c]) != m:
            raise TableValidationError("power map required", f"class {c} lacks powers 0..{m - 1}")
        if C.powers[c][0] != C.identity_class or C.powers[c][1 % m] != c:
            raise TableValidationError("power map consistency", f"class {c}: x^0 or x^1 misplaced")
        for j in range(m):
            target = C.powers[c][j]
            if C.rep_orders[target] != m // math.gcd(j, m):
                raise TableValidationError(
                    "power map consistency", f"class {c}^{j} has order {C.rep_orders[target]}"
                )
        if n % C.sizes[c]:
            raise TableValidationError("class sizes", f"class size {C.sizes[c]} does not divide {n}")
    if sum(d * d for d in T.degrees) != n:
        raise TableValidationError("sum of squared degrees", f"sum d^2 = {sum(d * d for d in T.degrees)} != {n}")
    e = C.exponent
    for row in T.irreducibles:
        for v in row:
            if not _in_cyclotomic_field(v, e):
                raise TableValidationError("character field", f"value {v} not in Q(zeta_{e})")
    for i in range(len(T.irreducibles)):
        for j in range(i, len(T.irreducibles)):
            ip = _inner(T, i, j)
            if ip != (n if i == j else 0):
                raise TableValidationError(
                    "row orthogonality", f"<chi_{i}, chi_{j}> * |G| = {ip}, expected {n if i == j else 0}"
                )
    for i, per_class in enumerate(T.multiplicities):
        for mult in per_class:
            if min(mult) < 0 or sum(mult) != T.degrees[i]:
                raise TableValidationError(
                    "restriction multiplicity", f"chi_{i} restricts to {mult} on a cyclic subgroup"
                )
    if against_group and T.group is not None:
        _check_structure_constants(T)


def _in_cyclotomic_field(x: Cyclotomic, e: int) -> bool:
    """Whether x lies in Q(zeta_e): fixed by every zeta -> zeta^k with k = 1 mod e."""
    if e % x.conductor == 0:
        return True
    L = math.lcm(e, x.conductor)
    y = x.lift(L)
    return all(
        y.galois(k) == y for k in range(1, L) if math.gcd(k, L) == 1 and k % e == 1 % e
    )


def _structure_constants_from_group(G: GroupTable, C: ConjClassSet) -> list[list[list[int]]]:
    k = len(C)
    members = [C.members(c) for c in range(k)]
    out = [[[0] * k for _ in range(k)] for _ in range(k)]
    for kk in range(k):
        z = C.reps[kk]
        for i in range(k):
            for x in members[i]:
                y = G.mul[G.inv[x]][z]
                out[i][C.class_of[y]][kk] += 1
    return out


def _structure_constants_from_table(T: CharacterTable, perm: Sequence[int]) -> list[list[list[int]]]:
    """a_ijk = |C_i||C_j|/n sum_chi chi(g_i) chi(g_j) conj(chi(g_k)) / chi(1), table classes via perm."""
    C = T.classes
    n = C.group_order
    k = len(C)
    out = [[[0] * k for _ in range(k)] for _ in range(k)]
    L, D, rows = T.terms
    degs = T.degrees
    dl = math.lcm(*degs)
    for i in range(k):
        for j in range(k):
            # products chi(g_i) chi(g_j) / chi(1), kept as exponent dicts
            prods = []
            for r, row in enumerate(rows):
                p: dict[int, int] = {}
                w = dl // degs[r]
                for e1, c1 in row[perm[i]]:
                    for e2, c2 in row[perm[j]]:
                        key = (e1 + e2) % L
                        p[key] = p.get(key, 0) + w * c1 * c2
                prods.append(p)
            scale = C.sizes[perm[i]] * C.sizes[perm[j]]
            for kk in range(k):
                acc: dict[int, int] = {}
                for r, row in enumerate(rows):
                    for e3, c3 in row[perm[kk]]:
                        for e, c in prods[r].items():
                            key = (e - e3) % L
                            acc[key] = acc.get(key, 0) + scale * c * c3
                q = Cyclotomic._from_int_exponents(L, acc, D**3 * dl * n).to_rational()
                if q is None or q.denominator != 1:
                    raise TableValidationError("class multiplication coefficients", f"non-integral a_{i}{j}{kk}")
                out[i][j][kk] = int(q)
    return out


def _check_homomorphisms(T: CharacterTable) -> None:
    """For a table of linear characters on singleton classes: chi(xy) = chi(x) chi(y)."""
    G, C = T.group, T.classes
    for row in T.irreducibles:
        r = [row[C.class_of[x]].root_exponent() for x in range(G.order)]
        if any(v is None for v in r):
            raise TableValidationError("class multiplication coefficients", "linear value not a root of unity")
        for x in range(G.order):
            for y in range(G.order):
                if (r[x] + r[y] - r[G.mul[x][y]]).denominator != 1:
                    raise TableValidationError(
                        "class multiplication coefficients", "linear character is not multiplicative"
                    )


def _check_structure_constants(T: CharacterTable) -> None:
    if len(T.classes) == T.order and all(d == 1 for d in T.degrees):
        # abelian: equivalent to the structure constants and far cheaper
        _check_homomorphisms(T)
        return
    got = _structure_constants_from_group(T.group, T.classes)
    want = _structure_constants_from_table(T, list(range(len(T.classes))))
    if got != want:
        raise TableValidationError(
            "class multiplication coefficients", "table does not match the Cayley table"
        )


# -- ingestion --------------------------------------------------------------


def _parse_document(doc: dict) -> CharacterTable:
    for key in ("order", "classes", "characters"):
        if key not in doc:
            raise TableValidationError("document schema", f"missing key {key!r}")
    if "power_map" not in doc or not doc["power_map"]:
        raise TableValidationError("power map required", "document has no power_map")
    classes = doc["classes"]
    k = len(classes)
    sizes = tuple(int(c["size"]) for c in classes)
    orders = tuple(int(c["rep_order"]) for c in classes)
    if sum(sizes) != int(doc["order"]):
        raise TableValidationError("class equation", f"class sizes sum to {sum(sizes)}, order is {doc['order']}")
    if orders.count(1) != 1:
        raise TableValidationError("identity class", "exactly one class must have rep_order 1")
    pm: list[dict[int, int]] = [{} for _ in range(k)]
    for entry in doc["power_map"]:
        c, j, target = (int(x) for x in entry)
        if not (0 <= c < k and 0 <= target < k):
            raise TableValidationError("power map consistency", f"entry {entry} out of range")
        pm[c][j] = target
    powers = []
    for c in range(k):
        m = orders[c]
        if set(pm[c]) != set(range(m)):
            raise TableValidationError("power map required", f"class {c} needs powers 0..{m - 1}")
        powers.append(tuple(pm[c][j] for j in range(m)))
    C = ConjClassSet(sizes=sizes, rep_orders=orders, powers=tuple(powers))
    rows = tuple(tuple(cyc.from_json(v) for v in row) for row in doc["characters"])
    return CharacterTable(classes=C, irreducibles=rows)


def _match_classes(T: CharacterTable, G: GroupTable) -> Optional[CharacterTable]:
    """Find a relabelling of T's classes onto G's classes that the Cayley table confirms."""
    CG = G.classes
    CT = T.classes
    k = len(CG)
    if len(CT) != k or CT.group_order != G.order:
        return None
    sig_g = [(CG.sizes[c], CG.rep_orders[c]) for c in range(k)]
    sig_t = [(CT.sizes[c], CT.rep_orders[c]) for c in range(k)]
    if sorted(sig_g) != sorted(sig_t):
        return None
    target = _structure_constants_from_group(G, CG)
    perm = [-1] * k  # group class -> table class
    used = [False] * k

    def consistent(g: int) -> bool:
        # power maps must agree wherever both ends are already assigned
        for c in range(g + 1):
            t = perm[c]
            for j in range(CG.rep_orders[c]):
                gc = CG.powers[c][j]
                if gc <= g and perm[gc] != CT.powers[t][j]:
                    return False
        return True

    def search(g: int) -> Optional[CharacterTable]:
        if g == k:
            rows = tuple(tuple(row[perm[c]] for c in range(k)) for row in T.irreducibles)
            cand = CharacterTable(classes=CG, irreducibles=rows, group=G)
            try:
                want = _structure_constants_from_table(cand, list(range(k)))
            except TableValidationError:
                return None
            return cand if want == target else None
        for t in range(k):
            if not used[t] and sig_t[t] == sig_g[g]:
                perm[g], used[t] = t, True
                if consistent(g):
                    found = search(g + 1)
                    if found is not None:
                        return found
                perm[g], used[t] = -1, False
        return None

    return search(0)


def ingest_table(doc: Union[dict, str, Path], group: Optional[GroupTable] = None) -> CharacterTable:
    """Parse and validate a character-table document.

    With ``group`` given, the document's classes are matched to the group's
    conjugacy classes and the result is checked against the Cayley table.
    """
    if isinstance(doc, (str, Path)):
        doc = json.loads(Path(doc).read_text())
    T = _parse_document(doc)
    validate_table(T)
    if group is None:
        return T
    if group.order != T.order:
        raise TableValidationError("group order", f"table order {T.order} vs group order {group.order}")
    matched = _match_classes(T, group)
    if matched is None:
        raise TableValidationError(
            "class multiplication coefficients", "no class matching reproduces the Cayley table"
        )
    return matched


def table_to_json(T: CharacterTable) -> dict:
    C = T.classes
    return {
        "order": C.group_order,
        "classes": [{"size": s, "rep_order": m} for s, m in zip(C.sizes, C.rep_orders)],
        "power_map": [[c, j, C.powers[c][j]] for c in range(len(C)) for j in range(C.rep_orders[c])],
        "characters": [[cyc.to_json(v) for v in row] for row in T.irreducibles],
    }


def bundled_tables() -> list[dict]:
    docs = []
    for entry in sorted(resources.files("steinitz.tables").iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            docs.append(json.loads(entry.read_text()))
    return docs


def load_table(path: Union[str, Path], group: Optional[GroupTable] = None) -> CharacterTable:
    return ingest_table(Path(path), group)


def character_table(G: GroupTable, table: Union[None, dict, str, Path] = None) -> CharacterTable:
    """Best available table for G: explicit document, closed form, or a bundled table."""
    if table is not None:
        return ingest_table(table, G)
    if G.is_abelian:
        return abelian_table(G)
    kind = G.origin[0] if G.origin else None
    if kind == "metacyclic":
        return metacyclic_table(G)
    if kind == "product":
        _, A, B = G.origin
        return product_table(character_table(A), character_table(B), G)
    for doc in bundled_tables():
        if int(doc["order"]) != G.order or len(doc["classes"]) != len(G.classes):
            continue
        try:
            return ingest_table(doc, G)
        except TableValidationError:
            continue
    raise LookupError(f"no character table available for {G.descriptor()}; supply one with a table file")
