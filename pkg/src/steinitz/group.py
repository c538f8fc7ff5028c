"""Finite groups as Cayley tables.

Elements are indices ``0..n-1``; ``mul[a][b]`` is the index of ``a*b``.
Constructors cover abelian invariants, metacyclic presentations
``<s, t | s^pa = t^q = 1, t s t^-1 = s^r>``, permutation generators and
direct products, plus the descriptor grammar used on the command line::

    abelian:2,4
    metacyclic:7,3,2
    perm:3:(1 2),(1 2 3)
"""
from __future__ import annotations

import itertools
import math
import os
import random
import re
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence

__all__ = [
    "GroupError",
    "GroupTable",
    "ConjClassSet",
    "ResidueGroup",
    "Sylow2",
    "from_abelian",
    "from_metacyclic",
    "from_permutations",
    "direct_product",
    "parse_group",
    "element_order",
    "exponent",
    "conjugacy_classes",
    "power_class",
    "normalizer_mu",
    "sylow2_class",
    "regular_sign",
    "abelianization",
    "abelian_invariant_lists",
    "check_group_axioms",
    "builtin_groups",
]

DEFAULT_CLOSURE_CAP = 5000
CLOSURE_CAP_ENV = "STEINITZ_CLOSURE_CAP"


class GroupError(ValueError):
    """Invalid group input: bad parameters, bad permutations, cap exceeded."""


@dataclass(frozen=True, eq=False)
class GroupTable:
    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    identity: int
    origin: tuple = ()
    labels: tuple = ()

    @cached_property
    def classes(self) -> ConjClassSet:
        return conjugacy_classes(self)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(element_order(self, x) for x in range(self.order))

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    @cached_property
    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a] for a in range(self.order) for b in range(a))

    def power(self, x: int, k: int) -> int:
        k %= self.orders[x]
        result = self.identity
        for _ in range(k):
            result = self.mul[result][x]
        return result

    def powers(self, x: int) -> list[int]:
        """[x^0, x^1, ..., x^(m-1)] for m = order(x)."""
        out = [self.identity]
        cur = x
        while cur != self.identity:
            out.append(cur)
            cur = self.mul[cur][x]
        return out

    def conj(self, t: int, s: int) -> int:
        """t s t^-1."""
        return self.mul[self.mul[t][s]][self.inv[t]]

    def descriptor(self) -> str:
        kind = self.origin[0] if self.origin else "table"
        if kind == "abelian":
            return "abelian:" + ",".join(map(str, self.origin[1]))
        if kind == "metacyclic":
            return "metacyclic:" + ",".join(map(str, self.origin[1:]))
        if kind == "perm":
            degree, gens = self.origin[1], self.origin[2]
            return f"perm:{degree}:" + ",".join(_cycle_string(g) for g in gens)
        if kind == "product":
            return f"product({self.origin[1].descriptor()};{self.origin[2].descriptor()})"
        return f"table:{self.order}"


@dataclass(frozen=True, eq=False)
class ConjClassSet:
    """Conjugacy classes, ordered by least element index.

    ``powers[c][k]`` is the class of ``rep(c)^k`` for ``0 <= k < rep_orders[c]``.
    ``class_of`` and ``reps`` are ``None`` for classes read from a table file
    without an accompanying Cayley table.
    """

    sizes: tuple[int, ...]
    rep_orders: tuple[int, ...]
    powers: tuple[tuple[int, ...], ...]
    class_of: Optional[tuple[int, ...]] = None
    reps: Optional[tuple[int, ...]] = None

    def __len__(self) -> int:
        return len(self.sizes)

    @property
    def group_order(self) -> int:
        return sum(self.sizes)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.rep_orders)

    @cached_property
    def identity_class(self) -> int:
        return self.rep_orders.index(1)

    def power_class(self, c: int, k: int) -> int:
        return self.powers[c][k % self.rep_orders[c]]

    def members(self, c: int) -> list[int]:
        if self.class_of is None:
            raise ValueError("class membership needs a Cayley table")
        return [x for x, cx in enumerate(self.class_of) if cx == c]


@dataclass(frozen=True)
class ResidueGroup:
    """A subgroup of (Z/mZ)^x, stored as the sorted tuple of its residues."""

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self):
        m = self.modulus
        els = tuple(sorted({e % m for e in self.elements}))
        object.__setattr__(self, "elements", els)
        if 1 % m not in els:
            raise ValueError(f"residue group mod {m} must contain 1")
        for a in els:
            if math.gcd(a, m) != 1:
                raise ValueError(f"{a} is not a unit mod {m}")
            for b in els:
                if (a * b) % m not in els:
                    raise ValueError(f"residues {els} are not closed mod {m}")

    @classmethod
    def generated(cls, modulus: int, gens: Iterable[int] = ()) -> ResidueGroup:
        m = modulus
        elems = {1 % m}
        frontier = list(elems)
        gens = [g % m for g in gens]
        for g in gens:
            if math.gcd(g, m) != 1:
                raise ValueError(f"generator {g} is not a unit mod {m}")
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = (a * g) % m
                    if b not in elems:
                        elems.add(b)
                        nxt.append(b)
            frontier = nxt
        return cls(m, tuple(elems))

    @classmethod
    def units(cls, modulus: int) -> ResidueGroup:
        return cls(modulus, tuple(a for a in range(modulus) if math.gcd(a, modulus) == 1))

    @classmethod
    def trivial(cls, modulus: int) -> ResidueGroup:
        return cls(modulus, (1 % modulus,))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a: int) -> bool:
        return a % self.modulus in self.elements

    def __iter__(self):
        return iter(self.elements)

    def reduce(self, m: int) -> ResidueGroup:
        """Image under (Z/modulus)^x -> (Z/m)^x; needs m | modulus."""
        if self.modulus % m:
            raise ValueError(f"{m} does not divide modulus {self.modulus}")
        return ResidueGroup(m, tuple(a % m for a in self.elements))

    def intersect(self, other: ResidueGroup) -> ResidueGroup:
        if other.modulus != self.modulus:
            raise ValueError("moduli differ")
        return ResidueGroup(self.modulus, tuple(set(self.elements) & set(other.elements)))

    def issubset(self, other: ResidueGroup) -> bool:
        return self.modulus == other.modulus and set(self.elements) <= set(other.elements)

    def generators(self) -> list[int]:
        """Greedy generating set: scan residues upward, keep those not yet generated."""
        gens: list[int] = []
        span = ResidueGroup.trivial(self.modulus)
        for a in self.elements:
            if a not in span:
                gens.append(a)
                span = ResidueGroup.generated(self.modulus, gens)
        return gens

    def cyclic_subgroups(self) -> list[ResidueGroup]:
        seen, out = set(), []
        for a in self.elements:
            sub = ResidueGroup.generated(self.modulus, [a])
            if sub.elements not in seen:
                seen.add(sub.elements)
                out.append(sub)
        return out


class Sylow2(str, Enum):
    ODD_ORDER = "odd_order"
    CYCLIC_NONTRIVIAL = "cyclic_nontrivial"
    NONCYCLIC = "noncyclic"


# -- construction -----------------------------------------------------------


def _finish(mul: list[list[int]], origin: tuple, labels: Sequence = ()) -> GroupTable:
    n = len(mul)
    identity = next(e for e in range(n) if all(mul[e][x] == x for x in range(n)))
    inv = [0] * n
    for a in range(n):
        row = mul[a]
        inv[a] = row.index(identity)
    return GroupTable(
        order=n,
        mul=tuple(tuple(r) for r in mul),
        inv=tuple(inv),
        identity=identity,
        origin=origin,
        labels=tuple(labels),
    )


def from_abelian(invariants: Sequence[int]) -> GroupTable:
    """Direct product of cyclic groups; element index is the mixed-radix coordinate."""
    invariants = [int(d) for d in invariants]
    for d in invariants:
        if d < 2:
            raise GroupError(f"abelian invariants must be >= 2, got {d}")
    coords = list(itertools.product(*(range(d) for d in invariants)))
    index = {c: i for i, c in enumerate(coords)}
    mul = [
        [index[tuple((x + y) % d for x, y, d in zip(a, b, invariants))] for b in coords]
        for a in coords
    ]
    return _finish(mul, ("abelian", tuple(invariants)), coords)


def _prime_power(n: int) -> Optional[tuple[int, int]]:
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    a, m = 0, n
    while m % p == 0:
        m //= p
        a += 1
    return (p, a) if m == 1 else None


def multiplicative_order(r: int, m: int) -> int:
    if math.gcd(r, m) != 1:
        raise ValueError(f"{r} is not a unit mod {m}")
    k, x = 1, r % m
    while x != 1 % m:
        x = (x * r) % m
        k += 1
    return k


def from_metacyclic(pa: int, q: int, r: int) -> GroupTable:
    """<s, t | s^pa = t^q = 1, t s t^-1 = s^r>, element s^i t^j at index j*pa + i."""
    if _prime_power(pa) is None:
        raise GroupError(f"metacyclic: pa = {pa} is not a prime power")
    if q < 1:
        raise GroupError(f"metacyclic: q = {q} must be positive")
    if math.gcd(r, pa) != 1:
        raise GroupError(f"metacyclic: r = {r} is not a unit mod {pa}")
    if pow(r, q, pa) != 1 % pa:
        raise GroupError(f"metacyclic: r^q = {r}^{q} is not 1 mod {pa}")
    if multiplicative_order(r, pa) != q:
        raise GroupError(
            f"metacyclic: order of {r} mod {pa} is {multiplicative_order(r, pa)}, not q = {q}"
        )
    rpow = [pow(r, j, pa) for j in range(q)]
    n = pa * q
    mul = [[0] * n for _ in range(n)]
    for j in range(q):
        for i in range(pa):
            a = j * pa + i
            for l in range(q):
                for k in range(pa):
                    # s^i t^j s^k t^l = s^(i + r^j k) t^(j + l)
                    mul[a][l * pa + k] = ((j + l) % q) * pa + (i + rpow[j] * k) % pa
    labels = [(i, j) for j in range(q) for i in range(pa)]
    return _finish(mul, ("metacyclic", pa, q, r), labels)


def _closure_cap() -> int:
    raw = os.environ.get(CLOSURE_CAP_ENV)
    return int(raw) if raw else DEFAULT_CLOSURE_CAP


def _compose(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    # (x*y)(i) = x(y(i)): apply y first
    return tuple(x[i] for i in y)


def from_permutations(
    degree: int, gens: Sequence[Sequence[int]], cap: Optional[int] = None
) -> GroupTable:
    """Closure of permutation generators given as 0-based image tuples."""
    if cap is None:
        cap = _closure_cap()
    gens = [tuple(int(i) for i in g) for g in gens]
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise GroupError(f"invalid permutation of degree {degree}: {g}")
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise GroupError(f"permutation closure exceeds cap of {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    mul = [[index[_compose(a, b)] for b in elements] for a in elements]
    return _finish(mul, ("perm", degree, tuple(gens)), elements)


def direct_product(G: GroupTable, H: GroupTable) -> GroupTable:
    """G x H with (g, h) at index g * |H| + h."""
    nh = H.order
    n = G.order * nh
    mul = [[0] * n for _ in range(n)]
    for a in range(n):
        g1, h1 = divmod(a, nh)
        for b in range(n):
            g2, h2 = divmod(b, nh)
            mul[a][b] = G.mul[g1][g2] * nh + H.mul[h1][h2]
    labels = [(g, h) for g in range(G.order) for h in range(nh)]
    return _finish(mul, ("product", G, H), labels)


def _parse_cycles(degree: int, text: str) -> tuple[int, ...]:
    perm = list(range(degree))
    text = text.strip()
    if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\))+|\(\s*\)", text):
        raise GroupError(f"malformed cycle notation: {text!r}")
    cycles = re.findall(r"\(([^)]*)\)", text)
    for cyc in reversed(cycles):  # rightmost cycle acts first
        pts = [int(t) - 1 for t in cyc.split()]
        if len(set(pts)) != len(pts) or any(not 0 <= p < degree for p in pts):
            raise GroupError(f"invalid cycle ({cyc}) for degree {degree}")
        step = {a: b for a, b in zip(pts, pts[1:] + pts[:1])}
        perm = [step.get(x, x) for x in perm]
    return tuple(perm)


def _cycle_string(perm: Sequence[int]) -> str:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = perm[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def parse_group(spec: str, cap: Optional[int] = None) -> GroupTable:
    """Build a group from a descriptor string (whitespace-insensitive around separators)."""
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "abelian":
            rest = rest.strip()
            invs = [int(x) for x in rest.split(",")] if rest else []
            return from_abelian(invs)
        if kind == "metacyclic":
            parts = [int(x) for x in rest.split(",")]
            if len(parts) != 3:
                raise GroupError("metacyclic descriptor needs exactly pa,q,r")
            return from_metacyclic(*parts)
        if kind == "perm":
            deg_text, _, gens_text = rest.partition(":")
            degree = int(deg_text)
            if degree < 1:
                raise GroupError("permutation degree must be positive")
            gens_text = gens_text.strip()
            chunks = re.split(r"\)\s*,\s*\(", gens_text) if gens_text else []
            gens = []
            for i, chunk in enumerate(chunks):
                if i > 0:
                    chunk = "(" + chunk
                if i < len(chunks) - 1:
                    chunk = chunk + ")"
                gens.append(_parse_cycles(degree, chunk))
            return from_permutations(degree, gens, cap=cap)
    except ValueError as exc:  # int() failures and GroupError alike
        raise GroupError(f"malformed group descriptor {spec!r}: {exc}") from exc
    raise GroupError(f"unknown group kind {kind!r} in {spec!r}")


# -- structure --------------------------------------------------------------


def element_order(G: GroupTable, x: int) -> int:
    k, cur = 1, x
    while cur != G.identity:
        cur = G.mul[cur][x]
        k += 1
    return k


def exponent(G: GroupTable) -> int:
    return G.exponent


def conjugacy_classes(G: GroupTable) -> ConjClassSet:
    n = G.order
    class_of = [-1] * n
    reps, sizes = [], []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        cid = len(reps)
        orbit = {G.conj(t, x) for t in range(n)}
        for y in orbit:
            class_of[y] = cid
        reps.append(x)  # scanning upward, x is the least index of its orbit
        sizes.append(len(orbit))
    rep_orders = [G.orders[x] for x in reps]
    powers = [tuple(class_of[y] for y in G.powers(x)) for x in reps]
    return ConjClassSet(
        sizes=tuple(sizes),
        rep_orders=tuple(rep_orders),
        powers=tuple(powers),
        class_of=tuple(class_of),
        reps=tuple(reps),
    )


def power_class(C: ConjClassSet, c: int, k: int) -> int:
    return C.power_class(c, k)


def normalizer_mu(G: GroupTable, s: int) -> ResidueGroup:
    """Image of N_G(<s>) in Aut(<s>) = (Z/mZ)^x, m = order(s)."""
    pw = G.powers(s)
    m = len(pw)
    if m == 1:
        return ResidueGroup.trivial(1)
    where = {y: k for k, y in enumerate(pw)}
    found = set()
    for t in range(G.order):
        # t<s>t^-1 = <s> iff the conjugate of the generator lands back in <s>
        y = G.conj(t, s)
        if y in where:
            found.add(where[y])
    return ResidueGroup(m, tuple(found))


def sylow2_class(G: GroupTable) -> Sylow2:
    n = G.order
    if n % 2:
        return Sylow2.ODD_ORDER
    two_part = n & -n
    if any(o == two_part for o in G.orders):
        return Sylow2.CYCLIC_NONTRIVIAL
    return Sylow2.NONCYCLIC


def regular_sign(G: GroupTable, s: int) -> int:
    """Sign of the left-multiplication permutation x -> s*x."""
    n = G.order
    seen = [False] * n
    cycles = 0
    row = G.mul[s]
    for x in range(n):
        if not seen[x]:
            cycles += 1
            while not seen[x]:
                seen[x] = True
                x = row[x]
    return -1 if (n - cycles) % 2 else 1


def _subgroup_closure(G: GroupTable, gens: Iterable[int]) -> set[int]:
    gens = set(gens)
    elems = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.mul[a][g]
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return elems


def commutator_subgroup(G: GroupTable) -> set[int]:
    comms = {
        G.mul[G.mul[a][b]][G.mul[G.inv[a]][G.inv[b]]]
        for a in range(G.order)
        for b in range(G.order)
    }
    return _subgroup_closure(G, comms)


def _prime_factors(n: int) -> list[int]:
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


def _invariants_from_counts(order: int, count_killed_by) -> list[int]:
    """Invariant factors of a finite abelian group from |{x : x^k = 1}| counts."""
    elementary: dict[int, list[int]] = {}
    for p in _prime_factors(order):
        logs = [0]
        i = 1
        while True:
            c = count_killed_by(p**i)
            e = round(math.log(c, p))
            assert p**e == c
            logs.append(e)
            if e == logs[-2]:
                break
            i += 1
        # number of cyclic p-factors of order >= p^i is logs[i] - logs[i-1]
        ge = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
        exps = []
        for i, cnt in enumerate(ge, start=1):
            nxt = ge[i] if i < len(ge) else 0
            exps += [i] * (cnt - nxt)
        elementary[p] = sorted((p**e for e in exps), reverse=True)
    width = max((len(v) for v in elementary.values()), default=0)
    factors = []
    for k in range(width):
        f = 1
        for v in elementary.values():
            if k < len(v):
                f *= v[k]
        factors.append(f)
    return sorted(factors)


def abelianization(G: GroupTable) -> list[int]:
    """Invariant factors d1 | d2 | ... of G/[G,G]; [] for a perfect group."""
    N = commutator_subgroup(G)
    coset_of = {}
    reps = []
    for x in range(G.order):
        if x in coset_of:
            continue
        cid = len(reps)
        reps.append(x)
        for y in N:
            coset_of[G.mul[x][y]] = cid
    k = len(reps)

    def order_mod_n(x: int) -> int:
        j, cur = 1, x
        while cur not in N:
            cur = G.mul[cur][x]
            j += 1
        return j

    orders = [order_mod_n(x) for x in reps]
    return _invariants_from_counts(k, lambda d: sum(1 for o in orders if d % o == 0))


def abelian_invariant_lists(n: int) -> list[list[int]]:
    """All invariant-factor lists d1 | d2 | ... | dk with product n (each d >= 2)."""
    out: list[list[int]] = []

    def extend(prefix: list[int], remaining: int):
        if remaining == 1:
            out.append(list(prefix))
            return
        last = prefix[-1] if prefix else 1
        for d in range(2, remaining + 1):
            if remaining % d == 0 and d % last == 0:
                # every later factor is a multiple of d, so d must divide what is left
                rest = remaining // d
                if rest == 1 or rest % d == 0:
                    extend(prefix + [d], rest)

    extend([], n)
    return sorted(out)


def check_group_axioms(
    G: GroupTable, exhaustive_limit: int = 64, samples: int = 100_000, seed: int = 0
) -> bool:
    n, m, e = G.order, G.mul, G.identity
    for a in range(n):
        if m[a][e] != a or m[e][a] != a:
            return False
        if m[a][G.inv[a]] != e or m[G.inv[a]][a] != e:
            return False
    if n <= exhaustive_limit:
        triples: Iterable = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
    return all(m[m[a][b]][c] == m[a][m[b][c]] for a, b, c in triples)


Q8_REGULAR = "perm:8:(1 2 3 4)(5 6 7 8),(1 5 3 7)(2 8 4 6)"

_BUILTINS = {
    "C2": "abelian:2",
    "C3": "abelian:3",
    "C4": "abelian:4",
    "C5": "abelian:5",
    "C6": "abelian:6",
    "C8": "abelian:8",
    "C9": "abelian:9",
    "C12": "abelian:12",
    "C15": "abelian:15",
    "C16": "abelian:16",
    "C2xC2": "abelian:2,2",
    "C2xC4": "abelian:2,4",
    "C2xC6": "abelian:2,6",
    "C3xC3": "abelian:3,3",
    "C2xC2xC2": "abelian:2,2,2",
    "C4xC4": "abelian:4,4",
    "C2xC8": "abelian:2,8",
    "C3xC9": "abelian:3,9",
    "C2xC2xC4": "abelian:2,2,4",
    "C5xC5": "abelian:5,5",
    "C64": "abelian:64",
    "C2xC2xC2xC2xC2xC2": "abelian:2,2,2,2,2,2",
    "S3": "perm:3:(1 2),(1 2 3)",
    "D4": "perm:4:(1 2 3 4),(1 3)",
    "Q8": Q8_REGULAR,
    "A4": "perm:4:(1 2 3),(1 2)(3 4)",
    "S4": "perm:4:(1 2),(1 2 3 4)",
    "D5": "metacyclic:5,2,4",
    "D7": "metacyclic:7,2,6",
    "D9": "metacyclic:9,2,8",
    "F20": "metacyclic:5,4,2",
    "F21": "metacyclic:7,3,2",
    "F21b": "metacyclic:7,3,4",
    "C13:C3": "metacyclic:13,3,3",
    "F42": "metacyclic:7,6,3",
    "C13:C4": "metacyclic:13,4,5",
    "D25": "metacyclic:25,2,24",
}


def builtin_groups() -> dict[str, str]:
    """Named descriptors of the groups exercised by the verification suite."""
    return dict(_BUILTINS)
