"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored over the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1)
reduced modulo the n-th cyclotomic polynomial.  Operands with different
conductors are lifted to the lcm before combining.  No floating point is used.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "Cyclotomic",
    "cyclo_poly",
    "euler_phi",
    "root_of_unity",
    "galois_apply",
    "to_rational",
    "from_json",
    "to_json",
]

Scalar = Union[int, Fraction]


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi needs n >= 1, got {n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # Coefficient lists are little-endian; den must be monic.
    num = list(num)
    dlen = len(den)
    if len(num) < dlen:
        return [0], num
    quot = [0] * (len(num) - dlen + 1)
    for i in range(len(num) - dlen, -1, -1):
        c = num[i + dlen - 1]
        quot[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    rem = num[: dlen - 1] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclo_poly(n: int) -> tuple[int, ...]:
    """Return the n-th cyclotomic polynomial as little-endian integer coefficients.

    >>> cyclo_poly(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclo_poly(d)))
            assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds x^k mod Phi_n over the power basis, for 0 <= k < n."""
    phi = cyclo_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x, then reduce the overflow coefficient with the monic Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


class Cyclotomic:
    """An element of Q(zeta_n) in canonical power-basis form.

    Stored as integer numerators over one positive common denominator, which
    keeps the inner loops in integer arithmetic.  Values are immutable.
    Equality is decided after lifting both operands to a common conductor, so
    ``root_of_unity(4, 1) == root_of_unity(8, 2)``.
    """

    __slots__ = ("_n", "_num", "_den")

    def __init__(self, conductor: int, coeffs: Iterable[Scalar]):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        fr = [_as_fraction(c) for c in coeffs]
        if len(fr) != euler_phi(conductor):
            raise ValueError(
                f"expected {euler_phi(conductor)} coefficients for conductor {conductor}, got {len(fr)}"
            )
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        self._set(conductor, [f.numerator * (den // f.denominator) for f in fr], den)

    def _set(self, n: int, num: list[int], den: int) -> None:
        g = math.gcd(den, *num)
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self._n = n
        self._num = tuple(num)
        self._den = den

    @classmethod
    def _raw(cls, n: int, num: list[int], den: int = 1) -> Cyclotomic:
        obj = cls.__new__(cls)
        if den < 0:
            num, den = [-x for x in num], -den
        obj._set(n, num, den)
        return obj

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    @classmethod
    def rational(cls, r: Scalar) -> Cyclotomic:
        r = _as_fraction(r)
        return cls._raw(1, [r.numerator], r.denominator)

    @classmethod
    def from_exponents(cls, n: int, terms: Iterable[tuple[Scalar, int]]) -> Cyclotomic:
        """Build sum of c * zeta_n^k over (c, k) pairs, reducing to canonical form."""
        by_exp: dict[int, Fraction] = {}
        for c, k in terms:
            k %= n
            by_exp[k] = by_exp.get(k, 0) + _as_fraction(c)
        den = math.lcm(*(Fraction(v).denominator for v in by_exp.values())) if by_exp else 1
        return cls._from_int_exponents(
            n, {k: int(v * den) for k, v in by_exp.items() if v}, den
        )

    @classmethod
    def _from_int_exponents(cls, n: int, by_exp: dict[int, int], den: int = 1) -> Cyclotomic:
        table = _power_table(n)
        acc = [0] * euler_phi(n)
        for k, c in by_exp.items():
            if c:
                for j, v in enumerate(table[k % n]):
                    if v:
                        acc[j] += c * v
        return cls._raw(n, acc, den)

    def lift(self, m: int) -> Cyclotomic:
        """Re-express in Q(zeta_m); requires conductor | m."""
        if m % self._n:
            raise ValueError(f"cannot lift conductor {self._n} to {m}")
        if m == self._n:
            return self
        step = m // self._n
        return Cyclotomic._from_int_exponents(
            m, {i * step: c for i, c in enumerate(self._num) if c}, self._den
        )

    def exponent_terms(self) -> dict[int, int]:
        """Nonzero numerators keyed by power of zeta_n (denominator separate)."""
        return {i: c for i, c in enumerate(self._num) if c}

    @property
    def denominator(self) -> int:
        return self._den

    def _coerce(self, other) -> Optional[Cyclotomic]:
        if isinstance(other, Cyclotomic):
            return other
        try:
            return Cyclotomic.rational(_as_fraction(other))
        except TypeError:
            return None

    def _common(self, other: Cyclotomic) -> tuple[int, Cyclotomic, Cyclotomic]:
        m = math.lcm(self._n, other._n)
        return m, self.lift(m), other.lift(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m, a, b = self._common(other)
        den = math.lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return Cyclotomic._raw(m, [x * fa + y * fb for x, y in zip(a._num, b._num)], den)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic._raw(self._n, [-x for x in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            r = _as_fraction(other)
            return Cyclotomic._raw(
                self._n, [x * r.numerator for x in self._num], self._den * r.denominator
            )
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other._n == 1:
            return self * Fraction(other._num[0], other._den)
        if self._n == 1:
            return other * Fraction(self._num[0], self._den)
        m, a, b = self._common(other)
        prod: dict[int, int] = {}
        for i, x in enumerate(a._num):
            if not x:
                continue
            for j, y in enumerate(b._num):
                if y:
                    k = (i + j) % m
                    prod[k] = prod.get(k, 0) + x * y
        return Cyclotomic._from_int_exponents(m, prod, a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a cyclotomic by zero")
            return self * (1 / _as_fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            raise ValueError("negative powers are not supported; use galois_apply for roots of unity")
        result: Cyclotomic = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other._n == self._n:
            return self._num == other._num and self._den == other._den
        _, a, b = self._common(other)
        return a._num == b._num and a._den == b._den

    # Equality is conductor-independent, so hashing goes through the rational
    # part only; non-rational values all land in one bucket.
    def __hash__(self) -> int:
        r = self.to_rational()
        return hash(r) if r is not None else hash(("cyclotomic", self._den))

    def __bool__(self) -> bool:
        return any(self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def to_rational(self) -> Optional[Fraction]:
        if any(self._num[1:]):
            return None
        return Fraction(self._num[0], self._den)

    def galois(self, k: int) -> Cyclotomic:
        if math.gcd(k, self._n) != 1:
            raise ValueError(f"galois action needs k coprime to conductor {self._n}, got {k}")
        n = self._n
        by_exp: dict[int, int] = {}
        for i, c in enumerate(self._num):
            if c:
                e = (i * k) % n
                by_exp[e] = by_exp.get(e, 0) + c
        return Cyclotomic._from_int_exponents(n, by_exp, self._den)

    def conjugate(self) -> Cyclotomic:
        return self.galois(-1)

    def root_exponent(self) -> Optional[Fraction]:
        """r in [0, 1) with self = exp(2 pi i r), or None if self is not a root of unity."""
        if self._den != 1:
            return None
        return _root_lookup(self._n).get(self._num)

    def terms(self) -> list[tuple[Fraction, int]]:
        return [(Fraction(c, self._den), i) for i, c in enumerate(self._num) if c]

    def __repr__(self) -> str:
        return f"Cyclotomic({self._n}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        parts = []
        for c, i in self.terms():
            if i == 0:
                parts.append(str(c))
            else:
                mono = f"z{self._n}" + (f"^{i}" if i > 1 else "")
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


@lru_cache(maxsize=None)
def _root_lookup(n: int) -> dict[tuple[int, ...], Fraction]:
    table = _power_table(n)
    found: dict[tuple[int, ...], Fraction] = {}
    for k, row in enumerate(table):
        found.setdefault(row, Fraction(k, n))
        # -zeta_n^k = zeta_2n^(2k+n); it lies in Q(zeta_n) even for odd n
        found.setdefault(tuple(-x for x in row), (Fraction(k, n) + Fraction(1, 2)) % 1)
    return found


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError(f"roots of unity need n >= 1, got {n}")
    return Cyclotomic._raw(n, list(_power_table(n)[k % n]))


def galois_apply(x: Cyclotomic | Scalar, k: int) -> Cyclotomic:
    if not isinstance(x, Cyclotomic):
        x = Cyclotomic.rational(x)
    return x.galois(k)


def to_rational(x: Cyclotomic) -> Optional[Fraction]:
    return x.to_rational()


def to_json(x: Cyclotomic) -> dict:
    return {
        "conductor": x.conductor,
        "terms": [[c.numerator, c.denominator, i] for c, i in x.terms()],
    }


def from_json(doc: dict | int | Sequence) -> Cyclotomic:
    """Parse ``{"conductor": n, "terms": [[num, den, exp], ...]}``; bare ints are rationals."""
    if isinstance(doc, int):
        return Cyclotomic.rational(doc)
    if not isinstance(doc, dict) or "conductor" not in doc:
        raise ValueError(f"malformed cyclotomic document: {doc!r}")
    n = int(doc["conductor"])
    terms = []
    for term in doc.get("terms", []):
        if len(term) != 3:
            raise ValueError(f"cyclotomic term must be [num, den, exp], got {term!r}")
        num, den, exp = (int(t) for t in term)
        if den == 0:
            raise ValueError("zero denominator in cyclotomic term")
        terms.append((Fraction(num, den), exp))
    return Cyclotomic.from_exponents(n, terms)
