"""Exact arithmetic in small finite fields GF(p^m) with q = p^m <= 256.

An element is stored by its canonical integer index: writing the element as
a polynomial c0 + c1*x + ... + c_{m-1}*x^(m-1) in the residue class modulo
the field modulus, the index is sum(c_i * p^i).  Index 0 is the additive
identity and index 1 the multiplicative identity.  Full q x q lookup tables
are built lazily per field, so every operation is a table read.

The convention 0**0 == 1 is used throughout: monomial evaluation at points
with zero coordinates depends on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DivisionByZero, FieldTooLarge, MixedFields, NonPrimeCharacteristic

MAX_ORDER = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_divmod(num, den, p):
    """Division with remainder of coefficient tuples (little-endian) over F_p."""
    num = list(num)
    dden = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(len(num) - dden, 0)
    for i in range(len(num) - 1, dden - 1, -1):
        f = (num[i] * inv_lead) % p
        if f:
            quot[i - dden] = f
            for j, c in enumerate(den):
                num[i - dden + j] = (num[i - dden + j] - f * c) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    for deg in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            den = list(tail) + [1]
            _, rem = _poly_divmod(modulus, den, p)
            if rem == [0]:
                return False
    return True


def _smallest_irreducible(p: int, m: int):
    """Lexicographically smallest monic irreducible of degree m (low-degree-first)."""
    for tail in itertools.product(range(p), repeat=m):
        cand = tuple(tail) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # cannot happen


class _Tables:
    """Numpy lookup tables for one field: add, mul, neg, inv and powers."""

    def __init__(self, spec: "FieldSpec"):
        p, m, q = spec.p, spec.m, spec.q
        idx = np.arange(q, dtype=np.int64)
        powers = p ** np.arange(m, dtype=np.int64)
        digits = (idx[:, None] // powers) % p  # q x m

        self.add = (((digits[:, None, :] + digits[None, :, :]) % p) @ powers).astype(np.int16)

        # x^t mod modulus for t = 0 .. 2m-2, as digit rows
        xpow = np.zeros((2 * m - 1, m), dtype=np.int64)
        cur = [1] + [0] * (m - 1)
        for t in range(2 * m - 1):
            xpow[t] = cur
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                cur = [(c - lead * spec.modulus[j]) % p for j, c in enumerate(cur)]
        conv = np.zeros((q, q, 2 * m - 1), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                conv[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
        prod_digits = (conv.reshape(q * q, 2 * m - 1) @ xpow) % p
        self.mul = (prod_digits @ powers).reshape(q, q).astype(np.int16)

        self.neg = np.argmin(self.add != 0, axis=1).astype(np.int16)
        self.inv = np.zeros(q, dtype=np.int16)
        rows, cols = np.nonzero(self.mul == 1)
        self.inv[rows] = cols  # inv[0] stays 0, guarded by callers

        self.pow = np.ones((q, q), dtype=np.int16)
        for e in range(1, q):
            self.pow[:, e] = self.mul[self.pow[:, e - 1], idx]


class FieldSpec:
    """A finite field F_q, q = p^m <= 256, with a fixed monic irreducible modulus.

    The default modulus is the lexicographically smallest irreducible of
    degree m over F_p, so constructions are deterministic across runs.
    """

    def __init__(self, p: int, m: int, modulus=None):
        if not _is_prime(p):
            raise NonPrimeCharacteristic(f"p = {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > MAX_ORDER:
            raise FieldTooLarge(f"q = {p}^{m} = {q} exceeds {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = _smallest_irreducible(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = tuple(modulus)
        self._tables = None

    @property
    def tables(self) -> _Tables:
        if self._tables is None:
            self._tables = _Tables(self)
        return self._tables

    def element(self, index: int) -> "FieldElement":
        return FieldElement(self, index)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus})"

    def __getstate__(self):
        return (self.p, self.m, self.modulus)

    def __setstate__(self, state):
        self.p, self.m, self.modulus = state
        self.q = self.p**self.m
        self._tables = None


def reduce_exponent(e: int, q: int) -> int:
    """Map an exponent e >= 0 into [0, q-1] preserving a -> a**e for all a.

    Uses a**(q-1) == 1 for a != 0; exponent 0 stays 0 (the 0**0 == 1 case)
    and positive exponents stay positive (so 0**e == 0 survives).
    """
    if e == 0:
        return 0
    return (e - 1) % (q - 1) + 1


@dataclass(frozen=True)
class FieldElement:
    """Immutable element of a FieldSpec, identified by its canonical index."""

    spec: FieldSpec
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.spec.q:
            raise ValueError(f"index {self.index} out of range for q = {self.spec.q}")

    @property
    def coeffs(self):
        p = self.spec.p
        i = self.index
        out = []
        for _ in range(self.spec.m):
            out.append(i % p)
            i //= p
        return tuple(out)

    def _check(self, other: "FieldElement"):
        if self.spec != other.spec:
            raise MixedFields(f"{self.spec} vs {other.spec}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.spec, int(self.spec.tables.add[self.index, other.index]))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FieldElement(self.spec, int(self.spec.tables.neg[self.index]))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.spec, int(self.spec.tables.mul[self.index, other.index]))

    def inv(self):
        if self.index == 0:
            raise DivisionByZero("inverse of 0")
        return FieldElement(self.spec, int(self.spec.tables.inv[self.index]))

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        r = reduce_exponent(e, self.spec.q)
        return FieldElement(self.spec, int(self.spec.tables.pow[self.index, r]))

    def __bool__(self):
        return self.index != 0

    def __str__(self):
        if self.spec.m == 1:
            return str(self.index)
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                parts.append(f"{head}x" if i == 1 else f"{head}x^{i}")
        return "+".join(reversed(parts)) if parts else "0"


def field_new(p: int, m: int) -> FieldSpec:
    """The field F_{p^m} with the deterministic default modulus."""
    return FieldSpec(p, m)


def field_from_order(q: int) -> FieldSpec:
    """Factor q = p^m and build the field; q must be a prime power <= 256."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise NonPrimeCharacteristic(f"{q} is not a prime power")
            return FieldSpec(p, m)
        p += 1
    return FieldSpec(q, 1)


def elements(spec: FieldSpec):
    """All q elements in ascending index order; elements()[0] is 0."""
    return [FieldElement(spec, i) for i in range(spec.q)]
