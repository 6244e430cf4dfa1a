"""Finite fields F_{p^k} with a canonical integer encoding of elements.

An element with power-basis coordinates (c_0, ..., c_{k-1}) is encoded as the
integer sum(c_i * p**i), which is a bijection onto [0, q).  The encoding fixes
the on-disk and CLI representation of field elements, so the modulus used for
extension fields must be reproducible: unless overridden, it is the monic
irreducible of degree k over F_p whose own coefficient encoding is smallest.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

# Largest q for which dense q x q operation tables are built.  Census work is
# only feasible far below this; bigger fields get per-call digit arithmetic.
TABLE_LIMIT = 1024

# Fields beyond this size are out of scope.
FIELD_SIZE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Minimal polynomial arithmetic over F_p on plain int lists (little-endian).
# Only used to certify modulus candidates; everything heavier lives in
# lowlevel.py once a FieldSpec exists.

def _pstrip(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _prem(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv_lc = pow(g[-1], p - 2, p)
    for i in range(len(f) - 1 - dg, -1, -1):
        c = f[i + dg] * inv_lc % p
        if c:
            for j in range(dg + 1):
                f[i + j] = (f[i + j] - c * g[j]) % p
    del f[dg:]
    return _pstrip(f)


def _pmulmod(f, g, mod, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _prem(_pstrip(out), mod, p)


def _ppowmod(f, e, mod, p):
    result = [1]
    base = _prem(list(f), mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        e >>= 1
        base = _pmulmod(base, base, mod, p)
    return result


def _pgcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        f, g = g, _prem(f, g, p)
    return f


def _modulus_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """True iff x^k + sum(coeffs[i] x^i) is irreducible over F_p."""
    k = len(coeffs)
    f = list(coeffs) + [1]
    if k == 1:
        return True
    if k == 2:
        return all((t * t + coeffs[1] * t + coeffs[0]) % p for t in range(p))
    # Distinct-degree criterion: no factor of degree d for d <= k//2 means
    # gcd(x^(p^d) - x, f) = 1 for each such d.
    h = [0, 1]
    for _ in range(k // 2):
        h = _ppowmod(h, p, f, p)
        diff = list(h)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _pstrip(diff), p)) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k over F_p with smallest coefficient encoding."""
    if k == 1:
        return ()
    for e in range(p**k):
        coeffs = tuple((e // p**i) % p for i in range(k))
        if _modulus_is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible of degree %d over F_%d" % (k, p))


# ---------------------------------------------------------------------------
# Encoding-level arithmetic backends.


@dataclass(frozen=True)
class FieldTables:
    """Dense operation tables on encodings, as the census kernels consume them."""

    q: int
    p: int
    add: np.ndarray  # int32 (q, q)
    mul: np.ndarray  # int32 (q, q)
    neg: np.ndarray  # int32 (q,)
    inv: np.ndarray  # int32 (q,), inv[0] = 0 sentinel


class _OpsBase:
    """Arithmetic on integer encodings; shared pow/inv-by-power logic."""

    def __init__(self, q: int, p: int, k: int):
        self.q = q
        self.p = p
        self.k = k

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            raise ValueError("negative exponent")
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            a = self.mul(a, a)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError


class _TableOps(_OpsBase):
    def __init__(self, q, p, k, tables: FieldTables):
        super().__init__(q, p, k)
        self._add = tables.add.tolist()
        self._mul = tables.mul.tolist()
        self._neg = tables.neg.tolist()
        self._inv = tables.inv.tolist()

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]


class _DirectOps(_OpsBase):
    """Digit arithmetic for fields too large for dense tables."""

    def __init__(self, q, p, k, modulus):
        super().__init__(q, p, k)
        # x^t mod modulus for t in [0, 2k-1), as digit vectors.
        red = []
        cur = [0] * k
        cur[0] = 1
        for _ in range(2 * k - 1):
            red.append(list(cur))
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for i in range(k):
                    cur[i] = (cur[i] - carry * modulus[i]) % p
        self._red = red

    def _digits(self, a):
        p, k = self.p, self.k
        return [(a // p**i) % p for i in range(k)]

    def _encode(self, digits):
        e = 0
        for d in reversed(digits):
            e = e * self.p + d
        return e

    def add(self, a, b):
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % p for x, y in zip(da, db)])

    def sub(self, a, b):
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x - y) % p for x, y in zip(da, db)])

    def neg(self, a):
        p = self.p
        return self._encode([(-x) % p for x in self._digits(a)])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        p, k = self.p, self.k
        da, db = self._digits(a), self._digits(b)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        out = [0] * k
        for t, c in enumerate(conv):
            if c:
                rt = self._red[t]
                for i in range(k):
                    out[i] += c * rt[i]
        return self._encode([v % p for v in out])


def _build_tables(p: int, k: int, q: int, modulus: tuple[int, ...]) -> FieldTables:
    idx = np.arange(q, dtype=np.int64)
    if k == 1:
        add = (idx[:, None] + idx[None, :]) % q
        mul = (idx[:, None] * idx[None, :]) % q
        neg = (-idx) % q
    else:
        digits = np.stack([(idx // p**i) % p for i in range(k)], axis=1)
        powers = np.array([p**i for i in range(k)], dtype=np.int64)
        add = (((digits[:, None, :] + digits[None, :, :]) % p) * powers).sum(axis=2)
        neg = (((-digits) % p) * powers).sum(axis=1)
        ops = _DirectOps(q, p, k, modulus)
        red = np.array(ops._red, dtype=np.int64)  # (2k-1, k)
        out = np.zeros((q, q, k), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                conv = digits[:, i, None] * digits[None, :, j]
                out += conv[:, :, None] * red[i + j][None, None, :]
        mul = ((out % p) * powers).sum(axis=2)
    inv = np.zeros(q, dtype=np.int64)
    mul_list = mul.tolist()
    for a in range(1, q):
        r, b, n = 1, a, q - 2
        while n:
            if n & 1:
                r = mul_list[r][b]
            n >>= 1
            b = mul_list[b][b]
        inv[a] = r
    return FieldTables(
        q=q,
        p=p,
        add=add.astype(np.int32),
        mul=mul.astype(np.int32),
        neg=neg.astype(np.int32),
        inv=inv.astype(np.int32),
    )


# ---------------------------------------------------------------------------
# Public types.


class FieldSpec:
    """A concrete finite field F_{p^k}; immutable and shareable across threads."""

    __slots__ = ("p", "k", "q", "modulus", "_tables", "_ops", "_generator")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._tables: Optional[FieldTables] = None
        self._ops = None
        self._generator: Optional[int] = None

    def __repr__(self):
        if self.k == 1:
            return f"F({self.p})"
        return f"F({self.p}^{self.k}; modulus={list(self.modulus)})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def element(self, encoding: int) -> "FieldElement":
        if not 0 <= encoding < self.q:
            raise ValueError(f"encoding {encoding} out of range [0, {self.q})")
        return FieldElement(self, encoding)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(coeffs)}")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError("coordinates must lie in [0, p)")
        e = 0
        for c in reversed(coeffs):
            e = e * self.p + c
        return FieldElement(self, e)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterator["FieldElement"]:
        for e in range(self.q):
            yield FieldElement(self, e)

    def tables(self) -> FieldTables:
        if self._tables is None:
            if self.q > TABLE_LIMIT:
                raise ValueError(
                    f"q={self.q} exceeds the dense-table limit {TABLE_LIMIT}"
                )
            self._tables = _build_tables(self.p, self.k, self.q, self.modulus)
        return self._tables

    def ops(self) -> _OpsBase:
        if self._ops is None:
            if self.q <= TABLE_LIMIT:
                self._ops = _TableOps(self.q, self.p, self.k, self.tables())
            else:
                self._ops = _DirectOps(self.q, self.p, self.k, self.modulus)
        return self._ops


@dataclass(frozen=True, slots=True)
class FieldElement:
    spec: FieldSpec
    encoding: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        p, k = self.spec.p, self.spec.k
        return tuple((self.encoding // p**i) % p for i in range(k))

    def is_zero(self) -> bool:
        return self.encoding == 0

    def _check(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec != self.spec:
            raise ValueError(f"field mismatch: {self.spec} vs {other.spec}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec.ops().add(self.encoding, other.encoding))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec.ops().sub(self.encoding, other.encoding))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.spec, self.spec.ops().mul(self.encoding, other.encoding))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.ops().neg(self.encoding))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.ops().inv(self.encoding))

    def pow(self, n: int) -> "FieldElement":
        if self.encoding == 0 and n == 0:
            raise ValueError("0**0 is not defined here")
        return FieldElement(self.spec, self.spec.ops().pow(self.encoding, n))

    def __repr__(self):
        return f"F{self.spec.q}:{self.encoding}"


# ---------------------------------------------------------------------------
# Field-level operations.


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, k: int, modulus: Optional[tuple[int, ...]]) -> FieldSpec:
    if modulus is None:
        modulus = _canonical_modulus(p, k)
    return FieldSpec(p, k, modulus)


def make_field(p: int, k: int = 1, modulus_override: Optional[Sequence[int]] = None) -> FieldSpec:
    """Build F_{p^k} with the canonical (or explicitly overridden) modulus."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > FIELD_SIZE_LIMIT:
        raise ValueError(f"fields with q > {FIELD_SIZE_LIMIT} are unsupported")
    override = None
    if modulus_override is not None:
        override = tuple(int(c) % p for c in modulus_override)
        if len(override) != (0 if k == 1 else k):
            raise ValueError(f"modulus must have {k} coefficients c_0..c_{k-1}")
        if k > 1 and not _modulus_is_irreducible(override, p):
            raise ValueError("modulus polynomial is reducible over F_p")
        if k == 1:
            override = ()
    return _make_field_cached(p, k, override)


def field_from_order(q: int, modulus_override: Optional[Sequence[int]] = None) -> FieldSpec:
    """Build F_q from a prime power q."""
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    p = prime_factors(q)[0]
    k = round(math.log(q, p))
    if p**k != q:
        raise ValueError(f"{q} is not a prime power")
    return make_field(p, k, modulus_override)


def arith(a: FieldElement, b: FieldElement, kind: str) -> FieldElement:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, n: int) -> FieldElement:
    return a.pow(n)


def quadratic_character(d: FieldElement) -> int:
    """+1 if d is a nonzero square, -1 if a nonsquare; odd q only."""
    spec = d.spec
    if spec.q % 2 == 0:
        raise ValueError("the quadratic character is only defined for odd q")
    if d.encoding == 0:
        raise ValueError("the quadratic character is only defined on nonzero elements")
    return 1 if spec.ops().pow(d.encoding, (spec.q - 1) // 2) == 1 else -1


def character_signs(spec: FieldSpec) -> list[int]:
    """chi(d) for every encoding d, with 0 at d = 0; odd q only."""
    if spec.q % 2 == 0:
        raise ValueError("the quadratic character is only defined for odd q")
    ops = spec.ops()
    half = (spec.q - 1) // 2
    return [0] + [1 if ops.pow(d, half) == 1 else -1 for d in range(1, spec.q)]


def generator(spec: FieldSpec) -> FieldElement:
    """Multiplicative generator with the smallest encoding (deterministic)."""
    if spec._generator is None:
        n = spec.q - 1
        if n == 1:
            spec._generator = 1
        else:
            ops = spec.ops()
            factors = prime_factors(n)
            for e in range(2, spec.q):
                if all(ops.pow(e, n // f) != 1 for f in factors):
                    spec._generator = e
                    break
    return FieldElement(spec, spec._generator)


def is_nth_power(d: FieldElement, n: int) -> bool:
    """True iff d = e**n for some nonzero e."""
    if d.encoding == 0:
        raise ValueError("is_nth_power is only defined on nonzero elements")
    if n < 1:
        raise ValueError("n must be >= 1")
    spec = d.spec
    g = math.gcd(n, spec.q - 1)
    return spec.ops().pow(d.encoding, (spec.q - 1) // g) == 1
