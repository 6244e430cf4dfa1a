"""Polynomials over a finite field, with discriminants and factorization.

Coefficients are stored densely as integer encodings (see field.py); Poly
values are immutable.  The heavy lifting is delegated to lowlevel.py; this
module adds the typed surface, validation, and the brute-force discriminant
oracle used to cross-check the resultant path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import lowlevel as ll
from .field import FieldElement, FieldSpec, make_field
from .partitions import Partition

ORACLE_DEGREE_CAP = 8


class Poly:
    """A dense polynomial; the zero polynomial has an empty coefficient tuple."""

    __slots__ = ("spec", "enc")

    def __init__(self, spec: FieldSpec, coeffs: Sequence[Union[int, FieldElement]] = ()):
        encs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.spec != spec:
                    raise ValueError("coefficient from a different field")
                encs.append(c.encoding)
            else:
                c = int(c)
                if not 0 <= c < spec.q:
                    raise ValueError(f"encoding {c} out of range [0, {spec.q})")
                encs.append(c)
        while encs and encs[-1] == 0:
            encs.pop()
        self.spec = spec
        self.enc = tuple(encs)

    @classmethod
    def _raw(cls, spec: FieldSpec, encs) -> "Poly":
        p = object.__new__(cls)
        p.spec = spec
        p.enc = tuple(encs)
        return p

    @classmethod
    def from_text(cls, spec: FieldSpec, text: str) -> "Poly":
        """Parse the CLI wire format: comma-separated encodings, constant first."""
        text = text.strip()
        if not text:
            return cls(spec, ())
        return cls(spec, [int(t) for t in text.split(",")])

    def to_text(self) -> str:
        return ",".join(map(str, self.enc))

    @property
    def is_zero(self) -> bool:
        return not self.enc

    @property
    def degree(self) -> int:
        if not self.enc:
            raise ValueError("the zero polynomial has no degree")
        return len(self.enc) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.enc) and self.enc[-1] == 1

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.spec, e) for e in self.enc)

    def coeff(self, i: int) -> FieldElement:
        e = self.enc[i] if i < len(self.enc) else 0
        return FieldElement(self.spec, e)

    @property
    def leading(self) -> FieldElement:
        if not self.enc:
            raise ValueError("the zero polynomial has no leading coefficient")
        return FieldElement(self.spec, self.enc[-1])

    def _same(self, other: "Poly"):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly")
        if other.spec != self.spec:
            raise ValueError("polynomials over different fields")

    def __add__(self, other):
        self._same(other)
        return Poly._raw(self.spec, ll.add(self.spec.ops(), list(self.enc), list(other.enc)))

    def __sub__(self, other):
        self._same(other)
        return Poly._raw(self.spec, ll.sub(self.spec.ops(), list(self.enc), list(other.enc)))

    def __mul__(self, other):
        self._same(other)
        return Poly._raw(self.spec, ll.mul(self.spec.ops(), list(self.enc), list(other.enc)))

    def __divmod__(self, other):
        self._same(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = ll.divrem(self.spec.ops(), list(self.enc), list(other.enc))
        return Poly._raw(self.spec, q), Poly._raw(self.spec, r)

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.spec != self.spec:
            raise ValueError("evaluation point from a different field")
        return FieldElement(self.spec, ll.eval_at(self.spec.ops(), list(self.enc), x.encoding))

    def __eq__(self, other):
        return isinstance(other, Poly) and self.spec == other.spec and self.enc == other.enc

    def __hash__(self):
        return hash((self.spec, self.enc))

    def __repr__(self):
        if not self.enc:
            return "Poly<0>"
        terms = []
        for i in range(len(self.enc) - 1, -1, -1):
            c = self.enc[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == 1 else f"{c}*{x}")
        return "Poly<" + " + ".join(terms) + ">"


def monomial(spec: FieldSpec, degree: int, coeff: int = 1) -> Poly:
    return Poly(spec, [0] * degree + [coeff])


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity), factors monic irreducible and sorted."""

    unit: FieldElement
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        spec = self.unit.spec
        out = Poly(spec, [self.unit.encoding])
        for f, mult in self.factors:
            for _ in range(mult):
                out = out * f
        return out


# ---------------------------------------------------------------------------
# Operations.


def poly_arith(f: Poly, g: Poly, kind: str):
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    if kind == "divrem":
        return divmod(f, g)
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def derivative(f: Poly) -> Poly:
    if f.is_zero:
        raise ValueError("derivative of the zero polynomial is not defined here")
    return Poly._raw(f.spec, ll.derivative(f.spec.ops(), list(f.enc)))


def resultant(f: Poly, g: Poly, formal_deg_g: Optional[int] = None) -> FieldElement:
    """Res(f, g) with g optionally padded to a formal degree (zero rows count)."""
    if f.is_zero or not f.is_monic or f.degree < 1:
        raise ValueError("resultant requires a monic nonconstant first argument")
    if g.is_zero and formal_deg_g is None:
        raise ValueError("resultant of the zero polynomial needs a formal degree")
    r = ll.resultant(f.spec.ops(), list(f.enc), list(g.enc), formal_deg_g)
    return FieldElement(f.spec, r)


def discriminant(f: Poly) -> FieldElement:
    if f.is_zero or f.degree < 1:
        raise ValueError("the discriminant of a constant is not defined")
    return FieldElement(f.spec, ll.discriminant(f.spec.ops(), list(f.enc)))


def scale_roots(f: Poly, c: FieldElement) -> Poly:
    """c^deg(f) * f(x/c): multiplies every root by c; preserves degree, leading
    coefficient, irreducibility, and factorization type."""
    if f.is_zero:
        raise ValueError("cannot rescale the zero polynomial")
    if c.spec != f.spec:
        raise ValueError("scalar from a different field")
    if c.encoding == 0:
        raise ValueError("the root-scaling map needs a nonzero scalar")
    return Poly._raw(f.spec, ll.scale_roots(f.spec.ops(), list(f.enc), c.encoding))


def translate(f: Poly, t: FieldElement) -> Poly:
    """f(x + t); preserves degree, leading coefficient, and discriminant."""
    if f.is_zero:
        raise ValueError("cannot translate the zero polynomial")
    if t.spec != f.spec:
        raise ValueError("shift from a different field")
    return Poly._raw(f.spec, ll.translate(f.spec.ops(), list(f.enc), t.encoding))


def is_squarefree(f: Poly) -> bool:
    _require_monic_nonconstant(f)
    return ll.is_squarefree(f.spec.ops(), list(f.enc))


def factorization_type(f: Poly) -> Optional[Partition]:
    """Degrees of the distinct irreducible factors of a squarefree monic f,
    sorted descending; None when f is not squarefree."""
    _require_monic_nonconstant(f)
    counts = ll.ddf_degree_counts(f.spec.ops(), list(f.enc))
    if counts is None:
        return None
    parts = []
    for d in range(len(counts) - 1, 0, -1):
        parts.extend([d] * counts[d])
    return Partition(tuple(parts))


def is_irreducible(f: Poly) -> bool:
    _require_monic_nonconstant(f)
    return ll.is_irreducible(f.spec.ops(), list(f.enc))


def factor(f: Poly) -> Factorization:
    if f.is_zero or f.degree < 1:
        raise ValueError("cannot factor a constant")
    unit, pairs = ll.factor(f.spec.ops(), list(f.enc))
    return Factorization(
        unit=FieldElement(f.spec, unit),
        factors=tuple((Poly._raw(f.spec, g), m) for g, m in pairs),
    )


def mobius(f: Poly) -> int:
    """0 if f is not squarefree, else (-1)^(number of distinct irreducible factors)."""
    _require_monic_nonconstant(f)
    counts = ll.ddf_degree_counts(f.spec.ops(), list(f.enc))
    if counts is None:
        return 0
    return -1 if sum(counts) & 1 else 1


def _require_monic_nonconstant(f: Poly):
    if f.is_zero or f.degree < 1:
        raise ValueError("requires a nonconstant polynomial")
    if not f.is_monic:
        raise ValueError("requires a monic polynomial")


# ---------------------------------------------------------------------------
# Brute-force discriminant via the defining root-product formula.


def _embedding(small: FieldSpec, big: FieldSpec) -> list[int]:
    """phi(e) for every encoding e of the small field, inside the big field.

    The embedding sends a root of the small field's defining polynomial to
    the smallest-encoded root of that polynomial in the big field."""
    if small.k == 1:
        # Prime subfield: scalars embed as constant digits.
        return list(range(small.p))
    mod_poly = Poly(big, [c for c in small.modulus] + [1])
    roots = sorted(r for r, _ in _roots_with_multiplicity(mod_poly))
    beta = roots[0]
    ops = big.ops()
    table = []
    for e in range(small.q):
        digits = small.element(e).coeffs
        acc = 0
        power = 1
        for d in digits:
            acc = ops.add(acc, ops.mul(d, power))
            power = ops.mul(power, beta)
        table.append(acc)
    return table


def _roots_with_multiplicity(f: Poly) -> list[tuple[int, int]]:
    """(root encoding, multiplicity) for a polynomial that splits over its field."""
    out = []
    ops = f.spec.ops()
    for g, mult in factor(f).factors:
        if g.degree != 1:
            raise ValueError("polynomial does not split over this field")
        out.append((ops.neg(g.enc[0]), mult))
    return out


def discriminant_oracle(f: Poly) -> FieldElement:
    """Evaluate lc^(2m-2) * prod_{i<j} (alpha_i - alpha_j)^2 over a splitting field."""
    if f.is_zero or f.degree < 1:
        raise ValueError("the discriminant of a constant is not defined")
    m = f.degree
    if m > ORACLE_DEGREE_CAP:
        raise ValueError(f"oracle capped at degree {ORACLE_DEGREE_CAP}")
    if m == 1:
        return f.spec.one
    spec = f.spec
    parts = factor(f)
    ell = 1
    for g, _ in parts.factors:
        ell = ell * g.degree // math.gcd(ell, g.degree)
    if ell == 1:
        big = spec
        phi = list(range(spec.q))
    else:
        big = make_field(spec.p, spec.k * ell)
        phi = _embedding(spec, big)
    roots: list[int] = []
    for g, mult in parts.factors:
        lifted = Poly(big, [phi[c] for c in g.enc])
        for r, _ in _roots_with_multiplicity(lifted):
            roots.extend([r] * mult)
    ops = big.ops()
    acc = ops.pow(phi[f.enc[-1]], 2 * m - 2)
    for i in range(m):
        for j in range(i + 1, m):
            diff = ops.sub(roots[i], roots[j])
            acc = ops.mul(acc, ops.mul(diff, diff))
    back = {ph: e for e, ph in enumerate(phi)}
    return FieldElement(spec, back[acc])
