"""Closed-form counts, the gcd criterion for equal distribution, converse
counterexample partitions, and explicit constructions hitting any prescribed
discriminant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .field import FieldElement, FieldSpec, is_prime, prime_factors
from .partitions import Partition
from .poly import Poly, discriminant

def integer_mobius(n: int) -> int:
    """Mobius function on positive integers."""
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            count += 1
        f += 1 if f == 2 else 2
    if n > 1:
        count += 1
    return -1 if count & 1 else 1


def is_squarefree_int(n: int) -> bool:
    return integer_mobius(n) != 0 if n > 1 else n == 1


def gauss_count(spec: FieldSpec, m: int) -> int:
    """Number of monic irreducibles of degree m over F_q:
    (1/m) * sum over d | m of q^d * mobius(m/d)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    q = spec.q
    total = sum(q**d * integer_mobius(m // d) for d in range(1, m + 1) if m % d == 0)
    assert total % m == 0
    return total // m


def valuation(ell: int, n: int) -> int:
    """Exponent of the largest power of the prime ell dividing n."""
    if n == 0:
        raise ValueError("the valuation of 0 is not defined")
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    n = abs(n)
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


@dataclass(frozen=True)
class ValuationReport:
    q: int
    ell: int
    t: int
    degree: int  # 2^t * ell
    count: int  # number of monic irreducibles of that degree
    lhs: int  # v_ell(count)
    rhs: int  # v_ell(q - 1) - 1
    helper_ok: bool  # the v_ell(a^n - 1) = v_ell(a-1) + v_ell(n) instances
    passed: bool


def check_count_valuation(spec: FieldSpec, ell: int, t: int) -> ValuationReport:
    """Verify v_ell(N_q(2^t * ell)) = v_ell(q-1) - 1 for an odd prime ell | q-1,
    together with the lifting identity instances the computation rests on."""
    q = spec.q
    if ell % 2 == 0 or not is_prime(ell):
        raise ValueError("ell must be an odd prime")
    if (q - 1) % ell != 0:
        raise ValueError("ell must divide q - 1")
    if t < 0:
        raise ValueError("t must be >= 0")
    degree = 2**t * ell
    count = gauss_count(spec, degree)
    lhs = valuation(ell, count)
    rhs = valuation(ell, q - 1) - 1
    # v_ell(a^n - 1) = v_ell(a - 1) + v_ell(n) for a = q = 1 mod ell, on the
    # exponents the derivation uses.
    exponents = [ell - 1] if t == 0 else [2 ** (t - 1) * ell, 2 ** (t - 1)]
    helper_ok = all(
        valuation(ell, q**n - 1) == valuation(ell, q - 1) + valuation(ell, n)
        for n in exponents
    )
    return ValuationReport(q, ell, t, degree, count, lhs, rhs, helper_ok,
                           lhs == rhs and helper_ok)


@dataclass(frozen=True)
class GcdHypothesis:
    q: int
    m: int
    g: int  # gcd(q-1, m(m-1))
    applies: bool  # g == 2 for odd q, g == 1 for even q

    def __bool__(self):
        return self.applies


def gcd_hypothesis(spec: FieldSpec, m: int) -> GcdHypothesis:
    """The equal-distribution criterion: gcd(q-1, m(m-1)) must be 2 for odd q
    and 1 for even q."""
    if m < 2:
        raise ValueError("m must be >= 2")
    q = spec.q
    g = math.gcd(q - 1, m * (m - 1))
    return GcdHypothesis(q, m, g, g == (2 if q % 2 else 1))


def degree_family(spec: FieldSpec, a: int) -> int:
    """m = a(q-1) - 1; such degrees always satisfy the gcd criterion since
    m(m-1) = 2 mod (q-1)."""
    if a < 3:
        raise ValueError("a must be >= 3")
    return a * (spec.q - 1) - 1


def type_class_size(spec: FieldSpec, partition: Partition) -> int:
    """Number of monic squarefree polynomials with the given factorization
    type: choose r_d distinct irreducibles among the N_q(d) of each degree d."""
    size = 1
    for d, r in partition.multiplicities().items():
        size *= math.comb(gauss_count(spec, d), r)
    return size


def counterexample_partition(spec: FieldSpec, m: int) -> Optional[Partition]:
    """A factorization type whose class size is not divisible by (q-1)/2 (odd
    q) or q-1 (even q), witnessing non-uniformity when the gcd criterion
    fails; None when the criterion holds.  Building a witness requires q-1
    squarefree (the divisibility argument needs v_ell(q-1) = 1)."""
    q = spec.q
    if m < 2:
        raise ValueError("m must be >= 2")
    if gcd_hypothesis(spec, m).applies:
        return None
    if not is_squarefree_int(q - 1):
        raise ValueError("construction requires q - 1 squarefree")
    candidates = [ell for ell in prime_factors(q - 1)
                  if ell % 2 and (m % ell == 0 or (m - 1) % ell == 0)]
    if not candidates:
        raise AssertionError("gcd criterion failed without a qualifying odd prime")
    ell = min(candidates)
    reduced = m // ell if m % ell == 0 else (m - 1) // ell
    parts = []
    bit = 0
    while reduced:
        if reduced & 1:
            parts.append(2**bit * ell)
        reduced >>= 1
        bit += 1
    if m % ell != 0:
        parts.append(1)
    return Partition.of(parts)


# ---------------------------------------------------------------------------
# Constructing a polynomial of any prescribed discriminant.


@dataclass(frozen=True)
class DiscConstruction:
    poly: Poly
    case: str  # which construction produced it
    searched: bool  # True when found by exhaustive search (conjecture probe)


def _pth_root(spec: FieldSpec, enc: int) -> int:
    # x -> x^p is the Frobenius bijection; its inverse is x -> x^(p^(k-1)).
    return spec.ops().pow(enc, spec.p ** (spec.k - 1))


def _sign_encoding(spec: FieldSpec, m: int) -> int:
    # Encoding of (-1)^(m(m-1)/2).
    return spec.ops().neg(1) if (m * (m - 1) // 2) % 2 else 1


def construct_disc(spec: FieldSpec, m: int, d: FieldElement) -> DiscConstruction:
    """A monic degree-m polynomial with discriminant d.

    Closed-form families cover m >= p (and m = 2 in any characteristic); the
    conjectural range 2 < m < p falls back to exhaustive search.  The result
    is re-verified before returning.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if d.spec != spec:
        raise ValueError("target value from a different field")
    ops = spec.ops()
    p, q = spec.p, spec.q
    target = d.encoding

    poly = None
    case = ""
    searched = False
    if p == 2 and m == 2:
        # x^2 + ax + 1 has discriminant a^2.
        a = _pth_root(spec, target)
        poly = Poly(spec, [1, a, 1])
        case = "case4"
    elif m == 2:
        # Odd characteristic: disc(x^2 + c) = -4c.
        c = ops.mul(target, ops.neg(ops.inv(4 % p)))
        poly = Poly(spec, [c, 0, 1])
        case = "quadratic"
    elif m >= p and m % p != 0:
        # x^m - x^(m-p) + a x^p + 1 has discriminant sigma * (a+1)^p
        # with sigma = (+-1) m^m.
        sigma = ops.mul(_sign_encoding(spec, m), ops.pow(m % p, m))
        rhs = ops.mul(target, ops.inv(sigma))
        a = ops.sub(_pth_root(spec, rhs), 1)
        coeffs = [0] * (m + 1)
        coeffs[m] = 1
        coeffs[0] = 1
        coeffs[m - p] = ops.add(coeffs[m - p], ops.neg(1))
        coeffs[p] = ops.add(coeffs[p], a)
        poly = Poly(spec, coeffs)
        case = "case1"
    elif m >= p and p != 2:
        # x^m + x^2 + a has discriminant sigma * a with sigma = (+-1)(-2)^m.
        sigma = ops.mul(_sign_encoding(spec, m), ops.pow(ops.neg(2 % p), m))
        a = ops.mul(target, ops.inv(sigma))
        coeffs = [a, 0, 1] + [0] * (m - 3) + [1]
        poly = Poly(spec, coeffs)
        case = "case2"
    elif m >= p:
        # p = 2, m even, m >= 4: x^m + x^3 + a has discriminant a^2.
        a = _pth_root(spec, target)
        coeffs = [a, 0, 0, 1] + [0] * (m - 4) + [1]
        poly = Poly(spec, coeffs)
        case = "case3"
    else:
        # 2 < m < p: surjectivity is only conjectured; probe by search.
        searched = True
        case = "search"
        for e in range(q**m):
            coeffs = [(e // q**i) % q for i in range(m)] + [1]
            cand = Poly(spec, coeffs)
            if discriminant(cand).encoding == target:
                poly = cand
                break
        if poly is None:
            raise ValueError(
                f"no monic polynomial of degree {m} over F_{q} with discriminant "
                f"{target} (conjecture probe exhausted)"
            )

    got = discriminant(poly)
    if got != d:
        raise AssertionError(
            f"construction {case} produced discriminant {got.encoding}, wanted {target}"
        )
    return DiscConstruction(poly, case, searched)
