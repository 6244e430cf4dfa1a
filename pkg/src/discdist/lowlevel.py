"""Dense polynomial arithmetic on lists of field-element encodings.

Polynomials are little-endian lists of integer encodings with no trailing
zeros; the empty list is the zero polynomial.  Every function takes an `ops`
object (FieldSpec.ops()) carrying add/sub/mul/neg/inv on encodings plus the
field parameters q, p, k.  This module is the single arithmetic engine behind
the Poly API; the census kernels reimplement only its innermost loops.
"""

from __future__ import annotations

import hashlib
import random


def strip(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(f) - 1


def is_zero(f):
    return not f


def add(ops, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = ops.add(out[i], c)
    return strip(out)


def sub(ops, f, g):
    out = list(f) + [0] * (len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = ops.sub(out[i], c)
    return strip(out)


def mul(ops, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = ops.add(out[i + j], ops.mul(a, b))
    return strip(out)


def mul_scalar(ops, f, c):
    if c == 0:
        return []
    return [ops.mul(a, c) for a in f]


def divrem(ops, f, g):
    """(quotient, remainder) with deg r < deg g."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = degree(g)
    if degree(f) < dg:
        return [], strip(r)
    inv_lc = ops.inv(g[-1])
    quot = [0] * (degree(f) - dg + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = ops.mul(r[i + dg], inv_lc)
        quot[i] = c
        if c:
            for j in range(dg):
                r[i + j] = ops.sub(r[i + j], ops.mul(c, g[j]))
        r[i + dg] = 0
    return strip(quot), strip(r)


def rem(ops, f, g):
    return divrem(ops, f, g)[1]


def gcd(ops, f, g):
    """Monic gcd; gcd(0, 0) = 0."""
    f, g = list(f), list(g)
    while g:
        f, g = g, rem(ops, f, g)
    if f and f[-1] != 1:
        f = mul_scalar(ops, f, ops.inv(f[-1]))
    return f


def derivative(ops, f):
    p = ops.p
    return strip([ops.mul((i % p), c) for i, c in enumerate(f)][1:])


def eval_at(ops, f, x):
    acc = 0
    for c in reversed(f):
        acc = ops.add(ops.mul(acc, x), c)
    return acc


def pow_mod(ops, base, e, mod):
    result = [1]
    base = rem(ops, base, mod)
    while e:
        if e & 1:
            result = rem(ops, mul(ops, result, base), mod)
        e >>= 1
        base = rem(ops, mul(ops, base, base), mod)
    return result


def translate(ops, f, t):
    """f(x + t), via Horner in (x + t)."""
    out = []
    for c in reversed(f):
        # out = out * (x + t) + c
        shifted = [0] + out
        for i, a in enumerate(out):
            shifted[i] = ops.add(shifted[i], ops.mul(a, t))
        out = shifted
        if not out:
            out = [0]
        out[0] = ops.add(out[0], c)
    return strip(out)


def scale_roots(ops, f, c):
    """c^deg(f) * f(x / c): multiplies every root by c, keeps the leading coefficient."""
    m = degree(f)
    out = []
    power = 1
    for i in range(m, -1, -1):
        out.append(ops.mul(f[i], power))
        power = ops.mul(power, c)
    out.reverse()
    return strip(out)


def resultant(ops, f, g, formal_deg_g=None):
    """Sylvester determinant of f (exact degree) and g at formal degree formal_deg_g.

    A zero g with a positive formal degree gives 0; padding rows contribute
    lc(f)^(formal - actual).  Computed by the Euclidean remainder sequence.
    """
    if not f:
        raise ValueError("resultant needs a nonzero first argument")
    dg = degree(g)
    if formal_deg_g is None:
        if not g:
            raise ValueError("resultant of the zero polynomial needs a formal degree")
        formal_deg_g = dg
    if formal_deg_g < dg:
        raise ValueError("formal degree below the actual degree")
    if not g:
        return 0
    res = ops.pow(f[-1], formal_deg_g - dg)
    sign = 0
    a, da = list(f), degree(f)
    b, db = list(g), dg
    while db > 0:
        r = rem(ops, a, b)
        if not r:
            return 0
        dr = degree(r)
        sign ^= da & db & 1
        res = ops.mul(res, ops.pow(b[-1], da - dr))
        a, da, b, db = b, db, r, dr
    res = ops.mul(res, ops.pow(b[0], da))
    return ops.neg(res) if sign else res


def discriminant(ops, f):
    """Discriminant encoding of a nonconstant polynomial (1 for linear f)."""
    m = degree(f)
    if m < 1:
        raise ValueError("the discriminant of a constant is not defined")
    if m == 1:
        return 1
    lc = f[-1]
    if lc != 1:
        f = mul_scalar(ops, f, ops.inv(lc))
    d = resultant(ops, f, derivative(ops, f), formal_deg_g=m - 1)
    if (m * (m - 1) // 2) & 1:
        d = ops.neg(d)
    if lc != 1:
        d = ops.mul(d, ops.pow(lc, 2 * m - 2))
    return d


def is_squarefree(ops, f):
    fp = derivative(ops, f)
    if not fp:
        return False
    return degree(gcd(ops, f, fp)) == 0


def ddf_degree_counts(ops, f):
    """Multiset of irreducible-factor degrees of a squarefree monic f, as
    counts[d] for d in 0..deg(f); None if f is not squarefree.  Uses only
    distinct-degree splitting."""
    m = degree(f)
    if not is_squarefree(ops, f):
        return None
    counts = [0] * (m + 1)
    w = list(f)
    h = [0, 1]
    d = 0
    while degree(w) > 0:
        d += 1
        if 2 * d > degree(w):
            counts[degree(w)] += 1
            break
        h = pow_mod(ops, h, ops.q, w)
        diff = sub(ops, h, [0, 1])
        g = gcd(ops, diff, w)
        if degree(g) > 0:
            counts[d] += degree(g) // d
            w = divrem(ops, w, g)[0]
            h = rem(ops, h, w)
    return counts


def is_irreducible(ops, f):
    """Rabin's test: x^(q^m) = x mod f and gcd(x^(q^(m/l)) - x, f) = 1 for primes l | m."""
    m = degree(f)
    if m == 1:
        return True
    from .field import prime_factors

    checkpoints = {m // ell for ell in prime_factors(m)}
    h = [0, 1]
    for j in range(1, m + 1):
        h = pow_mod(ops, h, ops.q, f)
        if j in checkpoints:
            if degree(gcd(ops, sub(ops, h, [0, 1]), f)) > 0:
                return False
    return not sub(ops, h, [0, 1])


# ---------------------------------------------------------------------------
# Full factorization: squarefree decomposition, then distinct-degree, then
# equal-degree splitting with a randomness stream seeded from the input.


def _seed_for(ops, f):
    blob = (str(ops.q) + ":" + ",".join(map(str, f))).encode()
    return int.from_bytes(hashlib.blake2b(blob, digest_size=8).digest(), "big")


def _pth_root(ops, f):
    """g with g(x)^p = f(x), for f with zero derivative (so f = h(x^p))."""
    p, k = ops.p, ops.k
    root_exp = p ** (k - 1)  # e -> e^(p^(k-1)) inverts Frobenius on F_{p^k}
    return strip([ops.pow(f[i], root_exp) for i in range(0, len(f), p)])


def squarefree_decomposition(ops, f):
    """[(g_i, e_i)] with f = prod g_i^e_i, each g_i monic squarefree, e_i distinct."""
    p = ops.p
    out = []
    e = 1
    f = list(f)
    while degree(f) > 0:
        fp = derivative(ops, f)
        if not fp:
            f = _pth_root(ops, f)
            e *= p
            continue
        t = gcd(ops, f, fp)
        v = divrem(ops, f, t)[0]
        j = 0
        while degree(v) > 0:
            j += 1
            w = gcd(ops, t, v)
            s = divrem(ops, v, w)[0]
            if degree(s) > 0:
                out.append((s, j * e))
            v = w
            t = divrem(ops, t, w)[0]
        f = t
    return out


def ddf_split(ops, f):
    """[(product of irreducible factors of degree d, d)] for squarefree monic f."""
    out = []
    w = list(f)
    h = [0, 1]
    d = 0
    while degree(w) > 0:
        d += 1
        if 2 * d > degree(w):
            out.append((w, degree(w)))
            break
        h = pow_mod(ops, h, ops.q, w)
        g = gcd(ops, sub(ops, h, [0, 1]), w)
        if degree(g) > 0:
            out.append((g, d))
            w = divrem(ops, w, g)[0]
            h = rem(ops, h, w)
    return out


def _edf(ops, f, d, rng):
    """Split a squarefree monic f that is a product of irreducibles of degree d."""
    m = degree(f)
    if m == d:
        return [f]
    q = ops.q
    while True:
        u = strip([rng.randrange(q) for _ in range(m)])
        if degree(u) < 1:
            continue
        if q % 2 == 1:
            w = pow_mod(ops, u, (q**d - 1) // 2, f)
            g = gcd(ops, sub(ops, w, [1]), f)
        else:
            # Trace map sum_{i<k*d} u^(2^i); its image splits over F_2.
            k_total = ops.k * d
            t = rem(ops, u, f)
            acc = list(t)
            for _ in range(k_total - 1):
                t = rem(ops, mul(ops, t, t), f)
                acc = add(ops, acc, t)
            g = gcd(ops, acc, f)
        if 0 < degree(g) < m:
            rest = divrem(ops, f, g)[0]
            return _edf(ops, g, d, rng) + _edf(ops, rest, d, rng)


def factor(ops, f):
    """(unit encoding, [(monic irreducible, multiplicity), ...]) sorted by
    (degree, coefficient encoding); reproducible via a seed derived from f."""
    if degree(f) < 1:
        raise ValueError("cannot factor a constant")
    unit = f[-1]
    monic = f if unit == 1 else mul_scalar(ops, f, ops.inv(unit))
    rng = random.Random(_seed_for(ops, monic))
    out = []
    for part, mult in squarefree_decomposition(ops, monic):
        for prod, d in ddf_split(ops, part):
            for irr in _edf(ops, prod, d, rng):
                out.append((irr, mult))

    def enc(poly):
        e = 0
        for c in reversed(poly):
            e = e * ops.q + c
        return e

    out.sort(key=lambda fm: (degree(fm[0]), enc(fm[0])))
    return unit, out
