"""Pure-Python census kernels.

Same contract as the compiled extension in _kernels.pyx: scan a contiguous
range of coefficient encodings of monic degree-m polynomials and histogram
discriminants, either for all polynomials, for irreducibles only, or jointly
per factorization type.  Tables are dense numpy arrays from FieldSpec.tables();
they are flattened to nested lists here because plain list indexing is the
fastest field operation available to the interpreter.
"""

from __future__ import annotations

from bisect import bisect_left

import numpy as np

# Kept in sync with the fixed scratch buffers of the compiled extension.
MAX_DEGREE = 16


def _check_degree(m):
    if not 1 <= m <= MAX_DEGREE:
        raise ValueError(f"degree must be in [1, {MAX_DEGREE}]")


def _disc(c, m, q, p, add, mul, neg, inv):
    """Discriminant encoding of x^m + sum c[i] x^i (c has m entries)."""
    if m == 1:
        return 1
    a = c + [1]
    b = [0] * m
    for i in range(1, m + 1):
        s = i % p
        if s and a[i]:
            b[i - 1] = mul[s][a[i]]
    db = m - 1
    while db >= 0 and b[db] == 0:
        db -= 1
    if db < 0:
        return 0
    da = m
    res = 1
    sign = 0
    while db > 0:
        lc = b[db]
        lcinv = inv[lc]
        for j in range(da - db, -1, -1):
            top = a[db + j]
            if top:
                coef = mul[top][lcinv]
                mrow = mul[coef]
                for i in range(db):
                    bi = b[i]
                    if bi:
                        a[i + j] = add[a[i + j]][neg[mrow[bi]]]
                a[db + j] = 0
        dr = db - 1
        while dr >= 0 and a[dr] == 0:
            dr -= 1
        if dr < 0:
            return 0
        acc = lc
        for _ in range(da - dr - 1):
            acc = mul[acc][lc]
        res = mul[res][acc]
        if da & db & 1:
            sign ^= 1
        a, b = b, a[: dr + 1]
        da, db = db, dr
    acc = 1
    base = b[0]
    for _ in range(da):
        acc = mul[acc][base]
    res = mul[res][acc]
    if sign:
        res = neg[res]
    if (m * (m - 1) // 2) & 1:
        res = neg[res]
    return res


def _mulmod(u, v, f, m, add, mul, neg):
    """u*v mod f for monic f of degree m; result has length m."""
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if x:
            mrow = mul[x]
            for j, y in enumerate(v):
                if y:
                    out[i + j] = add[out[i + j]][mrow[y]]
    for idx in range(len(out) - 1, m - 1, -1):
        cv = out[idx]
        if cv:
            out[idx] = 0
            mrow = mul[cv]
            for i in range(m):
                fi = f[i]
                if fi:
                    out[idx - m + i] = add[out[idx - m + i]][neg[mrow[fi]]]
    del out[m:]
    out.extend([0] * (m - len(out)))
    return out


def _powmod(base, e, f, m, add, mul, neg):
    result = [1] + [0] * (m - 1)
    base = list(base) + [0] * (m - len(base))
    while e:
        if e & 1:
            result = _mulmod(result, base, f, m, add, mul, neg)
        e >>= 1
        if e:
            base = _mulmod(base, base, f, m, add, mul, neg)
    return result


def _rem(u, g, add, mul, neg, inv):
    """Remainder of u by g (both plain lists, g nonzero); returns stripped list."""
    r = list(u)
    dg = len(g) - 1
    lcinv = inv[g[dg]]
    for i in range(len(r) - 1 - dg, -1, -1):
        top = r[i + dg]
        if top:
            coef = mul[top][lcinv]
            mrow = mul[coef]
            for j in range(dg):
                gj = g[j]
                if gj:
                    r[i + j] = add[r[i + j]][neg[mrow[gj]]]
            r[i + dg] = 0
    while r and r[-1] == 0:
        r.pop()
    return r


def _gcd_monic(u, v, add, mul, neg, inv):
    """Monic gcd of two stripped lists."""
    while v:
        u, v = v, _rem(u, v, add, mul, neg, inv)
    if u and u[-1] != 1:
        lcinv = inv[u[-1]]
        u = [mul[ci][lcinv] for ci in u]
    return u


def _quo_exact(u, g, add, mul, neg, inv):
    """Quotient u / g when the division is exact."""
    r = list(u)
    dg = len(g) - 1
    lcinv = inv[g[dg]]
    quot = [0] * (len(r) - dg)
    for i in range(len(quot) - 1, -1, -1):
        top = r[i + dg]
        if top:
            coef = mul[top][lcinv]
            quot[i] = coef
            mrow = mul[coef]
            for j in range(dg):
                gj = g[j]
                if gj:
                    r[i + j] = add[r[i + j]][neg[mrow[gj]]]
            r[i + dg] = 0
    return quot


def _is_irr(c, m, q, p, add, mul, neg, inv):
    """Irreducibility of x^m + sum c[i] x^i: root scan, then a trial-degree
    distinct-degree sweep up to m//2."""
    if m == 1:
        return True
    for t in range(q):
        acc = 1
        for i in range(m - 1, -1, -1):
            acc = add[mul[acc][t]][c[i]]
        if acc == 0:
            return False
    half = m // 2
    if half < 2:
        return True
    f = c + [1]
    h = _powmod([0, 1], q, f, m, add, mul, neg)
    for _ in range(2, half + 1):
        h = _powmod(h, q, f, m, add, mul, neg)
        diff = list(h)
        diff[1] = add[diff[1]][neg[1]]
        while diff and diff[-1] == 0:
            diff.pop()
        if not diff:
            return False  # f divides x^(q^d) - x with d < m
        if len(_gcd_monic(f, diff, add, mul, neg, inv)) > 1:
            return False
    return True


def _type_code(c, m, q, add, mul, neg, inv):
    """Factorization-type code of a squarefree monic polynomial: the factor
    degree multiset encoded as sum(count_d * (m+1)^(d-1))."""
    if m == 1:
        return 1
    w = c + [1]
    h = [0, 1]
    counts = [0] * (m + 1)
    d = 0
    while True:
        dw = len(w) - 1
        if dw == 0:
            break
        d += 1
        if 2 * d > dw:
            counts[dw] += 1
            break
        h = _powmod(h, q, w, dw, add, mul, neg)
        diff = list(h)
        diff[1] = add[diff[1]][neg[1]]
        while diff and diff[-1] == 0:
            diff.pop()
        # diff == 0 means every factor of w has degree dividing d: gcd is w.
        g = _gcd_monic(w, diff, add, mul, neg, inv) if diff else list(w)
        if len(g) > 1:
            counts[d] += (len(g) - 1) // d
            w = _quo_exact(w, g, add, mul, neg, inv)
            h = _rem(h, w, add, mul, neg, inv)
            h.extend([0] * (len(w) - 1 - len(h)))
    code = 0
    base = 1
    for d in range(1, m + 1):
        code += counts[d] * base
        base *= m + 1
    return code


def _prepare(add, mul, neg, inv):
    return add.tolist(), mul.tolist(), neg.tolist(), inv.tolist()


def _init_digits(start, q, nfree):
    c = []
    e = start
    for _ in range(nfree):
        c.append(e % q)
        e //= q
    return c


def scan_all(q, p, add, mul, neg, inv, m, start, stop, top_zero):
    _check_degree(m)
    add, mul, neg, inv = _prepare(add, mul, neg, inv)
    counts = [0] * q
    nfree = m - 1 if top_zero else m
    c = _init_digits(start, q, nfree) + ([0] if top_zero else [])
    for _ in range(stop - start):
        counts[_disc(c, m, q, p, add, mul, neg, inv)] += 1
        i = 0
        while i < nfree:
            ci = c[i] + 1
            if ci == q:
                c[i] = 0
                i += 1
            else:
                c[i] = ci
                break
    return np.array(counts, dtype=np.int64)


def scan_irr(q, p, add, mul, neg, inv, m, start, stop, top_zero):
    _check_degree(m)
    add, mul, neg, inv = _prepare(add, mul, neg, inv)
    counts = [0] * q
    nfree = m - 1 if top_zero else m
    c = _init_digits(start, q, nfree) + ([0] if top_zero else [])
    for _ in range(stop - start):
        if _is_irr(c, m, q, p, add, mul, neg, inv):
            counts[_disc(c, m, q, p, add, mul, neg, inv)] += 1
        i = 0
        while i < nfree:
            ci = c[i] + 1
            if ci == q:
                c[i] = 0
                i += 1
            else:
                c[i] = ci
                break
    return np.array(counts, dtype=np.int64)


def scan_types(q, p, add, mul, neg, inv, m, start, stop, top_zero, codes):
    _check_degree(m)
    add, mul, neg, inv = _prepare(add, mul, neg, inv)
    code_list = codes.tolist()
    ntypes = len(code_list)
    counts = [[0] * q for _ in range(ntypes)]
    nfree = m - 1 if top_zero else m
    c = _init_digits(start, q, nfree) + ([0] if top_zero else [])
    for _ in range(stop - start):
        d = _disc(c, m, q, p, add, mul, neg, inv)
        if d != 0:
            code = _type_code(c, m, q, add, mul, neg, inv)
            idx = bisect_left(code_list, code)
            counts[idx][d] += 1
        i = 0
        while i < nfree:
            ci = c[i] + 1
            if ci == q:
                c[i] = 0
                i += 1
            else:
                c[i] = ci
                break
    return np.array(counts, dtype=np.int64)
