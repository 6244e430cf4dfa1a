# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled census kernels; mirrors the pure-Python backend in _pykernels.py.

All field arithmetic is table lookups on integer encodings (add/mul are q*q
int32 tables, neg/inv are length-q).  The scan loops run without the GIL so
the census driver can use plain threads for parallelism.
"""

import numpy as np

ctypedef long long i64

DEF MAXM = 16          # largest supported census degree
DEF BUF = 36           # >= 2*MAXM + 4, scratch size for products


cdef inline int tpow(int base, int e, int q, const int* mul) nogil:
    cdef int acc = 1
    cdef int i
    for i in range(e):
        acc = mul[acc * q + base]
    return acc


cdef int c_disc(const int* c, int m, int q, int p,
                const int* add, const int* mul,
                const int* neg, const int* inv) nogil:
    """Discriminant encoding of x^m + sum c[i] x^i."""
    cdef int a[BUF]
    cdef int b[BUF]
    cdef int i, j, s, da, db, dr, lc, lcinv, top, coef, res, sign, bi, e
    if m == 1:
        return 1
    for i in range(m):
        a[i] = c[i]
        b[i] = 0
    a[m] = 1
    for i in range(1, m + 1):
        s = i % p
        if s and a[i]:
            b[i - 1] = mul[s * q + a[i]]
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
                coef = mul[top * q + lcinv]
                for i in range(db):
                    bi = b[i]
                    if bi:
                        a[i + j] = add[a[i + j] * q + neg[mul[coef * q + bi]]]
                a[db + j] = 0
        dr = db - 1
        while dr >= 0 and a[dr] == 0:
            dr -= 1
        if dr < 0:
            return 0
        res = mul[res * q + tpow(lc, da - dr, q, mul)]
        if da & db & 1:
            sign ^= 1
        # rotate: new a = b (degree db), new b = remainder (degree dr)
        for i in range(db + 1):
            e = a[i] if i <= dr else 0
            a[i] = b[i]
            b[i] = e
        da = db
        db = dr
    res = mul[res * q + tpow(b[0], da, q, mul)]
    if sign:
        res = neg[res]
    if (m * (m - 1) // 2) & 1:
        res = neg[res]
    return res


cdef void c_mulmod(const int* u, int ulen, const int* v, int vlen,
                   const int* f, int m, int q,
                   const int* add, const int* mul, const int* neg,
                   int* out) nogil:
    """out = u*v mod monic f of degree m; out has m entries."""
    cdef int work[BUF]
    cdef int i, j, x, cv, fi
    for i in range(ulen + vlen - 1):
        work[i] = 0
    for i in range(ulen):
        x = u[i]
        if x:
            for j in range(vlen):
                if v[j]:
                    work[i + j] = add[work[i + j] * q + mul[x * q + v[j]]]
    for i in range(ulen + vlen - 2, m - 1, -1):
        cv = work[i]
        if cv:
            work[i] = 0
            for j in range(m):
                fi = f[j]
                if fi:
                    work[i - m + j] = add[work[i - m + j] * q + neg[mul[cv * q + fi]]]
    for i in range(m):
        out[i] = work[i] if i < ulen + vlen - 1 else 0


cdef void c_powmod_x(int* h, int hlen, i64 e, const int* f, int m, int q,
                     const int* add, const int* mul, const int* neg) nogil:
    """h = h^e mod monic f of degree m; h is padded/overwritten to m entries."""
    cdef int result[BUF]
    cdef int base[BUF]
    cdef int i
    for i in range(m):
        result[i] = 1 if i == 0 else 0
        base[i] = h[i] if i < hlen else 0
    while e:
        if e & 1:
            c_mulmod(result, m, base, m, f, m, q, add, mul, neg, result)
        e >>= 1
        if e:
            c_mulmod(base, m, base, m, f, m, q, add, mul, neg, base)
    for i in range(m):
        h[i] = result[i]


cdef inline int c_strip(const int* u, int n) nogil:
    while n > 0 and u[n - 1] == 0:
        n -= 1
    return n


cdef int c_rem(int* u, int ulen, const int* g, int glen, int q,
               const int* add, const int* mul, const int* neg,
               const int* inv) nogil:
    """In-place u mod g; returns the stripped length of the remainder."""
    cdef int dg = glen - 1
    cdef int lcinv = inv[g[dg]]
    cdef int i, j, top, coef, gj
    for i in range(ulen - 1 - dg, -1, -1):
        top = u[i + dg]
        if top:
            coef = mul[top * q + lcinv]
            for j in range(dg):
                gj = g[j]
                if gj:
                    u[i + j] = add[u[i + j] * q + neg[mul[coef * q + gj]]]
            u[i + dg] = 0
    return c_strip(u, ulen if ulen < dg else dg)


cdef int c_gcd_monic(const int* u0, int ulen, const int* v0, int vlen,
                     int q, const int* add, const int* mul, const int* neg,
                     const int* inv, int* out) nogil:
    """Monic gcd into out; returns its length."""
    cdef int ubuf[BUF]
    cdef int vbuf[BUF]
    cdef int* u = ubuf
    cdef int* v = vbuf
    cdef int* t
    cdef int i, lcinv
    for i in range(ulen):
        u[i] = u0[i]
    for i in range(vlen):
        v[i] = v0[i]
    while vlen:
        ulen = c_rem(u, ulen, v, vlen, q, add, mul, neg, inv)
        t = u
        u = v
        v = t
        i = ulen
        ulen = vlen
        vlen = i
    if ulen and u[ulen - 1] != 1:
        lcinv = inv[u[ulen - 1]]
        for i in range(ulen):
            u[i] = mul[u[i] * q + lcinv]
    for i in range(ulen):
        out[i] = u[i]
    return ulen


cdef void c_quo_exact(const int* u0, int ulen, const int* g, int glen, int q,
                      const int* add, const int* mul, const int* neg,
                      const int* inv, int* quot) nogil:
    """quot = u / g when exact; quot gets ulen-glen+1 entries."""
    cdef int r[BUF]
    cdef int dg = glen - 1
    cdef int lcinv = inv[g[dg]]
    cdef int i, j, top, coef, gj
    for i in range(ulen):
        r[i] = u0[i]
    for i in range(ulen - glen, -1, -1):
        top = r[i + dg]
        coef = 0
        if top:
            coef = mul[top * q + lcinv]
            for j in range(dg):
                gj = g[j]
                if gj:
                    r[i + j] = add[r[i + j] * q + neg[mul[coef * q + gj]]]
            r[i + dg] = 0
        quot[i] = coef


cdef bint c_is_irr(const int* c, int m, int q, int p,
                   const int* add, const int* mul,
                   const int* neg, const int* inv) nogil:
    cdef int f[BUF]
    cdef int h[BUF]
    cdef int diff[BUF]
    cdef int g[BUF]
    cdef int i, t, acc, dlen, d, half
    if m == 1:
        return True
    for t in range(q):
        acc = 1
        for i in range(m - 1, -1, -1):
            acc = add[mul[acc * q + t] * q + c[i]]
        if acc == 0:
            return False
    half = m // 2
    if half < 2:
        return True
    for i in range(m):
        f[i] = c[i]
    f[m] = 1
    h[0] = 0
    h[1] = 1
    c_powmod_x(h, 2, q, f, m, q, add, mul, neg)
    for d in range(2, half + 1):
        c_powmod_x(h, m, q, f, m, q, add, mul, neg)
        for i in range(m):
            diff[i] = h[i]
        diff[1] = add[diff[1] * q + neg[1]]
        dlen = c_strip(diff, m)
        if dlen == 0:
            return False  # f divides x^(q^d) - x with d < m
        if c_gcd_monic(f, m + 1, diff, dlen, q, add, mul, neg, inv, g) > 1:
            return False
    return True


cdef i64 c_type_code(const int* c, int m, int q,
                     const int* add, const int* mul,
                     const int* neg, const int* inv) nogil:
    """Degree-multiset code sum(count_d * (m+1)^(d-1)) of a squarefree poly."""
    cdef int w[BUF]
    cdef int h[BUF]
    cdef int diff[BUF]
    cdef int g[BUF]
    cdef int counts[MAXM + 1]
    cdef int i, d, dw, wlen, glen, dlen, hlen
    cdef i64 code, base
    if m == 1:
        return 1
    for i in range(m):
        w[i] = c[i]
        counts[i] = 0
    counts[m] = 0
    w[m] = 1
    wlen = m + 1
    h[0] = 0
    h[1] = 1
    hlen = 2
    d = 0
    while True:
        dw = wlen - 1
        if dw == 0:
            break
        d += 1
        if 2 * d > dw:
            counts[dw] += 1
            break
        c_powmod_x(h, hlen, q, w, dw, q, add, mul, neg)
        hlen = dw
        for i in range(hlen):
            diff[i] = h[i]
        diff[1] = add[diff[1] * q + neg[1]]
        dlen = c_strip(diff, hlen)
        if dlen:
            glen = c_gcd_monic(w, wlen, diff, dlen, q, add, mul, neg, inv, g)
        else:
            # diff == 0: every factor of w has degree dividing d, gcd is w.
            glen = wlen
            for i in range(wlen):
                g[i] = w[i]
        if glen > 1:
            counts[d] += (glen - 1) // d
            c_quo_exact(w, wlen, g, glen, q, add, mul, neg, inv, w)
            wlen = wlen - glen + 1
            hlen = c_rem(h, hlen, w, wlen, q, add, mul, neg, inv)
            for i in range(hlen, wlen - 1):
                h[i] = 0
            hlen = wlen - 1
    code = 0
    base = 1
    for d in range(1, m + 1):
        code += counts[d] * base
        base *= m + 1
    return code


cdef inline bint c_next(int* c, int nfree, int q) nogil:
    cdef int i = 0
    while i < nfree:
        if c[i] + 1 == q:
            c[i] = 0
            i += 1
        else:
            c[i] += 1
            return True
    return False


cdef void c_init_digits(int* c, i64 start, int q, int nfree, int m) nogil:
    cdef int i
    cdef i64 e = start
    for i in range(m):
        c[i] = 0
    for i in range(nfree):
        c[i] = <int> (e % q)
        e //= q


def scan_all(int q, int p,
             const int[:, ::1] add, const int[:, ::1] mul,
             const int[::1] neg, const int[::1] inv,
             int m, i64 start, i64 stop, bint top_zero):
    if m < 1 or m > MAXM:
        raise ValueError(f"degree must be in [1, {MAXM}]")
    out = np.zeros(q, dtype=np.int64)
    cdef i64[::1] counts = out
    cdef const int* addp = &add[0, 0]
    cdef const int* mulp = &mul[0, 0]
    cdef const int* negp = &neg[0]
    cdef const int* invp = &inv[0]
    cdef int c[MAXM + 1]
    cdef int nfree = m - 1 if top_zero else m
    cdef i64 n = stop - start
    cdef i64 it
    with nogil:
        c_init_digits(c, start, q, nfree, m)
        for it in range(n):
            counts[c_disc(c, m, q, p, addp, mulp, negp, invp)] += 1
            c_next(c, nfree, q)
    return out


def scan_irr(int q, int p,
             const int[:, ::1] add, const int[:, ::1] mul,
             const int[::1] neg, const int[::1] inv,
             int m, i64 start, i64 stop, bint top_zero):
    if m < 1 or m > MAXM:
        raise ValueError(f"degree must be in [1, {MAXM}]")
    out = np.zeros(q, dtype=np.int64)
    cdef i64[::1] counts = out
    cdef const int* addp = &add[0, 0]
    cdef const int* mulp = &mul[0, 0]
    cdef const int* negp = &neg[0]
    cdef const int* invp = &inv[0]
    cdef int c[MAXM + 1]
    cdef int nfree = m - 1 if top_zero else m
    cdef i64 n = stop - start
    cdef i64 it
    with nogil:
        c_init_digits(c, start, q, nfree, m)
        for it in range(n):
            if c_is_irr(c, m, q, p, addp, mulp, negp, invp):
                counts[c_disc(c, m, q, p, addp, mulp, negp, invp)] += 1
            c_next(c, nfree, q)
    return out


def scan_types(int q, int p,
               const int[:, ::1] add, const int[:, ::1] mul,
               const int[::1] neg, const int[::1] inv,
               int m, i64 start, i64 stop, bint top_zero,
               const i64[::1] codes):
    if m < 1 or m > MAXM:
        raise ValueError(f"degree must be in [1, {MAXM}]")
    cdef int ntypes = codes.shape[0]
    out = np.zeros((ntypes, q), dtype=np.int64)
    cdef i64[:, ::1] counts = out
    cdef const int* addp = &add[0, 0]
    cdef const int* mulp = &mul[0, 0]
    cdef const int* negp = &neg[0]
    cdef const int* invp = &inv[0]
    cdef int c[MAXM + 1]
    cdef int nfree = m - 1 if top_zero else m
    cdef i64 n = stop - start
    cdef i64 it, code
    cdef int d, lo, hi, mid
    cdef bint bad = False
    with nogil:
        c_init_digits(c, start, q, nfree, m)
        for it in range(n):
            d = c_disc(c, m, q, p, addp, mulp, negp, invp)
            if d != 0:
                code = c_type_code(c, m, q, addp, mulp, negp, invp)
                lo = 0
                hi = ntypes
                while lo < hi:
                    mid = (lo + hi) // 2
                    if codes[mid] < code:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo >= ntypes or codes[lo] != code:
                    bad = True
                    break
                counts[lo, d] += 1
            c_next(c, nfree, q)
    if bad:
        raise AssertionError("factorization type outside the provided code set")
    return out
