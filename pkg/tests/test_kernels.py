"""The compiled and pure kernels must agree with each other and with the
polynomial API on exhaustive small sweeps."""

import itertools

import numpy as np
import pytest

from discdist import _pykernels, kernels
from discdist.census import _type_code
from discdist.field import make_field
from discdist.partitions import partitions
from discdist.poly import Poly, discriminant, factorization_type, is_irreducible

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (2, 3)]

compiled = pytest.mark.skipif(
    kernels.BACKEND != "compiled", reason="compiled extension not built"
)


def _tables(p, k):
    spec = make_field(p, k)
    return spec, spec.tables()


def _codes(m):
    return np.array(sorted(_type_code(lam, m) for lam in partitions(m)), dtype=np.int64)


@pytest.mark.parametrize("p,k", FIELDS)
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_pure_scans_match_poly_api(p, k, m):
    spec, t = _tables(p, k)
    q = spec.q
    n = q**m
    alls = _pykernels.scan_all(q, p, t.add, t.mul, t.neg, t.inv, m, 0, n, False)
    irrs = _pykernels.scan_irr(q, p, t.add, t.mul, t.neg, t.inv, m, 0, n, False)
    types = _pykernels.scan_types(q, p, t.add, t.mul, t.neg, t.inv, m, 0, n, False, _codes(m))
    want_all = np.zeros(q, dtype=np.int64)
    want_irr = np.zeros(q, dtype=np.int64)
    lam_index = {
        lam: i for i, (_, lam) in enumerate(sorted((_type_code(l, m), l) for l in partitions(m)))
    }
    want_types = np.zeros((len(lam_index), q), dtype=np.int64)
    for tail in itertools.product(range(q), repeat=m):
        f = Poly(spec, list(tail) + [1])
        d = discriminant(f).encoding
        want_all[d] += 1
        if is_irreducible(f):
            want_irr[d] += 1
        lam = factorization_type(f)
        if lam is not None:
            want_types[lam_index[lam]][d] += 1
    assert (alls == want_all).all()
    assert (irrs == want_irr).all()
    assert (types == want_types).all()


@compiled
@pytest.mark.parametrize("p,k", FIELDS)
@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_compiled_matches_pure(p, k, m):
    spec, t = _tables(p, k)
    q = spec.q
    n = q**m
    if n > 20000:
        n = 20000
    codes = _codes(m)
    for top_zero in (False, True):
        space = q ** (m - 1) if top_zero else n
        stop = min(space, n)
        a1 = kernels.scan_all(q, p, t.add, t.mul, t.neg, t.inv, m, 0, stop, top_zero)
        a2 = _pykernels.scan_all(q, p, t.add, t.mul, t.neg, t.inv, m, 0, stop, top_zero)
        assert (a1 == a2).all()
        b1 = kernels.scan_irr(q, p, t.add, t.mul, t.neg, t.inv, m, 0, stop, top_zero)
        b2 = _pykernels.scan_irr(q, p, t.add, t.mul, t.neg, t.inv, m, 0, stop, top_zero)
        assert (b1 == b2).all()
        c1 = kernels.scan_types(q, p, t.add, t.mul, t.neg, t.inv, m, 0, stop, top_zero, codes)
        c2 = _pykernels.scan_types(q, p, t.add, t.mul, t.neg, t.inv, m, 0, stop, top_zero, codes)
        assert (c1 == c2).all()


@compiled
def test_compiled_range_split_is_exact():
    spec, t = _tables(5, 1)
    whole = kernels.scan_all(5, 5, t.add, t.mul, t.neg, t.inv, 4, 0, 625, False)
    pieces = sum(
        kernels.scan_all(5, 5, t.add, t.mul, t.neg, t.inv, 4, a, min(a + 100, 625), False)
        for a in range(0, 625, 100)
    )
    assert (whole == pieces).all()


def test_degree_cap():
    spec, t = _tables(2, 1)
    with pytest.raises(ValueError):
        kernels.scan_all(2, 2, t.add, t.mul, t.neg, t.inv, kernels.MAX_DEGREE + 1, 0, 1, False)
