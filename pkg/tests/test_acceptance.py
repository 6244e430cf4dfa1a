"""Acceptance suite: one test per criterion, exact-integer comparisons.

Each test prints a pass/fail line with its runtime.  Stated runtime budgets
are asserted when the compiled kernel backend is active (the pure-Python
fallback is orders of magnitude slower and only needs to be correct).
Criteria covering the largest censuses (q=7 degrees 9-10, q=11 degrees 8-9)
run with `pytest --long`.
"""

import itertools
import json
import math
import time

import pytest

from goldens import TABLE_ALL, TABLE_IRR

from discdist import census as cz
from discdist import kernels, theory
from discdist.field import generator, make_field, quadratic_character
from discdist.partitions import Partition, partitions
from discdist.poly import (
    Poly,
    discriminant,
    discriminant_oracle,
    scale_roots,
    translate,
)

ENFORCE_BUDGETS = kernels.BACKEND == "compiled"

SPECS = {q: make_field(*pk) for q, pk in
         {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1),
          8: (2, 3), 9: (3, 2), 11: (11, 1), 13: (13, 1)}.items()}


class Criterion:
    def __init__(self, num, desc, budget=None):
        self.num = num
        self.desc = desc
        self.budget = budget
        self.t0 = time.time()

    def done(self):
        dt = time.time() - self.t0
        print(f"\ncriterion {self.num}: PASS  {self.desc}  ({dt:.1f}s)")
        if self.budget is not None and ENFORCE_BUDGETS:
            assert dt < self.budget, f"criterion {self.num} overran {self.budget}s budget"


def census_counts(q, m, mode, workers=2):
    return cz.census(SPECS[q], m, mode, workers=workers).counts


def test_criterion_1_golden_table_q3():
    c = Criterion(1, "all-monic table for q=3, degrees 2-10", budget=5)
    for m in range(2, 11):
        assert census_counts(3, m, cz.ALL_MONIC) == tuple(TABLE_ALL[3][m]), m
        assert all(v == 3 ** (m - 1) for v in TABLE_ALL[3][m])
    c.done()


def test_criterion_2_golden_table_q5():
    c = Criterion(2, "all-monic table for q=5, degrees 2-10, single worker", budget=60)
    for m in range(2, 11):
        got = cz.census(SPECS[5], m, cz.ALL_MONIC, workers=1).counts
        assert got == tuple(TABLE_ALL[5][m]), m
    c.done()


def test_criterion_3_golden_irreducible_q3_q5():
    c = Criterion(3, "irreducible tables for q=3 and q=5, degrees 2-10", budget=120)
    for q in (3, 5):
        for m in range(2, 11):
            assert census_counts(q, m, cz.IRREDUCIBLE) == tuple(TABLE_IRR[q][m]), (q, m)
    c.done()


def test_criterion_4_golden_q7_default():
    c = Criterion(4, "q=7 tables, degrees 2-8", budget=300)
    for m in range(2, 9):
        assert census_counts(7, m, cz.ALL_MONIC, workers=8) == tuple(TABLE_ALL[7][m]), m
        assert census_counts(7, m, cz.IRREDUCIBLE, workers=8) == tuple(TABLE_IRR[7][m]), m
    c.done()


@pytest.mark.long
def test_criterion_4_golden_q7_long():
    c = Criterion(4, "q=7 all-monic table, degrees 9-10 (--long)", budget=1800)
    for m in (9, 10):
        assert census_counts(7, m, cz.ALL_MONIC, workers=8) == tuple(TABLE_ALL[7][m]), m
    c.done()


def test_criterion_5_golden_q11_default():
    c = Criterion(5, "q=11 tables, degrees 2-7", budget=300)
    for m in range(2, 8):
        assert census_counts(11, m, cz.ALL_MONIC, workers=8) == tuple(TABLE_ALL[11][m]), m
        assert census_counts(11, m, cz.IRREDUCIBLE, workers=8) == tuple(TABLE_IRR[11][m]), m
    c.done()


@pytest.mark.long
def test_criterion_5_golden_q11_long():
    c = Criterion(5, "q=11 tables, degrees 8-9 with reduction (--long)", budget=3600)
    for m in (8, 9):
        assert census_counts(11, m, cz.ALL_MONIC, workers=8) == tuple(TABLE_ALL[11][m]), m
        assert census_counts(11, m, cz.IRREDUCIBLE, workers=8) == tuple(TABLE_IRR[11][m]), m
    c.done()


def test_criterion_6_disc_zero_count():
    c = Criterion(6, "count at discriminant 0 is q^(m-1) for q in {2,...,11}, m in 2..6")
    for q in (2, 3, 4, 5, 7, 8, 9, 11):
        for m in range(2, 7):
            assert census_counts(q, m, cz.ALL_MONIC)[0] == q ** (m - 1), (q, m)
    c.done()


def test_criterion_7_parity_and_mobius_sums():
    c = Criterion(7, "parity law (odd q) and Mobius sums, m in 2..5")
    for q in (3, 5, 7, 9):
        for m in range(2, 6):
            assert cz.verify_stickelberger(SPECS[q], m, workers=2).passed, (q, m)
    for q in (2, 3, 4, 5, 7, 8, 9):
        for m in range(2, 6):
            assert cz.verify_mobius_sums(SPECS[q], m, workers=2).passed, (q, m)
    c.done()


def test_criterion_8_equal_distribution():
    c = Criterion(8, "gcd criterion implies uniform censuses, q in {2,...,13}, m in 2..6")
    checked = 0
    for q in (3, 5, 7, 9, 11, 13, 2, 4, 8):
        spec = SPECS[q]
        for m in range(2, 7):
            if not theory.gcd_hypothesis(spec, m).applies:
                continue
            table = cz.census(spec, m, cz.ALL_MONIC, workers=2)
            assert cz.is_equally_distributed(table).equal, (q, m)
            assert table.counts[0] == q ** (m - 1)
            for lam, tt in cz.type_spectrum(spec, m, workers=2).items():
                if tt.total == 0:
                    continue
                assert cz.is_equally_distributed(tt).equal, (q, m, lam)
                checked += 1
    assert checked > 50
    c.done()


def test_criterion_9_oracle_equivalence():
    c = Criterion(9, "resultant discriminant == root-product oracle, plus scaling "
                     "and translation invariance")
    cases = [(SPECS[2], 4), (SPECS[3], 4), (SPECS[5], 4),
             (SPECS[4], 3), (SPECS[7], 3), (SPECS[9], 3)]
    total = 0
    for spec, maxdeg in cases:
        ops = spec.ops()
        for m in range(1, maxdeg + 1):
            for tail in itertools.product(range(spec.q), repeat=m):
                f = Poly(spec, list(tail) + [1])
                d = discriminant(f)
                assert d == discriminant_oracle(f), f
                total += 1
                if m < 2:
                    continue
                zeta = generator(spec)
                scaled = scale_roots(f, zeta)
                want = ops.mul(ops.pow(zeta.encoding, m * (m - 1)), d.encoding)
                assert discriminant(scaled).encoding == want, f
                assert discriminant(translate(f, spec.one)) == d, f
    assert total >= 1500
    c.done()


def test_criterion_10_gauss_and_valuation():
    c = Criterion(10, "closed-form irreducible counts and their ell-adic valuations")
    for q in (2, 3, 4, 5, 7, 8, 9):
        spec = SPECS[q]
        for m in range(1, 7):
            assert cz.census(spec, m, cz.IRREDUCIBLE, workers=2).total == \
                theory.gauss_count(spec, m), (q, m)
    prime_powers = [q for q in range(3, 65)
                    if len({p for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                        41, 43, 47, 53, 59, 61) if q % p == 0}) == 1
                    and _is_prime_power(q)]
    checked = 0
    for q in prime_powers:
        spec = make_field(*_prime_power(q))
        for ell in (3, 5, 7, 11):
            if (q - 1) % ell:
                continue
            t = 0
            while 2**t * ell <= 12:
                assert theory.check_count_valuation(spec, ell, t).passed, (q, ell, t)
                checked += 1
                t += 1
    assert checked >= 30
    c.done()


def _prime_power(q):
    p = next(p for p in range(2, q + 1) if q % p == 0)
    k = round(math.log(q, p))
    return (p, k) if p**k == q else None


def _is_prime_power(q):
    return _prime_power(q) is not None


def test_criterion_11_converse_witnesses():
    c = Criterion(11, "failed gcd criterion yields a non-uniform witness type "
                      "for q in {3, 7, 11}")
    checked = 0
    for q in (3, 7, 11):
        spec = SPECS[q]
        for m in range(2, 9):
            if math.gcd(q - 1, m * (m - 1)) == 2:
                assert theory.counterexample_partition(spec, m) is None
                continue
            lam = theory.counterexample_partition(spec, m)
            assert lam is not None and lam.m == m, (q, m)
            table = cz.census(spec, m, cz.by_type(lam), workers=2)
            assert table.total == theory.type_class_size(spec, lam)
            assert not cz.is_equally_distributed(table).equal, (q, m, lam)
            checked += 1
    assert checked == 6  # q=7: m in {3,4,6,7}; q=11: m in {5,6}
    c.done()


def test_criterion_12_surjectivity():
    c = Criterion(12, "a polynomial of every discriminant exists and is constructed, "
                      "p <= m <= 8 plus quadratics")
    for q in (2, 3, 4, 5, 7, 8, 9):
        spec = SPECS[q]
        for m in range(spec.p, 9):
            if m < 2:
                continue
            for d in range(q):
                r = theory.construct_disc(spec, m, spec.element(d))
                assert discriminant(r.poly).encoding == d
                assert r.poly.degree == m and r.poly.is_monic
                assert not r.searched
        if q % 2:
            for d in range(q):
                r = theory.construct_disc(spec, 2, spec.element(d))
                assert discriminant(r.poly).encoding == d and r.case == "quadratic"
    c.done()


def test_criterion_13_determinism_and_cache(tmp_path):
    c = Criterion(13, "worker count and reduction flag never change a table; "
                      "cache round-trips byte-identically")
    for q, m in ((7, 4), (7, 5), (4, 3), (5, 5), (11, 3)):
        spec = SPECS[q]
        for mode in (cz.ALL_MONIC, cz.IRREDUCIBLE):
            variants = {
                cz.census(spec, m, mode, workers=w, reduction=r).counts
                for w in (1, 4) for r in (True, False)
            }
            assert len(variants) == 1, (q, m, mode.kind)
    table = cz.census(SPECS[7], 4, cz.ALL_MONIC)
    path = cz.save_table(table, str(tmp_path))
    raw = open(path, "rb").read()
    again = cz.save_table(cz.load_table(SPECS[7], 4, cz.ALL_MONIC, str(tmp_path)),
                          str(tmp_path))
    assert open(again, "rb").read() == raw
    assert json.loads(raw)["counts"] == list(table.counts)
    c.done()
