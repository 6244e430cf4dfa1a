import math

import pytest

from discdist.field import (
    FieldSpec,
    TABLE_LIMIT,
    _DirectOps,
    arith,
    field_from_order,
    generator,
    inv,
    is_nth_power,
    make_field,
    power,
    quadratic_character,
)


def brute_order(spec, e):
    ops = spec.ops()
    acc, n = e, 1
    while acc != 1:
        acc = ops.mul(acc, e)
        n += 1
    return n


def test_make_field_prime():
    F3 = make_field(3)
    assert F3.q == 3 and F3.modulus == ()


def test_make_field_rejects_composite():
    with pytest.raises(ValueError):
        make_field(4)
    with pytest.raises(ValueError):
        make_field(2, 0)


def test_canonical_modulus_f4():
    # x^2 + x + 1 is the unique monic irreducible quadratic over F_2:
    # all others have a root.
    reducible = []
    for c0 in range(2):
        for c1 in range(2):
            if any((t * t + c1 * t + c0) % 2 == 0 for t in range(2)):
                reducible.append((c0, c1))
    assert set(reducible) == {(0, 0), (0, 1), (1, 0)}
    assert make_field(2, 2).modulus == (1, 1)


def test_modulus_override_validation():
    with pytest.raises(ValueError):
        make_field(2, 2, [0, 0])  # x^2: reducible
    with pytest.raises(ValueError):
        make_field(2, 2, [1])  # wrong length
    F4 = make_field(2, 2, [1, 1])
    assert F4.q == 4


def test_field_from_order():
    assert field_from_order(9).k == 2
    assert field_from_order(8).p == 2
    with pytest.raises(ValueError):
        field_from_order(12)


def test_arith_examples():
    F5 = make_field(5)
    assert arith(F5.element(3), F5.element(4), "add").encoding == 2
    F7 = make_field(7)
    assert arith(F7.element(3), F7.element(5), "mul").encoding == 1
    F4 = make_field(2, 2)
    assert arith(F4.element(2), F4.element(2), "mul").encoding == 3  # x^2 = x+1


def test_arith_spec_mismatch():
    F5, F7 = make_field(5), make_field(7)
    with pytest.raises(ValueError):
        arith(F5.element(1), F7.element(1), "add")


def test_inverse_examples():
    F7 = make_field(7)
    assert inv(F7.element(3)).encoding == 5
    F5 = make_field(5)
    assert inv(F5.element(4)).encoding == 4
    F4 = make_field(2, 2)
    assert inv(F4.element(2)).encoding == 3
    with pytest.raises(ZeroDivisionError):
        inv(F5.element(0))


def test_power():
    F5 = make_field(5)
    assert power(F5.element(2), 4).encoding == 1
    F7 = make_field(7)
    assert power(F7.element(3), 2).encoding == 2
    F9 = make_field(3, 2)
    for e in range(1, 9):
        assert power(F9.element(e), 8).encoding == 1
    with pytest.raises(ValueError):
        power(F5.element(0), 0)


@pytest.mark.parametrize("q,k", [(5, 1), (7, 1), (9, 2), (25, 2), (121, 2)])
def test_quadratic_character_brute_force(q, k):
    p = {5: 5, 7: 7, 9: 3, 25: 5, 121: 11}[q]
    spec = make_field(p, k)
    ops = spec.ops()
    squares = {ops.mul(e, e) for e in range(1, q)}
    plus = [d for d in range(1, q) if quadratic_character(spec.element(d)) == 1]
    assert set(plus) == squares
    assert len(plus) == (q - 1) // 2


def test_quadratic_character_rejects():
    F4 = make_field(2, 2)
    with pytest.raises(ValueError):
        quadratic_character(F4.element(1))
    F5 = make_field(5)
    with pytest.raises(ValueError):
        quadratic_character(F5.element(0))


def test_generator_examples():
    assert generator(make_field(5)).encoding == 2
    assert generator(make_field(7)).encoding == 3
    assert generator(make_field(2)).encoding == 1


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (2, 3), (11, 1)])
def test_generator_has_full_order(p, k):
    spec = make_field(p, k)
    g = generator(spec)
    if spec.q > 2:
        assert brute_order(spec, g.encoding) == spec.q - 1
        # and it is the smallest such encoding
        for e in range(2, g.encoding):
            assert brute_order(spec, e) < spec.q - 1


@pytest.mark.parametrize("p,k", [(3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (11, 2)])
def test_is_nth_power_brute_force(p, k):
    spec = make_field(p, k)
    ops = spec.ops()
    for n in range(1, 13):
        powers = {ops.pow(e, n) for e in range(1, spec.q)}
        for d in range(1, spec.q):
            assert is_nth_power(spec.element(d), n) == (d in powers)


def test_encoding_roundtrip():
    for spec in [make_field(7), make_field(2, 3), make_field(3, 2)]:
        seen = set()
        for e in range(spec.q):
            el = spec.element(e)
            assert spec.from_coeffs(el.coeffs) == el
            seen.add(el.coeffs)
        assert len(seen) == spec.q
        assert spec.zero.encoding == 0 and spec.one.encoding == 1


def test_field_axioms_small():
    for spec in [make_field(5), make_field(2, 2), make_field(3, 2)]:
        ops = spec.ops()
        q = spec.q
        for a in range(q):
            for b in range(q):
                assert ops.add(a, b) == ops.add(b, a)
                assert ops.mul(a, b) == ops.mul(b, a)
                assert ops.sub(a, b) == ops.add(a, ops.neg(b))
            if a:
                assert ops.mul(a, ops.inv(a)) == 1
                assert ops.pow(a, q - 1) == 1
        for a in range(q):
            for b in range(q):
                for c in range(q):
                    assert ops.mul(a, ops.add(b, c)) == ops.add(ops.mul(a, b), ops.mul(a, c))


def test_direct_ops_agree_with_tables():
    # The big-field fallback must agree with the table path.
    for spec in [make_field(3, 2), make_field(2, 3), make_field(5, 2)]:
        table_ops = spec.ops()
        direct = _DirectOps(spec.q, spec.p, spec.k, spec.modulus)
        for a in range(spec.q):
            for b in range(spec.q):
                assert direct.add(a, b) == table_ops.add(a, b)
                assert direct.mul(a, b) == table_ops.mul(a, b)
            assert direct.neg(a) == table_ops.neg(a)
            if a:
                assert direct.inv(a) == table_ops.inv(a)


def test_large_field_uses_direct_ops():
    spec = make_field(2, 11)  # q = 2048 > TABLE_LIMIT
    assert spec.q > TABLE_LIMIT
    ops = spec.ops()
    assert isinstance(ops, _DirectOps)
    g = 2
    assert ops.mul(g, ops.inv(g)) == 1
    with pytest.raises(ValueError):
        spec.tables()


def test_field_size_cap():
    with pytest.raises(ValueError):
        make_field(2, 21)
