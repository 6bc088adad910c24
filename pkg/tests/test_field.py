"""Field arithmetic tests: axioms by exhaustion on small orders, encoding
conventions, and error handling."""

import pytest

from lhca.field import GF, ORDER_CAP, default_irreducible_poly

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9]


@pytest.fixture(params=SMALL_ORDERS)
def field(request):
    return GF(request.param)


def test_elements_are_the_first_q_integers(field):
    assert field.elements() == list(range(field.q))


def test_additive_group_axioms(field):
    els = field.elements()
    for a in els:
        assert field.add(a, 0) == a
        assert field.add(a, field.neg(a)) == 0
        for b in els:
            assert field.add(a, b) == field.add(b, a)
            for c in els:
                assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))


def test_multiplicative_group_axioms(field):
    els = field.elements()
    for a in els:
        assert field.mul(a, 1) == a
        assert field.mul(a, 0) == 0
        if a != 0:
            assert field.mul(a, field.inv(a)) == 1
        for b in els:
            assert field.mul(a, b) == field.mul(b, a)
            for c in els:
                assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))


def test_distributivity(field):
    els = field.elements()
    for a in els:
        for b in els:
            for c in els:
                lhs = field.mul(a, field.add(b, c))
                rhs = field.add(field.mul(a, b), field.mul(a, c))
                assert lhs == rhs


def test_no_zero_divisors(field):
    for a in range(1, field.q):
        for b in range(1, field.q):
            assert field.mul(a, b) != 0


def test_sub_inverts_add(field):
    for a in field.elements():
        for b in field.elements():
            assert field.sub(field.add(a, b), b) == a


def test_inv_is_an_involution(field):
    for a in range(1, field.q):
        assert field.inv(field.inv(a)) == a


def test_characteristic(field):
    # adding any element to itself p times gives zero, and no smaller
    # multiple of 1 does
    p = field.p
    for a in field.elements():
        acc = 0
        for _ in range(p):
            acc = field.add(acc, a)
        assert acc == 0
    acc = 0
    for i in range(1, p):
        acc = field.add(acc, 1)
        assert acc != 0


def test_multiplicative_group_is_cyclic(field):
    q = field.q
    found = False
    for g in range(1, q):
        seen = set()
        x = 1
        for _ in range(q - 1):
            x = field.mul(x, g)
            seen.add(x)
        if len(seen) == q - 1:
            found = True
            break
    assert found


def test_known_values_prime_fields():
    f2 = GF(2)
    assert f2.add(1, 1) == 0
    f3 = GF(3)
    assert f3.add(2, 2) == 1
    assert f3.mul(2, 2) == 1
    assert f3.inv(2) == 2
    f5 = GF(5)
    assert f5.inv(3) == 2


def test_known_values_gf4():
    # x^2 + x + 1 encodes to 4 + 2 + 1 = 7
    f4 = GF(4)
    assert f4.poly == 7
    assert f4.add(2, 3) == 1
    assert f4.mul(2, 2) == 3
    assert f4.mul(2, 3) == 1


@pytest.mark.parametrize("p,m,enc", [(2, 2, 7), (2, 3, 11), (2, 4, 19), (3, 2, 10)])
def test_default_polynomial_is_smallest_irreducible(p, m, enc):
    assert default_irreducible_poly(p, m) == enc


def test_explicit_polynomial_round_trip():
    # x^2 + 1 is irreducible over GF(3); its encoding is 9 + 1 = 10
    f = GF(9, poly=10)
    assert f.poly == 10
    # (x)(x) = x^2 = -1 = 2 under x^2 + 1
    assert f.mul(3, 3) == 2


def test_reducible_polynomial_rejected():
    # x^2 + 2x + 1 = (x+1)^2 over GF(3) encodes to 9 + 6 + 1 = 16
    with pytest.raises(ValueError):
        GF(9, poly=16)


def test_non_prime_power_order_rejected():
    for q in (1, 6, 10, 12):
        with pytest.raises(ValueError):
            GF(q)


def test_order_cap_enforced():
    assert 2**17 > ORDER_CAP
    with pytest.raises(ValueError):
        GF(p=2, m=17)


def test_out_of_range_elements_rejected(field):
    with pytest.raises(ValueError):
        field.add(0, field.q)
    with pytest.raises(ValueError):
        field.mul(-1, 0)


def test_inverse_of_zero_rejected(field):
    with pytest.raises(ZeroDivisionError):
        field.inv(0)


def test_json_round_trip(field):
    data = field.to_json()
    assert set(data) == {"p", "m", "poly"}
    rebuilt = GF.from_json(data)
    assert rebuilt == field
    assert rebuilt.q == field.q


def test_tables_match_scalar_ops():
    # table-backed and on-the-fly arithmetic must agree
    f = GF(8)
    assert f.add_table is not None
    for a in f.elements():
        for b in f.elements():
            assert int(f.add_table[a, b]) == f.add(a, b)
            assert int(f.mul_table[a, b]) == f.mul(a, b)
        assert int(f.neg_table[a]) == f.neg(a)
        if a:
            assert int(f.inv_table[a]) == f.inv(a)


def test_large_prime_field_without_tables():
    f = GF(257)
    assert f.add_table is None
    assert f.add(200, 100) == 43
    assert f.mul(f.inv(123), 123) == 1
