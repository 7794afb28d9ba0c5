"""Field arithmetic: table correctness against independent polynomial oracles."""

import random

import numpy as np
import pytest

from hirzecode import (
    DivisionByZero,
    FieldTooLarge,
    MixedFields,
    NonPrimeCharacteristic,
    elements,
    field_from_order,
    field_new,
)


def poly_mul_mod(a, b, modulus, p):
    """Schoolbook product of coefficient tuples, reduced by long division.

    Independent of the package's table machinery: only python ints.
    """
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            prod[i + j] = (prod[i + j] + ca * cb) % p
    m = len(modulus) - 1
    for i in range(len(prod) - 1, m - 1, -1):
        f = prod[i]
        if f:
            for j, c in enumerate(modulus):
                prod[i - m + j] = (prod[i - m + j] - f * c) % p
    return tuple(prod[:m]) + (0,) * (m - len(prod))


def idx_of(coeffs, p):
    return sum(c * p**i for i, c in enumerate(coeffs))


def test_prime_field_moduli():
    assert field_new(2, 1).modulus == (0, 1)
    assert field_new(3, 1).modulus == (0, 1)


def test_f4_modulus_is_the_only_irreducible_quadratic():
    # oracle: a monic quadratic over F2 is irreducible iff it has no root
    irreducible = [
        (c0, c1)
        for c0 in (0, 1)
        for c1 in (0, 1)
        if all((x * x + c1 * x + c0) % 2 != 0 for x in (0, 1))
    ]
    assert irreducible == [(1, 1)]
    assert field_new(2, 2).modulus == (1, 1, 1)


def test_f4_x_times_x():
    f4 = field_new(2, 2)
    x = f4.element(2)
    assert (x * x).index == 3  # x+1


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4)])
def test_mul_table_matches_polynomial_oracle(p, m):
    spec = field_new(p, m)
    q = spec.q
    for a in range(q):
        ca = tuple((a // p**i) % p for i in range(m))
        for b in range(q):
            cb = tuple((b // p**i) % p for i in range(m))
            want = idx_of(poly_mul_mod(ca, cb, spec.modulus, p), p)
            assert (spec.element(a) * spec.element(b)).index == want


def test_add_is_digitwise():
    spec = field_new(3, 2)
    for a in range(9):
        for b in range(9):
            want = idx_of(
                [((a // 3**i) + (b // 3**i)) % 3 for i in range(2)], 3
            )
            assert (spec.element(a) + spec.element(b)).index == want


def test_fermat_and_inverse():
    for q in (2, 3, 4, 5, 8, 9, 13):
        spec = field_from_order(q)
        for a in elements(spec):
            assert a**q == a
            if a.index:
                assert (a * a.inv()).index == 1


def test_pow_examples_and_zero_conventions():
    f3 = field_new(3, 1)
    assert (f3.element(2) ** 2).index == 1  # 4 mod 3
    for q in (2, 4, 5):
        spec = field_from_order(q)
        assert (spec.zero**0).index == 1
        assert (spec.zero**7).index == 0
        a = spec.element(q - 1)
        assert a + spec.zero == a


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_field_axioms_exhaustive(q):
    t = field_from_order(q).tables
    add, mul = t.add.astype(int), t.mul.astype(int)
    i = np.arange(q)
    # commutativity
    assert np.array_equal(add, add.T)
    assert np.array_equal(mul, mul.T)
    # associativity and distributivity over all triples
    assert np.array_equal(add[add[i[:, None, None], i[None, :, None]], i[None, None, :]],
                          add[i[:, None, None], add[i[None, :, None], i[None, None, :]]])
    assert np.array_equal(mul[mul[i[:, None, None], i[None, :, None]], i[None, None, :]],
                          mul[i[:, None, None], mul[i[None, :, None], i[None, None, :]]])
    assert np.array_equal(mul[i[:, None, None], add[i[None, :, None], i[None, None, :]]],
                          add[mul[i[:, None, None], i[None, :, None]],
                              mul[i[:, None, None], i[None, None, :]]])


def test_largest_supported_field():
    spec = field_new(2, 8)
    assert spec.q == 256
    rng = random.Random(0)
    for _ in range(50):
        a, b, c = (spec.element(rng.randrange(256)) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        if a.index:
            assert (a * a.inv()).index == 1


def test_elements_enumeration():
    for q in (2, 3, 4):
        spec = field_from_order(q)
        es = elements(spec)
        assert len(es) == q
        assert sorted(e.index for e in es) == list(range(q))
        assert es[0].index == 0 and es[1].index == 1
    assert [str(e) for e in elements(field_new(2, 2))] == ["0", "1", "x", "x+1"]


def test_errors():
    with pytest.raises(NonPrimeCharacteristic):
        field_new(4, 1)
    with pytest.raises(NonPrimeCharacteristic):
        field_from_order(6)
    with pytest.raises(FieldTooLarge):
        field_new(2, 9)
    with pytest.raises(ValueError):
        field_new(2, 0)
    with pytest.raises(DivisionByZero):
        field_new(3, 1).zero.inv()
    with pytest.raises(MixedFields):
        field_new(2, 1).one + field_new(3, 1).one


def test_field_from_order_matches_field_new():
    assert field_from_order(8) == field_new(2, 3)
    assert field_from_order(9) == field_new(3, 2)
    assert field_from_order(13) == field_new(13, 1)
