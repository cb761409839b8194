import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from twisted_rs import galois
from twisted_rs.errors import (
    DivisionByZero, EvenCharacteristic, FieldMismatch, NonPrime, NotASubfieldDegree,
    ReducibleModulus, UnsupportedSize,
)
from twisted_rs.galois import (
    arith, field_of_order, inv, make_field, parse_field_spec, power, primitive_element,
    quadratic_character, square_root, subfield_elements,
)

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64]


def el(F, r):
    return F(r)


# -- construction ------------------------------------------------------------
def test_prime_field():
    F = make_field(5)
    assert F.q == 5 and [int(x) for x in F.elements()] == [0, 1, 2, 3, 4]


def test_explicit_modulus_gf8():
    F = make_field(2, 3, [1, 1, 0, 1])
    assert F.modulus == (1, 1, 0, 1)
    # x * x^2 = x^3 = x + 1
    assert int(arith("mul", F(2), F(4))) == 3


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        make_field(2, 3, [0, 0, 0, 1])
    with pytest.raises(ReducibleModulus):
        make_field(3, 2, [2, 0, 1])  # x^2 - 1


def test_errors():
    with pytest.raises(NonPrime):
        make_field(6)
    with pytest.raises(UnsupportedSize):
        make_field(2, 17)
    with pytest.raises(FieldMismatch):
        arith("add", make_field(5)(1), make_field(7)(1))


def test_table_moduli_are_irreducible():
    for q in SMALL_Q:
        F = field_of_order(q)
        assert galois.is_irreducible(F.modulus, F.p)


def test_parse_field_spec():
    assert parse_field_spec("q=9").q == 9
    F = parse_field_spec("q=8,poly=1,0,1,1")
    assert F.modulus == (1, 0, 1, 1)


# -- arithmetic examples -------------------------------------------------------
def test_small_values():
    F5, F7 = make_field(5), make_field(7)
    assert int(arith("mul", F5(4), F5(4))) == 1
    assert int(inv(F5(4))) == 4
    assert int(inv(F7(6))) == 6
    assert int(power(F5(2), 3)) == 3
    assert int(power(F5(0), 0)) == 1
    assert int(power(F5(2), -1)) == 3
    with pytest.raises(DivisionByZero):
        inv(F5(0))
    with pytest.raises(DivisionByZero):
        power(F5(0), -2)


def test_primitive_elements():
    assert int(primitive_element(make_field(5))) == 2
    assert int(primitive_element(make_field(7))) == 3
    assert int(primitive_element(field_of_order(4))) == 2


def test_character_and_roots():
    F7, F5, F8 = make_field(7), make_field(5), field_of_order(8)
    assert quadratic_character(F7(2)) == 1
    assert quadratic_character(F7(3)) == -1
    assert quadratic_character(F7(0)) == 0
    assert int(square_root(F5(4))) == 2
    assert square_root(F7(3)) is None
    assert int(square_root(F5(0))) == 0
    for x in F8.elements():
        assert square_root(x) == power(x, 4)
    with pytest.raises(EvenCharacteristic):
        quadratic_character(F8(3))


def test_subfields():
    F9 = field_of_order(9)
    sub = subfield_elements(F9, 1)
    assert len(sub) == 3 and all(int(power(x, 3)) == int(x) for x in sub)
    assert [int(x) for x in subfield_elements(field_of_order(4), 1)] == [0, 1]
    F16 = field_of_order(16)
    s = [int(x) for x in subfield_elements(F16, 2)]
    assert len(s) == 4
    for a, b in itertools.product(s, s):
        assert F16.add1(a, b) in s and F16.mul1(a, b) in s
    with pytest.raises(NotASubfieldDegree):
        subfield_elements(F16, 3)


# -- exhaustive axioms ---------------------------------------------------------
@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 16, 25, 27, 32])
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    r = np.arange(q)
    a, b, c = np.meshgrid(r, r, r, indexing="ij")
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert np.array_equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert np.array_equal(F.mul(a[0], b[0]), F.mul(b[0], a[0]))
    nz = r[1:]
    assert np.all(F.mul(nz, F.inv(nz)) == 1)
    assert np.all(F.add(r, F.neg(r)) == 0)
    assert np.array_equal(F.power(r, q), r)


@pytest.mark.parametrize("q", [64])
def test_field_axioms_q64_pairs(q):
    F = field_of_order(q)
    r = np.arange(q)
    a, b = np.meshgrid(r, r, indexing="ij")
    for c in range(q):
        assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
        assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27])
def test_square_root_counts(q):
    F = field_of_order(q)
    roots = [F.sqrt1(x) for x in range(1, q)]
    assert sum(r is not None for r in roots) == (q - 1) // 2
    for x, r in zip(range(1, q), roots):
        if r is not None:
            assert F.mul1(r, r) == x


# -- properties ----------------------------------------------------------------
field_and_pair = st.sampled_from(SMALL_Q).flatmap(
    lambda q: st.tuples(st.just(q), st.integers(0, q - 1), st.integers(0, q - 1)))


@given(field_and_pair)
def test_frobenius_identity(t):
    q, x, _ = t
    F = field_of_order(q)
    assert F.pow1(x, q) == x


@given(field_and_pair)
def test_character_multiplicative(t):
    q, x, y = t
    F = field_of_order(q)
    if q % 2 == 0 or x == 0 or y == 0:
        return
    assert F.chi1(F.mul1(x, y)) == F.chi1(x) * F.chi1(y)


@given(field_and_pair, st.integers(-40, 40))
def test_power_matches_repeated_multiplication(t, e):
    q, x, _ = t
    F = field_of_order(q)
    if x == 0 and e < 0:
        return
    base = F.inv1(x) if e < 0 else x
    acc = 1
    for _ in range(abs(e)):
        acc = F.mul1(acc, base)
    assert F.pow1(x, e) == acc


@given(field_and_pair)
def test_element_operators(t):
    q, x, y = t
    F = field_of_order(q)
    a, b = F(x), F(y)
    assert int(a + b) == F.add1(x, y)
    assert int(a - b) == F.sub1(x, y)
    assert int(a * b) == F.mul1(x, y)
    assert int(-a) == F.neg1(x)
    if y:
        assert (a / b) * b == a


def test_subfield_members_are_squares():
    for q, d in ((9, 1), (25, 1), (49, 1), (81, 2)):
        F = field_of_order(q)
        for x in subfield_elements(F, d):
            if int(x):
                assert quadratic_character(x) == 1
