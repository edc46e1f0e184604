"""Field arithmetic: exactness, invariants, and error contracts."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from colonlab import PrimeField, QQ, UsageError
from colonlab.fields import field_from_name, is_prime

from conftest import F2, F5, F7


def test_char2_addition():
    assert F2.add(1, 1) == 0


def test_rational_addition():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_f5_addition_wraps():
    assert F5.add(3, 4) == 2


def test_f7_inverse_against_brute_force():
    # Independent oracle: scan all residues for the multiplicative inverse.
    expected = next(b for b in range(1, 7) if 3 * b % 7 == 1)
    assert expected == 5
    assert F7.inv(3) == expected


def test_char2_negation():
    assert F2.neg(1) == 1


def test_rational_inverse_sign_normalization():
    value = QQ.inv(Fraction(-2, 3))
    assert value == Fraction(-3, 2)
    assert value.denominator > 0


def test_inversion_of_zero_is_arithmetic_error():
    with pytest.raises(ZeroDivisionError):
        F7.inv(0)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))


def test_mixed_field_operands_rejected():
    with pytest.raises(UsageError):
        F5.add(1, Fraction(1, 2))
    with pytest.raises(UsageError):
        QQ.add(Fraction(1, 2), 3)
    with pytest.raises(UsageError):
        F5.mul(2, 7)  # out-of-range residue


def test_modulus_must_be_prime_in_range():
    with pytest.raises(UsageError):
        PrimeField(4)
    with pytest.raises(UsageError):
        PrimeField(1)
    with pytest.raises(UsageError):
        PrimeField(2**31)
    assert PrimeField(2147483647).p == 2147483647  # Mersenne prime just below 2^31


def test_is_prime_small_values():
    primes = [n for n in range(2, 60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_field_from_name():
    assert field_from_name("Q") is QQ
    assert field_from_name("F32003").p == 32003
    with pytest.raises(UsageError):
        field_from_name("GF9")


@pytest.mark.parametrize("field", [F2, F5, PrimeField(32003), QQ], ids=lambda f: f.name)
def test_field_axioms_on_random_pairs(field):
    rng = random.Random(101)
    for _ in range(1000):
        a = field.random_element(rng)
        b = field.random_element(rng)
        c = field.random_element(rng)
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        if a != field.zero:
            assert field.mul(a, field.inv(a)) == field.one
            assert field.inv(field.inv(a)) == a


def test_rational_results_are_normalized():
    rng = random.Random(7)
    for _ in range(500):
        a = QQ.random_element(rng)
        b = QQ.random_element(rng)
        for value in (QQ.add(a, b), QQ.mul(a, b), QQ.sub(a, b)):
            assert value.denominator > 0
            from math import gcd

            assert gcd(value.numerator, value.denominator) == 1


def test_prime_field_results_are_reduced():
    rng = random.Random(8)
    field = PrimeField(32003)
    for _ in range(500):
        a = field.random_element(rng)
        b = field.random_element(rng)
        for value in (field.add(a, b), field.mul(a, b), field.neg(a)):
            assert 0 <= value < field.p
