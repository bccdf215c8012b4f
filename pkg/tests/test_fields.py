"""Prime fields, modular square roots, splitting prime search."""

import random
from fractions import Fraction

import pytest

from fermatcover import fields
from fermatcover.errors import (
    InputError,
    NoSplittingPrimeError,
    NotPrimeError,
    ZeroInverseError,
)


def test_is_prime_small_and_carmichael():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert fields.is_prime(n) == (n in primes)
    assert not fields.is_prime(561)  # Carmichael number
    assert not fields.is_prime(341)
    assert fields.is_prime(2 ** 31 - 1)


def test_next_prime():
    assert fields.next_prime(13) == 17
    assert fields.next_prime(14) == 17
    assert fields.next_prime(1) == 2


def test_sqrt_mod_round_trip_exhaustive():
    for q in (3, 5, 7, 11, 13, 17, 29):
        squares = {x * x % q for x in range(q)}
        for a in range(q):
            r = fields.sqrt_mod(a, q)
            if a in squares:
                assert r is not None and r * r % q == a
                assert r <= q - r  # deterministic smaller root
            else:
                assert r is None


def test_sqrt_mod_frozen():
    assert fields.sqrt_mod(12, 13) == 5
    assert fields.sqrt_mod(0, 13) == 0
    assert fields.sqrt_mod(1, 2) == 1


def test_legendre_symbol_matches_square_detection():
    rng = random.Random(31)
    for q in (5, 13, 31):
        squares = {x * x % q for x in range(1, q)}
        for _ in range(20):
            a = rng.randrange(1, q)
            expected = 1 if a in squares else -1
            assert fields.legendre_symbol(a, q) == expected


def test_prime_field_arithmetic():
    f = fields.PrimeField(13)
    assert f.inv(5) == 8
    assert f.mul(7, 8) == 56 % 13
    assert f.from_fraction(Fraction(1, 2)) == 7
    assert f.element(-1) == 12
    with pytest.raises(ZeroInverseError):
        f.inv(0)
    with pytest.raises(NotPrimeError):
        fields.PrimeField(12)


def test_prime_field_elements():
    a = fields.PrimeFieldElement(5, 13)
    b = fields.PrimeFieldElement(9, 13)
    assert (a + b).value == 1
    assert (a * b).value == 45 % 13
    assert (a - b).value == (5 - 9) % 13
    assert (-a).value == 8
    assert a.inverse().value == 8
    assert (a / b).value == (5 * pow(9, -1, 13)) % 13


def test_field_sqrt():
    f = fields.PrimeField(13)
    assert f.sqrt(12) == 5
    assert f.sqrt(2) is None
    assert f.is_square(12)
    assert not f.is_square(2)


def test_find_splitting_prime_frozen():
    req = fields.RadicandRequest((Fraction(-1),), context="sqrt(-1)")
    assert fields.find_splitting_prime(req, 10) == (13,)
    req = fields.RadicandRequest((Fraction(1),), context="sqrt(1)")
    assert fields.find_splitting_prime(req, 10) == (11,)
    req = fields.RadicandRequest((Fraction(-1), Fraction(2)), context="both")
    assert fields.find_splitting_prime(req, 10) == (17,)


def test_find_splitting_prime_multiple_and_filters():
    req = fields.RadicandRequest((Fraction(-1),), context="several")
    primes = fields.find_splitting_prime(req, 10, count=3)
    assert primes == (13, 17, 29)
    # primes dividing a numerator or denominator are skipped
    req = fields.RadicandRequest((Fraction(13, 3),), context="skip-13")
    primes = fields.find_splitting_prime(req, 12, count=2)
    assert all(p not in (13, 3) for p in primes)
    for p in primes:
        assert fields.sqrt_mod(13 * pow(3, -1, p) % p, p) is not None


def test_find_splitting_prime_extra_check_and_budget():
    req = fields.RadicandRequest((Fraction(2),), context="with-callback")
    primes = fields.find_splitting_prime(req, 5, count=2, extra_check=lambda q: q % 8 == 1)
    assert all(q % 8 == 1 for q in primes)
    with pytest.raises(NoSplittingPrimeError):
        fields.find_splitting_prime(req, 5, search_limit=6, extra_check=lambda q: False)


def test_radicand_request_validation():
    with pytest.raises(InputError):
        fields.RadicandRequest((), context="empty")
    with pytest.raises(InputError):
        fields.RadicandRequest((Fraction(0),), context="zero")
