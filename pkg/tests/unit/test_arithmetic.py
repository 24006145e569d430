from fractions import Fraction

import pytest
from pydantic import ValidationError
from sympy import primerange

from arrayldpc.core.arithmetic import crt_lift, eval_rational, ext_gcd, is_odd_prime, mod_inverse
from arrayldpc.core.interfaces import (
    EvaluationUndefinedError,
    InvalidParameterError,
    NonInvertibleError,
    UndefinedInputError,
)
from arrayldpc.models.rational import ModRational


def test_ext_gcd_bezout():
    assert ext_gcd(47, 59) == (1, -5, 4)
    for a, b in [(12, 18), (7, 0), (0, 9), (-4, 6), (101, 103)]:
        g, kappa, eta = ext_gcd(a, b)
        assert g > 0
        assert kappa * a + eta * b == g


def test_ext_gcd_of_zeros_is_undefined():
    with pytest.raises(UndefinedInputError):
        ext_gcd(0, 0)


def test_mod_inverse():
    assert mod_inverse(2, 7) == 4
    assert mod_inverse(2, 47) == 24
    assert mod_inverse(1, 59) == 1
    assert mod_inverse(-1, 47) == 46
    for q in primerange(3, 60):
        assert all(a * mod_inverse(a, q) % q == 1 for a in range(1, q))


@pytest.mark.parametrize("a", [0, 7, 14])
def test_mod_inverse_not_invertible(a):
    with pytest.raises(NonInvertibleError):
        mod_inverse(a, 7)


def test_eval_rational():
    assert eval_rational(ModRational.parse("-3/2"), 47) == 22
    assert eval_rational(ModRational.parse("17/2"), 47) == 32
    assert eval_rational(ModRational.parse("-1"), 47) == 46
    assert eval_rational(ModRational.parse("0"), 11) == 0


def test_eval_rational_undefined_when_q_divides_denominator():
    with pytest.raises(EvaluationUndefinedError):
        eval_rational(ModRational.parse("1/7"), 7)


def test_crt_lift():
    assert crt_lift(46, 47, 58, 59) == 2772
    assert crt_lift(23, 47, 29, 59) == 1386
    assert crt_lift(0, 47, 0, 59) == 0
    u = crt_lift(5, 23, 11, 29)
    assert 0 <= u < 23 * 29
    assert u % 23 == 5 and u % 29 == 11


def test_crt_lift_rejects_equal_moduli():
    with pytest.raises(InvalidParameterError):
        crt_lift(1, 47, 2, 47)


def test_is_odd_prime():
    assert [q for q in range(15) if is_odd_prime(q)] == [3, 5, 7, 11, 13]


class TestModRational:
    def test_parse_and_reduce(self):
        r = ModRational.parse("-3/2")
        assert (r.num, r.den) == (-3, 2)
        assert str(ModRational.parse("4/2")) == "2"
        assert ModRational.parse(Fraction(6, -4)) == ModRational.parse("-3/2")

    def test_serializes_to_text(self):
        assert ModRational.parse("17/2").model_dump() == "17/2"
        assert ModRational.parse(5).model_dump() == "5"

    @pytest.mark.parametrize("bad", ["abc", "1/0", True])
    def test_rejects_invalid_input(self, bad):
        with pytest.raises(ValidationError):
            ModRational.parse(bad)


@pytest.mark.parametrize("q", list(primerange(3, 98)))
def test_mod_inverse_all_units(q):
    for a in range(1, q):
        inv = mod_inverse(a, q)
        assert 0 <= inv < q
        assert a * inv % q == 1
        assert mod_inverse(-a, q) == (q - inv) % q


@pytest.mark.parametrize("q", list(primerange(3, 98)))
def test_eval_half_integers(q):
    for a in range(-q, q + 1, 2):
        assert eval_rational(ModRational.parse(f"{a}/2"), q) == ((q + a) // 2) % q


@pytest.mark.slow
def test_crt_lift_round_trip_exhaustive():
    primes = list(primerange(3, 98))
    pairs = [(q1, q2) for q1 in primes for q2 in primes if q1 < q2 and q1 * q2 <= 10**4]
    assert len(pairs) == len(primes) * (len(primes) - 1) // 2
    for q1, q2 in pairs:
        for u in range(q1 * q2):
            assert crt_lift(u % q1, q1, u % q2, q2) == u


@pytest.mark.parametrize("q1,q2", [(3, 5), (5, 7), (7, 11), (23, 29), (47, 59)])
def test_crt_lift_round_trip(q1, q2):
    for u in range(q1 * q2):
        assert crt_lift(u % q1, q1, u % q2, q2) == u
