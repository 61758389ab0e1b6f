from fractions import Fraction

import pytest

from tanvar.errors import InvalidSpec
from tanvar.fields import (
    DEFAULT_PRIME,
    VERIFY_PRIME,
    FieldConfig,
    is_prime,
    prime_field,
    rationals,
)


def test_default_primes_are_prime():
    assert is_prime(DEFAULT_PRIME)
    assert is_prime(VERIFY_PRIME)
    assert DEFAULT_PRIME != VERIFY_PRIME


@pytest.mark.parametrize("n,expected", [
    (1, False), (2, True), (3, True), (4, False), (101, True),
    (561, False),           # Carmichael
    (2 ** 20 + 7, True),
    (2147483629 * 3, False),
])
def test_is_prime(n, expected):
    assert is_prime(n) == expected


def test_field_config_rejects_small_or_composite_primes():
    with pytest.raises(InvalidSpec):
        FieldConfig(kind="prime", prime=101)
    with pytest.raises(InvalidSpec):
        FieldConfig(kind="prime", prime=2 ** 21)  # even
    with pytest.raises(InvalidSpec):
        FieldConfig(kind="prime", prime=2 ** 21 + 1)  # composite


def test_prime_ops_roundtrip():
    f = prime_field()
    ops = f.ops
    a, b = ops.from_int(-5), ops.from_fraction(2, 3)
    assert ops.add(a, ops.neg(a)) == 0
    assert ops.mul(b, ops.from_int(3)) == ops.from_int(2)
    assert ops.mul(ops.inv(a), a) == ops.one


def test_rational_ops():
    f = rationals()
    ops = f.ops
    assert ops.from_fraction(2, 4) == Fraction(1, 2)
    assert ops.div(ops.one, ops.from_int(3)) == Fraction(1, 3)


def test_seed_must_be_u64():
    with pytest.raises(InvalidSpec):
        FieldConfig(seed=-1)
    with pytest.raises(InvalidSpec):
        FieldConfig(seed=2 ** 64)
