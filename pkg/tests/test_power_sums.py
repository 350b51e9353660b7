from fractions import Fraction

import pytest

from bernsym.errors import DegenerateDivisorError, PreconditionError
from bernsym.power_sums import (
    alt_power_sum_closed,
    alt_power_sum_direct,
    power_sum_closed,
    power_sum_direct,
)


def brute(k, n, sign=False):
    total = 0
    for l in range(n + 1):
        term = 1 if k == 0 else l**k
        total += -term if (sign and l % 2) else term
    return total


def test_direct_examples():
    assert power_sum_direct(0, 3) == 4
    assert power_sum_direct(2, 3) == 14
    assert power_sum_direct(3, 9) == brute(3, 9) == 2025
    assert alt_power_sum_direct(0, 2) == 1
    assert alt_power_sum_direct(2, 3) == -6
    assert alt_power_sum_direct(1, 2) == 1


@pytest.mark.parametrize("n", [1, 2, 7, 30])
def test_closed_k1_is_n(n):
    assert power_sum_closed(1, n) == n


def test_closed_examples():
    assert power_sum_closed(3, 4) == 14
    assert power_sum_closed(5, 10) == brute(4, 9) == 15333
    for k in range(6):
        assert alt_power_sum_closed(k, 1) == (1 if k == 0 else 0)
    assert alt_power_sum_closed(2, 3) == brute(2, 2, sign=True) == 3
    assert alt_power_sum_closed(1, 5) == brute(1, 4, sign=True) == 2


def test_closed_errors():
    with pytest.raises(DegenerateDivisorError):
        power_sum_closed(0, 3)
    with pytest.raises(PreconditionError):
        alt_power_sum_closed(2, 4)


def test_closed_forms_agree_with_direct():
    for k in range(1, 14):
        for n in range(1, 51):
            assert power_sum_closed(k, n) == power_sum_direct(k - 1, n - 1)
    for k in range(13):
        for n in range(1, 50, 2):
            assert alt_power_sum_closed(k, n) == alt_power_sum_direct(k, n - 1)


def test_alternating_telescope():
    for k in range(11):
        for n in range(1, 31):
            assert alt_power_sum_direct(k, n) - alt_power_sum_direct(k, n - 1) == (-1) ** n * n**k


def test_results_are_integral_rationals():
    assert isinstance(power_sum_closed(7, 12), Fraction)
    assert power_sum_closed(7, 12).denominator == 1
