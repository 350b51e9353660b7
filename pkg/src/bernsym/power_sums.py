"""Power sums ``S_k(n) = sum_{l=0}^{n} l^k`` and ``T_k(n) = sum_{l=0}^{n} (-1)^l l^k``.

``0**0 == 1`` throughout (Python's own convention), so ``S_0(n) = n + 1``.
"""
from __future__ import annotations

from fractions import Fraction

from .bernoulli_euler import bernoulli_number, bernoulli_polynomial, euler_number, euler_polynomial
from .errors import DegenerateDivisorError, PreconditionError


def _nonneg(**kw):
    for name, value in kw.items():
        if value < 0:
            raise PreconditionError(f"{name} must be non-negative, got {value}")


def power_sum_direct(k: int, n: int) -> Fraction:
    _nonneg(k=k, n=n)
    return Fraction(sum(l**k for l in range(n + 1)))


def alt_power_sum_direct(k: int, n: int) -> Fraction:
    _nonneg(k=k, n=n)
    return Fraction(sum(l**k if l % 2 == 0 else -(l**k) for l in range(n + 1)))


def power_sum_closed(k: int, n: int) -> Fraction:
    """``(B_k(n) - B_k) / k``, which equals ``S_{k-1}(n-1)``."""
    if k == 0:
        raise DegenerateDivisorError("closed form divides by k; k = 0 is undefined")
    if k < 0 or n < 1:
        raise PreconditionError("power_sum_closed needs k >= 1 and n >= 1")
    return (bernoulli_polynomial(k)(n) - bernoulli_number(k)) / k


def alt_power_sum_closed(k: int, n: int) -> Fraction:
    """``(E_k(n) + E_k) / 2``, which equals ``T_k(n-1)`` for odd ``n``.

    Even ``n`` is rejected: there the Euler-polynomial relation carries the
    opposite sign and no longer produces an alternating sum.
    """
    _nonneg(k=k)
    if n < 1 or n % 2 == 0:
        raise PreconditionError(f"alt_power_sum_closed needs odd positive n, got {n}")
    return (euler_polynomial(k)(n) + euler_number(k)) / 2
