"""Bernoulli and Euler numbers and polynomials, and the two polynomial integrals.

Conventions
-----------
* ``B_1 = -1/2``: Bernoulli numbers are the EGF coefficients of ``t/(e^t - 1)``.
  This is the value the Volkenborn shift rule ``I(f(x+1)) = I(f) + f'(0)``
  forces for ``f = x``.
* "Euler number" means ``E_n = E_n(0)`` where ``2 e^{xt}/(e^t + 1)`` is the EGF
  of the Euler polynomials (``-1/2, 0, 1/4, ...``), *not* the integer secant
  numbers.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Callable, Generic, TypeVar

from .errors import PreconditionError
from .exact_core import Polynomial, poly_shift
from .report import VerificationReport

T = TypeVar("T")

__all__ = [
    "bernoulli_number",
    "bernoulli_polynomial",
    "euler_number",
    "euler_polynomial",
    "bosonic_integral",
    "fermionic_integral",
    "verify_shift_bosonic",
    "verify_shift_fermionic",
]


class MemoTable(Generic[T]):
    """Grow-on-demand table filled by a triangular recurrence.

    ``step(values, n)`` computes entry ``n`` from ``values[:n]``. Entries are
    written once under a lock; readers of already-filled entries never block.
    """

    def __init__(self, seed: list[T], step: Callable[[list[T], int], T]):
        self._values = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> T:
        if n < 0:
            raise PreconditionError("index must be non-negative")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._step(self._values, len(self._values)))
            return self._values[n]

    def __len__(self):
        return len(self._values)


def _bernoulli_step(B: list[Fraction], n: int) -> Fraction:
    # sum_{k=0}^{n} C(n+1, k) B_k = 0
    return -sum((comb(n + 1, k) * B[k] for k in range(n)), Fraction(0)) / (n + 1)


def _euler_step(E: list[Fraction], n: int) -> Fraction:
    # 2 E_n + sum_{k<n} C(n, k) E_k = 2 * 0**n, and n >= 1 here
    return -sum((comb(n, k) * E[k] for k in range(n)), Fraction(0)) / 2


def _euler_poly_step(P: list[Polynomial], n: int) -> Polynomial:
    # E_n(x) + sum_{k=0}^{n} C(n,k) E_k(x) = 2 x^n
    acc = Polynomial.monomial(n, 2)
    for k in range(n):
        acc = acc - P[k] * comb(n, k)
    return acc * Fraction(1, 2)


BERNOULLI = MemoTable([Fraction(1)], _bernoulli_step)
EULER = MemoTable([Fraction(1)], _euler_step)
_EULER_POLY = MemoTable([Polynomial([1])], _euler_poly_step)


def bernoulli_number(n: int) -> Fraction:
    return BERNOULLI[n]


def euler_number(n: int) -> Fraction:
    return EULER[n]


def bernoulli_polynomial(n: int) -> Polynomial:
    """``B_n(x) = sum_k C(n,k) B_k x^(n-k)``."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    return Polynomial(comb(n, j) * bernoulli_number(n - j) for j in range(n + 1))


def euler_polynomial(n: int) -> Polynomial:
    """Solve ``E_n(x) + sum_{k<=n} C(n,k) E_k(x) = 2 x^n`` for ``E_n(x)``."""
    return _EULER_POLY[n]


def bosonic_integral(p: Polynomial) -> Fraction:
    """Volkenborn integral of a polynomial: linear extension of ``x^n -> B_n``."""
    return sum((c * bernoulli_number(k) for k, c in enumerate(p.coeffs)), Fraction(0))


def fermionic_integral(p: Polynomial) -> Fraction:
    """Fermionic integral of a polynomial: linear extension of ``x^n -> E_n``."""
    return sum((c * euler_number(k) for k, c in enumerate(p.coeffs)), Fraction(0))


def _check_shift(n: int):
    if n < 1:
        raise PreconditionError("shift n must be a positive integer")


def verify_shift_bosonic(p: Polynomial, n: int) -> VerificationReport:
    """``I(p(x+n)) = I(p) + sum_{i<n} p'(i)``."""
    _check_shift(n)
    lhs = bosonic_integral(poly_shift(p, n))
    dp = p.derivative()
    rhs = bosonic_integral(p) + sum((dp(i) for i in range(n)), Fraction(0))
    return VerificationReport("shift_bosonic", {"p": p, "n": n}, lhs, rhs)


def verify_shift_fermionic(p: Polynomial, n: int) -> VerificationReport:
    """``I_-1(p(x+n)) + (-1)^(n-1) I_-1(p) = 2 sum_{l<n} (-1)^(n-1-l) p(l)``."""
    _check_shift(n)
    sign = 1 if (n - 1) % 2 == 0 else -1
    lhs = fermionic_integral(poly_shift(p, n)) + sign * fermionic_integral(p)
    rhs = 2 * sum(((-1) ** (n - 1 - l) * p(l) for l in range(n)), Fraction(0))
    return VerificationReport("shift_fermionic", {"p": p, "n": n}, lhs, rhs)
