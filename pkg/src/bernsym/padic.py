"""Finite-precision p-adic numbers and p-adic integral approximants.

A :class:`PadicScalar` is ``p**val * unit`` with ``unit`` known modulo
``p**prec`` (``prec`` significant digits, so the value is known modulo
``p**(val + prec)``). Precision rules:

* ``a + b``: absolute precision is the smaller of the two; cancellation of
  leading digits costs relative precision. Total cancellation raises
  :class:`PrecisionExhaustedError`.
* ``a * b`` and ``a / b``: relative precision is the smaller of the two. So
  dividing by a value of valuation ``v`` drops the absolute precision by ``v``.

The Volkenborn and fermionic Riemann sums are plain rationals and are
computed exactly. Only the q-deformed sums and the Carlitz numbers go through
:class:`PadicScalar`.
"""
from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

from .bernoulli_euler import bernoulli_number, euler_number
from .errors import DegenerateDivisorError, PrecisionExhaustedError, PreconditionError
from .power_sums import alt_power_sum_direct, power_sum_direct

INF = math.inf
DEFAULT_PRECISION = 40

Number = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int):
    if not isinstance(p, int) or not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p!r}")


def _split(n: int, p: int) -> tuple[int, int]:
    """Return ``(v, u)`` with ``n = p**v * u`` and ``p`` not dividing ``u`` (``n != 0``)."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def valuation_of_rational(r: Number, p: int) -> int | float:
    """``v_p(r)``; ``math.inf`` for zero."""
    _require_prime(p)
    r = Fraction(r)
    if r == 0:
        return INF
    return _split(r.numerator, p)[0] - _split(r.denominator, p)[0]


@dataclass(frozen=True)
class PadicScalar:
    p: int
    val: int | float
    unit: int
    prec: int

    def __post_init__(self):
        if self.prec < 1:
            raise PrecisionExhaustedError(f"fewer than one significant digit (prec={self.prec})")
        if self.val == INF:
            if self.unit != 0:
                raise ValueError("exact zero must have unit 0")
        elif not (0 < self.unit < self.p**self.prec) or self.unit % self.p == 0:
            raise ValueError(f"unit {self.unit} is not a reduced p-adic unit")

    # construction ---------------------------------------------------------

    @classmethod
    def from_rational(cls, r: Number, p: int, prec: int) -> "PadicScalar":
        r = Fraction(r)
        if r == 0:
            return cls(p, INF, 0, prec)
        vn, un = _split(r.numerator, p)
        vd, ud = _split(r.denominator, p)
        mod = p**prec
        return cls(p, vn - vd, un * pow(ud, -1, mod) % mod, prec)

    @classmethod
    def zero(cls, p: int, prec: int) -> "PadicScalar":
        return cls(p, INF, 0, prec)

    @classmethod
    def one(cls, p: int, prec: int) -> "PadicScalar":
        return cls(p, 0, 1, prec)

    def with_precision(self, prec: int) -> "PadicScalar":
        """Drop to ``prec`` significant digits; precision is never invented."""
        if prec > self.prec and not self.is_zero():
            raise PreconditionError(f"cannot raise precision {self.prec} to {prec}")
        if self.is_zero():
            return PadicScalar(self.p, INF, 0, prec)
        return PadicScalar(self.p, self.val, self.unit % self.p**prec, prec)

    # queries ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.val == INF

    @property
    def abs_prec(self) -> int | float:
        """Absolute precision: the value is known modulo ``p**abs_prec``."""
        return INF if self.is_zero() else self.val + self.prec

    def residue(self) -> Fraction:
        """A rational representative ``p**val * unit``."""
        if self.is_zero():
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.val

    def congruent(self, r: Number) -> bool:
        """True iff ``r`` agrees with this value to its absolute precision."""
        diff = Fraction(r) - self.residue()
        return valuation_of_rational(diff, self.p) >= self.abs_prec

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "PadicScalar":
        if isinstance(other, PadicScalar):
            if other.p != self.p:
                raise PreconditionError(f"mixed primes {self.p} and {other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return PadicScalar.from_rational(other, self.p, self.prec)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        p = self.p
        v = min(self.val, other.val)
        top = min(self.abs_prec, other.abs_prec)
        mod = p ** (top - v)
        s = (self.unit * p ** (self.val - v) + other.unit * p ** (other.val - v)) % mod
        if s == 0:
            raise PrecisionExhaustedError(
                f"sum cancels to all {top - v} known digits (known only mod {p}^{top})"
            )
        k, u = _split(s, p)
        return PadicScalar(p, v + k, u, top - v - k)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return PadicScalar(self.p, self.val, (-self.unit) % self.p**self.prec, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec, other.prec)
        if self.is_zero() or other.is_zero():
            return PadicScalar.zero(self.p, prec)
        mod = self.p**prec
        return PadicScalar(self.p, self.val + other.val, self.unit * other.unit % mod, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DegenerateDivisorError("division by p-adic zero")
        prec = min(self.prec, other.prec)
        if self.is_zero():
            return PadicScalar.zero(self.p, prec)
        mod = self.p**prec
        unit = self.unit * pow(other.unit, -1, mod) % mod
        return PadicScalar(self.p, self.val - other.val, unit, prec)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return PadicScalar.one(self.p, self.prec) / (self ** (-e))
        if e == 0:
            return PadicScalar.one(self.p, self.prec)
        if self.is_zero():
            return self
        return PadicScalar(self.p, self.val * e, pow(self.unit, e, self.p**self.prec), self.prec)

    # serialization ------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "val": "inf" if self.is_zero() else self.val,
            "unit": str(self.unit),
            "prec": self.prec,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PadicScalar":
        val = INF if d["val"] == "inf" else int(d["val"])
        return cls(int(d["p"]), val, int(d["unit"]), int(d["prec"]))


def difference_valuation(a: PadicScalar, b: PadicScalar | Number) -> int | float:
    """``v_p(a - b)``, capped at the absolute precision both operands share.

    When the difference cancels to every known digit the cap is returned; it is
    then only a lower bound. Exact equality of exact zeros gives ``inf``.
    """
    b = a._coerce(b) if not isinstance(b, PadicScalar) else b
    if a.is_zero() and b.is_zero():
        return INF
    try:
        return (a - b).val
    except PrecisionExhaustedError:
        return min(a.abs_prec, b.abs_prec)


@dataclass(frozen=True)
class QParameter:
    """A deformation parameter ``q`` in ``Z_p`` with ``q = 1 (mod p)``.

    ``exact`` keeps the rational value when one is known so the parameter can
    be re-projected to any working precision.
    """

    q: PadicScalar
    exact: Fraction | None = None

    def __post_init__(self):
        if self.q.is_zero() or self.q.val != 0 or self.q.unit % self.q.p != 1:
            raise PreconditionError("q must satisfy |1 - q|_p < 1")

    @classmethod
    def from_rational(cls, q: Number, p: int, prec: int = DEFAULT_PRECISION) -> "QParameter":
        _require_prime(p)
        return cls(PadicScalar.from_rational(q, p, prec), Fraction(q))

    @classmethod
    def parse(cls, text: str, p: int, prec: int = DEFAULT_PRECISION) -> "QParameter":
        """Accept ``"1+a^j"``, ``"1+a"`` or a plain integer such as ``"6"``."""
        m = re.fullmatch(r"\s*1\s*\+\s*(\d+)\s*(?:\^\s*(\d+))?\s*", text)
        if m:
            value = 1 + int(m.group(1)) ** int(m.group(2) or 1)
        else:
            try:
                value = int(text)
            except ValueError as exc:
                raise PreconditionError(f"cannot parse q from {text!r}") from exc
        return cls.from_rational(value, p, prec)

    @property
    def p(self) -> int:
        return self.q.p

    @property
    def prec(self) -> int:
        return self.q.prec

    def at_precision(self, prec: int) -> PadicScalar:
        if self.exact is not None:
            return PadicScalar.from_rational(self.exact, self.p, prec)
        return self.q.with_precision(min(prec, self.q.prec))


def q_bracket(x: int, q: QParameter | PadicScalar) -> PadicScalar:
    """``[x]_q = (1 - q^x)/(1 - q)``, summed as ``1 + q + ... + q^(x-1)``.

    The geometric sum avoids dividing by ``1 - q`` and so loses no precision.
    """
    if x < 0:
        raise PreconditionError("q_bracket is defined here for x >= 0")
    qs = q.q if isinstance(q, QParameter) else q
    acc = PadicScalar.zero(qs.p, qs.prec)
    power = PadicScalar.one(qs.p, qs.prec)
    for _ in range(x):
        acc = acc + power
        power = power * qs
    return acc


def volkenborn_approx(n: int, p: int, N: int) -> Fraction:
    """``p**-N * sum_{x < p**N} x**n``, exactly."""
    _require_prime(p)
    if N < 1:
        raise PreconditionError("N must be >= 1")
    P = p**N
    return power_sum_direct(n, P - 1) / P


def fermionic_approx(n: int, p: int, N: int) -> Fraction:
    """``sum_{x < p**N} (-1)**x x**n``, exactly (the ``q -> 1`` normaliser is 1)."""
    _require_prime(p)
    if p == 2:
        raise PreconditionError("the fermionic integral needs an odd prime")
    if N < 1:
        raise PreconditionError("N must be >= 1")
    return alt_power_sum_direct(n, p**N - 1)


def q_integral_approx(m: int, q: QParameter, N: int, working_precision: int) -> PadicScalar:
    """``[p^N]_q^-1 * sum_{x < p^N} [x]_q^m q^x`` at ``working_precision`` digits."""
    if m < 0 or N < 1 or working_precision < 1:
        raise PreconditionError("need m >= 0, N >= 1, working_precision >= 1")
    qs = q.at_precision(working_precision)
    p, M = qs.p, qs.prec
    if m == 0:
        # sum_x q^x is the normaliser itself
        return PadicScalar.one(p, M)
    total = PadicScalar.zero(p, M)
    bracket = PadicScalar.zero(p, M)
    qx = PadicScalar.one(p, M)
    for _ in range(p**N):
        total = total + (bracket**m) * qx
        bracket = bracket + qx
        qx = qx * qs
    # bracket is now [p^N]_q
    return total / bracket


class CarlitzCache:
    """Memo table of Carlitz q-Bernoulli numbers for one fixed ``q``.

    ``beta_0 = 1`` and ``(q^(k+1) - 1) beta_k = [k == 1] - q sum_{i<k} C(k,i) q^i beta_i``.
    """

    def __init__(self, q: QParameter):
        self.q = q
        one = PadicScalar.one(q.p, q.prec)
        try:
            q.q - one
        except PrecisionExhaustedError:
            raise DegenerateDivisorError("q = 1: the recursion divides by q^(k+1) - 1 = 0") from None
        self._values = [one]
        self._lock = threading.Lock()

    def __getitem__(self, m: int) -> PadicScalar:
        if m < 0:
            raise PreconditionError("m must be non-negative")
        if m < len(self._values):
            return self._values[m]
        with self._lock:
            while len(self._values) <= m:
                self._values.append(self._next(len(self._values)))
            return self._values[m]

    def _next(self, k: int) -> PadicScalar:
        q = self.q.q
        beta = self._values
        acc = PadicScalar.zero(q.p, q.prec)
        qi = PadicScalar.one(q.p, q.prec)
        for i in range(k):
            acc = acc + comb(k, i) * qi * beta[i]
            qi = qi * q
        numerator = (1 if k == 1 else 0) - q * acc
        return numerator / (q ** (k + 1) - 1)


_CARLITZ: dict[tuple, CarlitzCache] = {}
_CARLITZ_LOCK = threading.Lock()


def carlitz_beta(m: int, q: QParameter) -> PadicScalar:
    key = (q.q, q.exact)
    cache = _CARLITZ.get(key)
    if cache is None:
        with _CARLITZ_LOCK:
            cache = _CARLITZ.setdefault(key, CarlitzCache(q))
    return cache[m]


def convergence_report(kind: str, n: int, p: int, N_max: int) -> list[tuple[int, int | float]]:
    """``[(N, v_p(approx_N - limit)) for N in 1..N_max]``; ``inf`` marks an exact hit.

    ``limit`` is ``B_n`` for ``kind="volkenborn"`` and ``E_n`` for ``"fermionic"``.
    """
    if kind == "volkenborn":
        approx, limit = volkenborn_approx, bernoulli_number(n)
    elif kind == "fermionic":
        approx, limit = fermionic_approx, euler_number(n)
    else:
        raise PreconditionError(f"unknown integral kind {kind!r}")
    return [(N, valuation_of_rational(approx(n, p, N) - limit, p)) for N in range(1, N_max + 1)]
