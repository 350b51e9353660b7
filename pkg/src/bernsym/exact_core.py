"""Exact scalar, polynomial and truncated power series arithmetic.

Scalars are :class:`fractions.Fraction` throughout; nothing in this package
touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

from .errors import DegenerateDivisorError, PreconditionError

Rational = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "binomial",
    "Polynomial",
    "TruncatedSeries",
    "poly_shift",
    "series_exp",
    "series_mul",
    "series_div_exact",
]


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"``; anything with a decimal point is refused."""
    s = text.strip()
    if not s or any(ch in s for ch in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(r: Number) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise PreconditionError("binomial expects non-negative arguments")
    return comb(n, k)


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``. The zero polynomial has an
    empty coefficient tuple and ``degree`` ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, a: Number) -> "Polynomial":
        return poly_shift(self, a)

    def scale(self, a: Number) -> "Polynomial":
        """Return ``x -> p(a*x)``."""
        a = Fraction(a)
        return Polynomial(c * a**i for i, c in enumerate(self.coeffs))

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to Polynomial")


def poly_shift(p: Polynomial, a: Number) -> Polynomial:
    """Taylor shift: coefficients of ``p(x + a)``.

    Expands each ``(x + a)**k`` binomially, so the result is exact.
    """
    a = Fraction(a)
    if a == 0:
        return p
    out = [Fraction(0)] * len(p.coeffs)
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        for j in range(k + 1):
            out[j] += c * comb(k, j) * a ** (k - j)
    return Polynomial(out)


class TruncatedSeries:
    """Formal power series in ``t`` with rational coefficients, kept modulo ``t**(order+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise PreconditionError("series order must be >= 0")
        cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Number = 1) -> "TruncatedSeries":
        return cls([0] * k + [c], order)

    @classmethod
    def from_egf(cls, values: Sequence[Number], order: int | None = None) -> "TruncatedSeries":
        """Build ``sum values[k] * t**k / k!``."""
        if order is None:
            order = len(values) - 1
        return cls((Fraction(values[k]) / factorial(k) for k in range(order + 1)), order)

    def egf_values(self) -> list[Fraction]:
        """Inverse of :meth:`from_egf`: ``k! * coeff[k]``."""
        return [c * factorial(k) for k, c in enumerate(self.coeffs)]

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise PreconditionError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def scale(self, c: Number) -> "TruncatedSeries":
        """Substitute ``t -> c*t``."""
        c = Fraction(c)
        return TruncatedSeries((a * c**k for k, a in enumerate(self.coeffs)), self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected TruncatedSeries")
        if other.order != self.order:
            raise PreconditionError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries([other], self.order)
        self._check(other)
        return TruncatedSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((a * other for a in self.coeffs), self.order)
        return series_mul(self, other)

    __rmul__ = __mul__

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


def series_exp(c: Number, order: int) -> TruncatedSeries:
    """``exp(c*t)`` truncated at ``t**order``."""
    if order < 0:
        raise PreconditionError("series order must be >= 0")
    c = Fraction(c)
    out = []
    term = Fraction(1)
    for k in range(order + 1):
        if k:
            term = term * c / k
        out.append(term)
    return TruncatedSeries(out, order)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    K = a.order
    out = [Fraction(0)] * (K + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(K + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return TruncatedSeries(out, K)


def series_div_exact(num: TruncatedSeries, den: TruncatedSeries, t_shift: int) -> TruncatedSeries:
    """Divide series that both vanish to order ``t_shift`` at ``t = 0``.

    Both operands are divided by ``t**t_shift`` first, which leaves a divisor
    with a unit constant term. The result has order ``num.order - t_shift``.
    """
    if t_shift < 0:
        raise PreconditionError("t_shift must be >= 0")
    if den.order < num.order:
        raise PreconditionError(f"divisor order {den.order} below dividend order {num.order}")
    if t_shift > num.order:
        raise PreconditionError("t_shift exceeds series order")
    if den.valuation() != t_shift:
        raise DegenerateDivisorError(
            f"divisor has valuation {den.valuation()}, expected exactly {t_shift}"
        )
    nv = num.valuation()
    if nv is not None and nv < t_shift:
        raise DegenerateDivisorError(
            f"dividend has valuation {nv} below shift {t_shift}; quotient is not a power series"
        )
    K = num.order - t_shift
    n = num.coeffs[t_shift:]
    d = den.coeffs[t_shift : t_shift + K + 1]
    d0 = d[0]
    q: list[Fraction] = []
    for k in range(K + 1):
        acc = n[k]
        for i in range(1, k + 1):
            acc -= d[i] * q[k - i]
        q.append(acc / d0)
    return TruncatedSeries(q, K)
