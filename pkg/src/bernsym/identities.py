"""Symmetry identities for Bernoulli and Euler polynomials, checked by evaluation.

Each ``*_sides`` verifier evaluates the two sides of an identity through
separate code paths and returns a :class:`VerificationReport`. Swapping
``w1`` and ``w2`` swaps ``lhs`` and ``rhs``. Series verifiers also compute the
closed-form generating function with exponential series and exact series
division. That third value is stored in ``report.reference``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterator, Sequence

from .bernoulli_euler import (
    bernoulli_number,
    bernoulli_polynomial,
    bosonic_integral,
    euler_number,
    euler_polynomial,
    fermionic_integral,
)
from .errors import DegenerateDivisorError, PreconditionError
from .exact_core import Polynomial, TruncatedSeries, series_div_exact, series_exp
from .power_sums import alt_power_sum_direct, power_sum_direct
from .report import VerificationReport

Number = int | Fraction


@dataclass(frozen=True)
class SymmetryParams:
    n: int
    w1: int
    w2: int
    x: Fraction = Fraction(0)

    def swapped(self) -> "SymmetryParams":
        return SymmetryParams(self.n, self.w2, self.w1, self.x)


@lru_cache(maxsize=None)
def _B(n: int) -> Polynomial:
    return bernoulli_polynomial(n)


def _E(n: int) -> Polynomial:
    return euler_polynomial(n)


def _S(k: int, n: int) -> Fraction:
    return power_sum_direct(k, n)


def _T(k: int, n: int) -> Fraction:
    return alt_power_sum_direct(k, n)


def _positive(**kw):
    for name, w in kw.items():
        if w < 1:
            raise PreconditionError(f"{name} must be a positive integer, got {w}")


def _odd(**kw):
    _positive(**kw)
    for name, w in kw.items():
        if w % 2 == 0:
            raise PreconditionError(f"{name} must be odd for Euler-side identities, got {w}")


def _params(n, w1, w2, x) -> dict:
    return {"n": n, "w1": w1, "w2": w2, "x": Fraction(x)}


# -- Bernoulli side -----------------------------------------------------------


def _cor2_side(n: int, a: int, b: int, x: Fraction) -> Fraction:
    # sum_i C(n,i) B_i(b x) S_{n-i}(a-1) a^(i-1) b^(n-i)
    bx = b * x
    return sum(
        (comb(n, i) * _B(i)(bx) * _S(n - i, a - 1) * Fraction(a) ** (i - 1) * b ** (n - i)
         for i in range(n + 1)),
        Fraction(0),
    )


def corollary2_sides(n: int, w1: int, w2: int, x: Number = 0) -> VerificationReport:
    _positive(w1=w1, w2=w2)
    x = Fraction(x)
    return VerificationReport(
        "corollary2", _params(n, w1, w2, x), _cor2_side(n, w1, w2, x), _cor2_side(n, w2, w1, x)
    )


def _cor4_side(n: int, a: int, b: int, x: Fraction) -> Fraction:
    # a^(n-1) sum_{i<a} B_n(b x + (b/a) i)
    Bn = _B(n)
    total = sum((Bn(b * x + Fraction(b * i, a)) for i in range(a)), Fraction(0))
    return total * Fraction(a) ** (n - 1)


def corollary4_sides(n: int, w1: int, w2: int, x: Number = 0) -> VerificationReport:
    _positive(w1=w1, w2=w2)
    x = Fraction(x)
    return VerificationReport(
        "corollary4", _params(n, w1, w2, x), _cor4_side(n, w1, w2, x), _cor4_side(n, w2, w1, x)
    )


def bernoulli_multiplication(n: int, w1: int, x: Number = 0) -> VerificationReport:
    """``B_n(w x) = w^(n-1) sum_{i<w} B_n(x + i/w)``."""
    _positive(w1=w1)
    x = Fraction(x)
    Bn = _B(n)
    rhs = Fraction(w1) ** (n - 1) * sum((Bn(x + Fraction(i, w1)) for i in range(w1)), Fraction(0))
    return VerificationReport(
        "bernoulli_multiplication", {"n": n, "w1": w1, "x": x}, Bn(w1 * x), rhs
    )


def deeba_rodriguez(n: int, w1: int) -> Fraction:
    """Recover ``B_n`` from ``B_0..B_{n-1}`` and the power sums ``S_k(w1 - 1)``."""
    if n < 1:
        raise PreconditionError("deeba_rodriguez needs n >= 1")
    if w1 == 1:
        raise DegenerateDivisorError("w1 = 1 makes 1 - w1^n vanish")
    if w1 < 1:
        raise PreconditionError("w1 must be >= 2")
    total = sum(
        (Fraction(w1) ** k * comb(n, k) * bernoulli_number(k) * _S(n - k, w1 - 1) for k in range(n)),
        Fraction(0),
    )
    return total / (w1 * (1 - Fraction(w1) ** n))


def deeba_rodriguez_report(n: int, w1: int) -> VerificationReport:
    return VerificationReport(
        "deeba_rodriguez", {"n": n, "w1": w1}, deeba_rodriguez(n, w1), bernoulli_number(n)
    )


def power_sum_bernoulli_identity(k: int, n: int) -> VerificationReport:
    """``I((n+x)^k) - I(x^k) = k S_{k-1}(n-1)`` for ``k, n >= 1``."""
    if k < 1 or n < 1:
        raise PreconditionError("power_sum_bernoulli_identity needs k >= 1 and n >= 1")
    shifted = Polynomial([n, 1])
    acc = Polynomial([1])
    for _ in range(k):
        acc = acc * shifted
    lhs = bosonic_integral(acc) - bernoulli_number(k)
    return VerificationReport("power_sum_bernoulli", {"k": k, "n": n}, lhs, k * _S(k - 1, n - 1))


# -- Euler side ---------------------------------------------------------------


def _thm5_side(n: int, a: int, b: int, x: Fraction) -> Fraction:
    # sum_i C(n,i) E_i(b x) T_{n-i}(a-1) a^i b^(n-i)
    bx = b * x
    return sum(
        (comb(n, i) * _E(i)(bx) * _T(n - i, a - 1) * a**i * b ** (n - i) for i in range(n + 1)),
        Fraction(0),
    )


def theorem5_sides(n: int, w1: int, w2: int, x: Number = 0) -> VerificationReport:
    _odd(w1=w1, w2=w2)
    x = Fraction(x)
    return VerificationReport(
        "theorem5", _params(n, w1, w2, x), _thm5_side(n, w1, w2, x), _thm5_side(n, w2, w1, x)
    )


def eq30_identity(n: int, w1: int, x: Number = 0) -> VerificationReport:
    """``E_n(w x) = sum_i C(n,i) E_i(x) T_{n-i}(w-1) w^i`` for odd ``w``."""
    _odd(w1=w1)
    x = Fraction(x)
    rhs = sum(
        (comb(n, i) * _E(i)(x) * _T(n - i, w1 - 1) * w1**i for i in range(n + 1)), Fraction(0)
    )
    return VerificationReport("eq30", {"n": n, "w1": w1, "x": x}, _E(n)(w1 * x), rhs)


def euler_from_corollary6(n: int, w1: int) -> Fraction:
    if n < 1:
        raise PreconditionError("euler_from_corollary6 needs n >= 1")
    if w1 == 1:
        raise DegenerateDivisorError("w1 = 1 makes 1 - w1^n vanish")
    _odd(w1=w1)
    total = sum(
        (comb(n, i) * euler_number(i) * _T(n - i, w1 - 1) * w1**i for i in range(n)), Fraction(0)
    )
    return total / (1 - Fraction(w1) ** n)


def corollary6_report(n: int, w1: int) -> VerificationReport:
    return VerificationReport(
        "corollary6", {"n": n, "w1": w1}, euler_from_corollary6(n, w1), euler_number(n)
    )


def _thm7_side(n: int, a: int, b: int, x: Fraction) -> Fraction:
    # a^n sum_{l<a} (-1)^l E_n(b x + (b/a) l)
    En = _E(n)
    total = sum(
        ((-1) ** l * En(b * x + Fraction(b * l, a)) for l in range(a)), Fraction(0)
    )
    return total * a**n


def theorem7_sides(n: int, w1: int, w2: int, x: Number = 0) -> VerificationReport:
    _odd(w1=w1, w2=w2)
    x = Fraction(x)
    return VerificationReport(
        "theorem7", _params(n, w1, w2, x), _thm7_side(n, w1, w2, x), _thm7_side(n, w2, w1, x)
    )


def euler_multiplication(n: int, w1: int, x: Number = 0) -> VerificationReport:
    """``E_n(w x) = w^n sum_{l<w} (-1)^l E_n(x + l/w)`` for odd ``w``."""
    _odd(w1=w1)
    x = Fraction(x)
    En = _E(n)
    rhs = w1**n * sum(((-1) ** l * En(x + Fraction(l, w1)) for l in range(w1)), Fraction(0))
    return VerificationReport("euler_multiplication", {"n": n, "w1": w1, "x": x}, En(w1 * x), rhs)


def odd_shift_fermionic_identity(p: Polynomial, n: int) -> VerificationReport:
    """Odd-``n`` fermionic shift: ``I(p(x+n)) + I(p) = 2 sum_{l<n} (-1)^l p(l)``."""
    _odd(n=n)
    lhs = fermionic_integral(p.shift(n)) + fermionic_integral(p)
    rhs = 2 * sum(((-1) ** l * p(l) for l in range(n)), Fraction(0))
    return VerificationReport("odd_shift_fermionic", {"p": p, "n": n}, lhs, rhs)


# -- generating functions ----------------------------------------------------


def _egf(values: Sequence[Fraction]) -> TruncatedSeries:
    return TruncatedSeries.from_egf(values)


def _t(order: int) -> TruncatedSeries:
    return TruncatedSeries.monomial(1, order)


def _bosonic_closed_form(w1: int, w2: int, x: Fraction, order: int) -> TruncatedSeries:
    # t e^{w1 w2 x t} (e^{w1 w2 t} - 1) / ((e^{w1 t} - 1)(e^{w2 t} - 1))
    K = order + 2
    w = w1 * w2
    num = _t(K) * series_exp(w * x, K) * (series_exp(w, K) - 1)
    den = (series_exp(w1, K) - 1) * (series_exp(w2, K) - 1)
    return series_div_exact(num, den, 2)


def theorem1_series(w1: int, w2: int, x: Number, order: int) -> VerificationReport:
    """Coefficient-wise comparison of the two factorised expansions with the closed form."""
    _positive(w1=w1, w2=w2)
    if order < 0:
        raise PreconditionError("order must be >= 0")
    x = Fraction(x)
    lhs = _egf([_cor2_side(n, w1, w2, x) for n in range(order + 1)])
    rhs = _egf([_cor2_side(n, w2, w1, x) for n in range(order + 1)])
    closed = _bosonic_closed_form(w1, w2, x, order)
    return VerificationReport(
        "theorem1", {"w1": w1, "w2": w2, "x": x, "order": order}, lhs, rhs, closed
    )


def theorem3_series(w1: int, w2: int, x: Number, order: int) -> VerificationReport:
    """Shifted-argument expansions of the same generating function."""
    _positive(w1=w1, w2=w2)
    x = Fraction(x)
    lhs = _egf([_cor4_side(n, w1, w2, x) for n in range(order + 1)])
    rhs = _egf([_cor4_side(n, w2, w1, x) for n in range(order + 1)])
    closed = _bosonic_closed_form(w1, w2, x, order)
    return VerificationReport(
        "theorem3", {"w1": w1, "w2": w2, "x": x, "order": order}, lhs, rhs, closed
    )


def series_identity_bosonic_ratio(w1: int, w2: int, order: int) -> VerificationReport:
    """Ratio of Bernoulli EGFs against ``t(e^{w1 w2 t}-1)/((e^{w1 t}-1)(e^{w2 t}-1))``."""
    _positive(w1=w1, w2=w2)
    bern = _egf([bernoulli_number(k) for k in range(order + 1)])
    lhs = series_div_exact(bern.scale(w1) * bern.scale(w2), bern.scale(w1 * w2), 0)
    K = order + 2
    num = _t(K) * (series_exp(w1 * w2, K) - 1)
    den = (series_exp(w1, K) - 1) * (series_exp(w2, K) - 1)
    rhs = series_div_exact(num, den, 2)
    return VerificationReport("bosonic_ratio", {"w1": w1, "w2": w2, "order": order}, lhs, rhs)


def series_identity_fermionic_ratio(w1: int, w2: int, x: Number, order: int) -> VerificationReport:
    """Closed form ``2e^{w1w2xt}(e^{w1w2t}+1)/((e^{w1t}+1)(e^{w2t}+1))`` (lhs)
    against the Euler/alternating-power-sum expansion (rhs) and the
    shifted-argument Euler expansion (reference)."""
    _odd(w1=w1, w2=w2)
    x = Fraction(x)
    w = w1 * w2
    num = series_exp(w * x, order) * (series_exp(w, order) + 1) * 2
    den = (series_exp(w1, order) + 1) * (series_exp(w2, order) + 1)
    closed = series_div_exact(num, den, 0)
    via_power_sums = _egf([_thm5_side(n, w1, w2, x) for n in range(order + 1)])
    via_shifts = _egf([_thm7_side(n, w1, w2, x) for n in range(order + 1)])
    return VerificationReport(
        "fermionic_ratio",
        {"w1": w1, "w2": w2, "x": x, "order": order},
        closed,
        via_power_sums,
        via_shifts,
    )


# -- sweeps -------------------------------------------------------------------


@dataclass(frozen=True)
class Verifier:
    name: str
    kind: str  # "pair" | "single" | "formula" | "series" | "ratio"
    func: Callable[..., VerificationReport]
    odd_only: bool = False


VERIFIERS: dict[str, Verifier] = {
    v.name: v
    for v in [
        Verifier("corollary2", "pair", corollary2_sides),
        Verifier("corollary4", "pair", corollary4_sides),
        Verifier("bernoulli_multiplication", "single", bernoulli_multiplication),
        Verifier("deeba_rodriguez", "formula", deeba_rodriguez_report),
        Verifier("theorem1", "series", theorem1_series),
        Verifier("theorem3", "series", theorem3_series),
        Verifier("bosonic_ratio", "ratio", series_identity_bosonic_ratio),
        Verifier("theorem5", "pair", theorem5_sides, odd_only=True),
        Verifier("theorem7", "pair", theorem7_sides, odd_only=True),
        Verifier("eq30", "single", eq30_identity, odd_only=True),
        Verifier("euler_multiplication", "single", euler_multiplication, odd_only=True),
        Verifier("corollary6", "formula", corollary6_report, odd_only=True),
        Verifier("fermionic_ratio", "series", series_identity_fermionic_ratio, odd_only=True),
    ]
}


def sweep(
    name: str,
    n_max: int,
    weights: Sequence[int],
    xs: Sequence[Fraction] = (Fraction(0),),
    order: int = 8,
) -> Iterator[VerificationReport]:
    """Yield reports over the grid in lexicographic ``(n, w1, w2, x-index)`` order."""
    v = VERIFIERS[name]
    ws = sorted(set(weights))
    if v.odd_only:
        _odd(**{f"w={w}": w for w in ws})
    if v.kind == "pair":
        for n in range(n_max + 1):
            for w1 in ws:
                for w2 in ws:
                    for x in xs:
                        yield v.func(n, w1, w2, x)
    elif v.kind == "single":
        for n in range(n_max + 1):
            for w1 in ws:
                for x in xs:
                    yield v.func(n, w1, x)
    elif v.kind == "formula":
        for n in range(1, n_max + 1):
            for w1 in ws:
                if w1 >= 2:
                    yield v.func(n, w1)
    elif v.kind == "series":
        for w1 in ws:
            for w2 in ws:
                for x in xs:
                    yield v.func(w1, w2, x, order)
    elif v.kind == "ratio":
        for w1 in ws:
            for w2 in ws:
                yield v.func(w1, w2, order)
    else:  # pragma: no cover
        raise AssertionError(v.kind)
