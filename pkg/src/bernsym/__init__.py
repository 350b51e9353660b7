"""Exact Bernoulli/Euler arithmetic, p-adic integral approximants and
symmetry-identity verifiers."""
from .bernoulli_euler import (
    bernoulli_number,
    bernoulli_polynomial,
    bosonic_integral,
    euler_number,
    euler_polynomial,
    fermionic_integral,
    verify_shift_bosonic,
    verify_shift_fermionic,
)
from .errors import (
    BernsymError,
    DegenerateDivisorError,
    PrecisionExhaustedError,
    PreconditionError,
)
from .exact_core import (
    Polynomial,
    Rational,
    TruncatedSeries,
    binomial,
    format_rational,
    parse_rational,
    poly_shift,
    series_div_exact,
    series_exp,
    series_mul,
)
from .report import VerificationReport

__version__ = "0.1.0"
