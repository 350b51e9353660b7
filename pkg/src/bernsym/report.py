from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .exact_core import Polynomial, TruncatedSeries, format_rational

Side = Union[Fraction, int, TruncatedSeries, Polynomial]


def _encode(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (TruncatedSeries, Polynomial)):
        return value.to_strings()
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _encode_side(value: Side) -> Any:
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return value.to_strings()


@dataclass(frozen=True)
class VerificationReport:
    """Both sides of an identity, evaluated independently, plus the verdict.

    ``reference`` holds a third independently computed value for identities
    checked three ways (closed form against two expansions); ``passed`` then
    requires all three to agree.
    """

    identity: str
    params: dict
    lhs: Side
    rhs: Side
    reference: Side | None = field(default=None)

    @property
    def passed(self) -> bool:
        if self.lhs != self.rhs:
            return False
        return self.reference is None or self.reference == self.lhs

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "params": _encode(self.params),
            "lhs": _encode_side(self.lhs),
            "rhs": _encode_side(self.rhs),
            "pass": self.passed,
        }
        if self.reference is not None:
            out["reference"] = _encode_side(self.reference)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))
