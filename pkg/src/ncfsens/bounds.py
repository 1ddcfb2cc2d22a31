"""Closed-form bounds on NCF average sensitivity and the extremal families.

The 4/3-type expressions have a factor 3 in the denominator, so this module
works with :class:`fractions.Fraction`; everything else stays dyadic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .boolfn import BooleanFunction
from .canalizing import NcfSchema, build_ncf, is_ncf
from .dyadic import rational_str
from .sensitivity import average_sensitivity
from .spectral import zero_coefficient

AS_CAP = Fraction(4, 3)


def ncf_as_bounds(k: int) -> tuple[Fraction, Fraction]:
    """Lower ``k / 2**(k-1)`` and upper ``4/3 - 2**-k - 2**-k (-1)**k / 3``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    lower = Fraction(k, 2 ** (k - 1)) if k else Fraction(0)
    p = Fraction(1, 2 ** k)
    upper = AS_CAP - p - Fraction(1, 3) * p * (-1) ** k
    return lower, upper


def as_cap() -> Fraction:
    return AS_CAP


def zero_coeff_bounds(k: int) -> tuple[Fraction, Fraction]:
    """Range of ``|f^(empty)|`` over NCFs with ``k > 1`` relevant variables."""
    if k <= 1:
        raise ValueError("defined for k > 1")
    c = Fraction(1, 2 ** (k - 1))
    return c, 1 - c


def alternating_zero_coeff(k: int) -> Fraction:
    """``|f^(empty)|`` of an NCF whose canalized outputs alternate."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction(1, 3) * (Fraction((-1) ** k, 2 ** (k - 1)) + 1)


def combined_bound(zero_abs) -> Fraction:
    zero_abs = Fraction(zero_abs)
    if not 0 <= zero_abs <= 1:
        raise ValueError("|f^(empty)| must lie in [0, 1]")
    return Fraction(5, 3) - zero_abs


def unate_bound(k: int, zero_coeff) -> float:
    """``sqrt((1 - f^(empty)) k)``, with the zero coefficient taken as signed."""
    if k < 1:
        raise ValueError("k must be >= 1")
    radicand = (1 - Fraction(zero_coeff)) * k
    if radicand < 0:
        raise ValueError(f"negative radicand {radicand}")
    return math.sqrt(radicand)


def upper_bound_step(prev: Fraction) -> Fraction:
    """Two-step induction ``as(k) <= as(k-2) / 4 + 1``."""
    return prev / 4 + 1


def construct_extremal_lower(k: int, alpha=None, b: int = 1, n: int | None = None) -> BooleanFunction:
    """NCF with every variable most dominant and all canalized outputs ``b``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    alpha = tuple(alpha) if alpha is not None else (1,) * k
    return build_ncf(n or k, NcfSchema(k, tuple(range(1, k + 1)), alpha, (b,) * k))


def alternating_beta(k: int, beta1: int = 1) -> tuple[int, ...]:
    return tuple(beta1 * (-1) ** j for j in range(k))


def construct_extremal_upper(k: int, pi=None, alpha=None, beta1: int = 1,
                             n: int | None = None) -> BooleanFunction:
    """NCF with alternating canalized outputs ``beta1, -beta1, ...``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    pi = tuple(pi) if pi is not None else tuple(range(1, k + 1))
    alpha = tuple(alpha) if alpha is not None else (1,) * k
    return build_ncf(n or max(pi), NcfSchema(k, pi, alpha, alternating_beta(k, beta1)))


@dataclass
class BoundReport:
    k: int
    as_value: Fraction
    zero_abs: Fraction
    lower: Fraction
    upper: Fraction
    combined: Fraction
    verdicts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> dict:
        def q(v):
            return {"exact": rational_str(v), "float": float(v)}
        return {
            "k": self.k,
            "as": q(self.as_value),
            "zero_abs": q(self.zero_abs),
            "lower": q(self.lower),
            "upper": q(self.upper),
            "cap": q(AS_CAP),
            "combined": q(self.combined),
            "verdicts": dict(sorted(self.verdicts.items())),
        }


def bound_report(f: BooleanFunction, schema: NcfSchema | None = None) -> BoundReport:
    """Check every NCF bound against ``f``; raises if ``f`` is not an NCF."""
    schema = schema or is_ncf(f)
    if schema is None:
        raise ValueError("bound_report needs a nested canalizing function")
    k = schema.k
    as_value = Fraction(average_sensitivity(f))
    zero_abs = abs(Fraction(zero_coefficient(f)))
    lower, upper = ncf_as_bounds(k)
    comb = combined_bound(zero_abs)
    verdicts = {
        "as_lower": lower <= as_value,
        "as_upper": as_value <= upper,
        "cap_strict": as_value < AS_CAP,
        "combined": as_value <= comb,
    }
    if k > 1:
        zlo, zhi = zero_coeff_bounds(k)
        verdicts["zero_coeff"] = zlo <= zero_abs <= zhi
    return BoundReport(k, as_value, zero_abs, lower, upper, comb, verdicts)
