"""Influences, average sensitivity and the disagreement functional xi."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolfn import BooleanFunction, _check_var, _flip, full_mask
from .canalizing import NcfSchema, SchemaError, canalized_value
from .dyadic import HALF, ONE, ZERO, Dyadic
from .restriction import restrict, restrict_table
from .spectral import Spectrum, subset_sizes, transform, zero_coefficient


def influence(f: BooleanFunction, i: int) -> Dyadic:
    """Fraction of inputs whose ``x_i`` flip changes the output."""
    p = _check_var(f.n, i)
    changed = (f.table ^ _flip(f.table, f.n, p)).bit_count()
    return Dyadic(changed, f.n)


def influence_spectral(s: Spectrum, i: int) -> Dyadic:
    p = _check_var(s.n, i)
    v = s.raw.reshape(-1, 2, 1 << p)[:, 1].ravel()
    return Dyadic(int(np.dot(v, v)), 2 * s.scale)


def influences(f: BooleanFunction) -> list[Dyadic]:
    return [influence(f, i) for i in range(1, f.n + 1)]


def average_sensitivity_spectral(s: Spectrum) -> Dyadic:
    """``sum_{S != empty} |S| coeff[S]**2``."""
    return Dyadic(int(np.dot(s.raw * s.raw, subset_sizes(s.n))), 2 * s.scale)


def average_sensitivity_combinatorial(f: BooleanFunction) -> Dyadic:
    total = sum((f.table ^ _flip(f.table, f.n, p)).bit_count() for p in range(f.n))
    return Dyadic(total, f.n)


def average_sensitivity(obj) -> Dyadic:
    """Average sensitivity of a function (sum of influences) or of a spectrum."""
    if isinstance(obj, Spectrum):
        return average_sensitivity_spectral(obj)
    return average_sensitivity_combinatorial(obj)


def xi(f, g) -> Dyadic:
    """``(1 - sum_U f^(U) g^(U)) / 2`` from spectra (functions are transformed)."""
    sf = f if isinstance(f, Spectrum) else transform(f)
    sg = g if isinstance(g, Spectrum) else transform(g)
    if sf.n != sg.n:
        raise ValueError("arity mismatch")
    corr = Dyadic(int(np.dot(sf.raw, sg.raw)), sf.scale + sg.scale)
    return (ONE - corr).halve()


def disagreement(f: BooleanFunction, g: BooleanFunction) -> Dyadic:
    """``Pr[f(X) != g(X)]`` by counting."""
    if f.n != g.n:
        raise ValueError("arity mismatch")
    return Dyadic((f.table ^ g.table).bit_count(), f.n)


def as_decomposition(f: BooleanFunction, i: int) -> tuple[Dyadic, Dyadic]:
    """Both sides of ``as(f) = as(f+)/2 + as(f-)/2 + xi(f+, f-)`` for variable ``i``.

    Evaluated spectrally; ``i`` need not be relevant.
    """
    plus, minus = restrict(f, i, 1), restrict(f, i, -1)
    sp, sm = transform(plus), transform(minus)
    lhs = average_sensitivity_spectral(transform(f))
    rhs = (average_sensitivity_spectral(sp) + average_sensitivity_spectral(sm)).halve() + xi(sp, sm)
    return lhs, rhs


@dataclass(frozen=True)
class SensitivityProfile:
    influences: tuple[Dyadic, ...]
    total: Dyadic
    zero_coeff: Dyadic

    @classmethod
    def of(cls, f: BooleanFunction) -> "SensitivityProfile":
        inf = tuple(influences(f))
        return cls(inf, sum(inf, ZERO), zero_coefficient(f))


def _unroll(f: BooleanFunction, schema: NcfSchema) -> tuple[list[int], int | None]:
    """Validate ``schema`` against ``f``; return the betas of the peeled steps and the tail constant."""
    if schema.k and max(schema.pi) > f.n:
        raise SchemaError("schema uses a variable beyond n")
    n, t = f.n, f.table
    betas = []
    for idx, (i, a, b) in enumerate(schema.steps()):
        p = i - 1
        if canalized_value(t, n, p, a) != b:
            raise SchemaError(f"step {idx + 1} does not canalize: x{i}={a} does not force {b}")
        if idx == schema.k - 1:
            if canalized_value(t, n, p, -a) != -b:
                raise SchemaError("last step must leave -beta_k on the other side")
        else:
            betas.append(b)
            t = restrict_table(t, n, p, -a)
    if schema.k == 0:
        if t not in (0, full_mask(n)):
            raise SchemaError("empty schema needs a constant function")
        return betas, 1 if t else -1
    return betas, None


def as_ncf_recursive(f: BooleanFunction, schema: NcfSchema) -> Dyadic:
    """Average sensitivity via ``as(f) = (as(g) + 1 - g^(empty) beta_1) / 2``.

    ``g`` is the surviving restriction ``x_{pi(1)} = -alpha_1``.
    """
    betas, const = _unroll(f, schema)
    if const is not None:
        return ZERO
    as_, z = ONE, ZERO
    for b in reversed(betas):
        as_, z = (as_ + ONE - z * b).halve(), z.halve() + HALF * b
    return as_


def zero_coeff_recursive(f: BooleanFunction, schema: NcfSchema) -> Dyadic:
    """Zero coefficient via ``f^(empty) = g^(empty)/2 + beta_1/2``."""
    betas, const = _unroll(f, schema)
    if const is not None:
        return Dyadic(const)
    z = ZERO
    for b in reversed(betas):
        z = z.halve() + HALF * b
    return z
