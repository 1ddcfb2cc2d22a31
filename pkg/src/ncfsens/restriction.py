"""Restriction and composition, on truth tables and on spectra.

Restricted functions keep the original arity ``n``; the fixed variable simply
becomes irrelevant.  That keeps :func:`compose` total without re-indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .boolfn import BooleanFunction, _check_var, full_mask, var_mask
from .spectral import Spectrum


class CompositionError(ValueError):
    pass


def _check_value(a: int) -> int:
    if a not in (1, -1):
        raise ValueError(f"restriction value {a!r} not in {{-1,+1}}")
    return a


def restrict_table(table: int, n: int, p: int, a: int) -> int:
    """Table of ``f`` with bit position ``p`` forced to encode ``a``."""
    s = 1 << p
    M = var_mask(n, p)
    if a == 1:
        hi = table & M
        return hi | (hi >> s)
    lo = table & ~M & full_mask(n)
    return lo | (lo << s)


def restrict(f: BooleanFunction, i: int, a: int) -> BooleanFunction:
    """``f^(i,a)``: ``f`` with ``x_i`` fixed to ``a``, still on ``n`` variables."""
    p = _check_var(f.n, i)
    return BooleanFunction(f.n, restrict_table(f.table, f.n, p, _check_value(a)))


def decomposition_holds(f: BooleanFunction, i: int) -> bool:
    """Pointwise ``f = g+ f^(i,+) + g- f^(i,-)`` with the indicator weights."""
    p = _check_var(f.n, i)
    plus, minus = restrict(f, i, 1), restrict(f, i, -1)
    M = var_mask(f.n, p)
    return ((plus.table & M) | (minus.table & ~M & full_mask(f.n))) == f.table


def spectral_restrict(s: Spectrum, i: int, a: int) -> Spectrum:
    """Coefficients ``s[U] + a s[U | {i}]`` for ``U`` without ``i``, zero otherwise."""
    p = _check_var(s.n, i)
    _check_value(a)
    h = 1 << p
    v = s.raw.reshape(-1, 2, h)
    out = np.zeros_like(v)
    out[:, 0] = v[:, 0] + a * v[:, 1]
    return Spectrum(s.n, out.reshape(-1), s.scale)


def compose(s_plus: Spectrum, s_minus: Spectrum, i: int) -> Spectrum:
    """Rebuild a spectrum from its two restrictions in variable ``i``.

    ``coeff[U] = (s_plus[U - {i}] + (-1)**|U & {i}| s_minus[U - {i}]) / 2``.
    """
    if s_plus.n != s_minus.n:
        raise CompositionError("arity mismatch")
    p = _check_var(s_plus.n, i)
    e = max(s_plus.scale, s_minus.scale)
    h = 1 << p
    vp = s_plus.rescaled(e).reshape(-1, 2, h)
    vm = s_minus.rescaled(e).reshape(-1, 2, h)
    if vp[:, 1].any() or vm[:, 1].any():
        raise CompositionError(f"not restrictions in {i}")
    out = np.empty_like(vp)
    out[:, 0] = vp[:, 0] + vm[:, 0]
    out[:, 1] = vp[:, 0] - vm[:, 0]
    out = out.reshape(-1)
    # divide by two exactly, dropping a power of two where possible
    if not (out & 1).any():
        return Spectrum(s_plus.n, out >> 1, e)
    return Spectrum(s_plus.n, out, e + 1)


@dataclass(frozen=True)
class RestrictionSpec:
    """Ordered ``(variable, value)`` pairs fixing several inputs at once."""

    assignments: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "assignments", tuple((int(i), int(a)) for i, a in self.assignments))
        idx = [i for i, _ in self.assignments]
        if len(set(idx)) != len(idx):
            raise ValueError("restriction spec repeats a variable")
        for _, a in self.assignments:
            _check_value(a)

    def validate(self, n: int) -> None:
        for i, _ in self.assignments:
            _check_var(n, i)

    @property
    def mask(self) -> int:
        m = 0
        for i, _ in self.assignments:
            m |= 1 << (i - 1)
        return m


def restrict_set(s: Spectrum, spec: RestrictionSpec) -> Spectrum:
    """``coeff[U] = sum_{S <= K} chi_S(a) s[U | S]`` for ``U`` disjoint from ``K``."""
    spec.validate(s.n)
    K = spec.mask
    N = 1 << s.n
    idx = np.arange(N)
    free = idx[(idx & K) == 0]
    out = np.zeros(N, dtype=np.int64)
    pairs = spec.assignments
    for r in range(len(pairs) + 1):
        for S in combinations(pairs, r):
            sign, Smask = 1, 0
            for i, a in S:
                sign *= a
                Smask |= 1 << (i - 1)
            out[free] += sign * s.raw[free | Smask]
    return Spectrum(s.n, out, s.scale)


def restrict_set_table(f: BooleanFunction, spec: RestrictionSpec) -> BooleanFunction:
    spec.validate(f.n)
    t = f.table
    for i, a in spec.assignments:
        t = restrict_table(t, f.n, i - 1, _check_value(a))
    return BooleanFunction(f.n, t)
