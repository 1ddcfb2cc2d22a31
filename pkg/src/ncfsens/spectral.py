"""Exact Fourier (Walsh) analysis of Boolean functions."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .boolfn import BooleanFunction
from .dyadic import Dyadic


class NotBooleanSpectrum(ValueError):
    pass


def chi(U: int, mask: int) -> int:
    """Parity character: product of ``x_i`` over ``i in U`` (1 for U empty)."""
    # x_i = -1 exactly where the mask bit is 0
    return -1 if (U & ~mask).bit_count() & 1 else 1


@lru_cache(maxsize=None)
def subset_sizes(n: int) -> np.ndarray:
    sizes = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        sizes = np.concatenate((sizes, sizes + 1))
    sizes.setflags(write=False)
    return sizes


class Spectrum:
    """Dense Fourier spectrum: ``coeff[U] = raw[U] / 2**scale``.

    Spectra built by :func:`transform` have ``scale == n``.  Restriction and
    composition may change the scale; equality is on exact values.
    """

    __slots__ = ("n", "raw", "scale")

    def __init__(self, n: int, raw, scale: int | None = None):
        raw = np.asarray(raw, dtype=np.int64)
        if raw.shape != (1 << n,):
            raise ValueError(f"expected {1 << n} coefficients, got shape {raw.shape}")
        self.n = n
        self.raw = raw
        self.raw.setflags(write=False)
        self.scale = n if scale is None else scale

    @classmethod
    def from_coefficients(cls, n: int, coeffs: dict) -> "Spectrum":
        """Build from ``{U: rational}``; missing subsets are zero."""
        ds = {U: Dyadic.from_rational(v) for U, v in coeffs.items()}
        e = max([d.log2_denominator for d in ds.values()] + [0])
        raw = np.zeros(1 << n, dtype=np.int64)
        for U, d in ds.items():
            raw[U] = d.numerator << (e - d.log2_denominator)
        return cls(n, raw, e)

    def __getitem__(self, U: int) -> Dyadic:
        return Dyadic(int(self.raw[U]), self.scale)

    def __len__(self):
        return 1 << self.n

    @property
    def coeffs(self) -> list[Dyadic]:
        return [Dyadic(int(v), self.scale) for v in self.raw.tolist()]

    def nonzero(self):
        for U in np.flatnonzero(self.raw).tolist():
            yield U, self[U]

    def rescaled(self, scale: int) -> np.ndarray:
        """Raw values expressed over ``2**scale`` (``scale >= self.scale``)."""
        return self.raw << (scale - self.scale)

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        if self.n != other.n:
            return False
        e = max(self.scale, other.scale)
        return bool(np.array_equal(self.rescaled(e), other.rescaled(e)))

    __hash__ = None

    def __repr__(self):
        items = ", ".join(f"{U}: {c}" for U, c in self.nonzero())
        return f"Spectrum(n={self.n}, {{{items}}})"

    def to_json(self, include_zeros: bool = False) -> dict:
        it = ((U, self[U]) for U in range(1 << self.n)) if include_zeros else self.nonzero()
        return {
            "n": self.n,
            "coeffs": [{"U": U, "num": c.numerator, "log2den": c.log2_denominator, "float": float(c)}
                       for U, c in it],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Spectrum":
        return cls.from_coefficients(
            data["n"], {c["U"]: Dyadic(c["num"], c["log2den"]) for c in data["coeffs"]})


def _butterfly(v: np.ndarray, inverse: bool) -> np.ndarray:
    N = v.shape[0]
    h = 1
    while h < N:
        v = v.reshape(-1, 2, h)
        lo, hi = v[:, 0], v[:, 1]
        # bit set means x = +1, so the U-containing branch is hi - lo
        if inverse:
            v = np.stack((lo - hi, lo + hi), axis=1)
        else:
            v = np.stack((lo + hi, hi - lo), axis=1)
        h *= 2
    return v.reshape(N)


def _butterfly_small(v: list[int], inverse: bool) -> list[int]:
    N = len(v)
    h = 1
    while h < N:
        for start in range(0, N, 2 * h):
            for j in range(start, start + h):
                a, b = v[j], v[j + h]
                if inverse:
                    v[j], v[j + h] = a - b, a + b
                else:
                    v[j], v[j + h] = a + b, b - a
        h *= 2
    return v


_SMALL = 5


def transform(f: BooleanFunction) -> Spectrum:
    """Fourier coefficients ``2**-n * sum_x f(x) chi_U(x)``, exactly."""
    if f.n <= _SMALL:
        raw = np.array(_butterfly_small(f.values(), inverse=False), dtype=np.int64)
    else:
        raw = _butterfly(f.as_array(), inverse=False)
    return Spectrum(f.n, raw, f.n)


def expansion_values(s: Spectrum) -> np.ndarray:
    """``sum_U coeff[U] chi_U(x)`` at every mask, over ``2**s.scale``."""
    if s.n <= _SMALL:
        return np.array(_butterfly_small(s.raw.tolist(), inverse=True), dtype=np.int64)
    return _butterfly(s.raw.copy(), inverse=True)


def inverse_transform(s: Spectrum) -> BooleanFunction:
    vals = expansion_values(s)
    one = 1 << s.scale
    pos = vals == one
    if not np.all(pos | (vals == -one)):
        raise NotBooleanSpectrum("not a Boolean spectrum: expansion leaves {-1,+1}")
    if s.n < 3:
        return BooleanFunction.from_values([1 if p else -1 for p in pos.tolist()])
    packed = np.packbits(pos, bitorder="little").tobytes()
    return BooleanFunction(s.n, int.from_bytes(packed, "little"))


def parseval_check(s: Spectrum) -> bool:
    """True iff the squared coefficients sum to exactly 1."""
    vals = s.raw.tolist() if s.n <= 12 else None
    total = sum(v * v for v in vals) if vals is not None else int(np.dot(s.raw, s.raw))
    return total == 1 << (2 * s.scale)


def zero_coefficient(f: BooleanFunction) -> Dyadic:
    """``f^(empty)`` from output counts: (#(+1) - #(-1)) / 2**n."""
    return Dyadic(2 * f.ones() - f.size, f.n)


def fourier_weight(s: Spectrum, U: int) -> Dyadic:
    return Dyadic(int(s.raw[U]) ** 2, 2 * s.scale)
