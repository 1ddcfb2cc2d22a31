"""Bit-packed Boolean functions on {-1,+1}^n.

Encoding used throughout the package: an assignment is an integer ``mask``
in ``[0, 2**n)`` where bit ``j`` set means ``x_{j+1} = +1``.  Variables are
1-based in every public signature and map to bit position ``i - 1``.  The
truth table is a Python int whose bit ``m`` is set iff ``f = +1`` on mask
``m``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

DEFAULT_MAX_N = 20


def max_arity() -> int:
    """Hard cap on ``n``; ``NCF_MAX_N`` in the environment overrides it."""
    raw = os.environ.get("NCF_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


class ArityError(ValueError):
    pass


class TruthTableFormatError(ValueError):
    pass


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def var_mask(n: int, p: int) -> int:
    """Rows of a length-2**n table where bit position ``p`` of the mask is 1."""
    s = 1 << p
    block = ((1 << s) - 1) << s
    reps = (1 << n) // (2 * s)
    # repeat the 2s-bit block ``reps`` times
    return block * (((1 << (2 * s * reps)) - 1) // ((1 << (2 * s)) - 1))


def _check_var(n: int, i: int) -> int:
    if not 1 <= i <= n:
        raise IndexError(f"variable index {i} out of range 1..{n}")
    return i - 1


@dataclass(frozen=True)
class BooleanFunction:
    """A function ``{-1,+1}^n -> {-1,+1}`` stored as a bit-packed table."""

    n: int
    table: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ArityError(f"invalid arity {self.n!r}")
        if self.n > max_arity():
            raise ArityError(f"n={self.n} exceeds the arity cap {max_arity()}")
        if self.table < 0 or self.table >> (1 << self.n):
            raise ValueError("table has bits beyond 2**n")

    @classmethod
    def from_values(cls, values) -> "BooleanFunction":
        """Build from a sequence of +-1 outputs indexed by mask."""
        values = list(values)
        n = len(values).bit_length() - 1
        if len(values) != 1 << n:
            raise ValueError("table length must be a power of two")
        t = 0
        for m, v in enumerate(values):
            if v == 1:
                t |= 1 << m
            elif v != -1:
                raise ValueError(f"output {v!r} not in {{-1,+1}}")
        return cls(n, t)

    @classmethod
    def constant(cls, n: int, value: int) -> "BooleanFunction":
        return cls(n, full_mask(n) if value == 1 else 0)

    @property
    def size(self) -> int:
        return 1 << self.n

    def __call__(self, mask: int) -> int:
        return evaluate(self, mask)

    def values(self) -> list[int]:
        t = self.table
        return [1 if (t >> m) & 1 else -1 for m in range(self.size)]

    def as_array(self) -> np.ndarray:
        """+-1 outputs as an int64 array indexed by mask."""
        N = self.size
        if N < 8:
            return np.array(self.values(), dtype=np.int64)
        raw = np.frombuffer(self.table.to_bytes(N // 8, "little"), dtype=np.uint8)
        bits = np.unpackbits(raw, bitorder="little").astype(np.int64)
        return 2 * bits - 1

    def ones(self) -> int:
        """Number of assignments mapped to +1."""
        return self.table.bit_count()

    def __neg__(self) -> "BooleanFunction":
        return BooleanFunction(self.n, self.table ^ full_mask(self.n))

    def flip_input(self, i: int) -> "BooleanFunction":
        """The function ``x -> f(x with x_i negated)``."""
        p = _check_var(self.n, i)
        return BooleanFunction(self.n, _flip(self.table, self.n, p))

    def to_bits(self) -> str:
        return "".join("1" if (self.table >> m) & 1 else "0" for m in range(self.size))

    def __repr__(self):
        if self.n <= 5:
            return f"BooleanFunction(n={self.n}, bits={self.to_bits()})"
        return f"BooleanFunction(n={self.n}, table=0x{self.table:x})"


def _flip(t: int, n: int, p: int) -> int:
    s = 1 << p
    M = var_mask(n, p)
    return ((t & M) >> s) | ((t & ~M & full_mask(n)) << s)


def evaluate(f: BooleanFunction, mask: int) -> int:
    if not 0 <= mask < f.size:
        raise IndexError(f"assignment mask {mask} out of range for n={f.n}")
    return 1 if (f.table >> mask) & 1 else -1


def assignment(values) -> int:
    """Mask of an explicit assignment ``(x_1, ..., x_n)`` of +-1 values."""
    m = 0
    for j, v in enumerate(values):
        if v == 1:
            m |= 1 << j
        elif v != -1:
            raise ValueError(f"input {v!r} not in {{-1,+1}}")
    return m


def is_relevant(f: BooleanFunction, i: int) -> bool:
    p = _check_var(f.n, i)
    M = var_mask(f.n, p)
    return ((f.table & M) >> (1 << p)) != (f.table & ~M & full_mask(f.n))


def relevant_variables(f: BooleanFunction) -> tuple[int, ...]:
    """Sorted 1-based indices of variables whose flip can change ``f``."""
    return tuple(i for i in range(1, f.n + 1) if is_relevant(f, i))


def unate_orientation(f: BooleanFunction) -> dict[int, str]:
    """Per-variable monotonicity: increasing, decreasing, irrelevant or binate."""
    out = {}
    full = full_mask(f.n)
    for i in range(1, f.n + 1):
        p = i - 1
        M = var_mask(f.n, p)
        lo = f.table & ~M & full            # x_i = -1 rows
        hi = (f.table & M) >> (1 << p)      # x_i = +1 rows, aligned with lo
        up = hi & ~lo & ~M & full           # -1 -> +1 transitions
        down = lo & ~hi
        if not up and not down:
            out[i] = "irrelevant"
        elif not down:
            out[i] = "increasing"
        elif not up:
            out[i] = "decreasing"
        else:
            out[i] = "binate"
    return out


def is_unate(f: BooleanFunction) -> bool:
    return "binate" not in unate_orientation(f).values()


_GATE = re.compile(r"^(AND|OR|XOR|PROJ\((\d+)\)|CONST\(([+-]?1)\))$")


def named_gate(name: str, n: int) -> BooleanFunction:
    """Truth table of a named gate with TRUE = +1.

    ``AND`` is +1 iff every input is +1, ``OR`` is +1 iff some input is +1,
    ``XOR`` is the parity character ``x_1 * ... * x_n``, ``PROJ(i)`` is
    ``x_i`` and ``CONST(+1)``/``CONST(-1)`` are constants.
    """
    m = _GATE.match(name.strip().upper().replace(" ", ""))
    if m is None:
        raise ValueError(f"unknown gate {name!r}")
    N = 1 << n
    head = m.group(1)
    if head == "AND":
        return BooleanFunction(n, 1 << (N - 1))
    if head == "OR":
        return BooleanFunction(n, full_mask(n) ^ 1)
    if head == "XOR":
        t = 0
        for mask in range(N):
            if (n - mask.bit_count()) % 2 == 0:
                t |= 1 << mask
        return BooleanFunction(n, t)
    if m.group(2) is not None:
        i = int(m.group(2))
        return BooleanFunction(n, var_mask(n, _check_var(n, i)))
    return BooleanFunction.constant(n, int(m.group(3)))


# .tt text format

def parse_tt(text: str) -> BooleanFunction:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if len(lines) != 2:
        raise TruthTableFormatError("expected an 'n=<int>' line followed by a table line")
    head = lines[0].replace(" ", "")
    if not head.startswith("n="):
        raise TruthTableFormatError(f"bad header {lines[0]!r}")
    try:
        n = int(head[2:])
    except ValueError:
        raise TruthTableFormatError(f"bad arity in {lines[0]!r}") from None
    if n < 0:
        raise TruthTableFormatError("arity must be non-negative")
    if n > max_arity():
        raise ArityError(f"n={n} exceeds the arity cap {max_arity()}")
    body = lines[1].replace(" ", "")
    if body.startswith("hex="):
        try:
            t = int(body[4:], 16)
        except ValueError:
            raise TruthTableFormatError("malformed hex table") from None
        if t >> (1 << n):
            raise TruthTableFormatError("hex table has bits beyond 2**n")
        return BooleanFunction(n, t)
    if len(body) != 1 << n or set(body) - {"0", "1"}:
        raise TruthTableFormatError(f"table must be {1 << n} characters from {{0,1}}")
    # character m is mask m, i.e. LSB first
    return BooleanFunction(n, int(body[::-1], 2))


def format_tt(f: BooleanFunction) -> str:
    return f"n={f.n}\n{f.to_bits()}\n"


def read_tt(path) -> BooleanFunction:
    return parse_tt(Path(path).read_text())


def write_tt(f: BooleanFunction, path) -> None:
    Path(path).write_text(format_tt(f))
