"""Canalizing and nested canalizing functions (NCFs)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolfn import BooleanFunction, full_mask, var_mask
from .restriction import restrict_table
from .spectral import Spectrum


class NotNcfError(ValueError):
    pass


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class CanalizingTriple:
    """Fixing ``x_i = a`` forces the output ``b``."""

    i: int
    a: int
    b: int


@dataclass(frozen=True)
class NcfSchema:
    """A nested canalizing order ``pi`` with canalizing inputs ``alpha`` and outputs ``beta``.

    Step ``j`` reads: if ``x_{pi[j]} == alpha[j]`` the output is ``beta[j]``,
    otherwise continue with step ``j + 1``.  After the last step the output is
    ``-beta[k-1]``.
    """

    k: int
    pi: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        for name in ("pi", "alpha", "beta"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))
        if not (self.k == len(self.pi) == len(self.alpha) == len(self.beta)):
            raise SchemaError("k, pi, alpha and beta must have matching lengths")
        if len(set(self.pi)) != self.k:
            raise SchemaError("pi repeats a variable")
        if any(v not in (1, -1) for v in self.alpha + self.beta):
            raise SchemaError("alpha and beta entries must be +-1")
        if any(i < 1 for i in self.pi):
            raise SchemaError("variable indices are 1-based")

    @classmethod
    def from_steps(cls, steps) -> "NcfSchema":
        steps = list(steps)
        return cls(len(steps), tuple(s[0] for s in steps), tuple(s[1] for s in steps),
                   tuple(s[2] for s in steps))

    def steps(self):
        return zip(self.pi, self.alpha, self.beta)

    def to_json(self) -> dict:
        return {"k": self.k, "pi": list(self.pi), "alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_json(cls, data: dict) -> "NcfSchema":
        return cls(data["k"], data["pi"], data["alpha"], data["beta"])


def canalized_value(table: int, n: int, p: int, a: int) -> int | None:
    """Output forced by bit position ``p`` encoding ``a``, or None if not constant."""
    half = restrict_table(table, n, p, a)
    if half == 0:
        return -1
    if half == full_mask(n):
        return 1
    return None


def canalizing_triples(f: BooleanFunction) -> list[CanalizingTriple]:
    out = []
    for i in range(1, f.n + 1):
        for a in (1, -1):
            b = canalized_value(f.table, f.n, i - 1, a)
            if b is not None:
                out.append(CanalizingTriple(i, a, b))
    return out


def _relevant_positions(table: int, n: int) -> list[int]:
    full = full_mask(n)
    out = []
    for p in range(n):
        M = var_mask(n, p)
        if ((table & M) >> (1 << p)) != (table & ~M & full):
            out.append(p)
    return out


def _search(table: int, n: int, memo: dict):
    """Steps ``[(i, a, b), ...]`` certifying ``table`` as an NCF, else None."""
    rel = _relevant_positions(table, n)
    if not rel:
        return []
    if len(rel) == 1:
        p = rel[0]
        return [(p + 1, 1, canalized_value(table, n, p, 1))]
    if table in memo:
        return memo[table]
    found = None
    for p in rel:
        for a in (1, -1):
            b = canalized_value(table, n, p, a)
            if b is None:
                continue
            sub = _search(restrict_table(table, n, p, -a), n, memo)
            if sub is not None:
                found = [(p + 1, a, b)] + sub
                break
        if found is not None:
            break
    memo[table] = found
    return found


def is_ncf(f: BooleanFunction) -> NcfSchema | None:
    """A witness schema if ``f`` is nested canalizing, else None.

    Functions with at most one relevant variable are NCFs by definition; a
    constant gets the empty schema.
    """
    steps = _search(f.table, f.n, {})
    return None if steps is None else NcfSchema.from_steps(steps)


def _first_steps(f: BooleanFunction, memo: dict) -> dict[int, tuple[int, int, list]]:
    rel = _relevant_positions(f.table, f.n)
    if len(rel) == 1:
        p = rel[0]
        return {p + 1: (1, canalized_value(f.table, f.n, p, 1), [])}
    out = {}
    for p in rel:
        for a in (1, -1):
            b = canalized_value(f.table, f.n, p, a)
            if b is None:
                continue
            sub = _search(restrict_table(f.table, f.n, p, -a), f.n, memo)
            if sub is not None:
                out[p + 1] = (a, b, sub)
                break
    return out


def most_dominant_triples(f: BooleanFunction) -> dict[int, CanalizingTriple]:
    """For each most dominant variable, the canalizing triple that opens an order."""
    if is_ncf(f) is None:
        raise NotNcfError("function is not nested canalizing")
    return {i: CanalizingTriple(i, a, b) for i, (a, b, _) in _first_steps(f, {}).items()}


def most_dominant_set(f: BooleanFunction) -> frozenset[int]:
    """Variables that can stand first in some nested canalizing order."""
    return frozenset(most_dominant_triples(f))


def schema_starting_with(f: BooleanFunction, i: int) -> NcfSchema | None:
    first = _first_steps(f, {}).get(i)
    if first is None:
        return None
    a, b, sub = first
    return NcfSchema.from_steps([(i, a, b)] + sub)


def build_ncf(n: int, schema: NcfSchema) -> BooleanFunction:
    """The cascade function of ``schema`` on ``n`` variables."""
    if schema.k < 1:
        raise SchemaError("build_ncf needs k >= 1")
    if max(schema.pi) > n:
        raise SchemaError(f"schema uses a variable beyond n={n}")
    full = full_mask(n)
    t = full if schema.beta[-1] == -1 else 0
    for i, a, b in reversed(list(schema.steps())):
        rows = var_mask(n, i - 1)
        if a == -1:
            rows ^= full
        t = (t | rows) if b == 1 else (t & ~rows)
    return BooleanFunction(n, t)


def follows_schema(f: BooleanFunction, schema: NcfSchema) -> bool:
    """Truth-table cascade check of ``schema`` against ``f``."""
    if schema.k == 0:
        return f.table in (0, full_mask(f.n))
    if max(schema.pi) > f.n:
        return False
    return build_ncf(f.n, schema) == f


def check_ncf_spectral(s: Spectrum, schema: NcfSchema) -> bool:
    """Spectral nested-canalizing condition, one equation per step ``j``.

    ``sum_{S <= [j]} alpha_j^{|S & {j}|} chi_{S - {j}}(-alpha) s[pi(S)] == beta_j``
    """
    if schema.k and max(schema.pi) > s.n:
        return False
    masks = np.zeros(1, dtype=np.int64)
    signs = np.ones(1, dtype=np.int64)
    one = 1 << s.scale
    raw = s.raw
    for i, a, b in schema.steps():
        bit = 1 << (i - 1)
        total = int(np.dot(signs, raw[masks])) + a * int(np.dot(signs, raw[masks | bit]))
        if total != b * one:
            return False
        masks = np.concatenate((masks, masks | bit))
        signs = np.concatenate((signs, -a * signs))
    return True


def count_all_most_dominant(k: int) -> int:
    """Number of NCFs in ``k`` variables whose variables are all most dominant."""
    if k <= 1:
        raise ValueError("defined for k > 1")
    return 2 ** (k + 1)


def is_canalizing(f: BooleanFunction) -> bool:
    return bool(canalizing_triples(f))

