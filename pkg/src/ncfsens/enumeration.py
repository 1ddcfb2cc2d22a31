"""Exhaustive and seeded-random generation of functions and NCFs, and the bound sweep.

Random sampling uses numpy's PCG64 generator.  Sample ``j`` of a sweep seeded
with ``seed`` draws from ``PCG64(SeedSequence([seed, j]))``, so results do not
depend on the number of worker processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

import numpy as np

from .bounds import (AS_CAP, alternating_beta, bound_report, construct_extremal_lower,
                     construct_extremal_upper, ncf_as_bounds)
from .boolfn import BooleanFunction, full_mask, is_unate, relevant_variables
from .canalizing import NcfSchema, build_ncf, check_ncf_spectral, is_ncf, most_dominant_set
from .dyadic import rational_str
from .sensitivity import (as_ncf_recursive, average_sensitivity_combinatorial,
                          average_sensitivity_spectral, zero_coeff_recursive)
from .spectral import transform, zero_coefficient

EXHAUSTIVE_MAX_N = 4
EXHAUSTIVE_MAX_K = 5


def make_rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def enumerate_functions(n: int):
    """Every function on ``n`` variables, in table-integer order."""
    if not 0 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration needs n <= {EXHAUSTIVE_MAX_N}")
    for t in range(1 << (1 << n)):
        yield BooleanFunction(n, t)


def random_function(n: int, rng: np.random.Generator) -> BooleanFunction:
    N = 1 << n
    t = int.from_bytes(rng.bytes(max(1, N // 8)), "little") & full_mask(n)
    return BooleanFunction(n, t)


def random_functions(n: int, count: int, seed) -> list[BooleanFunction]:
    rng = make_rng(seed)
    return [random_function(n, rng) for _ in range(count)]


def random_ncf(k: int, seed, n: int | None = None) -> tuple[BooleanFunction, NcfSchema]:
    """A random NCF: uniform order (Fisher-Yates), i.i.d. uniform alpha and beta."""
    n = k if n is None else n
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rng = make_rng(seed)
    pi = tuple(int(v) + 1 for v in rng.permutation(n)[:k])
    alpha = tuple(int(v) for v in 2 * rng.integers(0, 2, size=k) - 1)
    beta = tuple(int(v) for v in 2 * rng.integers(0, 2, size=k) - 1)
    schema = NcfSchema(k, pi, alpha, beta)
    return build_ncf(n, schema), schema


@dataclass
class NcfRecord:
    function: BooleanFunction
    schema: NcfSchema
    alternating: bool = False


def ncf_catalog(k: int) -> dict[int, NcfRecord]:
    """All NCFs on ``n = k`` variables with ``k`` relevant, keyed by table.

    Generated from every ``(pi, alpha, beta)`` and deduplicated; the stored
    schema is the first one that produced the table.
    """
    if not 1 <= k <= EXHAUSTIVE_MAX_K:
        raise ValueError(f"exhaustive NCF enumeration needs 1 <= k <= {EXHAUSTIVE_MAX_K}")
    alternating = {alternating_beta(k, 1), alternating_beta(k, -1)}
    out: dict[int, NcfRecord] = {}
    signs = list(product((1, -1), repeat=k))
    for pi in permutations(range(1, k + 1)):
        for alpha in signs:
            for beta in signs:
                schema = NcfSchema(k, pi, alpha, beta)
                f = build_ncf(k, schema)
                rec = out.get(f.table)
                if rec is None:
                    rec = out[f.table] = NcfRecord(f, schema)
                if beta in alternating:
                    rec.alternating = True
    return out


def enumerate_ncfs(k: int):
    """``(function, schema)`` for every NCF with exactly ``k`` relevant variables, by table."""
    cat = ncf_catalog(k)
    for t in sorted(cat):
        yield cat[t].function, cat[t].schema


def enumerate_ncfs_by_filter(k: int) -> list[BooleanFunction]:
    return [f for f in enumerate_functions(k)
            if len(relevant_variables(f)) == k and is_ncf(f) is not None]


@dataclass
class SweepResult:
    k: int
    mode: str
    count_total: int = 0
    count_all_most_dominant: int = 0
    count_alternating: int = 0
    as_min: Fraction | None = None
    as_max: Fraction | None = None
    zero_min: Fraction | None = None
    zero_max: Fraction | None = None
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        lower, upper = ncf_as_bounds(self.k)

        def q(v):
            return None if v is None else {"exact": rational_str(v), "float": float(v)}
        return {
            "k": self.k,
            "mode": self.mode,
            "count_total": self.count_total,
            "count_all_most_dominant": self.count_all_most_dominant,
            "count_alternating": self.count_alternating,
            "as_min": q(self.as_min),
            "as_max": q(self.as_max),
            "zero_min": q(self.zero_min),
            "zero_max": q(self.zero_max),
            "closed_form_lower": q(lower),
            "closed_form_upper": q(upper),
            "attains_lower": self.as_min == lower,
            "attains_upper": self.as_max == upper,
            "violations": [{"table": t, "n": n, "claim": c} for n, t, c in self.violations],
            "ok": self.ok,
        }


def check_ncf(f: BooleanFunction, schema: NcfSchema) -> tuple[Fraction, Fraction, bool, list[str]]:
    """Run every per-function claim; returns ``(as, f^(empty), all_most_dominant, failures)``."""
    failures = []
    k = schema.k
    s = transform(f)
    as_comb = average_sensitivity_combinatorial(f)
    if average_sensitivity_spectral(s) != as_comb:
        failures.append("as_paths_agree")
    z = zero_coefficient(f)
    if s[0] != z:
        failures.append("zero_coeff_paths_agree")
    if len(relevant_variables(f)) != k:
        failures.append("relevant_count")
    report = bound_report(f, schema)
    failures += [name for name, ok in sorted(report.verdicts.items()) if not ok]
    if not is_unate(f):
        failures.append("unate")
    if not check_ncf_spectral(s, schema):
        failures.append("spectral_schema")
    if as_ncf_recursive(f, schema) != as_comb:
        failures.append("as_recursion")
    if zero_coeff_recursive(f, schema) != z:
        failures.append("zero_recursion")
    amd = k > 1 and len(most_dominant_set(f)) == k
    return report.as_value, abs(Fraction(z)), amd, failures


def _check_item(item):
    n, table, schema, alternating = item
    f = BooleanFunction(n, table)
    as_value, zabs, amd, failures = check_ncf(f, schema)
    return table, n, as_value, zabs, amd, alternating, failures


def _sweep_items(k: int, samples: int | None, seed, n: int | None):
    if samples is None:
        for rec in sorted(ncf_catalog(k).values(), key=lambda r: r.function.table):
            yield rec.function.n, rec.function.table, rec.schema, rec.alternating
        return
    alt = {alternating_beta(k, 1), alternating_beta(k, -1)}
    for j in range(samples):
        f, schema = random_ncf(k, [seed, j], n)
        yield f.n, f.table, schema, schema.beta in alt


def verify_bounds_sweep(k: int, samples: int | None = None, seed: int = 0,
                        jobs: int = 1, n: int | None = None) -> SweepResult:
    """Check every NCF claim on all NCFs of ``k`` variables (or on seeded samples).

    Violations are collected, never raised.  Exhaustive sweeps additionally
    require the extremes to hit the closed-form bounds, and every sweep checks
    that the two extremal constructions attain them.
    """
    if samples is None and k > EXHAUSTIVE_MAX_K:
        raise ValueError(f"k={k} needs sampling (exhaustive only up to {EXHAUSTIVE_MAX_K})")
    mode = "exhaustive" if samples is None else "sampled"
    res = SweepResult(k, mode)
    items = list(_sweep_items(k, samples, seed, n))
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_item, items, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        results = map(_check_item, items)
    seen = set()
    for table, fn, as_value, zabs, amd, alternating, failures in results:
        key = (fn, table)
        if key in seen:
            continue
        seen.add(key)
        res.count_total += 1
        res.count_all_most_dominant += amd
        res.count_alternating += alternating
        res.as_min = as_value if res.as_min is None else min(res.as_min, as_value)
        res.as_max = as_value if res.as_max is None else max(res.as_max, as_value)
        res.zero_min = zabs if res.zero_min is None else min(res.zero_min, zabs)
        res.zero_max = zabs if res.zero_max is None else max(res.zero_max, zabs)
        res.violations += [(fn, f"{table:x}", c) for c in failures]

    lower, upper = ncf_as_bounds(k)
    if mode == "exhaustive":
        if res.as_min != lower:
            res.violations.append((k, "-", "min_as_equals_lower_bound"))
        if res.as_max != upper:
            res.violations.append((k, "-", "max_as_equals_upper_bound"))
        if k > 1 and res.count_all_most_dominant != 2 ** (k + 1):
            res.violations.append((k, "-", "all_most_dominant_count"))
    low_f = construct_extremal_lower(k)
    up_f = construct_extremal_upper(k)
    if Fraction(average_sensitivity_combinatorial(low_f)) != lower:
        res.violations.append((k, f"{low_f.table:x}", "extremal_lower_attains"))
    if Fraction(average_sensitivity_combinatorial(up_f)) != upper:
        res.violations.append((k, f"{up_f.table:x}", "extremal_upper_attains"))
    if upper >= AS_CAP:
        res.violations.append((k, "-", "upper_below_cap"))
    return res
