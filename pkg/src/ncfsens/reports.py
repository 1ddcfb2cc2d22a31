"""Report assembly: per-function analysis and the figure data files."""

from __future__ import annotations

import csv
import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .bounds import (AS_CAP, bound_report, combined_bound, ncf_as_bounds, unate_bound)
from .boolfn import BooleanFunction, is_unate, relevant_variables, unate_orientation
from .canalizing import canalizing_triples, is_ncf, most_dominant_set
from .dyadic import rational_str
from .enumeration import EXHAUSTIVE_MAX_K, ncf_catalog
from .sensitivity import average_sensitivity, average_sensitivity_spectral, influences
from .spectral import transform


def exact(value) -> dict:
    return {"exact": rational_str(value), "float": float(value)}


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed indentation."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def table_hash(f: BooleanFunction) -> str:
    return hashlib.sha256(f"n={f.n}\n{f.to_bits()}\n".encode()).hexdigest()


@dataclass
class AnalysisReport:
    n: int
    table_sha256: str
    source: str | None
    relevant: tuple
    triples: list
    schema: object
    most_dominant: tuple | None
    spectrum: dict
    influences: list
    as_value: object
    zero_coeff: object
    unate: bool
    orientation: dict
    bounds: object = None
    extra: dict = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.relevant)

    @property
    def is_ncf(self) -> bool:
        return self.schema is not None

    def to_json(self) -> dict:
        return {
            "function": {"n": self.n, "table_sha256": self.table_sha256, "source": self.source},
            "relevant": list(self.relevant),
            "k": self.k,
            "canalizing_triples": [{"i": t.i, "a": t.a, "b": t.b} for t in self.triples],
            "is_ncf": self.is_ncf,
            "schema": self.schema.to_json() if self.schema is not None else None,
            "most_dominant": list(self.most_dominant) if self.most_dominant is not None else None,
            "spectrum": self.spectrum,
            "influences": {str(i): exact(v) for i, v in enumerate(self.influences, 1)},
            "as": exact(self.as_value),
            "zero_coeff": exact(self.zero_coeff),
            "unate": self.unate,
            "orientation": {str(i): o for i, o in self.orientation.items()},
            "bounds": self.bounds.to_json() if self.bounds is not None else None,
        }

    def to_text(self) -> str:
        lines = [
            f"function     n={self.n} sha256={self.table_sha256[:16]}"
            + (f" source={self.source}" if self.source else ""),
            f"relevant     {list(self.relevant)} (k={self.k})",
            f"canalizing   " + (", ".join(f"<{t.i}:{t.a:+d}:{t.b:+d}>" for t in self.triples) or "none"),
            f"ncf          " + ("yes " + json.dumps(self.schema.to_json()) if self.is_ncf else "no"),
        ]
        if self.most_dominant is not None:
            lines.append(f"most dominant {list(self.most_dominant)}")
        lines.append(f"f^(empty)    {rational_str(self.zero_coeff)}")
        lines.append(f"as           {rational_str(self.as_value)} = {float(self.as_value):.12g}")
        for i, v in enumerate(self.influences, 1):
            lines.append(f"  I_{i:<3}      {rational_str(v)}")
        lines.append(f"unate        {'yes' if self.unate else 'no'}")
        lines.append(f"nonzero coefficients: {self.spectrum['nonzero']}")
        if self.bounds is not None:
            b = self.bounds
            lines.append(f"bounds       {rational_str(b.lower)} <= as <= {rational_str(b.upper)};"
                         f" combined {rational_str(b.combined)}")
            for name, ok in sorted(b.verdicts.items()):
                lines.append(f"  {name:<14} {'pass' if ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


def analyze(f: BooleanFunction, source: str | None = None, include_spectrum: bool = False) -> AnalysisReport:
    s = transform(f)
    inf = influences(f)
    as_value = average_sensitivity(f)
    if average_sensitivity_spectral(s) != as_value:  # pragma: no cover - consistency guard
        raise AssertionError("combinatorial and spectral average sensitivity disagree")
    spec = s.to_json(include_zeros=include_spectrum)
    spec["nonzero"] = int((s.raw != 0).sum())
    schema = is_ncf(f)
    return AnalysisReport(
        n=f.n,
        table_sha256=table_hash(f),
        source=source,
        relevant=relevant_variables(f),
        triples=canalizing_triples(f),
        schema=schema,
        most_dominant=tuple(sorted(most_dominant_set(f))) if schema is not None else None,
        spectrum=spec,
        influences=inf,
        as_value=as_value,
        zero_coeff=s[0],
        unate=is_unate(f),
        orientation=unate_orientation(f),
        bounds=bound_report(f, schema) if schema is not None else None,
    )


# figure data

def grid(step) -> list[Fraction]:
    """Points ``-1, -1 + step, ...`` up to ``+1`` inclusive, exactly."""
    step = Fraction(str(step)) if isinstance(step, float) else Fraction(step)
    if step <= 0:
        raise ValueError("grid step must be positive")
    pts = []
    c = Fraction(-1)
    while c <= 1:
        pts.append(c)
        c += step
    return pts


def curve_columns(ks) -> list[str]:
    cols = ["zero_coeff", "combined_bound", "cap"]
    for k in ks:
        cols += [f"unate_bound_k{k}", f"theorem2_lower_k{k}", f"theorem2_upper_k{k}"]
    return cols + ["kkl88_lower"]


def curve_rows(ks, step) -> list[list]:
    """Exact curve values; the unate curve is float and the reserved column empty."""
    rows = []
    for c in grid(step):
        row = [c, combined_bound(abs(c)), AS_CAP]
        for k in ks:
            lo, up = ncf_as_bounds(k)
            row += [unate_bound(k, c), lo, up]
        rows.append(row + [None])
    return rows


SCATTER_COLUMNS = ["k", "zero_coeff", "as", "zero_coeff_exact", "as_exact",
                   "all_most_dominant", "alternating", "table_hex"]


def scatter_rows(ks) -> list[list]:
    rows = []
    for k in ks:
        if k > EXHAUSTIVE_MAX_K:
            continue
        cat = ncf_catalog(k)
        for t in sorted(cat):
            rec = cat[t]
            f = rec.function
            s = transform(f)
            z, a = s[0], average_sensitivity(f)
            amd = k > 1 and len(most_dominant_set(f)) == k
            rows.append([k, float(z), float(a), rational_str(z), rational_str(a),
                         str(amd).lower(), str(rec.alternating).lower(), f"{t:x}"])
    return rows


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (Fraction, float)):
        return repr(float(v))
    return str(v)


def write_csv(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])


def write_figure(out_dir, ks, step) -> tuple[Path, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    curves, scatter = out / "figure_curves.csv", out / "figure_scatter.csv"
    write_csv(curves, curve_columns(ks), curve_rows(ks, step))
    write_csv(scatter, SCATTER_COLUMNS, scatter_rows(ks))
    return curves, scatter
