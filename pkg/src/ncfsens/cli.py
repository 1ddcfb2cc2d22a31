"""Command line interface.

Exit codes: 0 all claims hold, 1 a claim was violated, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .boolfn import ArityError, TruthTableFormatError, format_tt, read_tt
from .canalizing import most_dominant_set
from .dyadic import rational_str
from .enumeration import EXHAUSTIVE_MAX_K, ncf_catalog, verify_bounds_sweep
from .reports import analyze, dumps, exact, write_figure
from .restriction import compose, restrict
from .sensitivity import as_decomposition, average_sensitivity, xi
from .spectral import transform

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
DEFAULT_SAMPLES = 1000


class UsageError(Exception):
    pass


def parse_k(text: str) -> list[int]:
    """``"3"``, ``"2..5"`` or ``"2,3,5"``."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                out += range(int(lo), int(hi) + 1)
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad --k value {text!r}") from None
    if not out or min(out) < 0:
        raise UsageError(f"bad --k value {text!r}")
    return out


def _load(path):
    try:
        return read_tt(path)
    except (TruthTableFormatError, ArityError) as exc:
        raise UsageError(f"{path}: {exc}") from None
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out) -> None:
    if out:
        try:
            with open(out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(str(exc)) from None
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    f = _load(args.path)
    report = analyze(f, source=str(args.path), include_spectrum=args.spectrum)
    text = report.to_text() if args.format == "text" else dumps(report.to_json())
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    ks = parse_k(args.k)
    results = []
    for k in ks:
        samples = args.samples
        if samples is None and k > EXHAUSTIVE_MAX_K:
            samples = DEFAULT_SAMPLES
        if k == 0:
            raise UsageError("verify needs k >= 1")
        results.append(verify_bounds_sweep(k, samples=samples, seed=args.seed, jobs=args.jobs))
    ok = all(r.ok for r in results)
    if args.format == "text":
        lines = []
        for r in results:
            d = r.to_json()
            lines.append(
                f"k={r.k:<3} {r.mode:<10} ncfs={r.count_total:<6} "
                f"as in [{d['as_min']['exact']}, {d['as_max']['exact']}] "
                f"closed form [{d['closed_form_lower']['exact']}, {d['closed_form_upper']['exact']}] "
                f"{'PASS' if r.ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    else:
        text = dumps({"ok": ok, "results": [r.to_json() for r in results]})
    _emit(text, args.out)
    if not ok:
        for r in results:
            for n, t, claim in r.violations:
                print(f"violation k={r.k} n={n} table={t}: {claim}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_figure(args) -> int:
    ks = parse_k(args.k)
    try:
        step = Fraction(args.grid_step)
    except ValueError:
        raise UsageError(f"bad --grid-step {args.grid_step!r}") from None
    if step <= 0:
        raise UsageError("--grid-step must be positive")
    try:
        curves, scatter = write_figure(args.out, ks, step)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    print(curves)
    print(scatter)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    ks = parse_k(args.k)
    if len(ks) != 1 or not 1 <= ks[0] <= EXHAUSTIVE_MAX_K:
        raise UsageError(f"enumerate needs a single k in 1..{EXHAUSTIVE_MAX_K}")
    k = ks[0]
    cat = ncf_catalog(k)
    records = []
    for t in sorted(cat):
        rec = cat[t]
        if args.all_most_dominant and not (k > 1 and len(most_dominant_set(rec.function)) == k):
            continue
        records.append(rec)
    if args.format == "json":
        text = "".join(json.dumps({"n": r.function.n, "table": r.function.to_bits(),
                                   "schema": r.schema.to_json()}, sort_keys=True) + "\n"
                       for r in records)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "table", "k", "pi", "alpha", "beta"])
        for r in records:
            s = r.schema
            w.writerow([r.function.n, r.function.to_bits(), s.k,
                        " ".join(map(str, s.pi)), " ".join(map(str, s.alpha)), " ".join(map(str, s.beta))])
        text = buf.getvalue()
    else:
        text = "\n".join(format_tt(r.function) for r in records)
    _emit(text, args.out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    f = _load(args.path)
    i = args.var
    if not 1 <= i <= f.n:
        raise UsageError(f"--var must be in 1..{f.n}")
    plus, minus = restrict(f, i, 1), restrict(f, i, -1)
    sp, sm, s = transform(plus), transform(minus), transform(f)
    lhs, rhs = as_decomposition(f, i)
    composed = compose(sp, sm, i)
    data = {
        "var": i,
        "relevant": bool(plus != minus),
        "restriction_plus": plus.to_bits(),
        "restriction_minus": minus.to_bits(),
        "as": exact(lhs),
        "as_plus": exact(average_sensitivity(plus)),
        "as_minus": exact(average_sensitivity(minus)),
        "xi": exact(xi(sp, sm)),
        "rhs": exact(rhs),
        "decomposition_holds": lhs == rhs,
        "spectrum_plus": sp.to_json(),
        "spectrum_minus": sm.to_json(),
        "composition_matches": composed == s,
        "zero_coeff": exact(s[0]),
        "zero_coeff_from_halves": exact((sp[0] + sm[0]).halve()),
    }
    if args.format == "text":
        text = (f"variable {i} ({'relevant' if data['relevant'] else 'irrelevant'})\n"
                f"as(f) = {rational_str(lhs)}\n"
                f"as(f+)/2 + as(f-)/2 + xi(f+,f-) = ({data['as_plus']['exact']})/2 + "
                f"({data['as_minus']['exact']})/2 + {data['xi']['exact']} = {rational_str(rhs)}\n"
                f"decomposition {'holds' if data['decomposition_holds'] else 'FAILS'}\n"
                f"composition from restricted spectra {'matches' if data['composition_matches'] else 'DIFFERS'}\n")
    else:
        text = dumps(data)
    _emit(text, args.out)
    return EXIT_OK if data["decomposition_holds"] and data["composition_matches"] else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncfsens", description="Exact spectral analysis of nested canalizing functions")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one .tt truth table")
    a.add_argument("path")
    a.add_argument("--spectrum", action="store_true", help="include all 2^n coefficients")
    a.add_argument("--format", choices=["json", "text"], default="json")
    a.add_argument("--out")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="sweep NCFs and check every bound")
    v.add_argument("--k", default="2..5")
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=["json", "text"], default="json")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("figure", help="write bound curves and NCF scatter as CSV")
    g.add_argument("--k", default="5")
    g.add_argument("--grid-step", default="0.01")
    g.add_argument("--out", default=".")
    g.set_defaults(func=cmd_figure)

    e = sub.add_parser("enumerate", help="list all NCFs with k relevant variables")
    e.add_argument("--k", required=True)
    e.add_argument("--all-most-dominant", action="store_true")
    e.add_argument("--format", choices=["json", "text", "csv"], default="text")
    e.add_argument("--out")
    e.set_defaults(func=cmd_enumerate)

    d = sub.add_parser("decompose", help="restriction breakdown of as(f) in one variable")
    d.add_argument("path")
    d.add_argument("--var", type=int, required=True)
    d.add_argument("--format", choices=["json", "text"], default="json")
    d.add_argument("--out")
    d.set_defaults(func=cmd_decompose)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ncfsens: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
