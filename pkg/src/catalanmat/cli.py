"""Command-line front end.

Usage:
    catalanmat compute --invariant kl --a 1 --b 1 --n 5 [--format json] [--cache DIR]
    catalanmat table --invariant whitney --n-max 7 [--golden] [--format csv]
    catalanmat verify --suite all [--max-ground 12] [--seed 42] [--out DIR]
    catalanmat conjecture [--a-max 3] [--b-max 3]

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 internal
invariant breach (partition sum produced non-integral data).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__, verify
from .exactalg import BiPoly, UniPoly
from .invariants import ValuativeIdentityViolated, catalan_invariant, panhandle_conjecture_check, volume_catalan

INVARIANTS = ("ehrhart", "volume", "tutte", "kl", "invkl", "z", "whitney")
SUITES = ("tables", "oracles", "subdivision", "counting", "gaps", "all")
CACHE_ENV = "CATALANMAT_CACHE"
TABLE_N_LIMIT = 20

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class ResultRecord:
    invariant: str
    a: int
    b: int
    n: int
    variable: str
    coefficients: list
    ground: int
    rank: int
    runtime_ms: float
    version: str = __version__
    seed: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        return cls(**json.loads(text))

    def value(self):
        """Rebuild the exact polynomial (or rational, for volume)."""
        if self.invariant == "volume":
            return Fraction(self.coefficients[0])
        if self.invariant == "tutte":
            return BiPoly({(i, j): Fraction(c) for i, j, c in self.coefficients})
        return UniPoly(Fraction(c) for c in self.coefficients)

    def text(self) -> str:
        value = self.value()
        if isinstance(value, Fraction):
            return str(value)
        if isinstance(value, BiPoly):
            return value.format()
        return value.format(self.variable)

    def csv_row(self) -> list[str]:
        value = self.value()
        if isinstance(value, Fraction):
            degree, cells = 0, [str(value)]
        elif isinstance(value, BiPoly):
            degree = value.total_degree
            cells = [f"{i}.{j}:{c}" for i, j, c in self.coefficients]
        else:
            degree, cells = value.degree, list(self.coefficients)
        return [self.invariant, str(self.a), str(self.b), str(self.n), str(degree)] + cells


def compute_record(invariant: str, a: int, b: int, n: int) -> ResultRecord:
    start = time.perf_counter()
    if invariant == "volume":
        coeffs = [str(volume_catalan(a, b, n))]
        variable = ""
    else:
        value = catalan_invariant(invariant, a, b, n)
        if isinstance(value, BiPoly):
            coeffs = [[i, j, str(c)] for (i, j), c in value.terms.items()]
            variable = "x,y"
        else:
            coeffs = [str(c) for c in value.coeffs]
            variable = "t"
    elapsed = (time.perf_counter() - start) * 1000.0
    return ResultRecord(invariant, a, b, n, variable, coeffs, n * (a + b), n * b, round(elapsed, 3))


def _cache_path(cache_dir: Path, invariant: str, a: int, b: int, n: int) -> Path:
    return cache_dir / f"v{__version__}-{invariant}-a{a}-b{b}-n{n}.json"


def cached_record(invariant: str, a: int, b: int, n: int, cache_dir: str | None) -> str:
    """JSON text of the record, read from or written to the cache."""
    if cache_dir:
        path = _cache_path(Path(cache_dir), invariant, a, b, n)
        if path.exists():
            return path.read_text()
    text = compute_record(invariant, a, b, n).to_json()
    if cache_dir:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    return text


def render(records: list[ResultRecord], fmt: str) -> str:
    if fmt == "json":
        return "\n".join(r.to_json() for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        width = max(len(r.csv_row()) for r in records) - 5
        writer.writerow(["invariant", "a", "b", "n", "degree"] + [f"coeff{i}" for i in range(width)])
        for r in records:
            writer.writerow(r.csv_row())
        return buf.getvalue().rstrip("\n")
    return "\n".join(r.text() for r in records)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cmd_compute(args) -> int:
    cache = args.cache or os.environ.get(CACHE_ENV)
    text = cached_record(args.invariant, args.a, args.b, args.n, cache)
    record = ResultRecord.from_json(text)
    print(text if args.format == "json" else render([record], args.format))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.n_max > TABLE_N_LIMIT:
        raise _UsageError(f"--n-max is limited to {TABLE_N_LIMIT}")
    if args.invariant == "volume" and args.golden:
        raise _UsageError("no golden data for volume")
    records = [compute_record(args.invariant, args.a, args.b, n) for n in range(2, args.n_max + 1)]
    if args.format == "text":
        print("\n".join(f"{r.text()}, n={r.n}" for r in records))
    else:
        print(render(records, args.format))
    if not args.golden:
        return EXIT_OK
    if (args.a, args.b) != (1, 1) or args.invariant not in verify.GOLDEN_TABLES:
        raise _UsageError("golden data exists only for kl, invkl, z, whitney with a = b = 1")
    rows = verify.GOLDEN_TABLES[args.invariant]
    bad = [r.n for r in records if r.n in rows and not verify.golden_matches(args.invariant, r.n, r.value())]
    for n in bad:
        print(f"golden mismatch: {args.invariant} n={n}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def _run_suite(name: str, max_ground: int, seed: int, trials: int) -> verify.VerifyReport:
    if name == "tables":
        return verify.tables_suite()
    if name == "oracles":
        report = verify.oracle_suite(max_ground)
        for extra in (verify.volume_suite(min(max_ground, 8)), verify.z_consistency_suite(), verify.kl_structure_suite()):
            report.merge(extra)
        return report
    if name == "counting":
        return verify.counting_suite()
    if name == "gaps":
        report = verify.VerifyReport("gaps")
        for n in range(1, min(max_ground, 12) + 1):
            report.merge(verify.gap_count_suite(n))
        return report
    if name == "subdivision":
        report = verify.VerifyReport("subdivision", seed=seed)
        for n in range(1, 6):
            report.merge(verify.subdivision_suite(1, 1, n, trials, seed))
        return report
    raise ValueError(name)


def cmd_verify(args) -> int:
    names = [s for s in SUITES if s != "all"] if args.suite == "all" else [args.suite]
    jobs = [(name, args.max_ground, args.seed, args.trials) for name in names]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_run_suite, *zip(*jobs)))
    else:
        reports = [_run_suite(*job) for job in jobs]
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    failed = False
    for report in reports:
        status = "PASS" if report.ok else "FAIL"
        print(f"{report.suite}: {status} ({len(report.cases)} cases, {report.runtime_ms:.0f} ms)")
        for case in report.failures:
            failed = True
            print(f"  failing: {case.instance}: expected {case.expected}, got {case.actual}", file=sys.stderr)
        if out_dir:
            (out_dir / f"{report.suite}.json").write_text(report.to_json())
    return EXIT_FAIL if failed else EXIT_OK


def cmd_conjecture(args) -> int:
    print("a,b,decision,lhs,rhs")
    for a in range(1, args.a_max + 1):
        for b in range(1, args.b_max + 1):
            rep = panhandle_conjecture_check(a, b)
            print(f"{a},{b},{rep.decision},{rep.lhs},{rep.rhs}")
    return EXIT_OK


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catalanmat", description="Valuative invariants of (a,b)-Catalan matroids.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one invariant")
    p.add_argument("--invariant", required=True, choices=INVARIANTS)
    p.add_argument("--a", type=_positive, default=1)
    p.add_argument("--b", type=_positive, default=1)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--cache", help=f"cache directory (default: ${CACHE_ENV})")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="rows n=2..n-max for a=b=1 (or given a, b)")
    p.add_argument("--invariant", required=True, choices=INVARIANTS)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--a", type=_positive, default=1)
    p.add_argument("--b", type=_positive, default=1)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--golden", action="store_true", help="diff against the published rows (n <= 7)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-ground", type=_positive, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out", help="directory for JSON reports")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="probe the panhandle Ehrhart identity")
    p.add_argument("--a-max", type=_positive, default=3)
    p.add_argument("--b-max", type=_positive, default=3)
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"catalanmat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValuativeIdentityViolated as exc:
        print(f"catalanmat: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
