"""Brute-force oracles and the identity suites that check the closed forms.

The oracles here only use matroid ranks, flats and lattice counting; they
never call the uniform-matroid formulas they are checking.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from . import combinat
from .exactalg import BiPoly, UniPoly
from .invariants import (
    catalan_invariant,
    kl_uniform,
    volume_catalan,
    zpoly_from_kl,
    zpoly_uniform,
)
from .matroid import (
    EnumerationTooLarge,
    MatroidExpr,
    catalan,
    enumerate_bases,
    flats_by_rank,
    rank_table,
)
from .polytope import ehrhart_interpolate, subdivision_check, system_of

TUTTE_CAP = 16
WHITNEY_CAP = 14

# Coefficients in ascending degree; a dict means only some are printed.
GOLDEN_TABLES: dict[str, dict[int, object]] = {
    "kl": {
        2: [1],
        3: [1, 3],
        4: [1, 15],
        5: [1, 55, 45],
        6: [1, 185, 473],
        7: [1, 612, 3239, 1092],
    },
    "invkl": {
        2: [2],
        3: [5, 3],
        4: [14, 19],
        5: [42, 92, 45],
        6: [132, 405, 396],
        7: [429, 1705, 2491, 1092],
    },
    "z": {
        2: [1, 3, 1],
        3: [1, 8, 8, 1],
        4: [1, 22, 50, 22, 1],
        5: [1, 64, 278, 278, 64, 1],
        6: [1, 196, 1433, 2619, 1433, 196, 1],
        7: {0: 1, 4: 20596, 5: 7010, 6: 625, 7: 1},
    },
    "whitney": {
        2: [1, 3, 1],
        3: [1, 5, 8, 1],
        4: [1, 7, 19, 22, 1],
        5: [1, 9, 34, 67, 64, 1],
        6: [1, 11, 53, 144, 232, 196, 1],
        7: [1, 13, 76, 261, 573, 804, 625, 1],
    },
}


@dataclass
class Case:
    instance: str
    expected: str
    actual: str
    passed: bool


@dataclass
class VerifyReport:
    suite: str
    seed: int | None = None
    cases: list[Case] = field(default_factory=list)
    runtime_ms: float = 0.0

    def add(self, instance: str, expected, actual) -> Case:
        case = Case(instance, _show(expected), _show(actual), expected == actual)
        self.cases.append(case)
        return case

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        self.cases.extend(other.cases)
        self.runtime_ms += other.runtime_ms
        return self

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": [
                {"instance": c.instance, "expected": c.expected, "actual": c.actual, "pass": c.passed}
                for c in self.cases
            ],
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "VerifyReport":
        return cls(
            data["suite"],
            data.get("seed"),
            [Case(c["instance"], c["expected"], c["actual"], c["pass"]) for c in data["cases"]],
            data.get("runtime_ms", 0.0),
        )

    @classmethod
    def from_json(cls, text: str) -> "VerifyReport":
        return cls.from_dict(json.loads(text))


def _show(value) -> str:
    if isinstance(value, (UniPoly, BiPoly)):
        return value.format()
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    return str(value)


class _timed:
    def __init__(self, report: VerifyReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.runtime_ms += (time.perf_counter() - self.start) * 1000.0
        return False


# ---------------------------------------------------------------- oracles


def tutte_bruteforce(M: MatroidExpr) -> BiPoly:
    """Corank-nullity expansion over every subset of the ground set."""
    if M.n > TUTTE_CAP:
        raise EnumerationTooLarge(f"ground {M.n} exceeds Tutte cap {TUTTE_CAP}")
    ranks = rank_table(M, TUTTE_CAP)
    full = M.k
    tally: dict[tuple[int, int], int] = {}
    for mask, r in enumerate(ranks):
        key = (full - r, bin(mask).count("1") - r)
        tally[key] = tally.get(key, 0) + 1
    xm1 = BiPoly({(1, 0): 1, (0, 0): -1})
    ym1 = BiPoly({(0, 1): 1, (0, 0): -1})
    total = BiPoly()
    for (corank, nullity), count in tally.items():
        total = total + (xm1**corank) * (ym1**nullity) * count
    return total


def whitney_bruteforce(M: MatroidExpr) -> UniPoly:
    if M.n > WHITNEY_CAP:
        raise EnumerationTooLarge(f"ground {M.n} exceeds flat cap {WHITNEY_CAP}")
    return UniPoly(flats_by_rank(M, WHITNEY_CAP))


def ehrhart_oracle(M: MatroidExpr) -> UniPoly:
    return ehrhart_interpolate(system_of(M)).poly


def narayana_bruteforce(m: int) -> UniPoly:
    """Dyck paths of semilength m counted by peaks: sum_j N(m, j) t^(j-1)."""
    counts = [0] * m
    for ups in combinations(range(2 * m), m):
        steps = [0] * (2 * m)
        for i in ups:
            steps[i] = 1
        height, ok = 0, True
        for s in steps:
            height += 1 if s else -1
            if height < 0:
                ok = False
                break
        if not ok:
            continue
        peaks = sum(1 for i in range(2 * m - 1) if steps[i] and not steps[i + 1])
        counts[peaks - 1] += 1
    return UniPoly(counts)


# ---------------------------------------------------------------- suites


def catalan_instances(max_ground: int) -> list[tuple[int, int, int]]:
    """All (a, b, n) with n(a+b) <= max_ground, sorted by ground size."""
    out = []
    for n in range(1, max_ground // 2 + 1):
        for a in range(1, max_ground + 1):
            for b in range(1, max_ground + 1):
                if n * (a + b) <= max_ground:
                    out.append((a, b, n))
    return sorted(out, key=lambda t: (t[2] * (t[0] + t[1]), t))


_ORACLES = {
    "tutte": tutte_bruteforce,
    "whitney": whitney_bruteforce,
    "ehrhart": ehrhart_oracle,
}


def valuative_identity_suite(a: int, b: int, n: int, families: Iterable[str] = ("tutte", "whitney", "ehrhart")) -> VerifyReport:
    report = VerifyReport("valuative")
    with _timed(report):
        M = catalan(a, b, n)
        for name in families:
            if name not in _ORACLES:
                raise ValueError(f"no brute-force oracle for {name!r}")
            report.add(f"{name}(C_{n}^{{{a},{b}}})", _ORACLES[name](M), catalan_invariant(name, a, b, n))
    return report


def oracle_suite(max_ground: int = 12, ehrhart_max_ground: int = 8) -> VerifyReport:
    report = VerifyReport("oracles")
    for a, b, n in catalan_instances(max_ground):
        families = ["tutte", "whitney"]
        if n * (a + b) <= ehrhart_max_ground:
            families.append("ehrhart")
        report.merge(valuative_identity_suite(a, b, n, families))
        with _timed(report):
            M = catalan(a, b, n)
            if M.n <= 12:
                T = catalan_invariant("tutte", a, b, n)
                report.add(f"T(1,1)=#bases C_{n}^{{{a},{b}}}", len(enumerate_bases(M)), T.evaluate(1, 1))
    return report


def volume_suite(max_ground: int = 8) -> VerifyReport:
    report = VerifyReport("volume")
    with _timed(report):
        for a, b, n in catalan_instances(max_ground):
            N = n * (a + b)
            lead = catalan_invariant("ehrhart", a, b, n).leading
            counted = ehrhart_interpolate(system_of(catalan(a, b, n))).leading
            report.add(f"vol C_{n}^{{{a},{b}}} partition sum", volume_catalan(a, b, n), lead)
            report.add(f"vol C_{n}^{{{a},{b}}} lattice count", volume_catalan(a, b, n), counted)
            report.add(
                f"n(N-1)! lead = A(N-1,nb) C_{n}^{{{a},{b}}}",
                combinat.eulerian(N - 1, n * b),
                n * factorial(N - 1) * lead,
            )
    return report


def golden_matches(name: str, n: int, poly: UniPoly) -> bool:
    gold = GOLDEN_TABLES[name][n]
    if isinstance(gold, dict):
        return all(poly[d] == c for d, c in gold.items())
    return poly == UniPoly(gold)


def tables_suite(n_max: int = 7) -> VerifyReport:
    report = VerifyReport("tables")
    with _timed(report):
        for name, rows in GOLDEN_TABLES.items():
            for n in sorted(rows):
                if n > n_max:
                    continue
                poly = catalan_invariant(name, 1, 1, n)
                gold = rows[n]
                expected = (
                    {d: Fraction(c) for d, c in gold.items()}
                    if isinstance(gold, dict)
                    else UniPoly(gold)
                )
                actual = {d: poly[d] for d in gold} if isinstance(gold, dict) else poly
                report.add(f"{name} n={n}", expected, actual)
    return report


def z_consistency_suite(n_max: int = 12, narayana_max: int = 6) -> VerifyReport:
    report = VerifyReport("z-consistency")
    with _timed(report):
        for n in range(2, n_max + 1):
            for k in range(1, n):
                report.add(f"Z(U_{k},{n}) formula vs KL", zpoly_from_kl(k, n), zpoly_uniform(k, n))
        for k in range(1, narayana_max + 1):
            report.add(f"Z(U_{k},{k + 1}) vs Narayana", narayana_bruteforce(k + 1), zpoly_uniform(k, k + 1))
    return report


def kl_structure_suite(n_max: int = 12) -> VerifyReport:
    report = VerifyReport("kl-structure")
    with _timed(report):
        for n in range(2, n_max + 1):
            for k in range(1, n):
                P = kl_uniform(k, n)
                report.add(f"P(U_{k},{n})(0)", 1, P[0])
                report.add(f"deg P(U_{k},{n}) <= {(k - 1) // 2}", True, P.degree <= (k - 1) // 2)
    return report


def counting_contributions(mu: Sequence[int]) -> dict[tuple, int]:
    """Per-lambda terms of the signed refinement count for cycle type ``mu``.

    Returns ``{lam: term}`` over proper partitions lam of n (lam != (n));
    each term is an integer multiple of |K_mu|.
    """
    mu = tuple(mu)
    n = sum(mu)
    target = tuple(sorted(mu, reverse=True))
    out = {}
    for lam in combinat.partitions(n):
        if lam == (n,):
            continue
        inner = 0
        for sigma, blocks in combinat.refinements(lam):
            if tuple(sorted(sigma, reverse=True)) != target:
                continue
            weight = 1
            for block in blocks:
                weight *= combinat.cycle_class_size(block)
            inner += weight
        if not inner:
            continue
        ell = len(lam)
        term = Fraction((-1) ** ell * combinat.perm_count(lam), ell) * inner * combinat.multinomial(lam)
        out[lam] = term
    return out


def counting_identity_check(mu: Sequence[int]) -> VerifyReport:
    """Signed count of permutations of cycle type mu over proper lambda.

    For mu != (n) the proper-lambda sum must equal |K_mu|.  The class
    (n) is never reached by a proper lambda; its |K_(n)| comes entirely from
    the (1/n) * U_n term, so the check there is that the proper sum vanishes.
    """
    mu = tuple(sorted(mu, reverse=True))
    n = sum(mu)
    if n > 8:
        raise ValueError("counting identity check limited to n <= 8")
    report = VerifyReport("counting")
    with _timed(report):
        size = combinat.cycle_class_size(mu)
        contrib = counting_contributions(mu)
        total = sum(contrib.values(), Fraction(0))
        if mu == (n,):
            report.add(f"mu={mu} proper sum", 0, total)
            report.add(f"mu={mu} with U_n term", size, total + Fraction(factorial(n), n))
            return report
        per = ", ".join(f"{lam}:{term / size}" for lam, term in contrib.items())
        report.add(f"mu={mu} total [{per}]", size, total)
        r = len(mu)
        by_length: dict[int, Fraction] = {}
        for lam, term in contrib.items():
            by_length[len(lam)] = by_length.get(len(lam), Fraction(0)) + term / size
        for k in range(2, r + 1):
            expected = (-1) ** k * factorial(k - 1) * combinat.stirling2(r, k)
            report.add(f"mu={mu} length {k}", expected, by_length.get(k, Fraction(0)))
    return report


def counting_suite(n_max: int = 7) -> VerifyReport:
    report = VerifyReport("counting")
    for n in range(1, n_max + 1):
        for mu in combinat.partitions(n):
            report.merge(counting_identity_check(mu))
    return report


def gap_count_suite(n: int) -> VerifyReport:
    """Exhaustive subset count per gap partition against the closed form."""
    if n > 16:
        raise ValueError("gap count suite limited to n <= 16")
    report = VerifyReport("gaps")
    with _timed(report):
        tally: dict[tuple, int] = {}
        for mask in range(1, 1 << n):
            A = [i + 1 for i in range(n) if mask >> i & 1]
            lam = combinat.gap_partition(A, n)
            tally[lam] = tally.get(lam, 0) + 1
        for lam in combinat.partitions(n):
            report.add(f"n={n} lambda={lam}", tally.get(lam, 0), combinat.gap_subset_count(n, lam))
        report.add(f"n={n} total", 2**n - 1, sum(combinat.gap_subset_count(n, lam) for lam in combinat.partitions(n)))
    return report


def subdivision_suite(a: int, b: int, n: int, trials: int = 1000, seed: int = 0) -> VerifyReport:
    report = VerifyReport("subdivision", seed=seed)
    with _timed(report):
        res = subdivision_check(a, b, n, trials, seed)
        report.add(f"C_{n}^{{{a},{b}}} counterexamples in {res.points_checked} points", 0, len(res.failures))
    return report


def all_mandatory(max_ground: int = 12, seed: int = 0, trials: int = 1000) -> list[VerifyReport]:
    reports = [
        tables_suite(),
        oracle_suite(max_ground),
        volume_suite(min(max_ground, 8)),
        z_consistency_suite(),
        kl_structure_suite(),
        counting_suite(),
    ]
    gaps = VerifyReport("gaps")
    for n in range(1, 13):
        gaps.merge(gap_count_suite(n))
    reports.append(gaps)
    sub = VerifyReport("subdivision", seed=seed)
    for n in range(1, 6):
        sub.merge(subdivision_suite(1, 1, n, trials, seed))
    reports.append(sub)
    return reports
