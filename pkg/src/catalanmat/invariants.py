"""Closed-form invariants of uniform matroids and the Catalan partition sum.

Each invariant of ``C_n^{a,b}`` is obtained as

    f(C_n^{a,b}) = sum_{lam |- n} f(U_lam^{a,b}) / z_lam

where ``f(U_lam^{a,b})`` is the product of ``f(U_{lam_i b, lam_i (a+b)})``
over the parts of ``lam``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

from .combinat import binomial, eulerian, partitions, z_value
from .exactalg import BiPoly, UniPoly, binomial_poly
from .matroid import schubert_from_r
from .polytope import ehrhart_interpolate, system_of_schubert

Poly = Union[UniPoly, BiPoly]


class ValuativeIdentityViolated(ArithmeticError):
    pass


def _range_check(k: int, n: int, lo: int = 1):
    if not lo <= k <= n:
        raise ValueError(f"need {lo} <= k <= n, got k={k}, n={n}")


@lru_cache(maxsize=None)
def tutte_uniform(k: int, n: int) -> BiPoly:
    """Tutte polynomial of U_{k,n}.

    For 1 <= k <= n-1 this is the usual two-sided binomial sum; the free
    (k = n) and trivial (k = 0) matroids give x^n and y^n.
    """
    if not 0 <= k <= n:
        raise ValueError(f"formula range: k={k}, n={n}")
    if k == n:
        return BiPoly({(n, 0): 1})
    if k == 0:
        return BiPoly({(0, n): 1})
    terms = {(i, 0): binomial(n - i - 1, n - k - 1) for i in range(1, k + 1)}
    for i in range(1, n - k + 1):
        terms[(0, i)] = binomial(n - i - 1, k - 1)
    return BiPoly(terms)


@lru_cache(maxsize=None)
def ehrhart_uniform(k: int, n: int) -> UniPoly:
    """Ehrhart polynomial of the hypersimplex Delta(k, n)."""
    _range_check(k, n, lo=0)
    if k in (0, n):
        return UniPoly([1])
    total = UniPoly()
    for j in range(k):
        top = UniPoly.linear(k - j, n - 1 - j)
        total = total + binomial_poly(top, n - 1) * ((-1) ** j * binomial(n, j))
    return total


def kl_coefficient(k: int, n: int, i: int) -> Fraction:
    s = sum(
        binomial(k - i + h, h + i + 1) * binomial(i - 1 + h, h) for h in range(n - k)
    )
    return Fraction(binomial(n, i) * s, k - i)


@lru_cache(maxsize=None)
def kl_uniform(k: int, n: int) -> UniPoly:
    """Kazhdan-Lusztig polynomial of U_{k,n}; the free matroid U_{n,n} gives 1."""
    if k == 0:
        raise ValueError("KL undefined here: k = 0")
    _range_check(k, n)
    if k == n:
        return UniPoly([1])
    return UniPoly([kl_coefficient(k, n, i) for i in range((k - 1) // 2 + 1)])


@lru_cache(maxsize=None)
def inverse_kl_uniform(k: int, n: int) -> UniPoly:
    if not 1 <= k < n:
        raise ValueError(f"formula requires n-k >= 1 and k >= 1: k={k}, n={n}")
    coeffs = [
        Fraction((n - k) * (k - 2 * j), (n - k + j) * (n - j)) * binomial(k, j)
        for j in range((k - 1) // 2 + 1)
    ]
    return UniPoly(coeffs) * binomial(n, k)


def z_coefficient(k: int, n: int, i: int) -> Fraction:
    s = sum(
        Fraction(i * (h - n + k + 1) + n - k, (h + 1) * (n - k))
        * binomial(i - 1 + h, h)
        * binomial(k - i + h, h)
        for h in range(n - k)
    )
    return Fraction(binomial(n, i + n - k) * binomial(n, i), binomial(n, n - k)) * s


@lru_cache(maxsize=None)
def zpoly_uniform(k: int, n: int) -> UniPoly:
    """Z-polynomial of U_{k,n} from the explicit coefficient formula."""
    if not 1 <= k < n:
        raise ValueError(f"Z formula range: need 1 <= k < n, got k={k}, n={n}")
    return UniPoly([z_coefficient(k, n, i) for i in range(k + 1)])


@lru_cache(maxsize=None)
def zpoly_from_kl(k: int, n: int) -> UniPoly:
    """Z-polynomial of U_{k,n} assembled from KL polynomials of smaller uniforms."""
    if not 1 <= k < n:
        raise ValueError(f"Z range: need 1 <= k < n, got k={k}, n={n}")
    total = UniPoly.monomial(k)
    for i in range(1, k + 1):
        total = total + UniPoly.monomial(k - i, binomial(n, n - k + i)) * kl_uniform(i, n - k + i)
    return total


@lru_cache(maxsize=None)
def whitney_uniform(k: int, n: int) -> UniPoly:
    _range_check(k, n)
    return UniPoly([binomial(n, i) for i in range(k)] + [1])


@dataclass(frozen=True)
class InvariantFamily:
    name: str
    eval_uniform: Callable[[int, int], Poly]
    variable: str = "t"
    bivariate: bool = False
    # Ehrhart polynomials are integer-valued but have rational coefficients
    integer_coeffs: bool = True

    def unit(self) -> Poly:
        return BiPoly.constant(1) if self.bivariate else UniPoly([1])


FAMILIES: dict[str, InvariantFamily] = {
    "ehrhart": InvariantFamily("ehrhart", ehrhart_uniform, integer_coeffs=False),
    "tutte": InvariantFamily("tutte", tutte_uniform, variable="x,y", bivariate=True),
    "kl": InvariantFamily("kl", kl_uniform),
    "invkl": InvariantFamily("invkl", inverse_kl_uniform),
    "z": InvariantFamily("z", zpoly_uniform),
    "whitney": InvariantFamily("whitney", whitney_uniform),
}


def family(name: str | InvariantFamily) -> InvariantFamily:
    if isinstance(name, InvariantFamily):
        return name
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown invariant family {name!r}") from None


def uniform_lambda_value(fam: InvariantFamily, lam, a: int, b: int) -> Poly:
    """f(U_lam^{a,b}): product of the uniform values over the parts."""
    value = fam.unit()
    for part in lam:
        value = value * fam.eval_uniform(part * b, part * (a + b))
    return value


def partition_sum(fam: InvariantFamily, a: int, b: int, n: int) -> Poly:
    """Exact weighted sum over partitions of n, with no integrality check."""
    total = BiPoly() if fam.bivariate else UniPoly()
    for lam in partitions(n):
        total = total + uniform_lambda_value(fam, lam, a, b) * Fraction(1, z_value(lam))
    return total


def catalan_invariant(fam: str | InvariantFamily, a: int, b: int, n: int) -> Poly:
    """Invariant of C_n^{a,b} by the partition sum, with an integrality check."""
    if min(a, b, n) < 1:
        raise ValueError("a, b, n must be positive")
    fam = family(fam)
    total = partition_sum(fam, a, b, n)
    if fam.integer_coeffs:
        if not total.has_integer_coeffs():
            raise ValuativeIdentityViolated(
                f"valuative identity violated: {fam.name}({a},{b},{n}) = {total}"
            )
    else:
        for t in range(total.degree + 2):
            if total.evaluate(t).denominator != 1:
                raise ValuativeIdentityViolated(
                    f"valuative identity violated: {fam.name}({a},{b},{n}) at t={t}"
                )
    return total


def volume_catalan(a: int, b: int, n: int) -> Fraction:
    """Relative volume of P(C_n^{a,b}) from the Eulerian number."""
    from math import factorial

    N = n * (a + b)
    return Fraction(eulerian(N - 1, n * b), n * factorial(N - 1))


@dataclass(frozen=True)
class PanhandleReport:
    a: int
    b: int
    lhs: UniPoly
    rhs: UniPoly
    values_lhs: tuple[int, ...]
    values_rhs: tuple[Fraction, ...]

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def decision(self) -> str:
        return "equal" if self.equal else "unequal"


def panhandle_rhs(a: int, b: int) -> UniPoly:
    return UniPoly.linear(Fraction(a + 1, a + b + 1), 1) * ehrhart_uniform(b, a + b + 1)


def panhandle_conjecture_check(a: int, b: int, tmax: int | None = None) -> PanhandleReport:
    """Compare the counted Ehrhart polynomial of runs (1,1,a,b) with the proposed product."""
    if min(a, b) < 1:
        raise ValueError("a, b must be positive")
    spec = schubert_from_r((1, 1, a, b))
    lhs = ehrhart_interpolate(system_of_schubert(spec)).poly
    rhs = panhandle_rhs(a, b)
    if tmax is None:
        tmax = spec.n
    ts = range(tmax + 1)
    return PanhandleReport(
        a,
        b,
        lhs,
        rhs,
        tuple(int(lhs.evaluate(t)) for t in ts),
        tuple(rhs.evaluate(t) for t in ts),
    )
