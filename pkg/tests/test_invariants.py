from fractions import Fraction
from math import comb, factorial

import pytest

from catalanmat.combinat import eulerian
from catalanmat.exactalg import BiPoly, UniPoly
from catalanmat.invariants import (
    FAMILIES,
    ValuativeIdentityViolated,
    catalan_invariant,
    ehrhart_uniform,
    family,
    inverse_kl_uniform,
    kl_uniform,
    panhandle_conjecture_check,
    partition_sum,
    tutte_uniform,
    volume_catalan,
    whitney_uniform,
    zpoly_from_kl,
    zpoly_uniform,
)
from catalanmat.matroid import uniform
from catalanmat.polytope import lattice_points, system_of
from catalanmat.verify import tutte_bruteforce, whitney_bruteforce

x, y = BiPoly.x(), BiPoly.y()


def test_tutte_uniform_examples():
    assert tutte_uniform(2, 4) == x**2 + x * 2 + y * 2 + y**2
    assert tutte_uniform(2, 4) == tutte_bruteforce(uniform(2, 4))
    assert tutte_uniform(1, 2) == x + y
    assert tutte_uniform(3, 3) == x**3
    assert tutte_uniform(0, 3) == y**3


def test_tutte_uniform_matches_bruteforce():
    for n in range(1, 10):
        for k in range(n + 1):
            assert tutte_uniform(k, n) == tutte_bruteforce(uniform(k, n)), (k, n)


def test_tutte_duality_swaps_variables():
    for n in range(1, 12):
        for k in range(n + 1):
            assert tutte_uniform(n - k, n) == tutte_uniform(k, n).swap()


def test_tutte_counts_bases():
    for n in range(1, 12):
        for k in range(n + 1):
            assert tutte_uniform(k, n).evaluate(1, 1) == comb(n, k)


def test_ehrhart_uniform_against_lattice_counts():
    for n in range(1, 8):
        for k in range(n + 1):
            E = ehrhart_uniform(k, n)
            sys = system_of(uniform(k, n))
            for t in range(4):
                assert E(t) == lattice_points(sys, t), (k, n, t)


def test_ehrhart_uniform_examples():
    assert ehrhart_uniform(2, 4) == UniPoly([1, 1]) * UniPoly([3, 4, 2]) * Fraction(1, 3)
    assert ehrhart_uniform(1, 2) == UniPoly([1, 1])
    assert ehrhart_uniform(0, 4) == UniPoly([1])
    # leading coefficient is the Eulerian volume of the hypersimplex
    for n in range(2, 10):
        for k in range(1, n):
            assert ehrhart_uniform(k, n).leading == Fraction(eulerian(n - 1, k), factorial(n - 1))


def test_kl_examples():
    assert kl_uniform(3, 6) == UniPoly([1, 9])
    assert kl_uniform(1, 5) == UniPoly([1])
    assert kl_uniform(2, 7) == UniPoly([1])
    assert kl_uniform(4, 4) == UniPoly([1])


def test_kl_structure():
    for n in range(2, 13):
        for k in range(1, n):
            P = kl_uniform(k, n)
            assert P[0] == 1
            assert P.degree <= (k - 1) // 2
            assert P.has_integer_coeffs()
            assert all(c > 0 for c in P.coeffs)


def test_inverse_kl_examples():
    assert inverse_kl_uniform(2, 4) == UniPoly([3])
    assert inverse_kl_uniform(3, 6) == UniPoly([10, 9])
    for n in range(2, 12):
        for k in range(1, n):
            Q = inverse_kl_uniform(k, n)
            assert Q.has_integer_coeffs() and Q.degree <= (k - 1) // 2


def test_z_examples_and_palindromy():
    assert zpoly_from_kl(2, 4) == UniPoly([1, 4, 1])
    assert zpoly_uniform(2, 4) == UniPoly([1, 4, 1])
    for n in range(2, 11):
        for k in range(1, n):
            Z = zpoly_uniform(k, n)
            assert Z.degree == k
            assert Z.coeffs == Z.coeffs[::-1]
            assert Z == zpoly_from_kl(k, n)


def test_whitney_examples():
    assert whitney_uniform(3, 6) == UniPoly([1, 6, 15, 1])
    assert whitney_uniform(1, 1) == UniPoly([1, 1])
    for k, n in [(2, 4), (3, 5), (2, 6), (4, 7)]:
        assert whitney_uniform(k, n) == whitney_bruteforce(uniform(k, n))


@pytest.mark.parametrize(
    "fn, args",
    [
        (kl_uniform, (0, 3)),
        (kl_uniform, (4, 3)),
        (inverse_kl_uniform, (3, 3)),
        (inverse_kl_uniform, (0, 3)),
        (zpoly_uniform, (3, 3)),
        (zpoly_from_kl, (0, 2)),
        (tutte_uniform, (4, 3)),
        (ehrhart_uniform, (-1, 3)),
        (whitney_uniform, (0, 3)),
    ],
)
def test_formula_ranges(fn, args):
    with pytest.raises(ValueError):
        fn(*args)


def test_kl_error_message():
    with pytest.raises(ValueError, match="KL undefined"):
        kl_uniform(0, 4)


def test_catalan_invariant_examples():
    assert catalan_invariant("kl", 1, 1, 3) == UniPoly([1, 3])
    assert catalan_invariant("whitney", 1, 1, 3) == UniPoly([1, 5, 8, 1])
    assert catalan_invariant("tutte", 1, 1, 2) == x**2 + x * y + y**2 + x + y
    assert catalan_invariant("invkl", 1, 1, 4) == UniPoly([14, 19])
    assert catalan_invariant("ehrhart", 1, 1, 2) == UniPoly([6, 13, 9, 2]) * Fraction(1, 6)


def test_catalan_invariant_single_block_is_uniform():
    # n = 1 leaves only the partition (1)
    for a, b in [(1, 1), (2, 3), (3, 1)]:
        for name, fam in FAMILIES.items():
            assert catalan_invariant(name, a, b, 1) == fam.eval_uniform(b, a + b)


def test_catalan_invariant_rejects_bad_input():
    with pytest.raises(ValueError):
        catalan_invariant("kl", 0, 1, 2)
    with pytest.raises(ValueError, match="unknown invariant"):
        family("chow")


def test_integrality_breach_is_reported():
    # a family whose uniform values are not compatible with the partition sum
    from catalanmat.invariants import InvariantFamily

    bogus = InvariantFamily("bogus", lambda k, n: UniPoly([k * k]))
    assert not partition_sum(bogus, 1, 1, 2).has_integer_coeffs()
    with pytest.raises(ValuativeIdentityViolated, match="valuative identity violated"):
        catalan_invariant(bogus, 1, 1, 2)


def test_catalan_ehrhart_integer_valued_and_positive():
    for a, b, n in [(1, 1, 4), (2, 1, 3), (1, 3, 3), (2, 2, 3), (1, 1, 7), (5, 2, 2)]:
        E = catalan_invariant("ehrhart", a, b, n)
        assert E.degree == n * (a + b) - 1
        assert E[0] == 1
        assert all(c > 0 for c in E.coeffs)
        for t in range(E.degree + 2):
            assert E(t).denominator == 1


def test_catalan_tutte_duality():
    # the dual of C_n^{a,b} is C_n^{b,a} reversed, with swapped Tutte variables
    for a, b, n in [(1, 2, 2), (2, 1, 3), (1, 3, 2)]:
        assert catalan_invariant("tutte", a, b, n).swap() == catalan_invariant("tutte", b, a, n)


def test_volume_examples():
    assert volume_catalan(1, 1, 2) == Fraction(1, 3)
    assert volume_catalan(1, 1, 3) == Fraction(11, 60)
    for a, b, n in [(1, 1, 2), (1, 1, 3), (2, 1, 2), (1, 2, 2)]:
        assert volume_catalan(a, b, n) == catalan_invariant("ehrhart", a, b, n).leading


def test_panhandle_small_case():
    rep = panhandle_conjecture_check(1, 1)
    assert rep.equal and rep.decision == "equal"
    assert rep.lhs == catalan_invariant("ehrhart", 1, 1, 2)
    assert rep.values_lhs[:3] == (1, 5, 14)
    assert tuple(int(v) for v in rep.values_rhs) == rep.values_lhs
