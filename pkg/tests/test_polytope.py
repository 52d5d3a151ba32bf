import random
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalanmat.exactalg import UniPoly
from catalanmat.matroid import (
    catalan,
    catalan_matroid,
    direct_sum,
    enumerate_bases,
    indicator,
    schubert,
    uniform,
)
from catalanmat.polytope import (
    DegreeHintTooSmall,
    Interval,
    PrefixSystem,
    contains,
    ehrhart_interpolate,
    integer_points,
    lattice_points,
    lattice_points_bruteforce,
    product_contains,
    q_system,
    random_point_on_slice,
    rotated_catalan_system,
    subdivision_check,
    system_of,
    system_of_schubert,
    uniform_system,
    volume_from_ehrhart,
)

C2 = system_of_schubert(catalan_matroid(1, 1, 2))
HALF = Fraction(1, 2)


def test_schubert_system_for_c2():
    assert C2 == PrefixSystem(4, 2, (Interval(1, 2, 1),))
    points = [x for x in product((0, 1), repeat=4) if contains(C2, x)]
    assert sorted(points) == sorted(indicator(B, 4) for B in enumerate_bases(catalan(1, 1, 2)))
    assert len(points) == 5
    assert not contains(C2, (0, 0, 1, 1))


def test_box_is_needed():
    assert not contains(C2, (2, 0, 0, 0))


def test_uniform_system_counts():
    sys = system_of_schubert(schubert((2, 3)).spec)
    assert sys.constraints == ()
    for k, n in [(2, 4), (3, 5), (1, 3)]:
        from math import comb

        assert lattice_points(system_of(uniform(k, n)), 1) == comb(n, k)


def test_rotated_systems():
    for n in range(1, 6):
        assert rotated_catalan_system(1, 1, n, 0) == system_of_schubert(catalan_matroid(1, 1, n))
    assert contains(rotated_catalan_system(1, 1, 2, 1), (0, 0, 1, 1))
    for B in enumerate_bases(catalan(1, 1, 3)):
        assert contains(rotated_catalan_system(1, 1, 3, 0), indicator(B, 6))
    with pytest.raises(ValueError):
        rotated_catalan_system(1, 1, 3, 3)


def test_ab_rotation_zero_matches_schubert_points():
    # the rotated (a,b) system drops redundant bounds but has the same points
    for a, b, n in [(2, 1, 2), (1, 2, 2), (2, 2, 2), (3, 1, 2), (1, 3, 2), (2, 1, 3)]:
        rot = rotated_catalan_system(a, b, n, 0)
        sch = system_of_schubert(catalan_matroid(a, b, n))
        for t in range(3):
            assert lattice_points(rot, t) == lattice_points(sch, t)


def test_q_system_examples():
    Q12 = q_system({1, 2}, 1, 1, 2)
    assert contains(Q12, (HALF,) * 4)
    assert contains(Q12, (1, 0, 0, 1))
    assert not contains(Q12, (1, 1, 0, 0))
    assert contains(q_system({1}, 1, 1, 2), (1, 1, 0, 0))
    # a product of two unit segments: (t+1)^2 points
    for t in range(4):
        assert lattice_points(Q12, t) == (t + 1) ** 2
    with pytest.raises(ValueError):
        q_system(set(), 1, 1, 2)


def test_contains_examples():
    assert contains(C2, (HALF,) * 4)
    assert not contains(C2, (0, 0, 1, 1))
    assert contains(system_of(uniform(1, 2)), (1, 0))
    assert contains(C2, (1, 1, 1, 1), t=2)
    assert not contains(C2, (1, 1, 1, 1), t=1)
    with pytest.raises(ValueError, match="dimension"):
        contains(C2, (1, 0, 1))


def test_lattice_point_examples():
    assert lattice_points(C2, 1) == 5
    brute = sum(1 for x in product(range(3), repeat=4) if sum(x) == 4 and contains(C2, x, 2))
    assert brute == 14
    assert lattice_points(C2, 2) == 14
    for sys in (C2, system_of(uniform(2, 5)), q_system({1, 3}, 1, 1, 3)):
        assert lattice_points(sys, 0) == 1


SYSTEMS = [
    C2,
    system_of(catalan(1, 1, 3)),
    system_of(catalan(2, 1, 2)),
    system_of(schubert((1, 2, 2, 1))),
    system_of(schubert((1, 1, 2, 1, 1, 2))),
    system_of(uniform(3, 6)),
    system_of(direct_sum([uniform(1, 2), catalan(1, 1, 2)])),
    system_of(direct_sum([catalan(1, 1, 2), uniform(2, 3)])),
    q_system({1, 2}, 1, 1, 3),
    q_system({2}, 1, 1, 4),
    q_system({1, 3}, 1, 1, 4),
    q_system({1, 2}, 2, 1, 2),
]


@pytest.mark.parametrize("sys", SYSTEMS, ids=range(len(SYSTEMS)))
def test_dp_count_matches_bruteforce(sys):
    for t in range(3 if sys.dim > 6 else 4):
        assert lattice_points(sys, t) == lattice_points_bruteforce(sys, t)


def test_unit_dilation_points_are_basis_vectors():
    matroids = [
        catalan(1, 1, 2),
        catalan(1, 1, 4),
        catalan(2, 1, 3),
        catalan(1, 2, 3),
        catalan(3, 2, 2),
        schubert((1, 1, 1, 3, 1, 1)),
        schubert((2, 1, 1, 2, 1, 3)),
        uniform(4, 9),
        direct_sum([catalan(1, 1, 2), uniform(2, 4)]),
        direct_sum([uniform(1, 3), catalan(2, 1, 2)]),
    ]
    for M in matroids:
        assert M.n <= 10
        sys = system_of(M)
        bases = enumerate_bases(M)
        assert lattice_points(sys, 1) == len(bases)
        assert sorted(integer_points(sys)) == sorted(indicator(B, M.n) for B in bases)


def test_ehrhart_examples():
    e = ehrhart_interpolate(C2, 3)
    assert e.poly == UniPoly([6, 13, 9, 2]) * Fraction(1, 6)
    assert e.counts[:4] == (1, 5, 14, 30)
    assert ehrhart_interpolate(system_of(uniform(1, 2))).poly == UniPoly([1, 1])
    octa = ehrhart_interpolate(system_of(uniform(2, 4))).poly
    assert octa == UniPoly([1, 1]) * UniPoly([3, 4, 2]) * Fraction(1, 3)
    assert octa(1) == 6


def test_degree_hint_too_small():
    with pytest.raises(DegreeHintTooSmall, match="degree hint too small"):
        ehrhart_interpolate(C2, 2)


def test_volume_examples():
    assert volume_from_ehrhart(ehrhart_interpolate(C2)) == Fraction(1, 3)
    assert volume_from_ehrhart(ehrhart_interpolate(system_of(uniform(2, 4)))) == Fraction(2, 3)
    assert volume_from_ehrhart(ehrhart_interpolate(system_of(uniform(1, 2)))) == 1


def test_ehrhart_shape():
    for M, blocks in [
        (catalan(1, 1, 3), 1),
        (catalan(2, 1, 2), 1),
        (direct_sum([uniform(1, 2), catalan(1, 1, 2)]), 2),
        (direct_sum([uniform(1, 2), uniform(1, 2), uniform(1, 3)]), 3),
    ]:
        e = ehrhart_interpolate(system_of(M))
        assert e.poly[0] == 1
        assert e.dim == M.n - blocks
        for t in range(e.dim + 3):
            v = e.poly(t)
            assert v.denominator == 1 and v >= 0


def test_ehrhart_of_direct_sum_is_product():
    pairs = [
        (uniform(1, 2), catalan(1, 1, 2)),
        (catalan(1, 1, 2), catalan(1, 1, 2)),
        (uniform(2, 4), uniform(1, 3)),
        (catalan(2, 1, 1), catalan(1, 2, 1)),
    ]
    for A, B in pairs:
        lhs = ehrhart_interpolate(system_of(direct_sum([A, B]))).poly
        rhs = ehrhart_interpolate(system_of(A)).poly * ehrhart_interpolate(system_of(B)).poly
        assert lhs == rhs


def test_subdivision_examples():
    uni = uniform_system(1, 1, 2)
    x = (0, 0, 1, 1)
    assert contains(uni, x)
    memberships = {A: contains(q_system(A, 1, 1, 2), x) for A in [(1,), (2,), (1, 2)]}
    assert memberships == {(1,): False, (2,): True, (1, 2): False}
    y = (HALF,) * 4
    assert all(contains(q_system(A, 1, 1, 2), y) for A in [(1,), (2,), (1, 2)])
    report = subdivision_check(1, 1, 2, trials=200, seed=3)
    assert report.ok and report.uncovered == 0
    assert report.points_checked == 200 + 6


def test_subdivision_ab_cases():
    for a, b, n in [(2, 1, 2), (1, 2, 3), (2, 2, 2), (1, 3, 2)]:
        assert subdivision_check(a, b, n, trials=150, seed=11).ok


def test_random_points_on_slice():
    rng = random.Random(5)
    for _ in range(50):
        x = random_point_on_slice(rng, 8, 4)
        assert sum(x) == 4
        assert all(0 <= v <= 1 and v.denominator <= 64 for v in x)


def _points_for(n, count, seed):
    rng = random.Random(seed)
    pts = [random_point_on_slice(rng, 2 * n, n, max_den=4) for _ in range(count)]
    pts += [tuple(1 if i in S else 0 for i in range(2 * n)) for S in combinations(range(2 * n), n)]
    return pts


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_q_membership_equals_block_product(n):
    subsets = [A for r in range(1, n + 1) for A in combinations(range(1, n + 1), r)]
    for x in _points_for(n, 150, seed=n):
        for A in subsets:
            assert contains(q_system(A, 1, 1, n), x) == product_contains(A, 1, 1, n, x), (A, x)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_cover_by_rotations(n):
    rots = [rotated_catalan_system(1, 1, n, m) for m in range(n)]
    for x in _points_for(n, 200 if n < 6 else 60, seed=100 + n):
        assert any(contains(r, x) for r in rots)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_lattice_counts_factor_over_gap_blocks(n, seed, data):
    A = data.draw(st.sets(st.integers(1, n), min_size=1))
    from catalanmat.combinat import gap_partition

    lam = gap_partition(A, n)
    Q = q_system(A, 1, 1, n)
    for t in range(3):
        expected = 1
        for part in lam:
            expected *= lattice_points(system_of(catalan(1, 1, part)), t)
        assert lattice_points(Q, t) == expected
