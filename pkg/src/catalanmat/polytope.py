"""Halfspace systems for matroid polytopes, lattice counting and Ehrhart data.

Every polytope here has the same shape::

    0 <= x_i <= box,   sum(x) = target,   sum_{i in I} x_i >= lower

where each ``I`` is a circular interval of coordinates.  Box constraints are
always present: the bare prefix inequalities of a Schubert matroid admit
points such as ``(2, 0, 0, 0)`` that are outside the 0/1 cube.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exactalg import UniPoly, as_rational, interpolate
from .matroid import DirectSum, MatroidExpr, Schubert, SchubertSpec, Uniform


@dataclass(frozen=True)
class Interval:
    """Circular interval of ``length`` coordinates starting at ``start`` (1-based)."""

    start: int
    length: int
    lower: int

    def indices(self, dim: int) -> list[int]:
        return [(self.start - 1 + i) % dim + 1 for i in range(self.length)]


@dataclass(frozen=True)
class PrefixSystem:
    dim: int
    target: int
    constraints: tuple[Interval, ...] = ()
    box: int = 1

    def __post_init__(self):
        cons = []
        for c in self.constraints:
            if not isinstance(c, Interval):
                c = Interval(*c)
            if not 1 <= c.length <= self.dim:
                raise ValueError(f"interval length out of range: {c}")
            c = Interval((c.start - 1) % self.dim + 1, c.length, c.lower)
            if c not in cons:
                cons.append(c)
        object.__setattr__(self, "constraints", tuple(cons))

    def __and__(self, other: "PrefixSystem") -> "PrefixSystem":
        if (self.dim, self.target, self.box) != (other.dim, other.target, other.box):
            raise ValueError("systems live in different spaces")
        return PrefixSystem(self.dim, self.target, self.constraints + other.constraints, self.box)


def system_of_schubert(spec: SchubertSpec) -> PrefixSystem:
    """sum x = k and sum_{i <= s_j} x_i >= j for j < k, inside the unit box.

    A bound at s_j with s_{j+1} = s_j + 1 follows from the next bound and
    x_{s_j + 1} <= 1, so only the last element of each run of S is kept.
    """
    S = spec.S
    k = len(S)
    cons = [Interval(1, S[j - 1], j) for j in range(1, k) if S[j] != S[j - 1] + 1]
    return PrefixSystem(spec.n, k, tuple(cons))


def system_of(M: MatroidExpr) -> PrefixSystem:
    """Halfspace description of the polytope of a uniform/Schubert/direct-sum matroid."""
    if isinstance(M, Uniform):
        return PrefixSystem(M.n, M.k)
    if isinstance(M, Schubert):
        return system_of_schubert(M.spec)
    if isinstance(M, DirectSum):
        d, K = M.n, M.k
        cons: list[Interval] = []
        for off, block in zip(M.offsets, M.blocks):
            inner = system_of(block)
            cons.extend(Interval(c.start + off, c.length, c.lower) for c in inner.constraints)
            # pin the block sum from both sides
            if block.k >= 1:
                cons.append(Interval(off + 1, block.n, block.k))
            if K - block.k >= 1 and d - block.n >= 1:
                cons.append(Interval(off + block.n + 1, d - block.n, K - block.k))
        return PrefixSystem(d, K, tuple(cons))
    raise TypeError(f"no halfspace description for {type(M).__name__}")


def rotated_catalan_system(a: int, b: int, n: int, m: int) -> PrefixSystem:
    """The Catalan system with every interval shifted by ``m`` blocks of size a+b."""
    if not 0 <= m <= n - 1:
        raise ValueError(f"rotation m={m} outside 0..{n - 1}")
    c = a + b
    cons = tuple(Interval(c * m + 1, c * j, j * b) for j in range(1, n))
    return PrefixSystem(n * c, n * b, cons)


def q_system(A: Iterable[int], a: int, b: int, n: int) -> PrefixSystem:
    """Intersection of the rotated systems with m = j-1 for j in A."""
    A = sorted(set(A))
    if not A:
        raise ValueError("Q(A) needs a nonempty A")
    if A[0] < 1 or A[-1] > n:
        raise ValueError(f"A must be a subset of [1, {n}]")
    sys = rotated_catalan_system(a, b, n, A[0] - 1)
    for j in A[1:]:
        sys = sys & rotated_catalan_system(a, b, n, j - 1)
    return sys


def uniform_system(a: int, b: int, n: int) -> PrefixSystem:
    return PrefixSystem(n * (a + b), n * b)


def contains(sys: PrefixSystem, x: Sequence, t=1) -> bool:
    """Membership of ``x`` in the t-th dilate of ``sys``."""
    if len(x) != sys.dim:
        raise ValueError(f"dimension mismatch: {len(x)} != {sys.dim}")
    t = as_rational(t)
    x = [as_rational(v) for v in x]
    hi = t * sys.box
    if any(v < 0 or v > hi for v in x):
        return False
    if sum(x) != t * sys.target:
        return False
    for c in sys.constraints:
        if sum(x[i - 1] for i in c.indices(sys.dim)) < t * c.lower:
            return False
    return True


def product_contains(A: Iterable[int], a: int, b: int, n: int, x: Sequence) -> bool:
    """Membership in Q(A) tested block by block.

    The circle of n blocks is cut at the elements of A; each arc of g blocks
    must have sum g*b and satisfy the Catalan prefix bounds read from its
    own start.
    """
    A = sorted(set(A))
    c = a + b
    d = n * c
    x = [as_rational(v) for v in x]
    if len(x) != d or any(v < 0 or v > 1 for v in x) or sum(x) != n * b:
        return False
    for idx, start in enumerate(A):
        nxt = A[idx + 1] if idx + 1 < len(A) else A[0] + n
        gap = nxt - start
        coords = [x[(c * (start - 1) + i) % d] for i in range(c * gap)]
        if sum(coords) != gap * b:
            return False
        for j in range(1, gap):
            if sum(coords[: c * j]) < j * b:
                return False
    return True


def _difference_constraints(sys: PrefixSystem, t: int):
    """Rewrite interval bounds as bounds on P_q - P_p for prefix sums P."""
    d, total = sys.dim, t * sys.target
    lower: dict[int, list[tuple[int, int]]] = {}
    upper: dict[int, list[tuple[int, int]]] = {}
    feasible = True
    for c in sys.constraints:
        bound = t * c.lower
        s, e = c.start, c.start + c.length - 1
        if c.length == d:
            feasible &= total >= bound
        elif e <= d:
            lower.setdefault(e, []).append((s - 1, bound))
        else:
            # wrapped: total - (P_{s-1} - P_{e-d}) >= bound
            upper.setdefault(s - 1, []).append((e - d, total - bound))
    return feasible, lower, upper


def lattice_points(sys: PrefixSystem, t: int) -> int:
    """Number of integer points in the t-th dilate.

    Dynamic programming over coordinates.  The state is the running prefix
    sum plus those earlier prefix sums still referenced by a pending
    interval constraint.
    """
    if t < 0:
        raise ValueError("dilation must be non-negative")
    d, total, cap = sys.dim, t * sys.target, t * sys.box
    if total > cap * d:
        return 0
    feasible, lower, upper = _difference_constraints(sys, t)
    if not feasible:
        return 0
    refs: dict[int, int] = {}  # prefix index p -> last q that reads it
    for q, items in list(lower.items()) + list(upper.items()):
        for p, _ in items:
            if p >= 1:
                refs[p] = max(refs.get(p, 0), q)
    # stored[i]: prefix indices kept after processing coordinate i
    stored = [tuple(sorted(p for p, q in refs.items() if p <= i < q)) for i in range(d + 1)]

    states: dict[tuple, int] = {(0, ()): 1}
    for i in range(1, d + 1):
        keep_prev = stored[i - 1]
        keep = stored[i]
        checks_lo = lower.get(i, ())
        checks_hi = upper.get(i, ())
        remaining = cap * (d - i)
        nxt: dict[tuple, int] = {}
        for (P, saved), count in states.items():
            known = dict(zip(keep_prev, saved))
            known[0] = 0
            for v in range(0, min(cap, total - P) + 1):
                Q = P + v
                if total - Q > remaining:
                    continue
                if any(Q - known[p] < bnd for p, bnd in checks_lo):
                    continue
                if any(Q - known[p] > bnd for p, bnd in checks_hi):
                    continue
                known[i] = Q
                key = (Q, tuple(known[p] for p in keep))
                nxt[key] = nxt.get(key, 0) + count
            known.pop(i, None)
        states = nxt
    return sum(c for (P, _), c in states.items() if P == total)


def lattice_points_bruteforce(sys: PrefixSystem, t: int) -> int:
    """Exhaustive count over the box; only for small dimension."""
    from itertools import product

    if sys.dim > 9:
        raise ValueError("brute force limited to dimension <= 9")
    count = 0
    for x in product(range(t * sys.box + 1), repeat=sys.dim):
        if sum(x) == t * sys.target and contains(sys, x, t):
            count += 1
    return count


def integer_points(sys: PrefixSystem) -> list[tuple[int, ...]]:
    """All 0/1 points of the dilation-1 polytope (box is 1)."""
    out = []
    for ones in combinations(range(sys.dim), sys.target):
        x = [0] * sys.dim
        for i in ones:
            x[i] = 1
        if contains(sys, x):
            out.append(tuple(x))
    return out


@dataclass(frozen=True)
class EhrhartResult:
    poly: UniPoly
    counts: tuple[int, ...] = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return self.poly.degree

    @property
    def leading(self) -> Fraction:
        return self.poly.leading


class DegreeHintTooSmall(ArithmeticError):
    pass


def ehrhart_interpolate(sys: PrefixSystem, degree_hint: int | None = None) -> EhrhartResult:
    """Ehrhart polynomial from lattice counts at t = 0..degree_hint.

    The default hint is dim - 1, which bounds the dimension of any polytope
    inside the hyperplane sum(x) = target.  One extra dilation is counted as
    a check.
    """
    if degree_hint is None:
        degree_hint = sys.dim - 1
    counts = [lattice_points(sys, t) for t in range(degree_hint + 2)]
    poly = interpolate(list(enumerate(counts[:-1])))
    if poly.evaluate(degree_hint + 1) != counts[-1]:
        raise DegreeHintTooSmall(f"degree hint too small: {degree_hint}")
    return EhrhartResult(poly, tuple(counts))


def volume_from_ehrhart(e: EhrhartResult) -> Fraction:
    """Lattice-relative volume: the leading Ehrhart coefficient."""
    return e.leading


def random_point_on_slice(rng: random.Random, dim: int, target: int, max_den: int = 64):
    """Random rational point of [0,1]^dim with coordinate sum ``target``."""
    while True:
        D = rng.randint(1, max_den)
        head = [rng.randint(0, D) for _ in range(dim - 1)]
        last = target * D - sum(head)
        if 0 <= last <= D:
            return tuple(Fraction(v, D) for v in head + [last])


@dataclass
class SubdivisionReport:
    a: int
    b: int
    n: int
    seed: int
    trials: int
    points_checked: int = 0
    uncovered: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def subdivision_check(a: int, b: int, n: int, trials: int = 1000, seed: int = 0) -> SubdivisionReport:
    """Signed inclusion-exclusion over Q(A) against the uniform indicator.

    Points: ``trials`` random rationals on the slice plus every 0/1 vertex.
    """
    d, k = n * (a + b), n * b
    if d > 12:
        raise ValueError("subdivision check limited to ground size <= 12")
    rng = random.Random(seed)
    uni = uniform_system(a, b, n)
    subsets = [A for r in range(1, n + 1) for A in combinations(range(1, n + 1), r)]
    qs = {A: q_system(A, a, b, n) for A in subsets}
    points = [random_point_on_slice(rng, d, k) for _ in range(trials)]
    for ones in combinations(range(d), k):
        points.append(tuple(Fraction(1 if i in ones else 0) for i in range(d)))
    report = SubdivisionReport(a, b, n, seed, trials)
    for x in points:
        lhs = 1 if contains(uni, x) else 0
        rhs = sum((-1) ** (len(A) - 1) for A in subsets if contains(qs[A], x))
        covered = any(contains(qs[(j,)], x) for j in range(1, n + 1))
        report.points_checked += 1
        if not covered:
            report.uncovered += 1
        if lhs != rhs or not covered:
            report.failures.append({"point": [str(v) for v in x], "lhs": lhs, "rhs": rhs})
    return report

