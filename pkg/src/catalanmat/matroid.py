"""Structural matroids: uniform, Schubert, direct sums and duals.

Ground sets are ``1..n``.  Subsets are passed around as sorted tuples of
ints.  Schubert matroids carry their run-length encoding ``r`` and compute
ranks with the box-filling rule; nothing here enumerates bases unless
asked to.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

BASIS_CAP = 20
FLAT_CAP = 14


class EnumerationTooLarge(ValueError):
    pass


def _as_subset(T: Iterable[int], n: int) -> tuple[int, ...]:
    out = tuple(sorted(set(T)))
    if out and (out[0] < 1 or out[-1] > n):
        raise ValueError(f"element out of range 1..{n}: {out}")
    return out


@dataclass(frozen=True)
class SchubertSpec:
    """Schubert matroid given by the run lengths of its indicator vector.

    ``r = (r1, ..., r_2m)`` encodes ``0^r1 1^r2 ... 0^r_{2m-1} 1^r_2m``; the
    1-positions form the set ``S`` and the bases are the ``T`` with
    ``T <= S`` elementwise.
    """

    r: tuple[int, ...]

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        if not r or len(r) % 2 or any(x < 1 for x in r):
            raise ValueError(f"invalid run encoding: {self.r}")
        object.__setattr__(self, "r", r)

    @cached_property
    def S(self) -> tuple[int, ...]:
        out, pos = [], 0
        for idx, run in enumerate(self.r):
            if idx % 2:
                out.extend(range(pos + 1, pos + run + 1))
            pos += run
        return tuple(out)

    @property
    def n(self) -> int:
        return sum(self.r)

    @property
    def k(self) -> int:
        return sum(self.r[1::2])


def schubert_from_r(r: Sequence[int]) -> SchubertSpec:
    return SchubertSpec(tuple(r))


def catalan_matroid(a: int, b: int, n: int) -> SchubertSpec:
    """The (a,b)-Catalan matroid: runs (a, b) repeated n times."""
    if min(a, b, n) < 1:
        raise ValueError("a, b, n must be positive")
    return SchubertSpec((a, b) * n)


def dominates(T: Iterable[int], S: Iterable[int]) -> bool:
    """True iff |T| == |S| and the i-th smallest of T is <= the i-th of S."""
    t, s = sorted(T), sorted(S)
    return len(t) == len(s) and all(x <= y for x, y in zip(t, s))


def fill(S: Sequence[int], w: Sequence[int]) -> dict[int, int]:
    """Box filling of S by the word w.

    Each letter goes into the first empty box (smallest row) whose row is
    >= the letter, or is dropped.  Returns ``{row: letter}``.
    """
    rows = sorted(S)
    filled: dict[int, int] = {}
    for letter in w:
        i = bisect_left(rows, letter)
        while i < len(rows) and rows[i] in filled:
            i += 1
        if i < len(rows):
            filled[rows[i]] = letter
    return filled


class MatroidExpr:
    """Base class of matroids built from uniform and Schubert pieces."""

    n: int
    k: int

    def rank(self, T: Iterable[int]) -> int:
        return self._rank(_as_subset(T, self.n))

    def _rank(self, T: tuple[int, ...]) -> int:
        raise NotImplementedError

    def _bases(self) -> Iterable[tuple[int, ...]]:
        raise NotImplementedError

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def rank_of_mask(self, mask: int) -> int:
        return self._rank(tuple(i + 1 for i in range(self.n) if mask >> i & 1))


@dataclass(frozen=True)
class Uniform(MatroidExpr):
    k: int
    n: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"U_{{{self.k},{self.n}}} needs 0 <= k <= n")

    def _rank(self, T):
        return min(len(T), self.k)

    def _bases(self):
        return combinations(range(1, self.n + 1), self.k)

    def __str__(self):
        return f"U({self.k},{self.n})"


@dataclass(frozen=True)
class Schubert(MatroidExpr):
    spec: SchubertSpec

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def k(self) -> int:
        return self.spec.k

    def _rank(self, T):
        # filling in increasing order reduces to a single forward scan
        S = self.spec.S
        p, r = 0, 0
        for t in T:
            while p < len(S) and S[p] < t:
                p += 1
            if p == len(S):
                break
            p += 1
            r += 1
        return r

    def rank_by_filling(self, w: Sequence[int]) -> int:
        _as_subset(w, self.n)
        if len(set(w)) != len(w):
            raise ValueError("word has repeated letters")
        return len(fill(self.spec.S, w))

    def _bases(self):
        S = self.spec.S
        k = len(S)

        def extend(prefix, lo):
            i = len(prefix)
            if i == k:
                yield tuple(prefix)
                return
            for t in range(lo, S[i] + 1):
                prefix.append(t)
                yield from extend(prefix, t + 1)
                prefix.pop()

        return extend([], 1)

    def __str__(self):
        return f"SM{self.spec.r}"


@dataclass(frozen=True)
class DirectSum(MatroidExpr):
    blocks: tuple[MatroidExpr, ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("direct sum of no blocks")
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @property
    def n(self) -> int:
        return sum(b.n for b in self.blocks)

    @property
    def k(self) -> int:
        return sum(b.k for b in self.blocks)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, off = [], 0
        for b in self.blocks:
            out.append(off)
            off += b.n
        return tuple(out)

    def _rank(self, T):
        total = 0
        for off, block in zip(self.offsets, self.blocks):
            total += block._rank(tuple(t - off for t in T if off < t <= off + block.n))
        return total

    def _bases(self):
        parts = [
            [tuple(x + off for x in B) for B in block._bases()]
            for off, block in zip(self.offsets, self.blocks)
        ]
        for combo in product(*parts):
            yield tuple(x for B in combo for x in B)

    def __str__(self):
        return " + ".join(str(b) for b in self.blocks)


@dataclass(frozen=True)
class Dual(MatroidExpr):
    inner: MatroidExpr

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def k(self) -> int:
        return self.inner.n - self.inner.k

    def _rank(self, T):
        members = set(T)
        rest = tuple(x for x in range(1, self.n + 1) if x not in members)
        return len(T) + self.inner._rank(rest) - self.inner.k

    def _bases(self):
        ground = set(range(1, self.n + 1))
        for B in self.inner._bases():
            yield tuple(sorted(ground.difference(B)))

    def __str__(self):
        return f"({self.inner})*"


def uniform(k: int, n: int) -> Uniform:
    return Uniform(k, n)


def schubert(spec: SchubertSpec | Sequence[int]) -> Schubert:
    if not isinstance(spec, SchubertSpec):
        spec = SchubertSpec(tuple(spec))
    return Schubert(spec)


def catalan(a: int, b: int, n: int) -> Schubert:
    return Schubert(catalan_matroid(a, b, n))


def direct_sum(blocks: Sequence[MatroidExpr]) -> MatroidExpr:
    blocks = tuple(blocks)
    if len(blocks) == 1:
        return blocks[0]
    return DirectSum(blocks)


def uniform_lambda(lam: Sequence[int], a: int, b: int) -> MatroidExpr:
    """Direct sum of U_{lam_i b, lam_i (a+b)} over the parts of ``lam``."""
    return direct_sum([Uniform(p * b, p * (a + b)) for p in lam])


def dual(M: MatroidExpr) -> MatroidExpr:
    if isinstance(M, Uniform):
        return Uniform(M.n - M.k, M.n)
    if isinstance(M, DirectSum):
        return DirectSum(tuple(dual(b) for b in M.blocks))
    if isinstance(M, Dual):
        return M.inner
    return Dual(M)


def rank(M: MatroidExpr, T: Iterable[int]) -> int:
    return M.rank(T)


def enumerate_bases(M: MatroidExpr, cap: int = BASIS_CAP) -> list[tuple[int, ...]]:
    """All bases of ``M`` in lexicographic order."""
    if M.n > cap:
        raise EnumerationTooLarge(f"enumeration too large: ground {M.n} > cap {cap}")
    return sorted(M._bases())


def closure(M: MatroidExpr, A: Iterable[int]) -> tuple[int, ...]:
    A = _as_subset(A, M.n)
    r = M._rank(A)
    members = set(A)
    return tuple(
        x
        for x in range(1, M.n + 1)
        if x in members or M._rank(tuple(sorted(members | {x}))) == r
    )


def rank_table(M: MatroidExpr, cap: int = 16) -> list[int]:
    """Rank of every subset, indexed by bitmask (bit i <-> element i+1)."""
    if M.n > cap:
        raise EnumerationTooLarge(f"enumeration too large: ground {M.n} > cap {cap}")
    return [M.rank_of_mask(mask) for mask in range(1 << M.n)]


def flats_by_rank(M: MatroidExpr, cap: int = FLAT_CAP) -> tuple[int, ...]:
    """Whitney numbers of the second kind W_0..W_k."""
    if M.n > cap:
        raise EnumerationTooLarge(f"enumeration too large: ground {M.n} > cap {cap}")
    ranks = rank_table(M, cap)
    counts = [0] * (M.k + 1)
    n = M.n
    for mask, r in enumerate(ranks):
        if all(mask >> i & 1 or ranks[mask | 1 << i] != r for i in range(n)):
            counts[r] += 1
    return tuple(counts)


def indicator(B: Iterable[int], n: int) -> tuple[int, ...]:
    members = set(B)
    return tuple(1 if i in members else 0 for i in range(1, n + 1))
