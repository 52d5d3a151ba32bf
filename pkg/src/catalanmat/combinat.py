"""Partitions, compositions and the counting numbers built on them.

Partitions and compositions are plain tuples of positive integers.  A
partition is weakly decreasing.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

Partition = tuple
Composition = tuple


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def _check_partition(lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order.

    ``partitions(4)`` is ``((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))``.
    ``partitions(0)`` is the single empty partition.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(_partitions_bounded(n, n))


def z_value(lam: Sequence[int]) -> int:
    """z_lambda = prod_i i^{a_i} a_i!, with a_i the multiplicity of part i."""
    lam = _check_partition(lam)
    return prod(i**a * factorial(a) for i, a in Counter(lam).items())


def perm_count(lam: Sequence[int]) -> int:
    """Number of distinct orderings of the parts of ``lam``."""
    lam = _check_partition(lam)
    return factorial(len(lam)) // prod(factorial(a) for a in Counter(lam).values())


def cycle_class_size(lam: Sequence[int]) -> int:
    """Number of permutations of [n] with cycle type ``lam``: n!/z_lambda."""
    lam = _check_partition(lam)
    return factorial(sum(lam)) // z_value(lam)


def gap_partition(A: Iterable[int], n: int) -> Partition:
    """Circular gaps between the elements of ``A`` in [n], sorted decreasingly."""
    a = sorted(set(A))
    if not a:
        raise ValueError("gap partition of the empty set")
    if a[0] < 1 or a[-1] > n:
        raise ValueError(f"subset not contained in [1, {n}]")
    gaps = [a[i + 1] - a[i] for i in range(len(a) - 1)]
    gaps.append(n - a[-1] + a[0])
    return tuple(sorted(gaps, reverse=True))


def gap_subset_count(n: int, lam: Sequence[int]) -> int:
    """Closed-form count of subsets A of [n] with gap partition ``lam``."""
    lam = _check_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    num = n * perm_count(lam)
    q, r = divmod(num, len(lam))
    if r:
        raise ArithmeticError(f"non-integer gap count for {lam}")
    return q


def least_period(gamma: Sequence[int]) -> int:
    """Least cyclic period: smallest m >= 1 with gamma rotated by m equal to gamma.

    (2,2,1,2,2,1,2,2,1) has period 3 and (2,1,3,2) has period 4.  The
    period always divides len(gamma).
    """
    k = len(gamma)
    if k == 0:
        raise ValueError("empty composition")
    gamma = tuple(gamma)
    for m in range(1, k):
        if k % m == 0 and gamma[m:] + gamma[:m] == gamma:
            return m
    return k


def orderings(lam: Sequence[int]) -> list[Composition]:
    """Distinct orderings of the parts of ``lam``; there are perm_count(lam)."""
    return sorted(set(permutations(lam)))


def subsets_from_ordering(gamma: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """The n subsets {j, j+g1, j+g1+g2, ...} (mod n) for j = 1..n."""
    out = []
    for j in range(1, n + 1):
        pos, members = j, []
        for g in gamma:
            members.append((pos - 1) % n + 1)
            pos += g
        out.append(tuple(sorted(members)))
    return out


def refinements(lam: Sequence[int]) -> list[tuple[Composition, tuple[Partition, ...]]]:
    """Refinements of ``lam`` obtained by splitting each part into a partition.

    Each entry is ``(sigma, blocks)`` where ``blocks[i]`` is the partition of
    ``lam[i]`` occupying the i-th segment of ``sigma``.
    """
    lam = _check_partition(lam)
    out = []
    for blocks in product(*(partitions(part) for part in lam)):
        sigma = tuple(x for block in blocks for x in block)
        out.append((sigma, tuple(blocks)))
    return out


@lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> int:
    """Permutations of [n] with exactly k-1 descents."""
    if n < 1 or k < 1 or k > n:
        return 0
    return sum((-1) ** j * comb(n + 1, j) * (k - j) ** n for j in range(k + 1))


@lru_cache(maxsize=None)
def stirling2(r: int, k: int) -> int:
    """Stirling number of the second kind S(r, k)."""
    if r < 0 or k < 0:
        return 0
    if r == 0 or k == 0:
        return 1 if r == k else 0
    return k * stirling2(r - 1, k) + stirling2(r - 1, k - 1)


def binomial(n: int, k: int) -> int:
    """C(n, k) for integer n (possibly negative) and k; 0 when k < 0.

    Negative ``n`` uses the falling-factorial extension, so C(-1, 0) == 1.
    """
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


def multinomial(parts: Sequence[int]) -> int:
    """sum(parts)! / prod(part!)."""
    if any(p < 0 for p in parts):
        return 0
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)
