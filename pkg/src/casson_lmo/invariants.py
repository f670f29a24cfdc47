"""Linking-number path sums, the U_n recursion and the mu_n invariants.

Component indices are 0-based.  ``M`` is always a symmetric integer matrix
with framings on the diagonal.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError
from .links import LinkInvariantData

__all__ = [
    "chain_product",
    "chain_sum",
    "U",
    "partition_sum_two",
    "partition_sum_three",
    "mu",
    "mu_via_decomposition",
    "conway_from_Un",
    "block_partitions",
]

MatrixLike = Sequence[Sequence[int]]


def _freeze(M: MatrixLike) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in M)


@lru_cache(maxsize=1 << 16)
def _paths(M: tuple[tuple[int, ...], ...], i: int, j: int, inner: frozenset[int]) -> int:
    if not inner:
        return M[i][j]
    return sum(_paths(M, i, k, inner - {k}) * M[k][j] for k in inner)


def chain_product(M: MatrixLike, i: int, j: int, I: Iterable[int] = ()) -> Fraction:
    """Sum over orderings of I of the linking products along i -> I -> j.

    With I empty this is the linking number of i and j, or the framing of i
    when i = j.
    """
    inner = list(I)
    n = len(M)
    if len(set(inner)) != len(inner) or i in inner or j in inner:
        raise ArgumentError("intermediate components must be distinct and differ from the endpoints")
    if any(not 0 <= k < n for k in inner + [i, j]):
        raise ArgumentError("component index out of range")
    return Fraction(_paths(_freeze(M), i, j, frozenset(inner)))


def chain_sum(M: MatrixLike, I: Sequence[int]) -> Fraction:
    """Total weight of all labelled chains of circles on the components I.

    One circle gives half its framing; otherwise half the sum over orderings
    of the closed linking products through the last index.
    """
    I = list(I)
    if len(I) == 1:
        return Fraction(M[I[0]][I[0]], 2)
    last, rest = I[-1], I[:-1]
    return chain_product(M, last, last, rest) / 2


def block_partitions(items: Sequence[int], sizes: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ordered splittings of ``items`` into consecutive blocks of the given sizes."""
    if not sizes:
        if not items:
            yield ()
        return
    for first in itertools.combinations(items, sizes[0]):
        rest = [x for x in items if x not in first]
        for tail in block_partitions(rest, sizes[1:]):
            yield (first,) + tail


def _symmetry(sizes: Sequence[int]) -> int:
    """Number of orderings of blocks with equal sizes."""
    out = 1
    for mult in Counter(sizes).values():
        out *= factorial(mult)
    return out


def _components(M: MatrixLike, components: Iterable[int] | None) -> list[int]:
    comps = list(range(len(M))) if components is None else sorted(set(components))
    if any(not 0 <= k < len(M) for k in comps):
        raise ArgumentError("component index out of range")
    return comps


def partition_sum_two(M: MatrixLike, a: int, b: int, components: Iterable[int] | None = None) -> Fraction:
    """One quarter of the sum over a centre i and a splitting of the others into blocks of sizes a, b.

    Each term is the product of the closed path sums through each block back
    to i.  Blocks are unordered: when a = b every splitting is counted once
    (and the single splitting into two empty blocks counts one half).
    """
    comps = _components(M, components)
    if not a >= b >= 0 or a + b + 1 != len(comps):
        raise ArgumentError(f"profile ({a},{b}) does not fit {len(comps)} components")
    Mf = _freeze(M)
    total = 0
    for i in comps:
        rest = [k for k in comps if k != i]
        for I, J in block_partitions(rest, (a, b)):
            total += _paths(Mf, i, i, frozenset(I)) * _paths(Mf, i, i, frozenset(J))
    return Fraction(total, 4 * _symmetry((a, b)))


def partition_sum_three(M: MatrixLike, a: int, b: int, c: int, components: Iterable[int] | None = None) -> Fraction:
    """Sum over pairs i < j and splittings of the rest into blocks of sizes a, b, c.

    Each term multiplies the three path sums from i to j through each block.
    Blocks of equal size are unordered, so k empty blocks carry 1/k!; for
    b = c = 0 this is the familiar one half times l_ij^2.
    """
    comps = _components(M, components)
    if not a >= b >= c >= 0 or a + b + c + 2 != len(comps):
        raise ArgumentError(f"profile ({a},{b},{c}) does not fit {len(comps)} components")
    Mf = _freeze(M)
    total = 0
    for i, j in itertools.combinations(comps, 2):
        rest = [k for k in comps if k not in (i, j)]
        for blocks in block_partitions(rest, (a, b, c)):
            term = 1
            for B in blocks:
                term *= _paths(Mf, i, j, frozenset(B))
            total += term
    return Fraction(total, _symmetry((a, b, c)))


def _two_profiles(total: int) -> list[tuple[int, int]]:
    return [(a, total - a) for a in range(total, -1, -1) if a >= total - a]


def _three_profiles(total: int) -> list[tuple[int, int, int]]:
    return [
        (a, b, total - a - b)
        for a in range(total, -1, -1)
        for b in range(a, -1, -1)
        if 0 <= total - a - b <= b
    ]


def _subset(data: LinkInvariantData, I: Iterable[int] | None) -> frozenset[int]:
    S = frozenset(range(data.n)) if I is None else frozenset(I)
    if not S:
        raise ArgumentError("need at least one component")
    if min(S) < 0 or max(S) >= data.n:
        raise ArgumentError("component index out of range")
    return S


def U(data: LinkInvariantData, I: Iterable[int] | None = None) -> Fraction:
    """U_{|I|+1} of the sublink on I, linking numbers taken inside that sublink."""
    S = _subset(data, I)
    memo: dict[frozenset[int], Fraction] = {}

    def rec(T: frozenset[int]) -> Fraction:
        if T in memo:
            return memo[T]
        if len(T) == 1:
            value = data.coeff(T, 2) - Fraction(1, 24)
        else:
            value = data.coeff(T, len(T) + 1)
            for i in T:
                value -= rec(T - {i}) * sum(data.lk(i, j) for j in T if j != i)
        memo[T] = value
        return value

    return rec(S)


def conway_from_Un(data: LinkInvariantData, I: Iterable[int] | None = None) -> Fraction:
    """c_{|I|+1} rebuilt from U on I and on its codimension-one sublinks."""
    S = _subset(data, I)
    if len(S) < 2:
        raise ArgumentError("need at least two components")
    value = U(data, S)
    for i in S:
        value += U(data, S - {i}) * sum(data.lk(i, j) for j in S if j != i)
    return value


def mu(data: LinkInvariantData, I: Iterable[int] | None = None) -> Fraction:
    """mu_{|I|} of the sublink on I in closed form."""
    S = sorted(_subset(data, I))
    m = len(S)
    M = data.matrix
    if m == 1:
        (i,) = S
        return Fraction(data.fr(i) ** 2, 24) - data.coeff(S, 2) + Fraction(1, 12)
    if m == 2:
        i, j = S
        l = data.lk(i, j)
        return (
            Fraction(l**3, 12)
            + Fraction((data.fr(i) + data.fr(j)) * l**2, 12)
            + l * (data.coeff([i], 2) + data.coeff([j], 2) - Fraction(1, 12))
            - data.coeff(S, 3)
        )
    Mf = _freeze(M)
    n = m - 2
    # figure-eight shaped terms: a centre and two closed blocks
    eights = Fraction(0)
    for a, b in _two_profiles(n + 1):
        for i in S:
            rest = [k for k in S if k != i]
            for blocks in block_partitions(rest, (a, b)):
                if a == b and blocks[0] > blocks[1]:
                    continue
                eights += _paths(Mf, i, i, frozenset(blocks[0])) * _paths(Mf, i, i, frozenset(blocks[1]))
    # theta shaped terms with at least two nonempty blocks
    thetas = Fraction(0)
    for a, b, c in _three_profiles(n):
        if b == 0:
            continue
        for i, j in itertools.combinations(S, 2):
            rest = [k for k in S if k not in (i, j)]
            seen = set()
            for blocks in block_partitions(rest, (a, b, c)):
                key = frozenset(blocks)
                if key in seen:
                    continue
                seen.add(key)
                term = 1
                for B in blocks:
                    term *= _paths(Mf, i, j, frozenset(B))
                thetas += term
    # theta shaped terms with one block carrying everything
    doubled = Fraction(0)
    for i, j in itertools.combinations(S, 2):
        rest = frozenset(k for k in S if k not in (i, j))
        doubled += M[i][j] ** 2 * _paths(Mf, i, j, rest)
    return eights / 12 + thetas / 2 + doubled / 4 - U(data, S)


def mu_via_decomposition(data: LinkInvariantData, I: Iterable[int] | None = None) -> Fraction:
    """mu_{|I|} as a third of the figure-eight family sums plus half the theta
    family sums minus U (plus the bare-circle term 1/24 for a knot)."""
    S = sorted(_subset(data, I))
    m = len(S)
    M = data.matrix
    value = sum((partition_sum_two(M, a, b, S) for a, b in _two_profiles(m - 1)), Fraction(0)) / 3
    if m >= 2:
        value += sum((partition_sum_three(M, a, b, c, S) for a, b, c in _three_profiles(m - 2)), Fraction(0)) / 2
    if m == 1:
        value += Fraction(1, 24)
    return value - U(data, S)
