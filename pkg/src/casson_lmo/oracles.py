"""Slow reference computations used to cross-check the fast paths.

None of these share code with the routines they check beyond the basic
diagram type and the closure engine.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from .chorddiag import ChordDiagram, build_family, from_circles, is_connected
from .closure import iota_theta

__all__ = [
    "perfect_matchings",
    "brute_force_essential",
    "family_structures",
    "family_sum",
]


def perfect_matchings(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for tail in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + tail


def _profiles(n: int) -> Iterator[tuple[int, ...]]:
    for big in range(n):
        yield tuple(4 if k == big else 2 for k in range(n))
    for p, q in itertools.combinations(range(n), 2):
        yield tuple(3 if k in (p, q) else 2 for k in range(n))


def brute_force_essential(n: int, sign: int) -> frozenset[ChordDiagram]:
    """All connected diagrams with one 4-leg or two 3-leg circles (others 2-leg)
    whose theta coefficient has the given sign."""
    out: dict[bytes, ChordDiagram] = {}
    for legs in _profiles(n):
        slots = [(ci, p) for ci, k in enumerate(legs) for p in range(k)]
        for matching in perfect_matchings(list(range(len(slots)))):
            circles = [[0] * k for k in legs]
            for label, (x, y) in enumerate(matching):
                for s in (x, y):
                    ci, p = slots[s]
                    circles[ci][p] = label
            D = from_circles(circles)
            if D.key in out or not is_connected(D):
                continue
            value = iota_theta(D)
            if value != 0 and (value > 0) == (sign > 0):
                out[D.key] = D
    return frozenset(out.values())


def _walk(D: ChordDiagram, start: tuple[int, int], stops: set[int]) -> tuple[tuple[int, ...], tuple[int, int]]:
    """Follow chords through 2-leg circles from a leg until a circle in ``stops``.

    Returns the 0-based intermediate circles and the leg reached.
    """
    partner = {}
    for a, b in D.chords.values():
        partner[(a.circle - 1, a.position)] = (b.circle - 1, b.position)
        partner[(b.circle - 1, b.position)] = (a.circle - 1, a.position)
    path = []
    leg = partner[start]
    while leg[0] not in stops:
        path.append(leg[0])
        leg = partner[(leg[0], 1 - leg[1])]
    return tuple(path), leg


def family_structures(D: ChordDiagram) -> tuple:
    """Centre circle(s) plus the undirected cycles or paths that hang off them."""
    legs = D.legs_per_circle
    big = [k for k, n in enumerate(legs) if n > 2]
    if len(big) == 1:
        (i,) = big
        cycles, used = [], set()
        for p in range(4):
            if p in used:
                continue
            path, end = _walk(D, (i, p), {i})
            used |= {p, end[1]}
            cycles.append(min(path, path[::-1]))
        return (i, tuple(sorted(cycles)))
    i, j = big
    paths = []
    for p in range(3):
        path, _ = _walk(D, (i, p), {i, j})
        paths.append(path)
    return (i, j, tuple(sorted(paths)))


def _cycle_weight(M: Sequence[Sequence[int]], i: int, cycle: tuple[int, ...]) -> Fraction:
    if not cycle:
        return Fraction(M[i][i], 2)
    if len(cycle) == 1:
        return Fraction(M[i][cycle[0]] ** 2, 2)
    nodes = (i,) + cycle + (i,)
    out = 1
    for x, y in zip(nodes, nodes[1:]):
        out *= M[x][y]
    return Fraction(out)


def _path_weight(M: Sequence[Sequence[int]], i: int, j: int, path: tuple[int, ...]) -> int:
    nodes = (i,) + path + (j,)
    out = 1
    for x, y in zip(nodes, nodes[1:]):
        out *= M[x][y]
    return out


def family_sum(M: Sequence[Sequence[int]], profile: Sequence[int]) -> Fraction:
    """Sum of the family's coefficients, evaluated structure by structure.

    Every labelled diagram of both signs is reduced to its centre and the
    chains hanging off it.  Each distinct structure contributes the product
    of its chain weights: half the framing for a bare chord, half the square
    of the linking number for a one-circle loop, the plain linking product
    otherwise, and 1/k! for k parallel direct chords between two centres.
    """
    structures = set()
    for sign in (1, -1):
        for D in build_family(sign, profile):
            structures.add(family_structures(D))
    total = Fraction(0)
    for s in structures:
        if len(s) == 2:
            i, cycles = s
            term = Fraction(1)
            for cyc in cycles:
                term *= _cycle_weight(M, i, cyc)
            empties = sum(1 for cyc in cycles if not cyc)
            total += term / factorial(empties)
        else:
            i, j, paths = s
            term = Fraction(1)
            for path in paths:
                term *= _path_weight(M, i, j, path)
            total += term / factorial(Counter(paths)[()])
    return total
