"""Degree-one closure of chord diagrams into Jacobi diagrams on the empty skeleton.

Every circle carrying k legs is replaced by a tree with k univalent ends:
an edge for k = 2, half a tripod for k = 3, and a sixth of each of the two
planar four-ended trees for k = 4.  Any other leg count kills the diagram.
The result is then reduced modulo everything of degree two or more, leaving
a multiple of the empty diagram plus a multiple of the theta graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .chorddiag import ChordDiagram, from_circles

__all__ = [
    "ClosureValue",
    "JacobiGraph",
    "NU_TRUNCATION",
    "reduce_le1",
    "jacobi_expansion",
    "iota1_le1",
    "iota_theta",
    "close_combination",
]

FREE_LOOP = Fraction(-2)


@dataclass(frozen=True)
class ClosureValue:
    """``c0`` times the empty diagram plus ``c1`` times theta."""

    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)

    def __add__(self, other: ClosureValue) -> ClosureValue:
        return ClosureValue(self.c0 + other.c0, self.c1 + other.c1)

    def __mul__(self, other: ClosureValue) -> ClosureValue:
        # product truncated to degree one
        return ClosureValue(self.c0 * other.c0, self.c0 * other.c1 + self.c1 * other.c0)

    def scale(self, k: Fraction | int) -> ClosureValue:
        return ClosureValue(self.c0 * k, self.c1 * k)

    def inverse(self) -> ClosureValue:
        if self.c0 == 0:
            raise ZeroDivisionError("degree-zero part vanishes")
        return ClosureValue(1 / self.c0, -self.c1 / self.c0**2)


@dataclass(frozen=True)
class JacobiGraph:
    """Trivalent vertices as cyclically ordered half-edge triples, plus edges.

    ``edges`` pairs up half-edges; ``free_loops`` counts vertexless circles.
    """

    vertices: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int], ...]
    free_loops: int = 0

    @property
    def degree(self) -> Fraction:
        return Fraction(len(self.vertices), 2)


def reduce_le1(g: JacobiGraph) -> ClosureValue:
    """Project a Jacobi graph onto span{empty, theta}.

    Free loops contribute -2 each.  With two vertices the only connected
    options are theta and the dumbbell; the dumbbell has a loop edge and
    vanishes by antisymmetry.  A theta whose two vertices see the three edges
    in the same cyclic order is minus the planar theta.
    """
    loops = FREE_LOOP ** g.free_loops
    if not g.vertices:
        return ClosureValue(loops, Fraction(0))
    if len(g.vertices) != 2:
        return ClosureValue()
    u, v = g.vertices
    partner: dict[int, int] = {}
    for a, b in g.edges:
        partner[a], partner[b] = b, a
    slot_v = {h: k for k, h in enumerate(v)}
    image = []
    for h in u:
        other = partner[h]
        if other not in slot_v:
            return ClosureValue()  # loop edge at u, hence one at v too
        image.append(slot_v[other])
    same_order = image in ([0, 1, 2], [1, 2, 0], [2, 0, 1])
    return ClosureValue(Fraction(0), -loops if same_order else loops)


def _trees(seq_len: int) -> list[tuple[Fraction, list[tuple[int, ...]]]]:
    """Trees replacing a circle with ``seq_len`` legs.

    Each tree is a list of vertices given by leg positions, with -1 standing
    for the internal edge of the four-ended trees.  Two-leg circles become a
    plain edge, encoded as an empty vertex list.
    """
    if seq_len == 2:
        return [(Fraction(1), [])]
    if seq_len == 3:
        return [(Fraction(1, 2), [(0, 1, 2)])]
    if seq_len == 4:
        return [
            (Fraction(1, 6), [(0, 1, -1), (2, 3, -1)]),
            (Fraction(1, 6), [(1, 2, -1), (3, 0, -1)]),
        ]
    return []


def jacobi_expansion(D: ChordDiagram) -> Iterator[tuple[Fraction, JacobiGraph]]:
    """Weighted Jacobi graphs obtained by substituting a tree for every circle."""
    options = [_trees(len(seq)) for seq in D.circles]
    if any(not opt for opt in options):
        return
    partner: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b in D.chords.values():
        partner[tuple(a)] = tuple(b)
        partner[tuple(b)] = tuple(a)
    for choice in itertools.product(*options):
        coef = Fraction(1)
        vertices: list[tuple[int, int, int]] = []
        edges: list[tuple[int, int]] = []
        leg_half: dict[tuple[int, int], int] = {}
        strut: dict[tuple[int, int], tuple[int, int]] = {}
        half = itertools.count()
        for ci, (weight, tree) in enumerate(choice, start=1):
            coef *= weight
            if not tree:
                strut[(ci, 0)], strut[(ci, 1)] = (ci, 1), (ci, 0)
                continue
            inner = (next(half), next(half)) if len(tree) == 2 else None
            inner_used = 0
            for vertex in tree:
                ids = []
                for pos in vertex:
                    if pos < 0:
                        ids.append(inner[inner_used])
                        inner_used += 1
                    else:
                        h = next(half)
                        leg_half[(ci, pos)] = h
                        ids.append(h)
                vertices.append(tuple(ids))
            if inner is not None:
                edges.append(inner)
        seen: set[tuple[int, int]] = set()
        for leg, h in leg_half.items():
            if leg in seen:
                continue
            cur = leg
            seen.add(cur)
            while True:
                other = partner[cur]
                seen.add(other)
                if other in leg_half:
                    edges.append((h, leg_half[other]))
                    break
                cur = strut[other]
                seen.add(cur)
        loops = 0
        for leg in strut:
            if leg in seen:
                continue
            loops += 1
            cur = leg
            while cur not in seen:
                seen.add(cur)
                other = partner[cur]
                seen.add(other)
                cur = strut[other]
        yield coef, JacobiGraph(tuple(vertices), tuple(edges), loops)


def iota1_le1(D: ChordDiagram) -> ClosureValue:
    """Closure of D truncated to degree at most one.

    Bare circles and circles with one or five or more legs close to zero.
    """
    total = ClosureValue()
    for coef, graph in jacobi_expansion(D):
        if len(graph.vertices) > 2:
            continue
        total = total + reduce_le1(graph).scale(coef)
    return total


# normalising factor glued into every circle, truncated to degree two
NU_TRUNCATION: tuple[tuple[Fraction, tuple[int, ...]], ...] = (
    (Fraction(1), ()),
    (Fraction(1, 24), (-1, -1, -2, -2)),
    (Fraction(-1, 24), (-1, -2, -1, -2)),
)


def iota_theta(D: ChordDiagram) -> Fraction:
    """Theta coefficient of the closure of D with a copy of nu on every circle.

    The nu chords sit in one small arc of each circle.  Adding them to a
    circle that already has legs pushes it past four legs, which closes to
    zero, so only bare circles actually receive nontrivial nu terms.
    """
    per_circle = []
    for ci, seq in enumerate(D.circles):
        opts = []
        for coef, extra in NU_TRUNCATION:
            if extra and len(seq) + len(extra) > 4:
                continue
            fresh = tuple(-(2 * ci + 1) if x == -1 else -(2 * ci + 2) for x in extra)
            opts.append((coef, seq + fresh))
        per_circle.append(opts)
    total = Fraction(0)
    for choice in itertools.product(*per_circle):
        coef = Fraction(1)
        for c, _ in choice:
            coef *= c
        total += coef * iota1_le1(from_circles(seq for _, seq in choice)).c1
    return total


def close_combination(terms: Iterable[tuple[Fraction | int, ChordDiagram]]) -> ClosureValue:
    """Linear extension of ``iota1_le1`` with nu glued in (degree-one part)."""
    total = ClosureValue()
    for coef, D in terms:
        total = total + ClosureValue(iota1_le1(D).c0, iota_theta(D)).scale(coef)
    return total
