"""Oriented planar diagrams in PD notation.

A crossing is four edge labels read counterclockwise starting from the
incoming under-strand, so the under-strand runs from slot ``a`` to slot
``c``.  The over-strand runs either from ``d`` to ``b`` (a positive
crossing) or from ``b`` to ``d`` (a negative one).  Raw input carries no
orientation for the over-strand; it is recovered from the requirement that
every edge leaves one crossing and enters another.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArgumentError, ParseError

__all__ = [
    "Crossing",
    "PlanarDiagram",
    "from_pd",
    "braid_closure",
    "mirror",
    "switch_crossing",
    "smooth_crossing",
]


@dataclass(frozen=True)
class Crossing:
    a: int
    b: int
    c: int
    d: int
    sign: int

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.sign)

    def switched(self) -> Crossing:
        """Same crossing with the over- and under-strands exchanged."""
        if self.sign > 0:
            return Crossing(self.d, self.a, self.b, self.c, -1)
        return Crossing(self.b, self.c, self.d, self.a, 1)


@dataclass(frozen=True)
class PlanarDiagram:
    """Oriented crossings plus the ordered components.

    Each component lists its edges in orientation order starting from its
    smallest label; a component without crossings is an empty tuple.
    """

    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def num_components(self) -> int:
        return len(self.components)

    @property
    def free_loops(self) -> int:
        return sum(1 for comp in self.components if not comp)

    def component_of(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.components) for e in comp}

    def pd(self) -> list[list[int]]:
        return [list(x.labels) for x in self.crossings]

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)


def _traverse(crossings: Sequence[Crossing]) -> list[tuple[int, ...]]:
    """Edge cycles, each from its smallest label, ordered by that label."""
    nxt: dict[int, int] = {}
    for x in crossings:
        nxt[x.a] = x.c
        nxt[x.over_in] = x.over_out
    seen: set[int] = set()
    cycles = []
    for start in sorted(nxt):
        if start in seen:
            continue
        cyc = []
        e = start
        while e not in seen:
            seen.add(e)
            cyc.append(e)
            e = nxt[e]
        if e != start:
            raise ParseError("edges do not close up into components")
        cycles.append(tuple(cyc))
    return cycles


def _orient(raw: Sequence[tuple[int, int, int, int]]) -> list[int]:
    """Crossing signs making every edge run from one crossing to another.

    Each label must occur in exactly two slots.  Under-strand slots have a
    known direction; over-strand directions spread from them.  A component
    that is never an under-strand gets its direction from the usual label
    rule (the over-strand runs b -> d when d follows b), then propagation
    resumes.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    for k, x in enumerate(raw):
        if len(x) != 4:
            raise ParseError(f"crossing {k} does not have four labels")
        for slot, e in enumerate(x):
            occ.setdefault(e, []).append((k, slot))
    for e, where in occ.items():
        if len(where) != 2:
            raise ParseError(f"label {e} occurs {len(where)} times, expected 2")
    # role[(k, slot)] is +1 for an incoming end, -1 for an outgoing end
    role: dict[tuple[int, int], int] = {}
    sign: list[int | None] = [None] * len(raw)
    queue: deque[tuple[int, int]] = deque()

    def assign(where: tuple[int, int], r: int) -> None:
        if where in role:
            if role[where] != r:
                raise ParseError("inconsistent orientation")
            return
        role[where] = r
        queue.append(where)

    def set_sign(k: int, s: int) -> None:
        if sign[k] is not None:
            if sign[k] != s:
                raise ParseError(f"crossing {k} cannot be oriented consistently")
            return
        sign[k] = s
        assign((k, 3), 1 if s > 0 else -1)
        assign((k, 1), -1 if s > 0 else 1)

    for k in range(len(raw)):
        assign((k, 0), 1)
        assign((k, 2), -1)
    while True:
        while queue:
            k, slot = queue.popleft()
            r = role[(k, slot)]
            if slot in (1, 3):
                d_incoming = (slot == 3) == (r == 1)
                set_sign(k, 1 if d_incoming else -1)
            other = next(w for w in occ[raw[k][slot]] if w != (k, slot))
            assign(other, -r)
        pending = [k for k, s in enumerate(sign) if s is None]
        if not pending:
            break
        k = pending[0]
        _, b, _, d = raw[k]
        set_sign(k, -1 if (d - b == 1 or b - d > 1) else 1)
    return [int(s) for s in sign]  # type: ignore[arg-type]


def from_pd(pd: Iterable[Sequence[int]], num_components: int | None = None) -> PlanarDiagram:
    """Orient a raw PD code.

    ``num_components`` may exceed the number of edge cycles; the extra
    components are crossingless unknots split from the rest and come last.
    """
    try:
        raw = [tuple(int(v) for v in x) for x in pd]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad PD code: {exc}") from exc
    signs = _orient(raw)
    crossings = tuple(Crossing(*x, s) for x, s in zip(raw, signs))
    cycles = _traverse(crossings)
    if num_components is None:
        num_components = len(cycles)
    if num_components < len(cycles):
        raise ParseError(f"PD code has {len(cycles)} components, expected {num_components}")
    extra = num_components - len(cycles)
    return PlanarDiagram(crossings, tuple(cycles) + ((),) * extra)


def mirror(D: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing."""
    return PlanarDiagram(tuple(x.switched() for x in D.crossings), D.components)


def braid_closure(strands: int, word: Sequence[int]) -> PlanarDiagram:
    """Closure of a braid word; generator ``i`` crosses strands i and i+1.

    Positive ``i`` gives a positive crossing, ``-i`` a negative one.
    Strands that never cross anything close into split unknots.
    """
    if strands < 1:
        raise ArgumentError("need at least one strand")
    cur = list(range(1, strands + 1))
    label = strands
    raw: list[list[int]] = []
    for g in word:
        i = abs(g) - 1
        if g == 0 or i + 1 >= strands:
            raise ArgumentError(f"generator {g} out of range")
        left, right = cur[i], cur[i + 1]
        top_left, top_right = label + 1, label + 2
        label += 2
        if g > 0:
            raw.append([right, top_right, top_left, left])
        else:
            raw.append([left, right, top_right, top_left])
        # the strand from bottom-left ends top-right and vice versa
        cur[i], cur[i + 1] = top_left, top_right
    rename = {cur[k]: k + 1 for k in range(strands) if cur[k] != k + 1}
    raw = [[rename.get(e, e) for e in x] for x in raw]
    touched = {e for x in raw for e in x}
    idle = sum(1 for k in range(1, strands + 1) if k not in touched)
    crossings = tuple(Crossing(*x, 1 if g > 0 else -1) for x, g in zip(raw, word))
    return PlanarDiagram(crossings, tuple(_traverse(crossings)) + ((),) * idle)


def switch_crossing(D: PlanarDiagram, k: int) -> PlanarDiagram:
    xs = list(D.crossings)
    xs[k] = xs[k].switched()
    return PlanarDiagram(tuple(xs), D.components)


def smooth_crossing(D: PlanarDiagram, k: int) -> PlanarDiagram:
    """Oriented resolution of crossing k.

    The incoming under-edge continues as the outgoing over-edge and the
    incoming over-edge as the outgoing under-edge.  Loops left without
    crossings become split components at the end.
    """
    x = D.crossings[k]
    parent: dict[int, int] = {}

    def find(e: int) -> int:
        parent.setdefault(e, e)
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    loops = 0
    for e_in, e_out in ((x.a, x.over_out), (x.over_in, x.c)):
        r_in, r_out = find(e_in), find(e_out)
        if r_in == r_out:
            loops += 1
        else:
            parent[r_out] = r_in
    rest = tuple(
        Crossing(*(find(v) for v in y.labels), y.sign) for j, y in enumerate(D.crossings) if j != k
    )
    cycles = _traverse(rest)
    return PlanarDiagram(rest, tuple(cycles) + ((),) * (D.free_loops + loops))
