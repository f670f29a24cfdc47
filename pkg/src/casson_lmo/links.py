"""Framed links and the classical data the surgery formula consumes.

Component indices are 0-based throughout the Python API.  The JSON format
and the command line use 1-based indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .conway import Poly, conway_polynomial
from .errors import ArgumentError, IncompleteDataError
from .linalg import inertia, principal_minor_det
from .pd import Crossing, PlanarDiagram, _traverse, from_pd

__all__ = [
    "FramedLink",
    "LinkInvariantData",
    "framed_link",
    "linking_matrix",
    "sublink",
    "conway",
    "conway_coeff",
    "inertia",
    "principal_minor_det",
    "nonempty_subsets",
]


@dataclass(frozen=True)
class FramedLink:
    diagram: PlanarDiagram
    framings: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.framings) != self.diagram.num_components:
            raise ArgumentError(
                f"{len(self.framings)} framings for {self.diagram.num_components} components"
            )

    @property
    def num_components(self) -> int:
        return len(self.framings)


def framed_link(pd: Iterable[Sequence[int]], framings: Sequence[int], components: int | None = None) -> FramedLink:
    """Parse a PD code; ``components`` defaults to the number of framings."""
    n = len(framings) if components is None else components
    return FramedLink(from_pd(pd, n), tuple(int(f) for f in framings))


def linking_matrix(L: FramedLink) -> list[list[int]]:
    """Framings on the diagonal, half the signed mixed crossing count off it."""
    n = L.num_components
    comp = L.diagram.component_of()
    twice = [[0] * n for _ in range(n)]
    for x in L.diagram.crossings:
        i, j = comp[x.a], comp[x.b]
        if i != j:
            twice[i][j] += x.sign
            twice[j][i] += x.sign
    M = [[twice[i][j] // 2 for j in range(n)] for i in range(n)]
    for i in range(n):
        M[i][i] = L.framings[i]
    return M


def _restrict(D: PlanarDiagram, keep: Sequence[int]) -> PlanarDiagram:
    comp = D.component_of()
    kept = set(keep)
    parent: dict[int, int] = {}

    def find(e: int) -> int:
        parent.setdefault(e, e)
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    survivors = []
    for x in D.crossings:
        under, over = comp[x.a] in kept, comp[x.b] in kept
        if under and over:
            survivors.append(x)
        elif under:
            parent[find(x.c)] = find(x.a)
        elif over:
            parent[find(x.over_out)] = find(x.over_in)
    crossings = tuple(Crossing(*(find(v) for v in x.labels), x.sign) for x in survivors)
    cycles = _traverse(crossings)
    owner = {e: cyc for cyc in cycles for e in cyc}
    components = []
    for i in keep:
        roots = {find(e) for e in D.components[i]}
        hit = next((owner[r] for r in roots if r in owner), ())
        components.append(hit)
    return PlanarDiagram(crossings, tuple(components))


def sublink(L: FramedLink, I: Iterable[int]) -> FramedLink:
    """Components in I (0-based), in their original relative order."""
    keep = sorted(set(I))
    if not keep:
        raise ArgumentError("sublink needs at least one component")
    if keep[0] < 0 or keep[-1] >= L.num_components:
        raise ArgumentError("component index out of range")
    return FramedLink(_restrict(L.diagram, keep), tuple(L.framings[i] for i in keep))


def conway(L: FramedLink | PlanarDiagram) -> Poly:
    D = L.diagram if isinstance(L, FramedLink) else L
    return conway_polynomial(D)


def conway_coeff(L: FramedLink | PlanarDiagram | Sequence[object], k: int) -> Fraction:
    """Coefficient of z^k; accepts a link, a diagram or a coefficient list."""
    coeffs = conway(L) if isinstance(L, (FramedLink, PlanarDiagram)) else L
    return Fraction(coeffs[k]) if 0 <= k < len(coeffs) else Fraction(0)  # type: ignore[arg-type]


def nonempty_subsets(n: int) -> list[frozenset[int]]:
    return [frozenset(c) for m in range(1, n + 1) for c in itertools.combinations(range(n), m)]


@dataclass(frozen=True)
class LinkInvariantData:
    """Linking matrix plus Conway coefficients of sublinks, keyed by 0-based subsets.

    Missing sublinks are allowed at construction; formulas that need them
    raise ``IncompleteDataError``.
    """

    matrix: tuple[tuple[int, ...], ...]
    conway: Mapping[frozenset[int], tuple[Fraction, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        M = tuple(tuple(int(v) for v in row) for row in self.matrix)
        n = len(M)
        if any(len(row) != n for row in M):
            raise ArgumentError("linking matrix must be square")
        if any(M[i][j] != M[j][i] for i in range(n) for j in range(i)):
            raise ArgumentError("linking matrix must be symmetric")
        table = {}
        for key, coeffs in self.conway.items():
            I = frozenset(key)
            if not I or min(I) < 0 or max(I) >= n:
                raise ArgumentError(f"bad sublink {sorted(I)}")
            cs = [Fraction(c) for c in coeffs]
            while cs and cs[-1] == 0:
                cs.pop()
            m = len(I)
            for k, c in enumerate(cs):
                if c and (k < m - 1 or (k - m + 1) % 2):
                    raise ArgumentError(f"sublink {sorted(I)}: z^{k} cannot occur for {m} components")
            table[I] = tuple(cs)
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "conway", table)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def fr(self, i: int) -> int:
        return self.matrix[i][i]

    def lk(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def coeff(self, I: Iterable[int], k: int) -> Fraction:
        key = frozenset(I)
        if key not in self.conway:
            raise IncompleteDataError(f"no Conway data for sublink {sorted(i + 1 for i in key)}")
        cs = self.conway[key]
        return cs[k] if k < len(cs) else Fraction(0)

    def is_complete(self) -> bool:
        return all(I in self.conway for I in nonempty_subsets(self.n))

    def require_complete(self) -> None:
        for I in nonempty_subsets(self.n):
            self.coeff(I, 0)

    def permuted(self, perm: Sequence[int]) -> LinkInvariantData:
        """Old component i becomes new component perm[i]."""
        n = self.n
        M = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                M[perm[i]][perm[j]] = self.matrix[i][j]
        table = {frozenset(perm[i] for i in I): c for I, c in self.conway.items()}
        return LinkInvariantData(tuple(map(tuple, M)), table)

    def restricted(self, I: Iterable[int]) -> LinkInvariantData:
        """Data of the sublink on I, reindexed 0..|I|-1 in increasing order."""
        keep = sorted(set(I))
        pos = {c: k for k, c in enumerate(keep)}
        M = tuple(tuple(self.matrix[i][j] for j in keep) for i in keep)
        table = {frozenset(pos[i] for i in J): c for J, c in self.conway.items() if J <= set(keep)}
        return LinkInvariantData(M, table)

    @classmethod
    def from_link(cls, L: FramedLink) -> LinkInvariantData:
        table = {}
        for I in nonempty_subsets(L.num_components):
            table[I] = tuple(Fraction(c) for c in conway(sublink(L, I)))
        return cls(tuple(map(tuple, linking_matrix(L))), table)
