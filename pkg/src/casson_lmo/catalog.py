"""A few standard links with known Conway polynomials."""

from __future__ import annotations

from .pd import PlanarDiagram, braid_closure, from_pd

__all__ = ["CATALOG", "CONWAY", "get"]

# raw PD codes in the usual table convention
_PD = {
    "trefoil": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
    "figure-eight": [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
    "hopf": [[4, 1, 3, 2], [2, 3, 1, 4]],
    "whitehead": [[6, 1, 7, 2], [10, 7, 5, 8], [4, 5, 1, 6], [2, 10, 3, 9], [8, 4, 9, 3]],
}

_BRAIDS = {
    "unknot": (1, []),
    "unlink2": (2, []),
    "borromean": (3, [1, -2, 1, -2, 1, -2]),
    "cinquefoil": (2, [1, 1, 1, 1, 1]),
}

CATALOG = tuple(sorted(set(_PD) | set(_BRAIDS)))

CONWAY = {
    "unknot": (1,),
    "unlink2": (),
    "trefoil": (1, 0, 1),
    "figure-eight": (1, 0, -1),
    "hopf": (0, -1),
    "whitehead": (0, 0, 0, 1),
    "borromean": (0, 0, 0, 0, 1),
    "cinquefoil": (1, 0, 3, 0, 1),
}


def get(name: str) -> PlanarDiagram:
    if name in _PD:
        return from_pd(_PD[name])
    if name in _BRAIDS:
        return braid_closure(*_BRAIDS[name])
    raise KeyError(name)
