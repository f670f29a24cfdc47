"""Conway polynomial by skein resolution towards descending diagrams.

Components are walked in order from their basepoints.  The first time a
crossing is met on its under-strand it is switched, and the smoothing at that
crossing is evaluated recursively; when the walk ends, every crossing was
first met from above, so the diagram is a stacked unlink.  Each switch uses

    grad(D) = grad(D switched) + sign * z * grad(D smoothed).

Kinks are removed first and split diagrams return zero early.  Results are
cached on a relabelled form of the diagram.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .pd import Crossing, PlanarDiagram

__all__ = ["Poly", "conway_polynomial", "conway_of_crossings", "poly_add", "poly_sub", "poly_shift"]

Poly = tuple[int, ...]  # little-endian coefficients in z, no trailing zeros

_State = tuple[tuple[int, int, int, int, int], ...]


def _trim(p: list[int]) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(p: Poly, q: Poly) -> Poly:
    out = [0] * max(len(p), len(q))
    for i, v in enumerate(p):
        out[i] += v
    for i, v in enumerate(q):
        out[i] += v
    return _trim(out)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, tuple(-v for v in q))


def poly_shift(p: Poly, k: int = 1) -> Poly:
    return (0,) * k + p if p else ()


def _over(x: tuple[int, ...]) -> tuple[int, int]:
    a, b, c, d, s = x
    return (d, b) if s > 0 else (b, d)


def _rename(xs: list[list[int]], old: int, new: int) -> None:
    for x in xs:
        for k in range(4):
            if x[k] == old:
                x[k] = new


def _drop_kinks(xs: list[list[int]], free: int) -> int:
    """Remove Reidemeister I curls in place; returns the updated loop count."""
    changed = True
    while changed:
        changed = False
        for idx, x in enumerate(xs):
            lab = x[:4]
            for k in range(4):
                if lab[k] == lab[(k + 1) % 4]:
                    rest = [lab[(k + 2) % 4], lab[(k + 3) % 4]]
                    del xs[idx]
                    if rest[0] == rest[1]:
                        free += 1
                    else:
                        # one of the two is incoming, the other outgoing
                        _rename(xs, rest[1], rest[0])
                    changed = True
                    break
            if changed:
                break
    return free


def _cycles(xs: Sequence[Sequence[int]]) -> list[list[int]]:
    nxt: dict[int, int] = {}
    for x in xs:
        nxt[x[0]] = x[2]
        oi, oo = _over(x)
        nxt[oi] = oo
    seen: set[int] = set()
    out = []
    for start in sorted(nxt):
        if start in seen:
            continue
        cyc = []
        e = start
        while e not in seen:
            seen.add(e)
            cyc.append(e)
            e = nxt[e]
        out.append(cyc)
    return out


def _is_split(xs: Sequence[Sequence[int]], cycles: list[list[int]]) -> bool:
    comp = {e: i for i, cyc in enumerate(cycles) for e in cyc}
    parent = list(range(len(cycles)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in xs:
        parent[find(comp[x[0]])] = find(comp[x[1]])
    return len({find(i) for i in range(len(cycles))}) > 1


def _relabel(xs: Sequence[Sequence[int]], cycles: list[list[int]]) -> _State:
    names = {}
    for cyc in cycles:
        for e in cyc:
            names[e] = len(names) + 1
    return tuple(sorted(tuple(names[v] for v in x[:4]) + (x[4],) for x in xs))


def _smooth(xs: list[list[int]], idx: int, free: int) -> tuple[list[list[int]], int]:
    x = xs[idx]
    a, c = x[0], x[2]
    oi, oo = _over(x)
    rest = [list(y) for k, y in enumerate(xs) if k != idx]
    # under-in joins over-out, then over-in joins under-out
    if a == oo:
        free += 1
    else:
        _rename(rest, oo, a)
        oi = a if oi == oo else oi
        c = a if c == oo else c
    if oi == c:
        free += 1
    else:
        _rename(rest, c, oi)
    return rest, free


def _evaluate(xs: list[list[int]], free: int) -> Poly:
    free = _drop_kinks(xs, free)
    if not xs:
        return (1,) if free == 1 else ()
    if free:
        return ()
    cycles = _cycles(xs)
    if len(cycles) > 1 and _is_split(xs, cycles):
        return ()
    return _descend(_relabel(xs, cycles))


@lru_cache(maxsize=1 << 17)
def _descend(state: _State) -> Poly:
    xs = [list(x) for x in state]
    cycles = _cycles(xs)
    head: dict[int, int] = {}
    for k, x in enumerate(xs):
        head[x[0]] = k
        head[_over(x)[0]] = k
    total: Poly = ()
    met: set[int] = set()
    for cyc in cycles:
        for e in cyc:
            k = head[e]
            if k in met:
                continue
            met.add(k)
            if xs[k][0] != e:
                continue
            sign = xs[k][4]
            smoothed, loops = _smooth(xs, k, 0)
            branch = poly_shift(_evaluate(smoothed, loops))
            total = poly_add(total, branch) if sign > 0 else poly_sub(total, branch)
            xs[k] = list(Crossing(*xs[k]).switched().as_tuple())
    return poly_add(total, (1,) if len(cycles) == 1 else ())


def conway_of_crossings(crossings: Sequence[Crossing], free_loops: int = 0) -> Poly:
    """Conway polynomial of oriented crossings plus split unknotted loops."""
    return _evaluate([list(x.as_tuple()) for x in crossings], free_loops)


def conway_polynomial(D: PlanarDiagram) -> Poly:
    return conway_of_crossings(D.crossings, D.free_loops)
