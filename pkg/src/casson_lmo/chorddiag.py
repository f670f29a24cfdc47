"""Chord diagrams on ordered, oriented circles.

A diagram is stored as one tuple of chord labels per circle, read along the
circle's orientation.  Each label occurs exactly twice overall; the two
occurrences are the legs of that chord.  Labels are arbitrary integers and
carry no meaning beyond identifying chords, so two diagrams compare equal
when they agree up to relabelling chords and rotating each circle
independently.  Circle order and orientation are part of the data.
"""

from __future__ import annotations

import enum
import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .errors import ArgumentError, MatchingError, ParseError

__all__ = [
    "Leg",
    "ChordDiagram",
    "DiagramClass",
    "make_diagram",
    "from_circles",
    "canonical_key",
    "canonical_form",
    "smooth",
    "inflate",
    "infect",
    "relabel_circles",
    "disjoint_union",
    "is_connected",
    "structural_class",
    "all_labelings",
    "enumerate_chains",
    "enumerate_essential",
    "enumerate_infected",
    "build_family",
    "family_profiles",
    "sorted_diagrams",
    "parse_diagram",
    "format_diagram",
    "PLUS_SEEDS",
    "MINUS_SEEDS",
]


class Leg(NamedTuple):
    """A chord endpoint: 1-based circle index and 0-based position on it."""

    circle: int
    position: int


LegPair = tuple[Leg, Leg]
ChordRef = Union[int, tuple[Sequence[int], Sequence[int]]]


class DiagramClass(enum.Enum):
    CHAIN = "chain"
    PLUS_ESSENTIAL = "essential-plus"
    MINUS_ESSENTIAL = "essential-minus"
    OTHER = "other"


@dataclass(frozen=True, eq=False)
class ChordDiagram:
    """Chord labels along each circle; equality is up to rotation and relabelling."""

    circles: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.circles:
            raise ArgumentError("a chord diagram needs at least one circle")
        counts = Counter(label for seq in self.circles for label in seq)
        bad = sorted(label for label, k in counts.items() if k != 2)
        if bad:
            raise MatchingError(f"chord labels {bad} do not occur exactly twice")

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    @property
    def legs_per_circle(self) -> tuple[int, ...]:
        return tuple(len(seq) for seq in self.circles)

    @property
    def degree(self) -> int:
        return sum(len(seq) for seq in self.circles) // 2

    @cached_property
    def chords(self) -> dict[int, LegPair]:
        """Map chord label -> its two legs, in reading order."""
        found: dict[int, list[Leg]] = {}
        for ci, seq in enumerate(self.circles, start=1):
            for pos, label in enumerate(seq):
                found.setdefault(label, []).append(Leg(ci, pos))
        return {label: (legs[0], legs[1]) for label, legs in found.items()}

    def legs(self, chord: ChordRef) -> LegPair:
        return self.chords[_resolve(self, chord)]

    def is_mixed(self, chord: ChordRef) -> bool:
        a, b = self.legs(chord)
        return a.circle != b.circle

    def leg_pairs(self) -> list[LegPair]:
        """Chords as leg pairs, sorted by their first leg."""
        return sorted(self.chords.values())

    @cached_property
    def key(self) -> bytes:
        return canonical_key(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        return format_diagram(self)

    def __repr__(self) -> str:
        return f"ChordDiagram({format_diagram(self)!r})"


def from_circles(circles: Iterable[Iterable[int]]) -> ChordDiagram:
    """Build a diagram from per-circle label sequences."""
    return ChordDiagram(tuple(tuple(seq) for seq in circles))


def make_diagram(num_circles: int, chords: Iterable[tuple[Sequence[int], Sequence[int]]]) -> ChordDiagram:
    """Build a diagram from chords given as pairs of (circle, position) legs.

    Circles are 1-based and positions 0-based; the positions used on each
    circle must be exactly 0..k-1.  Chord ``i`` of the input gets label ``i``.
    """
    if num_circles < 1:
        raise ArgumentError("num_circles must be positive")
    slots: list[dict[int, int]] = [{} for _ in range(num_circles)]
    for label, pair in enumerate(chords):
        if len(pair) != 2:
            raise MatchingError(f"chord {label} does not have two legs")
        for leg in pair:
            circle, pos = int(leg[0]), int(leg[1])
            if not 1 <= circle <= num_circles or pos < 0:
                raise IndexError(f"leg ({circle},{pos}) out of range")
            if pos in slots[circle - 1]:
                raise MatchingError(f"leg ({circle},{pos}) used twice")
            slots[circle - 1][pos] = label
    circles = []
    for ci, used in enumerate(slots, start=1):
        k = len(used)
        if set(used) != set(range(k)):
            missing = sorted(set(range(max(used, default=-1) + 1)) - set(used))
            raise MatchingError(f"circle {ci}: positions {missing} carry no chord")
        circles.append(tuple(used[p] for p in range(k)))
    return ChordDiagram(tuple(circles))


def _resolve(D: ChordDiagram, chord: ChordRef) -> int:
    if isinstance(chord, int):
        if chord not in D.chords:
            raise IndexError(f"no chord labelled {chord}")
        return chord
    try:
        a, b = (Leg(int(x[0]), int(x[1])) for x in chord)
    except (TypeError, ValueError) as exc:
        raise IndexError(f"bad chord reference {chord!r}") from exc
    for label, pair in D.chords.items():
        if set(pair) == {a, b}:
            return label
    raise IndexError(f"no chord joins {tuple(a)} and {tuple(b)}")


def _fresh(D: ChordDiagram, count: int = 1) -> list[int]:
    start = max(D.chords, default=-1) + 1
    return list(range(start, start + count))


# ---------------------------------------------------------------------------
# canonical forms


def _canonical_sequences(circles: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least rotation choice, chords renumbered by first use.

    Circles are processed in order.  Because the leg count of each circle is
    fixed, the global minimum must be minimal on every prefix, so only tied
    partial choices are kept.
    """
    beam: list[tuple[tuple[int, ...], dict[int, int]]] = [((), {})]
    for seq in circles:
        k = len(seq)
        best: tuple[int, ...] | None = None
        nxt: list[tuple[tuple[int, ...], dict[int, int]]] = []
        for prefix, names in beam:
            for r in range(max(k, 1)):
                local = dict(names)
                out = []
                for label in seq[r:] + seq[:r] if k else ():
                    if label not in local:
                        local[label] = len(local)
                    out.append(local[label])
                cand = tuple(out)
                if best is None or cand < best:
                    best, nxt = cand, [(prefix + (cand,), local)]
                elif cand == best:
                    nxt.append((prefix + (cand,), local))
        # identical (prefix, names) pairs arise from symmetric circles
        seen = {}
        for prefix, names in nxt:
            seen.setdefault((prefix, tuple(sorted(names.items()))), (prefix, names))
        beam = list(seen.values())
    return beam[0][0]


def canonical_key(D: ChordDiagram) -> bytes:
    """Byte string equal for two diagrams iff they agree up to per-circle rotation."""
    seqs = _canonical_sequences(D.circles)
    return "|".join(".".join(map(str, seq)) for seq in seqs).encode("ascii")


def canonical_form(D: ChordDiagram) -> ChordDiagram:
    """The representative used by ``canonical_key``."""
    return ChordDiagram(_canonical_sequences(D.circles))


def sorted_diagrams(diagrams: Iterable[ChordDiagram]) -> list[ChordDiagram]:
    """Canonical representatives, deduplicated and in a deterministic order."""
    reps = {d.key: canonical_form(d) for d in diagrams}
    return [reps[k] for k in sorted(reps, key=lambda k: (len(k), k))]


# ---------------------------------------------------------------------------
# local moves


def smooth(D: ChordDiagram, chord: ChordRef) -> ChordDiagram:
    """Remove a chord and resplice the skeleton coherently with orientations.

    A chord joining circles i < j merges them into circle i (later circles
    shift down by one).  An internal chord with legs at positions p < q cuts
    its circle in two: the arc after q (through the basepoint) up to p keeps
    the circle's index and the arc strictly between p and q becomes circle
    n+1.
    """
    label = _resolve(D, chord)
    a, b = D.chords[label]
    circles = list(D.circles)
    if a.circle != b.circle:
        if a.circle > b.circle:
            a, b = b, a
        si, sj = circles[a.circle - 1], circles[b.circle - 1]
        merged = si[a.position + 1:] + si[:a.position] + sj[b.position + 1:] + sj[:b.position]
        circles[a.circle - 1] = merged
        del circles[b.circle - 1]
    else:
        seq = circles[a.circle - 1]
        p, q = sorted((a.position, b.position))
        circles[a.circle - 1] = seq[q + 1:] + seq[:p]
        circles.append(seq[p + 1:q])
    return ChordDiagram(tuple(circles))


def _inflate(D: ChordDiagram, label: int) -> tuple[ChordDiagram, int, int]:
    a, b = D.chords[label]
    first, second = _fresh(D, 2)
    circles = [list(seq) for seq in D.circles]
    circles[a.circle - 1][a.position] = first
    circles[b.circle - 1][b.position] = second
    circles.append([first, second])
    return from_circles(circles), first, second


def inflate(D: ChordDiagram, chord: ChordRef) -> ChordDiagram:
    """Cut a chord in two and join the halves through a new 2-leg circle n+1."""
    return _inflate(D, _resolve(D, chord))[0]


def infect(D: ChordDiagram, circle: int, gap: int) -> ChordDiagram:
    """Attach a new 1-leg circle n+1 by a chord ending in the given gap.

    Gap ``g`` of a circle with k > 0 legs is the interval just before leg g
    (gap 0 sits between the last and the first leg).  A bare circle has one
    gap, index 0.
    """
    if not 1 <= circle <= D.num_circles:
        raise IndexError(f"circle {circle} out of range")
    seq = D.circles[circle - 1]
    if not 0 <= gap < max(len(seq), 1):
        raise IndexError(f"circle {circle} has no gap {gap}")
    (label,) = _fresh(D)
    circles = list(D.circles)
    circles[circle - 1] = seq[:gap] + (label,) + seq[gap:]
    circles.append((label,))
    return ChordDiagram(tuple(circles))


def relabel_circles(D: ChordDiagram, perm: Sequence[int]) -> ChordDiagram:
    """Move old circle ``i`` (1-based) to position ``perm[i-1]`` (1-based)."""
    n = D.num_circles
    if sorted(perm) != list(range(1, n + 1)):
        raise ArgumentError(f"{list(perm)} is not a permutation of 1..{n}")
    circles: list[tuple[int, ...]] = [()] * n
    for old, new in enumerate(perm):
        circles[new - 1] = D.circles[old]
    return ChordDiagram(tuple(circles))


def disjoint_union(D1: ChordDiagram, D2: ChordDiagram) -> ChordDiagram:
    """Circles of D1 followed by circles of D2, chord labels kept apart."""
    shift = max(D1.chords, default=-1) + 1 - min(D2.chords, default=0)
    moved = tuple(tuple(label + shift for label in seq) for seq in D2.circles)
    return ChordDiagram(D1.circles + moved)


# ---------------------------------------------------------------------------
# structure


def is_connected(D: ChordDiagram) -> bool:
    """True iff mixed chords connect all circles."""
    parent = list(range(D.num_circles))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in D.chords.values():
        parent[find(a.circle - 1)] = find(b.circle - 1)
    return len({find(i) for i in range(D.num_circles)}) == 1


def _essential_profile(legs: Sequence[int]) -> bool:
    c = Counter(legs)
    others = len(legs) - c[2]
    return (c[4] == 1 and others == 1) or (c[3] == 2 and others == 2)


def structural_class(D: ChordDiagram) -> DiagramClass:
    """Classify a diagram as a chain, a signed essential diagram, or neither.

    Connected diagrams with one 4-leg circle or two 3-leg circles (all others
    carrying 2 legs) are essential exactly when their Theta coefficient is
    nonzero; a few such diagrams close to zero and are reported as OTHER.
    """
    if not is_connected(D):
        return DiagramClass.OTHER
    legs = D.legs_per_circle
    if all(k == 2 for k in legs):
        return DiagramClass.CHAIN
    if not _essential_profile(legs):
        return DiagramClass.OTHER
    from .closure import iota_theta

    value = iota_theta(D)
    if value > 0:
        return DiagramClass.PLUS_ESSENTIAL
    if value < 0:
        return DiagramClass.MINUS_ESSENTIAL
    return DiagramClass.OTHER


# ---------------------------------------------------------------------------
# enumeration

PLUS_SEEDS = (from_circles([(0, 0, 1, 1)]), from_circles([(0, 1, 2), (0, 2, 1)]))
MINUS_SEEDS = (from_circles([(0, 1, 0, 1)]), from_circles([(0, 1, 2), (0, 1, 2)]))


def _parse_sign(sign: object) -> int:
    table = {"+": 1, "-": -1, "plus": 1, "minus": -1, "⊕": 1, "⊖": -1, 1: 1, -1: -1}
    try:
        return table[sign]  # type: ignore[index]
    except (KeyError, TypeError):
        raise ArgumentError(f"unknown sign {sign!r}") from None


def all_labelings(diagrams: Iterable[ChordDiagram]) -> frozenset[ChordDiagram]:
    """Close a set of diagrams on n circles under all circle permutations."""
    out: dict[bytes, ChordDiagram] = {}
    for D in diagrams:
        for perm in itertools.permutations(range(1, D.num_circles + 1)):
            E = relabel_circles(D, perm)
            out.setdefault(E.key, E)
    return frozenset(out.values())


def _inflation_closure(seeds: Iterable[ChordDiagram], steps: int) -> Iterator[ChordDiagram]:
    """Diagrams reached from the seeds by exactly ``steps`` inflations."""
    layer = {D.key: D for D in seeds}
    for _ in range(steps):
        nxt: dict[bytes, ChordDiagram] = {}
        for D in layer.values():
            for label in D.chords:
                E = inflate(D, label)
                nxt.setdefault(E.key, E)
        layer = nxt
    return iter(layer.values())


def enumerate_chains(labels: Union[int, Sequence[int]]) -> frozenset[ChordDiagram]:
    """All chains of circles on m circles, m = ``labels`` or its length.

    Chains are grown from the one-chord knot diagram by inflation and then
    given every circle order.
    """
    m = labels if isinstance(labels, int) else len(labels)
    if not isinstance(labels, int) and len(set(labels)) != m:
        raise ArgumentError("circle labels must be distinct")
    if m < 1:
        raise ArgumentError("a chain needs at least one circle")
    templates = _inflation_closure([from_circles([(0, 0)])], m - 1)
    return all_labelings(templates)


def enumerate_essential(n: int, sign: object) -> frozenset[ChordDiagram]:
    """Essential diagrams of the given sign on n circles, all labelings."""
    s = _parse_sign(sign)
    if n < 1:
        raise ArgumentError("n must be at least 1")
    seeds = PLUS_SEEDS if s > 0 else MINUS_SEEDS
    templates: dict[bytes, ChordDiagram] = {}
    for seed in seeds:
        if seed.num_circles <= n:
            for D in _inflation_closure([seed], n - seed.num_circles):
                templates.setdefault(D.key, D)
    return all_labelings(templates.values())


def enumerate_infected(n: int) -> frozenset[ChordDiagram]:
    """Single infections of minus-essential diagrams on n-1 circles."""
    if n < 1:
        raise ArgumentError("n must be at least 1")
    if n == 1:
        return frozenset()
    out: dict[bytes, ChordDiagram] = {}
    for D in enumerate_essential(n - 1, -1):
        for ci, seq in enumerate(D.circles, start=1):
            for gap in range(max(len(seq), 1)):
                E = infect(D, ci, gap)
                out.setdefault(E.key, E)
    return all_labelings(out.values())


def _chain_out(D: ChordDiagram, label: int, times: int) -> ChordDiagram:
    for _ in range(times):
        D, _, label = _inflate(D, label)
    return D


def build_family(sign: object, profile: Sequence[int]) -> frozenset[ChordDiagram]:
    """All labelings of a seed whose chords were inflated the given numbers of times.

    A two-entry profile (a, b) starts from the one-circle seed and inflates
    its two chords a and b times; a three-entry profile (a, b, c) starts from
    the two-circle seed.  Each chord is inflated repeatedly along the newest
    piece, so it becomes a chain through a, b or c new circles.  Entries must
    be non-increasing and non-negative; the all-zero profile is the seed.
    """
    s = _parse_sign(sign)
    profile = tuple(int(x) for x in profile)
    if len(profile) not in (2, 3):
        raise ArgumentError("profile must have two or three entries")
    if any(x < 0 for x in profile) or list(profile) != sorted(profile, reverse=True):
        raise ArgumentError(f"profile {profile} is not non-increasing and non-negative")
    seeds = PLUS_SEEDS if s > 0 else MINUS_SEEDS
    D = seeds[0] if len(profile) == 2 else seeds[1]
    for label, times in zip(sorted(D.chords), profile):
        D = _chain_out(D, label, times)
    return all_labelings([D])


def family_profiles(num_circles: int) -> list[tuple[int, ...]]:
    """Profiles (a, b) and (a, b, c) whose families live on ``num_circles`` circles."""
    out: list[tuple[int, ...]] = []
    total = num_circles - 1
    for a in range(total, -1, -1):
        b = total - a
        if a >= b:
            out.append((a, b))
    total = num_circles - 2
    for a in range(total, -1, -1):
        for b in range(min(a, total - a), -1, -1):
            c = total - a - b
            if 0 <= c <= b:
                out.append((a, b, c))
    return out


# ---------------------------------------------------------------------------
# text format:  "n | (c1,p1)-(c2,p2); ..."

_LEG = r"\(\s*(\d+)\s*,\s*(\d+)\s*\)"
_CHORD = re.compile(rf"^{_LEG}\s*-\s*{_LEG}$")


def format_diagram(D: ChordDiagram) -> str:
    chords = "; ".join(f"({a.circle},{a.position})-({b.circle},{b.position})" for a, b in D.leg_pairs())
    return f"{D.num_circles} | {chords}" if chords else f"{D.num_circles} |"


def parse_diagram(text: str) -> ChordDiagram:
    head, sep, body = text.partition("|")
    if not sep:
        raise ParseError("expected 'n | chords'")
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"bad circle count {head.strip()!r}") from None
    chords = []
    for part in body.split(";"):
        part = part.strip()
        if not part:
            continue
        m = _CHORD.match(part)
        if m is None:
            raise ParseError(f"bad chord {part!r}")
        c1, p1, c2, p2 = map(int, m.groups())
        chords.append(((c1, p1), (c2, p2)))
    try:
        return make_diagram(n, chords)
    except (IndexError, ArgumentError, MatchingError) as exc:
        raise ParseError(str(exc)) from exc
