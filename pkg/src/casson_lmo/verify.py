"""Self-checks run by ``casson-lmo verify`` and by the acceptance tests.

Each suite returns named checks.  Random instances come from a
``random.Random`` seeded per suite, so a run is reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import catalog
from .chorddiag import (
    build_family,
    enumerate_chains,
    enumerate_essential,
    enumerate_infected,
    family_profiles,
)
from .closure import ClosureValue, iota1_le1, iota_theta
from .conway import conway_polynomial, poly_shift, poly_sub
from .invariants import mu, mu_via_decomposition, partition_sum_three, partition_sum_two
from .linalg import det
from .links import FramedLink, LinkInvariantData, linking_matrix
from .oracles import brute_force_essential, family_sum
from .pd import Crossing, PlanarDiagram, smooth_crossing, switch_crossing
from .random_instances import random_braid_link, random_link_data, random_symmetric_matrix
from .surgery import iota0_partition, lambda_L, matveev_polyak_lambda

__all__ = ["Check", "SUITES", "run_suite", "run_all"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _check(name: str, failures: list[str], total: int) -> Check:
    if failures:
        return Check(name, False, f"{len(failures)}/{total} failed; first: {failures[0]}")
    return Check(name, True, f"{total} cases")


def disjoint_diagrams(D1: PlanarDiagram, D2: PlanarDiagram) -> PlanarDiagram:
    """Split union, shifting the labels of the second diagram."""
    shift = max((v for x in D1.crossings for v in x.labels), default=0)
    moved = tuple(Crossing(*(v + shift for v in x.labels), x.sign) for x in D2.crossings)
    comps = tuple(tuple(v + shift for v in c) for c in D2.components)
    return PlanarDiagram(D1.crossings + moved, D1.components + comps)


# enumeration and closure


def check_counts(max_size: int = 6) -> list[Check]:
    expected = {
        ("+", 1): 1, ("-", 1): 1, ("+", 2): 3, ("-", 2): 3,
        ("P", 1): 0, ("P", 2): 2,
    }
    failures = []
    for (kind, n), want in expected.items():
        got = len(enumerate_infected(n) if kind == "P" else enumerate_essential(n, kind))
        if got != want:
            failures.append(f"{kind}({n}) = {got}, expected {want}")
    return [_check("enumeration counts", failures, len(expected))]


def check_dual_enumeration(max_size: int = 4) -> list[Check]:
    failures = []
    sizes = range(1, min(4, max_size) + 1)
    for n in sizes:
        for sign in ("+", "-"):
            a, b = enumerate_essential(n, sign), brute_force_essential(n, 1 if sign == "+" else -1)
            if a != b:
                failures.append(f"E{sign}({n}): {len(a)} by inflation, {len(b)} by brute force")
    return [_check("inflation vs brute-force enumeration", failures, 2 * len(sizes))]


def check_closure_constants(max_size: int = 5) -> list[Check]:
    from .chorddiag import MINUS_SEEDS, PLUS_SEEDS, from_circles

    fixed = [
        ("plus seed", PLUS_SEEDS[0], Fraction(1, 6)),
        ("minus seed", MINUS_SEEDS[0], Fraction(-1, 3)),
        ("bare circle", from_circles([()]), Fraction(1, 48)),
    ]
    failures = [f"{name}: {iota_theta(D)}" for name, D, want in fixed if iota_theta(D) != want]
    total = len(fixed)
    for n in range(1, min(5, max_size) + 1):
        for profile in family_profiles(n):
            for sign in (1, -1):
                if len(profile) == 2:
                    want = Fraction(1, 6) if sign > 0 else Fraction(-1, 3)
                else:
                    want = Fraction(sign, 4)
                for D in build_family(sign, profile):
                    total += 1
                    if iota_theta(D) != want:
                        failures.append(f"{D}: {iota_theta(D)} != {want}")
    return [_check("theta coefficients of seeds and families", failures, total)]


def check_chains(max_size: int = 6) -> list[Check]:
    failures, total = [], 0
    for m in range(1, min(6, max_size) + 1):
        for D in enumerate_chains(m):
            total += 1
            value = ClosureValue(iota1_le1(D).c0, iota_theta(D))
            if value != ClosureValue(Fraction(-2), Fraction(0)):
                failures.append(f"{D}: {value}")
    return [_check("chains close to (-2, 0)", failures, total)]


# Conway polynomial


def check_conway(seed: int = 0, max_size: int = 10) -> list[Check]:
    rng = random.Random(seed)
    out = []
    unknots = [catalog.get("unknot"), PlanarDiagram((Crossing(1, 1, 2, 2, 1),), ((1, 2),))]
    out.append(_check("unknot is 1", [str(D) for D in unknots if conway_polynomial(D) != (1,)], 2))
    failures = []
    for _ in range(50):
        word, D = random_braid_link(rng, rng.randint(2, 4), min(10, max_size), components=2)
        lk = linking_matrix(FramedLink(D, (0, 0)))[0][1]
        poly = conway_polynomial(D)
        c1 = poly[1] if len(poly) > 1 else 0
        if c1 != lk:
            failures.append(f"braid {word}: c1 {c1}, lk {lk}")
    out.append(_check("c1 equals linking number", failures, 50))
    failures = []
    for _ in range(100):
        word, D = random_braid_link(rng, rng.randint(2, 4), min(10, max_size))
        k = rng.randrange(len(D.crossings))
        plus = D if D.crossings[k].sign > 0 else switch_crossing(D, k)
        minus, zero = switch_crossing(plus, k), smooth_crossing(plus, k)
        lhs = poly_sub(conway_polynomial(plus), conway_polynomial(minus))
        if lhs != poly_shift(conway_polynomial(zero)):
            failures.append(f"braid {word}, crossing {k}")
    out.append(_check("skein relation", failures, 100))
    failures = []
    for _ in range(20):
        _, D1 = random_braid_link(rng, rng.randint(2, 3), 6)
        _, D2 = random_braid_link(rng, rng.randint(2, 3), 6)
        if conway_polynomial(disjoint_diagrams(D1, D2)) != ():
            failures.append(f"{D1.pd()} + {D2.pd()}")
    out.append(_check("split links vanish", failures, 20))
    return out


# linear algebra and formulas


def check_det_identity(seed: int = 0, max_size: int = 6) -> list[Check]:
    rng = random.Random(seed)
    failures = []
    for _ in range(200):
        n = rng.randint(1, min(6, max_size))
        M = random_symmetric_matrix(rng, n, -5, 5)
        if iota0_partition(M) != (-1) ** n * det(M):
            failures.append(str(M))
    return [_check("degree-zero closure equals (-1)^n det", failures, 200)]


def check_mu_paths(seed: int = 0, max_size: int = 6) -> list[Check]:
    rng = random.Random(seed)
    failures = []
    for _ in range(100):
        data = random_link_data(rng, rng.randint(3, max(3, min(6, max_size))))
        if mu(data) != mu_via_decomposition(data):
            failures.append(str(data.matrix))
    return [_check("mu closed form equals decomposition", failures, 100)]


def check_partition_sums(seed: int = 0, max_size: int = 5) -> list[Check]:
    rng = random.Random(seed)
    failures, total = [], 0
    for n in range(1, min(5, max_size) + 1):
        for profile in family_profiles(n):
            for _ in range(50):
                total += 1
                M = random_symmetric_matrix(rng, n, -3, 3)
                fast = partition_sum_two(M, *profile) if len(profile) == 2 else partition_sum_three(M, *profile)
                if fast != family_sum(M, profile):
                    failures.append(f"{profile} on {M}")
    return [_check("partition sums vs labelled-diagram oracle", failures, total)]


def _unknot(p: int) -> LinkInvariantData:
    return LinkInvariantData(((p,),), {frozenset([0]): (Fraction(1),)})


def _knot(name: str, p: int) -> LinkInvariantData:
    return LinkInvariantData.from_link(FramedLink(catalog.get(name), (p,)))


def check_lambda_special(seed: int = 0, max_size: int = 6) -> list[Check]:
    cases: list[tuple[str, Fraction, Fraction]] = [
        ("+1 unknot", lambda_L(_unknot(1)).lambda_L, Fraction(0)),
        ("0 unknot", lambda_L(_unknot(0)).lambda_L, Fraction(-1, 12)),
    ]
    for p in range(1, 7):
        cases.append((f"{p}-framed unknot", lambda_L(_unknot(p)).lambda_L, Fraction(-(p - 1) * (p - 2), 24)))
    for name in ("trefoil", "figure-eight"):
        c2 = Fraction(catalog.CONWAY[name][2])
        for eps in (1, -1):
            cases.append((f"{eps:+d} {name}", lambda_L(_knot(name, eps)).lambda_L, eps * c2))
    failures = [f"{name}: {got}, expected {want}" for name, got, want in cases if got != want]
    return [_check("lambda special cases", failures, len(cases))]


def check_matveev_polyak(seed: int = 0, max_size: int = 6) -> list[Check]:
    rng = random.Random(seed)
    failures, done = [], 0
    while done < 100:
        data = random_link_data(rng, 2, (-4, 4))
        if det(data.matrix) == 0:
            continue
        done += 1
        a, b = lambda_L(data).lambda_L, matveev_polyak_lambda(data)
        if a != b:
            failures.append(f"{data.matrix}: {a} vs {b}")
    return [_check("surgery formula vs two-component closed form", failures, 100)]


def stabilize(data: LinkInvariantData) -> LinkInvariantData:
    """Append a split (+1)-framed unknot."""
    n = data.n
    M = [list(row) + [0] for row in data.matrix] + [[0] * n + [1]]
    table = dict(data.conway)
    for I in list(data.conway):
        table[I | {n}] = ()
    table[frozenset([n])] = (Fraction(1),)
    return LinkInvariantData(tuple(map(tuple, M)), table)


def check_stabilization(seed: int = 0, max_size: int = 6) -> list[Check]:
    rng = random.Random(seed)
    failures = []
    for _ in range(50):
        data = random_link_data(rng, rng.randint(1, max(1, min(4, max_size - 1))))
        a, b = lambda_L(data).lambda_L, lambda_L(stabilize(data)).lambda_L
        if a != b:
            failures.append(f"{data.matrix}: {a} -> {b}")
    return [_check("split (+1) unknot leaves lambda unchanged", failures, 50)]


def _enumeration(seed: int = 0, max_size: int = 6) -> list[Check]:
    return check_counts(max_size) + check_dual_enumeration(max_size) + check_chains(max_size)


def _closure(seed: int = 0, max_size: int = 6) -> list[Check]:
    return check_closure_constants(max_size)


SUITES: dict[str, Callable[..., list[Check]]] = {
    "enumeration": _enumeration,
    "closure": _closure,
    "skein": check_conway,
    "det-identity": check_det_identity,
    "mu-paths": check_mu_paths,
    "partition-sums": check_partition_sums,
    "lambda-special": check_lambda_special,
    "matveev-polyak": check_matveev_polyak,
    "stabilization": check_stabilization,
}


def run_suite(name: str, seed: int = 0, max_size: int | None = None) -> list[Check]:
    """Run one suite; ``max_size`` caps its sizes, otherwise the suite's defaults apply."""
    if max_size is None:
        return SUITES[name](seed=seed)
    return SUITES[name](seed=seed, max_size=max_size)


def run_all(seed: int = 0, max_size: int | None = None) -> dict[str, list[Check]]:
    return {name: run_suite(name, seed, max_size) for name in SUITES}
