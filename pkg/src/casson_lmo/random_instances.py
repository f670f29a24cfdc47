"""Seeded random instances for property checks and the ``verify`` command.

Everything draws from :class:`random.Random`, the Mersenne Twister, so a
seed reproduces an instance exactly across runs and platforms.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .linalg import det
from .links import LinkInvariantData, nonempty_subsets
from .pd import PlanarDiagram, braid_closure

__all__ = [
    "random_symmetric_matrix",
    "hoste_leading_coefficient",
    "random_link_data",
    "random_braid_word",
    "random_braid_link",
]


def random_symmetric_matrix(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> list[list[int]]:
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = rng.randint(lo, hi)
    return M


def hoste_leading_coefficient(M: Sequence[Sequence[int]], comps: Sequence[int]) -> int:
    """Lowest Conway coefficient of a link with the given linking numbers.

    It is any principal cofactor of the weighted graph Laplacian of the
    linking numbers (the tree count weighted by products of linking numbers).
    """
    comps = list(comps)
    m = len(comps)
    if m == 1:
        return 1
    lap = [[0] * m for _ in range(m)]
    for a, i in enumerate(comps):
        for b, j in enumerate(comps):
            if a != b:
                lap[a][b] = -M[i][j]
                lap[a][a] += M[i][j]
    return int(det([row[1:] for row in lap[1:]]))


def random_link_data(
    rng: random.Random,
    n: int,
    entry_range: tuple[int, int] = (-3, 3),
    coeff_range: tuple[int, int] = (-3, 3),
    extra_terms: int = 1,
) -> LinkInvariantData:
    """Synthetic data with the right shape for every sublink.

    The lowest Conway coefficient of each sublink follows from its linking
    numbers; higher coefficients in the allowed parity are random integers.
    No diagram need realise the result.
    """
    M = random_symmetric_matrix(rng, n, *entry_range)
    table = {}
    for I in nonempty_subsets(n):
        m = len(I)
        coeffs = [Fraction(0)] * (m - 1) + [Fraction(hoste_leading_coefficient(M, sorted(I)))]
        for _ in range(extra_terms):
            coeffs += [Fraction(0), Fraction(rng.randint(*coeff_range))]
        table[I] = tuple(coeffs)
    return LinkInvariantData(tuple(map(tuple, M)), table)


def random_braid_word(rng: random.Random, strands: int, length: int) -> list[int]:
    if strands < 2:
        return []
    return [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]


def random_braid_link(
    rng: random.Random,
    strands: int,
    max_length: int,
    components: int | None = None,
    attempts: int = 200,
) -> tuple[list[int], PlanarDiagram]:
    """Closure of a random braid word of length 1..max_length.

    With ``components`` set, words are redrawn until the closure has that
    many components.
    """
    for _ in range(attempts):
        word = random_braid_word(rng, strands, rng.randint(1, max(1, max_length)))
        D = braid_closure(strands, word)
        if components is None or D.num_components == components:
            return word, D
    raise RuntimeError(f"no {components}-component closure found in {attempts} tries")
