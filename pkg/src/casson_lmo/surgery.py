"""Casson-Walker-Lescop invariant of integral surgery on a framed link."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .chorddiag import from_circles
from .closure import ClosureValue, close_combination
from .errors import ArgumentError
from .invariants import chain_product, mu
from .linalg import det, inertia, principal_minor_det
from .links import LinkInvariantData, nonempty_subsets

__all__ = [
    "ManifoldReport",
    "lambda_L",
    "iota0_partition",
    "set_partitions",
    "lmo_degree1",
    "lmo_normalisation",
    "unknot_closure",
    "lmo_normalisation_by_closure",
    "lmo_degree1_invariant",
    "matveev_polyak_lambda",
]


@dataclass(frozen=True)
class ManifoldReport:
    lambda_L: Fraction
    det: int
    betti1: int
    h1_order: Union[int, str]
    sigma: tuple[int, int]
    lambda_walker: Fraction | None

    def as_dict(self) -> dict:
        return {
            "lambda_L": _rat(self.lambda_L),
            "det": self.det,
            "betti1": self.betti1,
            "h1_order": self.h1_order,
            "sigma_plus": self.sigma[0],
            "sigma_minus": self.sigma[1],
            "lambda_walker": None if self.lambda_walker is None else _rat(self.lambda_walker),
        }


def _rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _minor_weighted_mu_sum(data: LinkInvariantData) -> Fraction:
    """Sum over sublinks I of (-1)^(n-|I|) det(matrix without I) mu(I)."""
    n = data.n
    total = Fraction(0)
    for I in nonempty_subsets(n):
        total += (-1) ** (n - len(I)) * principal_minor_det(data.matrix, I) * mu(data, I)
    return total


def lambda_L(data: LinkInvariantData) -> ManifoldReport:
    """Invariant of the manifold obtained by surgery along the link."""
    data.require_complete()
    M = data.matrix
    n = data.n
    sp, sm, nullity = inertia(M)
    d = det(M)
    sign_m = (-1) ** sm
    value = sign_m * d * (sp - sm) / 8 + (-1) ** (n + sm) * _minor_weighted_mu_sum(data)
    d_int = int(d)
    walker = 2 * value / abs(d) if d else None
    return ManifoldReport(
        lambda_L=value,
        det=d_int,
        betti1=nullity,
        h1_order=abs(d_int) if d_int else "infinite",
        sigma=(sp, sm),
        lambda_walker=walker,
    )


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def iota0_partition(M: Sequence[Sequence[int]]) -> Fraction:
    """Degree-zero closure as a sum over unions of chains of circles.

    A block {i} contributes its framing; a larger block contributes the
    closed path sum through its last element.  Each block also brings a -1.
    """
    total = Fraction(0)
    for part in set_partitions(list(range(len(M)))):
        term = Fraction((-1) ** len(part))
        for block in part:
            if len(block) == 1:
                term *= M[block[0]][block[0]]
            else:
                last = block[-1]
                term *= chain_product(M, last, last, block[:-1])
        total += term
    return total


def lmo_degree1(data: LinkInvariantData) -> tuple[Fraction, Fraction]:
    """Constant and theta coefficients of the closed, nu-normalised link integral."""
    data.require_complete()
    n = data.n
    c0 = (-1) ** n * det(data.matrix)
    c1 = _minor_weighted_mu_sum(data) / 2
    return c0, c1


def lmo_normalisation(sigma_plus: int, sigma_minus: int) -> ClosureValue:
    """Inverse powers of the closed unknot values, closed form."""
    sign = (-1) ** sigma_plus
    return ClosureValue(Fraction(sign), Fraction(sign * (sigma_plus - sigma_minus), 16))


def unknot_closure(framing_sign: int) -> ClosureValue:
    """Degree-one closure of the normalised integral of the (+1) or (-1) framed unknot.

    Up to degree two the integral is the bare circle, plus or minus half the
    one-chord diagram, one sixth of the parallel pair and minus one
    twenty-fourth of the crossed pair.
    """
    if framing_sign not in (1, -1):
        raise ArgumentError("framing sign must be +1 or -1")
    terms = [
        (Fraction(1), from_circles([()])),
        (Fraction(framing_sign, 2), from_circles([(0, 0)])),
        (Fraction(1, 6), from_circles([(0, 0, 1, 1)])),
        (Fraction(-1, 24), from_circles([(0, 1, 0, 1)])),
    ]
    return close_combination(terms)


def lmo_normalisation_by_closure(sigma_plus: int, sigma_minus: int) -> ClosureValue:
    out = ClosureValue(Fraction(1), Fraction(0))
    up, down = unknot_closure(1).inverse(), unknot_closure(-1).inverse()
    for _ in range(sigma_plus):
        out = out * up
    for _ in range(sigma_minus):
        out = out * down
    return out


def lmo_degree1_invariant(data: LinkInvariantData) -> ClosureValue:
    """Degree-one part of the normalised closure: |H_1| (or 0) plus theta times
    (-1)^b1 lambda / 2."""
    c0, c1 = lmo_degree1(data)
    sp, sm, _ = inertia(data.matrix)
    return ClosureValue(c0, c1) * lmo_normalisation(sp, sm)


def matveev_polyak_lambda(data: LinkInvariantData) -> Fraction:
    """Two-component invariant from the explicit Conway/linking expression.

    The expression equals (det/2)(lambda_W - sigma/4), and lambda_L is
    |det|/2 lambda_W.
    """
    if data.n != 2:
        raise ArgumentError("needs a two-component link")
    a, b, lk = data.fr(0), data.fr(1), data.lk(0, 1)
    d = a * b - lk * lk
    if d == 0:
        raise ArgumentError("linking matrix is singular")
    c2_1, c2_2 = data.coeff([0], 2), data.coeff([1], 2)
    c3 = data.coeff([0, 1], 3)
    rhs = (
        a * c2_2
        + b * c2_1
        + Fraction(lk**3 - lk, 12)
        + Fraction(a + b, 24) * (2 * lk * lk - a * b - 2)
        - c3
        + lk * (c2_1 + c2_2)
    )
    sp, sm, _ = inertia(data.matrix)
    half_det_walker = rhs + Fraction(d * (sp - sm), 8)
    return half_det_walker if d > 0 else -half_det_walker
