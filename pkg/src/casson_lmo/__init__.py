"""Casson-Walker-Lescop invariant of integral surgery on framed links.

The invariant is computed from the linking matrix and the Conway
polynomials of all sublinks, through the mu invariants of each sublink.
Chord-diagram tools reproduce the diagram classes and closure constants
that the formula rests on.
"""

from .chorddiag import ChordDiagram, build_family, enumerate_chains, enumerate_essential, enumerate_infected
from .closure import ClosureValue, iota_theta
from .errors import ArgumentError, CassonError, IncompleteDataError, MatchingError, ParseError
from .invariants import U, chain_product, mu, mu_via_decomposition, partition_sum_three, partition_sum_two
from .links import FramedLink, LinkInvariantData, framed_link, linking_matrix
from .surgery import ManifoldReport, iota0_partition, lambda_L, lmo_degree1, matveev_polyak_lambda

__version__ = "0.1.0"

__all__ = [
    "ArgumentError",
    "CassonError",
    "ChordDiagram",
    "ClosureValue",
    "FramedLink",
    "IncompleteDataError",
    "LinkInvariantData",
    "ManifoldReport",
    "MatchingError",
    "ParseError",
    "U",
    "build_family",
    "chain_product",
    "enumerate_chains",
    "enumerate_essential",
    "enumerate_infected",
    "framed_link",
    "iota0_partition",
    "iota_theta",
    "lambda_L",
    "linking_matrix",
    "lmo_degree1",
    "matveev_polyak_lambda",
    "mu",
    "mu_via_decomposition",
    "partition_sum_three",
    "partition_sum_two",
]
