import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casson_lmo import catalog
from casson_lmo.errors import ArgumentError, IncompleteDataError, ParseError
from casson_lmo.io import data_from_json, data_to_json, format_rational, load_input, parse_components, parse_rational
from casson_lmo.links import FramedLink, LinkInvariantData, conway, framed_link, linking_matrix, sublink
from casson_lmo.pd import braid_closure
from casson_lmo.random_instances import hoste_leading_coefficient, random_braid_link, random_link_data


def test_linking_matrix_of_known_links():
    H = FramedLink(catalog.get("hopf"), (2, -3))
    assert linking_matrix(H) == [[2, -1], [-1, -3]]
    B = FramedLink(catalog.get("borromean"), (0, 0, 0))
    assert linking_matrix(B) == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    T = FramedLink(braid_closure(2, [1, 1, 1, 1]), (0, 0))
    assert linking_matrix(T)[0][1] == 2


def test_framings_are_taken_as_given():
    L = framed_link([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], [7])
    assert linking_matrix(L) == [[7]]
    with pytest.raises(ArgumentError):
        framed_link([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], [0, 0], 1)


def test_sublinks_of_borromean_are_unlinks():
    B = FramedLink(catalog.get("borromean"), (0, 0, 0))
    for I in ([0], [1], [2]):
        assert conway(sublink(B, I)) == (1,)
    for I in ([0, 1], [0, 2], [1, 2]):
        assert conway(sublink(B, I)) == ()
    with pytest.raises(ArgumentError):
        sublink(B, [])
    with pytest.raises(ArgumentError):
        sublink(B, [3])


def test_sublink_keeps_knot_type():
    # trefoil strand plus an unlinked meridian-free circle: sublink is the trefoil
    rng = random.Random(1)
    for _ in range(20):
        _, D = random_braid_link(rng, 3, 8, components=2)
        L = FramedLink(D, (0, 0))
        for i in (0, 1):
            assert len(sublink(L, [i]).diagram.components) == 1
            assert conway(sublink(L, [i]))[0] == 1


def test_hoste_on_braid_links():
    rng = random.Random(8)
    for _ in range(40):
        _, D = random_braid_link(rng, 4, 10)
        L = FramedLink(D, (0,) * D.num_components)
        n = D.num_components
        coeffs = conway(L)
        lowest = coeffs[n - 1] if len(coeffs) >= n else 0
        assert hoste_leading_coefficient(linking_matrix(L), range(n)) == lowest


def test_data_validation():
    with pytest.raises(ArgumentError):
        LinkInvariantData(((0, 1), (2, 0)), {})
    with pytest.raises(ArgumentError):
        LinkInvariantData(((0,),), {frozenset([0]): (1, 1)})  # z^1 for a knot
    with pytest.raises(ArgumentError):
        LinkInvariantData(((0,),), {frozenset([1]): (1,)})
    d = LinkInvariantData(((1, 0), (0, 1)), {frozenset([0]): (1, 0, 0)})
    assert d.conway[frozenset([0])] == (1,)
    assert not d.is_complete()
    with pytest.raises(IncompleteDataError, match=r"\[2\]"):
        d.require_complete()


def test_permuted_and_restricted():
    rng = random.Random(3)
    d = random_link_data(rng, 3)
    p = d.permuted([2, 0, 1])
    assert p.lk(2, 0) == d.lk(0, 1) and p.fr(2) == d.fr(0)
    assert p.coeff([2, 0], 1) == d.coeff([0, 1], 1)
    r = d.restricted([0, 2])
    assert r.n == 2 and r.lk(0, 1) == d.lk(0, 2) and r.coeff([0, 1], 1) == d.coeff([0, 2], 1)


def test_from_link_matches_sublink_polynomials():
    L = FramedLink(catalog.get("whitehead"), (1, -2))
    d = LinkInvariantData.from_link(L)
    assert d.is_complete()
    assert d.conway[frozenset([0, 1])] == (0, 0, 0, 1)
    assert d.matrix == ((1, 0), (0, -2))


def test_rationals():
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(4) == "4"
    assert parse_rational("3/9") == Fraction(1, 3)
    assert parse_rational(-2) == -2
    for bad in ("x", "1/0", True, 0.5, None):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_component_lists():
    assert parse_components("1,3") == [0, 2]
    assert parse_components("3, 1") == [0, 2]
    for bad in ("", "0", "1,1", "a"):
        with pytest.raises(ParseError):
            parse_components(bad)
    with pytest.raises(ParseError):
        parse_components("4", 3)


@given(st.integers(1, 4), st.integers(0, 10**6))
@settings(max_examples=50, deadline=None)
def test_json_round_trip(n, seed):
    d = random_link_data(random.Random(seed), n)
    text = json.dumps(data_to_json(d))
    assert data_from_json(json.loads(text)) == d


def test_load_input_shapes(tmp_path):
    f = tmp_path / "k.json"
    f.write_text(json.dumps({"pd": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], "components": 1, "framings": [1]}))
    d, L = load_input(f)
    assert L is not None and d.coeff([0], 2) == 1
    d2, L2 = load_input({"linking_matrix": [[1]], "conway": {"1": ["1"]}})
    assert L2 is None and d2.fr(0) == 1
    for bad in (
        {"pd": [[1, 2, 3]], "framings": [0]},
        {"pd": [], "components": 2, "framings": [0]},
        {"linking_matrix": [[0, 1], [0, 0]]},
        {"linking_matrix": [[0]], "conway": {"1": [0, "1/2"]}},
        {"linking_matrix": [[0]], "conway": {"2": [1]}},
        {"nothing": 1},
        [1, 2],
    ):
        with pytest.raises(ParseError):
            load_input(bad)
    g = tmp_path / "bad.json"
    g.write_text("{")
    with pytest.raises(ParseError):
        load_input(g)
