from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinglue.catalog import DEFAULT_CATALOG, boolean_square, chain, grid, m3, n5
from artinglue.errors import NotALattice, NotAPoset, NotDistributive, UnknownElement
from artinglue.lattice import (
    Poset,
    down_set_frame,
    frame_from_relation,
    hasse_dot,
    product_frame,
    up_set_frame,
    validate_frame,
)

import oracles

FRAMES = DEFAULT_CATALOG.frames()


@pytest.mark.parametrize("F", FRAMES, ids=lambda F: F.name)
def test_tables_match_brute_force(F):
    for x, y in product(F.elements, repeat=2):
        assert F.meet(x, y) == oracles.glb(F, x, y)
        assert F.join(x, y) == oracles.lub(F, x, y)
        assert F.impl(x, y) == oracles.implication(F, x, y)
    assert F.top == oracles.top(F)
    assert F.bottom == oracles.bottom(F)


def test_poset_rejects_cycles():
    with pytest.raises(NotAPoset) as info:
        Poset(["a", "b"], [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")])
    assert info.value.law == "antisymmetric"


def test_poset_rejects_missing_reflexivity():
    with pytest.raises(NotAPoset) as info:
        Poset(["a"], [])
    assert info.value.law == "reflexive"


def test_poset_rejects_non_transitive_relation():
    rel = [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")]
    with pytest.raises(NotAPoset) as info:
        Poset(["a", "b", "c"], rel)
    assert info.value.law == "transitive"


def test_from_relation_closes_and_checks_ids():
    p = Poset.from_relation(["0", "m", "1"], [("0", "m"), ("m", "1")])
    assert p.leq("0", "1")
    with pytest.raises(UnknownElement):
        Poset.from_relation(["0"], [("0", "x")])


def test_m3_is_not_distributive():
    with pytest.raises(NotDistributive) as info:
        validate_frame(m3())
    x, y, z = info.value.witness
    assert len({x, y, z}) == 3


def test_n5_is_not_distributive():
    with pytest.raises(NotDistributive):
        validate_frame(n5())


def test_missing_meet_is_reported():
    # two incomparable minimal elements and no bottom
    with pytest.raises(NotALattice) as info:
        frame_from_relation(["a", "b", "1"], [("a", "1"), ("b", "1")])
    assert info.value.operation == "meet"


def test_missing_join_is_reported():
    with pytest.raises(NotALattice) as info:
        frame_from_relation(["0", "a", "b"], [("0", "a"), ("0", "b")])
    assert info.value.operation == "join"


def test_chain_and_boolean_shapes():
    assert chain(3).elements == ("0", "m", "1")
    B2 = boolean_square()
    assert B2.meet("a", "b") == "0" and B2.join("a", "b") == "1"
    assert B2.impl("a", "0") == "b"
    assert len(grid(2, 3)) == 6


def test_down_and_up_set_frames(B2):
    down = down_set_frame(B2, "a")
    up = up_set_frame(B2, "a")
    assert down.elements == ("0", "a") and down.top == "a"
    assert up.elements == ("a", "1") and up.bottom == "a"


def test_product_frame_is_componentwise(C2, C3):
    P = product_frame(C2, C3)
    assert len(P) == 6
    assert P.meet("(1,0)", "(0,1)") == "(0,0)"
    assert P.join("(1,0)", "(0,m)") == "(1,m)"


def test_equality_ignores_name():
    a = chain(3)
    b = frame_from_relation(["0", "m", "1"], [("0", "m"), ("m", "1")], name="other")
    assert a == b and hash(a) == hash(b)


def test_hasse_dot_lists_covers_only(C3):
    dot = hasse_dot(C3)
    assert '"0" -> "m";' in dot and '"m" -> "1";' in dot
    assert '"0" -> "1";' not in dot


def test_linear_extension_respects_order():
    for F in FRAMES:
        order = F.linear_extension()
        pos = {x: i for i, x in enumerate(order)}
        assert all(pos[x] <= pos[y] for x, y in F.poset.pairs())


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FRAMES), st.data())
def test_heyting_adjunction_property(F, data):
    u, y, z = (data.draw(st.sampled_from(F.elements)) for _ in range(3))
    assert F.leq(z, F.impl(u, y)) == F.leq(F.meet(z, u), y)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FRAMES), st.data())
def test_lattice_laws_property(F, data):
    x, y, z = (data.draw(st.sampled_from(F.elements)) for _ in range(3))
    assert F.meet(x, F.join(y, z)) == F.join(F.meet(x, y), F.meet(x, z))
    assert F.meet(x, F.join(x, y)) == x
    assert F.meet(F.meet(x, y), z) == F.meet(x, F.meet(y, z))
