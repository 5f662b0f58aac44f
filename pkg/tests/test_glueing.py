from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinglue.catalog import DEFAULT_CATALOG
from artinglue.glueing import glue, recover_alpha
from artinglue.morphisms import compose, find_frame_isomorphism, identity, meet_homs, top_morphism

import oracles

SMALL = DEFAULT_CATALOG.frames(4)
ALPHAS = [a for H, N in product(SMALL, repeat=2) for a in meet_homs(H, N)]


def test_glue_identity_on_two_chain_is_three_chain(C2, C3):
    g = glue(identity(C2))
    assert len(g.carrier) == 3
    assert find_frame_isomorphism(g.carrier, C3) is not None
    assert g.pair_set() == {("0", "0"), ("0", "1"), ("1", "1")}


def test_glue_top_is_product(C2, B2):
    g = glue(top_morphism(C2, C2))
    assert len(g.carrier) == 4
    assert find_frame_isomorphism(g.carrier, B2) is not None
    assert set(g.pi1_star.table.values()) == {"(0,1)", "(1,1)"}


def test_element_lookup_rejects_pairs_outside(C2):
    g = glue(identity(C2))
    assert g.element("0", "1") == "(0,1)"
    with pytest.raises(KeyError):
        g.element("1", "0")


@pytest.mark.parametrize("alpha", ALPHAS, ids=lambda a: f"{a.dom.name}->{a.cod.name}:{a.values}")
def test_glueing_matches_pair_oracle(alpha):
    H, N = alpha.dom, alpha.cod
    g = glue(alpha)
    assert g.pair_set() == oracles.glueing_pairs(alpha.table, H, N)
    assert len(g.carrier) == sum(len(N.down_set(alpha(h))) for h in H.elements)
    assert recover_alpha(g) == alpha
    assert compose(g.pi2, g.pi2_star) == identity(H)
    assert compose(g.pi1, g.pi1_star) == identity(N)


@pytest.mark.parametrize("alpha", ALPHAS, ids=lambda a: f"{a.dom.name}->{a.cod.name}:{a.values}")
def test_carrier_is_componentwise_sublattice(alpha):
    H, N = alpha.dom, alpha.cod
    g = glue(alpha)
    for p, q in product(g.carrier.elements, repeat=2):
        (n, h), (n2, h2) = g.pairs[p], g.pairs[q]
        assert g.pairs[g.carrier.meet(p, q)] == (N.meet(n, n2), H.meet(h, h2))
        assert g.pairs[g.carrier.join(p, q)] == (N.join(n, n2), H.join(h, h2))
        # join closure uses only monotonicity of alpha
        assert N.leq(N.join(n, n2), alpha(H.join(h, h2)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALPHAS))
def test_projections_are_adjoint_to_sections(alpha):
    g = glue(alpha)
    C = g.carrier
    for x, n in product(C.elements, alpha.cod.elements):
        assert alpha.cod.leq(g.pi1(x), n) == C.leq(x, g.pi1_star(n))
    for x, h in product(C.elements, alpha.dom.elements):
        assert alpha.dom.leq(g.pi2(x), h) == C.leq(x, g.pi2_star(h))
