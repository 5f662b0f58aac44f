from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinglue.catalog import DEFAULT_CATALOG, chain
from artinglue.errors import DomainMismatch
from artinglue.extensions import ExtensionClass, characteristic_map, extension_of, is_normal_epi, top_extension
from artinglue.functorial import (
    baer_meet,
    bifunctor_action,
    enumerate_extensions,
    nat_iso_check,
    pullback_extension,
    pullback_keeps_normal_epi,
    pushout_extension,
    verify_pullback_universal,
    verify_pushout_universal,
)
from artinglue.glueing import glue
from artinglue.morphisms import (
    FrameMap,
    MeetHom,
    compose,
    find_frame_isomorphism,
    identity,
    meet_homs,
    pointwise_meet,
    top_morphism,
)

import oracles

SMALL = DEFAULT_CATALOG.frames(3)
ALPHAS = [a for H, N in product(SMALL, repeat=2) for a in meet_homs(H, N)]


def test_pullback_of_identity_along_top_is_boolean_square(C2, B2):
    ext = extension_of(identity(C2))
    pb = pullback_extension(ext, top_morphism(C2, C2))
    assert characteristic_map(pb) == top_morphism(C2, C2)
    assert find_frame_isomorphism(pb.G, B2) is not None


def test_pushout_along_map_into_three_chain(C2, C3):
    ext = extension_of(identity(C2))
    g = MeetHom.from_dict(C2, C3, {"0": "m", "1": "1"})
    po = pushout_extension(ext, g)
    assert characteristic_map(po).table == {"0": "m", "1": "1"}


def test_pullback_and_pushout_check_domains(C2, C3):
    ext = extension_of(identity(C2))
    with pytest.raises(DomainMismatch):
        pullback_extension(ext, identity(C3))
    with pytest.raises(DomainMismatch):
        pushout_extension(ext, identity(C3))


@pytest.mark.parametrize("alpha", ALPHAS, ids=lambda a: f"{a.dom.name}->{a.cod.name}:{a.values}")
def test_identity_laws(alpha):
    ext = extension_of(alpha)
    assert characteristic_map(pullback_extension(ext, identity(alpha.dom))) == alpha
    assert characteristic_map(pushout_extension(ext, identity(alpha.cod))) == alpha


def test_wrong_pullback_candidate_fails(C2):
    # swap alpha . f for alpha
    ext = extension_of(identity(C2))
    f = top_morphism(C2, C2)
    v = verify_pullback_universal(ext, f, glue(identity(C2)), max_size=4)
    assert not v and v.witness


def test_pullback_along_one_element_frame_passes(C2):
    ext = extension_of(identity(C2))
    f = top_morphism(chain(1), C2)
    assert verify_pullback_universal(ext, f, pullback_extension(ext, f), max_size=4)


def test_wrong_pushout_injection_fails_universal_property(C2, C3):
    ext = extension_of(identity(C2))
    g = MeetHom.from_dict(C2, C3, {"0": "m", "1": "1"})
    cand = pushout_extension(ext, g)
    wrong = FrameMap.from_function(ext.G, cand.G, lambda x: f"({g(ext.glueing.pairs[x][0])},1)")
    v = verify_pushout_universal(ext, g, cand, max_size=4, injection=wrong)
    assert not v
    # the square with k still commutes; the cocone triangle is what breaks
    assert v.witness["check"] == "l . f' = p"


def test_pushout_to_one_element_frame_passes(C2):
    ext = extension_of(identity(C2))
    g = top_morphism(C2, chain(1))
    assert verify_pushout_universal(ext, g, pushout_extension(ext, g), max_size=4)


def test_pullback_stays_normal_epi():
    for alpha in ALPHAS:
        ext = extension_of(alpha)
        for Hp in SMALL:
            for f in meet_homs(Hp, alpha.dom):
                assert pullback_keeps_normal_epi(ext, f)
                assert is_normal_epi(pullback_extension(ext, f).e)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(ALPHAS), st.sampled_from(SMALL), st.sampled_from(SMALL), st.data())
def test_bifunctor_coherence_property(alpha, Hp, Np, data):
    f = data.draw(st.sampled_from(meet_homs(Hp, alpha.dom)))
    g = data.draw(st.sampled_from(meet_homs(alpha.cod, Np)))
    out = bifunctor_action(extension_of(alpha), f, g)
    assert characteristic_map(out) == compose(g, compose(alpha, f))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALPHAS), st.sampled_from(SMALL), st.sampled_from(SMALL), st.data())
def test_pullback_functoriality(alpha, A, B, data):
    f1 = data.draw(st.sampled_from(meet_homs(A, alpha.dom)))
    f2 = data.draw(st.sampled_from(meet_homs(B, A)))
    ext = extension_of(alpha)
    twice = pullback_extension(pullback_extension(ext, f1), f2)
    once = pullback_extension(ext, compose(f1, f2))
    assert characteristic_map(twice) == characteristic_map(once)


def test_enumerate_extensions_counts(C2, C3):
    assert len(enumerate_extensions(C2, C2)) == 2
    assert len(enumerate_extensions(C3, C3)) == 6
    for H in DEFAULT_CATALOG.frames():
        assert len(enumerate_extensions(H, chain(1))) == 1


def test_nat_iso_reports_pass(C2, B2):
    reports = nat_iso_check(C2, B2, max_size=3)
    assert reports and all(r.passed for r in reports)
    assert {r.statement for r in reports} == {"hom-bijection", "pullback-naturality", "pushout-naturality"}


def test_baer_meet_unit_and_idempotence(C3):
    for c in enumerate_extensions(C3, C3):
        assert baer_meet(c, top_extension(C3, C3)) == c
        assert baer_meet(c, c) == c


def test_baer_meet_is_pair_set_intersection(C2, B2):
    for a, b in product(enumerate_extensions(C2, B2), repeat=2):
        m = baer_meet(a, b)
        assert m.alpha == pointwise_meet(a.alpha, b.alpha)
        expected = oracles.glueing_pairs(a.alpha.table, C2, B2) & oracles.glueing_pairs(b.alpha.table, C2, B2)
        assert glue(m.alpha).pair_set() == expected


def test_baer_meet_rejects_mismatched_classes(C2, C3):
    with pytest.raises(DomainMismatch):
        baer_meet(ExtensionClass(identity(C2)), ExtensionClass(identity(C3)))
