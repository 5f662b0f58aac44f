from __future__ import annotations

from dataclasses import replace

import pytest

from artinglue.catalog import DEFAULT_CATALOG, chain
from artinglue.errors import NotNormalEpi, VerificationFailed
from artinglue.extensions import (
    canonical_glue_iso,
    characteristic_map,
    classify,
    cokernel,
    extension_from_u,
    extension_of,
    is_normal_epi,
    is_normal_mono,
    is_weakly_schreier,
    kernel_of_normal_epi,
    sections,
    verify_adjoint_extension,
    verify_cokernel_universal,
    verify_kernel_universal,
)
from artinglue.glueing import glue
from artinglue.lattice import down_set_frame
from artinglue.morphisms import MeetHom, compose, identity, meet_homs, right_adjoint, top_morphism

import oracles

SMALL_PAIRS = [(G, u) for G in DEFAULT_CATALOG.frames(6) for u in G.elements]


def test_running_example_boolean_square(B2, C2):
    ext = extension_from_u(B2, "a")
    assert ext.N.elements == ("a", "1")
    assert ext.H.elements == ("0", "a")
    assert ext.e.table == {"0": "0", "a": "a", "b": "0", "1": "a"}
    assert ext.k_star.table == {x: B2.join(x, "a") for x in B2.elements}
    alpha = characteristic_map(ext)
    # the complement b makes the splitting reach the top of N everywhere
    assert set(alpha.table.values()) == {"1"}


def test_three_chain_classifies_to_identity(C3):
    alpha = characteristic_map(extension_from_u(C3, "m"))
    assert [alpha(h) for h in alpha.dom.elements] == ["m", "1"]
    assert alpha.preserves_joins()


def test_degenerate_extensions(B2):
    whole = extension_from_u(B2, "0")
    assert len(whole.N) == 4 and len(whole.H) == 1
    trivial = extension_from_u(B2, "1")
    assert len(trivial.N) == 1 and len(trivial.H) == 4


def test_cokernel_of_identity_and_top(B2):
    e, _ = cokernel(identity(B2))
    assert len(e.cod) == 1
    e, s = cokernel(top_morphism(B2, B2))
    assert e == identity(B2) and s == identity(B2)


def test_cokernel_section_is_implication(B2):
    ext = extension_from_u(B2, "a")
    e, s = cokernel(ext.k)
    for y in e.cod.elements:
        assert s(y) == oracles.implication(B2, "a", y)
    assert compose(e, ext.k).values == top_morphism(ext.N, ext.H).values


def test_kernel_of_non_normal_epi_is_rejected(B2):
    D = down_set_frame(B2, "a")
    # meet preserving onto {0, a} but not of the form - ^ a
    bad = MeetHom.from_dict(B2, D, {"0": "0", "a": "0", "b": "0", "1": "a"})
    with pytest.raises(NotNormalEpi):
        kernel_of_normal_epi(bad)
    assert not is_normal_epi(bad)


def test_kernel_of_meet_with_u(B2):
    ext = extension_from_u(B2, "a")
    k, k_star = kernel_of_normal_epi(ext.e)
    assert k.table == {"a": "a", "1": "1"}
    assert k_star.table == {"0": "a", "a": "a", "b": "1", "1": "1"}
    assert is_normal_mono(k)


@pytest.mark.parametrize("G,u", SMALL_PAIRS, ids=lambda x: getattr(x, "name", x))
def test_extension_from_u_is_adjoint(G, u):
    ext = extension_from_u(G, u)
    assert verify_adjoint_extension(ext)
    assert is_weakly_schreier(ext)
    assert right_adjoint(ext.e) == ext.e_star
    adjoint_sections = [s for s in sections(ext.e) if oracles.is_right_adjoint(G, ext.H, ext.e.table, s.table)]
    assert adjoint_sections == [ext.e_star]


def test_non_adjoint_section_breaks_schreier(B2):
    ext = extension_from_u(B2, "a")
    others = [s for s in sections(ext.e) if s != ext.e_star]
    # s(0) = 0 instead of a => 0 = b
    assert [s.table for s in others] == [{"0": "0", "a": "1"}]
    for s in others:
        assert not is_weakly_schreier(replace(ext, e_star=s))


def test_classify_detects_corrupted_extension(B2):
    ext = extension_from_u(B2, "a")
    corrupted = replace(ext, k_star=top_morphism(B2, ext.N))
    with pytest.raises(VerificationFailed):
        classify(corrupted)
    assert not verify_adjoint_extension(corrupted)


def test_glueing_iso_is_identity_on_pairs(C2):
    for alpha in meet_homs(C2, C2):
        ext = extension_of(alpha)
        iso = canonical_glue_iso(ext)
        assert iso.forward.table == {p: p for p in ext.G.elements}


def test_cokernel_universal_passes_and_fails(B2):
    ext = extension_from_u(B2, "a")
    assert verify_cokernel_universal(ext.k, ext.e, max_size=4)
    wrong = top_morphism(B2, ext.H)
    v = verify_cokernel_universal(ext.k, wrong, max_size=4)
    assert not v and v.witness["factorizations"] == 0


def test_kernel_universal_passes_and_fails(B2):
    ext = extension_from_u(B2, "a")
    assert verify_kernel_universal(ext.e, ext.k, max_size=4)
    v = verify_kernel_universal(ext.e, top_morphism(ext.N, B2), max_size=4)
    assert not v


def test_characteristic_map_of_glueing_round_trips():
    for H in DEFAULT_CATALOG.frames(4):
        for N in DEFAULT_CATALOG.frames(3):
            for alpha in meet_homs(H, N):
                assert characteristic_map(extension_of(alpha)) == alpha
                assert extension_of(alpha).glueing.pair_set() == glue(alpha).pair_set()


def test_one_element_quotient_is_trivially_schreier():
    C1 = chain(1)
    for N in DEFAULT_CATALOG.frames(4):
        assert is_weakly_schreier(extension_of(top_morphism(C1, N)))
