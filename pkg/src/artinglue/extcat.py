"""Morphisms of extensions and of adjoint extensions between glueings.

Morphisms of extensions only need to commute with k and e. Morphisms of
adjoint extensions must also carry one section to the other, and between
glueings there is at most one of them: Gl(beta) -> Gl(alpha) exists exactly
when alpha <= beta, and it is (n, h) -> (n ^ alpha(h), h).
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import chain
from .errors import DomainMismatch, NoAdjoint, NotLeq, VerificationFailed
from .extensions import AdjointExtension, characteristic_map, extension_of
from .lattice import FiniteFrame
from .morphisms import (
    FrameMap,
    MeetHom,
    compose,
    enumerate_meet_homs,
    find_frame_isomorphism,
    identity,
    left_adjoint,
    meet_homs,
    pointwise_leq,
    right_adjoint,
    top_morphism,
)
from .reports import Verdict


def _first_difference(lhs: FrameMap, rhs: FrameMap) -> str:
    return next(x for x in lhs.dom.elements if lhs(x) != rhs(x))


def _square_failures(src: AdjointExtension, dst: AdjointExtension, f: FrameMap, splitting: bool):
    if src.N != dst.N or src.H != dst.H:
        raise DomainMismatch("extensions must share N and H")
    if f.dom != src.G or f.cod != dst.G:
        raise DomainMismatch("f must go from the middle of src to the middle of dst")
    if f.meet_witness() is not None:
        return {"square": "f preserves finite meets", "at": f.meet_witness()}
    squares = [("f . k = k'", compose(f, src.k), dst.k), ("e' . f = e", compose(dst.e, f), src.e)]
    if splitting:
        squares.append(("f . e_star = e'_star", compose(f, src.e_star), dst.e_star))
    for name, lhs, rhs in squares:
        if lhs != rhs:
            return {"square": name, "at": _first_difference(lhs, rhs)}
    return None


def is_ext_morphism(src: AdjointExtension, dst: AdjointExtension, f: FrameMap) -> Verdict:
    w = _square_failures(src, dst, f, splitting=False)
    return Verdict(w is None, w)


def is_adjext_morphism(src: AdjointExtension, dst: AdjointExtension, f: FrameMap) -> Verdict:
    w = _square_failures(src, dst, f, splitting=True)
    return Verdict(w is None, w)


@dataclass(frozen=True, eq=False)
class ExtMorphism:
    """A meet-preserving f: G -> G' with f . k = k' and e' . f = e."""

    src: AdjointExtension
    dst: AdjointExtension
    f: MeetHom

    def __post_init__(self):
        w = _square_failures(self.src, self.dst, self.f, splitting=self._splitting)
        if w is not None:
            raise VerificationFailed(w["square"], w.get("at"))

    _splitting = False


@dataclass(frozen=True, eq=False)
class AdjExtMorphism(ExtMorphism):
    """An extension morphism that also satisfies f . e_star = e'_star."""

    _splitting = True


def _glueing_ext(alpha: MeetHom) -> AdjointExtension:
    return extension_of(alpha)


def inclusion_from_order(alpha: MeetHom, beta: MeetHom) -> ExtMorphism:
    """Gl(alpha) as a subset of Gl(beta) when alpha <= beta pointwise."""
    if not pointwise_leq(alpha, beta):
        raise NotLeq(next(h for h in alpha.dom.elements if not alpha.cod.leq(alpha(h), beta(h))))
    src, dst = _glueing_ext(alpha), _glueing_ext(beta)
    i = MeetHom.from_function(src.G, dst.G, lambda p: p)
    if not i.preserves_joins():
        raise VerificationFailed("inclusion preserves joins")
    return ExtMorphism(src, dst, i)


def right_adjoint_inclusion(alpha: MeetHom, beta: MeetHom) -> AdjExtMorphism:
    """(n, h) -> (n ^ alpha(h), h): Gl(beta) -> Gl(alpha), right adjoint to the inclusion."""
    inc = inclusion_from_order(alpha, beta)
    small, big = inc.src, inc.dst
    N = alpha.cod

    def collapse(p: str) -> str:
        n, h = big.glueing.pairs[p]
        return small.glueing.element(N.meet(n, alpha(h)), h)

    r = MeetHom.from_function(big.G, small.G, collapse)
    if right_adjoint(inc.f) != r:
        raise VerificationFailed("collapse is right adjoint to the inclusion")
    return AdjExtMorphism(big, small, r)


def adjext_morphisms(src: AdjointExtension, dst: AdjointExtension) -> list[MeetHom]:
    """Every adjoint-extension morphism src -> dst, by scanning all of Hom(G, G')."""
    return [f for f in meet_homs(src.G, dst.G) if is_adjext_morphism(src, dst, f)]


def hom_adjext(src: AdjointExtension, dst: AdjointExtension) -> AdjExtMorphism | None:
    """The unique morphism of adjoint extensions src -> dst, if any.

    Found by brute force; for glueings the result is checked against the
    order (it exists iff alpha_dst <= alpha_src) and against the closed form.
    """
    found = adjext_morphisms(src, dst)
    if len(found) > 1:
        raise VerificationFailed("at most one morphism of adjoint extensions", len(found))
    if src.glueing is not None and dst.glueing is not None:
        a_src, a_dst = src.glueing.alpha, dst.glueing.alpha
        if bool(found) != pointwise_leq(a_dst, a_src):
            raise VerificationFailed("morphism exists iff alpha' <= alpha", bool(found))
        if found:
            expected = right_adjoint_inclusion(a_dst, a_src).f
            if found[0] != expected:
                raise VerificationFailed("f(n,h) = (n ^ alpha'(h), h)", _first_difference(found[0], expected))
    return AdjExtMorphism(src, dst, found[0]) if found else None


def ext_morphisms(src: AdjointExtension, dst: AdjointExtension) -> list[MeetHom]:
    """Every extension morphism src -> dst; images of k are pinned to prune the scan."""
    if src.N != dst.N or src.H != dst.H:
        raise DomainMismatch("extensions must share N and H")
    pins = {src.k(n): dst.k(n) for n in src.N.elements}
    return [f for f in enumerate_meet_homs(src.G, dst.G, pins) if is_ext_morphism(src, dst, f)]


def ext_hom_order(f: ExtMorphism, g: ExtMorphism) -> bool:
    if f.src.G != g.src.G or f.dst.G != g.dst.G:
        raise DomainMismatch("extension morphisms are not parallel")
    return pointwise_leq(f.f, g.f)


def split_short_five_counterexample() -> tuple[AdjointExtension, AdjointExtension, AdjExtMorphism]:
    """A morphism of adjoint extensions with identity end maps that is not an isomorphism.

    The collapse Gl(top) -> Gl(id) over the two-element chain: a 4-element
    frame onto a 3-element one.
    """
    C2 = chain(2)
    m = right_adjoint_inclusion(identity(C2), top_morphism(C2, C2))
    if len(m.src.G) == len(m.dst.G):
        raise VerificationFailed("middle objects differ in size")
    if find_frame_isomorphism(m.src.G, m.dst.G) is not None:
        raise VerificationFailed("middle objects are not isomorphic")
    return m.src, m.dst, m


def split_short_five_failures(H: FiniteFrame, N: FiniteFrame) -> list[tuple[MeetHom, MeetHom, MeetHom]]:
    """All (alpha_src, alpha_dst, f) where f is a morphism of adjoint extensions between
    non-isomorphic glueings of H by N."""
    exts = [_glueing_ext(a) for a in enumerate_meet_homs(H, N)]
    out = []
    for s in exts:
        for d in exts:
            if s is d:
                continue
            for f in adjext_morphisms(s, d):
                out.append((s.glueing.alpha, d.glueing.alpha, f))
    return out


def adjunctions_in_ext(H: FiniteFrame, N: FiniteFrame) -> list[tuple[ExtMorphism, ExtMorphism]]:
    """Pairs (f_star, f) of extension morphisms with f_star left adjoint to f.

    Ranges over all ordered pairs of glueing extensions of H by N. The right
    adjoints found are checked to be exactly the adjoint-extension morphisms.
    """
    exts = [_glueing_ext(a) for a in enumerate_meet_homs(H, N)]
    pairs = []
    for s in exts:
        for d in exts:
            rights = []
            for f in ext_morphisms(s, d):
                try:
                    fl = left_adjoint(f)
                except NoAdjoint:
                    continue
                if fl.meet_witness() is None and is_ext_morphism(d, s, fl):
                    pairs.append((ExtMorphism(d, s, fl.as_meet_hom()), ExtMorphism(s, d, f)))
                    rights.append(f)
            if sorted(r.values for r in rights) != sorted(f.values for f in adjext_morphisms(s, d)):
                raise VerificationFailed(
                    "right adjoints in Ext are the adjoint-extension morphisms",
                    (characteristic_map(s).table, characteristic_map(d).table),
                )
    return pairs
