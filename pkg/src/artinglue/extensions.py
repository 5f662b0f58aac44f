"""Kernels, cokernels and adjoint extensions, and their classification by glueings.

An adjoint extension ``N -k-> G -e-> H`` with section ``e_star`` is always
isomorphic to the glueing along its characteristic map ``k_star . e_star``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .catalog import DEFAULT_CATALOG, Catalog
from .errors import DomainMismatch, NoAdjoint, NotNormalEpi, VerificationFailed
from .glueing import Glueing, glue
from .lattice import FiniteFrame, down_set_frame, up_set_frame
from .morphisms import (
    FrameIso,
    FrameMap,
    MeetHom,
    compose,
    enumerate_meet_homs,
    identity,
    is_top,
    left_adjoint,
    meet_homs,
    right_adjoint,
    top_morphism,
)
from .reports import Verdict

DEFAULT_ORACLE_SIZE = 6


@dataclass(frozen=True, eq=False)
class AdjointExtension:
    """``N -k-> G -e-> H`` with right-adjoint section ``e_star`` and ``k_star`` left adjoint to ``k``.

    ``glueing`` is set when ``G`` is literally the carrier of a glueing and
    the maps are its canonical ones.
    """

    N: FiniteFrame
    G: FiniteFrame
    H: FiniteFrame
    k: MeetHom
    e: MeetHom
    e_star: MeetHom
    k_star: MeetHom
    glueing: Glueing | None = None

    def __post_init__(self):
        shapes = [
            (self.k.dom, self.N, "dom k"), (self.k.cod, self.G, "cod k"),
            (self.e.dom, self.G, "dom e"), (self.e.cod, self.H, "cod e"),
            (self.e_star.dom, self.H, "dom e_star"), (self.e_star.cod, self.G, "cod e_star"),
            (self.k_star.dom, self.G, "dom k_star"), (self.k_star.cod, self.N, "cod k_star"),
        ]
        for got, want, what in shapes:
            if got != want:
                raise DomainMismatch(f"{what} is {got.name!r}, expected {want.name!r}")


@dataclass(frozen=True)
class ExtensionClass:
    """An isomorphism class of adjoint extensions of H by N, keyed by its characteristic map."""

    alpha: MeetHom

    @property
    def H(self) -> FiniteFrame:
        return self.alpha.dom

    @property
    def N(self) -> FiniteFrame:
        return self.alpha.cod

    def extension(self) -> AdjointExtension:
        return extension_of(self.alpha)


def cokernel(f: MeetHom) -> tuple[MeetHom, MeetHom]:
    """``e = (- ^ u): G -> down(u)`` with u = f(0), and its right adjoint section ``y -> (u => y)``."""
    G = f.cod
    u = f(f.dom.bottom)
    H = down_set_frame(G, u)
    e = MeetHom.from_function(G, H, lambda x: G.meet(x, u)).as_meet_hom()
    e_star = MeetHom.from_function(H, G, lambda y: G.impl(u, y)).as_meet_hom()
    return e, e_star


def kernel_of_normal_epi(e: MeetHom) -> tuple[MeetHom, MeetHom]:
    """``k: up(u) -> G`` (inclusion) and ``k_star = (- v u)`` for ``e = (- ^ u)`` onto ``down(u)``.

    The codomain of ``e`` must literally be the down-set frame of its top
    inside ``G``; use :func:`normal_epi_element` for the up-to-iso test.
    """
    G, H = e.dom, e.cod
    u = H.top
    if u not in G:
        raise NotNormalEpi(u, f"codomain top {u!r} is not an element of {G.name!r}")
    if H != down_set_frame(G, u):
        raise NotNormalEpi(u, f"codomain is not the down-set of {u!r} in {G.name!r}")
    for x in G.elements:
        if e(x) != G.meet(x, u):
            raise NotNormalEpi(x, f"e({x}) = {e(x)!r} but {x} ^ {u} = {G.meet(x, u)!r}")
    N = up_set_frame(G, u)
    k = MeetHom.from_function(N, G, lambda x: x).as_meet_hom()
    k_star = MeetHom.from_function(G, N, lambda x: G.join(x, u)).as_meet_hom()
    return k, k_star


def normal_epi_element(e: FrameMap) -> str | None:
    """The u with e = iso . (- ^ u), or None when e is not a normal epi."""
    G, H = e.dom, e.cod
    u = G.meet_all(x for x in G.elements if e(x) == H.top)
    below = G.down_set(u)
    images = [e(x) for x in below]
    if len(set(images)) != len(H):
        return None
    for x in below:
        for y in below:
            if G.leq(x, y) != H.leq(e(x), e(y)):
                return None
    if any(e(x) != e(G.meet(x, u)) for x in G.elements):
        return None
    return u


def is_normal_epi(e: FrameMap) -> bool:
    return normal_epi_element(e) is not None


def is_normal_mono(k: FrameMap) -> bool:
    """True when k is an order isomorphism onto ``up(k(0))``."""
    N, G = k.dom, k.cod
    u = k(N.bottom)
    if not k.is_injective() or k.image() != set(G.up_set(u)):
        return False
    return all(N.leq(x, y) == G.leq(k(x), k(y)) for x in N.elements for y in N.elements)


def _count_factorizations(through: FrameMap, homs: Iterable[MeetHom], after: bool) -> Counter:
    """Multiset of composites m . through (after=True) or through . m."""
    c: Counter = Counter()
    for m in homs:
        c[compose(m, through).values if after else compose(through, m).values] += 1
    return c


def verify_cokernel_universal(
    f: MeetHom, e: MeetHom, catalog: Catalog | None = None, max_size: int = DEFAULT_ORACLE_SIZE
) -> Verdict:
    """Check that every g: G -> X with g . f = top factors uniquely through e.

    X ranges over catalog frames with at most ``max_size`` elements and the
    factorizations m: H -> X are counted by exhaustive enumeration. The
    criterion "g(x) = g(y) whenever e(x) = e(y)" is checked alongside.
    """
    if f.cod != e.dom:
        raise DomainMismatch("e must start where f ends")
    if not is_top(compose(e, f)):
        return Verdict.failed({"equation": "e . f = top"})
    G, H = e.dom, e.cod
    for X in (catalog or DEFAULT_CATALOG).frames(max_size):
        counts = _count_factorizations(e, meet_homs(H, X), after=True)
        for g in meet_homs(G, X):
            if not is_top(compose(g, f)):
                continue
            n = counts.get(g.values, 0)
            respects = all(
                g.values[i] == g.values[j]
                for i in range(len(G)) for j in range(len(G))
                if e.values[i] == e.values[j]
            )
            if n != 1 or not respects:
                return Verdict.failed({"X": X.name, "g": g.table, "factorizations": n, "respects_kernel_pairs": respects})
    return Verdict.passed()


def verify_kernel_universal(
    e: MeetHom, k: MeetHom, catalog: Catalog | None = None, max_size: int = DEFAULT_ORACLE_SIZE
) -> Verdict:
    """Check that every f: X -> G with e . f = top factors uniquely through k."""
    if k.cod != e.dom:
        raise DomainMismatch("k must end where e starts")
    if not is_top(compose(e, k)):
        return Verdict.failed({"equation": "e . k = top"})
    N, G = k.dom, k.cod
    for X in (catalog or DEFAULT_CATALOG).frames(max_size):
        counts = _count_factorizations(k, meet_homs(X, N), after=False)
        for f in meet_homs(X, G):
            if not is_top(compose(e, f)):
                continue
            n = counts.get(f.values, 0)
            if n != 1:
                return Verdict.failed({"X": X.name, "f": f.table, "factorizations": n})
    return Verdict.passed()


def schreier_witness(ext: AdjointExtension) -> str | None:
    """First g with g != k(k_star(g)) ^ e_star(e(g)), or None."""
    G = ext.G
    for g in G.elements:
        if G.meet(ext.k(ext.k_star(g)), ext.e_star(ext.e(g))) != g:
            return g
    return None


def is_weakly_schreier(ext: AdjointExtension) -> bool:
    return schreier_witness(ext) is None


def sections(e: MeetHom) -> list[MeetHom]:
    """All meet-preserving s: H -> G with e . s = id, by exhaustive search."""
    H = e.cod
    target = identity(H).values
    return [s for s in enumerate_meet_homs(H, e.dom) if compose(e, s).values == target]


def characteristic_map(ext: AdjointExtension) -> MeetHom:
    return compose(ext.k_star, ext.e_star)


def verify_adjoint_extension(
    ext: AdjointExtension, catalog: Catalog | None = None, max_size: int = DEFAULT_ORACLE_SIZE
) -> Verdict:
    """Every defining law of an adjoint extension, failing on the first one broken.

    Universal properties of the kernel and cokernel are only checked when a
    catalog is given, since they quantify over test objects.
    """
    k, e, s, ks = ext.k, ext.e, ext.e_star, ext.k_star
    if not is_top(compose(e, k)):
        return Verdict.failed({"law": "e . k = top"})
    if compose(e, s) != identity(ext.H):
        return Verdict.failed({"law": "e . e_star = id"})
    try:
        if right_adjoint(e) != s:
            return Verdict.failed({"law": "e -| e_star"})
        if left_adjoint(k) != ks:
            return Verdict.failed({"law": "k_star -| k"})
    except NoAdjoint as exc:
        return Verdict.failed({"law": "adjoint exists", "at": exc.witness})
    if not is_normal_epi(e):
        return Verdict.failed({"law": "e is a normal epi"})
    if not is_normal_mono(k):
        return Verdict.failed({"law": "k is a normal mono"})
    g = schreier_witness(ext)
    if g is not None:
        return Verdict.failed({"law": "weakly Schreier", "at": g})
    if catalog is not None:
        v = verify_kernel_universal(e, k, catalog, max_size)
        if not v:
            return Verdict.failed({"law": "k is the kernel of e", **v.witness})
        v = verify_cokernel_universal(k, e, catalog, max_size)
        if not v:
            return Verdict.failed({"law": "e is the cokernel of k", **v.witness})
    return Verdict.passed()


def extension_from_u(G: FiniteFrame, u: str) -> AdjointExtension:
    """The adjoint extension up(u) -> G -> down(u) determined by the normal epi (- ^ u)."""
    N = up_set_frame(G, u)
    k = MeetHom.from_function(N, G, lambda x: x).as_meet_hom()
    e, e_star = cokernel(k)
    _, k_star = kernel_of_normal_epi(e)
    return AdjointExtension(N, G, e.cod, k, e, e_star, k_star)


def glueing_as_extension(g: Glueing) -> AdjointExtension:
    """``N -pi1_star-> Gl(alpha) -pi2-> H`` with section ``pi2_star``."""
    Gl, H = g.carrier, g.H
    zero_one = g.element(g.N.bottom, H.top)
    lower = down_set_frame(Gl, zero_one)
    to_lower = MeetHom.from_function(H, lower, lambda h: g.element(g.N.bottom, h)).as_meet_hom()
    from_lower = MeetHom.from_function(lower, H, lambda p: g.pairs[p][1]).as_meet_hom()
    iso = FrameIso(to_lower, from_lower)
    cut = MeetHom.from_function(Gl, lower, lambda p: Gl.meet(p, zero_one)).as_meet_hom()
    if compose(iso.backward, cut) != g.pi2:
        raise VerificationFailed("pi2 = iso . (- ^ (0,1))")
    return AdjointExtension(g.N, Gl, H, g.pi1_star, g.pi2, g.pi2_star, g.pi1, glueing=g)


@lru_cache(maxsize=8192)
def extension_of(alpha: MeetHom) -> AdjointExtension:
    """The glueing extension along ``alpha``, memoized since results are immutable."""
    return glueing_as_extension(glue(alpha))


def classify(ext: AdjointExtension) -> tuple[Glueing, FrameIso]:
    """The glueing along the characteristic map and the comparison isomorphism to it.

    Forward is g -> (k_star(g), e(g)); backward is (n, h) -> k(n) ^ e_star(h).
    Raises :class:`VerificationFailed` naming the first broken equation.
    """
    gl = glue(characteristic_map(ext))
    G, Gl = ext.G, gl.carrier

    fwd = []
    for x in G.elements:
        pid = f"({ext.k_star(x)},{ext.e(x)})"
        if pid not in Gl:
            raise VerificationFailed("(k_star(g), e(g)) lies in the glueing", x)
        fwd.append(Gl.idx(pid))
    back = tuple(G.idx(G.meet(ext.k(n), ext.e_star(h))) for n, h in (gl.pairs[p] for p in Gl.elements))
    f = MeetHom(G, Gl, tuple(fwd), check=False)
    f_inv = MeetHom(Gl, G, back, check=False)

    checks = [
        ("f' . f = id", compose(f_inv, f), identity(G)),
        ("f . f' = id", compose(f, f_inv), identity(Gl)),
        ("f . k = pi1_star", compose(f, ext.k), gl.pi1_star),
        ("pi2 . f = e", compose(gl.pi2, f), ext.e),
        ("f . e_star = pi2_star", compose(f, ext.e_star), gl.pi2_star),
    ]
    for name, lhs, rhs in checks:
        if lhs != rhs:
            bad = next(x for x in lhs.dom.elements if lhs(x) != rhs(x))
            raise VerificationFailed(name, bad)
    if f.meet_witness() is not None or f_inv.meet_witness() is not None:
        raise VerificationFailed("comparison maps preserve finite meets")
    return gl, FrameIso(f.as_meet_hom(), f_inv.as_meet_hom())


def canonical_glue_iso(ext: AdjointExtension) -> FrameIso:
    return classify(ext)[1]


def extension_class(ext: AdjointExtension) -> ExtensionClass:
    return ExtensionClass(characteristic_map(ext))


def top_extension(H: FiniteFrame, N: FiniteFrame) -> ExtensionClass:
    """The class of the product extension N -> N x H -> H."""
    return ExtensionClass(top_morphism(H, N))


def _pins(src: AdjointExtension, dst: AdjointExtension) -> dict[str, str] | None:
    """Values forced on f: G -> G' by f . k = k' and f . e_star = e'_star; None on conflict."""
    pins: dict[str, str] = {}
    forced = [(src.k(n), dst.k(n)) for n in src.N.elements]
    forced += [(src.e_star(h), dst.e_star(h)) for h in src.H.elements]
    for x, y in forced:
        if pins.setdefault(x, y) != y:
            return None
    return pins


def splitting_morphisms(src: AdjointExtension, dst: AdjointExtension) -> list[MeetHom]:
    """All morphisms of adjoint extensions src -> dst (identity on N and H).

    Exhaustive over meet-preserving maps, with the images of k and e_star
    pinned up front since every such morphism must respect them.
    """
    if src.N != dst.N or src.H != dst.H:
        raise DomainMismatch("extensions must share N and H")
    pins = _pins(src, dst)
    if pins is None:
        return []
    return [f for f in enumerate_meet_homs(src.G, dst.G, pins) if compose(dst.e, f) == src.e]


def extension_isomorphisms(src: AdjointExtension, dst: AdjointExtension) -> list[MeetHom]:
    return [f for f in splitting_morphisms(src, dst) if f.is_injective() and f.is_surjective()]
