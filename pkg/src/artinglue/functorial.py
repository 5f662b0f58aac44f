"""Pullback and pushout actions on extensions, and the Baer meet.

Both actions are computed in closed form by glueing along a composite of
the characteristic map; the ``verify_*`` oracles check the universal
properties against every cone or cocone out of small catalog frames.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

from .catalog import DEFAULT_CATALOG, Catalog
from .errors import CoherenceFailure, DomainMismatch, VerificationFailed
from .extensions import (
    DEFAULT_ORACLE_SIZE,
    AdjointExtension,
    ExtensionClass,
    characteristic_map,
    classify,
    extension_isomorphisms,
    extension_of,
    is_normal_epi,
    top_extension,
)
from .glueing import Glueing, glue
from .lattice import FiniteFrame
from .morphisms import (
    FrameMap,
    MeetHom,
    compose,
    enumerate_meet_homs,
    meet_homs,
    pointwise_meet,
    right_adjoint,
)
from .reports import LawReport, Verdict


@dataclass(frozen=True)
class ExtensionSet:
    """Isomorphism classes of adjoint extensions of H by N, one per meet-preserving map H -> N."""

    H: FiniteFrame
    N: FiniteFrame
    classes: tuple[ExtensionClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


def enumerate_extensions(H: FiniteFrame, N: FiniteFrame) -> ExtensionSet:
    return ExtensionSet(H, N, tuple(ExtensionClass(a) for a in enumerate_meet_homs(H, N)))


def _glueing_of(candidate: AdjointExtension | Glueing) -> Glueing:
    if isinstance(candidate, Glueing):
        return candidate
    if candidate.glueing is None:
        raise TypeError("candidate extension must be in glueing form")
    return candidate.glueing


def pullback_extension(
    ext: AdjointExtension, f: MeetHom, verify: bool = False, catalog: Catalog | None = None
) -> AdjointExtension:
    """The extension of H' by N obtained by pulling ``ext`` back along f: H' -> H."""
    if f.cod != ext.H:
        raise DomainMismatch(f"f must land in {ext.H.name!r}, not {f.cod.name!r}")
    result = extension_of(compose(characteristic_map(ext), f))
    if verify:
        v = verify_pullback_universal(ext, f, result, catalog)
        if not v:
            raise VerificationFailed("pullback universal property", v.witness)
    return result


def verify_pullback_universal(
    ext: AdjointExtension,
    f: MeetHom,
    candidate: AdjointExtension | Glueing,
    catalog: Catalog | None = None,
    max_size: int = DEFAULT_ORACLE_SIZE,
    leg: FrameMap | None = None,
) -> Verdict:
    """Check that the candidate glueing over H' is the pullback of e along f.

    The leg to G defaults to (n, h') -> (n, f(h')) transported through the
    comparison isomorphism of ``ext``. Three things are checked: the square
    commutes, the candidate is in bijection (as a poset) with the concrete
    pullback {(g, h') : e(g) = f(h')}, and every cone out of a catalog frame
    factors through the candidate exactly once.
    """
    if f.cod != ext.H:
        raise DomainMismatch("f must land in the quotient of ext")
    cand = _glueing_of(candidate)
    if cand.H != f.dom or cand.N != ext.N:
        return Verdict.failed({"check": "candidate is an extension of dom(f) by N"})
    G, Hp, C = ext.G, f.dom, cand.carrier
    gl, iso = classify(ext)
    e, p2 = ext.e, cand.pi2

    if leg is None:
        vals = []
        for c in C.elements:
            n, hp = cand.pairs[c]
            target = f"({n},{f(hp)})"
            if target not in gl.carrier:
                return Verdict.failed({"check": "leg to G is well defined", "at": c})
            vals.append(G.idx(iso.backward(target)))
        leg = FrameMap(C, G, tuple(vals))
    if leg.meet_witness() is not None:
        return Verdict.failed({"check": "leg to G preserves finite meets", "at": leg.meet_witness()})
    leg = leg.as_meet_hom()
    if compose(e, leg) != compose(f, p2):
        return Verdict.failed({"check": "e . leg = f . pi2'"})

    concrete = {(g, hp) for g in G.elements for hp in Hp.elements if e(g) == f(hp)}
    image = [(leg(c), p2(c)) for c in C.elements]
    if set(image) != concrete or len(image) != len(concrete):
        return Verdict.failed(
            {"check": "bijection with the concrete pullback", "candidate": len(C), "pullback": len(concrete)}
        )
    for c, (g, hp) in zip(C.elements, image):
        for c2, (g2, hp2) in zip(C.elements, image):
            if C.leq(c, c2) != (G.leq(g, g2) and Hp.leq(hp, hp2)):
                return Verdict.failed({"check": "bijection is an order isomorphism", "at": (c, c2)})

    for X in (catalog or DEFAULT_CATALOG).frames(max_size):
        mediators = Counter(
            (compose(leg, m).values, compose(p2, m).values) for m in meet_homs(X, C)
        )
        by_base: dict[tuple, list[MeetHom]] = defaultdict(list)
        for b in meet_homs(X, Hp):
            by_base[compose(f, b).values].append(b)
        for a in meet_homs(X, G):
            for b in by_base.get(compose(e, a).values, ()):
                n = mediators.get((a.values, b.values), 0)
                if n != 1:
                    return Verdict.failed(
                        {"check": "unique mediating map", "X": X.name, "a": a.table, "b": b.table, "count": n}
                    )
    return Verdict.passed()


def pushout_extension(
    ext: AdjointExtension, g: MeetHom, verify: bool = False, catalog: Catalog | None = None
) -> AdjointExtension:
    """The extension of H by N' obtained by pushing ``ext`` out along g: N -> N'."""
    if g.dom != ext.N:
        raise DomainMismatch(f"g must start at {ext.N.name!r}, not {g.dom.name!r}")
    result = extension_of(compose(g, characteristic_map(ext)))
    if verify:
        v = verify_pushout_universal(ext, g, result, catalog)
        if not v:
            raise VerificationFailed("pushout universal property", v.witness)
    return result


def verify_pushout_universal(
    ext: AdjointExtension,
    g: MeetHom,
    candidate: AdjointExtension | Glueing,
    catalog: Catalog | None = None,
    max_size: int = DEFAULT_ORACLE_SIZE,
    injection: FrameMap | None = None,
) -> Verdict:
    """Check that the candidate glueing over N' is the pushout of k along g.

    The injection G -> Gl(gamma) defaults to (n, h) -> (g(n), h) through the
    comparison isomorphism. For each cocone (p, q) the mediating map is built
    as l(n, h) = p(alpha(h), h) ^ q(n); it must be meet preserving, satisfy
    both triangle laws, and be the only map that does.
    """
    if g.dom != ext.N:
        raise DomainMismatch("g must start at the kernel object of ext")
    cand = _glueing_of(candidate)
    if cand.N != g.cod or cand.H != ext.H:
        return Verdict.failed({"check": "candidate is an extension of H by cod(g)"})
    G, Np, C = ext.G, g.cod, cand.carrier
    gl, iso = classify(ext)
    alpha = gl.alpha
    k, inc = ext.k, cand.pi1_star

    if injection is None:
        vals = []
        for x in G.elements:
            n, h = gl.pairs[iso.forward(x)]
            target = f"({g(n)},{h})"
            if target not in C:
                return Verdict.failed({"check": "injection is well defined", "at": x})
            vals.append(C.idx(target))
        injection = FrameMap(G, C, tuple(vals))
    if injection.meet_witness() is not None:
        return Verdict.failed({"check": "injection preserves finite meets", "at": injection.meet_witness()})
    inj = injection.as_meet_hom()
    if compose(inj, k) != compose(inc, g):
        return Verdict.failed({"check": "f' . k = pi1_star' . g"})

    # representative in G of each glueing pair (alpha(h), h)
    split = {h: iso.backward(f"({alpha(h)},{h})") for h in ext.H.elements}
    for X in (catalog or DEFAULT_CATALOG).frames(max_size):
        mediators = Counter(
            (compose(m, inj).values, compose(m, inc).values) for m in meet_homs(C, X)
        )
        by_base: dict[tuple, list[MeetHom]] = defaultdict(list)
        for q in meet_homs(Np, X):
            by_base[compose(q, g).values].append(q)
        for p in meet_homs(G, X):
            for q in by_base.get(compose(p, k).values, ()):
                ell = FrameMap.from_function(
                    C, X, lambda c: X.meet(p(split[cand.pairs[c][1]]), q(cand.pairs[c][0]))
                )
                problem = None
                if ell.meet_witness() is not None:
                    problem = "mediating map preserves finite meets"
                elif compose(ell, inj) != p:
                    problem = "l . f' = p"
                elif compose(ell, inc) != q:
                    problem = "l . pi1_star' = q"
                elif mediators.get((p.values, q.values), 0) != 1:
                    problem = "mediating map is unique"
                if problem:
                    return Verdict.failed(
                        {"check": problem, "X": X.name, "p": p.table, "q": q.table,
                         "count": mediators.get((p.values, q.values), 0)}
                    )
    return Verdict.passed()


def bifunctor_action(ext: AdjointExtension, f: MeetHom, g: MeetHom) -> AdjointExtension:
    """Pull back along f and push out along g; both orders must agree."""
    one = pushout_extension(pullback_extension(ext, f), g)
    other = pullback_extension(pushout_extension(ext, g), f)
    a, b = characteristic_map(one), characteristic_map(other)
    expected = compose(g, compose(characteristic_map(ext), f))
    if a != b:
        bad = next(x for x in a.dom.elements if a(x) != b(x))
        raise CoherenceFailure("pushout . pullback = pullback . pushout", bad)
    if a != expected:
        bad = next(x for x in a.dom.elements if a(x) != expected(x))
        raise CoherenceFailure("characteristic map is g . alpha . f", bad)
    return one


def baer_meet(c1: ExtensionClass, c2: ExtensionClass) -> ExtensionClass:
    """Meet of two extension classes: glue along the pointwise meet of their maps.

    Also confirms that the resulting glueing is the intersection of the two
    glueings as sets of pairs.
    """
    if c1.H != c2.H or c1.N != c2.N:
        raise DomainMismatch("Baer meet needs extensions of the same H by the same N")
    result = ExtensionClass(pointwise_meet(c1.alpha, c2.alpha))
    lhs = glue(result.alpha).pair_set()
    rhs = glue(c1.alpha).pair_set() & glue(c2.alpha).pair_set()
    if lhs != rhs:
        raise VerificationFailed("Gl(a ^ b) = Gl(a) & Gl(b)", sorted(lhs ^ rhs))
    return result


def nat_iso_check(
    H: FiniteFrame,
    N: FiniteFrame,
    catalog: Catalog | None = None,
    max_size: int = 4,
    verify_universal: bool = False,
) -> list[LawReport]:
    """Check AdjExt(H, N) against Hom(H, N), including both naturality squares.

    Test morphisms f: H' -> H and g: N -> N' range over catalog frames of at
    most ``max_size`` elements.
    """
    catalog = catalog or DEFAULT_CATALOG
    instance = f"H={H.name},N={N.name}"
    reports = []
    classes = enumerate_extensions(H, N)

    problem = None
    for c in classes:
        ext = c.extension()
        if characteristic_map(ext) != c.alpha:
            problem = {"alpha": c.alpha.table, "check": "class round-trips"}
            break
    if problem is None:
        exts = [c.extension() for c in classes]
        for i, a in enumerate(exts):
            for b in exts[i + 1:]:
                if extension_isomorphisms(a, b):
                    problem = {"check": "distinct maps give non-isomorphic extensions",
                               "alpha": characteristic_map(a).table, "beta": characteristic_map(b).table}
                    break
            if problem:
                break
    reports.append(LawReport.from_verdict("hom-bijection", instance, Verdict(problem is None, problem)))

    problem = None
    for Hp in catalog.frames(max_size):
        for f in meet_homs(Hp, H):
            for c in classes:
                ext = c.extension()
                pb = pullback_extension(ext, f)
                if characteristic_map(pb) != compose(c.alpha, f):
                    problem = {"H'": Hp.name, "f": f.table, "alpha": c.alpha.table}
                elif verify_universal and not verify_pullback_universal(ext, f, pb, catalog):
                    problem = {"H'": Hp.name, "f": f.table, "alpha": c.alpha.table, "check": "universal"}
                if problem:
                    break
            if problem:
                break
        if problem:
            break
    reports.append(LawReport.from_verdict("pullback-naturality", instance, Verdict(problem is None, problem)))

    problem = None
    for Np in catalog.frames(max_size):
        for g in meet_homs(N, Np):
            for c in classes:
                ext = c.extension()
                po = pushout_extension(ext, g)
                if characteristic_map(po) != compose(g, c.alpha):
                    problem = {"N'": Np.name, "g": g.table, "alpha": c.alpha.table}
                elif verify_universal and not verify_pushout_universal(ext, g, po, catalog):
                    problem = {"N'": Np.name, "g": g.table, "alpha": c.alpha.table, "check": "universal"}
                if problem:
                    break
            if problem:
                break
        if problem:
            break
    reports.append(LawReport.from_verdict("pushout-naturality", instance, Verdict(problem is None, problem)))
    return reports


def pullback_keeps_normal_epi(ext: AdjointExtension, f: MeetHom) -> bool:
    """The pulled-back quotient map is again a normal epi with a right adjoint section."""
    pb = pullback_extension(ext, f)
    return is_normal_epi(pb.e) and right_adjoint(pb.e) == pb.e_star

