"""The full law suite: every theorem checked exhaustively on catalog instances.

Each check returns a :class:`Verdict`; :func:`check_laws` turns them into one
:class:`LawReport` per (statement, instance).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import partial
from itertools import product
from typing import Callable

from .catalog import DEFAULT_CATALOG, Catalog, chain
from .errors import ArtinGlueError
from .extcat import (
    adjunctions_in_ext,
    hom_adjext,
    split_short_five_counterexample,
    split_short_five_failures,
)
from .extensions import (
    classify,
    cokernel,
    extension_from_u,
    glueing_as_extension,
    is_normal_epi,
    kernel_of_normal_epi,
    sections,
    verify_adjoint_extension,
    verify_cokernel_universal,
    verify_kernel_universal,
)
from .functorial import (
    baer_meet,
    bifunctor_action,
    enumerate_extensions,
    nat_iso_check,
    pullback_extension,
    pushout_extension,
    top_extension,
    verify_pullback_universal,
    verify_pushout_universal,
)
from .glueing import glue, recover_alpha
from .lattice import FiniteFrame
from .morphisms import meet_homs, pointwise_leq, right_adjoint
from .reports import LawReport, Verdict

DEFAULT_PAIRS = (("C2", "C2"), ("C3", "C3"), ("C2", "B2"), ("B2", "C2"), ("C1", "C3"), ("C3", "C1"))


def heyting_adjunction(F: FiniteFrame) -> Verdict:
    for u, y, z in product(F.elements, repeat=3):
        if F.leq(z, F.impl(u, y)) != F.leq(F.meet(z, u), y):
            return Verdict.failed({"u": u, "y": y, "z": z})
    return Verdict.passed()


def schreier_identity(F: FiniteFrame) -> Verdict:
    """(g v u) ^ (u => (g ^ u)) = g for all g, u."""
    for g, u in product(F.elements, repeat=2):
        if F.meet(F.join(g, u), F.impl(u, F.meet(g, u))) != g:
            return Verdict.failed({"g": g, "u": u})
    return Verdict.passed()


def classification(G: FiniteFrame, u: str) -> Verdict:
    try:
        ext = extension_from_u(G, u)
        v = verify_adjoint_extension(ext)
        if not v:
            return v
        classify(ext)
    except ArtinGlueError as exc:
        return Verdict.failed(str(exc))
    return Verdict.passed()


def cokernel_kernel_universal(G: FiniteFrame, u: str, catalog: Catalog, max_size: int) -> Verdict:
    ext = extension_from_u(G, u)
    e, _ = cokernel(ext.k)
    v = verify_cokernel_universal(ext.k, e, catalog, max_size)
    if not v:
        return Verdict.failed({"part": "cokernel", **v.witness})
    k, _ = kernel_of_normal_epi(e)
    v = verify_kernel_universal(e, k, catalog, max_size)
    if not v:
        return Verdict.failed({"part": "kernel", **v.witness})
    return Verdict.passed()


def schreier_iff_adjoint(G: FiniteFrame, u: str) -> Verdict:
    """For every section s of (- ^ u): s is right adjoint to e iff every g is k(n) ^ s(h)."""
    ext = extension_from_u(G, u)
    adjoint = right_adjoint(ext.e)
    kimg = [ext.k(n) for n in ext.N.elements]
    for s in sections(ext.e):
        simg = [s(h) for h in ext.H.elements]
        decomposes = all(any(G.meet(a, b) == g for a in kimg for b in simg) for g in G.elements)
        if (s == adjoint) != decomposes:
            return Verdict.failed({"section": s.table, "adjoint": s == adjoint, "schreier": decomposes})
    return Verdict.passed()


def glueing_is_adjoint_extension(H: FiniteFrame, N: FiniteFrame) -> Verdict:
    for c in enumerate_extensions(H, N):
        g = glue(c.alpha)
        v = verify_adjoint_extension(glueing_as_extension(g))
        if not v:
            return Verdict.failed({"alpha": c.alpha.table, **v.witness})
        if recover_alpha(g) != c.alpha:
            return Verdict.failed({"alpha": c.alpha.table, "check": "pi1 . pi2_star = alpha"})
    return Verdict.passed()


def pullback_universal(H: FiniteFrame, N: FiniteFrame, catalog: Catalog, test_size: int, max_size: int) -> Verdict:
    for c in enumerate_extensions(H, N):
        ext = c.extension()
        for Hp in catalog.frames(test_size):
            for f in meet_homs(Hp, H):
                v = verify_pullback_universal(ext, f, pullback_extension(ext, f), catalog, max_size)
                if not v:
                    return Verdict.failed({"alpha": c.alpha.table, "f": f.table, **v.witness})
    return Verdict.passed()


def pushout_universal(H: FiniteFrame, N: FiniteFrame, catalog: Catalog, test_size: int, max_size: int) -> Verdict:
    for c in enumerate_extensions(H, N):
        ext = c.extension()
        for Np in catalog.frames(test_size):
            for g in meet_homs(N, Np):
                v = verify_pushout_universal(ext, g, pushout_extension(ext, g), catalog, max_size)
                if not v:
                    return Verdict.failed({"alpha": c.alpha.table, "g": g.table, **v.witness})
    return Verdict.passed()


def pullback_stability(H: FiniteFrame, N: FiniteFrame, catalog: Catalog, test_size: int) -> Verdict:
    for c in enumerate_extensions(H, N):
        ext = c.extension()
        for Hp in catalog.frames(test_size):
            for f in meet_homs(Hp, H):
                pb = pullback_extension(ext, f)
                if not is_normal_epi(pb.e) or right_adjoint(pb.e) != pb.e_star:
                    return Verdict.failed({"alpha": c.alpha.table, "f": f.table})
    return Verdict.passed()


def bifunctor_coherence(H: FiniteFrame, N: FiniteFrame, catalog: Catalog, test_size: int) -> Verdict:
    tests = catalog.frames(test_size)
    for c in enumerate_extensions(H, N):
        ext = c.extension()
        for Hp, Np in product(tests, repeat=2):
            for f in meet_homs(Hp, H):
                for g in meet_homs(N, Np):
                    try:
                        bifunctor_action(ext, f, g)
                    except ArtinGlueError as exc:
                        return Verdict.failed({"alpha": c.alpha.table, "f": f.table, "g": g.table, "error": str(exc)})
    return Verdict.passed()


def baer_meet_laws(H: FiniteFrame, N: FiniteFrame) -> Verdict:
    classes = list(enumerate_extensions(H, N))
    unit = top_extension(H, N)
    try:
        for a in classes:
            if baer_meet(a, unit) != a or baer_meet(a, a) != a:
                return Verdict.failed({"alpha": a.alpha.table, "law": "unit/idempotence"})
            for b in classes:
                ab = baer_meet(a, b)
                if ab != baer_meet(b, a):
                    return Verdict.failed({"alpha": a.alpha.table, "beta": b.alpha.table, "law": "commutativity"})
                if ab.alpha not in [x.alpha for x in classes]:
                    return Verdict.failed({"alpha": a.alpha.table, "beta": b.alpha.table, "law": "closure"})
                for c in classes:
                    if baer_meet(ab, c) != baer_meet(a, baer_meet(b, c)):
                        return Verdict.failed({"law": "associativity", "alpha": a.alpha.table})
    except ArtinGlueError as exc:
        return Verdict.failed(str(exc))
    return Verdict.passed()


def order_equivalence(H: FiniteFrame, N: FiniteFrame) -> Verdict:
    exts = [c.extension() for c in enumerate_extensions(H, N)]
    try:
        for src, dst in product(exts, repeat=2):
            hom_adjext(src, dst)
    except ArtinGlueError as exc:
        return Verdict.failed(str(exc))
    return Verdict.passed()


def adjunctions(H: FiniteFrame, N: FiniteFrame) -> Verdict:
    try:
        pairs = adjunctions_in_ext(H, N)
    except ArtinGlueError as exc:
        return Verdict.failed(str(exc))
    classes = list(enumerate_extensions(H, N))
    expected = sum(pointwise_leq(b.alpha, a.alpha) for a, b in product(classes, repeat=2))
    if len(pairs) != expected:
        return Verdict.failed({"pairs": len(pairs), "order relations": expected})
    return Verdict.passed()


def split_short_five() -> Verdict:
    try:
        src, dst, m = split_short_five_counterexample()
    except ArtinGlueError as exc:
        return Verdict.failed(str(exc))
    found = split_short_five_failures(chain(2), chain(2))
    if len(found) != 1 or found[0][2] != m.f:
        return Verdict.failed({"found": len(found)})
    return Verdict.passed()


def nat_iso(H: FiniteFrame, N: FiniteFrame, catalog: Catalog, test_size: int) -> list[LawReport]:
    return nat_iso_check(H, N, catalog, test_size)


def _tasks(catalog: Catalog, pairs, oracle_size: int, test_size: int, frame_size: int):
    frames = catalog.frames(frame_size)
    for F in frames:
        yield "heyting-adjunction", F.name, partial(heyting_adjunction, F)
        yield "schreier-identity", F.name, partial(schreier_identity, F)
    for F in frames:
        for u in F.elements:
            inst = f"G={F.name},u={u}"
            yield "classification", inst, partial(classification, F, u)
            yield "schreier-iff-adjoint", inst, partial(schreier_iff_adjoint, F, u)
            yield "kernel-cokernel-universal", inst, partial(cokernel_kernel_universal, F, u, catalog, oracle_size)
    for h, n in pairs:
        H, N = catalog[h], catalog[n]
        inst = f"H={h},N={n}"
        yield "glueing-is-adjoint-extension", inst, partial(glueing_is_adjoint_extension, H, N)
        yield "natural-iso-hom", inst, partial(nat_iso, H, N, catalog, test_size)
        yield "pullback-universal", inst, partial(pullback_universal, H, N, catalog, test_size, oracle_size)
        yield "pushout-universal", inst, partial(pushout_universal, H, N, catalog, test_size, oracle_size)
        yield "pullback-stability", inst, partial(pullback_stability, H, N, catalog, test_size)
        yield "bifunctor-coherence", inst, partial(bifunctor_coherence, H, N, catalog, min(test_size, 3))
        yield "baer-meet-semilattice", inst, partial(baer_meet_laws, H, N)
        yield "order-equivalence", inst, partial(order_equivalence, H, N)
        yield "adjunctions-in-ext", inst, partial(adjunctions, H, N)
    yield "split-short-five-fails", "H=C2,N=C2", split_short_five


def _run(task: tuple[str, str, Callable]) -> list[LawReport]:
    statement, instance, fn = task
    out = fn()
    if isinstance(out, list):
        return out
    return [LawReport.from_verdict(statement, instance, out)]


def check_laws(
    catalog: Catalog | None = None,
    pairs=DEFAULT_PAIRS,
    oracle_size: int = 6,
    test_size: int = 3,
    frame_size: int = 8,
    jobs: int = 1,
) -> list[LawReport]:
    """Run the suite; reports come back in a fixed order regardless of ``jobs``.

    ``frame_size`` bounds the frames G used as middle objects,
    ``oracle_size`` the test objects of universal properties, and
    ``test_size`` the frames H', N' used to build test morphisms.
    """
    catalog = catalog or DEFAULT_CATALOG
    tasks = list(_tasks(catalog, pairs, oracle_size, test_size, frame_size))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run, tasks))
    else:
        chunks = [_run(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]

