"""Artin glueing of two frames along a finite-meet-preserving map."""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import FiniteFrame, Poset, pair_id, validate_frame
from .morphisms import MeetHom, compose


@dataclass(frozen=True, eq=False)
class Glueing:
    """The frame of pairs (n, h) with n <= alpha(h), plus its canonical maps.

    ``pi1_star`` and ``pi2_star`` are the right adjoints of the projections;
    ``pairs`` maps carrier ids to their components.
    """

    alpha: MeetHom
    carrier: FiniteFrame
    pi1: MeetHom
    pi2: MeetHom
    pi1_star: MeetHom
    pi2_star: MeetHom
    pairs: dict[str, tuple[str, str]] = field(repr=False)

    @property
    def N(self) -> FiniteFrame:
        return self.alpha.cod

    @property
    def H(self) -> FiniteFrame:
        return self.alpha.dom

    def element(self, n: str, h: str) -> str:
        """Carrier id of (n, h); raises KeyError when n is not below alpha(h)."""
        pid = pair_id(n, h)
        if pid not in self.carrier:
            raise KeyError(f"({n},{h}) is not in the glueing: {n} is not below alpha({h}) = {self.alpha(h)}")
        return pid

    def pair_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.pairs.values())


def glueing_pairs(alpha: MeetHom) -> list[tuple[str, str]]:
    N, H = alpha.cod, alpha.dom
    return [(n, h) for n in N.elements for h in H.elements if N.leq(n, alpha(h))]


def glue(alpha: MeetHom, name: str = "") -> Glueing:
    N, H = alpha.cod, alpha.dom
    pairs = glueing_pairs(alpha)
    ids = [pair_id(n, h) for n, h in pairs]
    rel = [
        (pair_id(n, h), pair_id(n2, h2))
        for n, h in pairs
        for n2, h2 in pairs
        if N.leq(n, n2) and H.leq(h, h2)
    ]
    carrier = validate_frame(Poset(ids, rel), name or f"Gl({alpha.dom.name}->{alpha.cod.name})")
    lookup = dict(zip(ids, pairs))

    pi1 = MeetHom(carrier, N, tuple(N.idx(lookup[g][0]) for g in ids))
    pi2 = MeetHom(carrier, H, tuple(H.idx(lookup[g][1]) for g in ids))
    pi1_star = MeetHom(N, carrier, tuple(carrier.idx(pair_id(n, H.top)) for n in N.elements))
    pi2_star = MeetHom(H, carrier, tuple(carrier.idx(pair_id(alpha(h), h)) for h in H.elements))
    return Glueing(alpha, carrier, pi1, pi2, pi1_star, pi2_star, lookup)


def recover_alpha(g: Glueing) -> MeetHom:
    """alpha as the composite pi1 . pi2_star."""
    return compose(g.pi1, g.pi2_star)
