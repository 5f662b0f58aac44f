"""Finite-meet-preserving maps between finite frames.

These are the morphisms of the category of frames with finite-meet
preserving maps. Hom-sets are meet-semilattices under the pointwise order,
with the constant-top map as the largest element (the zero morphism).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Mapping

from .errors import DomainMismatch, NoAdjoint, NotMeetPreserving, VerificationFailed
from .lattice import FiniteFrame


class FrameMap:
    """A total function between the carriers of two finite frames.

    ``values[i]`` is the codomain index of the image of ``dom.elements[i]``.
    No structure preservation is assumed; see :class:`MeetHom`.
    """

    __slots__ = ("dom", "cod", "values")

    def __init__(self, dom: FiniteFrame, cod: FiniteFrame, values: tuple[int, ...]):
        if len(values) != len(dom):
            raise DomainMismatch(f"map has {len(values)} values for a frame of size {len(dom)}")
        self.dom = dom
        self.cod = cod
        self.values = tuple(values)

    @classmethod
    def from_dict(cls, dom: FiniteFrame, cod: FiniteFrame, mapping: Mapping[str, str]):
        missing = [x for x in dom.elements if x not in mapping]
        if missing:
            raise DomainMismatch(f"map is not total: no image for {missing[0]!r}")
        extra = [x for x in mapping if x not in dom]
        if extra:
            raise DomainMismatch(f"{extra[0]!r} is not in the domain {dom.name!r}")
        return cls(dom, cod, tuple(cod.idx(mapping[x]) for x in dom.elements))

    @classmethod
    def from_function(cls, dom: FiniteFrame, cod: FiniteFrame, fn):
        return cls(dom, cod, tuple(cod.idx(fn(x)) for x in dom.elements))

    def __call__(self, x: str) -> str:
        return self.cod.elements[self.values[self.dom.idx(x)]]

    @property
    def table(self) -> dict[str, str]:
        return {x: self.cod.elements[v] for x, v in zip(self.dom.elements, self.values)}

    def image(self) -> set[str]:
        return {self.cod.elements[v] for v in self.values}

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_surjective(self) -> bool:
        return len(set(self.values)) == len(self.cod)

    def is_monotone(self) -> bool:
        le, cle, v = self.dom.leq_matrix, self.cod.leq_matrix, self.values
        n = len(self.dom)
        return all(cle[v[i]][v[j]] for i, j in product(range(n), repeat=2) if le[i][j])

    def meet_witness(self) -> str | tuple[str, str] | None:
        """``"top"``, a pair whose meet is not preserved, or ``None``."""
        return _meet_witness(self.dom, self.cod, self.values)

    def preserves_meets(self) -> bool:
        return self.meet_witness() is None

    def preserves_joins(self) -> bool:
        """Binary joins and the bottom, hence all joins of a finite frame."""
        v, dj, cj = self.values, self.dom.join_table, self.cod.join_table
        if v[self.dom.bottom_index] != self.cod.bottom_index:
            return False
        n = len(self.dom)
        return all(v[dj[i][j]] == cj[v[i]][v[j]] for i, j in product(range(n), repeat=2))

    def as_meet_hom(self) -> MeetHom:
        return MeetHom(self.dom, self.cod, self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FrameMap):
            return NotImplemented
        return self.values == other.values and self.dom == other.dom and self.cod == other.cod

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        body = ", ".join(f"{k}->{v}" for k, v in self.table.items())
        return f"{type(self).__name__}({self.dom.name}->{self.cod.name}: {body})"


def _meet_witness(dom: FiniteFrame, cod: FiniteFrame, v: tuple[int, ...]):
    if v[dom.top_index] != cod.top_index:
        return "top"
    dm, cm = dom.meet_table, cod.meet_table
    n = len(dom)
    for i in range(n):
        for j in range(i + 1, n):
            if v[dm[i][j]] != cm[v[i]][v[j]]:
                return (dom.elements[i], dom.elements[j])
    return None


class MeetHom(FrameMap):
    """A map preserving the top element and binary meets (checked on construction)."""

    __slots__ = ()

    def __init__(self, dom: FiniteFrame, cod: FiniteFrame, values: tuple[int, ...], check: bool = True):
        super().__init__(dom, cod, values)
        if check:
            w = _meet_witness(dom, cod, self.values)
            if w == "top":
                raise NotMeetPreserving(w, f"top {dom.top!r} is sent to {self(dom.top)!r}, not {cod.top!r}")
            if w is not None:
                x, y = w
                raise NotMeetPreserving(
                    w, f"f({x} ^ {y}) = {self(dom.meet(x, y))!r} but f({x}) ^ f({y}) = "
                    f"{cod.meet(self(x), self(y))!r}"
                )


def validate_meet_hom(dom: FiniteFrame, cod: FiniteFrame, mapping: Mapping[str, str]) -> MeetHom:
    raw = FrameMap.from_dict(dom, cod, mapping)
    return MeetHom(dom, cod, raw.values)


def identity(F: FiniteFrame) -> MeetHom:
    return MeetHom(F, F, tuple(range(len(F))), check=False)


def top_morphism(L: FiniteFrame, M: FiniteFrame) -> MeetHom:
    """The constant-top map, which is the zero morphism of the category."""
    return MeetHom(L, M, (M.top_index,) * len(L), check=False)


def is_top(f: FrameMap) -> bool:
    return all(v == f.cod.top_index for v in f.values)


def compose(g: FrameMap, f: FrameMap) -> FrameMap:
    """``g . f``; a MeetHom when both factors are."""
    if f.cod != g.dom:
        raise DomainMismatch(f"cannot compose: codomain {f.cod.name!r} != domain {g.dom.name!r}")
    values = tuple(g.values[v] for v in f.values)
    if isinstance(f, MeetHom) and isinstance(g, MeetHom):
        return MeetHom(f.dom, g.cod, values, check=False)
    return FrameMap(f.dom, g.cod, values)


def _same_hom_set(f: FrameMap, g: FrameMap) -> None:
    if f.dom != g.dom or f.cod != g.cod:
        raise DomainMismatch("maps do not share domain and codomain")


def pointwise_meet(f: MeetHom, g: MeetHom) -> MeetHom:
    _same_hom_set(f, g)
    cm = f.cod.meet_table
    return MeetHom(f.dom, f.cod, tuple(cm[a][b] for a, b in zip(f.values, g.values)), check=False)


def pointwise_leq(f: FrameMap, g: FrameMap) -> bool:
    _same_hom_set(f, g)
    le = f.cod.leq_matrix
    return all(le[a][b] for a, b in zip(f.values, g.values))


def right_adjoint(f: FrameMap) -> MeetHom:
    """The map g with f(x) <= y iff x <= g(y).

    Computed as g(y) = join {x : f(x) <= y} and then verified exhaustively.
    """
    dom, cod = f.dom, f.cod
    dle, cle = dom.leq_matrix, cod.leq_matrix
    vals = []
    for y in range(len(cod)):
        vals.append(dom._join_indices(x for x in range(len(dom)) if cle[f.values[x]][y]))
    for x, y in product(range(len(dom)), range(len(cod))):
        if cle[f.values[x]][y] != dle[x][vals[y]]:
            raise NoAdjoint(
                cod.elements[y],
                f"no right adjoint: law fails at x={dom.elements[x]!r}, y={cod.elements[y]!r}",
            )
    # right adjoints preserve all meets
    return MeetHom(cod, dom, tuple(vals), check=False)


def left_adjoint(f: FrameMap) -> FrameMap:
    """The map h with h(y) <= x iff y <= f(x), as a raw monotone map.

    Meet preservation is not guaranteed; call :meth:`FrameMap.as_meet_hom`.
    """
    dom, cod = f.dom, f.cod
    dle, cle = dom.leq_matrix, cod.leq_matrix
    vals = []
    for y in range(len(cod)):
        vals.append(dom._meet_indices(x for x in range(len(dom)) if cle[y][f.values[x]]))
    for x, y in product(range(len(dom)), range(len(cod))):
        if dle[vals[y]][x] != cle[y][f.values[x]]:
            raise NoAdjoint(
                cod.elements[y],
                f"no left adjoint: law fails at x={dom.elements[x]!r}, y={cod.elements[y]!r}",
            )
    return FrameMap(cod, dom, tuple(vals))


def iter_meet_hom_values(
    H: FiniteFrame, N: FiniteFrame, fixed: Mapping[int, int] | None = None
) -> Iterator[tuple[int, ...]]:
    """Value tuples of all meet-preserving maps H -> N, in search order.

    Elements of ``H`` are assigned along a linear extension from the bottom
    up. When ``x`` is assigned, every earlier ``y`` has ``x ^ y`` strictly
    below ``x`` or equal to ``y``, so meet preservation of each pair can be
    checked as soon as its later member is placed.
    """
    order = [H.idx(x) for x in H.linear_extension()]
    hm, nm = H.meet_table, N.meet_table
    vals = [-1] * len(H)
    fixed = fixed or {}
    every = range(len(N))

    def rec(pos: int):
        if pos == len(order):
            yield tuple(vals)
            return
        x = order[pos]
        if x in fixed:
            cands = [fixed[x]]
        elif x == H.top_index:
            cands = [N.top_index]
        else:
            cands = every
        earlier = order[:pos]
        hx = hm[x]
        for v in cands:
            if x == H.top_index and v != N.top_index:
                continue
            nv = nm[v]
            if all(vals[hx[y]] == nv[vals[y]] for y in earlier):
                vals[x] = v
                yield from rec(pos + 1)
        vals[x] = -1

    yield from rec(0)


def enumerate_meet_homs(H: FiniteFrame, N: FiniteFrame, fixed: Mapping[str, str] | None = None) -> list[MeetHom]:
    """All finite-meet-preserving maps H -> N, sorted lexicographically.

    ``fixed`` pins the images of some elements; it only narrows the search.
    """
    pins = {H.idx(k): N.idx(v) for k, v in (fixed or {}).items()}
    found = sorted(iter_meet_hom_values(H, N, pins))
    return [MeetHom(H, N, v, check=False) for v in found]


@lru_cache(maxsize=4096)
def meet_homs(H: FiniteFrame, N: FiniteFrame) -> tuple[MeetHom, ...]:
    """Memoized :func:`enumerate_meet_homs` for the verification oracles."""
    return tuple(enumerate_meet_homs(H, N))


def count_meet_homs(H: FiniteFrame, N: FiniteFrame) -> int:
    return sum(1 for _ in iter_meet_hom_values(H, N))


@dataclass(frozen=True)
class FrameIso:
    forward: MeetHom
    backward: MeetHom

    def __post_init__(self):
        f, b = self.forward, self.backward
        if compose(b, f) != identity(f.dom):
            raise VerificationFailed("backward . forward = id")
        if compose(f, b) != identity(f.cod):
            raise VerificationFailed("forward . backward = id")
        if not (f.preserves_joins() and b.preserves_joins()):
            raise VerificationFailed("isomorphism preserves joins")


def _invariant(F: FiniteFrame, x: str) -> tuple[int, int, int]:
    ups = sum(1 for a, _ in F.covers if a == x)
    downs = sum(1 for _, b in F.covers if b == x)
    return (F.ranks[x], ups, downs)


def find_frame_isomorphism(F: FiniteFrame, G: FiniteFrame) -> FrameIso | None:
    """A lattice isomorphism F -> G, or None.

    Backtracking over bijections that respect (rank, up-degree, down-degree)
    and the order relation in both directions.
    """
    if len(F) != len(G) or len(F.covers) != len(G.covers):
        return None
    inv_f = {x: _invariant(F, x) for x in F.elements}
    inv_g = {y: _invariant(G, y) for y in G.elements}
    if sorted(inv_f.values()) != sorted(inv_g.values()):
        return None
    order = [F.idx(x) for x in F.linear_extension()]
    fle, gle = F.leq_matrix, G.leq_matrix
    cands = {i: [G.idx(y) for y in G.elements if inv_g[y] == inv_f[F.elements[i]]] for i in order}
    assign: dict[int, int] = {}
    used: set[int] = set()

    def rec(pos: int) -> bool:
        if pos == len(order):
            return True
        i = order[pos]
        for j in cands[i]:
            if j in used:
                continue
            if all(fle[i][a] == gle[j][b] and fle[a][i] == gle[b][j] for a, b in assign.items()):
                assign[i] = j
                used.add(j)
                if rec(pos + 1):
                    return True
                del assign[i]
                used.discard(j)
        return False

    if not rec(0):
        return None
    fwd = tuple(assign[i] for i in range(len(F)))
    back = [0] * len(G)
    for i, j in assign.items():
        back[j] = i
    return FrameIso(MeetHom(F, G, fwd), MeetHom(G, F, tuple(back)))
