"""Finite posets and finite frames.

A finite frame is the same thing as a finite bounded distributive lattice.
Elements are opaque string ids; internally everything is indexed by the
position of the id in ``elements`` and all operations are table lookups.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import NotALattice, NotAPoset, NotDistributive, UnknownElement


class Poset:
    """An immutable finite partial order on string ids.

    ``leq`` must already be reflexive and transitive; use
    :meth:`from_relation` to close a generating relation first.
    """

    def __init__(self, elements: Sequence[str], leq: Iterable[tuple[str, str]]):
        self.elements: tuple[str, ...] = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            dup = next(x for x in self.elements if self.elements.count(x) > 1)
            raise NotAPoset("a set (duplicate id)", (dup,))
        n = len(self.elements)
        mat = [[False] * n for _ in range(n)]
        for a, b in leq:
            mat[self._idx(a)][self._idx(b)] = True
        for i in range(n):
            if not mat[i][i]:
                raise NotAPoset("reflexive", (self.elements[i],))
        for i, j in product(range(n), repeat=2):
            if i != j and mat[i][j] and mat[j][i]:
                raise NotAPoset("antisymmetric", (self.elements[i], self.elements[j]))
        for i, j, k in product(range(n), repeat=3):
            if mat[i][j] and mat[j][k] and not mat[i][k]:
                e = self.elements
                raise NotAPoset("transitive", (e[i], e[j], e[k]))
        self.leq_matrix: tuple[tuple[bool, ...], ...] = tuple(map(tuple, mat))
        self._hash = hash((self.elements, self.leq_matrix))

    @classmethod
    def from_relation(cls, elements: Sequence[str], pairs: Iterable[tuple[str, str]]) -> Poset:
        """Build a poset from the reflexive-transitive closure of ``pairs``."""
        elements = tuple(elements)
        index = {x: i for i, x in enumerate(elements)}
        n = len(elements)
        mat = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            if a not in index:
                raise UnknownElement(a)
            if b not in index:
                raise UnknownElement(b)
            mat[index[a]][index[b]] = True
        # Warshall
        for k in range(n):
            for i in range(n):
                if mat[i][k]:
                    row_k = mat[k]
                    row_i = mat[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        pairs = [(elements[i], elements[j]) for i in range(n) for j in range(n) if mat[i][j]]
        return cls(elements, pairs)

    def _idx(self, x: str) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(x) from None

    def leq(self, x: str, y: str) -> bool:
        return self.leq_matrix[self._idx(x)][self._idx(y)]

    def pairs(self) -> list[tuple[str, str]]:
        e = self.elements
        n = len(e)
        return [(e[i], e[j]) for i in range(n) for j in range(n) if self.leq_matrix[i][j]]

    def restrict(self, subset: Iterable[str]) -> Poset:
        kept = set(subset)
        keep = [x for x in self.elements if x in kept]
        return Poset(keep, [(a, b) for a, b in self.pairs() if a in kept and b in kept])

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Poset):
            return NotImplemented
        return self._hash == other._hash and self.elements == other.elements and self.leq_matrix == other.leq_matrix

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Poset({list(self.elements)!r})"


def _greatest(candidates: list[int], leq: tuple[tuple[bool, ...], ...]) -> int | None:
    for c in candidates:
        if all(leq[d][c] for d in candidates):
            return c
    return None


def _least(candidates: list[int], leq: tuple[tuple[bool, ...], ...]) -> int | None:
    for c in candidates:
        if all(leq[c][d] for d in candidates):
            return c
    return None


class FiniteFrame:
    """A finite bounded distributive lattice with precomputed operation tables.

    Do not construct directly; use :func:`validate_frame`, which checks the
    lattice and distributivity laws before materializing the tables.

    Two frames compare equal when they have the same element ids in the same
    order with the same order relation. The ``name`` is cosmetic.
    """

    def __init__(
        self,
        poset: Poset,
        meet_table: tuple[tuple[int, ...], ...],
        join_table: tuple[tuple[int, ...], ...],
        name: str = "",
    ):
        self.poset = poset
        self.name = name
        self.elements = poset.elements
        self.index = poset.index
        self.leq_matrix = poset.leq_matrix
        self.meet_table = meet_table
        self.join_table = join_table
        n = len(self.elements)
        self.bottom_index = _least(list(range(n)), self.leq_matrix)
        self.top_index = _greatest(list(range(n)), self.leq_matrix)
        self.bottom = self.elements[self.bottom_index]
        self.top = self.elements[self.top_index]
        impl = []
        for u in range(n):
            row = []
            for y in range(n):
                below = [z for z in range(n) if self.leq_matrix[meet_table[z][u]][y]]
                row.append(self._join_indices(below))
            impl.append(tuple(row))
        # impl_table[u][y] is u => y
        self.impl_table: tuple[tuple[int, ...], ...] = tuple(impl)

    def _join_indices(self, idxs: Iterable[int]) -> int:
        acc = self.bottom_index
        for i in idxs:
            acc = self.join_table[acc][i]
        return acc

    def _meet_indices(self, idxs: Iterable[int]) -> int:
        acc = self.top_index
        for i in idxs:
            acc = self.meet_table[acc][i]
        return acc

    def idx(self, x: str) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(x, self.name) from None

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leq(self, x: str, y: str) -> bool:
        return self.leq_matrix[self.idx(x)][self.idx(y)]

    def meet(self, x: str, y: str) -> str:
        return self.elements[self.meet_table[self.idx(x)][self.idx(y)]]

    def join(self, x: str, y: str) -> str:
        return self.elements[self.join_table[self.idx(x)][self.idx(y)]]

    def impl(self, u: str, y: str) -> str:
        """Heyting implication ``u => y``: the largest z with z ^ u <= y."""
        return self.elements[self.impl_table[self.idx(u)][self.idx(y)]]

    def meet_all(self, xs: Iterable[str]) -> str:
        return self.elements[self._meet_indices(self.idx(x) for x in xs)]

    def join_all(self, xs: Iterable[str]) -> str:
        return self.elements[self._join_indices(self.idx(x) for x in xs)]

    def down_set(self, u: str) -> list[str]:
        j = self.idx(u)
        return [x for i, x in enumerate(self.elements) if self.leq_matrix[i][j]]

    def up_set(self, u: str) -> list[str]:
        j = self.idx(u)
        return [x for i, x in enumerate(self.elements) if self.leq_matrix[j][i]]

    @cached_property
    def covers(self) -> list[tuple[str, str]]:
        """Pairs (x, y) with x < y and nothing strictly between them."""
        n = len(self)
        le = self.leq_matrix
        out = []
        for i, j in product(range(n), repeat=2):
            if i == j or not le[i][j]:
                continue
            if not any(k not in (i, j) and le[i][k] and le[k][j] for k in range(n)):
                out.append((self.elements[i], self.elements[j]))
        return out

    @cached_property
    def ranks(self) -> dict[str, int]:
        """Length of the longest chain from the bottom to each element."""
        rank = {self.bottom: 0}
        for x in self.linear_extension()[1:]:
            rank[x] = 1 + max(rank[a] for a, b in self.covers if b == x)
        return rank

    def linear_extension(self) -> list[str]:
        """Elements sorted so that x < y implies x comes first (stable in id order)."""
        n = len(self)
        below = [sum(self.leq_matrix[j][i] for j in range(n)) for i in range(n)]
        order = sorted(range(n), key=lambda i: below[i])
        return [self.elements[i] for i in order]

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteFrame):
            return NotImplemented
        return self.poset == other.poset

    def __hash__(self) -> int:
        return hash(self.poset)

    def __repr__(self) -> str:
        label = self.name or "frame"
        return f"<FiniteFrame {label} |{len(self)}|>"


def validate_frame(p: Poset, name: str = "") -> FiniteFrame:
    """Check that ``p`` is a bounded distributive lattice and build its tables.

    Raises :class:`NotALattice` naming the first pair without a meet or join,
    or :class:`NotDistributive` with the first failing triple, scanning in
    element order.
    """
    n = len(p)
    e = p.elements
    le = p.leq_matrix
    if n == 0:
        raise NotALattice("top", ("", ""))
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        lower = [k for k in range(n) if le[k][i] and le[k][j]]
        m = _greatest(lower, le)
        if m is None:
            raise NotALattice("meet", (e[i], e[j]))
        upper = [k for k in range(n) if le[i][k] and le[j][k]]
        s = _least(upper, le)
        if s is None:
            raise NotALattice("join", (e[i], e[j]))
        meet[i][j] = m
        join[i][j] = s
    for x, y, z in product(range(n), repeat=3):
        if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
            raise NotDistributive((e[x], e[y], e[z]))
    return FiniteFrame(p, tuple(map(tuple, meet)), tuple(map(tuple, join)), name)


def frame_from_relation(
    elements: Sequence[str], pairs: Iterable[tuple[str, str]], name: str = ""
) -> FiniteFrame:
    return validate_frame(Poset.from_relation(elements, pairs), name)


def heyting_impl(F: FiniteFrame, u: str, y: str) -> str:
    return F.impl(u, y)


def down_set_frame(F: FiniteFrame, u: str) -> FiniteFrame:
    """The frame ``{x : x <= u}`` with top ``u``; ids are shared with ``F``."""
    return validate_frame(F.poset.restrict(F.down_set(u)), f"down({u})")


def up_set_frame(F: FiniteFrame, u: str) -> FiniteFrame:
    """The frame ``{x : x >= u}`` with bottom ``u``; ids are shared with ``F``."""
    return validate_frame(F.poset.restrict(F.up_set(u)), f"up({u})")


def pair_id(a: str, b: str) -> str:
    return f"({a},{b})"


def product_frame(N: FiniteFrame, H: FiniteFrame, name: str = "") -> FiniteFrame:
    """Componentwise product; element ``(n,h)`` has id ``pair_id(n, h)``."""
    pairs = [(n, h) for n in N.elements for h in H.elements]
    ids = [pair_id(n, h) for n, h in pairs]
    rel = [
        (pair_id(n, h), pair_id(n2, h2))
        for (n, h) in pairs
        for (n2, h2) in pairs
        if N.leq(n, n2) and H.leq(h, h2)
    ]
    return validate_frame(Poset(ids, rel), name or f"{N.name}x{H.name}")


def hasse_dot(F: FiniteFrame) -> str:
    """Graphviz source for the Hasse diagram, bottom at rank 0."""
    lines = [f'digraph "{F.name or "frame"}" {{', "  rankdir=BT;", "  node [shape=circle];"]
    by_rank: dict[int, list[str]] = {}
    for x in F.elements:
        by_rank.setdefault(F.ranks[x], []).append(x)
    for r in sorted(by_rank):
        names = " ".join(f'"{x}";' for x in by_rank[r])
        lines.append(f"  {{ rank=same; {names} }}")
    for a, b in F.covers:
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
