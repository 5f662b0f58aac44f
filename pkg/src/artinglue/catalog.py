"""Built-in small frames and a loader for user-supplied ones."""

from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

from .lattice import FiniteFrame, Poset, frame_from_relation, product_frame


def chain(n: int) -> FiniteFrame:
    """The n-element chain. C1 is the one-element frame {1}; C3 is 0 < m < 1."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    if n == 1:
        ids = ["1"]
    elif n == 3:
        ids = ["0", "m", "1"]
    else:
        ids = ["0"] + [f"m{i}" for i in range(1, n - 1)] + ["1"]
    return frame_from_relation(ids, zip(ids, ids[1:]), f"C{n}")


def boolean(atoms: str) -> FiniteFrame:
    """Powerset of ``atoms``; subsets are named by their letters, with 0 and 1."""
    k = len(atoms)
    subsets = [c for r in range(k + 1) for c in combinations(atoms, r)]

    def name(s: tuple[str, ...]) -> str:
        if not s:
            return "0"
        if len(s) == k:
            return "1"
        return "".join(s)

    rel = [(name(a), name(b)) for a in subsets for b in subsets if set(a) <= set(b)]
    return frame_from_relation([name(s) for s in subsets], rel, f"B{k}")


def boolean_square() -> FiniteFrame:
    """{0, a, b, 1} with a, b incomparable."""
    return boolean("ab")


def grid(m: int, n: int) -> FiniteFrame:
    return product_frame(chain(m), chain(n), f"G{m}x{n}")


def lift_bottom(F: FiniteFrame, new: str = "z") -> FiniteFrame:
    """F with a new element added strictly below everything."""
    rel = [(new, F.bottom)] + F.poset.pairs()
    return frame_from_relation([new, *F.elements], rel, f"1+{F.name}")


def lift_top(F: FiniteFrame, new: str = "t") -> FiniteFrame:
    """F with a new element added strictly above everything."""
    rel = [(F.top, new)] + F.poset.pairs()
    return frame_from_relation([*F.elements, new], rel, f"{F.name}+1")


def m3() -> Poset:
    """The diamond: modular but not distributive."""
    return Poset.from_relation(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )


def n5() -> Poset:
    """The pentagon: not modular, hence not distributive."""
    return Poset.from_relation(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )


def builtin_frames() -> dict[str, FiniteFrame]:
    frames = [chain(n) for n in range(1, 6)]
    frames += [boolean_square(), boolean("abc"), grid(2, 3)]
    frames += [lift_bottom(boolean_square()), lift_top(boolean_square())]
    frames += [lift_top(lift_bottom(boolean_square()))]
    return {F.name: F for F in frames}


NEGATIVES = {"M3": m3, "N5": n5}


class Catalog:
    """Named frames used as the quantification domain of universal-property checks.

    Every entry is a valid frame; the non-distributive negatives live in
    ``NEGATIVES`` and are never returned by :meth:`frames`.
    """

    def __init__(self, frames: dict[str, FiniteFrame] | None = None):
        self._frames = dict(builtin_frames() if frames is None else frames)

    @classmethod
    def from_directory(cls, path: str | Path, include_builtins: bool = True) -> Catalog:
        from .io import load_frame

        cat = cls(None if include_builtins else {})
        for f in sorted(Path(path).glob("*.json")):
            try:
                F = load_frame(f)
            except ValueError:
                continue
            cat.add(F)
        return cat

    def add(self, F: FiniteFrame) -> None:
        self._frames[F.name] = F

    def __getitem__(self, name: str) -> FiniteFrame:
        return self._frames[name]

    def __contains__(self, name: object) -> bool:
        return name in self._frames

    def __iter__(self) -> Iterator[FiniteFrame]:
        return iter(self._frames.values())

    def names(self) -> list[str]:
        return list(self._frames)

    def frames(self, max_size: int | None = None) -> list[FiniteFrame]:
        return [F for F in self._frames.values() if max_size is None or len(F) <= max_size]

    def restricted(self, names: Iterable[str]) -> Catalog:
        return Catalog({n: self._frames[n] for n in names})

    def __repr__(self) -> str:
        return f"Catalog({', '.join(self._frames)})"


DEFAULT_CATALOG = Catalog()
