"""JSON frame and map files.

Frame file::

    {"format_version": 1, "name": "B2", "elements": ["0", "a", "b", "1"],
     "leq": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]}

``leq`` may be any generating relation; the loader closes it. Map file::

    {"format_version": 1, "dom": "C2", "cod": "C2", "map": {"0": "0", "1": "1"}}

where ``dom`` and ``cod`` are frame names resolved by the caller.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable

from .errors import ArtinGlueError, InputError, UnknownElement
from .lattice import FiniteFrame, Poset, validate_frame
from .morphisms import FrameMap, MeetHom

FORMAT_VERSION = 1


def _read_json(path: str | Path) -> dict[str, Any]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(str(path), exc.strerror or "cannot read file") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    if not isinstance(data, dict):
        raise InputError(str(path), "top level must be a JSON object")
    version = data.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise InputError(f"{path}:format_version", f"unsupported version {version!r}")
    return data


def _string_list(data: dict, field: str, where: str) -> list[str]:
    value = data.get(field)
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise InputError(f"{where}:{field}", "expected a list of strings")
    return value


def poset_from_dict(data: dict[str, Any], where: str = "<frame>") -> tuple[str, Poset]:
    name = data.get("name", "")
    if not isinstance(name, str):
        raise InputError(f"{where}:name", "expected a string")
    elements = _string_list(data, "elements", where)
    leq = data.get("leq", [])
    if not isinstance(leq, list):
        raise InputError(f"{where}:leq", "expected a list of [lower, upper] pairs")
    pairs = []
    for i, pair in enumerate(leq):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
            raise InputError(f"{where}:leq[{i}]", "expected a [lower, upper] pair of strings")
        pairs.append((pair[0], pair[1]))
    try:
        return name, Poset.from_relation(elements, pairs)
    except UnknownElement as exc:
        raise InputError(f"{where}:leq", f"unknown element {exc.element!r}") from None
    except ArtinGlueError as exc:
        raise InputError(f"{where}:elements", str(exc)) from None


def load_poset(path: str | Path) -> tuple[str, Poset]:
    name, p = poset_from_dict(_read_json(path), str(path))
    return name or Path(path).stem, p


def frame_from_dict(data: dict[str, Any], where: str = "<frame>") -> FiniteFrame:
    name, p = poset_from_dict(data, where)
    return validate_frame(p, name)


def load_frame(path: str | Path) -> FiniteFrame:
    """Load and validate a frame file; lattice-law failures propagate unchanged."""
    name, p = load_poset(path)
    return validate_frame(p, name)


def frame_to_dict(F: FiniteFrame) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "name": F.name,
        "elements": list(F.elements),
        "leq": [list(c) for c in F.covers],
    }


def map_from_dict(
    data: dict[str, Any], resolve: Callable[[str], FiniteFrame], where: str = "<map>"
) -> MeetHom:
    frames = []
    for field in ("dom", "cod"):
        name = data.get(field)
        if not isinstance(name, str):
            raise InputError(f"{where}:{field}", "expected a frame name")
        try:
            frames.append(resolve(name))
        except KeyError:
            raise InputError(f"{where}:{field}", f"unknown frame {name!r}") from None
    dom, cod = frames
    table = data.get("map")
    if not isinstance(table, dict) or not all(isinstance(v, str) for v in table.values()):
        raise InputError(f"{where}:map", "expected an object from element ids to element ids")
    for x, y in table.items():
        if x not in dom:
            raise InputError(f"{where}:map", f"{x!r} is not an element of {dom.name!r}")
        if y not in cod:
            raise InputError(f"{where}:map.{x}", f"{y!r} is not an element of {cod.name!r}")
    missing = [x for x in dom.elements if x not in table]
    if missing:
        raise InputError(f"{where}:map", f"no image given for {missing[0]!r}")
    return MeetHom(dom, cod, FrameMap.from_dict(dom, cod, table).values)


def load_map(path: str | Path, resolve: Callable[[str], FiniteFrame]) -> MeetHom:
    return map_from_dict(_read_json(path), resolve, str(path))


def map_to_dict(f: FrameMap) -> dict[str, Any]:
    return {"format_version": FORMAT_VERSION, "dom": f.dom.name, "cod": f.cod.name, "map": f.table}


def dump_json(data: Any, path: str | Path | None = None) -> str:
    text = json.dumps(data, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
