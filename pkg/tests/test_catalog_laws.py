from __future__ import annotations

import json

import pytest

from artinglue.catalog import DEFAULT_CATALOG, NEGATIVES, Catalog, chain
from artinglue.laws import check_laws
from artinglue.lattice import validate_frame
from artinglue.morphisms import find_frame_isomorphism
from artinglue.reports import LawReport, Verdict


def test_builtin_names():
    names = set(DEFAULT_CATALOG.names())
    assert {"C1", "C2", "C3", "C4", "C5", "B2", "B3", "G2x3"} <= names
    assert all(len(F) <= 8 for F in DEFAULT_CATALOG)


def test_negatives_are_not_frames():
    for make in NEGATIVES.values():
        with pytest.raises(ValueError):
            validate_frame(make())


def test_from_directory_skips_invalid_files(tmp_path):
    (tmp_path / "d.json").write_text(
        json.dumps({"name": "D", "elements": ["0", "x", "1"], "leq": [["0", "x"], ["x", "1"]]})
    )
    (tmp_path / "junk.json").write_text("{not json")
    cat = Catalog.from_directory(tmp_path)
    assert "D" in cat and cat["D"] != chain(3)
    assert find_frame_isomorphism(cat["D"], chain(3)) is not None
    assert "C2" in cat
    assert "D" in cat.restricted(["D"]).names()


def test_law_report_requires_witness_on_failure():
    with pytest.raises(ValueError):
        LawReport("x", "y", "fail")
    r = LawReport.from_verdict("law", "inst", Verdict.failed({"at": "a"}))
    assert not r.passed
    assert json.loads(r.to_json())["witness"] == {"at": "a"}


def test_full_law_suite_passes():
    reports = check_laws()
    failed = [r.to_json() for r in reports if not r.passed]
    assert not failed
    statements = {r.statement for r in reports}
    assert {"classification", "schreier-iff-adjoint", "bifunctor-coherence", "split-short-five-fails"} <= statements
