import json

import pytest
from pydantic import ValidationError

from cpmackey.exceptions import AxiomViolationError
from cpmackey.homalg import hom_from_fixed_element
from cpmackey.mackey import burnside, zero_functor
from cpmackey.models import (
    HomDocument,
    HomDocumentList,
    LevelInvariants,
    MackeyDocument,
    PeriodicityReport,
    SampleRecord,
)
from cpmackey.trace.trace_writer import LocalWriter, SampleLogWriter


def test_functor_document_layout(o2):
    data = json.loads(MackeyDocument.from_functor(o2, name="o2").dump())
    assert data["schema"] == 1
    assert data["prime"] == 2
    assert data["tr"] == {"rows": 1, "cols": 1, "entries": [[2]]}
    assert data["fixedRelations"] == {"rows": 1, "cols": 0, "entries": [[]]}
    assert data["name"] == "o2"


def test_functor_document_round_trip():
    for m in (burnside(3), zero_functor(3)):
        doc = MackeyDocument.model_validate_json(MackeyDocument.from_functor(m).dump())
        assert doc.to_functor() == m


def test_invalid_documents(o2):
    data = json.loads(MackeyDocument.from_functor(o2).dump())
    data["tr"]["entries"] = [[1]]
    with pytest.raises(AxiomViolationError):
        MackeyDocument.model_validate(data).to_functor()
    data["tr"]["entries"] = [[1, 2]]
    with pytest.raises(ValidationError):
        MackeyDocument.model_validate(data)
    data["tr"]["entries"] = [[2]]
    data["schema"] = 2
    with pytest.raises(ValidationError):
        MackeyDocument.model_validate(data)


def test_hom_documents(o2):
    f = hom_from_fixed_element(o2, (1,))
    raw = HomDocumentList.dump_json([HomDocument.from_hom(f)], by_alias=True)
    (doc,) = HomDocumentList.validate_json(raw)
    assert doc.to_hom() == f


def _record(index: int, match: bool) -> SampleRecord:
    inv = LevelInvariants(fixed=[2], underlying=[])
    return SampleRecord(
        index=index,
        seed_a=2 * index,
        seed_b=2 * index + 1,
        ext_invariants={1: inv, 5: inv},
        matches_at_shift4={1: match},
    )


def test_report_validation():
    with pytest.raises(ValidationError):
        PeriodicityReport(
            prime=2, sample_count=1, degree_range=[1, 3], per_sample=[], summary=1.0
        )
    report = PeriodicityReport(
        prime=2,
        sample_count=1,
        degree_range=[1, 5],
        base_seed=0,
        per_sample=[_record(0, True)],
        summary=1.0,
    )
    data = json.loads(report.dump())
    assert data["perSample"][0]["matchesAtShift4"] == {"1": True}
    assert PeriodicityReport.model_validate_json(report.dump()) == report


def test_writers(tmp_path):
    report = PeriodicityReport(
        prime=3,
        sample_count=2,
        degree_range=[0, 4],
        per_sample=[_record(0, True), _record(1, False)],
        summary=0.5,
    )
    path = LocalWriter(str(tmp_path / "reports")).write(report, "run")
    assert path.endswith("run.json")
    with open(path) as f:
        assert json.load(f)["sampleCount"] == 2

    log = SampleLogWriter(str(tmp_path / "samples" / "run.jsonl"))
    for record in report.per_sample:
        log.append(record)
    assert log.read(SampleRecord) == report.per_sample
