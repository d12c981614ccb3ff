import json
import multiprocessing as mp

import pytest

from maxac.bounds import BoundConstraint, certify_maximal
from maxac.catalog import (
    CatalogError,
    append_records,
    catalog_query,
    default_catalog_path,
    known_canonicals,
    make_record,
    read_catalog,
)
from maxac.families import complete_graph, named_graph
from maxac.iso import canonical_form


@pytest.fixture
def records():
    return [
        make_record(named_graph("petersen"), BoundConstraint.girth(3, 5), "petersen"),
        make_record(named_graph("heawood"), BoundConstraint.girth(3, 6), "heawood"),
        make_record(named_graph("desargues"), BoundConstraint.diameter(3, 5), "desargues"),
        make_record(named_graph("cube4"), BoundConstraint.diameter(4, 4), "cube4"),
        make_record(named_graph("heawood"), BoundConstraint.diameter(3, 4), "import"),
    ]


def test_record_fields(records):
    r = records[2]
    assert (r.n, r.d, r.girth, r.diameter, r.aut_order) == (20, 3, 6, 5, 240)
    assert r.attained and r.ac == pytest.approx(1.0, abs=1e-9)
    assert not records[4].attained
    json.loads(r.to_json())


def test_roundtrip_and_reanalysis(tmp_path, records):
    path = tmp_path / "cat.jsonl"
    assert append_records(path, records) == len(records)
    back = read_catalog(path)
    assert [r.graph6 for r in back] == [r.graph6 for r in records]
    for r in back:
        g = r.graph()
        rep = certify_maximal(g, r.bound_constraint)
        assert abs(rep.ac - r.ac) < 1e-9
        assert abs(rep.bound - r.bound) < 1e-9
        assert canonical_form(g).graph6 == r.canonical


def test_query(tmp_path, records):
    path = tmp_path / "cat.jsonl"
    append_records(path, records)
    assert [r.provenance for r in catalog_query(path, d=3, attained=True)] == ["petersen", "heawood", "desargues"]
    assert [r.provenance for r in catalog_query(path, attained=False)] == ["import"]
    assert [r.provenance for r in catalog_query(path, D=4)] == ["cube4"]
    assert [r.provenance for r in catalog_query(path, g=6, n_max=14)] == ["heawood", "import"]
    assert catalog_query(path, n_min=100) == []
    assert known_canonicals(path) == {r.canonical for r in records}


def test_empty_and_missing(tmp_path):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    assert catalog_query(empty) == []
    with pytest.raises(CatalogError):
        read_catalog(tmp_path / "nope.jsonl")
    assert known_canonicals(tmp_path / "nope.jsonl") == set()


def test_corrupt_line_reported(tmp_path, records):
    path = tmp_path / "cat.jsonl"
    append_records(path, records[:1])
    with open(path, "a") as fh:
        fh.write('{"graph6": "I?h]@eOWG"\n')
    with pytest.raises(CatalogError, match=":2:"):
        read_catalog(path)


def _writer(args):
    path, k = args
    rec = make_record(complete_graph(4), BoundConstraint.girth(3, 3), f"worker{k}")
    for _ in range(20):
        append_records(path, [rec])
    return k


def test_concurrent_appends_never_tear(tmp_path):
    path = str(tmp_path / "cat.jsonl")
    ctx = mp.get_context("fork")
    with ctx.Pool(4) as pool:
        pool.map(_writer, [(path, k) for k in range(4)])
    lines = open(path).read().splitlines()
    assert len(lines) == 80
    for line in lines:
        json.loads(line)


def test_env_default(monkeypatch, tmp_path):
    monkeypatch.setenv("MAXAC_CATALOG", str(tmp_path / "x.jsonl"))
    assert default_catalog_path() == tmp_path / "x.jsonl"
