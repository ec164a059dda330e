"""HTTP service: session load/edit/census endpoints and atomic persistence."""

from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from linknot.census import count_census
from linknot.diagram import Diagram
from linknot.embeddings import fan_embedding
from linknot.service import create_app


@pytest.fixture()
def client(tmp_path):
    app = create_app(tmp_path / "session.json")
    with TestClient(app) as c:
        yield c


@pytest.fixture()
def loaded(client):
    d = fan_embedding([3, 3, 1])
    resp = client.put("/diagram", content=d.to_json())
    assert resp.status_code == 200 and resp.json()["ok"]
    return client


def test_empty_session_is_404(client):
    assert client.get("/diagram").status_code == 404
    assert client.get("/census").status_code == 404


def test_diagram_round_trip_is_byte_identical(loaded):
    d = fan_embedding([3, 3, 1])
    assert loaded.get("/diagram").content.decode() == d.to_json()


def test_put_rejects_degenerate_diagram(client):
    d = fan_embedding([4, 4])
    obj = json.loads(d.to_json())
    # collapse two vertices onto the same point
    obj["positions"][1] = obj["positions"][0]
    resp = client.put("/diagram", content=json.dumps(obj))
    assert resp.status_code == 422
    assert client.get("/diagram").status_code == 404  # nothing was accepted


def test_census_bytes_match_library_output(loaded):
    d = fan_embedding([3, 3, 1])
    expected = count_census(d, "links").to_json()
    resp = loaded.get("/census", params={"kind": "links"})
    assert resp.status_code == 200
    assert resp.content.decode() == expected
    assert loaded.get("/census", params={"kind": "nope"}).status_code == 422


def test_flip_twice_restores_the_census(loaded):
    before = loaded.get("/census").content
    key = fan_embedding([3, 3, 1]).crossings()[0].key
    for expected_over in ("b", "a"):
        resp = loaded.post("/flip", json={"key": list(key)})
        assert resp.status_code == 200
        assert resp.json()["over"] == expected_over
    assert loaded.get("/census").content == before


def test_flip_unknown_or_malformed_key(loaded):
    assert loaded.post("/flip", json={"key": [999, 0, 998, 0]}).status_code == 404
    assert loaded.post("/flip", json={"key": [1, 2]}).status_code == 422


def test_move_vertex_failure_leaves_diagram_unchanged(loaded):
    before = loaded.get("/diagram").content
    d = Diagram.from_json(before.decode())
    x0, y0 = d.positions[0]
    resp = loaded.post("/move-vertex",
                       json={"id": 0, "x": str(d.positions[1][0]),
                             "y": str(d.positions[1][1])})
    assert resp.status_code == 422
    assert loaded.get("/diagram").content == before
    assert loaded.post("/move-vertex",
                       json={"id": 99, "x": "0", "y": "0"}).status_code == 404
    # a harmless nudge succeeds
    from fractions import Fraction

    ok = loaded.post("/move-vertex",
                     json={"id": 0, "x": str(x0 + Fraction(1, 97)),
                           "y": str(y0)})
    assert ok.status_code == 200


def test_link_and_knot_record_endpoints(loaded):
    links = loaded.get("/links").json()
    assert links["total"] == len(links["links"]) == 1
    rec = links["links"][0]
    assert sorted(map(len, (rec["cycle_a"], rec["cycle_b"]))) == [3, 4]
    assert rec["lk"] % 2 == 1
    knots = loaded.get("/knots").json()
    assert knots["total"] == len(knots["knots"])


def test_search_endpoint_persists_best(tmp_path):
    workfile = tmp_path / "session.json"
    app = create_app(workfile)
    with TestClient(app) as client:
        client.put("/diagram", content=fan_embedding([3, 3, 1]).to_json())
        resp = client.post("/search", json={"budget": 40, "seed": 1})
        assert resp.status_code == 200
        body = resp.json()
        assert body["best_count"] >= 1  # proven bound for K_{3,3,1}
        served = client.get("/diagram").content.decode()
    assert workfile.read_text() == served
    # a fresh app over the same workfile resumes the session
    with TestClient(create_app(workfile)) as fresh:
        assert fresh.get("/diagram").content.decode() == served


def test_search_rejects_bad_budget(loaded):
    assert loaded.post("/search", json={"budget": 0}).status_code == 422
