import json

import pytest

from app import app
from tests.conftest import read_sample


@pytest.fixture
def client(tmp_path, monkeypatch):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"archive_db": str(tmp_path / "archive.db")}))
    monkeypatch.setenv("FOXDIV_CONFIG", str(config))
    app.config["TESTING"] = True
    with app.test_client() as client:
        yield client


def test_ping(client):
    response = client.get("/ping")
    assert response.status_code == 200
    assert "witness" in response.get_json()["commands"]


def test_fox(client):
    response = client.post("/fox", json={"input": read_sample("z2.txt"), "word": "x^3", "x": "x"})
    assert response.status_code == 200
    assert response.get_json()["derivative"] == "1 + x + x^2"


def test_complete(client):
    response = client.post("/complete", json={"input": read_sample("worked_example.txt")})
    body = response.get_json()
    assert response.status_code == 200
    assert body["status"] == "completed"
    assert body["rules"] == ["x^2 -> y^2", "x y^2 -> y^2 x"]


def test_limit_exceeded_is_unprocessable(client):
    response = client.post("/complete", json={"input": read_sample("cyclic5.txt"), "max_rules": 3})
    assert response.status_code == 422
    assert response.get_json()["status"] == "limit_exceeded"


def test_witness(client):
    response = client.post("/witness", json={"input": read_sample("z2.txt"), "support_len": 1, "coeff_bound": 1})
    body = response.get_json()
    assert response.status_code == 200
    assert body["count"] == 2
    assert body["witnesses"][1]["A"] == "1 - x"


def test_witness_with_beta(client):
    response = client.post("/witness", json={"input": read_sample("z2.txt"), "beta": ["1"]})
    assert response.status_code == 422
    assert response.get_json()["error"] == "not_in_kernel"


def test_torsion_check_needs_no_input(client):
    response = client.post("/torsion-check", json={"n": 4})
    assert response.status_code == 200
    assert response.get_json()["holds"] is True


def test_bad_requests(client):
    assert client.post("/transmogrify", json={}).status_code == 404
    assert client.post("/fox", data="not json", content_type="text/plain").status_code == 400
    response = client.post("/fox", json={"input": read_sample("z2.txt"), "word": "x", "x": "x", "n": "many"})
    assert response.status_code == 400
    assert response.get_json()["error"] == "bad_flag"
    response = client.post("/witness", json={"input": read_sample("z2.txt"), "beta": "1 - x"})
    assert response.get_json()["error"] == "bad_flag"


@pytest.mark.parametrize("source", [42, ["group"], {"text": "group"}])
def test_input_must_be_text(client, source):
    response = client.post("/fox", json={"input": source, "word": "x", "x": "x"})
    assert response.status_code == 400
    assert response.get_json()["error"] == "bad_flag"


def test_parse_error(client):
    response = client.post("/normalform", json={"input": "group\ngenerators: x\nrelator: x^0\n", "word": "x"})
    assert response.status_code == 400
    assert response.get_json()["error"] == "parse_error"


def test_missing_input(client):
    response = client.post("/irr", json={"max_len": 2})
    assert response.status_code == 400
    assert response.get_json()["error"] == "missing_input"


def test_archive_round_trip(client):
    assert client.get("/archive/" + "0" * 64).status_code == 404
    body = client.post("/complete", json={"input": read_sample("cyclic3.txt"), "archive": True}).get_json()
    response = client.get("/archive/" + body["fingerprint"])
    assert response.status_code == 200
    archived = response.get_json()
    assert archived["completion"]["status"] == "completed"
    assert archived["completion"]["rules"] == body["rules"]
    assert archived["witnesses"] == []
