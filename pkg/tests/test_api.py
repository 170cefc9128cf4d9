import pytest
from fastapi.testclient import TestClient

from app.main import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_root_and_health(client):
    assert client.get("/health").json() == {"status": "ok"}
    body = client.get("/").json()
    assert body["name"] == "Numerais"
    assert "twoscomp" in body["kinds"]


def test_convert(client):
    response = client.post(
        "/api/numerals/convert", json={"kind": "twoscomp", "from": "int", "to": "bits", "value": "-5"}
    )
    assert response.status_code == 200
    assert response.json() == {"kind": "twoscomp", "result": "...1011"}


def test_convert_defaults_to_literal(client):
    response = client.post("/api/numerals/convert", json={"kind": "binary", "value": "4"})
    assert response.json()["result"] == "A(A(B(Z)))"


def test_eval(client):
    response = client.post(
        "/api/numerals/eval", json={"kind": "twoscomp", "op": "add", "literals": ["N", "N"]}
    )
    assert response.status_code == 200
    assert response.json()["result"] == "A(N)"


@pytest.mark.parametrize(
    "path, payload, status",
    [
        ("/api/numerals/convert", {"kind": "binary", "from": "literal", "to": "int", "value": "A(Z)"}, 400),
        ("/api/numerals/convert", {"kind": "cd", "from": "int", "to": "bits", "value": "3"}, 400),
        ("/api/numerals/convert", {"kind": "unary", "value": "-1"}, 422),
        ("/api/numerals/eval", {"kind": "unary", "op": "neg", "literals": ["Z"]}, 400),
        ("/api/numerals/eval", {"kind": "octal", "op": "add", "literals": ["Z"]}, 422),
    ],
)
def test_numeral_errors(client, path, payload, status):
    response = client.post(path, json=payload)
    assert response.status_code == status
    if status == 400:
        assert response.json()["detail"].startswith("Erro:")


def test_kinds(client):
    kinds = client.get("/api/numerals/kinds").json()
    assert set(kinds) == {"unary", "binary", "twoscomp", "cd"}
    assert "neg" in kinds["twoscomp"]
    assert kinds["cd"] == []


def test_braun_script(client):
    response = client.post("/api/braun/script", json={"init": "a,b,c", "script": ["access 1", "rest", "first"]})
    assert response.status_code == 200
    assert response.json() == {"lines": ["b", "b,c", "b"]}


def test_braun_script_errors(client):
    assert client.post("/api/braun/script", json={"script": ["first"]}).status_code == 422
    assert client.post("/api/braun/script", json={"script": ["jump"]}).status_code == 400


def test_bench_csv(client):
    response = client.get("/api/bench/sumlist", params={"sizes": "10,100"})
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("text/csv")
    assert response.text == "n,steps\n10,11\n100,101\n"


def test_bench_errors(client):
    assert client.get("/api/bench/nope", params={"sizes": "1"}).status_code == 400
    assert client.get("/api/bench/sumlist", params={"sizes": "a"}).status_code == 400


def test_bench_ops(client):
    ops = client.get("/api/bench/ops").json()
    assert ops["sumlist"] is True
    assert ops["b_add_v2"] is False


def test_bench_check(client):
    response = client.post(
        "/api/bench/check", json={"op": "bs_access", "sizes": [1, 10, 100, 1000], "form": "logarithmic", "k": 2}
    )
    assert response.status_code == 200
    report = response.json()
    assert report["passed"] is True
    assert [s["size"] for s in report["samples"]] == [1, 10, 100, 1000]


def test_bench_check_without_closed_form(client):
    response = client.post("/api/bench/check", json={"op": "b_add_v1", "sizes": [1], "form": "exact"})
    assert response.status_code == 400


def test_check_suite(client):
    response = client.post("/api/check", json={"suite": "listlab", "seed": 3})
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert body["reports"][0]["suite"] == "listlab"
    assert body["reports"][0]["seed"] == 3


def test_check_unknown_suite(client):
    assert client.post("/api/check", json={"suite": "octal"}).status_code == 400


def test_deep_eval(client):
    deep = "S(" * 19000 + "Z" + ")" * 19000
    response = client.post("/api/numerals/eval", json={"kind": "unary", "op": "plus", "literals": ["Z", deep]})
    assert response.status_code == 200
    assert response.json()["result"] == deep


def test_recursion_past_limit_is_422(client):
    deep = "S(" * 25000 + "Z" + ")" * 25000
    response = client.post("/api/numerals/eval", json={"kind": "unary", "op": "plus", "literals": ["Z", deep]})
    assert response.status_code == 422
    assert response.json()["detail"].startswith("Erro: recursão")
    assert client.get("/api/bench/u_plus", params={"sizes": "25000"}).status_code == 422
