import pytest
from fastapi.testclient import TestClient

from main import app


@pytest.fixture(scope="module")
def client() -> TestClient:
    return TestClient(app)


def test_partitions(client):
    response = client.get("/v1/partitions/3")
    assert response.status_code == 200
    assert response.json() == {"degree": 3, "count": 3, "partitions": [[3], [2, 1], [1, 1, 1]]}


def test_degree_limit(client):
    response = client.get("/v1/probability/100")
    assert response.status_code == 400
    assert response.json()["error"] == "BAD_REQUEST"


def test_ssyt(client):
    response = client.get("/v1/ssyt", params={"shape": "[2,1]", "max_entry": 3})
    assert response.json()["count"] == 8
    assert "content" not in response.json()
    assert client.get("/v1/ssyt", params={"shape": "[2,1]"}).status_code == 400


def test_kostka(client):
    response = client.get("/v1/kostka", params={"shape": "[2,1]", "content": "[1,1,1]"})
    assert response.json()["value"] == 2
    matrix = client.get("/v1/kostka/matrix/3").json()
    assert matrix["matrix"] == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]


def test_schur_expand(client):
    assert client.get("/v1/schur/2,1/expand").json()["text"] == "m[2,1] + 2*m[1,1,1]"
    expansion = client.get("/v1/schur/2,1/expand", params={"variables": 3}).json()
    assert expansion["n_vars"] == 3
    assert len(expansion["terms"]) == 7


def test_expressions(client):
    response = client.post("/v1/expressions/positivity", json={"expression": "m[2,1]"})
    assert response.status_code == 200
    data = response.json()
    assert data["positive"] is False
    assert data["schur_expansion"]["text"] == "s[2,1] - 2*s[1,1,1]"
    response = client.post("/v1/expressions/to-schur", json={"expression": "m[2,1] + 2*m[1,1,1]"})
    assert response.json()["text"] == "s[2,1]"


def test_parse_errors_are_422(client):
    response = client.post("/v1/expressions/positivity", json={"expression": "m[2,1"})
    assert response.status_code == 422
    assert response.json()["status"] == 422
    assert response.json()["position"] is not None


def test_domain_errors_are_400(client):
    response = client.get("/v1/probability/0")
    assert response.status_code == 400
    assert response.json()["status"] == 400
    response = client.get("/v1/bialternant", params={"partition": "[2,1]", "x": "1,1,2"})
    assert response.status_code == 400


def test_bialternant_and_characters(client):
    data = client.get("/v1/bialternant", params={"partition": "[2,1]", "x": "1,2,3"}).json()
    assert (data["value"], data["numerator"], data["vandermonde"]) == ("60", "-120", "-2")
    assert client.get("/v1/characters/sym2", params={"matrix": "1,1,0,1"}).json()["value"] == "3"
    schur = client.get("/v1/characters/schur", params={"partition": "[1,1,1]", "eigenvalues": "1,2,3"}).json()
    assert schur["value"] == "6"
    assert "matrix" not in schur


def test_cone(client):
    assert client.get("/v1/probability/4").json()["probability"] == "1/560"
    data = client.get("/v1/slice/3").json()
    assert (data["ratio"], data["monomial_slice_volume"], data["schur_slice_volume"]) == ("1/9", "1/2", "1/18")
    report = client.get("/v1/sample/3", params={"samples": 5000, "seed": 7}).json()
    assert report["samples"] == 5000
    assert client.get("/v1/sample/3", params={"samples": 10 ** 8}).status_code == 400
