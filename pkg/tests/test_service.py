import json
from importlib.resources import files

import jsonschema
import pytest
from fastapi.testclient import TestClient

from ontosearch.service import create_app


@pytest.fixture(scope="module")
def client(engine):
    return TestClient(create_app(engine))


def load_schema(name):
    return json.loads((files("ontosearch") / "schemas" / name).read_text())


class TestHealth:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}


class TestSearchEndpoint:
    def test_golden_query_schema(self, client):
        response = client.get(
            "/api/search", params={"q": "list the teaching staff in anna university"}
        )
        assert response.status_code == 200
        payload = response.json()
        jsonschema.validate(payload, load_schema("search_response.schema.json"))
        expanded = {
            e["lemma"] for exps in payload["expansions"]["terms"].values() for e in exps
        }
        assert {"faculty", "staff", "employee", "people"} <= expanded

    def test_results_in_rank_order(self, client):
        payload = client.get(
            "/api/search", params={"q": "fees and hostel in anna university"}
        ).json()
        ranks = [r["rank"] for r in payload["results"]]
        assert ranks == sorted(ranks)

    def test_empty_query_is_400(self, client):
        assert client.get("/api/search", params={"q": ""}).status_code == 400
        assert client.get("/api/search").status_code == 400

    def test_k_validation(self, client):
        assert client.get("/api/search", params={"q": "x", "k": 0}).status_code == 422

    def test_repeat_requests_identical(self, client):
        q = {"q": "colleges for doing M.B.A"}
        first = client.get("/api/search", params=q).json()["results"]
        second = client.get("/api/search", params=q).json()["results"]
        assert first == second


class TestExpandEndpoint:
    def test_expand_schema(self, client):
        response = client.get(
            "/api/expand", params={"q": "Provide the Faculties in Computer Science Department Anna University"}
        )
        assert response.status_code == 200
        payload = response.json()
        jsonschema.validate(payload, load_schema("expand_response.schema.json"))
        assert payload["queries"][0]["prior"] == 1.0

    def test_empty_query_400(self, client):
        assert client.get("/api/expand", params={"q": " "}).status_code == 400


class TestCors:
    def test_cors_header_present(self, client):
        response = client.get(
            "/health", headers={"Origin": "http://localhost:5173"}
        )
        assert response.headers.get("access-control-allow-origin") == "*"


SAMPLE_QUERIES = [
    "colleges for doing M.B.A",
    "teaching staff in computer science department in Anna university",
    "professors with more number of publications in IIT in department IT",
    "last date to apply for M.S in Stanford university",
    "financial aid offered for summer internships in UK",
    "Deadline for payment of fees for M.B.A course in sastra university",
    "Associations formed for students in California university",
    "Provide me the details of the chairman of board of committee members",
    "Research areas in IIT where foreign collaborations exists",
    "Details about the facilities available in research institutions of delhi university",
    "Provide me the information about the correspondence students of MIT",
    "Road maps to visit the campus of Stanford university",
    "Information regarding the universities in abroad which provides internship in accounting",
    "Procedure to apply online for M.S in U.S university",
    "How far is tagore university located from anna nagar",
    "What are colleges located near by tambaram for doing regular M.E course",
]


class TestFixtureQuerySweep:
    def test_all_sample_queries_validate(self, client):
        schema = load_schema("search_response.schema.json")
        for query in SAMPLE_QUERIES:
            response = client.get("/api/search", params={"q": query})
            assert response.status_code == 200, query
            jsonschema.validate(response.json(), schema)


class TestStaticUi:
    def test_static_mount_serves_index(self, engine, tmp_path):
        (tmp_path / "index.html").write_text("<!DOCTYPE html><title>ui</title>")
        client = TestClient(create_app(engine, static_dir=tmp_path))
        response = client.get("/")
        assert response.status_code == 200
        assert "ui" in response.text
