from __future__ import annotations

import concurrent.futures

import jsonschema
import pytest
from fastapi.testclient import TestClient

from scoutbench.api import build_app, load_schemas, parse_bind
from scoutbench.errors import ArgumentError
from scoutbench.service import AnalyticsService

SCHEMAS = load_schemas()


def schema_for(name: str) -> dict:
    return {**SCHEMAS["endpoints"][name], "$defs": SCHEMAS["$defs"]}


def check(payload: dict, endpoint: str) -> dict:
    jsonschema.validate(payload, schema_for(endpoint))
    return payload


@pytest.fixture(scope="module")
def service(fixture_dataset):
    return AnalyticsService(fixture_dataset)


@pytest.fixture(scope="module")
def client(service):
    return TestClient(build_app(service))


class TestHealthAndErrors:
    def test_health(self, client, fixture_dataset):
        resp = client.get("/api/health")
        assert resp.status_code == 200
        body = check(resp.json(), "health")
        assert body["players"] == len(fixture_dataset.players)
        assert body["matches"] == len(fixture_dataset.matches)

    def test_unknown_path_is_api_error(self, client):
        resp = client.get("/api/definitely-not-here")
        assert resp.status_code == 404
        body = check(resp.json(), "error")
        assert body["code"] == "not-found"

    def test_unknown_player_404(self, client):
        resp = client.get("/api/players/P404")
        assert resp.status_code == 404
        check(resp.json(), "error")

    def test_malformed_param_400(self, client):
        resp = client.get("/api/players?age_max=banana")
        assert resp.status_code == 400
        assert check(resp.json(), "error")["code"] == "bad-parameter"

    def test_invalid_range_400(self, client):
        resp = client.get("/api/players?age_min=30&age_max=20")
        assert resp.status_code == 400
        assert check(resp.json(), "error")["code"] == "bad-argument"

    def test_unknown_profile_404(self, client):
        resp = client.get("/api/players?profile=ghost")
        assert resp.status_code == 404


class TestPlayersQuery:
    def test_default_listing(self, client):
        body = check(client.get("/api/players").json(), "players")
        assert body["total"] >= len(body["rows"]) > 0

    def test_name_like_case_insensitive(self, client, fixture_dataset):
        target = fixture_dataset.players[2]
        sub = target.name[1:4]
        body = check(client.get(f"/api/players?name_like={sub.upper()}").json(), "players")
        assert any(r["player_id"] == target.player_id for r in body["rows"])
        assert all(sub.lower() in r["name"].lower() for r in body["rows"])

    def test_role_filter(self, client):
        body = check(client.get("/api/players?role=central_FW").json(), "players")
        assert body["rows"]
        assert all(r["role"] == "central_FW" for r in body["rows"])

    def test_scout_query_params(self, client):
        url = (
            "/api/players?age_max=21&trend_min=0&min_matches=3"
            "&sort=trend_pct:desc,age:asc,mean:desc"
        )
        body = check(client.get(url).json(), "players")
        assert all(r["age"] <= 21 for r in body["rows"])
        assert all(r["trend_percentage"] >= 0 for r in body["rows"])
        pcts = [r["trend_percentage"] for r in body["rows"]]
        assert pcts == sorted(pcts, reverse=True)

    def test_pagination_disjoint(self, client):
        first = check(client.get("/api/players?limit=10&offset=0").json(), "players")
        second = check(client.get("/api/players?limit=10&offset=10").json(), "players")
        ids_first = {(r["player_id"], r["role"]) for r in first["rows"]}
        ids_second = {(r["player_id"], r["role"]) for r in second["rows"]}
        assert ids_first.isdisjoint(ids_second)
        assert first["total"] == second["total"]

    def test_byte_identical_repeat(self, client):
        url = "/api/players?age_max=21&trend_min=0&sort=trend_pct:desc"
        assert client.get(url).content == client.get(url).content


class TestPlayerEndpoints:
    def test_detail(self, client):
        body = check(client.get("/api/players/P001").json(), "player_detail")
        assert body["player_id"] == "P001"
        assert len(body["roles"]) == 2
        assert body["n_matches"] == 10

    def test_scores(self, client):
        body = check(client.get("/api/players/P001/scores").json(), "player_scores")
        assert len(body["rows"]) == 10
        dates = [r["date"] for r in body["rows"]]
        assert dates == sorted(dates)

    def test_trend_long(self, client):
        body = check(client.get("/api/players/P001/trend").json(), "player_trend")
        assert body["kind"] == "long"
        assert body["lambda"] is None
        assert body["slope"] is not None
        assert len(body["fitted"]) == len(body["series"]) == body["n_matches"]

    def test_trend_short_with_lambda(self, client):
        body = check(
            client.get("/api/players/P001/trend?kind=short&lambda=0.5").json(),
            "player_trend",
        )
        assert body["lambda"] == 0.5
        assert body["slope"] is not None

    def test_trend_role_filter(self, client):
        body = check(
            client.get("/api/players/P001/trend?role=central_FW").json(), "player_trend"
        )
        assert body["role"] == "central_FW"
        assert body["n_matches"] == 5

    def test_trend_bad_kind(self, client):
        resp = client.get("/api/players/P001/trend?kind=sideways")
        assert resp.status_code == 400

    def test_trend_bad_lambda(self, client):
        resp = client.get("/api/players/P001/trend?kind=short&lambda=0")
        assert resp.status_code == 400

    def test_similar(self, client):
        body = check(client.get("/api/players/P001/similar?k=5").json(), "player_similar")
        assert len(body["results"]) == 5
        sims = [r["similarity"] for r in body["results"]]
        assert sims == sorted(sims, reverse=True)
        assert all(r["player_id"] != "P001" for r in body["results"])


class TestRolesAndStats:
    def test_roles_zone_map(self, client):
        body = check(client.get("/api/roles").json(), "roles")
        assert len(body["roles"]) == 10
        assert sum(
            (z["x_hi"] - z["x_lo"]) * (z["y_hi"] - z["y_lo"]) for z in body["roles"]
        ) == pytest.approx(10000.0)

    def test_distribution_all_roles(self, client):
        body = check(client.get("/api/stats/score-distribution").json(), "score_distribution")
        assert body["profile"] == "default"
        assert len(body["stats"]) >= 2
        for s in body["stats"]:
            assert s["min"] <= s["whisker_lo"] <= s["q1"] <= s["median"]
            assert s["median"] <= s["q3"] <= s["whisker_hi"] <= s["max"]

    def test_distribution_single_role(self, client):
        body = check(
            client.get("/api/stats/score-distribution?role=central_FW").json(),
            "score_distribution",
        )
        assert [s["role"] for s in body["stats"]] == ["central_FW"]

    def test_distribution_unknown_role_value(self, client):
        resp = client.get("/api/stats/score-distribution?role=libero")
        assert resp.status_code == 400


class TestProfiles:
    def test_create_then_listed(self, client):
        created = client.post(
            "/api/profiles", json={"name": "goal-heavy", "weights": {"goals": 12.0}}
        )
        assert created.status_code == 201
        profile = check(created.json(), "profile_created")
        listing = check(client.get("/api/profiles").json(), "profiles")
        assert any(p["profile_id"] == profile["profile_id"] for p in listing["profiles"])

    def test_unknown_feature_rejected(self, client):
        resp = client.post(
            "/api/profiles", json={"name": "nope", "weights": {"flying_kick": 1.0}}
        )
        assert resp.status_code == 400
        assert check(resp.json(), "error")["code"] == "unknown-feature"

    def test_duplicate_name_conflict(self, client):
        assert (
            client.post("/api/profiles", json={"name": "dup", "weights": {"goals": 1.0}}).status_code
            == 201
        )
        resp = client.post("/api/profiles", json={"name": "dup", "weights": {"goals": 2.0}})
        assert resp.status_code == 409
        assert check(resp.json(), "error")["code"] == "duplicate-name"

    def test_concurrent_same_name_one_winner(self, fixture_dataset):
        service = AnalyticsService(fixture_dataset)
        client = TestClient(build_app(service))

        def create(_):
            return client.post(
                "/api/profiles", json={"name": "race", "weights": {"goals": 3.0}}
            ).status_code

        with concurrent.futures.ThreadPoolExecutor(max_workers=2) as pool:
            codes = sorted(pool.map(create, range(2)))
        assert codes == [201, 409]

    def test_malformed_body_400(self, client):
        resp = client.post("/api/profiles", json={"weights": {"goals": 1.0}})
        assert resp.status_code == 400

    def test_profile_changes_scores_consistently(self, client):
        created = client.post(
            "/api/profiles", json={"name": "goals-only", "weights": {"goals": 1.0}}
        ).json()
        pid = created["profile_id"]
        scores = client.get(f"/api/players/P019/scores?profile={pid}").json()
        # under a goals-only profile every score is a non-negative integer count
        assert all(r["score"] == int(r["score"]) and r["score"] >= 0 for r in scores["rows"])
        trend = client.get(f"/api/players/P019/trend?profile={pid}").json()
        assert [p["score"] for p in trend["series"]] == [r["score"] for r in scores["rows"]]


def test_parse_bind():
    assert parse_bind("127.0.0.1:9000") == ("127.0.0.1", 9000)
    with pytest.raises(ArgumentError):
        parse_bind("nonsense")
    with pytest.raises(ArgumentError):
        parse_bind("127.0.0.1:")
