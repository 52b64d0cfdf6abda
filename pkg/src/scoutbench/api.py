"""HTTP/JSON service over a loaded dataset.

Every read endpoint takes its parameters in the URL and answers with a
deterministic JSON body (same URL + same profile means byte-identical
bytes, so responses are safely cacheable). Profile creation is the only
mutation. All endpoints live under ``/api``; response shapes are pinned
by ``api_schemas.json`` next to this module.

Errors are uniform: ``{"status", "code", "message", "detail"?}`` with
4xx for caller faults and 5xx for server faults.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Any

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .analytics import (
    DEFAULT_LAMBDA,
    DEFAULT_SORT,
    QueryFilter,
    parse_sort,
    row_to_record,
    trend_fit,
    trend_summary,
)
from .errors import (
    ArgumentError,
    ConflictError,
    NotFoundError,
    ScoutError,
    UndefinedTrendError,
    ValidationError,
)
from .model import age_of
from .roles import Role, parse_role, roles_of_player
from .scoring import DEFAULT_PROFILE_ID, score_distribution
from .service import AnalyticsService


def load_schemas() -> dict:
    """The published response schemas, endpoint name -> JSON Schema."""
    text = resources.files("scoutbench").joinpath("api_schemas.json").read_text("utf-8")
    return json.loads(text)


def _error_body(status: int, code: str, message: str, detail: str | None = None) -> dict:
    body: dict[str, Any] = {"status": status, "code": code, "message": message}
    if detail is not None:
        body["detail"] = detail
    return body


def _error_response(status: int, code: str, message: str, detail: str | None = None) -> JSONResponse:
    return JSONResponse(_error_body(status, code, message, detail), status_code=status)


class ProfileDraft(BaseModel):
    name: str
    weights: dict[str, float]


def _parse_roles_param(raw: str | None) -> frozenset[Role] | None:
    if raw is None:
        return None
    return frozenset(parse_role(part) for part in raw.split(",") if part.strip())


def build_app(service: AnalyticsService) -> FastAPI:
    app = FastAPI(title="scoutbench", docs_url=None, redoc_url=None, openapi_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(NotFoundError)
    async def _not_found(request: Request, exc: NotFoundError):
        return _error_response(404, "not-found", str(exc))

    @app.exception_handler(ArgumentError)
    async def _bad_argument(request: Request, exc: ArgumentError):
        return _error_response(400, "bad-argument", str(exc))

    @app.exception_handler(ConflictError)
    async def _conflict(request: Request, exc: ConflictError):
        return _error_response(409, "duplicate-name", str(exc))

    @app.exception_handler(ValidationError)
    async def _invalid(request: Request, exc: ValidationError):
        code = "unknown-feature" if "unknown feature" in exc.reason else "invalid"
        return _error_response(400, code, exc.reason, detail=exc.locator)

    @app.exception_handler(UndefinedTrendError)
    async def _undefined_trend(request: Request, exc: UndefinedTrendError):
        return _error_response(404, "undefined-trend", str(exc))

    @app.exception_handler(ScoutError)
    async def _domain(request: Request, exc: ScoutError):
        return _error_response(400, "domain-error", str(exc))

    @app.exception_handler(StarletteHTTPException)
    async def _http(request: Request, exc: StarletteHTTPException):
        code = {404: "not-found", 405: "method-not-allowed"}.get(exc.status_code, "http-error")
        return _error_response(exc.status_code, code, str(exc.detail))

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        where = ".".join(str(p) for p in first.get("loc", ()))
        return _error_response(
            400, "bad-parameter", first.get("msg", "invalid request"), detail=where or None
        )

    @app.get("/api/health")
    def health():
        return {
            "status": "ok",
            "players": len(service.dataset.players),
            "matches": len(service.dataset.matches),
        }

    @app.get("/api/players")
    def players_query(
        name_like: str | None = None,
        role: str | None = None,
        age_min: int | None = None,
        age_max: int | None = None,
        trend_min: float | None = None,
        trend_max: float | None = None,
        min_matches: int | None = None,
        sort: str | None = None,
        profile: str = DEFAULT_PROFILE_ID,
        limit: int = Query(50, ge=0, le=1000),
        offset: int = Query(0, ge=0),
    ):
        flt = QueryFilter(
            name_substring=name_like,
            roles=_parse_roles_param(role),
            age_min=age_min,
            age_max=age_max,
            trend_min=trend_min,
            trend_max=trend_max,
            min_matches=min_matches,
        )
        sort_keys = parse_sort(sort) if sort else DEFAULT_SORT
        rows = service.query(flt, sort_keys, profile_id=profile)
        page = rows[offset : offset + limit]
        return {
            "rows": [row_to_record(r) for r in page],
            "total": len(rows),
            "limit": limit,
            "offset": offset,
        }

    @app.get("/api/players/{player_id}")
    def player_detail(player_id: str):
        player = service.dataset.player(player_id)
        if player is None:
            raise NotFoundError(f"unknown player {player_id!r}")
        role_counts = roles_of_player(service.dataset, service.zone_map, player_id)
        return {
            "player_id": player.player_id,
            "name": player.name,
            "age": age_of(player, service.dataset.reference_date),
            "birth_date": player.birth_date.isoformat(),
            "preferred_foot": player.preferred_foot,
            "n_matches": sum(count for _, count in role_counts),
            "roles": [
                {"role": role.value, "matches": count} for role, count in role_counts
            ],
        }

    @app.get("/api/players/{player_id}/scores")
    def player_scores(player_id: str, profile: str = DEFAULT_PROFILE_ID):
        if service.dataset.player(player_id) is None:
            raise NotFoundError(f"unknown player {player_id!r}")
        table = service.table(profile)
        rows = [
            {
                "match_id": r.match_id,
                "date": service.dataset.match(r.match_id).date.isoformat(),
                "role": r.role.value,
                "score": r.score,
            }
            for r in table.by_player.get(player_id, ())
        ]
        rows.sort(key=lambda r: (r["date"], r["match_id"]))
        return {"player_id": player_id, "profile": profile, "rows": rows}

    @app.get("/api/players/{player_id}/trend")
    def player_trend(
        player_id: str,
        kind: str = "long",
        lambda_: float = Query(DEFAULT_LAMBDA, alias="lambda"),
        role: str | None = None,
        profile: str = DEFAULT_PROFILE_ID,
    ):
        if kind not in ("long", "short"):
            raise ArgumentError(f"trend kind must be 'long' or 'short', got {kind!r}")
        if service.dataset.player(player_id) is None:
            raise NotFoundError(f"unknown player {player_id!r}")
        role_filter = parse_role(role) if role else None
        series = service.series(player_id, profile, role_filter)
        summary = trend_summary(series, lambda_ if kind == "short" else DEFAULT_LAMBDA)
        if len(series) >= 2:
            slope, intercept = trend_fit(series, kind, lambda_)
            fitted = [
                {
                    "match_id": p.match_id,
                    "date": p.date.isoformat(),
                    "value": intercept + slope * i,
                }
                for i, p in enumerate(series.points)
            ]
        else:
            # a single scored match draws as a point; the trend is undefined
            slope, intercept, fitted = None, None, []
        return {
            "player_id": player_id,
            "profile": profile,
            "role": role_filter.value if role_filter else None,
            "kind": kind,
            "lambda": lambda_ if kind == "short" else None,
            "n_matches": len(series),
            "slope": slope,
            "intercept": intercept,
            "trend_percentage": summary.trend_percentage,
            "series": [
                {"match_id": p.match_id, "date": p.date.isoformat(), "score": p.score}
                for p in series.points
            ],
            "fitted": fitted,
        }

    @app.get("/api/players/{player_id}/similar")
    def player_similar(player_id: str, k: int = Query(5, ge=1, le=100)):
        if service.dataset.player(player_id) is None:
            raise NotFoundError(f"unknown player {player_id!r}")
        results = service.similar(player_id, k)
        return {
            "player_id": player_id,
            "k": k,
            "results": [
                {
                    "player_id": pid,
                    "name": service.dataset.player(pid).name,
                    "similarity": sim,
                }
                for pid, sim in results
            ],
        }

    @app.get("/api/roles")
    def roles_map():
        return {
            "roles": [
                {
                    "role": rect.role.value,
                    "display_name": rect.role.display_name,
                    "x_lo": rect.x_lo,
                    "x_hi": rect.x_hi,
                    "y_lo": rect.y_lo,
                    "y_hi": rect.y_hi,
                }
                for rect in service.zone_map.rects
            ]
        }

    @app.get("/api/stats/score-distribution")
    def distribution(role: str | None = None, profile: str = DEFAULT_PROFILE_ID):
        table = service.table(profile)
        if role is not None:
            wanted = [parse_role(role)]
            if wanted[0] not in table.roles_present:
                raise NotFoundError(f"no scores for role {wanted[0].value}")
        else:
            wanted = list(table.roles_present)
        return {
            "profile": profile,
            "stats": [
                score_distribution(table.records, r).to_record() for r in wanted
            ],
        }

    @app.get("/api/profiles")
    def profiles_list():
        return {"profiles": [p.to_record() for p in service.registry.list()]}

    @app.post("/api/profiles", status_code=201)
    def profile_create(draft: ProfileDraft):
        profile = service.registry.create(draft.name, draft.weights)
        return profile.to_record()

    return app


def parse_bind(bind: str) -> tuple[str, int]:
    host, _, port = bind.rpartition(":")
    if not host or not port.isdigit():
        raise ArgumentError(f"bind address must look like HOST:PORT, got {bind!r}")
    return host, int(port)


def serve(service: AnalyticsService, bind: str = "127.0.0.1:8000", ui_dir: str | None = None) -> None:
    """Run the service until interrupted; raises OSError if the port is taken."""
    import socket

    import uvicorn

    host, port = parse_bind(bind)
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    finally:
        probe.close()

    app = build_app(service)
    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    uvicorn.run(app, host=host, port=port, log_level="info")
