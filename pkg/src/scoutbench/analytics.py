"""Trends, spatial similarity, and the filter/sort engine behind the table.

Two trend estimators over a player's score series (indexed 0..n-1 by
match order):

* ``trend_long``: ordinary least squares slope, all matches weighted
  equally;
* ``trend_short``: weighted least squares slope with exponential recency
  weights ``lam ** (n - 1 - i)`` (most recent match weighs 1); at
  ``lam == 1`` it coincides with ``trend_long``.

``trend_percentage`` turns the long slope into the percent change implied
over the observed span, relative to the mean score:
``100 * slope * (n - 1) / mean``. It is undefined for fewer than two
matches or a non-positive mean.

Similarity is spatial: cosine similarity between L1-normalized event
histograms over a 12x8 pitch grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date
from functools import cmp_to_key

import numpy as np

from .errors import ArgumentError, NotFoundError, UndefinedTrendError, ValidationError
from .model import Dataset, age_of
from .roles import Role
from .scoring import PerformanceRecord, ScoreTable, playerank_mean

GRID_X = 12
GRID_Y = 8

DEFAULT_LAMBDA = 0.8


@dataclass(frozen=True, slots=True)
class SeriesPoint:
    date: date
    match_id: str
    score: float


@dataclass(frozen=True)
class ScoreSeries:
    """A player's scores in match order (ascending date, then match_id)."""

    player_id: str
    role: Role | None
    points: tuple[SeriesPoint, ...]

    def __post_init__(self):
        if not self.points:
            raise ValidationError("score series is empty", f"player {self.player_id}")
        keys = [(p.date, p.match_id) for p in self.points]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValidationError(
                "score series not strictly ordered by (date, match_id)",
                f"player {self.player_id}",
            )

    @property
    def scores(self) -> list[float]:
        return [p.score for p in self.points]

    def __len__(self) -> int:
        return len(self.points)


def build_series(
    dataset: Dataset,
    records,
    player_id: str,
    role: Role | None = None,
) -> ScoreSeries:
    points = [
        SeriesPoint(date=dataset.match(r.match_id).date, match_id=r.match_id, score=r.score)
        for r in records
        if r.player_id == player_id and (role is None or r.role == role)
    ]
    if not points:
        raise NotFoundError(
            f"no scored matches for player {player_id}"
            + (f" in role {role.value}" if role else "")
        )
    points.sort(key=lambda p: (p.date, p.match_id))
    return ScoreSeries(player_id=player_id, role=role, points=tuple(points))


def _weighted_fit(scores: list[float], weights: list[float]) -> tuple[float, float]:
    """Weighted least squares line over index 0..n-1 -> (slope, intercept)."""
    if min(scores) == max(scores):
        return 0.0, scores[0]
    x = np.arange(len(scores), dtype=float)
    y = np.asarray(scores, dtype=float)
    w = np.asarray(weights, dtype=float)
    wsum = w.sum()
    x_bar = float((w * x).sum() / wsum)
    y_bar = float((w * y).sum() / wsum)
    denom = float((w * (x - x_bar) ** 2).sum())
    slope = float((w * (x - x_bar) * (y - y_bar)).sum() / denom)
    return slope, y_bar - slope * x_bar


def trend_long(series: ScoreSeries) -> float:
    """OLS slope of scores against match index, equal weights."""
    if len(series) < 2:
        raise UndefinedTrendError(f"need >= 2 matches, got {len(series)}")
    return _weighted_fit(series.scores, [1.0] * len(series))[0]


def trend_short(series: ScoreSeries, lam: float = DEFAULT_LAMBDA) -> float:
    """Recency-weighted slope; weight of match i is ``lam ** (n - 1 - i)``."""
    if not (0.0 < lam <= 1.0):
        raise ArgumentError(f"lambda must be in (0, 1], got {lam}")
    n = len(series)
    if n < 2:
        raise UndefinedTrendError(f"need >= 2 matches, got {n}")
    return _weighted_fit(series.scores, [lam ** (n - 1 - i) for i in range(n)])[0]


def trend_fit(series: ScoreSeries, kind: str = "long", lam: float = DEFAULT_LAMBDA) -> tuple[float, float]:
    """(slope, intercept) of the requested trend line, for drawing."""
    n = len(series)
    if n < 2:
        raise UndefinedTrendError(f"need >= 2 matches, got {n}")
    if kind == "long":
        return _weighted_fit(series.scores, [1.0] * n)
    if kind == "short":
        if not (0.0 < lam <= 1.0):
            raise ArgumentError(f"lambda must be in (0, 1], got {lam}")
        return _weighted_fit(series.scores, [lam ** (n - 1 - i) for i in range(n)])
    raise ArgumentError(f"unknown trend kind {kind!r}")


def trend_percentage(series: ScoreSeries) -> float:
    """Percent change implied over the span, relative to the mean score."""
    if len(series) < 2:
        raise UndefinedTrendError(f"need >= 2 matches, got {len(series)}")
    mean = sum(series.scores) / len(series)
    if mean <= 0.0:
        raise UndefinedTrendError(f"mean score {mean} is not positive")
    return 100.0 * trend_long(series) * (len(series) - 1) / mean


@dataclass(frozen=True, slots=True)
class TrendSummary:
    """Trend fields are None where undefined (n < 2, or mean <= 0 for pct)."""

    trend_long: float | None
    trend_short: float | None
    trend_percentage: float | None
    n_matches: int


def trend_summary(series: ScoreSeries, lam: float = DEFAULT_LAMBDA) -> TrendSummary:
    if len(series) < 2:
        return TrendSummary(None, None, None, len(series))
    long_slope = trend_long(series)
    short_slope = trend_short(series, lam)
    mean = sum(series.scores) / len(series)
    pct = 100.0 * long_slope * (len(series) - 1) / mean if mean > 0.0 else None
    return TrendSummary(long_slope, short_slope, pct, len(series))


# --- spatial occupancy and similarity ---------------------------------------


@dataclass(frozen=True, eq=False)
class OccupancyVector:
    """L1-normalized histogram of a player's event positions on the grid."""

    player_id: str
    values: np.ndarray  # length GRID_X * GRID_Y, cell (cx, cy) at cx * GRID_Y + cy


def grid_cell(x: float, y: float) -> tuple[int, int]:
    cx = min(int(math.floor(x / 100.0 * GRID_X)), GRID_X - 1)
    cy = min(int(math.floor(y / 100.0 * GRID_Y)), GRID_Y - 1)
    return cx, cy


def occupancy_vector(dataset: Dataset, player_id: str) -> OccupancyVector:
    events = [e for e in dataset.events if e.player_id == player_id]
    if not events:
        raise NotFoundError(f"player {player_id} has no events")
    values = np.zeros(GRID_X * GRID_Y, dtype=float)
    for e in events:
        cx, cy = grid_cell(e.position.x, e.position.y)
        values[cx * GRID_Y + cy] += 1.0
    return OccupancyVector(player_id=player_id, values=values / values.sum())


def cosine_similarity(a: OccupancyVector, b: OccupancyVector) -> float:
    norm = float(np.linalg.norm(a.values) * np.linalg.norm(b.values))
    return float(np.dot(a.values, b.values) / norm)


class OccupancyIndex:
    """Occupancy vectors for every player with events, built once per dataset."""

    def __init__(self, vectors: dict[str, OccupancyVector]):
        self.vectors = vectors

    @classmethod
    def build(cls, dataset: Dataset) -> "OccupancyIndex":
        counts: dict[str, np.ndarray] = {}
        for e in dataset.events:
            values = counts.get(e.player_id)
            if values is None:
                values = counts.setdefault(e.player_id, np.zeros(GRID_X * GRID_Y, dtype=float))
            cx, cy = grid_cell(e.position.x, e.position.y)
            values[cx * GRID_Y + cy] += 1.0
        return cls(
            {
                pid: OccupancyVector(player_id=pid, values=v / v.sum())
                for pid, v in counts.items()
            }
        )

    def similar(self, player_id: str, k: int) -> list[tuple[str, float]]:
        if k < 1:
            raise ArgumentError(f"k must be >= 1, got {k}")
        query = self.vectors.get(player_id)
        if query is None:
            raise NotFoundError(f"player {player_id} has no occupancy vector")
        scored = [
            (pid, cosine_similarity(query, vec))
            for pid, vec in self.vectors.items()
            if pid != player_id
        ]
        scored.sort(key=lambda item: (-item[1], item[0]))
        return scored[:k]


def similar_players(dataset: Dataset, player_id: str, k: int) -> list[tuple[str, float]]:
    """Top-k other players by cosine similarity of occupancy vectors."""
    return OccupancyIndex.build(dataset).similar(player_id, k)


# --- the scouting query engine ----------------------------------------------


@dataclass(frozen=True, slots=True)
class PlayerRoleRow:
    """One scouting-table row: a (player, role) pair with its aggregates."""

    player_id: str
    name: str
    age: int
    role: Role
    n_matches: int
    playerank_mean: float
    trend_percentage: float | None
    trend_long: float | None
    trend_short: float | None


def row_to_record(row: PlayerRoleRow) -> dict:
    return {
        "player_id": row.player_id,
        "name": row.name,
        "age": row.age,
        "role": row.role.value,
        "n_matches": row.n_matches,
        "playerank_mean": row.playerank_mean,
        "trend_percentage": row.trend_percentage,
        "trend_long": row.trend_long,
        "trend_short": row.trend_short,
    }


@dataclass(frozen=True)
class QueryFilter:
    """Conjunctive filters for the players table; None means inactive."""

    name_substring: str | None = None
    roles: frozenset[Role] | None = None
    age_min: int | None = None
    age_max: int | None = None
    trend_min: float | None = None
    trend_max: float | None = None
    min_matches: int | None = None

    def validate(self) -> None:
        if (
            self.age_min is not None
            and self.age_max is not None
            and self.age_min > self.age_max
        ):
            raise ArgumentError(f"age range [{self.age_min}, {self.age_max}] is empty")
        if (
            self.trend_min is not None
            and self.trend_max is not None
            and self.trend_min > self.trend_max
        ):
            raise ArgumentError(
                f"trend range [{self.trend_min}, {self.trend_max}] is empty"
            )

    @property
    def trend_active(self) -> bool:
        return self.trend_min is not None or self.trend_max is not None

    def matches(self, row: PlayerRoleRow) -> bool:
        if self.name_substring and self.name_substring.lower() not in row.name.lower():
            return False
        if self.roles is not None and row.role not in self.roles:
            return False
        if self.age_min is not None and row.age < self.age_min:
            return False
        if self.age_max is not None and row.age > self.age_max:
            return False
        if self.min_matches is not None and row.n_matches < self.min_matches:
            return False
        if self.trend_active:
            # rows with no defined trend only drop out when trend is filtered
            if row.trend_percentage is None:
                return False
            if self.trend_min is not None and row.trend_percentage < self.trend_min:
                return False
            if self.trend_max is not None and row.trend_percentage > self.trend_max:
                return False
        return True


SORT_FIELDS = {
    "trend_pct": "trend_percentage",
    "trend_long": "trend_long",
    "trend_short": "trend_short",
    "age": "age",
    "mean": "playerank_mean",
    "matches": "n_matches",
    "name": "name",
    "player_id": "player_id",
    "role": "role",
}

DEFAULT_SORT: tuple[tuple[str, bool], ...] = (
    ("trend_pct", True),
    ("age", False),
    ("mean", True),
)


def parse_sort(spec: str) -> tuple[tuple[str, bool], ...]:
    """Parse ``"trend_pct:desc,age:asc,mean:desc"`` into sort keys."""
    keys = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        field, _, direction = part.partition(":")
        if field not in SORT_FIELDS:
            raise ArgumentError(f"unknown sort key {field!r}")
        if direction not in ("", "asc", "desc"):
            raise ArgumentError(f"unknown sort direction {direction!r}")
        keys.append((field, direction == "desc"))
    if not keys:
        raise ArgumentError(f"empty sort specification {spec!r}")
    return tuple(keys)


def _sort_value(row: PlayerRoleRow, field: str):
    value = getattr(row, SORT_FIELDS[field])
    if isinstance(value, Role):
        return value.value
    return value


def sort_rows(
    rows, sort_keys: tuple[tuple[str, bool], ...] = DEFAULT_SORT
) -> list[PlayerRoleRow]:
    """Multi-key sort; undefined (None) values sort last under any key,
    regardless of direction; final tie-break is (player_id, role)."""

    def compare(a: PlayerRoleRow, b: PlayerRoleRow) -> int:
        for field, desc in sort_keys:
            va = _sort_value(a, field)
            vb = _sort_value(b, field)
            if va is None and vb is None:
                continue
            if va is None:
                return 1
            if vb is None:
                return -1
            if va == vb:
                continue
            less = -1 if va < vb else 1
            return -less if desc else less
        ka = (a.player_id, a.role.value)
        kb = (b.player_id, b.role.value)
        return -1 if ka < kb else (1 if ka > kb else 0)

    return sorted(rows, key=cmp_to_key(compare))


def build_rows(
    dataset: Dataset, table: ScoreTable, lam: float = DEFAULT_LAMBDA
) -> tuple[PlayerRoleRow, ...]:
    """Materialize one row per (player, role) with at least one match."""
    rows = []
    for (player_id, role), records in table.by_player_role.items():
        player = dataset.player(player_id)
        series = build_series(dataset, records, player_id, role)
        summary = trend_summary(series, lam)
        rows.append(
            PlayerRoleRow(
                player_id=player_id,
                name=player.name,
                age=age_of(player, dataset.reference_date),
                role=role,
                n_matches=len(records),
                playerank_mean=playerank_mean(records),
                trend_percentage=summary.trend_percentage,
                trend_long=summary.trend_long,
                trend_short=summary.trend_short,
            )
        )
    rows.sort(key=lambda r: (r.player_id, r.role.value))
    return tuple(rows)


def query_players(
    dataset: Dataset,
    records,
    flt: QueryFilter | None = None,
    sort_keys: tuple[tuple[str, bool], ...] = DEFAULT_SORT,
    lam: float = DEFAULT_LAMBDA,
) -> list[PlayerRoleRow]:
    """Filter and sort the materialized (player, role) rows."""
    if isinstance(records, ScoreTable):
        table = records
    else:
        table = ScoreTable(profile=None, records=tuple(records))
    flt = flt or QueryFilter()
    flt.validate()
    rows = build_rows(dataset, table, lam)
    return sort_rows([row for row in rows if flt.matches(row)], sort_keys)
