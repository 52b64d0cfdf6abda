"""Performance scores as weighted scalar products under weight profiles.

A score is ``sum(values[i] * weight(feature_i))`` over the catalogue, raw
and unnormalized, so scaling every weight by a positive constant scales
every score by the same constant and never reorders players. Profiles are
immutable values; edits create new versions, and score tables are cached
per (profile hash, dataset fingerprint) so slider-driven recomputes stay
cheap and consistent under concurrent readers.
"""

from __future__ import annotations

import hashlib
import json
import math
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import ArgumentError, ConflictError, NotFoundError, ValidationError
from .features import (
    XG_FEATURE,
    FeatureCatalogue,
    FeatureVector,
    vector_from_events,
)
from .model import Dataset
from .roles import Role, ZoneMap, default_zone_map, role_for_pair

DEFAULT_PROFILE_ID = "default"


@dataclass(frozen=True)
class WeightProfile:
    """Named assignment of a signed weight to each feature.

    The ``goals`` weight is always present (the dedicated goal slider has
    its own coordinate). Treat ``weights`` as read-only.
    """

    profile_id: str
    name: str
    weights: dict[str, float]
    created_at: str

    @cached_property
    def weights_hash(self) -> str:
        payload = json.dumps(sorted(self.weights.items())).encode()
        return hashlib.sha256(payload).hexdigest()

    def to_record(self) -> dict:
        return {
            "profile_id": self.profile_id,
            "name": self.name,
            "created_at": self.created_at,
            "weights": dict(self.weights),
        }


def _normalize_weights(weights: dict, catalogue: FeatureCatalogue) -> dict[str, float]:
    normalized: dict[str, float] = {}
    for name, value in weights.items():
        if name not in catalogue:
            raise ValidationError(f"unknown feature {name!r}", "weights")
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise ValidationError(f"weight for {name!r} is not a finite number", "weights")
        normalized[name] = float(value)
    normalized.setdefault("goals", 0.0)
    return normalized


def make_profile(
    profile_id: str,
    name: str,
    weights: dict,
    catalogue: FeatureCatalogue,
    created_at: str | None = None,
) -> WeightProfile:
    if not name or not str(name).strip():
        raise ValidationError("profile name is empty", "name")
    return WeightProfile(
        profile_id=profile_id,
        name=str(name),
        weights=_normalize_weights(weights, catalogue),
        created_at=created_at or _now_iso(),
    )


def default_profile(catalogue: FeatureCatalogue, created_at: str | None = None) -> WeightProfile:
    """Shipped starting point: reward accurate actions, punish mistakes.

    +1 per accurate action, -1 per inaccurate one, goals +5, yellow cards
    -2, red cards -5, xg +3 when the dataset carries it; neutral pairs 0.
    """
    weights: dict[str, float] = {}
    for feature in catalogue:
        if feature == "goals":
            weights[feature] = 5.0
        elif feature == "yellow_cards":
            weights[feature] = -2.0
        elif feature == "red_cards":
            weights[feature] = -5.0
        elif feature == XG_FEATURE:
            weights[feature] = 3.0
        elif feature.endswith(":accurate"):
            weights[feature] = 1.0
        elif feature.endswith(":inaccurate"):
            weights[feature] = -1.0
        else:
            weights[feature] = 0.0
    return WeightProfile(
        profile_id=DEFAULT_PROFILE_ID,
        name="default",
        weights=weights,
        created_at=created_at or _now_iso(),
    )


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def weight_vector(profile: WeightProfile, catalogue: FeatureCatalogue) -> np.ndarray:
    """Profile weights aligned with the catalogue; absent features weigh 0."""
    return np.array([profile.weights.get(name, 0.0) for name in catalogue], dtype=float)


def compute_score(
    fv: FeatureVector, profile: WeightProfile, catalogue: FeatureCatalogue
) -> float:
    if len(fv.values) != len(catalogue):
        raise ArgumentError(
            f"feature vector length {len(fv.values)} misaligned with catalogue "
            f"length {len(catalogue)}"
        )
    return float(np.dot(fv.values, weight_vector(profile, catalogue)))


@dataclass(frozen=True, slots=True)
class PerformanceRecord:
    player_id: str
    match_id: str
    role: Role
    score: float


def score_all(
    dataset: Dataset,
    catalogue: FeatureCatalogue,
    profile: WeightProfile,
    zone_map: ZoneMap | None = None,
) -> list[PerformanceRecord]:
    """One record per (player, match) pair with events.

    Deterministic order: player_id, then match date, then match_id.
    """
    zone_map = zone_map or default_zone_map()
    weights = weight_vector(profile, catalogue)
    pairs = sorted(
        dataset.events_by_pair,
        key=lambda pm: (pm[0], dataset.match(pm[1]).order_key),
    )
    records = []
    for player_id, match_id in pairs:
        events = dataset.events_by_pair[(player_id, match_id)]
        fv = vector_from_events(events, catalogue, player_id, match_id)
        role = role_for_pair(dataset, zone_map, player_id, match_id)
        records.append(
            PerformanceRecord(
                player_id=player_id,
                match_id=match_id,
                role=role,
                score=float(np.dot(fv.values, weights)),
            )
        )
    return records


def rank_records(records) -> list[PerformanceRecord]:
    """Score-descending order with the documented deterministic tie-break."""
    return sorted(records, key=lambda r: (-r.score, r.player_id, r.match_id))


def playerank_mean(records, role: Role | None = None) -> float:
    """Arithmetic mean of scores, optionally within one role."""
    scores = [r.score for r in records if role is None or r.role == role]
    if not scores:
        raise NotFoundError("no records after role filter")
    return sum(scores) / len(scores)


# --- distribution summaries -------------------------------------------------


@dataclass(frozen=True)
class BoxplotStats:
    """Five-number summary plus Tukey whiskers and outliers for one role."""

    role: Role
    n: int
    min: float
    q1: float
    median: float
    q3: float
    max: float
    whisker_lo: float
    whisker_hi: float
    outliers: tuple[float, ...]

    def to_record(self) -> dict:
        return {
            "role": self.role.value,
            "n": self.n,
            "min": self.min,
            "q1": self.q1,
            "median": self.median,
            "q3": self.q3,
            "max": self.max,
            "whisker_lo": self.whisker_lo,
            "whisker_hi": self.whisker_hi,
            "outliers": list(self.outliers),
        }


def quantile_linear(sorted_values: list[float], p: float) -> float:
    """Linear-interpolation quantile at position ``p * (n - 1)``."""
    n = len(sorted_values)
    pos = p * (n - 1)
    lo = int(pos)
    frac = pos - lo
    if frac == 0.0:
        return sorted_values[lo]
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo])


def boxplot_from_values(values, role: Role) -> BoxplotStats:
    xs = sorted(float(v) for v in values)
    if not xs:
        raise NotFoundError(f"no scores for role {role.value}")
    q1 = quantile_linear(xs, 0.25)
    median = quantile_linear(xs, 0.5)
    q3 = quantile_linear(xs, 0.75)
    iqr = q3 - q1
    fence_lo = q1 - 1.5 * iqr
    fence_hi = q3 + 1.5 * iqr
    inside = [x for x in xs if fence_lo <= x <= fence_hi]
    # whiskers reach the most extreme points inside the fences; if the data
    # inside the fences sits entirely past a quartile, clamp to that quartile
    # so min <= whisker_lo <= q1 <= median <= q3 <= whisker_hi <= max holds
    whisker_lo = inside[0] if inside and inside[0] <= q1 else q1
    whisker_hi = inside[-1] if inside and inside[-1] >= q3 else q3
    outliers = tuple(x for x in xs if x < fence_lo or x > fence_hi)
    return BoxplotStats(
        role=role,
        n=len(xs),
        min=xs[0],
        q1=q1,
        median=median,
        q3=q3,
        max=xs[-1],
        whisker_lo=whisker_lo,
        whisker_hi=whisker_hi,
        outliers=outliers,
    )


def score_distribution(records, role: Role) -> BoxplotStats:
    scores = [r.score for r in records if r.role == role]
    if not scores:
        raise NotFoundError(f"no scores for role {role.value}")
    return boxplot_from_values(scores, role)


# --- profile registry and score cache ---------------------------------------


class ProfileRegistry:
    """Immutable profiles behind a serialized-write, concurrent-read map.

    The shipped default profile is derived from the active catalogue at
    startup and never persisted; created profiles are appended to
    ``profiles.json`` (when a path is configured) via atomic rewrite.
    """

    def __init__(self, catalogue: FeatureCatalogue, persist_path: str | Path | None = None):
        self._catalogue = catalogue
        self._persist_path = Path(persist_path) if persist_path else None
        self._lock = threading.Lock()
        self._profiles: dict[str, WeightProfile] = {}
        self._seq = 0
        base = default_profile(catalogue)
        self._profiles[base.profile_id] = base
        if self._persist_path and self._persist_path.exists():
            self._load(self._persist_path)

    def _load(self, path: Path) -> None:
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle)
        if not isinstance(raw, list):
            raise ValidationError("profiles.json must be a JSON list", str(path))
        for i, record in enumerate(raw):
            locator = f"{path.name}[{i}]"
            try:
                profile = make_profile(
                    profile_id=str(record["profile_id"]),
                    name=str(record["name"]),
                    weights=record["weights"],
                    catalogue=self._catalogue,
                    created_at=str(record.get("created_at") or _now_iso()),
                )
            except (KeyError, TypeError):
                raise ValidationError("malformed profile record", locator) from None
            if profile.profile_id in self._profiles:
                raise ValidationError(
                    f"duplicate profile_id {profile.profile_id}", locator
                )
            self._profiles[profile.profile_id] = profile
            self._seq += 1

    def get(self, profile_id: str) -> WeightProfile:
        profile = self._profiles.get(profile_id)
        if profile is None:
            raise NotFoundError(f"unknown profile {profile_id!r}")
        return profile

    def list(self) -> list[WeightProfile]:
        return list(self._profiles.values())

    def create(self, name: str, weights: dict) -> WeightProfile:
        with self._lock:
            if any(p.name == name for p in self._profiles.values()):
                raise ConflictError(f"profile name {name!r} already exists")
            self._seq += 1
            profile = make_profile(
                profile_id=f"wp{self._seq:04d}",
                name=name,
                weights=weights,
                catalogue=self._catalogue,
            )
            self._profiles[profile.profile_id] = profile
            if self._persist_path:
                self._persist()
            return profile

    def _persist(self) -> None:
        records = [
            p.to_record()
            for p in self._profiles.values()
            if p.profile_id != DEFAULT_PROFILE_ID
        ]
        tmp = self._persist_path.with_suffix(".tmp")
        tmp.write_text(json.dumps(records, indent=2) + "\n", encoding="utf-8")
        tmp.replace(self._persist_path)


@dataclass(frozen=True, eq=False)
class ScoreTable:
    """All performance records for one (dataset, profile) pair."""

    profile: WeightProfile
    records: tuple[PerformanceRecord, ...]

    @cached_property
    def by_player(self) -> dict[str, tuple[PerformanceRecord, ...]]:
        grouped: dict[str, list[PerformanceRecord]] = {}
        for r in self.records:
            grouped.setdefault(r.player_id, []).append(r)
        return {k: tuple(v) for k, v in grouped.items()}

    @cached_property
    def by_player_role(self) -> dict[tuple[str, Role], tuple[PerformanceRecord, ...]]:
        grouped: dict[tuple[str, Role], list[PerformanceRecord]] = {}
        for r in self.records:
            grouped.setdefault((r.player_id, r.role), []).append(r)
        return {k: tuple(v) for k, v in grouped.items()}

    @cached_property
    def roles_present(self) -> tuple[Role, ...]:
        seen = {r.role for r in self.records}
        return tuple(role for role in Role if role in seen)


class ScoreCache:
    """Score tables keyed by (profile hash, dataset fingerprint).

    Population is idempotent under races: the first writer wins and
    later computations are discarded in favour of the cached table.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._tables: dict[tuple[str, str], ScoreTable] = {}

    def table(
        self,
        dataset: Dataset,
        catalogue: FeatureCatalogue,
        profile: WeightProfile,
        zone_map: ZoneMap | None = None,
    ) -> ScoreTable:
        key = (profile.weights_hash, dataset.fingerprint)
        cached = self._tables.get(key)
        if cached is not None:
            return cached
        computed = ScoreTable(
            profile=profile,
            records=tuple(score_all(dataset, catalogue, profile, zone_map)),
        )
        with self._lock:
            return self._tables.setdefault(key, computed)
