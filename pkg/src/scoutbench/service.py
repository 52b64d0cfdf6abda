"""Composition root: one loaded dataset plus everything derived from it.

Holds the catalogue, zone map, profile registry, score cache, memoized
scouting rows per profile, and the occupancy index. All derived state is
computed once and thereafter read-only, so a single instance can back any
number of concurrent API requests.
"""

from __future__ import annotations

import threading
from pathlib import Path

from . import analytics
from .analytics import (
    DEFAULT_LAMBDA,
    OccupancyIndex,
    PlayerRoleRow,
    QueryFilter,
    ScoreSeries,
    build_rows,
    sort_rows,
)
from .features import FeatureCatalogue, build_catalogue
from .ingest import IngestReport, load_data_dir
from .model import Dataset
from .roles import ZoneMap, default_zone_map, load_zone_map
from .scoring import (
    DEFAULT_PROFILE_ID,
    ProfileRegistry,
    ScoreCache,
    ScoreTable,
    WeightProfile,
)

ZONES_FILE = "zones.json"
PROFILES_FILE = "profiles.json"


class AnalyticsService:
    def __init__(
        self,
        dataset: Dataset,
        zone_map: ZoneMap | None = None,
        registry: ProfileRegistry | None = None,
        lam: float = DEFAULT_LAMBDA,
    ):
        self.dataset = dataset
        self.zone_map = zone_map or default_zone_map()
        self.catalogue: FeatureCatalogue = build_catalogue(dataset)
        self.registry = registry or ProfileRegistry(self.catalogue)
        self.lam = lam
        self._scores = ScoreCache()
        self._rows_lock = threading.Lock()
        self._rows: dict[str, tuple[PlayerRoleRow, ...]] = {}
        self._occupancy_lock = threading.Lock()
        self._occupancy: OccupancyIndex | None = None

    @classmethod
    def from_data_dir(cls, data_dir: str | Path) -> tuple["AnalyticsService", IngestReport]:
        """Load a conventional data directory.

        Picks up optional ``zones.json`` and ``profiles.json`` next to the
        three jsonl files.
        """
        root = Path(data_dir)
        dataset, report = load_data_dir(root)
        zones_path = root / ZONES_FILE
        zone_map = load_zone_map(zones_path) if zones_path.exists() else None
        catalogue = build_catalogue(dataset)
        registry = ProfileRegistry(catalogue, persist_path=root / PROFILES_FILE)
        return cls(dataset, zone_map=zone_map, registry=registry), report

    def profile(self, profile_id: str = DEFAULT_PROFILE_ID) -> WeightProfile:
        return self.registry.get(profile_id)

    def table(self, profile_id: str = DEFAULT_PROFILE_ID) -> ScoreTable:
        profile = self.registry.get(profile_id)
        return self._scores.table(self.dataset, self.catalogue, profile, self.zone_map)

    def rows(self, profile_id: str = DEFAULT_PROFILE_ID) -> tuple[PlayerRoleRow, ...]:
        profile = self.registry.get(profile_id)
        cached = self._rows.get(profile.weights_hash)
        if cached is not None:
            return cached
        computed = build_rows(self.dataset, self.table(profile_id), self.lam)
        with self._rows_lock:
            return self._rows.setdefault(profile.weights_hash, computed)

    def query(
        self,
        flt: QueryFilter | None = None,
        sort_keys=analytics.DEFAULT_SORT,
        profile_id: str = DEFAULT_PROFILE_ID,
    ) -> list[PlayerRoleRow]:
        flt = flt or QueryFilter()
        flt.validate()
        rows = self.rows(profile_id)
        return sort_rows([row for row in rows if flt.matches(row)], sort_keys)

    def series(
        self, player_id: str, profile_id: str = DEFAULT_PROFILE_ID, role=None
    ) -> ScoreSeries:
        return analytics.build_series(
            self.dataset, self.table(profile_id).records, player_id, role
        )

    def occupancy_index(self) -> OccupancyIndex:
        if self._occupancy is None:
            with self._occupancy_lock:
                if self._occupancy is None:
                    self._occupancy = OccupancyIndex.build(self.dataset)
        return self._occupancy

    def similar(self, player_id: str, k: int) -> list[tuple[str, float]]:
        return self.occupancy_index().similar(player_id, k)
