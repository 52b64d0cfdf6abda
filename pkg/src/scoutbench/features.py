"""Per-(player, match) feature vectors over a fixed, ordered catalogue.

Feature names are ``"<event_type>:<outcome>"`` for every pair that occurs
in the dataset, sorted lexicographically, followed by the distinguished
names ``goals``, ``yellow_cards``, ``red_cards`` (always present), and
finally ``xg`` when the source carries ``xg:<float>`` tags.

Goals are counted twice on purpose: once in their event pair and once in
the distinguished ``goals`` coordinate, so the dedicated goal weight acts
on its own axis. Card features read the ``yellow_card`` / ``red_card``
tags, not the ``card`` event type.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NotFoundError
from .model import Dataset, MatchEvent

DISTINGUISHED = ("goals", "yellow_cards", "red_cards")
XG_FEATURE = "xg"


@dataclass(frozen=True)
class FeatureCatalogue:
    """Ordered feature names; the order is stable for a given dataset."""

    names: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self.index

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}


@dataclass(frozen=True, eq=False)
class FeatureVector:
    """Counts (plus summed xg) for one player in one match."""

    player_id: str
    match_id: str
    values: np.ndarray

    def as_dict(self, catalogue: FeatureCatalogue) -> dict[str, float]:
        return {name: float(v) for name, v in zip(catalogue.names, self.values)}


def pair_name(event: MatchEvent) -> str:
    return f"{event.event_type}:{event.outcome}"


def build_catalogue(dataset: Dataset) -> FeatureCatalogue:
    """Catalogue for a dataset: its event pairs plus the distinguished names."""
    pairs = sorted({pair_name(e) for e in dataset.events})
    names = [*pairs, *DISTINGUISHED]
    if any(e.xg_value() is not None for e in dataset.events):
        names.append(XG_FEATURE)
    return FeatureCatalogue(names=tuple(names))


def vector_from_events(
    events: tuple[MatchEvent, ...], catalogue: FeatureCatalogue, player_id: str, match_id: str
) -> FeatureVector:
    values = np.zeros(len(catalogue), dtype=float)
    index = catalogue.index
    for e in events:
        i = index.get(pair_name(e))
        if i is not None:
            values[i] += 1.0
        if e.event_type == "goal":
            values[index["goals"]] += 1.0
        if "yellow_card" in e.tags:
            values[index["yellow_cards"]] += 1.0
        if "red_card" in e.tags:
            values[index["red_cards"]] += 1.0
        xg = e.xg_value()
        if xg is not None and XG_FEATURE in index:
            values[index[XG_FEATURE]] += xg
    return FeatureVector(player_id=player_id, match_id=match_id, values=values)


def extract_features(
    dataset: Dataset, catalogue: FeatureCatalogue, player_id: str, match_id: str
) -> FeatureVector:
    """Aggregate one player's events in one match into a vector.

    Raises :class:`NotFoundError` when the player has no events in the
    match (no vector exists for the pair).
    """
    events = dataset.events_by_pair.get((player_id, match_id))
    if not events:
        raise NotFoundError(f"no events for player {player_id} in match {match_id}")
    return vector_from_events(events, catalogue, player_id, match_id)
