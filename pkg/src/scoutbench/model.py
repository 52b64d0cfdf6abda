"""Canonical domain types and their validation invariants.

Everything downstream (ingest, features, roles, scoring, analytics, api)
consumes these types and relies on the guarantees enforced here:

* pitch coordinates are normalized to [0, 100] x [0, 100], attacking
  left -> right, so zone geometry is orientation-free;
* a ``goal`` event always has outcome ``accurate``;
* ``(match_id, event_id)`` is unique within a dataset;
* every event resolves to a known player and match;
* ages are computed against one dataset-level ``reference_date``.

A :class:`Dataset` is immutable after construction and therefore safe to
share across threads without locking.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from datetime import date
from functools import cached_property

from .errors import ValidationError

EVENT_TYPES = (
    "pass",
    "shot",
    "goal",
    "duel",
    "foul",
    "card",
    "interception",
    "clearance",
    "cross",
    "dribble",
    "save",
    "other",
)

OUTCOMES = ("accurate", "inaccurate", "neutral")

PERIODS = ("H1", "H2", "E1", "E2", "P")

PREFERRED_FEET = ("left", "right", "both")

MAX_CLOCK_S = 3600.0

XG_TAG_PREFIX = "xg:"


@dataclass(frozen=True, slots=True)
class PitchPosition:
    """A point on the normalized pitch.

    ``x`` runs 0 -> 100 toward the opponent goal; ``y`` runs 0 -> 100 from
    the left touchline (attacking perspective).
    """

    x: float
    y: float

    def validate(self, locator: str) -> None:
        for axis, v in (("x", self.x), ("y", self.y)):
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ValidationError(f"position {axis} is not a number", locator)
            if not (0.0 <= float(v) <= 100.0):
                raise ValidationError(
                    f"position out of range: {axis}={v} not in [0, 100]", locator
                )


@dataclass(frozen=True, slots=True)
class MatchEvent:
    """One on-pitch action.

    ``tags`` refine the typed taxonomy with free-form markers such as
    ``yellow_card``, ``red_card``, ``assist``; a tag of the form
    ``xg:<float>`` carries a pass-through expected-goals value.
    """

    event_id: str
    match_id: str
    player_id: str
    team_id: str
    event_type: str
    outcome: str
    tags: frozenset[str]
    period: str
    clock_s: float
    position: PitchPosition

    def validate(self, locator: str) -> None:
        if self.event_type not in EVENT_TYPES:
            raise ValidationError(f"unknown event_type {self.event_type!r}", locator)
        if self.outcome not in OUTCOMES:
            raise ValidationError(f"unknown outcome {self.outcome!r}", locator)
        if self.event_type == "goal" and self.outcome != "accurate":
            raise ValidationError("goal events must have outcome 'accurate'", locator)
        if self.period not in PERIODS:
            raise ValidationError(f"unknown period {self.period!r}", locator)
        if not isinstance(self.clock_s, (int, float)) or isinstance(self.clock_s, bool):
            raise ValidationError("clock_s is not a number", locator)
        if not (0.0 <= float(self.clock_s) <= MAX_CLOCK_S):
            raise ValidationError(
                f"clock_s={self.clock_s} not in [0, {MAX_CLOCK_S:.0f}]", locator
            )
        self.position.validate(locator)
        for tag in self.tags:
            if tag.startswith(XG_TAG_PREFIX):
                raw = tag[len(XG_TAG_PREFIX):]
                try:
                    value = float(raw)
                except ValueError:
                    raise ValidationError(f"malformed xg tag {tag!r}", locator) from None
                if value != value or value in (float("inf"), float("-inf")):
                    raise ValidationError(f"non-finite xg tag {tag!r}", locator)

    def xg_value(self) -> float | None:
        """Summed value of any ``xg:<float>`` tags, or None if untagged."""
        total = None
        for tag in self.tags:
            if tag.startswith(XG_TAG_PREFIX):
                total = (total or 0.0) + float(tag[len(XG_TAG_PREFIX):])
        return total


@dataclass(frozen=True, slots=True)
class Player:
    player_id: str
    name: str
    birth_date: date
    preferred_foot: str | None = None

    def validate(self, locator: str) -> None:
        if not self.name or not self.name.strip():
            raise ValidationError("player name is empty", locator)
        if self.preferred_foot is not None and self.preferred_foot not in PREFERRED_FEET:
            raise ValidationError(
                f"unknown preferred_foot {self.preferred_foot!r}", locator
            )


@dataclass(frozen=True, slots=True)
class Match:
    match_id: str
    date: date
    home_team: str
    away_team: str
    competition: str
    season: str

    def validate(self, locator: str) -> None:
        if self.home_team == self.away_team:
            raise ValidationError("home_team equals away_team", locator)

    @property
    def order_key(self) -> tuple[date, str]:
        """Total order over matches: by date, ties broken by match_id."""
        return (self.date, self.match_id)


@dataclass(frozen=True)
class Dataset:
    """An immutable, fully cross-referenced collection of match data.

    Construct through :meth:`build`, which validates every invariant and
    raises :class:`ValidationError` naming the first offending record.
    """

    players: tuple[Player, ...]
    matches: tuple[Match, ...]
    events: tuple[MatchEvent, ...]
    reference_date: date
    _players_by_id: dict[str, Player] = field(repr=False, compare=False, default_factory=dict)
    _matches_by_id: dict[str, Match] = field(repr=False, compare=False, default_factory=dict)

    @classmethod
    def build(
        cls,
        players: list[Player] | tuple[Player, ...],
        matches: list[Match] | tuple[Match, ...],
        events: list[MatchEvent] | tuple[MatchEvent, ...],
        reference_date: date | None = None,
    ) -> "Dataset":
        players_by_id: dict[str, Player] = {}
        for i, p in enumerate(players):
            p.validate(f"players[{i}] player_id={p.player_id}")
            if p.player_id in players_by_id:
                raise ValidationError(
                    f"duplicate player_id {p.player_id}", f"players[{i}]"
                )
            players_by_id[p.player_id] = p

        matches_by_id: dict[str, Match] = {}
        for i, m in enumerate(matches):
            m.validate(f"matches[{i}] match_id={m.match_id}")
            if m.match_id in matches_by_id:
                raise ValidationError(f"duplicate match_id {m.match_id}", f"matches[{i}]")
            matches_by_id[m.match_id] = m

        seen_event_keys: set[tuple[str, str]] = set()
        for i, e in enumerate(events):
            locator = f"events[{i}] event_id={e.event_id}"
            e.validate(locator)
            key = (e.match_id, e.event_id)
            if key in seen_event_keys:
                raise ValidationError(
                    f"duplicate (match_id, event_id) = {key}", locator
                )
            seen_event_keys.add(key)
            if e.player_id not in players_by_id:
                raise ValidationError(f"unknown player_id {e.player_id}", locator)
            if e.match_id not in matches_by_id:
                raise ValidationError(f"unknown match_id {e.match_id}", locator)
            match = matches_by_id[e.match_id]
            player = players_by_id[e.player_id]
            if player.birth_date >= match.date:
                raise ValidationError(
                    f"player {player.player_id} born {player.birth_date} on/after "
                    f"match date {match.date}",
                    locator,
                )

        if reference_date is None:
            if not matches_by_id:
                raise ValidationError("cannot infer reference_date: no matches")
            reference_date = max(m.date for m in matches_by_id.values())
        else:
            latest = max((m.date for m in matches_by_id.values()), default=None)
            if latest is not None and reference_date < latest:
                raise ValidationError(
                    f"reference_date {reference_date} earlier than latest match {latest}"
                )

        return cls(
            players=tuple(players),
            matches=tuple(matches),
            events=tuple(events),
            reference_date=reference_date,
            _players_by_id=players_by_id,
            _matches_by_id=matches_by_id,
        )

    def player(self, player_id: str) -> Player | None:
        return self._players_by_id.get(player_id)

    def match(self, match_id: str) -> Match | None:
        return self._matches_by_id.get(match_id)

    @cached_property
    def events_by_pair(self) -> dict[tuple[str, str], tuple[MatchEvent, ...]]:
        """Events grouped by (player_id, match_id), original order kept."""
        grouped: dict[tuple[str, str], list[MatchEvent]] = {}
        for e in self.events:
            grouped.setdefault((e.player_id, e.match_id), []).append(e)
        return {k: tuple(v) for k, v in grouped.items()}

    @cached_property
    def matches_by_player(self) -> dict[str, tuple[Match, ...]]:
        """Matches a player has events in, ascending by (date, match_id)."""
        ids: dict[str, set[str]] = {}
        for pid, mid in self.events_by_pair:
            ids.setdefault(pid, set()).add(mid)
        return {
            pid: tuple(
                sorted((self._matches_by_id[m] for m in mids), key=lambda m: m.order_key)
            )
            for pid, mids in ids.items()
        }

    @cached_property
    def fingerprint(self) -> str:
        """Content hash; keys score caches together with a profile hash."""
        h = hashlib.sha256()
        for p in self.players:
            h.update(repr((p.player_id, p.name, p.birth_date.isoformat(), p.preferred_foot)).encode())
        for m in self.matches:
            h.update(repr((m.match_id, m.date.isoformat(), m.home_team, m.away_team, m.competition, m.season)).encode())
        for e in self.events:
            h.update(
                repr(
                    (e.event_id, e.match_id, e.player_id, e.team_id, e.event_type,
                     e.outcome, tuple(sorted(e.tags)), e.period, e.clock_s,
                     e.position.x, e.position.y)
                ).encode()
            )
        h.update(self.reference_date.isoformat().encode())
        return h.hexdigest()


def age_of(player: Player, reference_date: date) -> int:
    """Completed years between birth date and the reference date.

    Raises :class:`ValidationError` when the birth date is not strictly
    before the reference date.
    """
    b = player.birth_date
    if b >= reference_date:
        raise ValidationError(
            f"birth_date {b} not before reference_date {reference_date}",
            f"player_id={player.player_id}",
        )
    years = reference_date.year - b.year
    if (reference_date.month, reference_date.day) < (b.month, b.day):
        years -= 1
    return years
