"""Parse newline-delimited JSON match data into a Dataset, and back.

Input is three UTF-8 ``.jsonl`` files (``events.jsonl``, ``players.jsonl``,
``matches.jsonl``), one record per line, field names exactly matching the
domain types. Malformed records are rejected per-record with a reason and
never fail the whole parse; unknown fields are ignored. Parsing then
re-serializing then re-parsing yields an identical Dataset.

Also hosts the seeded synthetic fixture generator used by tests and the
``fixture`` CLI subcommand.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from datetime import date, timedelta
from pathlib import Path

from .errors import ArgumentError, EmptyDatasetError, ValidationError
from .model import Dataset, Match, MatchEvent, PitchPosition, Player
from .roles import Role, zone_rect

EVENTS_FILE = "events.jsonl"
PLAYERS_FILE = "players.jsonl"
MATCHES_FILE = "matches.jsonl"


@dataclass
class IngestReport:
    """Per-parse accounting: every read record is accepted or rejected."""

    records_read: int = 0
    records_accepted: int = 0
    rejects: list[tuple[str, str]] = field(default_factory=list)

    @property
    def records_rejected(self) -> int:
        return len(self.rejects)

    def reject(self, locator: str, reason: str) -> None:
        self.rejects.append((locator, reason))


def _as_id(raw: object, name: str, locator: str) -> str:
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise ValidationError(f"{name} must be a string or integer id", locator)
    value = str(raw)
    if not value:
        raise ValidationError(f"{name} is empty", locator)
    return value


def _require(record: dict, name: str, locator: str) -> object:
    if name not in record:
        raise ValidationError(f"missing required field {name!r}", locator)
    return record[name]


def _as_date(raw: object, name: str, locator: str) -> date:
    if not isinstance(raw, str):
        raise ValidationError(f"{name} must be an ISO date string", locator)
    try:
        return date.fromisoformat(raw)
    except ValueError:
        raise ValidationError(f"{name} {raw!r} is not a valid ISO date", locator) from None


def _parse_player(record: dict, locator: str) -> Player:
    player = Player(
        player_id=_as_id(_require(record, "player_id", locator), "player_id", locator),
        name=str(_require(record, "name", locator)),
        birth_date=_as_date(_require(record, "birth_date", locator), "birth_date", locator),
        preferred_foot=record.get("preferred_foot"),
    )
    player.validate(locator)
    return player


def _parse_match(record: dict, locator: str) -> Match:
    match = Match(
        match_id=_as_id(_require(record, "match_id", locator), "match_id", locator),
        date=_as_date(_require(record, "date", locator), "date", locator),
        home_team=_as_id(_require(record, "home_team", locator), "home_team", locator),
        away_team=_as_id(_require(record, "away_team", locator), "away_team", locator),
        competition=str(_require(record, "competition", locator)),
        season=str(_require(record, "season", locator)),
    )
    match.validate(locator)
    return match


def _parse_event(record: dict, locator: str) -> MatchEvent:
    raw_pos = _require(record, "position", locator)
    if not isinstance(raw_pos, dict) or "x" not in raw_pos or "y" not in raw_pos:
        raise ValidationError("position must be an object with x and y", locator)
    raw_tags = _require(record, "tags", locator)
    if not isinstance(raw_tags, list) or not all(isinstance(t, str) for t in raw_tags):
        raise ValidationError("tags must be a list of strings", locator)
    raw_clock = _require(record, "clock_s", locator)
    event = MatchEvent(
        event_id=_as_id(_require(record, "event_id", locator), "event_id", locator),
        match_id=_as_id(_require(record, "match_id", locator), "match_id", locator),
        player_id=_as_id(_require(record, "player_id", locator), "player_id", locator),
        team_id=_as_id(_require(record, "team_id", locator), "team_id", locator),
        event_type=str(_require(record, "event_type", locator)),
        outcome=str(_require(record, "outcome", locator)),
        tags=frozenset(raw_tags),
        period=str(_require(record, "period", locator)),
        clock_s=float(raw_clock) if isinstance(raw_clock, (int, float)) and not isinstance(raw_clock, bool) else raw_clock,
        position=PitchPosition(x=raw_pos["x"], y=raw_pos["y"]),
    )
    event.validate(locator)
    return event


def _parse_lines(path: str | Path, parser, report: IngestReport) -> list:
    """Parse one jsonl file; blank lines are skipped, bad records rejected."""
    accepted = []
    name = Path(path).name
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            report.records_read += 1
            locator = f"{name}:{lineno}"
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                report.reject(locator, f"invalid JSON: {exc.msg}")
                continue
            if not isinstance(record, dict):
                report.reject(locator, "record is not a JSON object")
                continue
            try:
                accepted.append((locator, parser(record, locator)))
            except ValidationError as exc:
                report.reject(locator, exc.reason)
    return accepted


def parse_dataset(
    events_source: str | Path,
    players_source: str | Path,
    matches_source: str | Path,
) -> tuple[Dataset, IngestReport]:
    """Parse and cross-validate the three sources into a Dataset.

    Raises :class:`EmptyDatasetError` when zero events survive; I/O
    failures propagate as ``OSError``.
    """
    report = IngestReport()

    players: list[Player] = []
    players_by_id: dict[str, Player] = {}
    for locator, player in _parse_lines(players_source, _parse_player, report):
        if player.player_id in players_by_id:
            report.reject(locator, f"duplicate player_id {player.player_id}")
            continue
        players_by_id[player.player_id] = player
        players.append(player)
        report.records_accepted += 1

    matches: list[Match] = []
    matches_by_id: dict[str, Match] = {}
    for locator, match in _parse_lines(matches_source, _parse_match, report):
        if match.match_id in matches_by_id:
            report.reject(locator, f"duplicate match_id {match.match_id}")
            continue
        matches_by_id[match.match_id] = match
        matches.append(match)
        report.records_accepted += 1

    # Join phase: cross-reference rejects are per-event, never fail-fast.
    events: list[MatchEvent] = []
    seen_keys: set[tuple[str, str]] = set()
    for locator, event in _parse_lines(events_source, _parse_event, report):
        key = (event.match_id, event.event_id)
        if key in seen_keys:
            report.reject(locator, f"duplicate (match_id, event_id) = {key}")
            continue
        if event.player_id not in players_by_id:
            report.reject(locator, f"unknown player_id {event.player_id}")
            continue
        if event.match_id not in matches_by_id:
            report.reject(locator, f"unknown match_id {event.match_id}")
            continue
        match = matches_by_id[event.match_id]
        player = players_by_id[event.player_id]
        if player.birth_date >= match.date:
            report.reject(
                locator,
                f"player {player.player_id} born {player.birth_date} on/after match date {match.date}",
            )
            continue
        seen_keys.add(key)
        events.append(event)
        report.records_accepted += 1

    if not events:
        raise EmptyDatasetError(
            f"no events accepted ({report.records_read} records read, "
            f"{report.records_rejected} rejected)"
        )

    dataset = Dataset.build(players, matches, events)
    return dataset, report


def load_data_dir(data_dir: str | Path) -> tuple[Dataset, IngestReport]:
    """Parse the conventional three files inside ``data_dir``."""
    root = Path(data_dir)
    return parse_dataset(
        root / EVENTS_FILE, root / PLAYERS_FILE, root / MATCHES_FILE
    )


def player_to_record(p: Player) -> dict:
    record = {
        "player_id": p.player_id,
        "name": p.name,
        "birth_date": p.birth_date.isoformat(),
    }
    if p.preferred_foot is not None:
        record["preferred_foot"] = p.preferred_foot
    return record


def match_to_record(m: Match) -> dict:
    return {
        "match_id": m.match_id,
        "date": m.date.isoformat(),
        "home_team": m.home_team,
        "away_team": m.away_team,
        "competition": m.competition,
        "season": m.season,
    }


def event_to_record(e: MatchEvent) -> dict:
    return {
        "event_id": e.event_id,
        "match_id": e.match_id,
        "player_id": e.player_id,
        "team_id": e.team_id,
        "event_type": e.event_type,
        "outcome": e.outcome,
        "tags": sorted(e.tags),
        "period": e.period,
        "clock_s": e.clock_s,
        "position": {"x": e.position.x, "y": e.position.y},
    }


def serialize_dataset(dataset: Dataset) -> dict[str, str]:
    """Render the dataset back to jsonl text, keyed by conventional filename."""

    def lines(records) -> str:
        return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)

    return {
        PLAYERS_FILE: lines(player_to_record(p) for p in dataset.players),
        MATCHES_FILE: lines(match_to_record(m) for m in dataset.matches),
        EVENTS_FILE: lines(event_to_record(e) for e in dataset.events),
    }


def write_dataset(dataset: Dataset, out_dir: str | Path) -> list[Path]:
    root = Path(out_dir)
    root.mkdir(parents=True, exist_ok=True)
    written = []
    for filename, text in serialize_dataset(dataset).items():
        target = root / filename
        target.write_text(text, encoding="utf-8")
        written.append(target)
    return written


# --- synthetic fixture generation -----------------------------------------

_SYLLABLES = (
    "an", "bel", "cor", "dan", "el", "fer", "gal", "hol", "iv", "jor",
    "kan", "lor", "mar", "nel", "os", "pet", "quin", "ros", "sal", "tor",
    "ul", "vas", "wil", "yan", "zor",
)

_SEASON_START = date(2018, 8, 18)

# archetype event-type mixes per pitch band; (event_type, weight)
_EVENT_MIX = {
    "GK": (("pass", 50), ("save", 25), ("clearance", 15), ("duel", 5), ("foul", 3), ("other", 2)),
    "DF": (("pass", 54), ("duel", 12), ("interception", 9), ("clearance", 8),
           ("foul", 5), ("cross", 4), ("dribble", 4), ("shot", 4)),
    "MF": (("pass", 58), ("dribble", 9), ("cross", 7), ("duel", 8),
           ("interception", 5), ("shot", 7), ("foul", 5), ("other", 1)),
    "FW": (("pass", 40), ("shot", 24), ("dribble", 13), ("duel", 9),
           ("cross", 6), ("foul", 5), ("other", 3)),
}

_GOAL_CONVERSION = {"GK": 0.03, "DF": 0.05, "MF": 0.10, "FW": 0.17}

_NEUTRAL_TYPES = {"foul", "card", "other"}

_ROLE_CYCLE = (
    Role.GK, Role.LEFT_CB, Role.CENTRAL_CB, Role.RIGHT_CB, Role.LEFT_MF,
    Role.CENTRAL_MF, Role.RIGHT_MF, Role.LEFT_FW, Role.CENTRAL_FW, Role.RIGHT_FW,
)

_DUAL_SIDES = ("central", "left", "right")


def _band_of(role: Role) -> str:
    if role is Role.GK:
        return "GK"
    return {"CB": "DF", "MF": "MF", "FW": "FW"}[role.value.rsplit("_", 1)[1]]


def _unique_name(rng: random.Random, used: set[str]) -> str:
    while True:
        first = "".join(rng.choice(_SYLLABLES) for _ in range(rng.randint(1, 2))).capitalize()
        last = "".join(rng.choice(_SYLLABLES) for _ in range(rng.randint(2, 3))).capitalize()
        name = f"{first} {last}"
        if name not in used:
            used.add(name)
            return name


def _zone_point(rng: random.Random, role: Role, anchor: tuple[float, float]) -> PitchPosition:
    """Gaussian around the player's anchor, clipped inside the role's zone.

    Clipping keeps every event (hence the mean position) inside the zone,
    which pins the assigned role by construction.
    """
    x_lo, x_hi, y_lo, y_hi = zone_rect(role)
    x = min(max(rng.gauss(anchor[0], 7.0), x_lo), x_hi - 0.01)
    y = min(max(rng.gauss(anchor[1], 7.0), y_lo), y_hi - 0.01)
    return PitchPosition(x=round(x, 2), y=round(y, 2))


def generate_synthetic(seed: int, n_players: int, n_matches: int) -> Dataset:
    """Deterministic synthetic dataset with plausible scouting structure.

    Players cycle through archetype home zones so every role occurs; every
    tenth player alternates between a midfield and a forward zone across
    matches (and is young and improving), so multi-role rows exist whenever
    ``n_matches >= 2``. Per-player accuracy drifts linearly across the
    season (improving / flat / declining archetypes) to give trend filters
    real signal.
    """
    if n_players < 2:
        raise ArgumentError(f"n_players must be >= 2, got {n_players}")
    if n_matches < 1:
        raise ArgumentError(f"n_matches must be >= 1, got {n_matches}")

    rng = random.Random(seed)

    matches = [
        Match(
            match_id=f"M{k + 1:03d}",
            date=_SEASON_START + timedelta(days=7 * k),
            home_team="T001" if k % 2 == 0 else "T002",
            away_team="T002" if k % 2 == 0 else "T001",
            competition="League One",
            season="2018/19",
        )
        for k in range(n_matches)
    ]
    last_match_date = matches[-1].date

    used_names: set[str] = set()
    players: list[Player] = []
    profiles: list[dict] = []
    for i in range(n_players):
        dual = i % 10 == 0
        if dual:
            side = _DUAL_SIDES[(i // 10) % len(_DUAL_SIDES)]
            zones = (Role(f"{side}_MF"), Role(f"{side}_FW"))
            age = 19 + (i // 10) % 2
            drift = 0.035
        else:
            # dual players occupy the i % 10 == 0 slots; offsetting the cycle
            # by the decade keeps all ten roles represented across players
            zones = (_ROLE_CYCLE[(i + i // 10) % 10],)
            age = 17 + (i * 5) % 18
            drift = (0.024, 0.0, -0.018)[i % 3]
        birth = date(last_match_date.year - age, last_match_date.month, 1)
        birth -= timedelta(days=(i * 13) % 280)
        anchors = []
        for zone in zones:
            x_lo, x_hi, y_lo, y_hi = zone_rect(zone)
            anchors.append(
                (rng.uniform(x_lo + 4, x_hi - 4), rng.uniform(y_lo + 4, y_hi - 4))
            )
        players.append(
            Player(
                player_id=f"P{i + 1:03d}",
                name=_unique_name(rng, used_names),
                birth_date=birth,
                preferred_foot=rng.choice(("left", "right", "right", "both")),
            )
        )
        profiles.append(
            {
                "zones": zones,
                "anchors": anchors,
                "team_id": "T001" if i < n_players / 2 else "T002",
                # dual-role prospects run hot so their per-role sub-series
                # keep positive means and trends at realistic noise levels
                "base_accuracy": (0.63 if dual else 0.55) + rng.uniform(-0.04, 0.04),
                "drift": drift,
            }
        )

    events: list[MatchEvent] = []
    counter = 0
    mid_season = (n_matches - 1) / 2.0
    for m_idx, match in enumerate(matches):
        for i, (player, prof) in enumerate(zip(players, profiles)):
            zone = prof["zones"][m_idx % len(prof["zones"])]
            anchor = prof["anchors"][m_idx % len(prof["anchors"])]
            band = _band_of(zone)
            p_accurate = min(max(prof["base_accuracy"] + prof["drift"] * (m_idx - mid_season), 0.05), 0.95)
            form = (m_idx - mid_season) / max(mid_season, 1.0)
            p_goal = _GOAL_CONVERSION[band]
            if prof["drift"] > 0:
                p_goal *= 1.0 + 0.8 * form
            elif prof["drift"] < 0:
                p_goal *= 1.0 - 0.5 * form
            mix_types = [t for t, _ in _EVENT_MIX[band]]
            mix_weights = [w for _, w in _EVENT_MIX[band]]

            for _ in range(rng.randint(20, 30)):
                counter += 1
                event_type = rng.choices(mix_types, weights=mix_weights, k=1)[0]
                tags: list[str] = []
                if rng.random() < 0.015:
                    event_type = "card"
                    tags.append("yellow_card" if rng.random() < 0.9 else "red_card")
                if event_type == "shot":
                    # dyadic xg values keep weighted sums exact in binary, so
                    # scaling a profile rescales scores without reordering ties
                    tags.append(f"xg:{rng.randint(2, 41) / 64.0}")
                    if rng.random() < p_goal:
                        event_type = "goal"
                if event_type == "goal":
                    outcome = "accurate"
                elif event_type in _NEUTRAL_TYPES:
                    outcome = "neutral"
                else:
                    outcome = "accurate" if rng.random() < p_accurate else "inaccurate"
                period = "H1" if rng.random() < 0.5 else "H2"
                events.append(
                    MatchEvent(
                        event_id=f"E{counter:06d}",
                        match_id=match.match_id,
                        player_id=player.player_id,
                        team_id=prof["team_id"],
                        event_type=event_type,
                        outcome=outcome,
                        tags=frozenset(tags),
                        period=period,
                        clock_s=round(rng.uniform(0.0, 2700.0), 1),
                        position=_zone_point(rng, zone, anchor),
                    )
                )

    return Dataset.build(players, matches, events)
