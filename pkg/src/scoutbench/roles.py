"""Pitch roles from average event position over a rectangular zone map.

The default map splits the pitch into a goalkeeper strip plus a 3x3
outfield grid (defender / midfielder / forward bands crossed with left /
central / right lanes). Zone rectangles are half-open, ``[lo, hi)`` on
both axes, with upper edges closed at 100 so the map partitions the whole
``[0, 100] x [0, 100]`` square: every position gets exactly one role.

Roles are assigned per (player, match); a player may hold different roles
in different matches, which is what makes multi-role scouting rows exist.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import ArgumentError, NotFoundError, ValidationError
from .model import Dataset, PitchPosition


class Role(str, Enum):
    GK = "GK"
    LEFT_CB = "left_CB"
    CENTRAL_CB = "central_CB"
    RIGHT_CB = "right_CB"
    LEFT_MF = "left_MF"
    CENTRAL_MF = "central_MF"
    RIGHT_MF = "right_MF"
    LEFT_FW = "left_FW"
    CENTRAL_FW = "central_FW"
    RIGHT_FW = "right_FW"

    @property
    def display_name(self) -> str:
        return self.value.replace("_", " ")


ROLE_ORDER = tuple(Role)

# extra spellings accepted anywhere a role is typed (navbar search, CLI, API)
_ALIASES: dict[str, Role] = {}


def _register_aliases() -> None:
    long_band = {"CB": "central back", "MF": "midfielder", "FW": "forward"}
    for role in Role:
        forms = {role.value, role.display_name}
        if role is Role.GK:
            forms.update({"goalkeeper", "keeper", "gk"})
        else:
            side, band = role.value.split("_")
            forms.add(f"{side} {long_band[band]}")
            if band == "FW":
                forms.add(f"{side} striker")
        for form in forms:
            _ALIASES[" ".join(form.lower().replace("_", " ").split())] = role


_register_aliases()


def parse_role(text: str) -> Role:
    """Resolve free text ("central forward", "left_CB", ...) to a Role."""
    key = " ".join(str(text).lower().replace("_", " ").split())
    role = _ALIASES.get(key)
    if role is None:
        raise ArgumentError(f"unknown role {text!r}")
    return role


@dataclass(frozen=True, slots=True)
class ZoneRect:
    role: Role
    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float

    def contains(self, position: PitchPosition) -> bool:
        x_ok = self.x_lo <= position.x < self.x_hi or (
            self.x_hi == 100.0 and position.x == 100.0
        )
        y_ok = self.y_lo <= position.y < self.y_hi or (
            self.y_hi == 100.0 and position.y == 100.0
        )
        return x_ok and y_ok

    @property
    def area(self) -> float:
        return (self.x_hi - self.x_lo) * (self.y_hi - self.y_lo)


@dataclass(frozen=True)
class ZoneMap:
    rects: tuple[ZoneRect, ...]

    @classmethod
    def build(cls, rects: list[ZoneRect] | tuple[ZoneRect, ...]) -> "ZoneMap":
        """Validate that the rectangles partition the pitch exactly."""
        rects = tuple(rects)
        if not rects:
            raise ValidationError("zone map is empty")
        for i, r in enumerate(rects):
            locator = f"zone[{i}] role={r.role.value}"
            if not (0.0 <= r.x_lo < r.x_hi <= 100.0 and 0.0 <= r.y_lo < r.y_hi <= 100.0):
                raise ValidationError(
                    f"rectangle out of bounds or degenerate: "
                    f"[{r.x_lo},{r.x_hi})x[{r.y_lo},{r.y_hi})",
                    locator,
                )
        for i, a in enumerate(rects):
            for b in rects[i + 1:]:
                overlap_x = min(a.x_hi, b.x_hi) - max(a.x_lo, b.x_lo)
                overlap_y = min(a.y_hi, b.y_hi) - max(a.y_lo, b.y_lo)
                if overlap_x > 1e-9 and overlap_y > 1e-9:
                    raise ValidationError(
                        f"zones {a.role.value} and {b.role.value} overlap"
                    )
        total = sum(r.area for r in rects)
        if abs(total - 100.0 * 100.0) > 1e-6:
            raise ValidationError(
                f"zones cover area {total:.6f}, expected 10000 (gaps in the map)"
            )
        return cls(rects=rects)

    def assign(self, position: PitchPosition) -> Role:
        for rect in self.rects:
            if rect.contains(position):
                return rect.role
        raise ValidationError(  # unreachable for a validated partition
            f"no zone contains ({position.x}, {position.y})"
        )


_GK_X = 16.0
_DF_X = 40.0
_MF_X = 70.0
_LANES = ((0.0, 33.0, "left"), (33.0, 67.0, "central"), (67.0, 100.0, "right"))
_BANDS = ((_GK_X, _DF_X, "CB"), (_DF_X, _MF_X, "MF"), (_MF_X, 100.0, "FW"))

DEFAULT_ZONE_BOUNDS: dict[Role, tuple[float, float, float, float]] = {
    Role.GK: (0.0, _GK_X, 0.0, 100.0),
}
for _x_lo, _x_hi, _band in _BANDS:
    for _y_lo, _y_hi, _lane in _LANES:
        DEFAULT_ZONE_BOUNDS[Role(f"{_lane}_{_band}")] = (_x_lo, _x_hi, _y_lo, _y_hi)


def zone_rect(role: Role) -> tuple[float, float, float, float]:
    """Default-map bounds (x_lo, x_hi, y_lo, y_hi) for a role."""
    return DEFAULT_ZONE_BOUNDS[role]


def default_zone_map() -> ZoneMap:
    return ZoneMap.build(
        [ZoneRect(role, *bounds) for role, bounds in DEFAULT_ZONE_BOUNDS.items()]
    )


def load_zone_map(path: str | Path) -> ZoneMap:
    """Read a ``zones.json`` override: list of {role, x_lo, x_hi, y_lo, y_hi}."""
    with open(path, encoding="utf-8") as handle:
        raw = json.load(handle)
    if not isinstance(raw, list):
        raise ValidationError("zones.json must be a JSON list", str(path))
    rects = []
    for i, entry in enumerate(raw):
        locator = f"{Path(path).name}[{i}]"
        if not isinstance(entry, dict):
            raise ValidationError("zone entry must be an object", locator)
        try:
            rects.append(
                ZoneRect(
                    role=parse_role(entry["role"]),
                    x_lo=float(entry["x_lo"]),
                    x_hi=float(entry["x_hi"]),
                    y_lo=float(entry["y_lo"]),
                    y_hi=float(entry["y_hi"]),
                )
            )
        except KeyError as exc:
            raise ValidationError(f"missing field {exc.args[0]!r}", locator) from None
        except (TypeError, ValueError):
            raise ValidationError("zone bounds must be numbers", locator) from None
        except ArgumentError as exc:
            raise ValidationError(str(exc), locator) from None
    return ZoneMap.build(rects)


def average_position(dataset: Dataset, player_id: str, match_id: str) -> PitchPosition:
    """Arithmetic mean of the player's event positions in one match."""
    events = dataset.events_by_pair.get((player_id, match_id))
    if not events:
        raise NotFoundError(f"no events for player {player_id} in match {match_id}")
    n = len(events)
    return PitchPosition(
        x=sum(e.position.x for e in events) / n,
        y=sum(e.position.y for e in events) / n,
    )


def assign_role(zone_map: ZoneMap, position: PitchPosition) -> Role:
    return zone_map.assign(position)


def role_for_pair(dataset: Dataset, zone_map: ZoneMap, player_id: str, match_id: str) -> Role:
    return zone_map.assign(average_position(dataset, player_id, match_id))


def roles_of_player(
    dataset: Dataset, zone_map: ZoneMap, player_id: str
) -> list[tuple[Role, int]]:
    """Distinct roles across the player's matches with match counts.

    Counts sum to the number of matches the player has events in; entries
    come back in fixed Role order for determinism.
    """
    if dataset.player(player_id) is None:
        raise NotFoundError(f"unknown player {player_id}")
    counts: dict[Role, int] = {}
    for match in dataset.matches_by_player.get(player_id, ()):
        role = role_for_pair(dataset, zone_map, player_id, match.match_id)
        counts[role] = counts.get(role, 0) + 1
    return [(role, counts[role]) for role in ROLE_ORDER if role in counts]
