"""scoutbench: soccer event analytics with configurable performance scores."""

from .model import Dataset, Match, MatchEvent, PitchPosition, Player, age_of
from .roles import Role, ZoneMap, default_zone_map
from .scoring import WeightProfile, default_profile

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "Match",
    "MatchEvent",
    "PitchPosition",
    "Player",
    "Role",
    "WeightProfile",
    "ZoneMap",
    "age_of",
    "default_profile",
    "default_zone_map",
    "__version__",
]
