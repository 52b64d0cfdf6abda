from __future__ import annotations

import random
from datetime import date

import numpy as np
import pytest

from scoutbench.errors import NotFoundError
from scoutbench.features import (
    DISTINGUISHED,
    build_catalogue,
    extract_features,
    pair_name,
)
from scoutbench.model import Dataset, Match, MatchEvent, PitchPosition, Player


def tiny_dataset(event_specs) -> Dataset:
    players = [Player("P1", "Ada", date(1995, 1, 1)), Player("P2", "Bo", date(1996, 2, 2))]
    matches = [Match("M1", date(2019, 3, 1), "T1", "T2", "c", "s")]
    events = [
        MatchEvent(
            event_id=f"E{i}",
            match_id="M1",
            player_id=spec.get("player_id", "P1"),
            team_id="T1",
            event_type=spec.get("event_type", "pass"),
            outcome=spec.get("outcome", "accurate"),
            tags=frozenset(spec.get("tags", ())),
            period="H1",
            clock_s=float(i),
            position=PitchPosition(50.0, 50.0),
        )
        for i, spec in enumerate(event_specs)
    ]
    return Dataset.build(players, matches, events)


class TestCatalogue:
    def test_only_accurate_passes(self):
        ds = tiny_dataset([{"event_type": "pass", "outcome": "accurate"}])
        assert list(build_catalogue(ds)) == ["pass:accurate", *DISTINGUISHED]

    def test_distinguished_always_present_and_last(self):
        ds = tiny_dataset([{"event_type": "goal", "outcome": "accurate"}])
        cat = list(build_catalogue(ds))
        assert cat[-3:] == list(DISTINGUISHED)

    def test_xg_feature_appended_when_tagged(self):
        ds = tiny_dataset([{"event_type": "shot", "outcome": "inaccurate", "tags": ["xg:0.3"]}])
        assert list(build_catalogue(ds))[-1] == "xg"

    def test_matches_independent_pair_scan(self, fixture_dataset, fixture_catalogue):
        seen = sorted({f"{e.event_type}:{e.outcome}" for e in fixture_dataset.events})
        names = list(fixture_catalogue)
        assert names[: len(seen)] == seen
        assert names[len(seen):len(seen) + 3] == list(DISTINGUISHED)


class TestExtraction:
    def test_direct_counts(self):
        ds = tiny_dataset(
            [
                {"event_type": "pass", "outcome": "accurate"},
                {"event_type": "pass", "outcome": "accurate"},
                {"event_type": "shot", "outcome": "inaccurate"},
                {"event_type": "goal", "outcome": "accurate"},
            ]
        )
        cat = build_catalogue(ds)
        fv = extract_features(ds, cat, "P1", "M1").as_dict(cat)
        assert fv["pass:accurate"] == 2
        assert fv["shot:inaccurate"] == 1
        assert fv["goal:accurate"] == 1
        assert fv["goals"] == 1
        assert fv["yellow_cards"] == 0

    def test_no_events_not_found(self):
        ds = tiny_dataset([{"player_id": "P1"}])
        cat = build_catalogue(ds)
        with pytest.raises(NotFoundError):
            extract_features(ds, cat, "P2", "M1")

    def test_cards_counted_from_tags(self):
        ds = tiny_dataset(
            [
                {"event_type": "card", "outcome": "neutral", "tags": ["yellow_card"]},
                {"event_type": "card", "outcome": "neutral", "tags": ["red_card"]},
            ]
        )
        cat = build_catalogue(ds)
        fv = extract_features(ds, cat, "P1", "M1").as_dict(cat)
        assert fv["yellow_cards"] == 1
        assert fv["red_cards"] == 1
        assert fv["card:neutral"] == 2

    def test_xg_summed_as_real_value(self):
        ds = tiny_dataset(
            [
                {"event_type": "shot", "outcome": "inaccurate", "tags": ["xg:0.30"]},
                {"event_type": "shot", "outcome": "accurate", "tags": ["xg:0.12"]},
            ]
        )
        cat = build_catalogue(ds)
        fv = extract_features(ds, cat, "P1", "M1").as_dict(cat)
        assert fv["xg"] == pytest.approx(0.42)

    def test_matches_brute_force_counter(self, fixture_dataset, fixture_catalogue):
        rng = random.Random(5)
        pairs = rng.sample(sorted(fixture_dataset.events_by_pair), 10)
        for player_id, match_id in pairs:
            fv = extract_features(fixture_dataset, fixture_catalogue, player_id, match_id)
            expected = {name: 0.0 for name in fixture_catalogue}
            for e in fixture_dataset.events:
                if e.player_id != player_id or e.match_id != match_id:
                    continue
                expected[pair_name(e)] += 1
                if e.event_type == "goal":
                    expected["goals"] += 1
                if "yellow_card" in e.tags:
                    expected["yellow_cards"] += 1
                if "red_card" in e.tags:
                    expected["red_cards"] += 1
                xg = e.xg_value()
                if xg is not None:
                    expected["xg"] += xg
            assert fv.as_dict(fixture_catalogue) == pytest.approx(expected)

    def test_double_count_identity(self, fixture_dataset, fixture_catalogue):
        # sum of count features = events + goals + yellow tags + red tags
        for player_id, match_id in sorted(fixture_dataset.events_by_pair)[:25]:
            events = fixture_dataset.events_by_pair[(player_id, match_id)]
            fv = extract_features(fixture_dataset, fixture_catalogue, player_id, match_id)
            count_sum = sum(
                v for name, v in fv.as_dict(fixture_catalogue).items() if name != "xg"
            )
            expected = (
                len(events)
                + sum(1 for e in events if e.event_type == "goal")
                + sum(1 for e in events if "yellow_card" in e.tags)
                + sum(1 for e in events if "red_card" in e.tags)
            )
            assert count_sum == expected

    def test_count_features_are_nonnegative_integers(self, fixture_dataset, fixture_catalogue):
        player_id, match_id = sorted(fixture_dataset.events_by_pair)[0]
        fv = extract_features(fixture_dataset, fixture_catalogue, player_id, match_id)
        for name, value in fv.as_dict(fixture_catalogue).items():
            assert np.isfinite(value)
            if name != "xg":
                assert value >= 0 and value == int(value)

    def test_permutation_invariance(self):
        specs = [
            {"event_type": t, "outcome": o}
            for t, o in [("pass", "accurate"), ("shot", "inaccurate"), ("duel", "accurate")]
        ] * 3
        ds1 = tiny_dataset(specs)
        cat = build_catalogue(ds1)
        shuffled = list(ds1.events)
        random.Random(1).shuffle(shuffled)
        ds2 = Dataset.build(list(ds1.players), list(ds1.matches), shuffled)
        fv1 = extract_features(ds1, cat, "P1", "M1")
        fv2 = extract_features(ds2, cat, "P1", "M1")
        assert np.array_equal(fv1.values, fv2.values)
