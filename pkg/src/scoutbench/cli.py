"""Operator entry points: ingest, fixture, scout, serve.

Exit codes: 0 success, 1 domain error (bad data, missing file, busy
port), 2 usage error (bad flags, empty ranges). ``scout`` emits exactly
the rows the ``/api/players`` endpoint would return for the same
parameters.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .analytics import DEFAULT_SORT, QueryFilter, parse_sort, row_to_record
from .errors import ArgumentError, ScoutError
from .ingest import generate_synthetic, load_data_dir, parse_dataset, write_dataset
from .roles import parse_role
from .scoring import DEFAULT_PROFILE_ID
from .service import AnalyticsService

_TABLE_COLUMNS = (
    ("player_id", "Player"),
    ("name", "Name"),
    ("age", "Age"),
    ("role", "Role"),
    ("n_matches", "Matches"),
    ("playerank_mean", "PlayeRankMean"),
    ("trend_percentage", "TrendPercentage"),
    ("trend_long", "TrendLong"),
    ("trend_short", "TrendShort"),
)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _print_report(report) -> None:
    click.echo(
        f"read {report.records_read} records: "
        f"{report.records_accepted} accepted, {report.records_rejected} rejected"
    )
    for locator, reason in report.rejects:
        click.echo(f"  reject {locator}: {reason}")


@click.group()
def main():
    """Soccer scouting analytics over spatio-temporal match events."""


@main.command("ingest")
@click.argument("data_dir", type=click.Path(path_type=Path), required=False)
@click.option("--events", type=click.Path(path_type=Path), help="events.jsonl path")
@click.option("--players", type=click.Path(path_type=Path), help="players.jsonl path")
@click.option("--matches", type=click.Path(path_type=Path), help="matches.jsonl path")
def cmd_ingest(data_dir, events, players, matches):
    """Parse and validate a dataset, printing an ingest report."""
    try:
        if events and players and matches:
            dataset, report = parse_dataset(events, players, matches)
        elif data_dir:
            dataset, report = load_data_dir(data_dir)
        else:
            raise click.UsageError("give DATA_DIR or all of --events/--players/--matches")
        _print_report(report)
        click.echo(
            f"dataset: {len(dataset.players)} players, {len(dataset.matches)} matches, "
            f"{len(dataset.events)} events, reference date {dataset.reference_date}"
        )
    except (ScoutError, OSError) as exc:
        _fail(str(exc))


@main.command("fixture")
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--players", "n_players", type=int, default=20, show_default=True)
@click.option("--matches", "n_matches", type=int, default=10, show_default=True)
@click.option(
    "--out-dir",
    type=click.Path(path_type=Path),
    required=True,
    help="directory for events/players/matches .jsonl",
)
def cmd_fixture(seed, n_players, n_matches, out_dir):
    """Write a deterministic synthetic dataset."""
    try:
        dataset = generate_synthetic(seed, n_players, n_matches)
    except ArgumentError as exc:
        raise click.UsageError(str(exc))
    except ScoutError as exc:
        _fail(str(exc))
        return
    written = write_dataset(dataset, out_dir)
    click.echo(
        f"wrote {len(dataset.events)} events for {n_players} players over "
        f"{n_matches} matches (seed {seed})"
    )
    for path in written:
        click.echo(f"  {path}")


@main.command("scout")
@click.option(
    "--data-dir",
    type=click.Path(path_type=Path),
    envvar="SCOUTBENCH_DATA_DIR",
    required=True,
)
@click.option("--name-like", default=None, help="case-insensitive name substring")
@click.option("--role", "roles", multiple=True, help="role filter, repeatable")
@click.option("--age-min", type=int, default=None)
@click.option("--age-max", type=int, default=None)
@click.option("--trend-min", type=float, default=None, help="min TrendPercentage")
@click.option("--trend-max", type=float, default=None, help="max TrendPercentage")
@click.option("--min-matches", type=int, default=None)
@click.option("--sort", "sort_spec", default=None, help="e.g. trend_pct:desc,age:asc,mean:desc")
@click.option("--profile", default=DEFAULT_PROFILE_ID, show_default=True)
@click.option("--limit", type=int, default=None, help="cap the row count")
@click.option("--offset", type=int, default=0, show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "jsonl"]),
    default="table",
    show_default=True,
)
def cmd_scout(data_dir, name_like, roles, age_min, age_max, trend_min, trend_max,
              min_matches, sort_spec, profile, limit, offset, fmt):
    """Run the scouting query headlessly and print the players table."""
    try:
        flt = QueryFilter(
            name_substring=name_like,
            roles=frozenset(parse_role(r) for r in roles) if roles else None,
            age_min=age_min,
            age_max=age_max,
            trend_min=trend_min,
            trend_max=trend_max,
            min_matches=min_matches,
        )
        flt.validate()
        sort_keys = parse_sort(sort_spec) if sort_spec else DEFAULT_SORT
    except ArgumentError as exc:
        raise click.UsageError(str(exc))

    try:
        service, _ = AnalyticsService.from_data_dir(data_dir)
        rows = service.query(flt, sort_keys, profile_id=profile)
    except (ScoutError, OSError) as exc:
        _fail(str(exc))
        return

    if offset:
        rows = rows[offset:]
    if limit is not None:
        rows = rows[:limit]

    if fmt == "jsonl":
        for row in rows:
            click.echo(json.dumps(row_to_record(row), ensure_ascii=False))
        return

    def cell(value) -> str:
        if value is None:
            return "-"
        if isinstance(value, float):
            return f"{value:.3f}"
        return str(value)

    table = [[cell(row_to_record(r)[key]) for key, _ in _TABLE_COLUMNS] for r in rows]
    headers = [label for _, label in _TABLE_COLUMNS]
    widths = [
        max(len(headers[i]), *(len(line[i]) for line in table)) if table else len(headers[i])
        for i in range(len(headers))
    ]
    click.echo("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    for line in table:
        click.echo("  ".join(v.ljust(w) for v, w in zip(line, widths)))


@main.command("serve")
@click.option(
    "--bind",
    envvar="SCOUTBENCH_BIND",
    default="127.0.0.1:8000",
    show_default=True,
    help="HOST:PORT",
)
@click.option(
    "--data-dir",
    type=click.Path(path_type=Path),
    envvar="SCOUTBENCH_DATA_DIR",
    required=True,
)
@click.option("--ui-dir", type=click.Path(path_type=Path), default=None,
              help="serve a built dashboard from this directory at /")
def cmd_serve(bind, data_dir, ui_dir):
    """Load the data directory and serve the HTTP API until interrupted."""
    from .api import serve

    try:
        service, report = AnalyticsService.from_data_dir(data_dir)
    except (ScoutError, OSError) as exc:
        _fail(str(exc))
        return
    click.echo(
        f"loaded {len(service.dataset.players)} players, "
        f"{len(service.dataset.events)} events "
        f"({report.records_rejected} records rejected)"
    )
    try:
        serve(service, bind=bind, ui_dir=str(ui_dir) if ui_dir else None)
    except ArgumentError as exc:
        raise click.UsageError(str(exc))
    except OSError as exc:
        _fail(f"cannot bind {bind}: {exc}")


if __name__ == "__main__":
    main()
