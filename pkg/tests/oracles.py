"""Independent brute-force reference implementations used as test oracles.

These deliberately avoid the library's code paths: plain loops, numpy
fitting routines, and exhaustive scans, so agreement with the package is
evidence rather than tautology.
"""

from __future__ import annotations

import math

import numpy as np


def ols_slope(scores) -> float:
    """Closed-form OLS slope of scores against 0..n-1 via numpy polyfit."""
    x = np.arange(len(scores), dtype=float)
    return float(np.polyfit(x, np.asarray(scores, dtype=float), 1)[0])


def wls_slope(scores, lam: float) -> float:
    """Weighted LS slope; polyfit weights multiply residuals, so sqrt(w)."""
    n = len(scores)
    weights = np.array([lam ** (n - 1 - i) for i in range(n)], dtype=float)
    x = np.arange(n, dtype=float)
    return float(np.polyfit(x, np.asarray(scores, dtype=float), 1, w=np.sqrt(weights))[0])


def boxplot_seven(values):
    """(min, q1, median, q3, max, whisker_lo, whisker_hi, outliers).

    Pure-python restatement of the pinned definitions: linear-interpolated
    quantiles at p*(n-1), Tukey fences at 1.5 IQR, whiskers at the most
    extreme in-fence points clamped to the quartiles in degenerate cases.
    """
    xs = sorted(float(v) for v in values)
    n = len(xs)

    def q(p):
        pos = p * (n - 1)
        f = math.floor(pos)
        frac = pos - f
        if frac == 0:
            return xs[f]
        return xs[f] + frac * (xs[f + 1] - xs[f])

    q1, med, q3 = q(0.25), q(0.5), q(0.75)
    lo_fence = q1 - 1.5 * (q3 - q1)
    hi_fence = q3 + 1.5 * (q3 - q1)
    inside = [x for x in xs if lo_fence <= x <= hi_fence]
    w_lo = min(inside) if inside and min(inside) <= q1 else q1
    w_hi = max(inside) if inside and max(inside) >= q3 else q3
    outliers = [x for x in xs if x < lo_fence or x > hi_fence]
    return xs[0], q1, med, q3, xs[-1], w_lo, w_hi, outliers


def occupancy_histogram(events_xy, nx: int = 12, ny: int = 8):
    """Brute-force normalized position histogram as a dict cell -> share."""
    counts: dict[tuple[int, int], float] = {}
    for x, y in events_xy:
        cx = min(int(x / 100.0 * nx), nx - 1)
        cy = min(int(y / 100.0 * ny), ny - 1)
        counts[(cx, cy)] = counts.get((cx, cy), 0.0) + 1.0
    total = sum(counts.values())
    return {cell: c / total for cell, c in counts.items()}


def cosine_of_histograms(h1: dict, h2: dict) -> float:
    dot = sum(v * h2.get(cell, 0.0) for cell, v in h1.items())
    n1 = math.sqrt(sum(v * v for v in h1.values()))
    n2 = math.sqrt(sum(v * v for v in h2.values()))
    return dot / (n1 * n2)


def all_pairs_similarity(dataset):
    """Exhaustive occupancy-cosine matrix over all players with events."""
    per_player: dict[str, list[tuple[float, float]]] = {}
    for e in dataset.events:
        per_player.setdefault(e.player_id, []).append((e.position.x, e.position.y))
    hists = {pid: occupancy_histogram(xy) for pid, xy in per_player.items()}
    sims: dict[tuple[str, str], float] = {}
    for a in hists:
        for b in hists:
            if a != b:
                sims[(a, b)] = cosine_of_histograms(hists[a], hists[b])
    return sims


def top_k_similar(dataset, player_id: str, k: int):
    sims = all_pairs_similarity(dataset)
    candidates = [(b, s) for (a, b), s in sims.items() if a == player_id]
    candidates.sort(key=lambda item: (-item[1], item[0]))
    return candidates[:k]
