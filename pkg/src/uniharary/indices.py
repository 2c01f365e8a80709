"""Exact distance-based indices and the closed forms for extremal graphs.

All sums run over unordered vertex pairs. With that reading the cycle C_4
scores 20 and the triangle with one pendant leaf scores 21.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from uniharary.graph import DistanceMatrix, Graph, GraphError, all_pairs_distances
from uniharary.rational import Rational, harmonic


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class IndexReport:
    h_a: Rational
    harary: Rational
    wiener: int


def _checked_distances(g: Graph, dist: DistanceMatrix | None) -> DistanceMatrix:
    if g.n < 2:
        raise GraphError(f"index needs at least 2 vertices, got {g.n}")
    dist = dist or all_pairs_distances(g)
    if not dist.connected:
        raise DisconnectedGraphError("index is only defined for connected graphs")
    return dist


def additively_weighted_harary(g: Graph, dist: DistanceMatrix | None = None) -> Rational:
    """Sum of ``(deg u + deg v) / d(u, v)`` over unordered pairs ``u != v``."""
    d = _checked_distances(g, dist).d
    deg = g.degrees()
    # integer numerators bucketed by distance, so only one division per distance
    by_distance: dict[int, int] = defaultdict(int)
    for u in range(g.n):
        row = d[u]
        du = deg[u]
        for v in range(u + 1, g.n):
            by_distance[row[v]] += du + deg[v]
    return sum((Fraction(s, k) for k, s in by_distance.items()), Fraction(0))


def classical_indices(g: Graph) -> IndexReport:
    dist = _checked_distances(g, None)
    counts: dict[int, int] = defaultdict(int)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            counts[dist.d[u][v]] += 1
    harary = sum((Fraction(c, k) for k, c in counts.items()), Fraction(0))
    wiener = sum(int(k) * c for k, c in counts.items())
    return IndexReport(additively_weighted_harary(g, dist), harary, wiener)


def cs3_closed_form(n: int) -> Rational:
    """Index of the triangle with ``n - 3`` leaves on one vertex."""
    if n < 3:
        raise ValueError(f"CS_(3,n-3) needs n >= 3, got {n}")
    return Fraction(3 * (n * n - n + 2), 2)


def cp3_closed_form(n: int) -> Rational:
    """Index of the triangle with a pendant path on ``n - 3`` vertices (n >= 5)."""
    if n < 5:
        raise ValueError(f"closed form for CP_(3,n-3) needs n >= 5, got {n}")
    total = 4 * sum((harmonic(n - i - 1) for i in range(1, n - 1)), Fraction(0))
    return total + harmonic(n - 3) + 3 * harmonic(n - 2) + Fraction(6 * n - 13, n - 2)


def cycle_h_a_closed_form(n: int) -> Rational:
    """Index of the n-cycle.

    Odd n: ``4n * H_{(n-1)/2}``. Even n: every vertex sees two vertices at
    each distance below n/2 and one antipode, giving ``4n * H_{n/2-1} + 4``.
    """
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    if n % 2:
        return 4 * n * harmonic((n - 1) // 2)
    half = n // 2
    body = 4 * n * harmonic(half - 1) if half > 1 else Fraction(0)
    return body + 4


def lemma22_margin(n: int) -> Rational:
    """Gap between the triangle-star bound and the odd cycle, for odd n >= 5.

    Strictly positive for every admissible n; see tests for the sweep.
    """
    if n < 5 or n % 2 == 0:
        raise ValueError(f"margin is defined for odd n >= 5, got {n}")
    return cs3_closed_form(n) - cycle_h_a_closed_form(n)


__all__ = [
    "DisconnectedGraphError",
    "IndexReport",
    "additively_weighted_harary",
    "classical_indices",
    "cp3_closed_form",
    "cs3_closed_form",
    "cycle_h_a_closed_form",
    "lemma22_margin",
]
