"""Isomorphism-free enumeration of unicyclic graphs and extremal scans.

Every labelled tree on ``n`` vertices is produced from its Prüfer sequence;
the trees are reduced to isomorphism classes, each class gets every possible
extra edge, and the resulting unicyclic graphs are deduplicated by canonical
certificate. Work is split by the first Prüfer symbol so units are
independent; the reducer merges them in unit order, which keeps the output
deterministic for any worker count.
"""

from __future__ import annotations

import heapq
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from uniharary.canon import canonical_certificate, canonical_form
from uniharary.formats import emit_graph6
from uniharary.graph import Graph, build_graph, cycle_path, cycle_star, make_cycle
from uniharary.indices import additively_weighted_harary, cp3_closed_form, cs3_closed_form
from uniharary.rational import Rational, format_rational

DEFAULT_MAX_N = 9
MAX_N_ENV = "UNIHARARY_MAX_N"
# n=4 has no CP closed form; its minimum is the 4-cycle
N4_MINIMUM = Rational(20)


def max_n() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None or raw == "":
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None
    if not 3 <= value <= 12:
        raise ValueError(f"{MAX_N_ENV} must lie in 3..12, got {value}")
    return value


def prufer_to_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def _tree_code(adj: list[list[int]], n: int, intern: dict) -> tuple:
    """Isomorphism-invariant code of an unlabelled tree.

    Leaves are stripped layer by layer towards the centre; each stripped
    vertex gets an interned id for the sorted ids of its already-stripped
    neighbours, so a single pass yields the AHU encoding rooted at the
    centre (or the unordered pair of halves for a bicentral tree).
    """
    deg = [len(a) for a in adj]
    kids: list[list[int]] = [[] for _ in range(n)]
    done = [False] * n
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            done[v] = True
            key = tuple(sorted(kids[v]))
            code = intern.setdefault(key, len(intern))
            for u in adj[v]:
                if not done[u]:
                    kids[u].append(code)
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    halves = sorted(intern.setdefault(tuple(sorted(kids[c])), len(intern)) for c in layer)
    return tuple(halves)


def _tree_unit(n: int, first: int) -> dict[tuple, list[tuple[int, int]]]:
    found: dict[tuple, list[tuple[int, int]]] = {}
    intern: dict[tuple, int] = {}
    for rest in itertools.product(range(n), repeat=n - 3):
        edges = prufer_to_edges((first,) + rest, n)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        code = _tree_code(adj, n, intern)
        if code not in found:
            found[code] = edges
    return found


def unlabelled_trees(n: int, workers: int = 1) -> list[Graph]:
    """One tree per isomorphism class, found by decoding every Prüfer sequence."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n == 2:
        return [build_graph(2, [(0, 1)])]
    units = range(n)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_tree_unit, itertools.repeat(n), units))
    else:
        results = [_tree_unit(n, first) for first in units]
    # interned codes are local to a unit, so merge on the canonical tree instead
    merged: dict[bytes, Graph] = {}
    for found in results:
        for edges in found.values():
            tree = canonical_form(build_graph(n, edges))
            merged.setdefault(emit_graph6(tree).encode("ascii"), tree)
    return [merged[key] for key in sorted(merged)]


def enumerate_unicyclic(n: int, workers: int = 1, limit: int | None = None) -> list[Graph]:
    """One canonical representative per isomorphism class of unicyclic graphs on n vertices.

    Representatives are returned in canonical form, sorted by certificate.
    """
    ceiling = max_n() if limit is None else limit
    if not 3 <= n <= ceiling:
        raise ValueError(f"enumeration supports 3 <= n <= {ceiling}, got {n}")
    classes: dict[bytes, Graph] = {}
    for tree in unlabelled_trees(n, workers):
        for u, v in itertools.combinations(range(n), 2):
            if tree.has_edge(u, v):
                continue
            g = canonical_form(tree.rewire([], [(u, v)]))
            classes.setdefault(emit_graph6(g).encode("ascii"), g)
    return [classes[c] for c in sorted(classes)]


def family_name(g: Graph) -> str | None:
    """Name ``g`` if it is a cycle, ``CS_{3,n-3}`` or ``CP_{3,n-3}`` (up to isomorphism)."""
    n = g.n
    cert = canonical_certificate(g)
    candidates = [(f"C_{n}", make_cycle(n))] if n >= 3 else []
    if n >= 4:
        candidates.append((f"CS_{{3,{n - 3}}}", cycle_star(3, n - 3)))
        candidates.append((f"CP_{{3,{n - 3}}}", cycle_path(3, n - 3)))
    for name, h in candidates:
        if canonical_certificate(h) == cert:
            return name
    return None


@dataclass(frozen=True)
class Attainer:
    graph6: str
    certificate: bytes
    name: str | None

    def label(self) -> str:
        return self.name or self.graph6


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    class_count: int
    max_value: Rational
    max_attainers: list[Attainer]
    min_value: Rational
    min_attainers: list[Attainer]
    values: list[tuple[str, Rational]] = field(repr=False, default_factory=list)

    def to_dict(self) -> dict:
        def attainers(items):
            return [{"graph6": a.graph6, "name": a.name} for a in items]

        return {
            "n": self.n,
            "class_count": self.class_count,
            "max_value": format_rational(self.max_value),
            "max_attainers": attainers(self.max_attainers),
            "min_value": format_rational(self.min_value),
            "min_attainers": attainers(self.min_attainers),
        }


def _attainer(g: Graph) -> Attainer:
    return Attainer(emit_graph6(g), canonical_certificate(g), family_name(g))


def extremal_scan(n: int, workers: int = 1, classes: list[Graph] | None = None) -> ExtremalReport:
    """Exact minimum and maximum index over all unicyclic classes on n vertices.

    Ties are kept: every class attaining an extremum is listed.
    """
    if classes is None:
        classes = enumerate_unicyclic(n, workers)
    scored = [(g, additively_weighted_harary(g)) for g in classes]
    hi = max(v for _, v in scored)
    lo = min(v for _, v in scored)
    return ExtremalReport(
        n=n,
        class_count=len(scored),
        max_value=hi,
        max_attainers=[_attainer(g) for g, v in scored if v == hi],
        min_value=lo,
        min_attainers=[_attainer(g) for g, v in scored if v == lo],
        values=[(emit_graph6(g), v) for g, v in scored],
    )


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    asserted: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    n: int
    scan: ExtremalReport
    checks: list[Check]

    @property
    def ok(self) -> bool:
        """True unless an asserted check failed; reported-only checks never fail it."""
        return all(c.passed for c in self.checks if c.asserted)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "scan": self.scan.to_dict(),
            "checks": [
                {"name": c.name, "passed": c.passed, "asserted": c.asserted, "detail": c.detail}
                for c in self.checks
            ],
        }


def _names(attainers: list[Attainer]) -> str:
    return "{" + ", ".join(a.label() for a in attainers) + "}"


def verify_theorems(n: int, workers: int = 1, classes: list[Graph] | None = None) -> VerificationReport:
    """Check both extremal bounds and their attainers over every class on n vertices.

    Uniqueness of the minimiser is asserted for n = 4 and n >= 6; at n = 5 the
    attainer set is only reported, because the 5-cycle ties ``CP_{3,2}``.
    """
    if n < 4:
        raise ValueError(f"verification needs n >= 4, got {n}")
    scan = extremal_scan(n, workers, classes)
    upper = cs3_closed_form(n)
    if n >= 5:
        lower, min_graph, min_label = cp3_closed_form(n), cycle_path(3, n - 3), f"CP_{{3,{n - 3}}}"
    else:
        lower, min_graph, min_label = N4_MINIMUM, make_cycle(4), "C_4"
    max_cert = canonical_certificate(cycle_star(3, n - 3))
    min_cert = canonical_certificate(min_graph)

    checks = []
    above = [g6 for g6, v in scan.values if v > upper]
    checks.append(Check(
        "upper_bound", not above, True,
        f"all {scan.class_count} classes have H_A <= {format_rational(upper)}"
        if not above else f"{len(above)} classes exceed {format_rational(upper)}: {above[:5]}",
    ))
    below = [g6 for g6, v in scan.values if v < lower]
    checks.append(Check(
        "lower_bound", not below, True,
        f"all {scan.class_count} classes have H_A >= {format_rational(lower)}"
        if not below else f"{len(below)} classes fall below {format_rational(lower)}: {below[:5]}",
    ))
    max_certs = [a.certificate for a in scan.max_attainers]
    checks.append(Check(
        "max_value", scan.max_value == upper, True,
        f"max {format_rational(scan.max_value)} vs closed form {format_rational(upper)}",
    ))
    checks.append(Check(
        "max_unique", max_certs == [max_cert], True,
        f"max attainers {_names(scan.max_attainers)}; expected {{CS_{{3,{n - 3}}}}}",
    ))
    min_certs = [a.certificate for a in scan.min_attainers]
    checks.append(Check(
        "min_value", scan.min_value == lower and min_cert in min_certs, True,
        f"min {format_rational(scan.min_value)} vs {format_rational(lower)}, attained by {min_label}: "
        f"{min_cert in min_certs}",
    ))
    unique = min_certs == [min_cert]
    asserted = n != 5
    detail = f"min attainers {_names(scan.min_attainers)}; expected {{{min_label}}}"
    if not asserted and not unique:
        detail += " (uniqueness claimed for n >= 5 does not hold here; reported, not asserted)"
    checks.append(Check("min_unique", unique, asserted, detail))
    return VerificationReport(n, scan, checks)
