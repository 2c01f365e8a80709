"""Index-monotone rewrites of unicyclic graphs.

Three rewrites raise H_A and drive any unicyclic graph to the triangle with
all other vertices as leaves on one corner (``CS_{3,n-3}``); three lower it
and drive the graph to the triangle with one long tail (``CP_{3,n-3}``).

Each rewrite keeps vertex ids, deletes and adds the same number of edges and
returns the new graph with a :class:`TransformStep`. Where a choice is free,
the lowest vertex id wins.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal, Mapping, Sequence

from uniharary.formats import emit_graph6
from uniharary.graph import (
    Edge,
    Graph,
    GraphError,
    UnicyclicDecomposition,
    all_pairs_distances,
    branching_cycle_vertices,
    classify,
    decompose_unicyclic,
    is_cycle_path,
    is_cycle_star,
)
from uniharary.indices import additively_weighted_harary
from uniharary.rational import Rational, format_rational

log = logging.getLogger(__name__)

Orientation = Literal["maximize", "minimize"]


class TransformPreconditionError(GraphError):
    """The rewrite does not apply to this graph."""


@dataclass(frozen=True)
class TransformStep:
    name: str
    edges_removed: tuple[Edge, ...]
    edges_added: tuple[Edge, ...]
    h_a_before: Rational
    h_a_after: Rational
    # vertices playing the named roles of the rewrite (x, y, w0, case, ...)
    roles: Mapping[str, object] = field(default_factory=dict)

    @property
    def delta(self) -> Rational:
        return self.h_a_after - self.h_a_before

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "edges_removed": [list(e) for e in self.edges_removed],
            "edges_added": [list(e) for e in self.edges_added],
            "h_a_before": format_rational(self.h_a_before),
            "h_a_after": format_rational(self.h_a_after),
            "roles": {k: v for k, v in self.roles.items()},
        }


@dataclass(frozen=True)
class TransformTrace:
    orientation: Orientation
    graphs: tuple[Graph, ...]
    steps: tuple[TransformStep, ...]

    @property
    def initial(self) -> Graph:
        return self.graphs[0]

    @property
    def final(self) -> Graph:
        return self.graphs[-1]

    def monotone_violations(self) -> list[int]:
        """Indices of steps that fail to move H_A strictly in the trace's direction."""
        sign = 1 if self.orientation == "maximize" else -1
        return [i for i, s in enumerate(self.steps) if sign * s.delta <= 0]

    def to_text(self) -> str:
        lines = [
            f"{self.orientation} trace: {len(self.steps)} step(s)",
            f"initial {emit_graph6(self.initial)} H_A = {format_rational(self._h_a_initial())}",
        ]
        for i, s in enumerate(self.steps, 1):
            removed = " ".join(f"{u}-{v}" for u, v in s.edges_removed)
            added = " ".join(f"{u}-{v}" for u, v in s.edges_added)
            case = f" [{s.roles['case']}]" if "case" in s.roles else ""
            lines.append(
                f"{i:>3} {s.name}{case}: -{{{removed}}} +{{{added}}} "
                f"H_A {format_rational(s.h_a_before)} -> {format_rational(s.h_a_after)}"
            )
        lines.append(f"final {emit_graph6(self.final)} H_A = {format_rational(self._h_a_final())}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation,
            "initial": emit_graph6(self.initial),
            "final": emit_graph6(self.final),
            "h_a_initial": format_rational(self._h_a_initial()),
            "h_a_final": format_rational(self._h_a_final()),
            "steps": [s.to_dict() for s in self.steps],
        }

    def _h_a_initial(self) -> Rational:
        return self.steps[0].h_a_before if self.steps else additively_weighted_harary(self.initial)

    def _h_a_final(self) -> Rational:
        return self.steps[-1].h_a_after if self.steps else additively_weighted_harary(self.initial)


def _step(name: str, g: Graph, removed: Sequence[Edge], added: Sequence[Edge], **roles) -> tuple[Graph, TransformStep]:
    h = g.rewire(removed, added)
    if classify(h) != "unicyclic":
        raise AssertionError(f"{name} produced a graph that is not unicyclic")
    step = TransformStep(
        name,
        tuple(tuple(sorted(e)) for e in removed),
        tuple(tuple(sorted(e)) for e in added),
        additively_weighted_harary(g),
        additively_weighted_harary(h),
        roles,
    )
    return h, step


def _unicyclic(g: Graph, name: str) -> UnicyclicDecomposition:
    if classify(g) != "unicyclic":
        raise TransformPreconditionError(f"{name}: graph is not unicyclic")
    return decompose_unicyclic(g)


def _children(g: Graph, dec: UnicyclicDecomposition, v: int) -> list[int]:
    if dec.on_cycle(v):
        return [u for u in g.adj[v] if not dec.on_cycle(u)]
    return dec.children(g, v)


def _depth(dec: UnicyclicDecomposition, v: int) -> int:
    return dec.depth.get(v, 0)


def _pendant_path(g: Graph, dec: UnicyclicDecomposition, start: int) -> list[int]:
    """Vertices from ``start`` outward along a non-branching pendant path."""
    path = [start]
    while True:
        kids = _children(g, dec, path[-1])
        if not kids:
            return path
        if len(kids) > 1:
            raise AssertionError("pendant path branches")
        path.append(kids[0])


# -- rewrites that raise the index -------------------------------------------


def leaf_lift(g: Graph) -> tuple[Graph, TransformStep]:
    """Move the leaves below the deepest pendant vertex one level up.

    In the pendant tree of the lowest-id cycle vertex that carries a tree of
    depth >= 2, take the deepest leaf ``z1`` with parent ``y`` and grandparent
    ``x``; every leaf on ``y`` is re-attached to ``x``.
    """
    dec = _unicyclic(g, "leaf_lift")
    if is_cycle_star(g, dec):
        raise TransformPreconditionError("leaf_lift: graph is already a cycle-star")
    w = min(dec.anchor[v] for v, dv in dec.depth.items() if dv >= 2)
    tree = dec.pendant(w)
    deepest = max(dec.depth[v] for v in tree)
    z1 = min(v for v in tree if dec.depth[v] == deepest)
    y = dec.parent[z1]
    x = dec.parent[y]
    leaves = sorted(dec.children(g, y))
    return _step(
        "leaf_lift", g,
        [(z, y) for z in leaves], [(z, x) for z in leaves],
        w=w, x=x, y=y, z=leaves,
    )


def cycle_shrink(g: Graph) -> tuple[Graph, TransformStep]:
    """Shorten the cycle of a cycle-star by folding ``w1`` onto ``w0``.

    All edges at ``w1`` except ``w0 w1`` move to ``w0``, so ``w1`` becomes a
    leaf of ``w0`` and its leaves follow. For odd cycles ``w0 w1`` is the edge
    opposite a minimum-degree cycle vertex; for even cycles it joins the
    highest-degree cycle vertex to its heavier cycle neighbour.
    """
    dec = _unicyclic(g, "cycle_shrink")
    if not is_cycle_star(g, dec):
        raise TransformPreconditionError("cycle_shrink: graph is not a cycle-star")
    cyc, c = dec.cycle, dec.c
    if c < 4:
        raise TransformPreconditionError("cycle_shrink: cycle is already a triangle")
    deg = g.degree
    if c % 2:
        low = min(cyc, key=lambda v: (deg(v), v))
        i = cyc.index(low) + c // 2
        a, b = cyc[i % c], cyc[(i + 1) % c]
        w0 = min((a, b), key=lambda v: (-deg(v), v))
        w1 = b if w0 == a else a
        roles = {"opposite": low}
    else:
        w0 = min(cyc, key=lambda v: (-deg(v), v))
        i = cyc.index(w0)
        w1 = min((cyc[i - 1], cyc[(i + 1) % c]), key=lambda v: (-deg(v), v))
        roles = {}
    moved = [v for v in g.adj[w1] if v != w0]
    return _step(
        "cycle_shrink", g,
        [(v, w1) for v in moved], [(v, w0) for v in moved],
        w0=w0, w1=w1, **roles,
    )


def consolidate_triangle_leaves(g: Graph) -> tuple[Graph, TransformStep]:
    """Move one leaf of a triangle cycle-star from its lightest to its heaviest corner."""
    dec = _unicyclic(g, "consolidate_triangle_leaves")
    if not is_cycle_star(g, dec) or dec.c != 3:
        raise TransformPreconditionError("consolidate_triangle_leaves: need a cycle-star on a triangle")
    branching = sorted(branching_cycle_vertices(g, dec))
    if len(branching) < 2:
        raise TransformPreconditionError("consolidate_triangle_leaves: fewer than two branching vertices")
    w0 = min(branching, key=lambda v: (g.degree(v), v))
    w1 = min((v for v in branching if v != w0), key=lambda v: (-g.degree(v), v))
    leaf = min(u for u in g.adj[w0] if not dec.on_cycle(u))
    return _step(
        "consolidate_triangle_leaves", g,
        [(leaf, w0)], [(leaf, w1)],
        w0=w0, w1=w1, leaf=leaf,
    )


# -- rewrites that lower the index -------------------------------------------


def subtree_to_path(g: Graph) -> tuple[Graph, TransformStep]:
    """Straighten the deepest fork of a pendant tree.

    ``x`` is the vertex with two or more children farthest from its cycle
    anchor (the anchor itself counts, with depth 0). Below ``x`` hang plain
    paths; all but the longest are re-hung behind the far end of the longest.
    """
    dec = _unicyclic(g, "subtree_to_path")
    if is_cycle_path(g, dec):
        raise TransformPreconditionError("subtree_to_path: graph is already a cycle-path")
    forks = [v for v in range(g.n) if len(_children(g, dec, v)) >= 2]
    w = min(v if dec.on_cycle(v) else dec.anchor[v] for v in forks)
    in_tree = [v for v in forks if v == w or dec.anchor.get(v) == w]
    x = min(in_tree, key=lambda v: (-_depth(dec, v), v))
    paths = sorted((_pendant_path(g, dec, y) for y in _children(g, dec, x)), key=lambda p: (-len(p), p[0]))
    longest, others = paths[0], paths[1:]
    z1 = longest[-1]
    return _step(
        "subtree_to_path", g,
        [(x, p[0]) for p in others], [(z1, p[0]) for p in others],
        w=w, x=x, z1=z1, y=[p[0] for p in others],
    )


def merge_branches(g: Graph) -> tuple[Graph, TransformStep]:
    """Remove one branching cycle vertex from a cycle-path.

    Cases are tried in order. Case 1: two consecutive branching vertices are
    at most as far apart as the longer of their paths; the shorter path moves
    behind the end of the longer. Case 2a (four or more branches): the closest
    pair is merged into the cycle by a double edge swap. Case 2b (three
    branches) and 2c (two): the middle path, respectively the second path,
    moves behind the end of the other.
    """
    dec = _unicyclic(g, "merge_branches")
    if not is_cycle_path(g, dec):
        raise TransformPreconditionError("merge_branches: graph is not a cycle-path")
    branching = branching_cycle_vertices(g, dec)
    m = len(branching)
    if m < 2:
        raise TransformPreconditionError("merge_branches: fewer than two branching vertices")
    path = {w: _pendant_path(g, dec, w) for w in branching}
    p = {w: len(path[w]) - 1 for w in branching}
    dist = dec.cycle_distance

    pairs = {tuple(sorted((branching[i], branching[(i + 1) % m]))) for i in range(m)}
    pairs = sorted(pairs)

    def append_behind(case: str, w0: int, wj: int, **extra):
        v1 = path[wj][1]
        end = path[w0][-1]
        return _step(
            "merge_branches", g,
            [(wj, v1)], [(end, v1)],
            case=case, w0=w0, wj=wj, **extra,
        )

    for a, b in pairs:
        if dist(a, b) <= max(p[a], p[b]):
            w0 = min((a, b), key=lambda v: (-p[v], v))
            wj = b if w0 == a else a
            return append_behind("1", w0, wj)

    if m >= 4:
        a, b = min(pairs, key=lambda ab: (dist(*ab), ab))
        w0 = min((a, b), key=lambda v: (-p[v], v))
        wj = b if w0 == a else a
        j = dist(w0, wj)
        cyc, c = dec.cycle, dec.c
        i0 = cyc.index(w0)
        step = 1 if cyc[(i0 + j) % c] == wj else -1
        w1 = cyc[(i0 + step) % c]
        wj_prev = cyc[(i0 + step * (j - 1)) % c]
        pj = p[wj]
        u_pj = path[w0][pj]
        v_pj = path[wj][-1]
        side_ok = 2 * pj + j < 3 * (c // 4)
        if not side_ok:
            log.warning(
                "merge_branches case 2a: side condition 2*p_j + j < 3*floor(c/4) fails "
                "(p_j=%d, j=%d, c=%d) on %s", pj, j, c, emit_graph6(g),
            )
        return _step(
            "merge_branches", g,
            [(w0, w1), (wj_prev, wj)], [(u_pj, w1), (wj_prev, v_pj)],
            case="2a", w0=w0, wj=wj, side_condition=side_ok,
        )

    if m == 3:
        a, b = max(pairs, key=lambda ab: (dist(*ab), [-v for v in ab]))
        w0 = min((a, b), key=lambda v: (p[v], v))
        wk = b if w0 == a else a
        wj = next(v for v in branching if v not in (a, b))
        return append_behind("2b", w0, wj, wk=wk)

    w0, wj = sorted(branching)
    return append_behind("2c", w0, wj)


def triangle_tail(g: Graph) -> tuple[Graph, TransformStep]:
    """Turn ``CP_{k,n-k}`` (k >= 4, including the bare cycle) into ``CP_{3,n-3}``.

    With ``w_{k-1}`` the branching vertex, the edge ``w0 w_{k-1}`` is replaced
    by the chord ``w0 w2``; the rest of the old cycle joins the tail.
    """
    dec = _unicyclic(g, "triangle_tail")
    branching = branching_cycle_vertices(g, dec)
    if not is_cycle_path(g, dec) or len(branching) > 1:
        raise TransformPreconditionError("triangle_tail: graph is not CP_(k,n-k)")
    if dec.c < 4:
        raise TransformPreconditionError("triangle_tail: cycle is already a triangle")
    if g.n < 5:
        raise TransformPreconditionError(
            "triangle_tail: needs n >= 5 (on 4 vertices C_4 is the minimum, 20 < 21)"
        )
    cyc, c = dec.cycle, dec.c
    last = branching[0] if branching else min(cyc)
    i = cyc.index(last)
    nbrs = (cyc[(i + 1) % c], cyc[i - 1])
    w0 = min(nbrs)
    step = 1 if w0 == cyc[(i + 1) % c] else -1
    w2 = cyc[(i + 3 * step) % c]
    return _step(
        "triangle_tail", g,
        [(w0, last)], [(w0, w2)],
        w0=w0, w2=w2, w_last=last,
    )


MAXIMIZE_REWRITES: tuple[Callable, ...] = (leaf_lift, cycle_shrink, consolidate_triangle_leaves)
MINIMIZE_REWRITES: tuple[Callable, ...] = (subtree_to_path, merge_branches, triangle_tail)


# -- chains -------------------------------------------------------------------


def _fork_measure(g: Graph) -> int:
    dec = decompose_unicyclic(g)
    return sum(
        (g.n - _depth(dec, v)) * (len(kids) - 1)
        for v in range(g.n)
        if len(kids := _children(g, dec, v)) >= 2
    )


def _run_phase(g, rewrite, applies, measure, graphs, steps):
    while applies(g):
        before = measure(g)
        g, step = rewrite(g)
        after = measure(g)
        if not after < before:
            raise AssertionError(f"{rewrite.__name__} did not reduce its termination measure")
        graphs.append(g)
        steps.append(step)
    return g


def maximize_chain(g: Graph) -> TransformTrace:
    """leaf_lift until cycle-star, cycle_shrink until a triangle, then consolidate."""
    _unicyclic(g, "maximize_chain")
    graphs, steps = [g], []

    def star(h):
        return is_cycle_star(h)

    g = _run_phase(
        g, leaf_lift, lambda h: not star(h),
        lambda h: sum(decompose_unicyclic(h).depth.values()), graphs, steps,
    )
    g = _run_phase(g, cycle_shrink, lambda h: decompose_unicyclic(h).c >= 4,
                   lambda h: decompose_unicyclic(h).c, graphs, steps)
    g = _run_phase(
        g, consolidate_triangle_leaves,
        lambda h: len(branching_cycle_vertices(h, decompose_unicyclic(h))) >= 2,
        lambda h: h.n - max(h.degrees()), graphs, steps,
    )
    return TransformTrace("maximize", tuple(graphs), tuple(steps))


def minimize_chain(g: Graph) -> TransformTrace:
    """subtree_to_path until cycle-path, merge_branches until one branch, then triangle_tail."""
    _unicyclic(g, "minimize_chain")
    if g.n < 5:
        raise TransformPreconditionError(
            "minimize_chain needs n >= 5: on 4 vertices C_4 (20) is below CS_(3,1) (21) and no CP_(3,1) tail exists"
        )
    graphs, steps = [g], []
    g = _run_phase(g, subtree_to_path, lambda h: not is_cycle_path(h), _fork_measure, graphs, steps)

    def branches(h):
        return len(branching_cycle_vertices(h, decompose_unicyclic(h)))

    g = _run_phase(g, merge_branches, lambda h: branches(h) >= 2, branches, graphs, steps)
    g = _run_phase(g, triangle_tail, lambda h: decompose_unicyclic(h).c >= 4,
                   lambda h: decompose_unicyclic(h).c, graphs, steps)
    return TransformTrace("minimize", tuple(graphs), tuple(steps))


# -- pair deltas ----------------------------------------------------------------


@dataclass(frozen=True)
class PairDeltaLedger:
    orientation: Orientation
    entries: dict[tuple[int, int], Rational]

    @property
    def total(self) -> Rational:
        return sum(self.entries.values(), Fraction(0))

    def __getitem__(self, pair: tuple[int, int]) -> Rational:
        u, v = pair
        return self.entries[(u, v) if u < v else (v, u)]


def pair_delta_ledger(
    before: Graph,
    after: Graph,
    correspondence: Sequence[int] | Mapping[int, int] | None = None,
    orientation: Orientation = "maximize",
) -> PairDeltaLedger:
    """Per-pair contribution to the index change between two graphs.

    ``correspondence[v]`` is the vertex of ``after`` that plays ``v``; the
    identity by default. Maximize entries are ``after - before``, minimize
    entries ``before - after``, so they sum to the oriented difference.
    """
    n = before.n
    if after.n != n:
        raise GraphError(f"ledger needs equal vertex counts, got {n} and {after.n}")
    corr = list(range(n)) if correspondence is None else [correspondence[v] for v in range(n)]
    if sorted(corr) != list(range(n)):
        raise GraphError("correspondence is not a bijection on the vertex set")
    if orientation not in ("maximize", "minimize"):
        raise ValueError(f"unknown orientation {orientation!r}")
    db, da = all_pairs_distances(before).d, all_pairs_distances(after).d
    deg_b, deg_a = before.degrees(), after.degrees()
    entries = {}
    for u, v in itertools.combinations(range(n), 2):
        cu, cv = corr[u], corr[v]
        old = Fraction(deg_b[u] + deg_b[v], db[u][v])
        new = Fraction(deg_a[cu] + deg_a[cv], da[cu][cv])
        entries[(u, v)] = new - old if orientation == "maximize" else old - new
    return PairDeltaLedger(orientation, entries)


def step_ledger(before: Graph, step: TransformStep, orientation: Orientation) -> PairDeltaLedger:
    after = before.rewire(step.edges_removed, step.edges_added)
    return pair_delta_ledger(before, after, None, orientation)
