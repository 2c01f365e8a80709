"""Simple undirected graphs, BFS distances and unicyclic structure.

Vertex ids are always ``0..n-1``. Graphs are immutable; rewrites build new
instances through :meth:`Graph.rewire`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

INF = math.inf

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for malformed-graph errors."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class NotUnicyclicError(GraphError):
    pass


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    _edge_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = set()
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                edges.add(_norm(u, v))
        object.__setattr__(self, "_edge_set", frozenset(edges))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._edge_set

    def edges(self) -> list[Edge]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted(self._edge_set)

    @property
    def m(self) -> int:
        return len(self._edge_set)

    def rewire(self, removed: Iterable[Edge], added: Iterable[Edge]) -> "Graph":
        edges = set(self._edge_set)
        for u, v in removed:
            e = _norm(u, v)
            if e not in edges:
                raise GraphError(f"cannot remove missing edge {e}")
            edges.remove(e)
        for u, v in added:
            e = _norm(u, v)
            if e in edges:
                raise DuplicateEdgeError(f"edge {e} already present")
            edges.add(e)
        return build_graph(self.n, sorted(edges))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise VertexRangeError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in adj))


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[float, ...], ...]

    def __getitem__(self, uv: Edge):
        return self.d[uv[0]][uv[1]]

    @property
    def connected(self) -> bool:
        return all(x != INF for row in self.d for x in row)


def bfs(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.adj[u]:
            if dist[v] == INF:
                dist[v] = du
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Hop distances from a BFS at every vertex; unreachable pairs hold ``INF``."""
    return DistanceMatrix(g.n, tuple(tuple(bfs(g, s)) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return INF not in bfs(g, 0)


def classify(g: Graph) -> Literal["tree", "unicyclic", "other"]:
    if g.n == 0 or not is_connected(g):
        return "other"
    if g.m == g.n - 1:
        return "tree"
    if g.m == g.n:
        return "unicyclic"
    return "other"


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """The cycle ``w_0 .. w_{c-1}`` plus the forest hanging off it.

    ``anchor[v]`` is the cycle vertex whose pendant tree contains ``v`` and
    ``parent[v]`` the neighbour of ``v`` one step closer to the cycle. Both
    maps only have keys for non-cycle vertices.
    """

    cycle: tuple[int, ...]
    anchor: dict[int, int]
    parent: dict[int, int]
    depth: dict[int, int]

    @property
    def c(self) -> int:
        return len(self.cycle)

    def on_cycle(self, v: int) -> bool:
        return v not in self.anchor

    def children(self, g: Graph, v: int) -> list[int]:
        """Neighbours of ``v`` one step further from the cycle."""
        return [u for u in g.adj[v] if self.parent.get(u) == v]

    def cycle_index(self, v: int) -> int:
        return self.cycle.index(v)

    def cycle_distance(self, a: int, b: int) -> int:
        i, j = self.cycle.index(a), self.cycle.index(b)
        k = abs(i - j)
        return min(k, self.c - k)

    def pendant(self, w: int) -> list[int]:
        """Non-cycle vertices anchored at cycle vertex ``w``, sorted."""
        return sorted(v for v, a in self.anchor.items() if a == w)


def decompose_unicyclic(g: Graph) -> UnicyclicDecomposition:
    """Split a unicyclic graph into its cycle and pendant trees.

    The cycle is found by repeatedly stripping degree-1 vertices; the
    remaining 2-regular core is read starting at its lowest id and stepping
    first towards the lower-id neighbour.
    """
    if classify(g) != "unicyclic":
        raise NotUnicyclicError("graph is not unicyclic")
    deg = g.degrees()
    removed = [False] * g.n
    queue = deque(v for v in range(g.n) if deg[v] == 1)
    while queue:
        v = queue.popleft()
        removed[v] = True
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    queue.append(u)
    core = [v for v in range(g.n) if not removed[v]]
    core_set = set(core)
    start = core[0]
    prev, cur = start, min(u for u in g.adj[start] if u in core_set)
    cycle = [start]
    while cur != start:
        cycle.append(cur)
        nxt = next(u for u in g.adj[cur] if u in core_set and u != prev)
        prev, cur = cur, nxt

    anchor: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for w in cycle:
        queue = deque([w])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if v in core_set or v in parent:
                    continue
                parent[v] = u
                anchor[v] = w
                depth[v] = depth.get(u, 0) + 1
                queue.append(v)
    return UnicyclicDecomposition(tuple(cycle), anchor, parent, depth)


def is_cycle_star(g: Graph, dec: UnicyclicDecomposition | None = None) -> bool:
    """Every non-cycle vertex is a leaf hanging directly off the cycle."""
    dec = dec or decompose_unicyclic(g)
    return all(dec.depth[v] == 1 and g.degree(v) == 1 for v in dec.anchor)


def is_cycle_path(g: Graph, dec: UnicyclicDecomposition | None = None) -> bool:
    """At most one pendant path per cycle vertex, attached by an end."""
    dec = dec or decompose_unicyclic(g)
    if any(g.degree(w) > 3 for w in dec.cycle):
        return False
    return all(g.degree(v) <= 2 for v in dec.anchor)


def branching_cycle_vertices(g: Graph, dec: UnicyclicDecomposition) -> list[int]:
    """Cycle vertices of degree >= 3, in cycle order."""
    return [w for w in dec.cycle if g.degree(w) >= 3]


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_cycle_star(c: int, leaf_counts: Sequence[int]) -> Graph:
    """Cycle ``0..c-1`` with ``leaf_counts[i]`` leaves on cycle vertex ``i``.

    Leaves are numbered from ``c`` upwards in anchor order.
    """
    counts = _per_vertex(c, leaf_counts)
    edges = [(i, (i + 1) % c) for i in range(c)]
    nxt = c
    for w, k in enumerate(counts):
        for _ in range(k):
            edges.append((w, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def make_cycle_path(c: int, path_lengths: Sequence[int]) -> Graph:
    """Cycle ``0..c-1`` with a pendant path of ``path_lengths[i]`` vertices on ``i``.

    Path vertices are numbered from ``c`` upwards in anchor order, each path
    numbered outward from its anchor.
    """
    lengths = _per_vertex(c, path_lengths)
    edges = [(i, (i + 1) % c) for i in range(c)]
    nxt = c
    for w, k in enumerate(lengths):
        prev = w
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def _per_vertex(c: int, values: Sequence[int]) -> list[int]:
    if c < 3:
        raise GraphError(f"cycle length must be at least 3, got {c}")
    values = list(values)
    if len(values) > c:
        raise GraphError(f"{len(values)} per-vertex values for a cycle of length {c}")
    if any(v < 0 for v in values):
        raise GraphError("per-vertex counts must be non-negative")
    return values + [0] * (c - len(values))


def cycle_star(k: int, m: int) -> Graph:
    """``CS_{k,m}``: a k-cycle with m leaves on vertex 0."""
    return make_cycle_star(k, [m])


def cycle_path(k: int, m: int) -> Graph:
    """``CP_{k,m}``: a k-cycle with a pendant path of m vertices on vertex 0."""
    return make_cycle_path(k, [m])
