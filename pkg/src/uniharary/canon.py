"""Canonical certificates for small graphs.

The certificate is the lexicographically smallest graph6 adjacency bit string
over the vertex orderings reachable by individualisation and colour
refinement. Refinement starts from the degree partition, so only vertices
with matching local structure are ever permuted against each other, and
twin vertices (same neighbourhood) are branched on once.
"""

from __future__ import annotations

from uniharary.formats import emit_graph6
from uniharary.graph import Graph, GraphError

MAX_CERT_N = 12


def _refine(adj: tuple[tuple[int, ...], ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(sorted(cell_of[u] for u in adj[v]))
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _bits(g: Graph, order: list[int]) -> tuple[int, ...]:
    return tuple(
        1 if g.has_edge(order[i], order[j]) else 0
        for j in range(1, g.n)
        for i in range(j)
    )


def _twins(g: Graph, u: int, v: int) -> bool:
    nu = set(g.adj[u]) - {v}
    nv = set(g.adj[v]) - {u}
    return nu == nv


def _search(g: Graph, cells: list[list[int]]) -> tuple[tuple[int, ...], list[int]]:
    cells = _refine(g.adj, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = [c[0] for c in cells]
        return _bits(g, order), order
    reps: list[int] = []
    for v in cells[target]:
        if not any(_twins(g, v, r) for r in reps):
            reps.append(v)
    best = None
    for v in reps:
        rest = [u for u in cells[target] if u != v]
        branch = cells[:target] + [[v], rest] + cells[target + 1:]
        found = _search(g, branch)
        if best is None or found[0] < best[0]:
            best = found
    return best


def canonical_order(g: Graph) -> list[int]:
    """Vertex ordering such that ``order[i]`` becomes vertex ``i`` of the canonical form."""
    if g.n > MAX_CERT_N:
        raise GraphError(f"canonical certificates support n <= {MAX_CERT_N}, got {g.n}")
    if g.n == 0:
        return []
    return _search(g, [list(range(g.n))])[1]


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def canonical_certificate(g: Graph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    return emit_graph6(canonical_form(g)).encode("ascii")
