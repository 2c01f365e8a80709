import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest

from uniharary.enumeration import prufer_to_edges
from uniharary.graph import Graph, build_graph, make_cycle_path, make_cycle_star

INF = float("inf")


def floyd_warshall(g: Graph):
    """Naive all-pairs oracle, independent of the BFS path."""
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def naive_h_a(g: Graph) -> Fraction:
    """Ordered double loop over Floyd-Warshall distances, halved."""
    d = floyd_warshall(g)
    deg = [len(a) for a in g.adj]
    total = Fraction(0)
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                total += Fraction(deg[u] + deg[v], d[u][v])
    return total / 2


def random_relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_unicyclic(rng: random.Random, n: int) -> Graph:
    """Random labelled tree (uniform Prüfer sequence) plus one random extra edge."""
    seq = tuple(rng.randrange(n) for _ in range(n - 2))
    tree = build_graph(n, prufer_to_edges(seq, n))
    non_edges = [e for e in itertools.combinations(range(n), 2) if not tree.has_edge(*e)]
    return tree.rewire([], [rng.choice(non_edges)])


def random_cycle_path(rng: random.Random, lo: int, hi: int) -> Graph:
    while True:
        c = rng.randint(3, hi)
        g = make_cycle_path(c, [rng.choice([0, 0, 0, 1, 2, 3]) for _ in range(c)])
        if lo <= g.n <= hi:
            return random_relabel(g, rng)


def random_cycle_star(rng: random.Random, lo: int, hi: int) -> Graph:
    while True:
        c = rng.randint(3, hi)
        g = make_cycle_star(c, [rng.choice([0, 0, 1, 2]) for _ in range(c)])
        if lo <= g.n <= hi:
            return random_relabel(g, rng)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def exhaustive_unicyclic_classes(n: int) -> list[nx.Graph]:
    """Independent oracle: every n-edge graph on n vertices, connected ones, deduped by networkx."""
    reps = []
    for edges in itertools.combinations(itertools.combinations(range(n), 2), n):
        h = nx.Graph(list(edges))
        if h.number_of_nodes() != n or not nx.is_connected(h):
            continue
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    return reps


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20261016)
