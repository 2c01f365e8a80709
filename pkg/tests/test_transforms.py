from fractions import Fraction

import pytest

from conftest import naive_h_a, random_relabel, random_unicyclic
from uniharary.canon import canonical_certificate
from uniharary.graph import (
    GraphError,
    branching_cycle_vertices,
    build_graph,
    classify,
    cycle_path,
    cycle_star,
    decompose_unicyclic,
    is_cycle_path,
    is_cycle_star,
    make_cycle,
    make_cycle_path,
    make_cycle_star,
)
from uniharary.indices import cp3_closed_form, cs3_closed_form
from uniharary.transforms import (
    TransformPreconditionError,
    consolidate_triangle_leaves,
    cycle_shrink,
    leaf_lift,
    maximize_chain,
    merge_branches,
    minimize_chain,
    pair_delta_ledger,
    step_ledger,
    subtree_to_path,
    triangle_tail,
)


def same(g, h):
    return canonical_certificate(g) == canonical_certificate(h)


def n_branches(g):
    return len(branching_cycle_vertices(g, decompose_unicyclic(g)))


# -- leaf_lift ------------------------------------------------------------------


def test_leaf_lift_two_leaves_on_deep_vertex():
    # triangle 0-1-2, path 2-3-4, leaves 5,6 on 4
    g = build_graph(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (4, 6)])
    h, step = leaf_lift(g)
    assert step.roles["x"] == 3 and step.roles["y"] == 4
    assert h.has_edge(3, 5) and h.has_edge(3, 6)
    assert naive_h_a(h) > naive_h_a(g)
    assert step.h_a_before == naive_h_a(g) and step.h_a_after == naive_h_a(h)


def test_leaf_lift_cp32_to_cs32():
    h, step = leaf_lift(cycle_path(3, 2))
    assert same(h, cycle_star(3, 2))
    assert (step.h_a_before, step.h_a_after) == (30, 33)


def test_leaf_lift_rejects_cycle_star():
    with pytest.raises(TransformPreconditionError):
        leaf_lift(cycle_star(3, 2))


def test_leaf_lift_compensation_identities(rng):
    """Pair (y, x) contributes nothing; each moved leaf z has Δ(y,z) + Δ(x,z) > 0."""
    checked = 0
    for _ in range(300):
        g = random_unicyclic(rng, rng.randint(5, 12))
        if is_cycle_star(g):
            continue
        _, step = leaf_lift(g)
        ledger = step_ledger(g, step, "maximize")
        x, y = step.roles["x"], step.roles["y"]
        assert ledger[x, y] == 0
        for z in step.roles["z"]:
            assert ledger[y, z] + ledger[x, z] > 0
        checked += 1
    assert checked > 100


# -- cycle_shrink -----------------------------------------------------------------


def test_cycle_shrink_cs41():
    h, step = cycle_shrink(cycle_star(4, 1))
    assert same(h, cycle_star(3, 2))
    assert (step.h_a_before, step.h_a_after) == (Fraction(61, 2), 33)


def test_cycle_shrink_c6():
    h, step = cycle_shrink(make_cycle(6))
    assert same(h, cycle_star(5, 1))
    assert step.h_a_before == 40
    assert step.h_a_after == naive_h_a(cycle_star(5, 1)) == 42


def test_cycle_shrink_preconditions():
    with pytest.raises(TransformPreconditionError):
        cycle_shrink(cycle_star(3, 2))
    with pytest.raises(TransformPreconditionError):
        cycle_shrink(cycle_path(4, 2))


def test_odd_cycle_shrink_opposite_min_degree():
    # C_7 with leaves everywhere except vertex 3
    g = make_cycle_star(7, [1, 1, 1, 0, 1, 1, 1])
    _, step = cycle_shrink(g)
    assert step.roles["opposite"] == 3
    assert {step.roles["w0"], step.roles["w1"]} == {0, 6}


def test_pure_odd_cycle_endpoint_inequality():
    for n in range(5, 26, 2):
        trace = maximize_chain(make_cycle(n))
        assert trace.steps[-1].h_a_after == cs3_closed_form(n) > trace.steps[0].h_a_before


# -- consolidate_triangle_leaves ----------------------------------------------------


def test_consolidate_one_and_one():
    h, step = consolidate_triangle_leaves(make_cycle_star(3, [1, 1]))
    assert same(h, cycle_star(3, 2))
    assert (step.h_a_before, step.h_a_after) == (Fraction(95, 3), 33)


def test_consolidate_two_one_zero():
    h, _ = consolidate_triangle_leaves(make_cycle_star(3, [2, 1]))
    assert same(h, cycle_star(3, 3))


def test_consolidate_rejects_single_branch():
    with pytest.raises(TransformPreconditionError):
        consolidate_triangle_leaves(cycle_star(3, 4))


# -- subtree_to_path ----------------------------------------------------------------


def test_subtree_to_path_fork_becomes_path():
    # triangle 0-1-2, vertex 3 on 2 with leaves 4, 5
    g = build_graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (3, 5)])
    h, step = subtree_to_path(g)
    assert same(h, cycle_path(3, 3))
    assert step.h_a_after == naive_h_a(cycle_path(3, 3)) < step.h_a_before == naive_h_a(g)


def test_subtree_to_path_iterates_cs33_to_cp33():
    g = cycle_star(3, 3)
    h, _ = subtree_to_path(g)
    assert not is_cycle_path(h)
    h, _ = subtree_to_path(h)
    assert same(h, cycle_path(3, 3))


def test_subtree_to_path_rejects_cycle_path():
    with pytest.raises(TransformPreconditionError):
        subtree_to_path(cycle_path(4, 2))


# -- merge_branches ------------------------------------------------------------------


def test_merge_case_2c():
    g = make_cycle_path(4, [1, 0, 1])
    h, step = merge_branches(g)
    assert step.roles["case"] == "2c"
    assert same(h, cycle_path(4, 2))
    assert step.h_a_after < step.h_a_before


def test_merge_case_1():
    g = make_cycle_path(3, [1, 1])
    h, step = merge_branches(g)
    assert step.roles["case"] == "1"
    assert same(h, cycle_path(3, 2))
    assert (step.h_a_before, step.h_a_after) == (Fraction(95, 3), 30)


def test_merge_case_2a_c12():
    g = make_cycle_path(12, [1, 0, 0, 1, 0, 0, 1, 0, 0, 1])
    h, step = merge_branches(g)
    assert step.roles["case"] == "2a"
    assert step.roles["side_condition"] is True
    assert step.h_a_after == naive_h_a(h) < step.h_a_before == naive_h_a(g)
    # equal path lengths: both paths are absorbed, so 4 branches drop to 2
    assert n_branches(h) == 2
    assert decompose_unicyclic(h).c == 14
    assert is_cycle_path(h)


def test_merge_case_2b():
    g = make_cycle_path(12, [1, 0, 0, 0, 2, 0, 0, 0, 0, 1])
    h, step = merge_branches(g)
    assert step.roles["case"] == "2b"
    assert n_branches(h) == 2
    assert step.h_a_after < step.h_a_before


def test_merge_rejects_single_branch():
    with pytest.raises(TransformPreconditionError):
        merge_branches(cycle_path(5, 3))


# -- triangle_tail -------------------------------------------------------------------


def test_triangle_tail_cp41():
    h, step = triangle_tail(cycle_path(4, 1))
    assert same(h, cycle_path(3, 2))
    assert (step.h_a_before, step.h_a_after) == (Fraction(61, 2), 30)


def test_triangle_tail_c6():
    h, step = triangle_tail(make_cycle(6))
    assert same(h, cycle_path(3, 3))
    assert (step.h_a_before, step.h_a_after) == (40, Fraction(79, 2))


def test_triangle_tail_c5_is_not_strict():
    # the n=5 tie: C_5 and CP_(3,2) both have index 30
    h, step = triangle_tail(make_cycle(5))
    assert same(h, cycle_path(3, 2))
    assert step.h_a_before == step.h_a_after == 30


def test_triangle_tail_preconditions():
    with pytest.raises(TransformPreconditionError, match="20 < 21"):
        triangle_tail(make_cycle(4))
    with pytest.raises(TransformPreconditionError):
        triangle_tail(cycle_path(3, 3))
    with pytest.raises(TransformPreconditionError):
        triangle_tail(make_cycle_path(6, [1, 0, 1]))


# -- chains ---------------------------------------------------------------------------


def test_chains_random_n8(rng):
    for _ in range(20):
        g = random_unicyclic(rng, 8)
        up = maximize_chain(g)
        assert same(up.final, cycle_star(3, 5))
        assert up.steps[-1].h_a_after if up.steps else True
        down = minimize_chain(g)
        assert same(down.final, cycle_path(3, 5))
        assert not up.monotone_violations() and not down.monotone_violations()
    assert cs3_closed_form(8) == 87


def test_chain_values_hit_closed_forms(rng):
    g = random_unicyclic(rng, 8)
    assert maximize_chain(g).steps[-1].h_a_after == cs3_closed_form(8)
    assert minimize_chain(g).steps[-1].h_a_after == cp3_closed_form(8)


def test_maximize_fixed_point():
    trace = maximize_chain(cycle_star(3, 5))
    assert trace.steps == ()
    assert trace.final == trace.initial


def test_minimize_rejects_n4():
    with pytest.raises(TransformPreconditionError, match="C_4"):
        minimize_chain(make_cycle(4))


def test_rewrites_preserve_counts(rng):
    for _ in range(200):
        g = random_unicyclic(rng, rng.randint(5, 11))
        for trace in (maximize_chain(g), minimize_chain(g)):
            for before, after, step in zip(trace.graphs, trace.graphs[1:], trace.steps):
                assert len(step.edges_removed) == len(step.edges_added)
                assert after.n == before.n and after.m == before.m
                assert classify(after) == "unicyclic"


def test_trace_serialisation():
    trace = minimize_chain(make_cycle_path(4, [1, 0, 1]))
    text = trace.to_text()
    assert text.splitlines()[0] == "minimize trace: 2 step(s)"
    assert "merge_branches [2c]" in text
    doc = trace.to_dict()
    assert doc["steps"][0]["h_a_before"] == "253/6"
    assert doc["h_a_final"] == "79/2"


# -- ledger ----------------------------------------------------------------------------


def test_ledger_identity_is_zero():
    g = cycle_path(4, 3)
    ledger = pair_delta_ledger(g, g)
    assert set(ledger.entries.values()) == {0}
    assert len(ledger.entries) == 21


def test_ledger_leaf_lift_sum():
    g = cycle_path(3, 2)
    h, step = leaf_lift(g)
    assert pair_delta_ledger(g, h, orientation="maximize").total == 3


def test_ledger_triangle_tail_sum():
    g = cycle_path(4, 1)
    h, _ = triangle_tail(g)
    assert pair_delta_ledger(g, h, orientation="minimize").total == Fraction(1, 2)


def test_ledger_with_correspondence(rng):
    g = random_unicyclic(rng, 9)
    perm = list(range(9))
    rng.shuffle(perm)
    h = g.relabel(perm)
    ledger = pair_delta_ledger(g, h, perm)
    assert set(ledger.entries.values()) == {0}


def test_ledger_errors():
    with pytest.raises(GraphError):
        pair_delta_ledger(make_cycle(5), make_cycle(6))
    with pytest.raises(GraphError):
        pair_delta_ledger(make_cycle(5), make_cycle(5), [0, 0, 1, 2, 3])


def test_relabelled_inputs_reach_same_extremes(rng):
    g = make_cycle_star(5, [2, 0, 1, 0, 3])
    for _ in range(10):
        h = random_relabel(g, rng)
        assert same(maximize_chain(h).final, cycle_star(3, 8))
        assert same(minimize_chain(h).final, cycle_path(3, 8))
