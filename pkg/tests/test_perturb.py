import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graph_from_seed
from metricdim.errors import (
    DisconnectedError,
    DisconnectsGraphError,
    EdgeExistsError,
    EdgeMissingError,
    NotResolvingError,
)
from metricdim.families import StripSpec, strip_canonical_set, strip_graph
from metricdim.generators import cycle_graph, path_graph
from metricdim.graph import add_edge, bfs_distances, build_graph, is_connected, remove_edge
from metricdim.perturb import (
    EditOp,
    EditStep,
    apply_edit_sequence,
    augment_addition,
    augment_removal,
    integer_interval,
    parse_edit_sequence,
)
from metricdim.resolving import is_resolving


def test_integer_interval():
    assert integer_interval(2, 5) == {2, 3, 4, 5}
    assert integer_interval(5, 2) == {2, 3, 4, 5}
    assert integer_interval(3, 3) == {3}


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_integer_interval_bounds(a, b):
    interval = integer_interval(a, b)
    assert min(interval) == min(a, b)
    assert max(interval) == max(a, b)
    assert len(interval) == abs(a - b) + 1


def _formula_witness(g, witness, u, v):
    # independent re-statement of the addition formula, on the public API
    captured = set()
    for w in witness:
        dist = bfs_distances(g, w)
        interval = integer_interval(dist[u], dist[v])
        captured.update(x for x in g.vertices() if dist[x] in interval)
    return tuple(witness) + tuple(sorted(captured - set(witness)))


def test_addition_on_path_captures_everything(abc_path):
    bigger = augment_addition(abc_path, ("a",), "a", "c")
    assert bigger == ("a", "b", "c")
    assert is_resolving(add_edge(abc_path, "a", "c"), bigger)


def test_addition_on_cycle_chord():
    g = cycle_graph(6)
    witness = ("c0", "c1")
    assert is_resolving(g, witness)
    bigger = augment_addition(g, witness, "c0", "c3")
    assert bigger == _formula_witness(g, witness, "c0", "c3")
    assert bigger[: len(witness)] == witness  # original order kept
    assert is_resolving(add_edge(g, "c0", "c3"), bigger)


def test_addition_measures_distances_in_unedited_graph():
    # On p0-p1-p2-p3 with witness (p0,), the interval from p0 spans 0..3 and
    # must capture p2; measuring in the edited graph would shrink it to 0..1.
    g = path_graph(4)
    bigger = augment_addition(g, ("p0",), "p0", "p3")
    assert "p2" in bigger
    assert bigger == ("p0", "p1", "p2", "p3")


def test_addition_errors(abc_path):
    with pytest.raises(EdgeExistsError):
        augment_addition(abc_path, ("a",), "a", "b")
    with pytest.raises(NotResolvingError):
        augment_addition(cycle_graph(4), ("c0",), "c0", "c2")
    with pytest.raises(DisconnectedError):
        augment_addition(build_graph([("a", "b"), ("c", "d")]), ("a", "c"), "a", "c")


def test_removal_on_cycle():
    c4 = cycle_graph(4)
    bigger = augment_removal(c4, ("c0", "c1"), "c2", "c3")
    assert bigger == ("c0", "c1", "c2", "c3")
    assert is_resolving(remove_edge(c4, "c2", "c3"), bigger)


def test_removal_on_triangle():
    g = cycle_graph(3)
    bigger = augment_removal(g, ("c0", "c1"), "c0", "c2")
    assert bigger == ("c0", "c1", "c2")
    assert is_resolving(remove_edge(g, "c0", "c2"), bigger)


def test_removal_endpoints_already_in_witness():
    g = strip_graph(StripSpec(1, True, 8))
    witness = tuple(w.label for w in strip_canonical_set(1))
    bigger = augment_removal(g, witness, "v0_0", "v0_1")
    assert bigger == witness  # both endpoints already present
    assert is_resolving(remove_edge(g, "v0_0", "v0_1"), bigger)


def test_removal_errors():
    c4 = cycle_graph(4)
    with pytest.raises(EdgeMissingError):
        augment_removal(c4, ("c0", "c1"), "c0", "c2")
    with pytest.raises(DisconnectsGraphError):
        augment_removal(path_graph(4), ("p0",), "p1", "p2")
    with pytest.raises(NotResolvingError):
        augment_removal(cycle_graph(5), ("c0",), "c0", "c1")


def test_empty_sequence_returns_input(abc_path):
    assert apply_edit_sequence(abc_path, ("a",), []) == [(abc_path, ("a",))]


def test_add_then_remove_round_trip():
    g = cycle_graph(6)
    steps = [
        EditStep(EditOp.ADD, "c0", "c3"),
        EditStep(EditOp.REMOVE, "c0", "c3"),
    ]
    trajectory = apply_edit_sequence(g, ("c0", "c1"), steps)
    assert len(trajectory) == 3
    final_graph, final_witness = trajectory[-1]
    assert final_graph == g
    assert set(final_witness) >= {"c0", "c1"}
    assert is_resolving(final_graph, final_witness)


def test_sequence_propagates_errors(abc_path):
    with pytest.raises(EdgeExistsError):
        apply_edit_sequence(abc_path, ("a",), [EditStep(EditOp.ADD, "a", "b")])


@given(st.integers(0, 100_000))
@settings(max_examples=60, deadline=None)
def test_random_edits_stay_resolving(seed):
    rng = random.Random(seed)
    g = connected_graph_from_seed(seed, max_n=10)
    witness = list(g.vertices())
    rng.shuffle(witness)
    witness = witness[: rng.randint(1, len(witness))]
    while not is_resolving(g, witness):
        witness.append(next(v for v in g.vertices() if v not in witness))
    steps = []
    current = g
    for _ in range(3):
        verts = current.vertices()
        non_edges = [
            (a, b)
            for i, a in enumerate(verts)
            for b in verts[i + 1 :]
            if not current.has_edge(a, b)
        ]
        removable = [
            e for e in current.edges() if is_connected(remove_edge(current, *e))
        ]
        options = []
        if non_edges:
            options.append(EditOp.ADD)
        if removable:
            options.append(EditOp.REMOVE)
        if not options:
            break
        op = rng.choice(options)
        if op is EditOp.ADD:
            u, v = rng.choice(non_edges)
            current = add_edge(current, u, v)
        else:
            u, v = rng.choice(removable)
            current = remove_edge(current, u, v)
        steps.append(EditStep(op, u, v))
    trajectory = apply_edit_sequence(g, witness, steps)
    for edited, transferred in trajectory:
        assert is_resolving(edited, transferred)


@given(st.integers(0, 100_000))
@settings(max_examples=60, deadline=None)
def test_addition_growth_is_bounded(seed):
    rng = random.Random(seed)
    g = connected_graph_from_seed(seed, max_n=9)
    verts = g.vertices()
    non_edges = [
        (a, b)
        for i, a in enumerate(verts)
        for b in verts[i + 1 :]
        if not g.has_edge(a, b)
    ]
    if not non_edges:
        return
    witness = list(g.vertices())[: rng.randint(1, len(verts))]
    while not is_resolving(g, witness):
        witness.append(next(v for v in verts if v not in witness))
    u, v = rng.choice(non_edges)
    bigger = augment_addition(g, witness, u, v)
    per_landmark = 0
    for w in witness:
        dist = bfs_distances(g, w)
        interval = integer_interval(dist[u], dist[v])
        per_landmark += sum(1 for x in verts if dist[x] in interval)
    assert len(witness) <= len(bigger) <= len(witness) + per_landmark
    assert len(bigger) <= len(verts)


def test_parse_edit_sequence():
    steps = parse_edit_sequence("# comment\nadd a b\n\nREMOVE b c\n")
    assert steps == [
        EditStep(EditOp.ADD, "a", "b"),
        EditStep(EditOp.REMOVE, "b", "c"),
    ]
    with pytest.raises(ValueError):
        parse_edit_sequence("toggle a b\n")
