"""Metric codes, resolving-set verification, and exact metric dimension.

The exact search enumerates candidate landmark sets by increasing size and,
within one size, in lexicographic label order, so the reported witness is
always the least one. A landmark set resolves the graph exactly when every
unordered vertex pair is separated by some landmark, which turns the search
into a covering problem over vertex pairs. Pruning is coverage-based: a
branch dies as soon as a still-unseparated pair has no potential separator
left among the remaining candidates (this subsumes the classic twin-pair
rule: a twin pair is separated only by its own two members), or when the
remaining picks cannot plausibly separate the remaining pairs.

`metric_dimension_reference` is the unpruned baseline the pruned search is
audited against; it shares no machinery with the fast path beyond BFS.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    BlockOverlapError,
    BudgetError,
    DisconnectedError,
    EmptyLandmarksError,
    ExceededError,
)
from .graph import (
    UNREACHABLE,
    Distance,
    Graph,
    _bfs_levels,
    bfs_distances,
    is_connected,
    max_degree,
)


@dataclass(frozen=True)
class MetricCode:
    """Ordered distance vector of one vertex to an ordered landmark list."""

    landmarks: tuple[str, ...]
    entries: tuple[Distance, ...]


@dataclass(frozen=True)
class DimensionResult:
    """Outcome of an exact metric-dimension search."""

    dimension: int
    witness: tuple[str, ...]
    exhaustive: bool
    nodes_explored: int


def metric_code(graph: Graph, landmarks: Iterable[str], vertex: str) -> MetricCode:
    """Distance vector of `vertex` to the ordered `landmarks`."""
    landmarks = tuple(landmarks)
    if not landmarks:
        raise EmptyLandmarksError("need at least one landmark")
    for w in landmarks:
        graph._require(w)
    dist = bfs_distances(graph, vertex)
    return MetricCode(landmarks, tuple(dist[w] for w in landmarks))


def _code_table(
    graph: Graph, landmarks: Sequence[str]
) -> dict[str, tuple[Distance, ...]]:
    """Codes of every vertex with respect to `landmarks` (one BFS each)."""
    columns = []
    for w in landmarks:
        graph._require(w)
        columns.append(_bfs_levels(graph.adjacency, w))
    return {
        v: tuple(col.get(v, UNREACHABLE) for col in columns)
        for v in graph.vertices()
    }


def is_resolving(graph: Graph, landmarks: Iterable[str]) -> bool:
    """Whether all vertices get pairwise distinct codes w.r.t. `landmarks`."""
    table = _code_table(graph, tuple(landmarks))
    return len(set(table.values())) == len(table)


def find_unresolved_pair(
    graph: Graph, landmarks: Iterable[str]
) -> tuple[str, str] | None:
    """Lexicographically least vertex pair sharing a code, or None."""
    table = _code_table(graph, tuple(landmarks))
    groups: dict[tuple[Distance, ...], list[str]] = {}
    for v in graph.vertices():  # sorted, so group members stay sorted
        groups.setdefault(table[v], []).append(v)
    candidates = [(g[0], g[1]) for g in groups.values() if len(g) >= 2]
    return min(candidates) if candidates else None


def _distance_rows(graph: Graph) -> tuple[tuple[str, ...], list[list[int]]]:
    """Vertex order and full integer distance matrix (graph must be connected)."""
    verts = graph.vertices()
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        levels = _bfs_levels(graph.adjacency, v)
        row = [0] * len(verts)
        for u, d in levels.items():
            row[index[u]] = d
        rows.append(row)
    return verts, rows


def _separation_masks(rows: list[list[int]]) -> tuple[list[int], int]:
    """Per-vertex bitmask over vertex pairs: bit set iff the vertex separates the pair.

    Pair (i, j), i < j, occupies bit offset[i] + (j - i - 1). A vertex fails
    to separate exactly the pairs it sees at equal distance, so the mask is
    built by grouping the distance row.
    """
    n = len(rows)
    npairs = n * (n - 1) // 2
    full = (1 << npairs) - 1
    offset = [0] * n
    acc = 0
    for i in range(n):
        offset[i] = acc
        acc += n - i - 1
    masks = []
    for row in rows:
        by_distance: dict[int, list[int]] = {}
        for i, d in enumerate(row):
            by_distance.setdefault(d, []).append(i)
        same = 0
        for group in by_distance.values():
            for pos, i in enumerate(group):
                base = offset[i] - i - 1
                for j in group[pos + 1 :]:
                    same |= 1 << (base + j)
        masks.append(full ^ same)
    return masks, full


def _min_size_from_degree(delta: int) -> int:
    """Smallest k not excluded by the max-degree bound (degree <= 3^k - 1)."""
    k = 1
    while 3**k - 1 < delta:
        k += 1
    return k


def metric_dimension_exact(
    graph: Graph,
    max_k: int | None = None,
    *,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> DimensionResult:
    """Exact metric dimension with the lexicographically least minimum witness.

    Sizes are tried in increasing order starting from the degree lower
    bound; within a size, candidate sets are visited in lexicographic order
    over the sorted vertex labels, and the first resolving set found is
    returned. Raises Exceeded when no resolving set of size <= max_k
    exists, and Budget when the node or time budget runs out first.
    """
    if not is_connected(graph):
        raise DisconnectedError("exact dimension requires a connected graph")
    verts, rows = _distance_rows(graph)
    n = len(verts)
    if n == 0:
        return DimensionResult(0, (), True, 0)
    if max_k is None:
        max_k = max(1, n - 1)
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    masks, full = _separation_masks(rows)

    suffix_or = [0] * (n + 1)
    suffix_best = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_or[i] = suffix_or[i + 1] | masks[i]
        suffix_best[i] = max(suffix_best[i + 1], masks[i].bit_count())

    nodes = 0
    deadline = time.monotonic() + time_budget if time_budget is not None else None

    def search(start: int, need: int, covered: int) -> list[int] | None:
        nonlocal nodes
        uncovered = full & ~covered
        if need == 0:
            return [] if not uncovered else None
        if not uncovered:
            # already covering: the least completion pads with the smallest
            # remaining vertices (only reachable when k exceeds the minimum,
            # or on graphs with a single vertex)
            if n - start < need:
                return None
            return list(range(start, start + need))
        if uncovered & ~suffix_or[start]:
            return None  # some pair has no separator left
        best = suffix_best[start]
        if best == 0 or -(-uncovered.bit_count() // best) > need:
            return None
        for v in range(start, n - need + 1):
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise BudgetError(f"node budget {node_budget} exhausted")
            if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
                raise BudgetError(f"time budget {time_budget}s exhausted")
            rest = search(v + 1, need - 1, covered | masks[v])
            if rest is not None:
                return [v, *rest]
        return None

    k_min = max(1, _min_size_from_degree(max_degree(graph)))
    for k in range(k_min, min(max_k, n) + 1):
        picked = search(0, k, 0)
        if picked is not None:
            witness = tuple(verts[i] for i in picked)
            return DimensionResult(k, witness, True, nodes)
    raise ExceededError(f"no resolving set of size <= {max_k}")


def metric_dimension_reference(graph: Graph, max_k: int | None = None) -> DimensionResult:
    """Unpruned exhaustive baseline: try every subset by size, then lex order.

    Audit oracle for `metric_dimension_exact`; deliberately shares nothing
    with it beyond BFS.
    """
    if not is_connected(graph):
        raise DisconnectedError("exact dimension requires a connected graph")
    verts = graph.vertices()
    n = len(verts)
    if n == 0:
        return DimensionResult(0, (), True, 0)
    if max_k is None:
        max_k = max(1, n - 1)
    checked = 0
    for k in range(1, min(max_k, n) + 1):
        for combo in combinations(verts, k):
            checked += 1
            if is_resolving(graph, combo):
                return DimensionResult(k, combo, True, checked)
    raise ExceededError(f"no resolving set of size <= {max_k}")


def greedy_resolving_set(graph: Graph) -> tuple[str, ...]:
    """Greedy resolving set: repeatedly add the vertex separating the most
    still-equal code pairs, ties broken by least label. Not necessarily
    minimum; the result is verified before it is returned.
    """
    if not is_connected(graph):
        raise DisconnectedError("greedy selection requires a connected graph")
    verts = graph.vertices()
    if len(verts) <= 1:
        return ()
    rows = {v: _bfs_levels(graph.adjacency, v) for v in verts}
    codes: dict[str, tuple[int, ...]] = {v: () for v in verts}
    chosen: list[str] = []
    taken: set[str] = set()
    while True:
        groups: dict[tuple[int, ...], list[str]] = {}
        for v in verts:
            groups.setdefault(codes[v], []).append(v)
        clashes = [g for g in groups.values() if len(g) >= 2]
        if not clashes:
            break
        best_vertex = None
        best_score = 0
        for w in verts:
            if w in taken:
                continue
            row = rows[w]
            score = 0
            for group in clashes:
                parts: dict[int, int] = {}
                for x in group:
                    parts[row[x]] = parts.get(row[x], 0) + 1
                m = len(group)
                score += m * (m - 1) // 2 - sum(c * (c - 1) // 2 for c in parts.values())
            if score > best_score:
                best_vertex, best_score = w, score
        assert best_vertex is not None  # a clash member always separates itself
        chosen.append(best_vertex)
        taken.add(best_vertex)
        row = rows[best_vertex]
        codes = {v: codes[v] + (row[v],) for v in verts}
    result = tuple(chosen)
    if not is_resolving(graph, result):
        raise RuntimeError("greedy selection produced a non-resolving set")
    return result


def block_lower_bound_check(
    graph: Graph,
    blocks: Sequence[Iterable[str]],
    reps: Sequence[str],
) -> bool:
    """Certify that any resolving set must hit all blocks except at most one.

    True iff for every pair of blocks, no vertex outside their union
    separates the two representatives. A True answer certifies that the
    metric dimension is at least (number of blocks) - 1.
    """
    frozen = [frozenset(b) for b in blocks]
    for block in frozen:
        for v in block:
            graph._require(v)
    for a, b in combinations(frozen, 2):
        if a & b:
            raise BlockOverlapError(f"blocks share vertices: {sorted(a & b)}")
    if len(reps) != len(frozen):
        raise ValueError("need exactly one representative per block")
    for rep, block in zip(reps, frozen):
        graph._require(rep)
        if rep not in block:
            raise ValueError(f"representative {rep!r} not in its block")
    rep_dist: list[Mapping[str, int]] = [
        _bfs_levels(graph.adjacency, rep) for rep in reps
    ]
    for i, j in combinations(range(len(frozen)), 2):
        excluded = frozen[i] | frozen[j]
        di, dj = rep_dist[i], rep_dist[j]
        for x in graph.vertices():
            if x in excluded:
                continue
            if di.get(x, UNREACHABLE) != dj.get(x, UNREACHABLE):
                return False
    return True
