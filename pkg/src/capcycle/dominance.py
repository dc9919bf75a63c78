"""Strict-dominance digraph over all capped strategies.

Nodes are canonical partitions of the budget; a directed edge means the
winner takes strictly more matchup cells than the loser. The interesting
structure is the intransitive part: directed 3-cycles and nontrivial
strongly connected components, plus the set of strategies nothing beats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .allocations import (
    DEFAULT_SPACE_LIMIT,
    Allocation,
    Partition,
    enumerate_partitions,
)
from .matchups import matchup_table

Edge = tuple[int, int, int]  # (winner index, loser index, margin > 0)
Cycle = tuple[Partition, Partition, Partition]


@dataclass(frozen=True)
class DominanceGraph:
    """Exhaustive pairwise classification of the capped strategy space.

    Every unordered node pair appears exactly once, either as a strict
    edge (with its positive win margin) or as a draw pair. Nodes are in
    lexicographically descending order, matching enumerate_partitions.
    """

    budget: int
    k: int
    nodes: tuple[Partition, ...]
    edges: tuple[Edge, ...]
    draw_pairs: tuple[tuple[int, int], ...]

    @cached_property
    def _succ_masks(self) -> list[int]:
        masks = [0] * len(self.nodes)
        for w, l, _ in self.edges:
            masks[w] |= 1 << l
        return masks

    @cached_property
    def _pred_masks(self) -> list[int]:
        masks = [0] * len(self.nodes)
        for w, l, _ in self.edges:
            masks[l] |= 1 << w
        return masks


@dataclass(frozen=True)
class CycleReport:
    """Summary of the intransitive structure of a dominance graph."""

    three_cycles: tuple[Cycle, ...]
    scc_sizes: tuple[int, ...]
    undominated: tuple[Partition, ...]


@dataclass(frozen=True)
class ClaimVerdict:
    """Whether every capped strategy has a strictly better same-cap answer.

    ``counterexamples`` lists the strategies with no strict dominator;
    the claim holds exactly when that list is empty.
    """

    holds: bool
    counterexamples: tuple[Partition, ...]
    budget: int
    k: int


def _pairwise_wins(nodes: list[Partition], budget: int) -> np.ndarray:
    """wins[i, j] = number of cells partition i takes from partition j.

    Histogram trick: with face-count vectors C_i over values 0..budget,
    wins[i, j] = sum_v C_i[v] * (#faces of j below v), a single matmul.
    Counts are tiny, so float64 products are exact.
    """
    n = len(nodes)
    values = np.array([p.values for p in nodes], dtype=np.int64)
    face_counts = np.zeros((n, budget + 1), dtype=np.float64)
    for v in range(budget + 1):
        face_counts[:, v] = (values == v).sum(axis=1)
    below = np.zeros_like(face_counts)
    below[:, 1:] = np.cumsum(face_counts, axis=1)[:, :-1]
    return (face_counts @ below.T).astype(np.int64)


def build_graph(budget: int, k: int, limit: int = DEFAULT_SPACE_LIMIT) -> DominanceGraph:
    """Classify every pair of capped partitions into strict edges and draws."""
    nodes = enumerate_partitions(budget, k, limit)
    wins = _pairwise_wins(nodes, budget)
    margin = wins - wins.T
    winner_idx, loser_idx = np.nonzero(margin > 0)
    edges = tuple(
        (int(w), int(l), int(margin[w, l])) for w, l in zip(winner_idx, loser_idx)
    )
    di, dj = np.nonzero(np.triu(margin == 0, k=1))
    draws = tuple((int(i), int(j)) for i, j in zip(di, dj))
    return DominanceGraph(budget, k, tuple(nodes), edges, draws)


def find_three_cycles(graph: DominanceGraph) -> list[Cycle]:
    """All directed 3-cycles, each once, smallest node (by value) first.

    Enumeration runs over bitmask adjacency. With nodes in descending
    value order, the lexicographically smallest node of a cycle is its
    highest index, so iterating indices high-to-low yields the canonical
    rotations already sorted by ascending node values.
    """
    nodes = graph.nodes
    succ = graph._succ_masks
    pred = graph._pred_masks
    cycles: list[Cycle] = []
    for x in range(len(nodes) - 1, -1, -1):
        below_x = (1 << x) - 1
        ys = succ[x] & below_x
        while ys:
            y = ys.bit_length() - 1
            ys ^= 1 << y
            zs = succ[y] & pred[x] & below_x
            while zs:
                z = zs.bit_length() - 1
                zs ^= 1 << z
                cycles.append((nodes[x], nodes[y], nodes[z]))
    return cycles


def strongly_connected_components(graph: DominanceGraph) -> list[tuple[int, ...]]:
    """SCCs over strict edges as sorted index tuples, ordered by smallest member."""
    n = len(graph.nodes)
    if not graph.edges:
        return [(i,) for i in range(n)]
    rows = np.fromiter((w for w, _, _ in graph.edges), dtype=np.int64)
    cols = np.fromiter((l for _, l, _ in graph.edges), dtype=np.int64)
    data = np.ones(len(graph.edges), dtype=np.int8)
    adjacency = csr_matrix((data, (rows, cols)), shape=(n, n))
    _, labels = connected_components(adjacency, directed=True, connection="strong")
    groups: dict[int, list[int]] = {}
    for idx, label in enumerate(labels):
        groups.setdefault(int(label), []).append(idx)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


def undominated(graph: DominanceGraph) -> list[Partition]:
    """Nodes with no incoming strict edge, in node order."""
    beaten = set()
    for _, loser, _ in graph.edges:
        beaten.add(loser)
    return [p for i, p in enumerate(graph.nodes) if i not in beaten]


def counter_strategy(
    a: Allocation, budget: int | None = None, limit: int = DEFAULT_SPACE_LIMIT
) -> tuple[Partition, int] | None:
    """Best same-cap answer to ``a``: a strict dominator of maximum margin.

    Ties on margin break to the lexicographically smallest partition.
    Returns None when nothing beats ``a``, which is a legitimate finding,
    not an error.
    """
    if budget is None:
        budget = a.budget
    elif budget != a.budget:
        raise ValueError(
            f"counter search budget {budget} must equal the allocation's budget {a.budget}"
        )
    best: tuple[Partition, int] | None = None
    for candidate in enumerate_partitions(budget, a.k, limit):
        table = matchup_table(candidate, a)
        margin = table.wins_a - table.wins_b
        if margin <= 0:
            continue
        if (
            best is None
            or margin > best[1]
            or (margin == best[1] and candidate.values < best[0].values)
        ):
            best = (candidate, margin)
    return best


def best_counters(graph: DominanceGraph) -> list[tuple[Partition, int] | None]:
    """Per node, the maximum-margin strict dominator (same tie-break), or None.

    Same answer as running counter_strategy on every node, computed in one
    pass over the edge list.
    """
    best: dict[int, tuple[int, int]] = {}  # loser -> (margin, winner index)
    nodes = graph.nodes
    for w, l, m in graph.edges:
        cur = best.get(l)
        # Descending node order: larger index == lexicographically smaller value.
        if cur is None or m > cur[0] or (m == cur[0] and w > cur[1]):
            best[l] = (m, w)
    return [
        (nodes[best[i][1]], best[i][0]) if i in best else None for i in range(len(nodes))
    ]


def cycle_report(graph: DominanceGraph) -> CycleReport:
    """Bundle the intransitivity summary for a built graph."""
    sccs = strongly_connected_components(graph)
    return CycleReport(
        three_cycles=tuple(find_three_cycles(graph)),
        scc_sizes=tuple(sorted((len(s) for s in sccs), reverse=True)),
        undominated=tuple(undominated(graph)),
    )


def verify_universal_counter_claim(
    budget: int, k: int, limit: int = DEFAULT_SPACE_LIMIT
) -> ClaimVerdict:
    """Check whether every capped strategy has a same-cap strict dominator.

    The outcome is reported, never assumed: undominated strategies are
    returned as counterexamples when they exist.
    """
    graph = build_graph(budget, k, limit)
    counterexamples = tuple(undominated(graph))
    return ClaimVerdict(
        holds=not counterexamples,
        counterexamples=counterexamples,
        budget=budget,
        k=k,
    )
