"""Independent naive reference implementations used to cross-check the package.

Everything here favors obviousness over speed: plain double loops,
itertools-based enumeration, Floyd-Warshall reachability. These were
written first and the frozen constants in the tests come from them.
All functions work on bare tuples of ints, never on package types.
"""

from __future__ import annotations

import itertools

MASK64 = 2**64 - 1


def cell_counts(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, int, int]:
    """(wins_a, wins_b, ties) by comparing every value pair directly."""
    wins_a = wins_b = ties = 0
    for x in a:
        for y in b:
            if x > y:
                wins_a += 1
            elif x < y:
                wins_b += 1
            else:
                ties += 1
    return wins_a, wins_b, ties


def beats(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    wa, wb, _ = cell_counts(a, b)
    return wa > wb


def compositions(budget: int, k: int) -> list[tuple[int, ...]]:
    """Stars and bars: decode every bar placement into part sizes."""
    out = []
    for bars in itertools.combinations(range(budget + k - 1), k - 1):
        parts = []
        prev = -1
        for bar in bars:
            parts.append(bar - prev - 1)
            prev = bar
        parts.append(budget + k - 1 - prev - 1)
        out.append(tuple(parts))
    return out


def partitions(budget: int, k: int) -> list[tuple[int, ...]]:
    """Deduplicated canonical forms of all compositions, descending."""
    canon = {tuple(sorted(c, reverse=True)) for c in compositions(budget, k)}
    return sorted(canon, reverse=True)


def graph_relations(
    nodes: list[tuple[int, ...]],
) -> tuple[list[tuple[int, int, int]], list[tuple[int, int]]]:
    """(edges, draws) over node indices by scanning every unordered pair."""
    edges = []
    draws = []
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            wa, wb, _ = cell_counts(nodes[i], nodes[j])
            if wa > wb:
                edges.append((i, j, wa - wb))
            elif wb > wa:
                edges.append((j, i, wb - wa))
            else:
                draws.append((i, j))
    return edges, draws


def three_cycles(
    nodes: list[tuple[int, ...]], edges: list[tuple[int, int, int]]
) -> list[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]]:
    """Every directed triangle once, rotated to start at its smallest value."""
    wins = {(w, l) for w, l, _ in edges}
    seen = set()
    for x, y, z in itertools.combinations(range(len(nodes)), 3):
        for i, j, l in ((x, y, z), (x, z, y)):
            if (i, j) in wins and (j, l) in wins and (l, i) in wins:
                rotations = [(i, j, l), (j, l, i), (l, i, j)]
                start = min(rotations, key=lambda r: nodes[r[0]])
                seen.add(tuple(nodes[idx] for idx in start))
    return sorted(seen)


def scc_sizes(n: int, edges: list[tuple[int, int, int]]) -> list[int]:
    """Component sizes (descending) via full reachability closure."""
    reach = [[False] * n for _ in range(n)]
    for w, l, _ in edges:
        reach[w][l] = True
    for m in range(n):
        for i in range(n):
            if reach[i][m]:
                row_m = reach[m]
                row_i = reach[i]
                for j in range(n):
                    if row_m[j]:
                        row_i[j] = True
    assigned = [False] * n
    sizes = []
    for i in range(n):
        if assigned[i]:
            continue
        members = [
            j
            for j in range(n)
            if j == i or (reach[i][j] and reach[j][i])
        ]
        for j in members:
            assigned[j] = True
        sizes.append(len(members))
    return sorted(sizes, reverse=True)


def undominated(
    nodes: list[tuple[int, ...]], edges: list[tuple[int, int, int]]
) -> list[tuple[int, ...]]:
    losers = {l for _, l, _ in edges}
    return [p for i, p in enumerate(nodes) if i not in losers]


def counter(
    a: tuple[int, ...], candidates: list[tuple[int, ...]]
) -> tuple[tuple[int, ...], int] | None:
    """Max-margin strict beater of ``a``; margin ties go to the lex-smallest."""
    best = None
    for p in candidates:
        wa, wb, _ = cell_counts(p, a)
        if wa <= wb:
            continue
        margin = wa - wb
        if best is None or margin > best[1] or (margin == best[1] and p < best[0]):
            best = (p, margin)
    return best


def splitmix64_outputs(seed: int, n: int) -> list[int]:
    """Reference splitmix64 sequence, transcribed separately from the package."""
    out = []
    x = seed & MASK64
    for _ in range(n):
        x = (x + 0x9E3779B97F4A7C15) & MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        out.append((z ^ (z >> 31)) & MASK64)
    return out


def sim_games(
    a: tuple[int, ...],
    b: tuple[int, ...],
    seed: int,
    n_games: int,
    reroll: bool,
) -> tuple[int, int, int]:
    """(a_wins, b_wins, ties) from an independent replay of game sampling.

    Consumes one reference output per index draw, rejecting outputs at or
    above floor(2^64 / k) * k, and draws a's index before b's.
    """
    k = len(a)
    threshold = (2**64 // k) * k

    state = seed & MASK64

    def draw_index() -> int:
        nonlocal state
        while True:
            out = splitmix64_outputs(state, 1)[0]
            state = (state + 0x9E3779B97F4A7C15) & MASK64
            if out < threshold:
                return out % k

    a_wins = b_wins = ties = 0
    games = 0
    while games < n_games:
        x = a[draw_index()]
        y = b[draw_index()]
        if x > y:
            a_wins += 1
            games += 1
        elif x < y:
            b_wins += 1
            games += 1
        else:
            ties += 1
            if not reroll:
                games += 1
    return a_wins, b_wins, ties
