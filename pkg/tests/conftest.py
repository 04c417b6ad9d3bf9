"""Shared test helpers: independent reference implementations kept
deliberately naive so they cannot share bugs with the package code."""

import itertools
import random

from monocover.graph import ColoredGraph, build_graph


def rand_colored(n: int, p_edge: float, seed: int, r: int = 2) -> ColoredGraph:
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_edge:
                edges.append((u, v, rng.randrange(1, r + 1)))
    return build_graph(n, r, edges)


def complete_colored(n: int, seed: int, r: int = 2) -> ColoredGraph:
    rng = random.Random(seed)
    edges = [(u, v, rng.randrange(1, r + 1)) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, r, edges)


def fw_diameter(n: int, edge_pairs) -> float:
    """Floyd-Warshall diameter over the given vertex count; inf when
    disconnected, 0 for n <= 1."""
    INF = float("inf")
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edge_pairs:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return max((dist[i][j] for i in range(n) for j in range(n)), default=0)


def mono_edge_pairs(G: ColoredGraph, color: int, vertices) -> list[tuple[int, int]]:
    vs = sorted(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    return [
        (pos[u], pos[v])
        for (u, v), c in G.edge_color.items()
        if c == color and u in pos and v in pos
    ]


def brute_alpha(G: ColoredGraph) -> int:
    best = 0
    for k in range(G.n, 0, -1):
        for sub in itertools.combinations(range(G.n), k):
            if all(not (G.adj_rows[u] >> v) & 1 for u, v in itertools.combinations(sub, 2)):
                return k
    return best


def qualifying_masks(G: ColoredGraph, color: int, d: int) -> list[int]:
    """Reference family via Floyd-Warshall: every nonempty vertex set whose
    induced color subgraph has diameter <= d."""
    out = []
    for m in range(1, 1 << G.n):
        verts = [v for v in range(G.n) if (m >> v) & 1]
        if fw_diameter(len(verts), mono_edge_pairs(G, color, verts)) <= d:
            out.append(m)
    return out


def dp_min_cover(G: ColoredGraph, d: int) -> int:
    """Independent reference: exact set cover over the unrestricted family of
    qualifying sets, breadth-first over covered-vertex masks."""
    full = (1 << G.n) - 1
    if full == 0:
        return 0
    by_vertex: list[list[int]] = [[] for _ in range(G.n)]
    for color in range(1, G.r + 1):
        for m in qualifying_masks(G, color, d):
            mm = m
            while mm:
                b = mm & -mm
                mm ^= b
                by_vertex[b.bit_length() - 1].append(m)
    dp = {0: 0}
    frontier = [0]
    steps = 0
    while frontier:
        steps += 1
        nxt = set()
        for cov in frontier:
            v = ((full & ~cov) & -(full & ~cov)).bit_length() - 1
            for m in by_vertex[v]:
                new = cov | m
                if new == full:
                    return steps
                if new not in dp:
                    dp[new] = steps
                    nxt.add(new)
        frontier = sorted(nxt)
    return G.n + 1
