"""Exact brute-force cover oracles at desk scale.

Enumerates, per color, all vertex sets whose induced color subgraph has
diameter at most d, keeps only the inclusion-maximal ones, and answers two
exact questions over that family: the minimum number of components covering
all vertices, and whether a cover with prescribed per-component bounds
exists. Restricting to maximal candidates is lossless because any cover
component extends to a maximal candidate of the same color and bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    ColoredGraph,
    CoverCertificate,
    CoverComponent,
    LimitExceeded,
    _mask_diam_le,
    _mask_diameter,
    mask_of,
    vertex_set,
)

DEFAULT_MAX_N = 18


@dataclass(frozen=True)
class CandidateFamily:
    """All inclusion-maximal (color, vertex set) pairs of diameter <= d."""

    d: int
    candidates: tuple[tuple[int, frozenset[int]], ...]

    def __len__(self) -> int:
        return len(self.candidates)


def _check_size(G: ColoredGraph, max_n: int) -> None:
    if G.n > max_n:
        raise LimitExceeded(f"n={G.n} exceeds the oracle size limit {max_n}")


def _qualifying_supersets(rows: list[int], n: int, d: int):
    """All qualifying masks for one color, plus a has-qualifying-superset
    table (subset-sum transform over the qualifying indicator)."""
    size = 1 << n
    sup = bytearray(size)
    qual = []
    for m in range(1, size):
        if _mask_diam_le(rows, m, d):
            sup[m] = 1
            qual.append(m)
    for v in range(n):
        bit = 1 << v
        for base in range(0, size, bit << 1):
            for m in range(base, base + bit):
                if sup[m + bit] and not sup[m]:
                    sup[m] = 1
    return qual, sup


def maximal_candidates(G: ColoredGraph, d: int, max_n: int = DEFAULT_MAX_N) -> CandidateFamily:
    """Exactly the maximal diameter-<=d monochromatic vertex sets per color,
    sorted by (color, vertex mask)."""
    if d < 0:
        raise ValueError(f"diameter bound must be >= 0, got {d}")
    _check_size(G, max_n)
    out: list[tuple[int, int]] = []
    for color in range(1, G.r + 1):
        rows = G.color_rows[color - 1]
        qual, sup = _qualifying_supersets(rows, G.n, d)
        for m in qual:
            rem = G.full_mask ^ m
            maximal = True
            while rem:
                b = rem & -rem
                rem ^= b
                if sup[m | b]:
                    maximal = False
                    break
            if maximal:
                out.append((color, m))
    out.sort()
    return CandidateFamily(d, tuple((c, vertex_set(m)) for c, m in out))


def min_cover_exact(G: ColoredGraph, d: int, max_n: int = DEFAULT_MAX_N) -> tuple[int, CoverCertificate]:
    """The exact minimum number of monochromatic diameter-<=d components
    covering V, with a certificate attaining it.

    Branch and bound over the maximal-candidate family: greedy upper bound,
    pairwise-uncoverable lower bound, branching on the lowest-index uncovered
    vertex. Component bounds record the tightest achieved diameters.
    """
    fam = maximal_candidates(G, d, max_n)
    full = G.full_mask
    if full == 0:
        return 0, CoverCertificate((), (f"empty graph: zero components at diameter bound {d}",))
    cand = [(c, mask_of(vs)) for c, vs in fam.candidates]
    masks = [m for _c, m in cand]
    through: list[list[int]] = [[] for _ in range(G.n)]
    cover_of = [0] * G.n
    for idx, m in enumerate(masks):
        mm = m
        while mm:
            b = mm & -mm
            mm ^= b
            v = b.bit_length() - 1
            through[v].append(idx)
            cover_of[v] |= m

    chosen: list[int] = []
    covered = 0
    while covered != full:
        best_idx = -1
        best_gain = -1
        for idx, m in enumerate(masks):
            gain = (m & ~covered).bit_count()
            if gain > best_gain:
                best_gain, best_idx = gain, idx
        chosen.append(best_idx)
        covered |= masks[best_idx]
    best = list(chosen)

    def lower_bound(cov: int) -> int:
        rem = full & ~cov
        k = 0
        while rem:
            b = rem & -rem
            k += 1
            rem &= ~cover_of[b.bit_length() - 1]
        return k

    state: list[int] = []

    def dfs(cov: int) -> None:
        nonlocal best
        if cov == full:
            if len(state) < len(best):
                best = list(state)
            return
        if len(state) + lower_bound(cov) >= len(best):
            return
        pivot = full & ~cov
        v = (pivot & -pivot).bit_length() - 1
        for idx in through[v]:
            state.append(idx)
            dfs(cov | masks[idx])
            state.pop()

    dfs(0)
    comps = []
    for idx in best:
        c, m = cand[idx]
        comps.append(CoverComponent(c, vertex_set(m), _mask_diameter(G.color_rows[c - 1], m)))
    log = (f"exact minimum at diameter bound {d} over {len(cand)} maximal candidates",)
    return len(best), CoverCertificate(tuple(comps), log)


def exists_bounds_cover(
    G: ColoredGraph, bounds: list[int], max_n: int = DEFAULT_MAX_N
) -> CoverCertificate | None:
    """A cover whose i-th component has diameter at most bounds[i], or None.

    Exact search over tuples of maximal candidates, one family per distinct
    bound; runs of equal consecutive bounds only explore non-decreasing
    candidate indices. Component bounds record achieved diameters.
    """
    bounds = list(bounds)
    if not bounds:
        raise ValueError("bounds list must not be empty")
    for d in bounds:
        if d < 0:
            raise ValueError(f"diameter bound must be >= 0, got {d}")
    _check_size(G, max_n)
    if G.full_mask == 0:
        return CoverCertificate((), ("empty graph: nothing to cover",))
    fams: dict[int, list[tuple[int, int]]] = {}
    for d in sorted(set(bounds)):
        fam = maximal_candidates(G, d, max_n)
        fams[d] = [(c, mask_of(vs)) for c, vs in fam.candidates]
    k = len(bounds)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        u = suffix[i + 1]
        for _c, m in fams[bounds[i]]:
            u |= m
        suffix[i] = u
    full = G.full_mask
    pick: list[int] = []

    def dfs(i: int, cov: int) -> bool:
        if i == k:
            return cov == full
        if cov | suffix[i] != full:
            return False
        cands = fams[bounds[i]]
        start = pick[i - 1] if i > 0 and bounds[i] == bounds[i - 1] else 0
        for idx in range(start, len(cands)):
            pick.append(idx)
            if dfs(i + 1, cov | cands[idx][1]):
                return True
            pick.pop()
        return False

    if not dfs(0, 0):
        return None
    comps = []
    for i, idx in enumerate(pick):
        c, m = fams[bounds[i]][idx]
        comps.append(CoverComponent(c, vertex_set(m), _mask_diameter(G.color_rows[c - 1], m)))
    log = (f"cover with per-component bounds {bounds} over maximal candidates",)
    return CoverCertificate(tuple(comps), log)
