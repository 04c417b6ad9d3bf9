"""Edge-colored simple graphs and the exact primitives built on them.

Vertices are dense integers 0..n-1; every edge carries one color from 1..r.
Adjacency lives in per-color bit-vector rows (plain ints), which keeps
induced-subgraph BFS, subset enumeration and verification cheap at the desk
scale this package targets (n up to the low twenties).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class _Unreachable:
    """Distance marker for disconnected pairs; compares greater than every int.

    A dedicated singleton rather than a sentinel integer, so that arithmetic
    on it fails loudly instead of silently producing nonsense.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_Unreachable, ())

    def __repr__(self) -> str:
        return "unreachable"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


UNREACHABLE = _Unreachable()

Distance = "int | _Unreachable"


class LimitExceeded(RuntimeError):
    """Instance size beyond the configured bound for an exact computation."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def vertex_set(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


class ColoredGraph:
    """Immutable simple graph whose edges carry one color in 1..r.

    ``edge_color`` maps normalized pairs (u, v) with u < v to a color.
    The constructor trusts its input; use :func:`build_graph` to validate.
    """

    __slots__ = ("n", "r", "edge_color", "color_rows", "adj_rows", "full_mask")

    def __init__(self, n: int, r: int, edge_color: dict[tuple[int, int], int]):
        self.n = n
        self.r = r
        self.edge_color = edge_color
        color_rows = [[0] * n for _ in range(r)]
        adj = [0] * n
        for (u, v), c in edge_color.items():
            bu, bv = 1 << u, 1 << v
            rows = color_rows[c - 1]
            rows[u] |= bv
            rows[v] |= bu
            adj[u] |= bv
            adj[v] |= bu
        self.color_rows = color_rows
        self.adj_rows = adj
        self.full_mask = (1 << n) - 1

    # -- basic queries -------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, c) for (u, v), c in sorted(self.edge_color.items())]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_rows[u] >> v & 1)

    def color_of(self, u: int, v: int) -> int | None:
        """Color of edge (u, v), or None if the pair is not adjacent."""
        if u > v:
            u, v = v, u
        return self.edge_color.get((u, v))

    def is_complete(self) -> bool:
        return all(self.adj_rows[v] == self.full_mask ^ (1 << v) for v in self.vertices())

    def complement_rows(self) -> list[int]:
        """Adjacency rows of the complement of the underlying graph."""
        full = self.full_mask
        return [~self.adj_rows[v] & full & ~(1 << v) for v in self.vertices()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (self.n, self.r, self.edge_color) == (other.n, other.r, other.edge_color)

    def __hash__(self) -> int:
        return hash((self.n, self.r, frozenset(self.edge_color.items())))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, r={self.r}, m={len(self.edge_color)})"


def build_graph(n: int, r: int, edges: Iterable[tuple[int, int, int]]) -> ColoredGraph:
    """Validating constructor: checks ranges, loops and color conflicts.

    Duplicate identical entries are idempotent; the same pair listed with two
    different colors is an error.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if r < 1:
        raise ValueError(f"color count must be at least 1, got {r}")
    edge_color: dict[tuple[int, int], int] = {}
    for u, v, c in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        if not (1 <= c <= r):
            raise ValueError(f"color {c} out of range 1..{r} on edge ({u},{v})")
        key = (u, v) if u < v else (v, u)
        prev = edge_color.get(key)
        if prev is None:
            edge_color[key] = c
        elif prev != c:
            raise ValueError(f"conflicting colors {prev} and {c} for edge {key}")
    return ColoredGraph(n, r, edge_color)


# -- per-color metric ----------------------------------------------------


def _mask_eccentricity(rows: list[int], mask: int, start_bit: int):
    """Eccentricity of the vertex `start_bit` inside the induced mask."""
    seen = start_bit
    frontier = start_bit
    d = 0
    while seen != mask:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= rows[b.bit_length() - 1]
        frontier = nxt & mask & ~seen
        if not frontier:
            return UNREACHABLE
        seen |= frontier
        d += 1
    return d


def _mask_diameter(rows: list[int], mask: int):
    """Diameter of the color subgraph induced on the vertex mask."""
    if mask & (mask - 1) == 0:
        return 0
    worst = 0
    rem = mask
    while rem:
        bit = rem & -rem
        rem ^= bit
        ecc = _mask_eccentricity(rows, mask, bit)
        if ecc is UNREACHABLE:
            return UNREACHABLE
        if ecc > worst:
            worst = ecc
    return worst


def _mask_diam_le(rows: list[int], mask: int, d: int) -> bool:
    """True iff the induced color subgraph on `mask` has diameter <= d."""
    if mask & (mask - 1) == 0:
        return True
    rem = mask
    while rem:
        bit = rem & -rem
        rem ^= bit
        seen = bit
        frontier = bit
        for _ in range(d):
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= rows[b.bit_length() - 1]
            frontier = nxt & mask & ~seen
            if not frontier:
                break
            seen |= frontier
            if seen == mask:
                break
        if seen != mask:
            return False
    return True


def mono_diameter(G: ColoredGraph, color: int, vertices: Iterable[int]):
    """Exact diameter of the color-`color` subgraph induced on `vertices`.

    Returns an int, or UNREACHABLE when the induced subgraph is disconnected.
    A single vertex has diameter 0; the empty set is an error.
    """
    if not (1 <= color <= G.r):
        raise ValueError(f"color {color} out of range 1..{G.r}")
    mask = mask_of(vertices)
    if mask == 0:
        raise ValueError("diameter of the empty vertex set is undefined")
    if mask & ~G.full_mask:
        raise ValueError("vertex out of range")
    return _mask_diameter(G.color_rows[color - 1], mask)


# -- independence --------------------------------------------------------


def _max_clique(rows: list[int], start: int) -> tuple[int, int]:
    """Maximum clique over the adjacency rows, restricted to `start`.

    Branch and bound with a greedy-coloring upper bound; deterministic
    lowest-index-first ordering throughout. Returns (size, vertex mask).
    """
    if start == 0:
        return 0, 0
    best_size = 0
    best_mask = 0

    def expand(cand: int, cur_mask: int, cur_size: int) -> None:
        nonlocal best_size, best_mask
        order: list[tuple[int, int]] = []
        rest = cand
        bound = 0
        while rest:
            bound += 1
            avail = rest
            while avail:
                b = avail & -avail
                avail ^= b
                avail &= ~rows[b.bit_length() - 1]
                rest ^= b
                order.append((b, bound))
        for b, bnd in reversed(order):
            if cur_size + bnd <= best_size:
                return
            v = b.bit_length() - 1
            ncand = cand & rows[v]
            if ncand:
                expand(ncand, cur_mask | b, cur_size + 1)
            elif cur_size + 1 > best_size:
                best_size = cur_size + 1
                best_mask = cur_mask | b
            cand ^= b

    expand(start, 0, 0)
    return best_size, best_mask


def independence_number(G: ColoredGraph) -> tuple[int, frozenset[int]]:
    """Exact independence number with a witness set.

    Computed as a maximum clique of the complement (branch and bound with a
    greedy-coloring bound). n = 0 returns (0, empty set).
    """
    if G.n == 0:
        return 0, frozenset()
    size, mask = _max_clique(G.complement_rows(), G.full_mask)
    return size, vertex_set(mask)


# -- cover certificates ---------------------------------------------------


@dataclass(frozen=True)
class CoverComponent:
    """One monochromatic piece of a cover: a color, a vertex set, and the
    diameter bound claimed for the induced color subgraph."""

    color: int
    vertices: frozenset[int]
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        if not self.vertices:
            raise ValueError("cover component must be nonempty")

    def mask(self) -> int:
        return mask_of(self.vertices)


@dataclass(frozen=True)
class CoverCertificate:
    components: tuple[CoverComponent, ...]
    build_log: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "build_log", tuple(self.build_log))

    def __len__(self) -> int:
        return len(self.components)

    def covered(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for comp in self.components:
            out |= comp.vertices
        return out

    def bounds(self) -> tuple[int, ...]:
        return tuple(c.bound for c in self.components)


@dataclass(frozen=True)
class CoverVerdict:
    """Outcome of verify_cover; falsy on rejection, with the first offender."""

    ok: bool
    reason: str = ""
    failed_component: int | None = None
    uncovered: frozenset[int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_cover(G: ColoredGraph, cert: CoverCertificate) -> CoverVerdict:
    """Check a certificate against a graph.

    Accepts iff the component vertex sets union to V and every component's
    induced color subgraph has diameter at most its claimed bound. Components
    are checked in order; the first violation is reported. Out-of-range
    colors or vertices are contract errors, not rejections.
    """
    covered = 0
    for i, comp in enumerate(cert.components):
        if not (1 <= comp.color <= G.r):
            raise ValueError(f"component {i}: color {comp.color} out of range 1..{G.r}")
        m = comp.mask()
        if m & ~G.full_mask:
            raise ValueError(f"component {i}: vertex out of range for n={G.n}")
        d = _mask_diameter(G.color_rows[comp.color - 1], m)
        if d > comp.bound:
            shown = "unreachable" if d is UNREACHABLE else str(d)
            return CoverVerdict(
                False,
                reason=f"component {i} (color {comp.color}) has diameter {shown} > bound {comp.bound}",
                failed_component=i,
            )
        covered |= m
    if covered != G.full_mask:
        missing = vertex_set(G.full_mask & ~covered)
        return CoverVerdict(
            False,
            reason=f"uncovered vertices: {sorted(missing)}",
            uncovered=missing,
        )
    return CoverVerdict(True)


# -- structure of the complement ------------------------------------------


def is_complement_bipartite(G: ColoredGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-clique split of V, if one exists.

    Returns (X, Y) with G[X], G[Y] complete (a proper 2-coloring of the
    complement), or None when the complement has an odd cycle. Vertices
    isolated in the complement all land in X, so complete graphs yield
    (V, empty).
    """
    comp = G.complement_rows()
    side = [-1] * G.n
    for root in range(G.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for w in bits(comp[u]):
                if side[w] == -1:
                    side[w] = side[u] ^ 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    x = frozenset(v for v in range(G.n) if side[v] == 0)
    y = frozenset(v for v in range(G.n) if side[v] == 1)
    return x, y


def find_odd_antihole(G: ColoredGraph) -> list[int] | None:
    """Shortest odd induced cycle of the complement, as a cyclic vertex list.

    Intended for graphs with independence number 2, where the complement is
    triangle-free and any shortest odd cycle of it is chordless, i.e. the
    listed vertices are pairwise adjacent in G except consecutive ones.
    Returns None when the complement is bipartite. A triangle in the
    complement (an independent triple of G) is an error.
    """
    n = G.n
    comp = G.complement_rows()
    for u in range(n):
        for v in bits(comp[u]):
            if v > u and comp[u] & comp[v]:
                w = next(bits(comp[u] & comp[v]))
                raise ValueError(
                    f"complement contains triangle {{{u},{v},{w}}} (independent triple in G)"
                )
    # Shortest odd closed walk through each start vertex, via BFS on the
    # bipartite double cover. The global minimum is attained by a simple
    # cycle, and the smallest start index achieving it lies on that cycle.
    best_len: int | None = None
    best_start = -1
    for s in range(n):
        length = _odd_walk_length(comp, n, s, best_len)
        if length is not None and (best_len is None or length < best_len):
            best_len = length
            best_start = s
    if best_len is None:
        return None
    cycle = _odd_cycle_through(comp, n, best_start, best_len)
    if len(set(cycle)) != len(cycle):
        raise AssertionError("shortest odd closed walk was not simple")
    if len(cycle) > 2 and cycle[1] > cycle[-1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return cycle


def _odd_walk_length(comp: list[int], n: int, s: int, cap: int | None) -> int | None:
    dist = {(s, 0): 0}
    queue = [(s, 0)]
    head = 0
    while head < len(queue):
        u, par = queue[head]
        head += 1
        d = dist[(u, par)]
        if cap is not None and d >= cap:
            return None
        for w in bits(comp[u]):
            key = (w, par ^ 1)
            if key not in dist:
                dist[key] = d + 1
                if key == (s, 1):
                    return d + 1
                queue.append(key)
    return None


def _odd_cycle_through(comp: list[int], n: int, s: int, length: int) -> list[int]:
    parent: dict[tuple[int, int], tuple[int, int]] = {}
    dist = {(s, 0): 0}
    queue = [(s, 0)]
    head = 0
    target = (s, 1)
    while head < len(queue):
        node = queue[head]
        head += 1
        u, par = node
        for w in bits(comp[u]):
            key = (w, par ^ 1)
            if key not in dist:
                dist[key] = dist[node] + 1
                parent[key] = node
                if key == target:
                    path = [key]
                    while path[-1] != (s, 0):
                        path.append(parent[path[-1]])
                    verts = [v for v, _ in reversed(path)]
                    return verts[:-1]
                queue.append(key)
    raise AssertionError("odd cycle disappeared between passes")


# -- induced subgraphs -----------------------------------------------------


def induced_subgraph(G: ColoredGraph, vertices: Iterable[int]) -> tuple[ColoredGraph, list[int]]:
    """Induced subgraph on the given vertices, relabeled 0..k-1.

    Returns (subgraph, labels) where labels[i] is the original name of the
    subgraph's vertex i (sorted ascending).
    """
    labels = sorted(set(vertices))
    index = {v: i for i, v in enumerate(labels)}
    sub_edges: dict[tuple[int, int], int] = {}
    for i, u in enumerate(labels):
        for j in range(i + 1, len(labels)):
            c = G.color_of(u, labels[j])
            if c is not None:
                sub_edges[(i, j)] = c
    return ColoredGraph(len(labels), G.r, sub_edges), labels


# -- text formats ----------------------------------------------------------

COMBINED_SEPARATOR = "---"


def format_graph(G: ColoredGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{G.n} {G.r}")
    lines.extend(f"{u} {v} {c}" for u, v, c in G.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> ColoredGraph:
    """Parse the graph text format: header "n r", then "u v c" lines.

    '#' starts a comment; blank lines are ignored; pair order is free.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected header 'n r', got {raw!r}")
            header = (int(parts[0]), int(parts[1]))
            continue
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'u v c', got {raw!r}")
        edges.append((int(parts[0]), int(parts[1]), int(parts[2])))
    if header is None:
        raise ValueError("empty graph document")
    return build_graph(header[0], header[1], edges)


def format_certificate(cert: CoverCertificate) -> str:
    lines = [str(len(cert.components))]
    lines.extend(f"# log: {entry}" for entry in cert.build_log)
    for comp in cert.components:
        verts = " ".join(str(v) for v in sorted(comp.vertices))
        lines.append(f"{comp.color} {comp.bound}: {verts}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> CoverCertificate:
    """Parse the certificate format: "k", then k lines "c d: v1 ... vm"."""
    count: int | None = None
    comps: list[CoverComponent] = []
    log: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if body.startswith("log:"):
                log.append(body[4:].strip())
            continue
        if not stripped:
            continue
        if count is None:
            if len(stripped.split()) != 1:
                raise ValueError(f"line {lineno}: expected component count, got {raw!r}")
            count = int(stripped)
            continue
        if ":" not in stripped:
            raise ValueError(f"line {lineno}: expected 'c d: vertices', got {raw!r}")
        head, _, tail = stripped.partition(":")
        head_parts = head.split()
        if len(head_parts) != 2:
            raise ValueError(f"line {lineno}: expected 'c d:' prefix, got {raw!r}")
        color, bound = int(head_parts[0]), int(head_parts[1])
        verts = frozenset(int(t) for t in tail.split())
        comps.append(CoverComponent(color, verts, bound))
    if count is None:
        raise ValueError("empty certificate document")
    if count != len(comps):
        raise ValueError(f"certificate announces {count} components, found {len(comps)}")
    return CoverCertificate(tuple(comps), tuple(log))


def format_combined(G: ColoredGraph, cert: CoverCertificate) -> str:
    return format_graph(G) + COMBINED_SEPARATOR + "\n" + format_certificate(cert)


def parse_combined(text: str) -> tuple[ColoredGraph, CoverCertificate]:
    lines = text.splitlines()
    try:
        split = lines.index(COMBINED_SEPARATOR)
    except ValueError:
        raise ValueError("no '---' separator: not a combined graph+certificate stream") from None
    graph_part = "\n".join(lines[:split])
    cert_part = "\n".join(lines[split + 1 :])
    return parse_graph(graph_part), parse_certificate(cert_part)
