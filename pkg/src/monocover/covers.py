"""Constructive covers of 2-colored graphs by monochromatic components of
bounded diameter.

Every cover operation returns a CoverCertificate whose per-component bounds
are the diameters actually achieved (verified on the way out), together with
a build log recording which branch fired and which color/role swaps were
applied. Proof-guaranteed properties are re-checked at runtime and raise
ProofAssertionError when violated, since that can only mean a bug here.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .classify import DiamPattern, _classify_within, _spanning_mono_within
from .graph import (
    UNREACHABLE,
    ColoredGraph,
    CoverCertificate,
    CoverComponent,
    LimitExceeded,
    _mask_diameter,
    _max_clique,
    bits,
    independence_number,
    induced_subgraph,
    is_complement_bipartite,
    find_odd_antihole,
    mask_of,
    verify_cover,
    vertex_set,
)


class ProofAssertionError(RuntimeError):
    """A property guaranteed by the underlying proof failed at runtime.

    Signals an implementation bug, not bad input; carries the branch name.
    """

    def __init__(self, branch: str, detail: str):
        super().__init__(f"[{branch}] {detail}")
        self.branch = branch


def _is_complete_mask(G: ColoredGraph, mask: int) -> bool:
    for v in bits(mask):
        if mask & ~G.adj_rows[v] & ~(1 << v):
            return False
    return True


def _build_components(G, pieces, branch, expect_mask=None):
    """Turn (color, vertex mask, diameter limit) pieces into verified
    components; empty prescribed pieces are dropped."""
    expect = G.full_mask if expect_mask is None else expect_mask
    comps = []
    covered = 0
    for color, m, limit in pieces:
        if not m:
            continue
        d = _mask_diameter(G.color_rows[color - 1], m)
        if d is UNREACHABLE or d > limit:
            raise ProofAssertionError(
                branch,
                f"color-{color} component {sorted(vertex_set(m))} has diameter {d}, limit {limit}",
            )
        comps.append(CoverComponent(color, vertex_set(m), d))
        covered |= m
    if covered != expect:
        missing = sorted(vertex_set(expect & ~covered))
        raise ProofAssertionError(branch, f"pieces miss vertices {missing}")
    return comps


# -- pair partition --------------------------------------------------------


@dataclass(frozen=True)
class PairPartition:
    """The eight-way split of V - {x, y} around a nonadjacent pair.

    a11/a22: adjacent to both x and y in color 1 / color 2 (homogeneous);
    a12: color 1 to x and color 2 to y; a21 the mirror image;
    ax1/ax2: adjacent only to x, in color 1 / 2; ay1/ay2: only to y.
    """

    x: int
    y: int
    a11: frozenset[int]
    a22: frozenset[int]
    a12: frozenset[int]
    a21: frozenset[int]
    ax1: frozenset[int]
    ax2: frozenset[int]
    ay1: frozenset[int]
    ay2: frozenset[int]

    @property
    def kx(self) -> frozenset[int]:
        return self.ax1 | self.ax2 | {self.x}

    @property
    def ky(self) -> frozenset[int]:
        return self.ay1 | self.ay2 | {self.y}

    @property
    def common(self) -> frozenset[int]:
        return self.a11 | self.a22 | self.a12 | self.a21


def pair_partition(G: ColoredGraph, x: int, y: int) -> PairPartition:
    """Split all other vertices by their adjacency pattern to the nonadjacent
    pair (x, y). Valid when the independence number is 2; a vertex adjacent
    to neither endpoint, or a non-complete side clique, witnesses alpha > 2
    and is an error."""
    if G.r != 2:
        raise ValueError(f"pair_partition requires r=2, got {G.r}")
    if x == y or not (0 <= x < G.n and 0 <= y < G.n):
        raise ValueError(f"invalid pair ({x},{y})")
    if G.has_edge(x, y):
        raise ValueError(f"pair ({x},{y}) is adjacent; need a nonadjacent pair")
    buckets: dict[str, set[int]] = {k: set() for k in ("a11", "a22", "a12", "a21", "ax1", "ax2", "ay1", "ay2")}
    for v in G.vertices():
        if v == x or v == y:
            continue
        cx = G.color_of(v, x)
        cy = G.color_of(v, y)
        if cx is None and cy is None:
            raise ValueError(f"vertex {v} is adjacent to neither {x} nor {y}: independent triple")
        if cx is not None and cy is not None:
            buckets[f"a{cx}{cy}"].add(v)
        elif cx is not None:
            buckets[f"ax{cx}"].add(v)
        else:
            buckets[f"ay{cy}"].add(v)
    part = PairPartition(x, y, *(frozenset(buckets[k]) for k in ("a11", "a22", "a12", "a21", "ax1", "ax2", "ay1", "ay2")))
    for side_name, side in (("x", part.kx), ("y", part.ky)):
        m = mask_of(side)
        if not _is_complete_mask(G, m):
            raise ValueError(f"side clique around {side_name} is not complete: independence number exceeds 2")
    return part


@dataclass(frozen=True)
class _View:
    """Color/role-relabeled window onto a PairPartition.

    ``red`` names the original color currently playing color 1; when
    ``roles_swapped`` the x and y ends trade places. All accessors answer in
    view coordinates while returning original vertex names, so certificates
    need no mapping back.
    """

    part: PairPartition
    red: int = 1
    roles_swapped: bool = False

    @property
    def blue(self) -> int:
        return 3 - self.red

    @property
    def x(self) -> int:
        return self.part.y if self.roles_swapped else self.part.x

    @property
    def y(self) -> int:
        return self.part.x if self.roles_swapped else self.part.y

    def swap_colors(self) -> "_View":
        return replace(self, red=3 - self.red)

    def swap_roles(self) -> "_View":
        return replace(self, roles_swapped=not self.roles_swapped)

    def _orig(self, c: int) -> int:
        return c if self.red == 1 else 3 - c

    def common(self, cx: int, cy: int) -> frozenset[int]:
        ox, oy = self._orig(cx), self._orig(cy)
        if self.roles_swapped:
            ox, oy = oy, ox
        table = {
            (1, 1): self.part.a11,
            (1, 2): self.part.a12,
            (2, 1): self.part.a21,
            (2, 2): self.part.a22,
        }
        return table[(ox, oy)]

    def only_x(self, c: int) -> frozenset[int]:
        oc = self._orig(c)
        if self.roles_swapped:
            return self.part.ay1 if oc == 1 else self.part.ay2
        return self.part.ax1 if oc == 1 else self.part.ax2

    def only_y(self, c: int) -> frozenset[int]:
        oc = self._orig(c)
        if self.roles_swapped:
            return self.part.ax1 if oc == 1 else self.part.ax2
        return self.part.ay1 if oc == 1 else self.part.ay2

    @property
    def a11(self) -> frozenset[int]:
        return self.common(1, 1)

    @property
    def a22(self) -> frozenset[int]:
        return self.common(2, 2)

    @property
    def a12(self) -> frozenset[int]:
        return self.common(1, 2)

    @property
    def a21(self) -> frozenset[int]:
        return self.common(2, 1)

    @property
    def kx(self) -> frozenset[int]:
        return self.only_x(1) | self.only_x(2) | {self.x}

    @property
    def ky(self) -> frozenset[int]:
        return self.only_y(1) | self.only_y(2) | {self.y}


# -- the two-component cover for independence number 2 ---------------------


def cover_alpha2(G: ColoredGraph) -> CoverCertificate:
    """Cover a 2-colored graph of independence number exactly 2 by at most
    two monochromatic components of diameter at most 4 each.

    Dispatch: a bipartite complement yields two spanning cliques; otherwise a
    shortest odd antihole supplies a nonadjacent pair with a homogeneous
    witness, and the pair-partition case analysis takes over.
    """
    if G.r != 2:
        raise ValueError(f"cover_alpha2 requires r=2, got {G.r}")
    alpha, _ = independence_number(G)
    if alpha != 2:
        raise ValueError(f"cover_alpha2 requires independence number exactly 2, got {alpha}")
    log: list[str] = []

    if is_complement_bipartite(G) is not None:
        inner = two_clique_cover(G)
        log.append("complement is bipartite: two spanning cliques, one small-diameter color each")
        log.extend(inner.build_log)
        cert = CoverCertificate(inner.components, tuple(log))
        _assert_verified(G, cert, "two-cliques")
        return cert

    hole = find_odd_antihole(G)
    L = len(hole)
    k = L // 2
    start = hole.index(min(hole))
    diag = [hole[(start + i * k) % L] for i in range(L)]
    x = y = via = hom_color = None
    for j in range(L):
        p, q, s = diag[j], diag[(j + 1) % L], diag[(j + 2) % L]
        if G.color_of(p, q) == G.color_of(q, s):
            x, via, y, hom_color = p, q, s, G.color_of(p, q)
            break
    if x is None:
        raise ProofAssertionError("antihole-scan", "no two consecutive long diagonals share a color")
    log.append(
        f"odd antihole {hole}: consecutive same-colored long diagonals at {via} "
        f"give nonadjacent pair ({x},{y}) with color-{hom_color} homogeneous witness"
    )

    part = pair_partition(G, x, y)
    view = _View(part)

    if part.a11 and part.a22:
        m1 = mask_of({x, y} | part.ax1 | part.ay1 | part.a11 | part.a12 | part.a21)
        m2 = mask_of({x, y} | part.ax2 | part.ay2 | part.a22)
        log.append("both homogeneous parts nonempty: one double-star component per color")
        comps = _build_components(G, [(1, m1, 4), (2, m2, 4)], "both-homogeneous")
        cert = CoverCertificate(tuple(comps), tuple(log))
        _assert_verified(G, cert, "both-homogeneous")
        return cert

    if not view.a11:
        view = view.swap_colors()
        log.append("homogeneous part sits in color 2: colors swapped for the analysis")
    if not view.a11 or view.a22:
        raise ProofAssertionError("homogeneous", "expected exactly one nonempty homogeneous part")

    red, blue = view.red, view.blue
    red_rows = G.color_rows[red - 1]
    blue_rows = G.color_rows[blue - 1]

    kx_m = mask_of(view.kx)
    ky_m = mask_of(view.ky)
    d_red_kx = _mask_diameter(red_rows, kx_m)
    d_red_ky = _mask_diameter(red_rows, ky_m)

    if d_red_kx <= 3 and d_red_ky <= 3:
        m1 = kx_m | mask_of(view.a11 | view.a12)
        m2 = ky_m | mask_of(view.a21)
        log.append(f"both side cliques have color-{red} diameter <= 3: two color-{red} components")
        comps = _build_components(G, [(red, m1, 4), (red, m2, 4)], "two-red-sides")
        cert = CoverCertificate(tuple(comps), tuple(log))
        _assert_verified(G, cert, "two-red-sides")
        return cert

    if d_red_ky <= 3:
        view = view.swap_roles()
        kx_m, ky_m = ky_m, kx_m
        log.append("large homogeneous-color diameter sits at the x side: x/y roles swapped")

    if _mask_diameter(blue_rows, ky_m) > 2:
        raise ProofAssertionError("side-clique", f"y-side clique should have color-{blue} diameter <= 2")

    d_blue_kx = _mask_diameter(blue_rows, kx_m)
    if d_blue_kx <= 3:
        # x-side clique is usable in the second color
        ax2_m = mask_of(view.only_x(2))
        target = ax2_m | ky_m
        bad = None
        for z in sorted(view.a11):
            if not (blue_rows[z] & target):
                bad = z
                break
        if bad is None:
            a11x = {z for z in view.a11 if blue_rows[z] & ax2_m}
            a11y = view.a11 - a11x
            for z in a11y:
                if not (blue_rows[z] & ky_m):
                    raise ProofAssertionError("blue-split", f"{z} sends no color-{blue} edge to either side")
            m1 = kx_m | mask_of(a11x | view.a21)
            m2 = ky_m | mask_of(a11y | view.a12)
            log.append(
                f"every homogeneous vertex sends a color-{blue} edge across: two color-{blue} components"
            )
            comps = _build_components(G, [(blue, m1, 4), (blue, m2, 4)], "blue-split")
            cert = CoverCertificate(tuple(comps), tuple(log))
            _assert_verified(G, cert, "blue-split")
            return cert
        z_rest = target & ~G.adj_rows[bad]
        if z_rest and not _is_complete_mask(G, z_rest):
            raise ProofAssertionError("triple-star", f"non-neighbors of {bad} do not form a clique")
        pieces = []
        if z_rest:
            zc, _zd = _spanning_mono_within(G, z_rest)
            pieces.append((zc, z_rest, 3))
        triple = (
            (1 << view.x)
            | (1 << view.y)
            | mask_of(view.only_x(1) | view.a11 | view.a12 | view.a21)
            | red_rows[bad]
        )
        pieces.append((red, triple, 4))
        log.append(
            f"homogeneous vertex {bad} sends only color-{red} edges across: "
            f"color-{red} triple star plus spanning clique on its non-neighbors"
        )
        comps = _build_components(G, pieces, "triple-star")
        cert = CoverCertificate(tuple(comps), tuple(log))
        _assert_verified(G, cert, "triple-star")
        return cert

    # x-side clique has large second-color diameter, hence small first-color one
    if _mask_diameter(red_rows, kx_m) > 2:
        raise ProofAssertionError("red-partition", f"x-side clique should have color-{red} diameter <= 2")
    ystar_m = (1 << view.y) | mask_of(view.only_y(1) | view.a11 | view.a21)
    ay2 = view.only_y(2)
    a12_m = mask_of(view.a12)
    reach = G.full_mask & ~(mask_of(ay2) | a12_m)
    bad = None
    for z in sorted(ay2):
        if not (red_rows[z] & reach):
            bad = z
            break
    if bad is None:
        sx = {v for v in ay2 if red_rows[v] & kx_m}
        sy = ay2 - sx
        for v in sy:
            if not (red_rows[v] & ystar_m):
                raise ProofAssertionError("red-partition", f"{v} sends no color-{red} edge to either part")
        m1 = kx_m | a12_m | mask_of(sx)
        m2 = ystar_m | mask_of(sy)
        log.append(f"every y-only color-{blue} vertex sends color-{red} across: two color-{red} components")
        comps = _build_components(G, [(red, m1, 4), (red, m2, 4)], "red-partition")
        cert = CoverCertificate(tuple(comps), tuple(log))
        _assert_verified(G, cert, "red-partition")
        return cert
    z_rest = reach & ~G.adj_rows[bad]
    if z_rest and not _is_complete_mask(G, z_rest):
        raise ProofAssertionError("blue-star-extension", f"non-neighbors of {bad} do not form a clique")
    pieces = []
    if z_rest:
        zc, _zd = _spanning_mono_within(G, z_rest)
        pieces.append((zc, z_rest, 3))
    ext = (1 << view.y) | mask_of(ay2) | a12_m | blue_rows[bad]
    pieces.append((blue, ext, 3))
    log.append(
        f"y-only vertex {bad} sends only color-{blue} edges out: color-{blue} double-level star "
        f"plus spanning clique on its non-neighbors"
    )
    comps = _build_components(G, pieces, "blue-star-extension")
    cert = CoverCertificate(tuple(comps), tuple(log))
    _assert_verified(G, cert, "blue-star-extension")
    return cert


def _assert_verified(G: ColoredGraph, cert: CoverCertificate, branch: str) -> None:
    verdict = verify_cover(G, cert)
    if not verdict:
        raise ProofAssertionError(branch, f"emitted certificate fails verification: {verdict.reason}")


# -- near-split structures --------------------------------------------------


@dataclass(frozen=True)
class NearSplitStructure:
    """A vertex v plus a two-clique split of the rest, with v adjacent to all
    but exactly one vertex per clique (v1 in k1, v2 in k2, and v1v2 an edge
    so the independence number stays 2)."""

    v: int
    k1: frozenset[int]
    k2: frozenset[int]
    v1: int
    v2: int

    def validate(self, G: ColoredGraph) -> None:
        n = G.n
        if not (0 <= self.v < n):
            raise ValueError(f"center {self.v} out of range")
        if self.k1 & self.k2:
            raise ValueError("side cliques overlap")
        if self.k1 | self.k2 != set(G.vertices()) - {self.v}:
            raise ValueError("side cliques do not partition the other vertices")
        for name, side in (("k1", self.k1), ("k2", self.k2)):
            if not _is_complete_mask(G, mask_of(side)):
                raise ValueError(f"{name} does not induce a complete graph")
        if self.v1 not in self.k1 or self.v2 not in self.k2:
            raise ValueError("missed vertices must lie in their cliques")
        for u in self.k1 | self.k2:
            adjacent = G.has_edge(self.v, u)
            if u in (self.v1, self.v2):
                if adjacent:
                    raise ValueError(f"center is adjacent to supposedly missed vertex {u}")
            elif not adjacent:
                raise ValueError(f"center misses {u}, not only {self.v1} and {self.v2}")
        if not G.has_edge(self.v1, self.v2):
            raise ValueError(f"({self.v1},{self.v2}) must be an edge, else {{v,v1,v2}} is independent")


def detect_near_split(G: ColoredGraph) -> NearSplitStructure | None:
    """Find a valid near-split structure, scanning centers in ascending
    order, or None. The center must miss exactly two vertices, one per
    clique, and those two must be adjacent."""
    if G.r != 2:
        raise ValueError(f"detect_near_split requires r=2, got {G.r}")
    full = G.full_mask
    for v in G.vertices():
        nn = full & ~G.adj_rows[v] & ~(1 << v)
        if nn.bit_count() != 2:
            continue
        a = (nn & -nn).bit_length() - 1
        b = (nn & (nn - 1)).bit_length() - 1
        if not G.has_edge(a, b):
            continue
        split = _two_clique_split(G, v, a, b)
        if split is None:
            continue
        structure = NearSplitStructure(v, frozenset(split[0]), frozenset(split[1]), a, b)
        structure.validate(G)
        return structure
    return None


def _two_clique_split(G: ColoredGraph, v: int, a: int, b: int):
    """Partition V - {v} into cliques (k1, k2) with a in k1 and b in k2, or
    None. Two-colors the complement of G - v; the components holding a and b
    orient by them, any others put the side of their smallest vertex first."""
    rest = G.full_mask & ~(1 << v)
    side: dict[int, int] = {}
    k1: set[int] = set()
    k2: set[int] = set()
    for root in bits(rest):
        if root in side:
            continue
        side[root] = 0
        members = {root}
        queue = [root]
        while queue:
            u = queue.pop()
            for w in bits((~G.adj_rows[u]) & rest & ~(1 << u)):
                if w not in side:
                    side[w] = side[u] ^ 1
                    members.add(w)
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
        zero = {u for u in members if side[u] == 0}
        one = members - zero
        if a in members and b in members:
            if side[a] == side[b]:
                return None
            first = zero if a in zero else one
        elif a in members:
            first = zero if a in zero else one
        elif b in members:
            first = one if b in zero else zero
        else:
            # root is the component minimum and always lands on side zero
            first = zero
        k1 |= first
        k2 |= members - first
    return k1, k2


def cover_near_split(G: ColoredGraph, s: NearSplitStructure) -> CoverCertificate:
    """Cover a near-split graph by at most two monochromatic components of
    diameter at most 3 each."""
    if G.r != 2:
        raise ValueError(f"cover_near_split requires r=2, got {G.r}")
    s.validate(G)
    log: list[str] = [f"near-split center {s.v}, cliques miss {s.v1} and {s.v2}"]

    k1_m = mask_of(s.k1)
    k2_m = mask_of(s.k2)
    verd1 = _classify_within(G, k1_m) if k1_m.bit_count() >= 2 else None
    verd2 = _classify_within(G, k2_m) if k2_m.bit_count() >= 2 else None

    def small_color(verdict):
        """A color of diameter <= 2 on the clique, None for double-three."""
        if verdict is None:
            return 1
        if verdict.case is DiamPattern.BOTH_THREE:
            return None
        d1, _d2 = verdict.diameters
        return 1 if d1 <= 2 else 2

    c1 = small_color(verd1)
    c2 = small_color(verd2)
    if c1 is not None and c2 is not None:
        return _near_split_small(G, s, c1, c2, k1_m, k2_m, log)

    if c1 is None:
        verdict, vt, t_m, o_m = verd1, s.v1, k1_m, k2_m
    else:
        verdict, vt, t_m, o_m = verd2, s.v2, k2_m, k1_m
        log.append("double-diameter clique is the second one: roles swapped")
    b1, b2 = verdict.bases
    if vt not in b1:
        e, ce = b1, 1
    else:
        if vt in b2:
            raise ProofAssertionError("double-star-clique", "base edges of the two colors overlap")
        e, ce = b2, 2
    x1, x2 = e
    g = G.color_of(s.v, x1)
    h = G.color_of(s.v, x2)
    use = ce if (g == ce or h == ce) else 3 - ce
    if use == ce:
        log.append(f"center joins the color-{ce} double star at base ({x1},{x2})")
    else:
        log.append(
            f"center's edges to base ({x1},{x2}) avoid color {ce}: five-cycle closes the "
            f"color-{3 - ce} double star instead"
        )
    oc, _od = _spanning_mono_within(G, o_m)
    pieces = [(use, t_m | (1 << s.v), 3), (oc, o_m, 3)]
    comps = _build_components(G, pieces, "double-star-clique")
    cert = CoverCertificate(tuple(comps), tuple(log))
    _assert_verified(G, cert, "double-star-clique")
    return cert


def _near_split_small(G, s, c1, c2, k1_m, k2_m, log):
    branch = "small-diameter-cliques"

    def emit(pieces, note):
        log.append(note)
        comps = _build_components(G, pieces, branch)
        cert = CoverCertificate(tuple(comps), tuple(log))
        _assert_verified(G, cert, branch)
        return cert

    vb = 1 << s.v
    for u in sorted(s.k1 - {s.v1}):
        if G.color_of(s.v, u) == c1:
            return emit(
                [(c1, k1_m | vb, 3), (c2, k2_m, 2)],
                f"center sends color {c1} into the first clique at {u}",
            )
    for u in sorted(s.k2 - {s.v2}):
        if G.color_of(s.v, u) == c2:
            return emit(
                [(c2, k2_m | vb, 3), (c1, k1_m, 2)],
                f"center sends color {c2} into the second clique at {u}",
            )
    for u in sorted(s.k1 - {s.v1}):
        if G.color_of(s.v1, u) == 3 - c1:
            return emit(
                [(3 - c1, k1_m | vb, 3), (c2, k2_m, 2)],
                f"missed vertex {s.v1} sends color {3 - c1} into its clique at {u}",
            )
    for u in sorted(s.k2 - {s.v2}):
        if G.color_of(s.v2, u) == 3 - c2:
            return emit(
                [(3 - c2, k2_m | vb, 3), (c1, k1_m, 2)],
                f"missed vertex {s.v2} sends color {3 - c2} into its clique at {u}",
            )
    for u in s.k1 - {s.v1}:
        if G.color_of(s.v1, u) != c1:
            raise ProofAssertionError(branch, f"expected all ({s.v1},*) edges in color {c1}")
    for u in s.k2 - {s.v2}:
        if G.color_of(s.v2, u) != c2:
            raise ProofAssertionError(branch, f"expected all ({s.v2},*) edges in color {c2}")
    cv = G.color_of(s.v1, s.v2)
    if c1 == c2:
        star = vb | (k1_m & ~(1 << s.v1)) | (k2_m & ~(1 << s.v2))
        return emit(
            [(3 - c1, star, 2), (cv, (1 << s.v1) | (1 << s.v2), 1)],
            f"one star from the center plus the ({s.v1},{s.v2}) edge",
        )
    if cv == c1:
        return emit(
            [(c1, k1_m | (1 << s.v2), 2), (c1, vb | (k2_m & ~(1 << s.v2)), 2)],
            f"missed edge has color {c1}: two color-{c1} stars",
        )
    return emit(
        [(c2, k2_m | (1 << s.v1), 2), (c2, vb | (k1_m & ~(1 << s.v1)), 2)],
        f"missed edge has color {c2}: two color-{c2} stars",
    )


# -- the general cover ------------------------------------------------------


def cover_general(G: ColoredGraph) -> CoverCertificate:
    """Cover any 2-colored graph by at most floor(3*alpha/2) monochromatic
    components of diameter at most 4 each, alpha being the exact
    independence number."""
    if G.r != 2:
        raise ValueError(f"cover_general requires r=2, got {G.r}")
    cert = _cover_general_inner(G)
    _assert_verified(G, cert, "general")
    alpha, _ = independence_number(G)
    limit = 3 * alpha // 2
    if G.n > 0 and len(cert.components) > limit:
        raise ProofAssertionError("general", f"{len(cert.components)} components exceed limit {limit}")
    return cert


def _cover_general_inner(G: ColoredGraph) -> CoverCertificate:
    if G.n == 0:
        return CoverCertificate((), ("empty graph: nothing to cover",))
    alpha, iset = independence_number(G)
    if alpha == 1:
        c, d = _spanning_mono_within(G, G.full_mask)
        comp = CoverComponent(c, frozenset(G.vertices()), d)
        return CoverCertificate((comp,), (f"complete graph: spanning color-{c} subgraph",))
    if alpha == 2:
        return cover_alpha2(G)
    pair = _mono_p2_pair(G)
    if pair is not None:
        return _cover_general_peel(G, alpha, *pair)
    return _cover_general_labels(G, alpha, iset)


def _mono_p2_pair(G: ColoredGraph):
    """Lexicographically first nonadjacent pair with a common monochromatic
    neighbor, as (x, y, color, witness), or None."""
    full = G.full_mask
    for x in G.vertices():
        non = full & ~G.adj_rows[x] & ~((1 << (x + 1)) - 1)
        for y in bits(non):
            for c in (1, 2):
                common = G.color_rows[c - 1][x] & G.color_rows[c - 1][y]
                if common:
                    return x, y, c, next(bits(common))
    return None


def _cover_general_peel(G, alpha, x, y, c, witness) -> CoverCertificate:
    branch = "peel-pair"
    cbar = 3 - c
    rows_c = G.color_rows[c - 1]
    rows_b = G.color_rows[cbar - 1]
    main = (1 << x) | (1 << y) | rows_c[x] | rows_c[y]
    pieces = [(c, main, 4)]
    if rows_b[x]:
        pieces.append((cbar, (1 << x) | rows_b[x], 2))
    if rows_b[y]:
        pieces.append((cbar, (1 << y) | rows_b[y], 2))
    neighborhood = (1 << x) | (1 << y) | G.adj_rows[x] | G.adj_rows[y]
    log = [
        f"nonadjacent pair ({x},{y}) shares color-{c} neighbor {witness}: "
        f"one joint component plus opposite stars, then recurse on the rest"
    ]
    comps = _build_components(G, pieces, branch, expect_mask=neighborhood)
    rest = G.full_mask & ~neighborhood
    if rest:
        sub, labels = induced_subgraph(G, vertex_set(rest))
        sub_alpha, _ = independence_number(sub)
        if sub_alpha > alpha - 2:
            raise ProofAssertionError(branch, f"residual independence {sub_alpha} > {alpha - 2}")
        sub_cert = _cover_general_inner(sub)
        for comp in sub_cert.components:
            comps.append(
                CoverComponent(comp.color, frozenset(labels[i] for i in comp.vertices), comp.bound)
            )
        log.extend("residual: " + entry for entry in sub_cert.build_log)
    return CoverCertificate(tuple(comps), tuple(log))


def _cover_general_labels(G, alpha, iset) -> CoverCertificate:
    branch = "independent-labels"
    centers = sorted(iset)
    imask = mask_of(centers)
    rows1, rows2 = G.color_rows[0], G.color_rows[1]
    one_label: dict[int, int] = {u: 0 for u in centers}
    two_label: list[tuple[int, int, int]] = []  # (v, red endpoint, blue endpoint)
    for v in G.vertices():
        if imask >> v & 1:
            continue
        e1 = rows1[v] & imask
        e2 = rows2[v] & imask
        k = e1.bit_count() + e2.bit_count()
        if k == 0 or k > 2 or (k == 2 and (e1.bit_count() != 1 or e2.bit_count() != 1)):
            raise ProofAssertionError(branch, f"vertex {v} has {k} edges into the independent set")
        if k == 1:
            u = (e1 | e2).bit_length() - 1
            one_label[u] |= 1 << v
        else:
            two_label.append((v, e1.bit_length() - 1, e2.bit_length() - 1))

    comp_mask: dict[int, int] = {}
    comp_color: dict[int, int] = {}
    for u in centers:
        su = one_label[u] | (1 << u)
        if not _is_complete_mask(G, su):
            raise ProofAssertionError(branch, f"one-label class of {u} is not a clique")
        c, _d = _spanning_mono_within(G, su)
        comp_mask[u] = su
        comp_color[u] = c

    red_centers = [u for u in centers if comp_color[u] == 1]
    blue_centers = [u for u in centers if comp_color[u] == 2]
    leftovers: list[tuple[int, int, int]] = []
    for v, ua, ub in two_label:
        if comp_color[ua] == 1:
            comp_mask[ua] |= 1 << v
        elif comp_color[ub] == 2:
            comp_mask[ub] |= 1 << v
        else:
            leftovers.append((v, ua, ub))

    if len(blue_centers) <= len(red_centers):
        star_centers, star_color = blue_centers, 1
    else:
        star_centers, star_color = red_centers, 2
    star_mask = {u: 0 for u in star_centers}
    for v, ua, ub in leftovers:
        u = ua if star_color == 1 else ub
        if u not in star_mask:
            raise ProofAssertionError(branch, f"leftover {v} misses the star center set")
        star_mask[u] |= 1 << v

    pieces = [(comp_color[u], comp_mask[u], 4) for u in centers]
    pieces.extend((star_color, m | (1 << u), 2) for u, m in star_mask.items() if m)
    log = [
        f"no nonadjacent pair shares a monochromatic neighbor: {len(centers)} labeled cliques "
        f"plus {sum(1 for m in star_mask.values() if m)} color-{star_color} rescue stars"
    ]
    comps = _build_components(G, pieces, branch)
    return CoverCertificate(tuple(comps), tuple(log))


# -- simple covers -----------------------------------------------------------


def cover_stars(G: ColoredGraph) -> CoverCertificate:
    """Cover by at most r*alpha monochromatic stars (diameter <= 2), one per
    independent-set vertex and used color; isolated centers stay singletons."""
    alpha, iset = independence_number(G)
    pieces = []
    for v in sorted(iset):
        emitted = False
        for c in range(1, G.r + 1):
            nb = G.color_rows[c - 1][v]
            if nb:
                pieces.append((c, nb | (1 << v), 2))
                emitted = True
        if not emitted:
            pieces.append((1, 1 << v, 0))
    log = (f"stars from a maximum independent set of size {alpha}",)
    if G.n == 0:
        return CoverCertificate((), log)
    comps = _build_components(G, pieces, "stars")
    cert = CoverCertificate(tuple(comps), log)
    _assert_verified(G, cert, "stars")
    return cert


def two_clique_cover(G: ColoredGraph) -> CoverCertificate:
    """Cover a graph whose complement is bipartite by (at most) two spanning
    cliques, each taken in a color of diameter at most 3."""
    if G.r != 2:
        raise ValueError(f"two_clique_cover requires r=2, got {G.r}")
    split = is_complement_bipartite(G)
    if split is None:
        raise ValueError("complement is not bipartite: no two-clique split exists")
    pieces = []
    notes = []
    for side in split:
        if not side:
            continue
        m = mask_of(side)
        c, _d = _spanning_mono_within(G, m)
        pieces.append((c, m, 3))
        notes.append(f"clique {sorted(side)} in color {c}")
    comps = _build_components(G, pieces, "two-cliques")
    cert = CoverCertificate(tuple(comps), tuple(notes))
    _assert_verified(G, cert, "two-cliques")
    return cert


def cover_via_cliques(G: ColoredGraph, max_n: int = 24) -> CoverCertificate:
    """Exact minimum clique partition, then one small-diameter spanning color
    per clique; the component count equals the clique cover number."""
    if G.r != 2:
        raise ValueError(f"cover_via_cliques requires r=2, got {G.r}")
    if G.n > max_n:
        raise LimitExceeded(f"n={G.n} exceeds the clique-partition limit {max_n}")
    if G.n == 0:
        return CoverCertificate((), ("empty graph",))
    classes = _exact_clique_partition(G)
    pieces = []
    for m in classes:
        c, _d = _spanning_mono_within(G, m)
        pieces.append((c, m, 3))
    comps = _build_components(G, pieces, "clique-partition")
    cert = CoverCertificate(tuple(comps), (f"minimum clique partition of size {len(classes)}",))
    _assert_verified(G, cert, "clique-partition")
    return cert


def _exact_clique_partition(G: ColoredGraph) -> list[int]:
    """Minimum partition of V into cliques, as vertex masks ordered by their
    smallest member. Branch and bound on coloring the complement."""
    n = G.n
    comp = G.complement_rows()
    greedy: list[int] = []
    for v in range(n):
        for i, cls in enumerate(greedy):
            if not (cls & comp[v]):
                greedy[i] = cls | (1 << v)
                break
        else:
            greedy.append(1 << v)
    lb, _ = _max_clique(comp, G.full_mask)
    best = greedy
    if len(greedy) > lb:
        state: list[int] = []

        def dfs(v: int) -> None:
            nonlocal best
            if len(best) == lb:
                return
            if v == n:
                if len(state) < len(best):
                    best = list(state)
                return
            if len(state) >= len(best):
                return
            bv = 1 << v
            for i, cls in enumerate(state):
                if not (cls & comp[v]):
                    state[i] = cls | bv
                    dfs(v + 1)
                    state[i] = cls
            if len(state) + 1 < len(best):
                state.append(bv)
                dfs(v + 1)
                state.pop()

        dfs(0)
    return sorted(best, key=lambda m: m & -m)
