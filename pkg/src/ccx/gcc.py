"""Colored almost-positive roots and the clique complex they span.

The ground set holds m copies of each positive root (colors 1..m) plus
the negative simples with color 1.  Compatibility between two colored
roots follows the five-case rule over the color comparison and the
rotation depths; reducible diagrams are handled as joins with
block-diagonal "always compatible" adjacency between components.
"""

from __future__ import annotations

import json
import os
from typing import NamedTuple

from .diagram import CoxeterDiagram, classify, connected_components
from .rootsys import RootSystem


class BudgetExceeded(ValueError):
    pass


class ColoredRoot(NamedTuple):
    comp: int   # irreducible component index
    root: int   # root id within that component's RootSystem
    color: int  # 1..m (always 1 for negative simples)


def enumeration_budget(default: int = 2000) -> int:
    raw = os.environ.get("CCX_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return default


def colored_ground_set(systems: list[RootSystem], m: int) -> list[ColoredRoot]:
    """Vertices of the m-colored complex, ordered (component, root, color)."""
    if m < 0:
        raise ValueError("color count must be >= 0")
    out = []
    for ci, rs in enumerate(systems):
        for rid in range(rs.n):
            out.append(ColoredRoot(ci, rid, 1))
        for rid in range(rs.n, rs.size):
            for k in range(1, m + 1):
                out.append(ColoredRoot(ci, rid, k))
    return out


def rotate_colored(rs: RootSystem, v: ColoredRoot, m: int) -> ColoredRoot:
    """Colored rotation: bump the color while it is below m, otherwise
    rotate the underlying root and reset the color to 1."""
    if not rs.is_negative(v.root) and v.color < m:
        return ColoredRoot(v.comp, v.root, v.color + 1)
    return ColoredRoot(v.comp, rs.rotate(v.root), 1)


def m_compatible(rs: RootSystem, u: ColoredRoot, v: ColoredRoot) -> bool:
    """Five-case colored compatibility within one irreducible component.

    The color comparison decides whether one of the two roots gets
    rotated before the plain compatibility test; ties on both color
    and depth rotate the higher-colored root.
    """
    if u.comp != v.comp:
        return True
    k, l = u.color, v.color
    da, db = rs.depth(u.root), rs.depth(v.root)
    if k > l:
        if da <= db:
            return rs.compatible(rs.rotate(u.root), v.root)
        return rs.compatible(u.root, v.root)
    if k < l:
        if da >= db:
            return rs.compatible(u.root, rs.rotate(v.root))
        return rs.compatible(u.root, v.root)
    return rs.compatible(u.root, v.root)


class CliqueComplex:
    """The clique complex of colored compatibility.

    vertices are ColoredRoot triples in deterministic order; adjacency
    is a list of bitmasks over vertex positions.
    """

    def __init__(self, systems: list[RootSystem], m: int, budget: int | None = None):
        self.systems = systems
        self.m = m
        self.n = sum(rs.n for rs in systems)
        self.vertices = colored_ground_set(systems, m)
        cap = budget if budget is not None else enumeration_budget()
        if len(self.vertices) > cap:
            raise BudgetExceeded(
                f"{len(self.vertices)} vertices exceed budget {cap}"
            )
        self.pos = {v: i for i, v in enumerate(self.vertices)}
        V = len(self.vertices)
        adj = [0] * V
        for i in range(V):
            vi = self.vertices[i]
            for j in range(i + 1, V):
                vj = self.vertices[j]
                if m_compatible(self.systems[vi.comp], vi, vj):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        self.adj = adj

    # -- structural queries ------------------------------------------------

    def num_vertices(self) -> int:
        return len(self.vertices)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def rotate_vertex(self, i: int) -> int:
        v = self.vertices[i]
        return self.pos[rotate_colored(self.systems[v.comp], v, self.m)]

    def f_vector(self) -> list[int]:
        """Exact clique counts f_0..f_n by ordered recursive enumeration.

        Each clique is visited once, in increasing vertex order; the
        candidate mask keeps only later common neighbors.
        """
        counts = [0] * (self.n + 1)
        counts[0] = 1
        adj = self.adj
        V = len(self.vertices)

        def rec(cand: int, size: int):
            rest = cand
            while rest:
                low = rest & -rest
                i = low.bit_length() - 1
                rest ^= low
                counts[size + 1] += 1
                if size + 1 < self.n:
                    nxt = cand & adj[i] & ~((low << 1) - 1)
                    if nxt:
                        rec(nxt, size + 1)

        if V:
            rec((1 << V) - 1, 0)
        return counts

    def cliques_of_size(self, size: int) -> list[tuple[int, ...]]:
        out: list[tuple[int, ...]] = []
        adj = self.adj
        V = len(self.vertices)

        def rec(prefix: list[int], cand: int):
            if len(prefix) == size:
                out.append(tuple(prefix))
                return
            rest = cand
            while rest:
                low = rest & -rest
                i = low.bit_length() - 1
                rest ^= low
                rec(prefix + [i], cand & adj[i] & ~((low << 1) - 1))

        rec([], (1 << V) - 1)
        return out

    def facets(self) -> list[tuple[int, ...]]:
        """All n-cliques; by purity these are exactly the maximal faces."""
        return self.cliques_of_size(self.n)

    def facet_count(self) -> int:
        return self.f_vector()[self.n] if self.n else 1

    def positive_facet_count(self) -> int:
        """Facets avoiding every negative simple root."""
        neg = 0
        for i, v in enumerate(self.vertices):
            if self.systems[v.comp].is_negative(v.root):
                neg |= 1 << i
        count = 0
        adj = self.adj

        def rec(cand: int, size: int):
            nonlocal count
            if size == self.n:
                count += 1
                return
            rest = cand
            while rest:
                low = rest & -rest
                i = low.bit_length() - 1
                rest ^= low
                rec(cand & adj[i] & ~((low << 1) - 1), size + 1)

        rec(((1 << len(self.vertices)) - 1) & ~neg, 0)
        return count if self.n else 0

    # -- audits --------------------------------------------------------

    def audit_pure(self) -> bool:
        """Every maximal clique has exactly n vertices (Bron-Kerbosch)."""
        V = len(self.vertices)
        adj = self.adj
        sizes: set[int] = set()

        def bk(R: int, P: int, X: int):
            if not P and not X:
                sizes.add(R.bit_count())
                return
            pivot_pool = P | X
            u = (pivot_pool & -pivot_pool).bit_length() - 1
            best, bestdeg = u, -1
            pool = pivot_pool
            while pool:
                low = pool & -pool
                w = low.bit_length() - 1
                pool ^= low
                d = (P & adj[w]).bit_count()
                if d > bestdeg:
                    best, bestdeg = w, d
            ext = P & ~adj[best]
            while ext:
                low = ext & -ext
                v = low.bit_length() - 1
                ext ^= low
                bk(R | low, P & adj[v], X & adj[v])
                P &= ~low
                X |= low

        bk(0, (1 << V) - 1, 0)
        return sizes == {self.n} if V else True

    def audit_ridge_degree(self) -> bool:
        """Every (n-1)-clique extends to exactly m+1 facets."""
        if self.n == 0:
            return True
        full = (1 << len(self.vertices)) - 1
        for ridge in self.cliques_of_size(self.n - 1):
            common = full
            for i in ridge:
                common &= self.adj[i]
            if common.bit_count() != self.m + 1:
                return False
        return True

    def link_vertices(self, i: int) -> list[int]:
        mask = self.adj[i]
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    # -- export ---------------------------------------------------------

    def export_json(self, include_facets: bool = False) -> dict:
        verts = []
        for v in self.vertices:
            rs = self.systems[v.comp]
            verts.append(
                {
                    "component": v.comp,
                    "coords": [round(c, 6) for c in rs.roots[v.root]],
                    "negative_simple": rs.is_negative(v.root),
                    "color": v.color,
                }
            )
        edges = []
        for i in range(len(self.vertices)):
            mask = self.adj[i] & ~((1 << (i + 1)) - 1)
            while mask:
                low = mask & -mask
                edges.append([i, low.bit_length() - 1])
                mask ^= low
        out = {"m": self.m, "rank": self.n, "vertices": verts, "edges": edges}
        if include_facets:
            out["facets"] = [list(f) for f in self.facets()]
        return out


class NotFiniteTypeError(ValueError):
    def __init__(self, G: CoxeterDiagram):
        super().__init__(f"{G.to_spec()} is not of finite type")


def build_complex(G: CoxeterDiagram, m: int, budget: int | None = None) -> CliqueComplex:
    """Complex of the (possibly reducible) finite-type diagram G."""
    cls = classify(G)
    if not cls.is_finite:
        raise NotFiniteTypeError(G)
    systems = [RootSystem(c) for c in connected_components(G)]
    return CliqueComplex(systems, m, budget=budget)


def link_decomposition_check(cx: CliqueComplex, i: int) -> bool:
    """Rotate vertex i to a negative simple and compare its link there
    with the join of the complexes of the remaining vertices' diagram.

    Checks both the vertex set of the link (roots avoiding the removed
    vertex) and edge-by-edge agreement of compatibility with the
    parabolic complex built from scratch.
    """
    cur = i
    for _ in range(10 * len(cx.vertices) + 5):
        v = cx.vertices[cur]
        if cx.systems[v.comp].is_negative(v.root):
            break
        cur = cx.rotate_vertex(cur)
    else:
        raise RuntimeError("rotation never reached a negative simple")

    v = cx.vertices[cur]
    rs = cx.systems[v.comp]
    removed_vertex = rs.diagram.vertices[v.root]

    link = set(cx.link_vertices(cur))
    expected = set()
    for j, w in enumerate(cx.vertices):
        if j == cur:
            continue
        if w.comp != v.comp:
            expected.add(j)
        elif v.root not in cx.systems[w.comp].support[w.root]:
            expected.add(j)
    if link != expected:
        return False

    # parabolic complex on the remaining vertices of this component
    J = [u for u in rs.diagram.vertices if u != removed_vertex]
    embs = rs.parabolic_embeddings(J)
    sub_systems = [crs for crs, _ in embs]
    sub = CliqueComplex(sub_systems, cx.m)

    # identify sub vertices with parent vertices via the embeddings
    ident: dict[int, int] = {}
    for ci, (crs, emb) in enumerate(embs):
        for sub_rid, parent_rid in emb.items():
            for k in range(1, (cx.m if sub_rid >= crs.n else 1) + 1):
                sv = ColoredRoot(ci, sub_rid, k)
                if sv in sub.pos:
                    pv = ColoredRoot(v.comp, parent_rid, k)
                    ident[sub.pos[sv]] = cx.pos[pv]
    if set(ident.values()) != {j for j in link if cx.vertices[j].comp == v.comp}:
        return False
    for a in ident:
        for b in ident:
            if a >= b:
                continue
            sub_edge = bool(sub.adj[a] >> b & 1)
            par_edge = bool(cx.adj[ident[a]] >> ident[b] & 1)
            if sub_edge != par_edge:
                return False
    return True


def export_complex_json(cx: CliqueComplex, include_facets: bool = False) -> str:
    return json.dumps(cx.export_json(include_facets), sort_keys=True)
