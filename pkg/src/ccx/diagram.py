"""Coxeter diagrams: parsing, induced subdiagrams, bipartition, classification.

A diagram is a loopless undirected graph with integer edge labels >= 3;
every absent pair implicitly carries label 2.  Vertices are integers in
declaration order, and induced subdiagrams keep their parent's ids so
that vertex subsets work as memoization keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re


class DiagramError(ValueError):
    pass


class OddCycle(DiagramError):
    """The label>=3 skeleton is not bipartite."""


class CoxeterDiagram:
    """Immutable labeled graph. ``labels`` maps sorted pairs to m_ij >= 3."""

    __slots__ = ("vertices", "labels", "name", "_adj")

    def __init__(self, vertices, labels, name: str | None = None):
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise DiagramError("duplicate vertex ids")
        vset = set(vs)
        norm: dict[tuple[int, int], int] = {}
        for (i, j), lab in dict(labels).items():
            if i == j:
                raise DiagramError(f"self-loop at vertex {i}")
            if i not in vset or j not in vset:
                raise DiagramError(f"edge {{{i},{j}}} uses unknown vertex")
            if not isinstance(lab, int):
                raise DiagramError(f"label {lab!r} is not an integer")
            if lab < 2:
                raise DiagramError(f"label {lab} < 2 on edge {{{i},{j}}}")
            key = (min(i, j), max(i, j))
            if key in norm and norm[key] != lab:
                raise DiagramError(f"conflicting labels on edge {{{i},{j}}}")
            if lab >= 3:
                norm[key] = lab
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "labels", norm)
        object.__setattr__(self, "name", name)
        adj: dict[int, dict[int, int]] = {v: {} for v in vs}
        for (i, j), lab in norm.items():
            adj[i][j] = lab
            adj[j][i] = lab
        object.__setattr__(self, "_adj", adj)

    def __setattr__(self, *a):
        raise AttributeError("CoxeterDiagram is immutable")

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def label(self, i: int, j: int) -> int:
        if i == j:
            raise DiagramError("no label between a vertex and itself")
        return self.labels.get((min(i, j), max(i, j)), 2)

    def neighbors(self, v: int) -> dict[int, int]:
        """Vertices joined to v by an edge of label >= 3."""
        return self._adj[v]

    def edges(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, lab) for (i, j), lab in self.labels.items())

    def __eq__(self, other):
        return (
            isinstance(other, CoxeterDiagram)
            and self.vertices == other.vertices
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self.labels.items()))))

    def __repr__(self):
        return f"CoxeterDiagram({self.to_spec()!r})"

    def to_spec(self) -> str:
        """Canonical ``n=...; i-j:l`` form, vertices renumbered 1..n."""
        index = {v: k + 1 for k, v in enumerate(sorted(self.vertices))}
        parts = [f"n={self.rank};"]
        edges = sorted(
            (index[i], index[j], lab) for (i, j), lab in self.labels.items()
        )
        parts.extend(f"{i}-{j}:{lab}" for i, j, lab in edges)
        return " ".join(parts)


# ---------------------------------------------------------------------------
# construction of named diagrams


def _path(n: int, labels: list[int]) -> CoxeterDiagram:
    return CoxeterDiagram(
        range(1, n + 1), {(i, i + 1): labels[i - 1] for i in range(1, n)}
    )


def _named(kind: str, n: int, a: int | None = None) -> CoxeterDiagram:
    if kind == "A":
        if n < 1:
            raise DiagramError("A_n needs n >= 1")
        return _path(n, [3] * (n - 1))
    if kind == "B":
        if n < 2:
            raise DiagramError("B_n needs n >= 2")
        return _path(n, [3] * (n - 2) + [4])
    if kind == "D":
        if n < 3:
            raise DiagramError("D_n needs n >= 3")
        labels = {(i, i + 1): 3 for i in range(1, n - 1)}
        labels[(n - 2, n)] = 3
        return CoxeterDiagram(range(1, n + 1), labels)
    if kind == "E":
        # Bourbaki: path 1-3-4-...-n with vertex 2 hanging off vertex 4
        if n not in (6, 7, 8):
            raise DiagramError("E_n exists for n in {6,7,8}")
        labels = {(1, 3): 3, (2, 4): 3}
        labels.update({(i, i + 1): 3 for i in range(3, n)})
        return CoxeterDiagram(range(1, n + 1), labels)
    if kind == "F":
        if n != 4:
            raise DiagramError("F_n exists for n = 4")
        return _path(4, [3, 4, 3])
    if kind == "G":
        if n != 2:
            raise DiagramError("G_n exists for n = 2")
        return _path(2, [6])
    if kind == "H":
        if n not in (2, 3, 4):
            raise DiagramError("H_n exists for n in {2,3,4}")
        return _path(n, [5] + [3] * (n - 2))
    if kind == "I":
        if a is None or a < 2:
            raise DiagramError("I2(a) needs an integer a >= 2")
        return CoxeterDiagram([1, 2], {(1, 2): a} if a >= 3 else {})
    raise DiagramError(f"unknown family {kind!r}")


def _named_affine(kind: str, n: int) -> CoxeterDiagram:
    if kind == "A":
        if n < 2:
            raise DiagramError("~A_n supported for n >= 2 (integer labels only)")
        labels = {(i, i + 1): 3 for i in range(1, n + 1)}
        labels[(1, n + 1)] = 3
        return CoxeterDiagram(range(1, n + 2), labels)
    if kind == "B":
        if n == 2:
            return _named_affine("C", 2)
        if n < 3:
            raise DiagramError("~B_n needs n >= 2")
        labels = {(1, 3): 3, (2, 3): 3}
        labels.update({(i, i + 1): 3 for i in range(3, n)})
        labels[(n, n + 1)] = 4
        return CoxeterDiagram(range(1, n + 2), labels)
    if kind == "C":
        if n < 2:
            raise DiagramError("~C_n needs n >= 2")
        return _path(n + 1, [4] + [3] * (n - 2) + [4])
    if kind == "D":
        if n < 4:
            raise DiagramError("~D_n needs n >= 4")
        labels = {(1, 3): 3, (2, 3): 3, (n - 1, n): 3, (n - 1, n + 1): 3}
        labels.update({(i, i + 1): 3 for i in range(3, n - 1)})
        return CoxeterDiagram(range(1, n + 2), labels)
    if kind == "E":
        arms = {6: (2, 2, 2), 7: (3, 3, 1), 8: (5, 2, 1)}
        if n not in arms:
            raise DiagramError("~E_n exists for n in {6,7,8}")
        return _tripod(*arms[n])
    if kind == "F":
        if n != 4:
            raise DiagramError("~F_n exists for n = 4")
        return _path(5, [3, 3, 4, 3])
    if kind == "G":
        if n != 2:
            raise DiagramError("~G_n exists for n = 2")
        return _path(3, [6, 3])
    raise DiagramError(f"unknown affine family {kind!r}")


def _tripod(p: int, q: int, r: int) -> CoxeterDiagram:
    """Tree with three simply-laced arms of p, q, r edges from a hub."""
    n = p + q + r + 1
    labels = {}
    hub = 1
    v = 1
    for arm in (p, q, r):
        prev = hub
        for _ in range(arm):
            v += 1
            labels[(min(prev, v), max(prev, v))] = 3
            prev = v
    return CoxeterDiagram(range(1, n + 1), labels)


_NAMED_RE = re.compile(r"^(~?)([A-IH])(\d+)$")
_I2_RE = re.compile(r"^I2\((\d+)\)$")


def parse_diagram(text: str) -> CoxeterDiagram:
    """Parse a named type (``B3``, ``I2(7)``, ``~A3``) or an explicit
    ``n=<k>; i-j:label ...`` edge list."""
    s = text.strip()
    if not s:
        raise DiagramError("empty diagram spec")
    if "inf" in s.lower() or "∞" in s:
        raise DiagramError("infinite labels are not supported")
    m = _I2_RE.match(s)
    if m:
        return _named("I", 2, int(m.group(1)))
    m = _NAMED_RE.match(s)
    if m:
        affine, kind, num = m.group(1) == "~", m.group(2), int(m.group(3))
        if affine:
            return _named_affine(kind, num)
        if kind == "C":
            kind = "B"  # Remark: the B_n and C_n complexes are isomorphic
        return _named(kind, num)
    if "=" not in s:
        raise DiagramError(f"unrecognized diagram spec {text!r}")
    head, _, tail = s.partition(";")
    head = head.strip()
    if not head.startswith("n="):
        raise DiagramError("explicit spec must start with n=<count>")
    try:
        n = int(head[2:])
    except ValueError as e:
        raise DiagramError(f"bad vertex count in {head!r}") from e
    if n < 0:
        raise DiagramError("vertex count must be >= 0")
    labels: dict[tuple[int, int], int] = {}
    for tok in tail.split():
        em = re.match(r"^(\d+)-(\d+):(-?\d+)$", tok)
        if not em:
            raise DiagramError(f"bad edge token {tok!r}")
        i, j, lab = int(em.group(1)), int(em.group(2)), int(em.group(3))
        if not (1 <= i <= n and 1 <= j <= n):
            raise DiagramError(f"vertex index out of range in {tok!r}")
        if i == j:
            raise DiagramError(f"self-loop in {tok!r}")
        if lab < 2:
            raise DiagramError(f"label {lab} < 2 in {tok!r}")
        key = (min(i, j), max(i, j))
        if key in labels and labels[key] != lab:
            raise DiagramError(f"conflicting labels for edge {key}")
        labels[key] = lab
    return CoxeterDiagram(range(1, n + 1), labels)


# ---------------------------------------------------------------------------
# subdiagrams and bipartition


def induced_subdiagram(G: CoxeterDiagram, S) -> CoxeterDiagram:
    S = set(S)
    unknown = S - set(G.vertices)
    if unknown:
        raise DiagramError(f"unknown vertex ids {sorted(unknown)}")
    verts = tuple(v for v in G.vertices if v in S)
    labels = {
        (i, j): lab for (i, j), lab in G.labels.items() if i in S and j in S
    }
    return CoxeterDiagram(verts, labels)


def codim1_subdiagrams(G: CoxeterDiagram) -> list[tuple[int, CoxeterDiagram]]:
    """One entry per vertex: (removed vertex, remaining diagram)."""
    out = []
    vs = set(G.vertices)
    for v in G.vertices:
        out.append((v, induced_subdiagram(G, vs - {v})))
    return out


def connected_components(G: CoxeterDiagram) -> list[CoxeterDiagram]:
    """Components of the label>=3 skeleton, each keeping parent ids."""
    seen: set[int] = set()
    comps = []
    for v in G.vertices:
        if v in seen:
            continue
        stack, comp = [v], set()
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(w for w in G.neighbors(u) if w not in comp)
        seen |= comp
        comps.append(induced_subdiagram(G, comp))
    return comps


def bipartition(G: CoxeterDiagram) -> tuple[frozenset[int], frozenset[int]]:
    """Deterministic 2-coloring of the skeleton: the smallest vertex id of
    each component lands in the plus class; BFS extends the coloring."""
    color: dict[int, int] = {}
    for start in sorted(G.vertices):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for w in G.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    raise OddCycle(f"odd cycle through vertex {w}")
    plus = frozenset(v for v, c in color.items() if c == 0)
    minus = frozenset(v for v, c in color.items() if c == 1)
    return plus, minus


# ---------------------------------------------------------------------------
# classification against the finite / affine catalogs


@dataclass(frozen=True)
class Classification:
    kind: str  # "finite" | "finite-reducible" | "affine" | "other-infinite"
    type_name: str | None = None
    rank: int = 0
    exponents: tuple[int | Fraction, ...] | None = None
    coxeter_number: Fraction | None = None
    minus_one_longest: bool | None = None
    components: tuple["Classification", ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.kind in ("finite", "finite-reducible")


def _finite(name, rank, exps, h, minus_one) -> Classification:
    return Classification(
        "finite", name, rank, tuple(exps), Fraction(h), minus_one
    )


def _classify_connected(G: CoxeterDiagram) -> Classification:
    n = G.rank
    if n == 0:
        return Classification("finite", "empty", 0, (), Fraction(0), True)
    if n == 1:
        return _finite("A1", 1, (1,), 2, True)
    if n == 2:
        a = G.label(*G.vertices)
        names = {3: "A2", 4: "B2", 6: "G2"}
        return _finite(names.get(a, f"I2({a})"), 2, (1, a - 1), a, a % 2 == 0)

    edges = G.edges()
    high = [(i, j, lab) for i, j, lab in edges if lab >= 4]
    degrees = {v: len(G.neighbors(v)) for v in G.vertices}
    has_cycle = len(edges) >= n  # skeleton of a connected diagram

    if has_cycle:
        is_plain_cycle = len(edges) == n and all(d == 2 for d in degrees.values())
        if is_plain_cycle and not high:
            return Classification("affine", f"~A{n - 1}", n)
        return Classification("other-infinite", None, n)

    # tree cases from here on
    leaves = [v for v, d in degrees.items() if d == 1]
    branch3 = [v for v, d in degrees.items() if d == 3]
    branch_big = [v for v, d in degrees.items() if d >= 4]
    is_path = not branch3 and not branch_big

    def path_label_seq() -> list[int]:
        end = min(leaves)
        seq, prev, cur = [], None, end
        while True:
            nbrs = [(w, lab) for w, lab in G.neighbors(cur).items() if w != prev]
            if not nbrs:
                return seq
            (w, lab) = nbrs[0]
            seq.append(lab)
            prev, cur = cur, w

    if any(lab >= 7 for _, _, lab in high):
        return Classification("other-infinite", None, n)

    if not high:  # simply laced tree
        if is_path:
            return _finite(f"A{n}", n, range(1, n + 1), n + 1, False)
        if branch_big:
            if len(branch_big) == 1 and degrees[branch_big[0]] == 4 and n == 5:
                return Classification("affine", "~D4", n)
            return Classification("other-infinite", None, n)
        if len(branch3) == 1:
            arms = tuple(sorted(_arm_lengths(G, branch3[0]), reverse=True))
            if arms[1:] == (1, 1):
                exps = list(range(1, 2 * n - 2, 2)) + [n - 1]
                return _finite(f"D{n}", n, sorted(exps), 2 * n - 2, n % 2 == 0)
            table = {
                (2, 2, 1): _finite("E6", 6, (1, 4, 5, 7, 8, 11), 12, False),
                (3, 2, 1): _finite("E7", 7, (1, 5, 7, 9, 11, 13, 17), 18, True),
                (4, 2, 1): _finite("E8", 8, (1, 7, 11, 13, 17, 19, 23, 29), 30, True),
                (2, 2, 2): Classification("affine", "~E6", n),
                (3, 3, 1): Classification("affine", "~E7", n),
                (5, 2, 1): Classification("affine", "~E8", n),
            }
            return table.get(arms, Classification("other-infinite", None, n))
        if len(branch3) == 2:
            arm_sets = [sorted(_arm_lengths(G, b))[:2] for b in branch3]
            if all(a == [1, 1] for a in arm_sets):
                return Classification("affine", f"~D{n - 1}", n)
        return Classification("other-infinite", None, n)

    if len(high) == 1 and high[0][2] == 4:
        (hi, hj, _) = high[0]
        if is_path:
            seq = path_label_seq()
            if seq[0] == 4 or seq[-1] == 4:
                return _finite(f"B{n}", n, range(1, 2 * n, 2), 2 * n, True)
            if n == 4 and seq == [3, 4, 3]:
                return _finite("F4", 4, (1, 5, 7, 11), 12, True)
            if n == 5 and seq in ([3, 3, 4, 3], [3, 4, 3, 3]):
                return Classification("affine", "~F4", n)
            return Classification("other-infinite", None, n)
        if len(branch3) == 1 and not branch_big:
            hub = branch3[0]
            arms = tuple(sorted(_arm_lengths(G, hub), reverse=True))
            leaf_end = hi if degrees[hi] == 1 else (hj if degrees[hj] == 1 else None)
            if arms[1:] == (1, 1) and leaf_end is not None:
                if _dist(G, hub, leaf_end) == arms[0]:
                    return Classification("affine", f"~B{n - 1}", n)
        return Classification("other-infinite", None, n)

    if len(high) == 1 and high[0][2] == 5:
        if is_path:
            seq = path_label_seq()
            if seq[0] == 5 or seq[-1] == 5:
                if n == 3:
                    return _finite("H3", 3, (1, 5, 9), 10, True)
                if n == 4:
                    return _finite("H4", 4, (1, 11, 19, 29), 30, True)
        return Classification("other-infinite", None, n)

    if len(high) == 1 and high[0][2] == 6:
        if is_path and n == 3:
            return Classification("affine", "~G2", n)
        return Classification("other-infinite", None, n)

    if len(high) == 2 and all(lab == 4 for _, _, lab in high) and is_path:
        seq = path_label_seq()
        if seq[0] == 4 and seq[-1] == 4 and all(l == 3 for l in seq[1:-1]):
            return Classification("affine", f"~C{n - 1}", n)
    return Classification("other-infinite", None, n)


def _dist(G: CoxeterDiagram, u: int, v: int) -> int:
    seen = {u: 0}
    queue = [u]
    while queue:
        w = queue.pop(0)
        if w == v:
            return seen[w]
        for x in G.neighbors(w):
            if x not in seen:
                seen[x] = seen[w] + 1
                queue.append(x)
    raise DiagramError("vertices in different components")


def _arm_lengths(G: CoxeterDiagram, hub: int) -> list[int]:
    out = []
    for start in G.neighbors(hub):
        length, prev, cur = 1, hub, start
        while True:
            nxt = [w for w in G.neighbors(cur) if w != prev]
            if len(nxt) != 1:
                break
            prev, cur = cur, nxt[0]
            length += 1
        out.append(length)
    return out


def classify(G: CoxeterDiagram) -> Classification:
    comps = connected_components(G)
    if len(comps) <= 1:
        return _classify_connected(comps[0]) if comps else _classify_connected(G)
    parts = tuple(_classify_connected(c) for c in comps)
    if all(p.kind == "finite" for p in parts):
        return Classification(
            "finite-reducible",
            "x".join(p.type_name or "?" for p in parts),
            G.rank,
            components=parts,
        )
    return Classification("other-infinite", None, G.rank, components=parts)
