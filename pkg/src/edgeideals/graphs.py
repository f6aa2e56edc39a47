"""Labeled simple graphs plus the surgeries the family builders need.

Vertices carry structured labels that record their role (spine vertex,
triangle apex, bristle of either, or anonymous).  Vertex ids are always
dense 0-based integers assigned in canonical label order, so two builds
of the same family are identical object-for-object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FusionLoopError

# Canonical role order: spine, apexes, spine bristles, apex bristles, anonymous.
_ROLE_RANK = {"path": 0, "apex": 1, "path_bristle": 2, "apex_bristle": 3, "anon": 4}


@dataclass(frozen=True)
class VertexLabel:
    """Structured vertex name, e.g. apex(2, 1) prints as y21."""

    role: str
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.role not in _ROLE_RANK:
            raise ValueError(f"unknown vertex role {self.role!r}")

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (_ROLE_RANK[self.role], self.indices)

    @property
    def name(self) -> str:
        """Compact display name; underscores appear only for indices >= 10."""
        prefix = {"path": "x", "apex": "y", "path_bristle": "x",
                  "apex_bristle": "y", "anon": "v"}[self.role]
        if all(i <= 9 for i in self.indices):
            return prefix + "".join(str(i) for i in self.indices)
        return prefix + "_".join(str(i) for i in self.indices)

    def __repr__(self):
        return f"VertexLabel({self.role!r}, {self.indices!r})"


def path_vertex(i: int) -> VertexLabel:
    return VertexLabel("path", (i,))


def apex(j: int, k: int) -> VertexLabel:
    return VertexLabel("apex", (j, k))


def path_bristle(i: int, t: int) -> VertexLabel:
    return VertexLabel("path_bristle", (i, t))


def apex_bristle(j: int, k: int, t: int) -> VertexLabel:
    return VertexLabel("apex_bristle", (j, k, t))


def anonymous(i: int) -> VertexLabel:
    return VertexLabel("anon", (i,))


class LabeledGraph:
    """Immutable simple graph with unique vertex labels.

    Construction sorts labels into canonical order and renumbers the
    edges accordingly.  Edges are stored as sorted index pairs.
    """

    __slots__ = ("labels", "edges", "adjacency", "_index")

    def __init__(self, labels: Iterable[VertexLabel],
                 edges: Iterable[tuple[VertexLabel, VertexLabel]]):
        ordered = sorted(labels, key=lambda l: l.sort_key)
        if len(set(ordered)) != len(ordered):
            raise ValueError("duplicate vertex labels")
        index = {lab: i for i, lab in enumerate(ordered)}
        pairs = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at {a.name}")
            try:
                ia, ib = index[a], index[b]
            except KeyError as exc:
                raise ValueError(f"edge endpoint {exc.args[0]!r} not a vertex") from None
            pairs.add((min(ia, ib), max(ia, ib)))
        self.labels: tuple[VertexLabel, ...] = tuple(ordered)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(pairs))
        adj = [0] * len(ordered)
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        self.adjacency: tuple[int, ...] = tuple(adj)
        self._index = index

    @classmethod
    def from_edge_list(cls, n_vertices: int,
                       pairs: Iterable[tuple[int, int]]) -> "LabeledGraph":
        """Anonymous graph on vertices 0..n-1 given as index pairs."""
        labels = [anonymous(i) for i in range(n_vertices)]
        return cls(labels, [(labels[a], labels[b]) for a, b in pairs])

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def index_of(self, label: VertexLabel) -> int:
        return self._index[label]

    def has_label(self, label: VertexLabel) -> bool:
        return label in self._index

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def is_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a] >> b & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adjacency[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n_vertices)))

    def __eq__(self, other):
        return (isinstance(other, LabeledGraph)
                and self.labels == other.labels and self.edges == other.edges)

    def __hash__(self):
        return hash((self.labels, self.edges))

    def __repr__(self):
        return f"<LabeledGraph {self.n_vertices} vertices, {self.n_edges} edges>"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def null_graph(k: int, start: int = 0) -> LabeledGraph:
    """k isolated anonymous vertices."""
    return LabeledGraph([anonymous(start + i) for i in range(k)], [])


def disjoint_union(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    """Disjoint union; h's vertices are renamed to fresh anonymous labels."""
    fresh = _fresh_anon_counter(g)
    rename = {}
    for lab in h.labels:
        rename[lab] = anonymous(next(fresh))
    labels = list(g.labels) + [rename[lab] for lab in h.labels]
    edges = [(g.labels[a], g.labels[b]) for a, b in g.edges]
    edges += [(rename[h.labels[a]], rename[h.labels[b]]) for a, b in h.edges]
    return LabeledGraph(labels, edges)


def _fresh_anon_counter(g: LabeledGraph):
    used = [lab.indices[0] for lab in g.labels if lab.role == "anon"]
    i = max(used) + 1 if used else 0
    while True:
        yield i
        i += 1


def corona(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    """Corona product: one copy of h per vertex of g, joined to that vertex.

    Copies get anonymous labels.  |V| = |V(g)|*(1+|V(h)|) and
    |E| = |E(g)| + |V(g)|*(|E(h)| + |V(h)|).
    """
    fresh = _fresh_anon_counter(g)
    labels = list(g.labels)
    edges = [(g.labels[a], g.labels[b]) for a, b in g.edges]
    for v in range(g.n_vertices):
        copy = [anonymous(next(fresh)) for _ in range(h.n_vertices)]
        labels.extend(copy)
        edges.extend((copy[a], copy[b]) for a, b in h.edges)
        edges.extend((g.labels[v], w) for w in copy)
    return LabeledGraph(labels, edges)


def bristle(g: LabeledGraph, q: int) -> LabeledGraph:
    """Attach q pendant leaves to every vertex.

    Leaves of spine vertices and apexes get structured bristle labels;
    bristling an already-bristled or anonymous vertex falls back to
    anonymous leaves.  Isomorphic to corona(g, null_graph(q)).
    """
    if q < 1:
        raise ValueError("q must be at least 1")
    fresh = _fresh_anon_counter(g)
    # count bristles already attached per host so indices keep counting up
    taken: dict[tuple, int] = {}
    for lab in g.labels:
        if lab.role == "path_bristle":
            key = ("path", lab.indices[:1])
            taken[key] = max(taken.get(key, 0), lab.indices[1])
        elif lab.role == "apex_bristle":
            key = ("apex", lab.indices[:2])
            taken[key] = max(taken.get(key, 0), lab.indices[2])
    labels = list(g.labels)
    edges = [(g.labels[a], g.labels[b]) for a, b in g.edges]
    for v in range(g.n_vertices):
        host = g.labels[v]
        base = taken.get((host.role, host.indices), 0)
        for t in range(1, q + 1):
            if host.role == "path":
                leaf = path_bristle(host.indices[0], base + t)
            elif host.role == "apex":
                leaf = apex_bristle(host.indices[0], host.indices[1], base + t)
            else:
                leaf = anonymous(next(fresh))
            labels.append(leaf)
            edges.append((host, leaf))
    return LabeledGraph(labels, edges)


def fuse(g: LabeledGraph, a: int, b: int) -> LabeledGraph:
    """Identify vertices a and b (keeping a's label), deduplicating edges.

    Raises FusionLoopError when a and b are adjacent, since the merged
    vertex would carry a loop.
    """
    if a == b:
        raise ValueError("cannot fuse a vertex with itself")
    if g.is_edge(a, b):
        raise FusionLoopError(
            f"vertices {g.labels[a].name} and {g.labels[b].name} are adjacent")
    keep = g.labels[a]
    labels = [lab for i, lab in enumerate(g.labels) if i != b]
    edges = []
    for u, v in g.edges:
        lu = keep if u == b else g.labels[u]
        lv = keep if v == b else g.labels[v]
        edges.append((lu, lv))
    return LabeledGraph(labels, edges)


def strip_isolated(g: LabeledGraph) -> tuple[LabeledGraph, int]:
    """Drop isolated vertices; returns (graph, number removed)."""
    keep = [v for v in range(g.n_vertices) if g.adjacency[v]]
    removed = g.n_vertices - len(keep)
    labels = [g.labels[v] for v in keep]
    edges = [(g.labels[a], g.labels[b]) for a, b in g.edges]
    return LabeledGraph(labels, edges), removed


def connected_components(g: LabeledGraph) -> list[LabeledGraph]:
    """Connected components with at least one vertex, isolated ones included."""
    seen = [False] * g.n_vertices
    comps = []
    for s in range(g.n_vertices):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comp_set = set(comp)
        labels = [g.labels[v] for v in sorted(comp)]
        edges = [(g.labels[a], g.labels[b]) for a, b in g.edges
                 if a in comp_set and b in comp_set]
        comps.append(LabeledGraph(labels, edges))
    return comps


def relabel_anonymous(g: LabeledGraph, order: Sequence[int]) -> LabeledGraph:
    """Rebuild g with anonymous labels assigned along the given vertex order.

    Used by tests to check that isomorphism ignores labeling.
    """
    if sorted(order) != list(range(g.n_vertices)):
        raise ValueError("order must be a permutation of the vertices")
    new = {order[i]: anonymous(i) for i in range(g.n_vertices)}
    labels = [new[v] for v in range(g.n_vertices)]
    edges = [(new[a], new[b]) for a, b in g.edges]
    return LabeledGraph(labels, edges)


# ---------------------------------------------------------------------------
# isomorphism testing


def _refine_colors(g: LabeledGraph) -> tuple[int, ...]:
    """Iterated degree refinement; returns a stable color per vertex."""
    n = g.n_vertices
    colors = [g.degree(v) for v in range(n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
                for v in range(n)]
        palette = {s: c for c, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if new == colors:
            return tuple(new)
        colors = new


def is_isomorphic(g: LabeledGraph, h: LabeledGraph) -> bool:
    """Label-blind graph isomorphism by color refinement plus backtracking."""
    if g.n_vertices != h.n_vertices or g.n_edges != h.n_edges:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    cg, ch = _refine_colors(g), _refine_colors(h)
    if sorted(cg) != sorted(ch):
        return False
    n = g.n_vertices
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)
    # most constrained vertices first
    order = sorted(range(n), key=lambda v: (len(by_color[cg[v]]), cg[v], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        for v in by_color[cg[u]]:
            if used[v]:
                continue
            ok = True
            for w in range(n):
                mw = mapping[w]
                if mw >= 0 and g.is_edge(u, w) != h.is_edge(v, mw):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                if extend(i + 1):
                    return True
                mapping[u] = -1
                used[v] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# input and output


def to_dot(g: LabeledGraph, name: str = "family") -> str:
    """DOT export, one line per edge, display names as node labels."""
    lines = [f"graph {name} {{"]
    lines.append(f"  // vertices: {g.n_vertices}")
    lines.append(f"  // edges: {g.n_edges}")
    for v in range(g.n_vertices):
        lines.append(f'  {v} [label="{g.labels[v].name}"];')
    for a, b in g.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> LabeledGraph:
    """Parse a whitespace edge list, one 'a b' pair of vertex ids per line.

    Vertex count is one plus the largest id seen.  Blank lines and lines
    starting with '#' are ignored.
    """
    pairs = []
    top = -1
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected two vertex ids per line, got {raw!r}")
        a, b = int(parts[0]), int(parts[1])
        if a < 0 or b < 0:
            raise ValueError("vertex ids must be non-negative")
        top = max(top, a, b)
        pairs.append((a, b))
    return LabeledGraph.from_edge_list(top + 1, pairs)
