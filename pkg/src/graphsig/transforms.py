"""Derived-graph constructions: line graphs, powers, subdivisions, total
graphs, suns (cycles with pendant edges), and the degree-2 path contraction
that removes four consecutive degree-2 vertices in favor of a single edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, bits, delete_vertices, distances_from


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of g, labeled with its source pair; two vertices
    adjacent iff the source edges share an endpoint."""
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    m = len(edges)
    adj = [0] * m
    for v in range(g.n):
        incident = [index[(min(v, u), max(v, u))] for u in bits(g.adj[v])]
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                i, j = incident[a], incident[b]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(m, adj, labels=tuple(edges))


def power(g: Graph, k: int) -> Graph:
    """Join every pair at graph distance between 1 and k.  Vertices in
    different components are never joined."""
    if k < 1:
        raise ValueError("power exponent must be >= 1")
    if k == 1:
        return g
    adj = list(g.adj)
    for v in range(g.n):
        dist = distances_from(g, v)
        for u in range(v + 1, g.n):
            if 1 <= dist[u] <= k:
                adj[v] |= 1 << u
                adj[u] |= 1 << v
    return Graph(g.n, adj, labels=g.labels)


def subdivision(g: Graph) -> Graph:
    """Replace every edge by a length-2 path through a fresh vertex.

    Original vertices keep their indices; edge-vertices follow in the order
    of g.edges(), labeled with their source pair.
    """
    edges = g.edges()
    n = g.n
    total = n + len(edges)
    adj = [0] * total
    for i, (u, v) in enumerate(edges):
        w = n + i
        adj[u] |= 1 << w
        adj[w] |= (1 << u) | (1 << v)
        adj[v] |= 1 << w
    labels = [("v", v) for v in range(n)] + [("e", e) for e in edges]
    return Graph(total, adj, labels=tuple(labels))


def total_graph(g: Graph) -> Graph:
    """Vertices are V(g) plus E(g); adjacency means adjacent vertices,
    incident vertex/edge, or incident edges.

    Vertex order matches subdivision(): originals first, then edge-vertices
    in edge order, so this equals power(subdivision(g), 2) label for label.
    """
    edges = g.edges()
    n = g.n
    total = n + len(edges)
    adj = [0] * total
    for u in range(n):
        adj[u] = g.adj[u]
    for i, (u, v) in enumerate(edges):
        w = n + i
        adj[u] |= 1 << w
        adj[v] |= 1 << w
        adj[w] |= (1 << u) | (1 << v)
    for i in range(len(edges)):
        ui, vi = edges[i]
        for j in range(i + 1, len(edges)):
            uj, vj = edges[j]
            if ui == uj or ui == vj or vi == uj or vi == vj:
                adj[n + i] |= 1 << (n + j)
                adj[n + j] |= 1 << (n + i)
    labels = [("v", v) for v in range(n)] + [("e", e) for e in edges]
    return Graph(total, adj, labels=tuple(labels))


# -- suns ----------------------------------------------------------------


@dataclass(frozen=True)
class SunSpec:
    """A cycle of length t with pendants[i] pendant edges on cycle vertex i."""

    t: int
    pendants: tuple[int, ...]

    def __post_init__(self):
        if self.t < 3:
            raise ValueError("sun cycle length must be >= 3")
        if len(self.pendants) != self.t:
            raise ValueError("pendant sequence length must equal cycle length")
        if any(p < 0 for p in self.pendants):
            raise ValueError("pendant counts must be >= 0")

    @property
    def order(self) -> int:
        return self.t + sum(self.pendants)

    def __str__(self) -> str:
        return f"sun:{self.t},[{','.join(map(str, self.pendants))}]"


def sun(spec: SunSpec) -> Graph:
    """Cycle vertices 0..t-1 in cyclic order, then pendant vertices grouped
    by their anchor, in anchor order."""
    t = spec.t
    edges = [(i, (i + 1) % t) for i in range(t)]
    nxt = t
    for i, count in enumerate(spec.pendants):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


# -- degree-2 path contraction -------------------------------------------


@dataclass(frozen=True)
class ContractionSite:
    """An induced path a-b-c-d of degree-2 vertices with outside anchors
    u (adjacent to a) and w (adjacent to d); admissible only when u and w
    are distinct non-adjacent vertices outside the path."""

    inner: tuple[int, int, int, int]
    anchors: tuple[int, int]


def find_contraction_sites(g: Graph) -> list[ContractionSite]:
    """All admissible sites, one orientation each (inner[0] < inner[3]),
    in lexicographic order of the inner tuple."""
    deg2 = [v for v in range(g.n) if g.degree(v) == 2]
    deg2_set = set(deg2)
    sites = []
    for b in deg2:
        nb = list(bits(g.adj[b]))
        for a, c in (nb, nb[::-1]):
            if a not in deg2_set or c not in deg2_set:
                continue
            for d in bits(g.adj[c]):
                if d == b or d not in deg2_set:
                    continue
                inner = (a, b, c, d)
                if inner[0] > inner[3]:
                    continue
                inner_set = {a, b, c, d}
                if len(inner_set) != 4:
                    continue
                u = next(x for x in bits(g.adj[a]) if x != b)
                w = next(x for x in bits(g.adj[d]) if x != c)
                if u in inner_set or w in inner_set:
                    continue
                if u == w or g.has_edge(u, w):
                    continue
                sites.append(ContractionSite(inner, (u, w)))
    sites.sort(key=lambda s: s.inner)
    return sites


def contract_path4(g: Graph, site: ContractionSite) -> Graph:
    """Delete the four inner vertices and join the anchors by a new edge."""
    a, b, c, d = site.inner
    u, w = site.anchors
    inner_set = {a, b, c, d}
    if len(inner_set) != 4 or u in inner_set or w in inner_set:
        raise ValueError("invalid contraction site")
    for v in site.inner:
        if g.degree(v) != 2:
            raise ValueError(f"inner vertex {v} does not have degree 2")
    if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
            and g.has_edge(u, a) and g.has_edge(d, w)):
        raise ValueError("site path edges not present")
    if u == w or g.has_edge(u, w):
        raise ValueError("anchors coincide or are already adjacent")
    h = delete_vertices(g, inner_set)
    mapping = h.old_to_new
    nu, nw = mapping[u], mapping[w]
    adj = list(h.adj)
    adj[nu] |= 1 << nw
    adj[nw] |= 1 << nu
    return Graph(h.n, adj, h.labels, h.old_to_new)


def reduce_fully(g: Graph, max_steps: Optional[int] = None) -> tuple[Graph, int]:
    """Contract at the first admissible site until none remains.

    Returns (fixed point, number of contractions).  Different site orders may
    reach non-isomorphic fixed points, but all share the same signature.
    """
    steps = 0
    while True:
        sites = find_contraction_sites(g)
        if not sites:
            return g, steps
        g = contract_path4(g, sites[0])
        steps += 1
        if max_steps is not None and steps >= max_steps:
            return g, steps
