"""Simple undirected graphs with stable 0-based vertex identities.

Adjacency is stored as one integer bitmask per vertex, which keeps every
structural query (degrees, components, articulation points) cheap at the
desk scales this package targets (order <= 64).  Graphs are immutable by
convention: every operation returns a new Graph and never mutates its input,
so values can be shared freely across worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_ORDER = 64


class Graph6ParseError(ValueError):
    """Malformed graph6 text; `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Labeled simple graph on vertices 0..n-1.

    `labels[v]` is an optional provenance tag (e.g. the source edge a
    line-graph vertex stands for).  `old_to_new` records the re-index map
    when the graph was produced by deleting vertices from another graph.
    """

    __slots__ = ("n", "adj", "labels", "old_to_new")

    def __init__(self, n: int, adj: Sequence[int], labels: Optional[tuple] = None,
                 old_to_new: Optional[dict] = None):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & (1 << v):
                raise ValueError(f"loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} references missing vertices")
        for v in range(n):
            for u in bits(adj[v]):
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length does not match vertex count")
        self.n = n
        self.adj = adj
        self.labels = labels
        self.old_to_new = old_to_new

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[tuple] = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    # -- basic queries -------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (min, max) pairs in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            base = u + 1
            while row:
                low = row & -row
                out.append((u, base + low.bit_length() - 1))
                row ^= low
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def relabel(self, labels: Optional[tuple]) -> "Graph":
        return Graph(self.n, self.adj, labels, self.old_to_new)


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- graph6 codec ------------------------------------------------------
#
# Standard layout: size header (chr(n+63) for n <= 62, '~' + 18-bit form
# for 63 <= n <= 258047), then the upper triangle in column-major order
# (pairs (0,1), (0,2), (1,2), (0,3), ...) packed 6 bits per character,
# each character offset by 63, zero padding in the final character.


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    elif n <= 258047:
        header = "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    else:
        raise ValueError("graph too large for graph6 output")
    chunks = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        chunks.append(chr((acc << (6 - nbits)) + 63))
    return header + "".join(chunks)


def from_graph6(text: str, max_order: int = MAX_ORDER) -> Graph:
    """Decode one line of graph6.  Rejects orders above `max_order`."""
    text = text.rstrip("\r\n")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6ParseError("empty graph6 string", 0)
    for off, ch in enumerate(text):
        if not (63 <= ord(ch) <= 126):
            raise Graph6ParseError(f"character {ch!r} outside graph6 range", off)
    if text.startswith("~~"):
        raise Graph6ParseError("8-byte size header not supported", 0)
    if text[0] == "~":
        if len(text) < 4:
            raise Graph6ParseError("truncated long-form size header", len(text))
        n = 0
        for ch in text[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = text[4:]
        body_offset = 4
    else:
        n = ord(text[0]) - 63
        body = text[1:]
        body_offset = 1
    if n > max_order:
        raise Graph6ParseError(f"order {n} exceeds maximum {max_order}", 0)
    npairs = n * (n - 1) // 2
    nchars = (npairs + 5) // 6
    if len(body) < nchars:
        raise Graph6ParseError(
            f"body has {len(body)} characters, expected {nchars}",
            body_offset + len(body))
    if len(body) > nchars:
        raise Graph6ParseError("trailing characters after adjacency bits",
                               body_offset + nchars)
    adj = [0] * n
    bit_index = 0
    pairs = _pair_order(n)
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        for b in range(5, -1, -1):
            bit = (val >> b) & 1
            if bit_index < npairs:
                if bit:
                    i, j = pairs[bit_index]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            elif bit:
                raise Graph6ParseError("nonzero padding bits", body_offset + k)
            bit_index += 1
    return Graph(n, adj)


def _pair_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


# -- vertex/edge surgery -----------------------------------------------


def delete_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    """Remove the given vertices; survivors are re-indexed in order.

    The result's `old_to_new` maps surviving old indices to new ones.
    """
    drop_set = set(drop)
    for v in drop_set:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph of order {g.n}")
    keep = [v for v in range(g.n) if v not in drop_set]
    return _induced_on(g, keep)


def induced(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertices (sorted), with re-index map."""
    keep = sorted(set(keep))
    for v in keep:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph of order {g.n}")
    return _induced_on(g, keep)


def _induced_on(g: Graph, keep: list[int]) -> Graph:
    old_to_new = {v: i for i, v in enumerate(keep)}
    m = len(keep)
    adj = [0] * m
    for i, v in enumerate(keep):
        row = g.adj[v]
        for j in range(i + 1, m):
            if (row >> keep[j]) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(m, adj, labels, old_to_new)


def delete_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    u, v = edge
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj, g.labels)


def add_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    u, v = edge
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"cannot add edge ({u}, {v})")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, adj, g.labels)


# -- connectivity ------------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def cut_vertices(g: Graph) -> list[int]:
    """Articulation points, ascending (Tarjan lowpoint DFS, iterative)."""
    n = g.n
    if n == 0:
        return []
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack = [(root, iter(bits(g.adj[root])))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(bits(g.adj[w]))))
                    advanced = True
                    break
                elif w != parent[v]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        is_cut[p] = True
        if root_children > 1:
            is_cut[root] = True
    return [v for v in range(n) if is_cut[v]]


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.edge_count == g.n - 1 and is_connected(g)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


# -- structural summary ------------------------------------------------


@dataclass(frozen=True)
class StructureSummary:
    """Structural profile: components, articulation points, degree data,
    the count of edges touching a vertex of degree > 2, and the cycle-space
    dimension |E| - |V| + 1 reported per component."""

    component_count: int
    cut_vertices: tuple[int, ...]
    degree_sequence: tuple[int, ...]
    theta: int
    dimensions: tuple[int, ...]

    @property
    def dimension(self) -> int:
        """Cycle-space dimension; only meaningful for connected graphs."""
        if self.component_count != 1:
            raise ValueError("dimension of a disconnected graph is per component")
        return self.dimensions[0]


def structure(g: Graph) -> StructureSummary:
    comps = components(g)
    degs = g.degrees()
    big = 0  # mask of vertices with degree > 2
    for v, d in enumerate(degs):
        if d > 2:
            big |= 1 << v
    theta = 0
    for u, v in g.edges():
        if (big >> u) & 1 or (big >> v) & 1:
            theta += 1
    dims = []
    for comp in comps:
        edges_inside = sum(g.degree(v) for v in comp) // 2
        dims.append(edges_inside - len(comp) + 1)
    return StructureSummary(
        component_count=len(comps),
        cut_vertices=tuple(cut_vertices(g)),
        degree_sequence=tuple(sorted(degs, reverse=True)),
        theta=theta,
        dimensions=tuple(dims),
    )


def cycle_type(g: Graph, cycle_vertices: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint on the given chordless cycle.

    Raises ValueError unless the vertices induce a cycle in g.
    """
    cyc = sorted(set(cycle_vertices))
    k = len(cyc)
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    mask = 0
    for v in cyc:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph")
        mask |= 1 << v
    inside_edges = 0
    boundary = 0
    for v in cyc:
        inside = g.adj[v] & mask
        if inside.bit_count() != 2:
            raise ValueError("vertex set does not induce a cycle")
        inside_edges += 2
        boundary += (g.adj[v] & ~mask).bit_count()
    if inside_edges // 2 != k or not is_connected(induced(g, cyc)):
        raise ValueError("vertex set does not induce a cycle")
    return boundary


# -- elementary named graphs ---------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the hub at index 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [row << a.n for row in b.adj]
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = a.labels + b.labels
    return Graph(a.n + b.n, adj, labels)


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances; -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for v in bits(frontier):
            dist[v] = d
    return dist
