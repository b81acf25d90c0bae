"""Desk-scale graph family generators and graph6 stream ingestion.

Free trees are generated one representative per isomorphism class (leaf
augmentation deduplicated by a center-rooted canonical encoding).  The
unicyclic and bicyclic streams add one or two extra edges on top of those
trees; they cover every isomorphism class but intentionally allow duplicate
classes, since the downstream checks are per-graph universals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional

from .graphs import MAX_ORDER, Graph, Graph6ParseError, add_edge, bits, from_graph6
from .transforms import SunSpec

TREE_CAP_DEFAULT = 14


# -- free trees ----------------------------------------------------------


def tree_center(g: Graph) -> list[int]:
    """The 1 or 2 middle vertices left by peeling leaves layer by layer."""
    n = g.n
    if n == 0:
        raise ValueError("empty graph has no center")
    if n <= 2:
        return list(range(n))
    deg = g.degrees()
    alive = n
    layer = [v for v in range(n) if deg[v] <= 1]
    removed = [False] * n
    while alive > 2:
        nxt = []
        for v in layer:
            removed[v] = True
        alive -= len(layer)
        for v in layer:
            for u in bits(g.adj[v]):
                if not removed[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return [v for v in range(n) if not removed[v]]


def tree_canonical_form(g: Graph) -> tuple:
    """Canonical nested-tuple encoding of a free tree (roots at the center,
    children sorted recursively; two-vertex centers take the smaller of the
    two rooted encodings)."""

    def encode(v: int, parent: int) -> tuple:
        return tuple(sorted(encode(u, v) for u in bits(g.adj[v]) if u != parent))

    return min(encode(c, -1) for c in tree_center(g))


@lru_cache(maxsize=None)
def _trees_up_to(n: int) -> tuple[tuple[Graph, ...], ...]:
    """Representatives per size 1..n; index k-1 holds the trees on k vertices,
    sorted by canonical form."""
    levels: list[tuple[Graph, ...]] = [(Graph(1, [0]),)]
    for size in range(2, n + 1):
        seen: dict[tuple, Graph] = {}
        for base in levels[-1]:
            for v in range(base.n):
                adj = list(base.adj) + [1 << v]
                adj[v] |= 1 << (size - 1)
                cand = Graph(size, adj)
                key = tree_canonical_form(cand)
                if key not in seen:
                    seen[key] = cand
        levels.append(tuple(seen[k] for k in sorted(seen)))
    return tuple(levels)


def free_trees(n: int, cap: int = TREE_CAP_DEFAULT) -> Iterator[Graph]:
    """All free trees on exactly n vertices, one per isomorphism class,
    in a deterministic order."""
    if not (1 <= n <= cap):
        raise ValueError(f"tree order must be in 1..{cap}")
    yield from _trees_up_to(n)[n - 1]


def free_tree_count(n: int, cap: int = TREE_CAP_DEFAULT) -> int:
    if not (1 <= n <= cap):
        raise ValueError(f"tree order must be in 1..{cap}")
    return len(_trees_up_to(n)[n - 1])


# -- unicyclic / bicyclic --------------------------------------------------


def _with_one_more_edge(stream: Iterable[Graph]) -> Iterator[Graph]:
    for g in stream:
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    yield add_edge(g, (u, v))


def unicyclic_from_trees(n: int, cap: int = TREE_CAP_DEFAULT) -> Iterator[Graph]:
    """Every tree on n vertices plus one extra edge.  Exhaustive over
    unicyclic isomorphism classes; duplicates permitted."""
    yield from _with_one_more_edge(free_trees(n, cap))


def bicyclic_from_unicyclic(n: int, cap: int = TREE_CAP_DEFAULT) -> Iterator[Graph]:
    """Every generated unicyclic graph on n vertices plus one further edge."""
    yield from _with_one_more_edge(unicyclic_from_trees(n, cap))


# -- suns ------------------------------------------------------------------


def sun_grid(t_max: int, pendant_cap: int, t_min: int = 3) -> Iterator[SunSpec]:
    """All sun specifications with cycle length t_min..t_max and pendant
    counts 0..pendant_cap, in lexicographic order.  Rotations and
    reflections are not deduplicated."""
    if t_max < 3:
        raise ValueError("t_max must be >= 3")
    if pendant_cap < 0:
        raise ValueError("pendant cap must be >= 0")
    for t in range(max(3, t_min), t_max + 1):
        for pendants in product(range(pendant_cap + 1), repeat=t):
            yield SunSpec(t, pendants)


# -- graph6 stream ingestion -----------------------------------------------


@dataclass(frozen=True)
class StreamItem:
    """One record of a graph6 line stream: either a graph or a parse error."""

    line_no: int
    text: str
    graph: Optional[Graph] = None
    error: Optional[str] = None
    index: Optional[int] = None  # 1-based position among parsed graphs

    @property
    def ok(self) -> bool:
        return self.graph is not None


def ingest_graph6(lines: Iterable[str], strict: bool = False,
                  max_order: int = MAX_ORDER) -> Iterator[StreamItem]:
    """Parse a graph6 line stream.  Lines starting with '#' and blank lines
    are skipped.  In strict mode the first malformed line raises; otherwise
    it becomes an error record and the stream continues."""
    count = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line or line.startswith("#"):
            continue
        try:
            g = from_graph6(line, max_order=max_order)
        except Graph6ParseError as exc:
            if strict:
                raise Graph6ParseError(f"line {line_no}: {exc}", exc.offset) from exc
            yield StreamItem(line_no=line_no, text=line, error=str(exc))
            continue
        count += 1
        yield StreamItem(line_no=line_no, text=line, graph=g, index=count)
