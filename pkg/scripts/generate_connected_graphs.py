#!/usr/bin/env python3
"""One-time generator for the connected-graph stream shipped in data/.

Produces every connected graph on 1..N vertices, one representative per
isomorphism class, as sorted graph6 lines (gzip-compressed).  Method:
vertex augmentation - every connected graph on k vertices arises from some
connected graph on k-1 vertices by attaching a new vertex to a nonempty
neighborhood (every connected graph has at least one non-cut vertex), so
augmenting every representative with every nonempty neighborhood covers
every class.  Candidates are bucketed by an iterated color-refinement
invariant and deduplicated by exact isomorphism search inside each bucket;
a merge therefore only ever happens between genuinely isomorphic graphs.

The per-order class counts are checked against the published sequence of
connected-graph numbers before anything is written, so a generation bug
cannot silently produce a wrong fixture.

Usage: python scripts/generate_connected_graphs.py [N] [OUTPUT.g6.gz]
"""

import gzip
import sys
import time
from collections import defaultdict

sys.path.insert(0, "src")

from graphsig.graphs import Graph, bits, to_graph6  # noqa: E402

# connected graphs per order, 1-indexed
KNOWN_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571]


def wl_colors(adj: tuple, n: int) -> tuple:
    """Iterated neighborhood color refinement; returns per-vertex color
    ranks, invariant under isomorphism."""
    colors = [0] * n
    for _ in range(n):
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return tuple(colors)


def isomorphic(a: tuple, b: tuple, ca: tuple, cb: tuple, n: int) -> bool:
    """Exact isomorphism test guided by refinement colors."""
    groups_b = defaultdict(list)
    for w in range(n):
        groups_b[cb[w]].append(w)
    order = sorted(range(n), key=lambda v: (len(groups_b.get(ca[v], ())), ca[v]))
    mapping = [-1] * n
    mapped = []  # (v, image) pairs in assignment order

    def backtrack(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in groups_b.get(ca[v], ()):
            if (used >> w) & 1:
                continue
            row_v = a[v]
            row_w = b[w]
            if all((((row_v >> u) & 1) == ((row_w >> mu) & 1))
                   for u, mu in mapped):
                mapping[v] = w
                mapped.append((v, w))
                if backtrack(i + 1, used | (1 << w)):
                    return True
                mapped.pop()
                mapping[v] = -1
        return False

    return backtrack(0, 0)


def bucket_key(adj: tuple, colors: tuple, n: int):
    m = sum(row.bit_count() for row in adj) // 2
    hist = defaultdict(int)
    for c in colors:
        hist[c] += 1
    return (n, m, tuple(sorted(hist.items())))


def connected_level(prev: list, n: int) -> list:
    """All connected graphs on n vertices from those on n-1 vertices."""
    buckets: dict = {}
    accepted = []
    new_bit = 1 << (n - 1)
    for base in prev:
        for nbhd in range(1, 1 << (n - 1)):
            adj = tuple(
                row | new_bit if (nbhd >> v) & 1 else row
                for v, row in enumerate(base)
            ) + (nbhd,)
            colors = wl_colors(adj, n)
            key = bucket_key(adj, colors, n)
            bucket = buckets.get(key)
            if bucket is None:
                buckets[key] = [(adj, colors)]
                accepted.append(adj)
                continue
            if any(isomorphic(adj, other, colors, oc, n)
                   for other, oc in bucket):
                continue
            bucket.append((adj, colors))
            accepted.append(adj)
    return accepted


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    out_path = sys.argv[2] if len(sys.argv) > 2 else "data/connected_1_9.g6.gz"
    levels = [[(0,)]]
    for n in range(2, n_max + 1):
        t0 = time.time()
        level = connected_level(levels[-1], n)
        expect = KNOWN_COUNTS[n - 1]
        status = "ok" if len(level) == expect else f"MISMATCH (expected {expect})"
        print(f"n={n}: {len(level)} connected graphs "
              f"[{time.time() - t0:.1f}s] {status}", flush=True)
        if len(level) != expect:
            return 1
        levels.append(level)
    lines = []
    for level in levels:
        chunk = [to_graph6(Graph(len(adj), adj)) for adj in level]
        chunk.sort()
        lines.extend(chunk)
    with gzip.open(out_path, "wt", encoding="utf-8", compresslevel=9) as fh:
        fh.write("# connected graphs, one isomorphism class representative per line\n")
        for line in lines:
            fh.write(line + "\n")
    print(f"wrote {len(lines)} graphs to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
