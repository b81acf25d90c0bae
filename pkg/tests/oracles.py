"""Independent brute-force oracles.

Everything here recomputes quantities the engine produces, by a different
route (permutation expansions, subset enumeration, direct definitions), and
is deliberately kept free of the modules it validates.
"""

from __future__ import annotations

from itertools import combinations, permutations

from graphsig.graphs import Graph, components, delete_vertices


def poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def charpoly_bruteforce(g: Graph) -> tuple[int, ...]:
    """det(xI - A) by signed permutation expansion; exponential, n <= 7."""
    n = g.n
    if n == 0:
        return (1,)
    entry = [[[0, 1] if i == j else [-1 if g.has_edge(i, j) else 0]
              for j in range(n)] for i in range(n)]
    total = [0] * (n + 1)
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            v = start
            while not seen[v]:
                seen[v] = True
                v = perm[v]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = [sign]
        zero = False
        for i in range(n):
            cell = entry[i][perm[i]]
            if cell == [0]:
                zero = True
                break
            term = poly_mul(term, cell)
        if not zero:
            total = poly_add(total, term)
    return tuple(total)


def census_bruteforce(g: Graph) -> dict[int, int]:
    """Cycle counts per length by enumerating vertex subsets and counting
    Hamiltonian cycles of each induced subgraph."""
    n = g.n
    counts: dict[int, int] = {}
    for k in range(3, n + 1):
        for subset in combinations(range(n), k):
            first = subset[0]
            ham = 0
            for perm in permutations(subset[1:]):
                ok = g.has_edge(first, perm[0]) and g.has_edge(perm[-1], first)
                if ok:
                    for a, b in zip(perm, perm[1:]):
                        if not g.has_edge(a, b):
                            ok = False
                            break
                if ok:
                    ham += 1
            assert ham % 2 == 0
            if ham:
                counts[k] = counts.get(k, 0) + ham // 2
    return counts


def cut_vertices_bruteforce(g: Graph) -> list[int]:
    base = len(components(g))
    return [v for v in range(g.n)
            if len(components(delete_vertices(g, [v]))) > base]


def all_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices (2^C(n,2) of them)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if (mask >> b) & 1]
        yield Graph.from_edges(n, edges)


def labeled_trees_pruefer(n: int):
    """Every labeled tree on n vertices, one per Pruefer sequence."""
    import heapq
    from itertools import product

    if n == 1:
        yield Graph(1, [0])
        return
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        deg = [1] * n
        for v in seq:
            deg[v] += 1
        heap = [v for v in range(n) if deg[v] == 1]
        heapq.heapify(heap)
        edges = []
        for v in seq:
            leaf = heapq.heappop(heap)
            edges.append((leaf, v))
            deg[v] -= 1
            if deg[v] == 1:
                heapq.heappush(heap, v)
        edges.append((heapq.heappop(heap), heapq.heappop(heap)))
        yield Graph.from_edges(n, edges)
