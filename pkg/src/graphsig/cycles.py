"""Simple-cycle counting, bucketed by length modulo 4.

Three routes are provided, trading generality for speed:

* `census` - canonical backtracking enumeration (root = minimum vertex of
  the cycle, orientation fixed by second-visited < last-visited), with a
  hard budget on the number of cycles recorded.
* `cycle_counts_exact` - exact per-length counts via dynamic programming
  over (visited subset, endpoint) pairs; no budget, but memory-bound to
  small orders.
* `count_cycles_of_length` / `count_residue_cycles` - bounded searches that
  stop as soon as a requested number of witnesses has been found, for bound
  checks that only need lower bounds.

All routes agree wherever they overlap; the test suite enforces this
against an independent subset/Hamiltonian brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import Graph, bits

DEFAULT_BUDGET = 10**7

# dynamic programming over vertex subsets is worthwhile up to about here;
# beyond it the dp table (2^n entries) stops paying for itself
DP_MAX_ORDER = 18


class SearchBudgetExceeded(Exception):
    """Raised by bounded searches when the step allowance runs out."""


@dataclass(frozen=True, eq=True)
class CycleCensus:
    """Cycle counts by exact length.  If `budget_exceeded` is set the counts
    are partial and must not be used for verification."""

    by_length: dict[int, int]
    budget_exceeded: bool = False

    @property
    def c3(self) -> int:
        return sum(c for length, c in self.by_length.items() if length % 4 == 3)

    @property
    def c5(self) -> int:
        return sum(c for length, c in self.by_length.items() if length % 4 == 1)

    @property
    def c1(self) -> int:
        return self.c3 + self.c5

    @property
    def total(self) -> int:
        return sum(self.by_length.values())

    @property
    def usable(self) -> bool:
        return not self.budget_exceeded


def census(g: Graph, budget: int = DEFAULT_BUDGET) -> CycleCensus:
    """Count every simple cycle exactly once by canonical backtracking.

    Each cycle is rooted at its minimum vertex and traversed in the
    orientation whose second vertex is smaller than its last, so exactly one
    of the two directions is recorded.  Enumeration stops once recording one
    more cycle would pass `budget`.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")
    n = g.n
    adj = g.adj
    by_length: dict[int, int] = {}
    total = 0
    exceeded = False

    def walk(v: int, visited: int, second: int, depth: int) -> bool:
        nonlocal total
        if depth >= 3 and (adj[v] >> root) & 1 and second < v:
            if total >= budget:
                return False
            total += 1
            by_length[depth] = by_length.get(depth, 0) + 1
        ext = adj[v] & gt_root & ~visited
        for w in bits(ext):
            if not walk(w, visited | (1 << w), second, depth + 1):
                return False
        return True

    for root in range(n):
        gt_root = -1 << (root + 1)
        for second in bits(adj[root] & gt_root):
            if not walk(second, (1 << root) | (1 << second), second, 2):
                exceeded = True
                break
        if exceeded:
            break
    return CycleCensus(by_length=by_length, budget_exceeded=exceeded)


def cycle_counts_exact(g: Graph) -> dict[int, int]:
    """Exact count of simple cycles per length, via subset DP.

    Counts paths from each root through vertices greater than the root,
    closing back to the root; each cycle is seen once per direction, so the
    per-length totals are halved at the end.
    """
    n = g.n
    if n > DP_MAX_ORDER:
        raise ValueError(f"subset DP supports order <= {DP_MAX_ORDER}, got {n}")
    adj = g.adj
    doubled = [0] * (n + 1)
    for root in range(n):
        gt_root = -1 << (root + 1)
        start = adj[root] & gt_root
        if not start:
            continue
        level: dict[int, dict[int, int]] = {}
        for w in bits(start):
            level[1 << w] = {w: 1}
        size = 1
        while level:
            nxt: dict[int, dict[int, int]] = {}
            for mask, ends in level.items():
                for v, cnt in ends.items():
                    av = adj[v]
                    if size >= 2 and (av >> root) & 1:
                        doubled[size + 1] += cnt
                    ext = av & gt_root & ~mask
                    for w in bits(ext):
                        nm = mask | (1 << w)
                        bucket = nxt.get(nm)
                        if bucket is None:
                            nxt[nm] = {w: cnt}
                        else:
                            bucket[w] = bucket.get(w, 0) + cnt
            level = nxt
            size += 1
    return {length: c // 2 for length, c in enumerate(doubled) if c}


def exact_census(g: Graph) -> CycleCensus:
    """CycleCensus backed by the subset DP (order <= DP_MAX_ORDER)."""
    return CycleCensus(by_length=cycle_counts_exact(g), budget_exceeded=False)


def count_cycles_of_length(g: Graph, length: int, cap: Optional[int] = None,
                           step_budget: Optional[int] = None) -> int:
    """Number of simple cycles of exactly `length`, canonical counting.

    Stops early once `cap` cycles are found (the return value is then a
    lower bound equal to `cap`).  Raises SearchBudgetExceeded if the search
    performs more than `step_budget` extensions before settling.
    """
    if length < 3:
        raise ValueError("cycle length must be >= 3")
    n = g.n
    if length > n:
        return 0
    adj = g.adj
    found = 0
    steps = 0

    def walk(v: int, visited: int, second: int, depth: int) -> bool:
        nonlocal found, steps
        if depth == length:
            if (adj[v] >> root) & 1 and second < v:
                found += 1
                if cap is not None and found >= cap:
                    return False
            return True
        ext = adj[v] & gt_root & ~visited
        for w in bits(ext):
            steps += 1
            if step_budget is not None and steps > step_budget:
                raise SearchBudgetExceeded()
            if not walk(w, visited | (1 << w), second, depth + 1):
                return False
        return True

    if cap is not None and cap <= 0:
        return 0
    for root in range(n - length + 1):
        gt_root = -1 << (root + 1)
        for second in bits(adj[root] & gt_root):
            if not walk(second, (1 << root) | (1 << second), second, 2):
                return found
    return found


def count_residue_cycles(g: Graph, residue: int, threshold: int,
                         step_budget: Optional[int] = None) -> tuple[int, bool]:
    """Count cycles of length congruent to `residue` mod 4, short lengths
    first, stopping at `threshold` witnesses.

    Returns (count, exact): exact is True when every contributing length was
    fully enumerated, i.e. the count is the true total rather than a lower
    bound that reached the threshold.
    """
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    n = g.n
    total = 0
    start = residue % 4
    while start < 3:
        start += 4
    if threshold == 0:
        return 0, False
    for length in range(start, n + 1, 4):
        total += count_cycles_of_length(g, length, cap=threshold - total,
                                        step_budget=step_budget)
        if total >= threshold:
            return total, False
    return total, True


def cycles_through_vertex(g: Graph, v: int, lengths: Iterable[int] = (),
                          residues: Iterable[int] = ()) -> dict[tuple[str, int], bool]:
    """Witness queries: does some simple cycle through v have the requested
    exact length / length residue mod 4?  Early-exits on the first witness
    per target.
    """
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} not in graph")
    out: dict[tuple[str, int], bool] = {}
    for length in lengths:
        out[("length", length)] = _has_cycle_through(g, v, length)
    for residue in residues:
        hit = False
        start = residue % 4
        while start < 3:
            start += 4
        for length in range(start, g.n + 1, 4):
            if _has_cycle_through(g, v, length):
                hit = True
                break
        out[("residue", residue % 4)] = hit
    return out


def _has_cycle_through(g: Graph, v: int, length: int) -> bool:
    if length < 3 or length > g.n:
        return False
    adj = g.adj

    def walk(u: int, visited: int, second: int, depth: int) -> bool:
        if depth == length:
            return bool((adj[u] >> v) & 1) and second < u
        for w in bits(adj[u] & ~visited):
            if walk(w, visited | (1 << w), second, depth + 1):
                return True
        return False

    for second in bits(adj[v]):
        if walk(second, (1 << v) | (1 << second), second, 2):
            return True
    return False
