"""Exact adjacency-matrix spectra bookkeeping.

The characteristic polynomial is computed over arbitrary-precision integers
with the Faddeev-LeVerrier recurrence (the divisions it performs are exact).
Because adjacency matrices are symmetric, every root is real, so Descartes'
sign-variation rule counts positive and negative eigenvalues exactly and the
zero count is just the multiplicity of the root 0.  No floating point enters
the main path; a numeric eigenvalue oracle and a rational symmetric-congruence
oracle are provided for cross-validation only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import add
from typing import Optional

import numpy as np

from .graphs import MAX_ORDER, Graph, bits


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative and zero adjacency eigenvalues."""

    p: int
    n: int
    eta: int

    @property
    def r(self) -> int:
        return self.p + self.n

    @property
    def s(self) -> int:
        return self.p - self.n

    @property
    def order(self) -> int:
        return self.p + self.n + self.eta

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.n, self.eta)


def char_poly(g: Graph, max_order: int = MAX_ORDER) -> tuple[int, ...]:
    """Coefficients (c_0, ..., c_n) of det(xI - A), exact and monic.

    Uses Faddeev-LeVerrier; since A is a 0/1 matrix, each A*M product is a
    per-row sum of neighbor rows.  Every division by the step index is exact
    (asserted), so all arithmetic stays in the integers.
    """
    n = g.n
    if n > max_order:
        raise ValueError(f"order {n} exceeds maximum {max_order}")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return tuple(coeffs)
    nbrs = [list(bits(row)) for row in g.adj]
    # M starts as I; c_{n-1} = -tr(A) = 0 for a simple graph.
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    c = 0
    for k in range(2, n + 1):
        AM = []
        for i in range(n):
            row = [0] * n
            for u in nbrs[i]:
                row = list(map(add, row, M[u]))
            AM.append(row)
        if c:
            for i in range(n):
                AM[i][i] += c
        M = AM
        trace = 0
        for i in range(n):
            t = 0
            for u in nbrs[i]:
                t += M[u][i]
            trace += t
        q, rem = divmod(-trace, k)
        if rem:
            raise ArithmeticError("Faddeev-LeVerrier division not exact; "
                                  "coefficient recurrence is corrupt")
        c = q
        coeffs[n - k] = c
    return tuple(coeffs)


def _sign_variations(seq) -> int:
    last = 0
    var = 0
    for c in seq:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last and s != last:
            var += 1
        last = s
    return var


def inertia_from_char_poly(coeffs) -> Inertia:
    """Inertia of a real-rooted monic integer polynomial given as (c_0..c_n)."""
    n = len(coeffs) - 1
    eta = 0
    while eta <= n and coeffs[eta] == 0:
        eta += 1
    if eta > n:
        raise ValueError("zero polynomial has no inertia")
    q = coeffs[eta:]
    p = _sign_variations(q)
    neg = _sign_variations(c if j % 2 == 0 else -c for j, c in enumerate(q))
    if p + neg + eta != n:
        raise ArithmeticError(
            "sign variations inconsistent with real-rootedness; "
            "input was not the characteristic polynomial of a symmetric matrix")
    return Inertia(p=p, n=neg, eta=eta)


def inertia(g: Graph, max_order: int = MAX_ORDER) -> Inertia:
    return inertia_from_char_poly(char_poly(g, max_order))


def signature(g: Graph) -> int:
    return inertia(g).s


def rank(g: Graph) -> int:
    return inertia(g).r


def nullity(g: Graph) -> int:
    return inertia(g).eta


# -- validation oracles --------------------------------------------------


def float_inertia_oracle(g: Graph, zero_tolerance: Optional[float] = None) -> Optional[Inertia]:
    """Inertia from numpy's symmetric eigensolver; advisory only.

    Eigenvalues within `zero_tolerance` (default 1e-9 * order) of zero count
    as zero.  Returns None if the eigensolver fails to converge.
    """
    n = g.n
    if n == 0:
        return Inertia(0, 0, 0)
    if zero_tolerance is None:
        zero_tolerance = 1e-9 * n
    if zero_tolerance <= 0:
        raise ValueError("zero tolerance must be positive")
    A = np.zeros((n, n), dtype=np.float64)
    for v in range(n):
        for u in bits(g.adj[v]):
            A[v, u] = 1.0
    try:
        eigs = np.linalg.eigvalsh(A)
    except np.linalg.LinAlgError:
        return None
    p = int(np.sum(eigs > zero_tolerance))
    neg = int(np.sum(eigs < -zero_tolerance))
    return Inertia(p=p, n=neg, eta=n - p - neg)


def congruence_inertia(g: Graph) -> Inertia:
    """Inertia via an exact rational symmetric congruence (LDL^T with 1x1 and
    2x2 pivots).  Independent of the characteristic-polynomial path; used to
    cross-validate it."""
    n = g.n
    A = [[Fraction((g.adj[i] >> j) & 1) for j in range(n)] for i in range(n)]
    active = list(range(n))
    p = neg = eta = 0
    while active:
        pivot_pos = None
        for pos, i in enumerate(active):
            if A[i][i] != 0:
                pivot_pos = pos
                break
        if pivot_pos is not None:
            i = active.pop(pivot_pos)
            d = A[i][i]
            if d > 0:
                p += 1
            else:
                neg += 1
            for r in active:
                f = A[r][i] / d
                if f:
                    Ai = A[i]
                    Ar = A[r]
                    for c in active:
                        Ar[c] -= f * Ai[c]
            continue
        # every remaining diagonal entry is zero
        off = None
        for a in range(len(active)):
            for b in range(a + 1, len(active)):
                if A[active[a]][active[b]] != 0:
                    off = (a, b)
                    break
            if off:
                break
        if off is None:
            eta += len(active)
            break
        a, b = off
        j = active.pop(b)
        i = active.pop(a)
        piv = A[i][j]
        # block [[0, piv], [piv, 0]] contributes one eigenvalue of each sign
        p += 1
        neg += 1
        col_i = {r: A[r][i] for r in active}
        col_j = {r: A[r][j] for r in active}
        for r in active:
            fi = col_i[r]
            fj = col_j[r]
            if fi == 0 and fj == 0:
                continue
            Ar = A[r]
            for c in active:
                Ar[c] -= (fi * col_j[c] + fj * col_i[c]) / piv
    return Inertia(p=p, n=neg, eta=eta)
