"""Reliability and multiplicity matrices, the Koetter-Vardy assignment and
the degree bounds that size the interpolation problem.

Both matrix kinds are numpy arrays of shape (q^2, n): row gamma is a field
element in enumeration form, column i is a point in canonical order.
"""

from __future__ import annotations

import bisect
import csv
import heapq
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


def gap_indicator(i, q):
    """1 if i is a pole order q*a + (q+1)*b (a >= 0, 0 <= b < q), else 0."""
    if i < 0:
        return 0
    for b in range(q):
        r = i - (q + 1) * b
        if r < 0:
            break
        if r % q == 0:
            return 1
    return 0


def count_monomials_C(i, u, q):
    """Number of monomials x^a y^b z^k of u-weighted degree exactly i."""
    return sum(gap_indicator(i - u * j, q) for j in range(i // u + 1))


@lru_cache(maxsize=64)
def _cumulative_counts(u, q, upto):
    total, out = 0, []
    for i in range(upto + 1):
        total += count_monomials_C(i, u, q)
        out.append(total)
    return tuple(out)


def cumulative_counts(u, q, upto):
    """Running sums sum_{j <= i} C(j) for i = 0..upto."""
    return _cumulative_counts(u, q, upto)


@dataclass(frozen=True)
class DegreeBounds:
    N: int
    w: int
    l: int


def cost(M):
    """sum over entries of binom(m + 1, 2)."""
    M = np.asarray(M, dtype=np.int64)
    return int((M * (M + 1) // 2).sum())


def bounds_for_cost(c, u, q):
    """Degree bounds when the multiplicity cost is c."""
    N = 1 + c
    upto = 64
    while True:
        cum = cumulative_counts(u, q, upto)
        if cum[-1] >= N:
            w = bisect.bisect_left(cum, N)
            return DegreeBounds(N=N, w=w, l=w // u)
        upto *= 2


def degree_bounds(M, u, q):
    """N = 1 + cost(M), w minimal with N <= sum_{i<=w} C(i), l = w // u."""
    return bounds_for_cost(cost(M), u, q)


def score(M, v):
    """sum_i m_{i, v_i}."""
    M = np.asarray(M)
    if len(v) != M.shape[1]:
        raise ValueError("vector length does not match the number of points")
    return int(sum(M[g, i] for i, g in enumerate(v)))


def hard_decision(pi):
    """Symbol-wise argmax of each column (smallest gamma on ties)."""
    return [int(g) for g in np.argmax(np.asarray(pi), axis=0)]


def check_reliability(pi, tol=1e-9):
    pi = np.asarray(pi, dtype=float)
    if pi.ndim != 2:
        raise ValueError("reliability matrix must be 2-dimensional")
    if (pi < -tol).any() or (pi > 1 + tol).any():
        raise ValueError("probabilities must lie in [0, 1]")
    if np.abs(pi.sum(axis=0) - 1).max() > tol:
        raise ValueError("columns must sum to 1")
    return pi


def kv_assign(pi, L, code, budget=None):
    """Greedy Koetter-Vardy multiplicity assignment.

    Repeatedly increments the entry maximizing pi / (m + 1); ties go to the
    smallest point index, then the smallest gamma.  Growth stops just
    before the z-degree bound l would exceed ``L``.  If ``budget`` is given,
    at most that many increments are made (the L rule still applies).
    """
    if L < 1:
        raise ValueError("L must be at least 1")
    pi = np.asarray(pi, dtype=float)
    nrows, n = pi.shape
    u, q = code.u, code.q
    m = [[0] * nrows for _ in range(n)]
    cols = pi.T.tolist()
    heap = [(-cols[i][g], i, g) for i in range(n) for g in range(nrows) if cols[i][g] > 0]
    heapq.heapify(heap)
    c = 0
    steps = 0
    # largest admissible cost: the last cost whose l stays within L
    cum = cumulative_counts(u, q, u * (L + 1) + 2 * q * q)
    max_w = u * (L + 1) - 1
    max_N = cum[max_w]
    while heap and (budget is None or steps < budget):
        _, i, g = heap[0]
        new_c = c + m[i][g] + 1
        if new_c + 1 > max_N:
            break
        heapq.heappop(heap)
        m[i][g] += 1
        c = new_c
        steps += 1
        heapq.heappush(heap, (-cols[i][g] / (m[i][g] + 1), i, g))
    return np.array(m, dtype=np.int64).T


def read_matrix_csv(path, dtype=float):
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and any(x.strip() for x in r)]
    return np.array([[dtype(x) for x in r] for r in rows], dtype=dtype)


def write_matrix_csv(path, M):
    M = np.asarray(M)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        for row in M:
            w.writerow([repr(float(x)) if M.dtype.kind == "f" else int(x) for x in row])
