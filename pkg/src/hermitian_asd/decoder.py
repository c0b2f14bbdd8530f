"""End-to-end algebraic soft-decision decoding."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .interp import interpolate
from .rootfind import RootList, find_roots
from .softinfo import hard_decision, kv_assign

DECODED = "decoded-from-list"
FALLBACK = "hard-decision-fallback"


@dataclass
class DecodeResult:
    message: list
    status: str
    candidates: RootList
    chosen_score: int | None
    M: np.ndarray
    Q: list

    @property
    def from_list(self):
        return self.status == DECODED


def _choose(code, M, Q, roots, hard):
    # ties go to the first root in search order
    if roots.roots:
        best = max(range(len(roots)), key=lambda r: (roots.scores[r], -r))
        msg = code.extract_message(roots.codewords[best])
        return DecodeResult(msg, DECODED, roots, roots.scores[best], M, Q)
    return DecodeResult(code.extract_message(hard), FALLBACK, roots, None, M, Q)


def decode_from_M(M, code, l_cap=None, pi=None):
    """Interpolate, find roots and pick the best-scoring candidate.

    The hard-decision fallback uses the argmax of ``pi`` when given and of
    M otherwise.
    """
    M = np.asarray(M, dtype=np.int64)
    Q = interpolate(code.curve, M, code.u, l_cap).Q
    roots = find_roots(Q, code).with_scores(M)
    return _choose(code, M, Q, roots, hard_decision(pi if pi is not None else M))


def decode(pi, code, L, kv_budget=None):
    """Decode a reliability matrix with the KV list-size parameter L."""
    pi = np.asarray(pi, dtype=float)
    if pi.shape != (code.F.order, code.n):
        raise ValueError(f"reliability matrix must have shape {(code.F.order, code.n)}")
    M = kv_assign(pi, L, code, budget=kv_budget)
    return decode_from_M(M, code, L, pi)


class Decoder:
    """Decoder bound to one code and one L, memoizing the interpolation and
    root-finding work per distinct multiplicity matrix.

    Decoding is a pure function of M (plus the hard decisions, which only
    matter when the list is empty), so repeated matrices, common at high
    SNR, are served from the cache.
    """

    def __init__(self, code, L, cache_size=4096):
        self.code, self.L = code, L
        self._solve = lru_cache(maxsize=cache_size)(self._solve_uncached)

    def _solve_uncached(self, key):
        M = np.frombuffer(key, dtype=np.int64).reshape(self.code.F.order, self.code.n)
        Q = interpolate(self.code.curve, M, self.code.u, self.L).Q
        roots = find_roots(Q, self.code).with_scores(M)
        return Q, roots

    def clear_cache(self):
        self._solve.cache_clear()

    def decode(self, pi):
        code = self.code
        M = kv_assign(pi, self.L, code)
        Q, roots = self._solve(np.ascontiguousarray(M, dtype=np.int64).tobytes())
        return _choose(code, M, Q, roots, hard_decision(pi))
