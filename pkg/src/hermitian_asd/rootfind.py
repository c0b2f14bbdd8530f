"""Roots of a Q-polynomial inside L(u P_inf).

``find_roots`` determines the coordinates of a root one basis monomial
at a time, from the largest pole order down.  With the coefficients above
depth r fixed, write the shifted polynomial as sum psi_k z^k and the rest
of the root as c*phi_r + (lower terms).  The pole order of Q(root) is at
most D = max_k pole(psi_k) + k*pole(phi_r), and its coefficient at D is
sum over the k attaining D of lc(psi_k) c^k.  A root needs that
polynomial in c to vanish, so only its field roots are explored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import poly
from .curve import ZERO_DEGREE


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass
class RootList:
    roots: list = field(default_factory=list)  # ring elements in L(u P_inf)
    codewords: list = field(default_factory=list)
    scores: list = field(default_factory=list)

    def __len__(self):
        return len(self.roots)

    def with_scores(self, M):
        from .softinfo import score
        self.scores = [score(M, c) for c in self.codewords]
        return self


def substitute(curve, zf, phi):
    """f(phi) in R, by Horner's rule in z."""
    acc = curve.zero()
    for psi in reversed(zf):
        acc = curve.add(curve.mul(acc, phi), psi)
    return acc


def taylor_shift(curve, zf, a):
    """f(z + a) for a in R."""
    out = []
    for psi in reversed(zf):
        # out <- out * (z + a) + psi
        nxt = [curve.zero() for _ in range(len(out) + 1)]
        for k, c in enumerate(out):
            nxt[k + 1] = curve.add(nxt[k + 1], c)
            nxt[k] = curve.add(nxt[k], curve.mul(c, a))
        nxt[0] = curve.add(nxt[0], psi)
        out = nxt
    return curve.z_trim(out)


def _leading_constraint(curve, zf, rho):
    """Coefficients (by power of c) of the top pole-order part of zf(c*phi)."""
    best = ZERO_DEGREE
    lead = []
    for k, psi in enumerate(zf):
        p = curve.pole_order(psi)
        if p == ZERO_DEGREE:
            continue
        d = p + k * rho
        c = curve.leading(psi)[0]
        if d > best:
            best, lead = d, [(k, c)]
        elif d == best:
            lead.append((k, c))
    coeffs = [0] * (max(k for k, _ in lead) + 1)
    for k, c in lead:
        coeffs[k] = c
    return poly.trim(coeffs)


def _make_rootlist(code, roots):
    out = RootList()
    for mu in roots:
        out.roots.append(mu)
        out.codewords.append(code.curve.ev(mu))
    return out


def find_roots(Q, code, node_cap=10 ** 6):
    """All mu in L(u P_inf) with Q(mu) = 0, in depth-first search order."""
    curve, F = code.curve, code.F
    Q = curve.z_trim([list(map(list, psi)) for psi in Q])
    if not Q:
        raise ValueError("Q must be nonzero")
    q = code.q
    order = list(reversed(code.basis))  # decreasing pole order
    rhos = [q * i + (q + 1) * j for i, j in order]
    depth = len(order)
    found = []
    nodes = 0
    stack = [(0, Q, [])]
    while stack:
        r, cur, coeffs = stack.pop()
        nodes += 1
        if nodes > node_cap:
            raise SearchBudgetExceeded(f"root search exceeded {node_cap} nodes")
        if r == depth:
            if not cur or not any(cur[0]):
                found.append(coeffs)
            continue
        constraint = _leading_constraint(curve, cur, rhos[r])
        children = []
        for c in F.elements():
            if poly.evaluate(F, constraint, c) != 0:
                continue
            if c == 0:
                nxt = cur
            else:
                i, j = order[r]
                nxt = taylor_shift(curve, cur, curve.monomial(i, j, c))
            children.append((r + 1, nxt, coeffs + [c]))
        stack.extend(reversed(children))
    roots = []
    for coeffs in found:
        mu = curve.zero()
        for c, (i, j) in zip(coeffs, order):
            if c:
                mu = curve.add(mu, curve.monomial(i, j, c))
        if not curve.is_zero(substitute(curve, Q, mu)):  # pragma: no cover - exactness guard
            raise AssertionError("root search produced a non-root")
        roots.append(mu)
    return _make_rootlist(code, roots)


def brute_force_roots(Q, code, limit=2 ** 20):
    """Exhaustive search over all of L(u P_inf); the test oracle."""
    curve, F = code.curve, code.F
    if F.order ** code.k > limit:
        raise ValueError("L(u P_inf) is too large to enumerate")
    funcs = [code.basis_function(r) for r in range(code.k)]
    roots = []
    for coeffs in itertools.product(F.elements(), repeat=code.k):
        mu = curve.zero()
        for c, f in zip(coeffs, funcs):
            if c:
                mu = curve.add(mu, curve.scale(f, c))
        if curve.is_zero(substitute(curve, Q, mu)):
            roots.append(mu)
    return _make_rootlist(code, roots)
