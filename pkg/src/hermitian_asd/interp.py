"""Interpolation: the Q-polynomial of a multiplicity matrix.

Pipeline: ``algorithm_B`` writes down F[x]-module generators of
I_{M,l} = I_M intersected with R[z]_l, triangular in the positions y^t z^s;
``algorithm_I`` then reduces them to a Groebner basis for the weighted
order >_u, whose smallest element is the Q-polynomial.

Module elements of R[z]_l are handled as flat vectors of q(l+1)
polynomials in x, position s*q + t holding the coefficient of y^t z^s.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import linalg, poly
from .softinfo import DegreeBounds, degree_bounds


class InterpolationError(RuntimeError):
    pass


# -- y - f with prescribed valuations ---------------------------------------------


def confluent_vandermonde(curve, points, mults):
    """The system v A = C whose solution v = (a_0, ..., a_{N-1}) gives
    f = sum a_i x^i with v_P(y - f) >= mu at every (P, mu).

    Column block k is [binom(i, j) alpha_k^(i-j)] for j < mu_k; the matching
    block of C holds the first mu_k coefficients of the expansion of y at P_k.
    """
    F = curve.F
    N = sum(mults)
    cols = []
    C = []
    for P, mu in zip(points, mults):
        P = curve.point(P)
        for j in range(mu):
            cols.append([F.mul(F.from_int(comb(i, j)), F.pow(P.alpha, i - j)) if i >= j else 0
                         for i in range(N)])
        C.extend(curve.y_series(P, mu))
    A = linalg.transpose(cols) if cols else []
    return A, C


def solve_y_minus_f(curve, points, mults):
    """f in F[x] of degree < sum(mults) with v_P(y - f) >= mu at each point.

    The points must have distinct x-coordinates.
    """
    pts = [curve.point(P) for P, mu in zip(points, mults) if mu > 0]
    mus = [mu for mu in mults if mu > 0]
    if len({P.alpha for P in pts}) != len(pts):
        raise ValueError("points must have distinct x-coordinates")
    if not pts:
        return []
    A, C = confluent_vandermonde(curve, pts, mus)
    try:
        v = linalg.solve_left(curve.F, A, C)
    except ArithmeticError as exc:  # pragma: no cover - confluent Vandermonde is invertible
        raise InterpolationError("singular confluent Vandermonde system") from exc
    return poly.trim(v)


def arrange_points(curve, mu):
    """Group points by x-class and sort each class by decreasing mu.

    Returns a list over classes a of lists of point indices [P_{a,1}, ...,
    P_{a,q}]; ties keep canonical order.
    """
    return [sorted(cls, key=lambda i: -mu[i]) for cls in curve.classes]


def jn_generators(curve, mu):
    """F[x]-module generators g_1..g_q of J = {f in R : v_{P_i}(f) >= mu_i}.

    ``mu`` is indexed by point.  g_c has y-degree c - 1 and its y^(c-1)
    coefficient is prod_a (x - alpha_a)^(mu_{a,c}).
    """
    F, q = curve.F, curve.q
    arr = arrange_points(curve, mu)
    alphas = [curve.points[cls[0]].alpha for cls in arr]
    gens = []
    for c in range(q):
        roots = []
        for a, cls in enumerate(arr):
            roots.extend([alphas[a]] * mu[cls[c]])
        g = curve.zero()
        g[0] = poly.from_roots(F, roots)
        for b in range(c):
            pts = [cls[b] for cls in arr]
            diffs = [mu[cls[b]] - mu[cls[c]] for cls in arr]
            f = solve_y_minus_f(curve, pts, diffs)
            y_minus_f = curve.zero()
            y_minus_f[0] = poly.neg(F, f)
            y_minus_f[1] = [1]
            g = curve.mul(g, y_minus_f)
        gens.append(g)
    return gens


# -- Algorithm B ---------------------------------------------------------------


def _columns(M):
    """Multiplicity matrix (q^2 x n) as a per-point list of lists."""
    return [list(map(int, col)) for col in np.asarray(M).T]


@dataclass
class GeneratorSet:
    """Module generators g_{s,t}, stored in position order s*q + t."""

    rows: list
    l: int
    q: int
    h: list = field(default_factory=list)
    history: list = field(default_factory=list)  # M^(s) before step s

    def row(self, s, t):
        return self.rows[s * self.q + t]


def algorithm_B(curve, M, l):
    """Generators of I_{M,l} over F[x]; row (s, t) has index (s, t)."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    F = curve.F
    m = _columns(M)
    if len(m) != curve.n:
        raise ValueError("multiplicity matrix has the wrong number of columns")
    rows, hs, history = [], [], []
    prod = [curve.one()]  # prod_{r<s} (z - h^(r))
    for s in range(l + 1):
        history.append(np.array(m, dtype=np.int64).T)
        n_i = [max(col) for col in m]
        gammas = [col.index(ni) if ni > 0 else None for col, ni in zip(m, n_i)]
        eta = jn_generators(curve, n_i)
        for t in range(curve.q):
            rows.append([curve.mul(psi, eta[t]) for psi in prod])
        h = curve.zero()
        for i, g in enumerate(gammas):
            if g is not None:
                if g:
                    h = curve.add(h, curve.scale(curve.h(i), g))
                m[i][g] -= 1
        hs.append(h)
        if s < l:
            nxt = [curve.neg(curve.mul(psi, h)) for psi in prod] + [curve.zero()]
            for k, psi in enumerate(prod):
                nxt[k + 1] = curve.add(nxt[k + 1], psi)
            prod = nxt
    return GeneratorSet(rows=rows, l=l, q=curve.q, h=hs, history=history)


# -- Algorithm I ---------------------------------------------------------------


def to_vector(zf, l, q):
    vec = [[] for _ in range((l + 1) * q)]
    for k, psi in enumerate(zf):
        if k > l:
            if any(psi):
                raise ValueError("z-degree exceeds l")
            continue
        for j, a in enumerate(psi):
            vec[k * q + j] = list(a)
    return vec


def from_vector(vec, q):
    zf = [[list(vec[k * q + j]) for j in range(q)] for k in range(len(vec) // q)]
    while zf and not any(zf[-1]):
        zf.pop()
    return zf


def _lead(vec, q, weights):
    """(weight, z-degree, position) of the leading term of a module vector."""
    best = None
    for p, a in enumerate(vec):
        if a:
            key = (q * (len(a) - 1) + weights[p], p // q, p)
            if best is None or key > best:
                best = key
    return best


def diagonal_degrees(vecs):
    return [poly.deg(v[p]) for p, v in enumerate(vecs)]


@dataclass
class GroebnerResult:
    rows: list  # module vectors, row r with leading position r
    q_index: int  # row holding the smallest leading term
    steps: int


def algorithm_I(curve, gens, u, max_steps=None):
    """Convert triangular generators into a Groebner basis for >_u.

    Rows are visited in position order; each is reduced against the rows
    before it until its leading term sits on the diagonal.  When the
    pivot row has the larger leading degree the two rows trade places.
    """
    F, q = curve.F, curve.q
    l = gens.l
    T = (l + 1) * q
    weights = [(q + 1) * (p % q) + u * (p // q) for p in range(T)]
    vecs = [to_vector(g, l, q) for g in gens.rows]
    if max_steps is None:
        D = sum(max(d, 0) for d in diagonal_degrees(vecs))
        W = max(_lead(v, q, weights)[0] for v in vecs)
        max_steps = (D + 1) * T * (W + 1) + T
    steps = 0
    for r in range(1, T):
        while True:
            s = _lead(vecs[r], q, weights)[2]
            if s == r:
                break
            steps += 1
            if steps > max_steps:
                raise InterpolationError("Groebner conversion exceeded its step budget")
            a_rs, a_ss = vecs[r][s], vecs[s][s]
            d = poly.deg(a_rs) - poly.deg(a_ss)
            c = F.div(a_rs[-1], a_ss[-1])
            gr, gs = vecs[r], vecs[s]
            if d >= 0:
                vecs[r] = [poly.axpy(F, x, y, c, d) for x, y in zip(gr, gs)]
            else:
                vecs[s] = gr
                vecs[r] = [poly.axpy(F, poly.shift(x, -d), y, c) for x, y in zip(gr, gs)]
    leads = [_lead(v, q, weights) for v in vecs]
    q_index = min(range(T), key=lambda p: leads[p][:2])
    return GroebnerResult(rows=vecs, q_index=q_index, steps=steps)


# -- the Q-polynomial ----------------------------------------------------------


def normalize(curve, zf):
    """Scale so the top z-coefficient has leading coefficient 1."""
    zf = curve.z_trim(list(zf))
    if not zf:
        return zf
    c, _, _ = curve.leading(zf[-1])
    return curve.z_scale(zf, curve.F.inv(c))


@dataclass
class Interpolation:
    Q: list
    bounds: DegreeBounds
    l: int
    generators: GeneratorSet
    groebner: GroebnerResult


def interpolate(curve, M, u, L_cap=None):
    bounds = degree_bounds(M, u, curve.q)
    l = bounds.l if L_cap is None else min(bounds.l, L_cap)
    gens = algorithm_B(curve, M, l)
    gb = algorithm_I(curve, gens, u)
    Q = normalize(curve, from_vector(gb.rows[gb.q_index], curve.q))
    return Interpolation(Q=Q, bounds=bounds, l=l, generators=gens, groebner=gb)


def q_polynomial(curve, M, u, L_cap=None):
    """The element of I_{M,l} with the smallest leading term under >_u."""
    return interpolate(curve, M, u, L_cap).Q
