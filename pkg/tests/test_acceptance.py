"""Acceptance criteria 1-14 on the GF(4) worked example and beyond.

Every criterion prints one ``criterion N: PASS|FAIL`` line (also repeated
in the pytest terminal summary).  Run with ``pytest tests/test_acceptance.py -s``
to see the lines as they happen.
"""

import functools
import itertools
import time
from math import comb

import numpy as np
import pytest

from hermitian_asd import linalg, poly
from hermitian_asd.code import HermitianCode
from hermitian_asd.curve import HermitianCurve
from hermitian_asd.decoder import DECODED, decode_from_M
from hermitian_asd.interp import (algorithm_B, algorithm_I, confluent_vandermonde,
                                  diagonal_degrees, interpolate, jn_generators, normalize,
                                  solve_y_minus_f, to_vector)
from hermitian_asd.rootfind import brute_force_roots, find_roots, substitute
from hermitian_asd.sim import Modem, frame_rng, run_simulation
from hermitian_asd.softinfo import (count_monomials_C, cumulative_counts, degree_bounds,
                                    kv_assign)

from conftest import (ACCEPTANCE_LINES, EXAMPLE_M, parse_poly, parse_ring, parse_vector,
                      parse_z, random_M)

CURVE = HermitianCurve(2)
CODE = HermitianCode(2, 4, CURVE)
F = CURVE.F


def criterion(number, title, max_seconds=None):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            ok = False
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - start
                if max_seconds is not None:
                    assert elapsed < max_seconds, f"took {elapsed:.2f} s, limit {max_seconds} s"
                ok = True
            finally:
                elapsed = time.perf_counter() - start
                line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f} s)"
                ACCEPTANCE_LINES.append(line)
                print(line)
        return run
    return wrap


def x_terms(p):
    return [(d, c) for d, c in reversed(list(enumerate(p))) if c]


def ring_terms_by_pole(f):
    """Terms (coefficient, i, j) sorted by decreasing pole order."""
    return sorted(CURVE.terms(f), key=lambda t: -(2 * t[1] + 3 * t[2]))


# -- 1 ---------------------------------------------------------------------------

PRINTED_H = [
    r"(x^3+1)y+x^3+1",
    r"(x^3+1)y",
    r"(x^3+x^2+x)y+\alpha^2x^3+\alpha^2x^2+\alpha^2x",
    r"(x^3+x^2+x)y+\alpha x^3+\alpha x^2+\alpha x",
    r"(x^3+\alpha x^2+\alpha^2x)y+\alpha^2x^3+x^2+\alpha x",
    r"(x^3+\alpha x^2+\alpha^2x)y+\alpha x^3+\alpha^2x^2+x",
    r"(x^3+\alpha^2x^2+\alpha x)y+\alpha^2x^3+\alpha x^2+x",
    r"(x^3+\alpha^2x^2+\alpha x)y+\alpha x^3+x^2+\alpha^2x",
]


@criterion(1, "indicator functions h_1..h_8", max_seconds=1.0)
def test_criterion_01_indicator_functions():
    curve = HermitianCurve(2)  # fresh instance: nothing cached
    for i, text in enumerate(PRINTED_H):
        assert curve.format(curve.h(i)) == curve.format(parse_ring(curve, text))


# -- 2 ---------------------------------------------------------------------------


@criterion(2, "encoding and information set")
def test_criterion_02_encoding():
    rows = ["1,0,0,1,0,1,a^2,a", "0,1,0,1,0,1,a,a^2", "0,0,1,1,0,0,1,1", "0,0,0,0,1,1,1,1"]
    assert CODE.generator_matrix == [parse_vector(F, r) for r in rows]
    assert CODE.encode(parse_vector(F, "1,a^2,0,a")) == parse_vector(F, "1,a^2,0,a,a,0,0,a")
    assert [i + 1 for i in CODE.info_set] == [1, 2, 3, 5]


# -- 3 ---------------------------------------------------------------------------


@criterion(3, "degree bounds N, w, l and the C(i) table")
def test_criterion_03_bounds():
    b = degree_bounds(EXAMPLE_M, 4, 2)
    assert (b.N, b.w, b.l) == (76, 23, 5)
    C = [count_monomials_C(i, 4, 2) for i in range(26)]
    printed = {0: 1, 1: 0, 2: 1, 3: 1, 4: 2, 5: 1, 21: 5, 22: 6, 23: 6, 24: 7, 25: 6}
    assert all(C[i] == v for i, v in printed.items())
    cum = cumulative_counts(4, 2, 25)
    printed_cum = {0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 6, 21: 66, 22: 72, 23: 78, 24: 85, 25: 91}
    assert all(cum[i] == v for i, v in printed_cum.items())
    # entries elided in print: direct count of x^a y^b z^k with 2a + 3b + 4k = i
    for i in range(26):
        assert C[i] == sum(1 for a in range(i + 1) for bb in range(2) for k in range(i // 4 + 1)
                           if 2 * a + 3 * bb + 4 * k == i)


# -- 4 ---------------------------------------------------------------------------


@criterion(4, "J_N generators, y - f_{1,2} and the confluent Vandermonde system")
def test_criterion_04_jn_generators():
    n0 = [3, 4, 3, 5, 2, 4, 5, 2]
    g1, _ = jn_generators(CURVE, n0)
    assert g1 == parse_ring(CURVE, r"x^{18}+\alpha x^{17}+\alpha^2x^{16}+x^6+\alpha x^5+\alpha^2x^4")
    points, mults = [1, 3, 5, 6], [1, 2, 2, 3]
    f = solve_y_minus_f(CURVE, points, mults)
    g = CURVE.y()
    g[0] = poly.neg(F, f)
    for P, mu in zip(points, mults):
        assert CURVE.valuation(g, P) >= mu
    A, C = confluent_vandermonde(CURVE, points, mults)
    printed_A = ["1,1,0,1,0,1,0,0", "0,1,1,a,1,a^2,1,0", "0,1,0,a^2,0,a,0,1",
                 "0,1,1,1,a^2,1,a,a^2", "0,1,0,a,0,a^2,0,0", "0,1,1,a^2,a,a,a^2,0",
                 "0,1,0,1,0,1,0,a^2", "0,1,1,a,1,a^2,1,a"]
    assert A == [parse_vector(F, r) for r in printed_A]
    assert C == parse_vector(F, "1,a^2,1,a^2,a^2,a,a,0")


# -- 5 ---------------------------------------------------------------------------


@criterion(5, "Algorithm B step s=0")
def test_criterion_05_algorithm_B_step0():
    gens = algorithm_B(CURVE, EXAMPLE_M, 5)
    assert gens.h[0] == parse_ring(CURVE, r"\alpha^2x^2y+\alpha^2xy+\alpha^2y")
    expected = np.array([[2, 0, 0, 0, 1, 3, 4, 1], [2, 0, 2, 0, 0, 0, 0, 0],
                         [0, 0, 0, 4, 1, 0, 0, 2], [0, 3, 0, 0, 0, 0, 0, 0]])
    assert (gens.history[1] == expected).all()


# -- 6 ---------------------------------------------------------------------------

PRINTED_Q_BLOCKS = {
    5: r"1",
    4: r"\alpha^2x^3+\alpha xy+x^2+\alpha y",
    3: r"\alpha x^4y+\alpha^2x^5+x^3+xy+x^2+y+\alpha^2x+1",
    2: r"""\alpha^2x^6y+\alpha x^7+\alpha^2x^5y+\alpha^2x^6+\alpha^2x^4y+\alpha^2x^5
           +\alpha^2x^3y+x^4+x^3+\alpha xy+\alpha^2x""",
    1: r"""x^8y+\alpha^2x^9+\alpha x^8+\alpha^2x^7+x^6+\alpha x^4y+x^5+\alpha x^3y
           +\alpha x^4+\alpha^2x^3+\alpha^2xy+\alpha x^2+\alpha^2y""",
}
PRINTED_Q0_HEAD = r"\alpha^2x^{11}+x^{10}+x^8y+\alpha x^9"
PRINTED_Q0_TAIL = r"\alpha^2x^2y+x^3+\alpha^2xy+y"


@criterion(6, "Q-polynomial of the worked example", max_seconds=5.0)
def test_criterion_06_q_polynomial():
    res = decode_from_M(EXAMPLE_M, CODE, 5)
    Q = res.Q
    assert CURVE.z_degree(Q) == 5
    for k, text in PRINTED_Q_BLOCKS.items():
        assert Q[k] == parse_ring(CURVE, " ".join(text.split()))
    got = ring_terms_by_pole(Q[0])
    head = ring_terms_by_pole(parse_ring(CURVE, PRINTED_Q0_HEAD))
    tail = ring_terms_by_pole(parse_ring(CURVE, PRINTED_Q0_TAIL))
    assert got[:len(head)] == head
    assert got[-len(tail):] == tail


# -- 7 ---------------------------------------------------------------------------


@criterion(7, "roots, scores and decision")
def test_criterion_07_roots_and_decision():
    Q = interpolate(CURVE, EXAMPLE_M, 4).Q
    roots = find_roots(Q, CODE).with_scores(EXAMPLE_M)
    expected = {CURVE.format(parse_ring(CURVE, r"x^2+\alpha^2y+x")): 22,
                CURVE.format(parse_ring(CURVE, r"\alpha^2x^2+\alpha y+x+1")): 23}
    assert {CURVE.format(f): s for f, s in zip(roots.roots, roots.scores)} == expected
    assert len(roots) == 2
    res = decode_from_M(EXAMPLE_M, CODE, 5)
    assert res.status == DECODED
    assert res.message == parse_vector(F, "1,a^2,0,a")


# -- 8 ---------------------------------------------------------------------------


def _check_membership(curve, M, Q):
    for i in range(M.shape[1]):
        for gamma in range(M.shape[0]):
            if M[gamma, i]:
                assert curve.surface_multiplicity(Q, i, gamma) >= M[gamma, i], (i, gamma)


@criterion(8, "Q meets every multiplicity constraint")
def test_criterion_08_membership():
    rng = np.random.default_rng(808)
    Ms = [EXAMPLE_M] + [rng.integers(0, 4, size=(4, 8)) * (rng.random((4, 8)) < 0.35)
                        for _ in range(30)]
    for M in Ms:
        Q = interpolate(CURVE, M, 4).Q
        _check_membership(CURVE, np.asarray(M), Q)


# -- 9 ---------------------------------------------------------------------------


def _series_pow(base, e, prec):
    out = [1] + [0] * (prec - 1)
    for _ in range(e):
        nxt = [0] * prec
        for a, u in enumerate(out):
            if u:
                for b, v in enumerate(base[:prec - a]):
                    nxt[a + b] = F.add(nxt[a + b], F.mul(u, v))
        out = nxt
    return out


def _series_mul(a, b, prec):
    out = [0] * prec
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b[:prec - i]):
                out[i + j] = F.add(out[i + j], F.mul(u, v))
    return out


def kernel_oracle(M, u=4):
    """Minimal element of I_M under >_u by linear algebra over monomials."""
    q = 2
    b = degree_bounds(M, u, q)
    monos = [(i, j, k) for k in range(b.w // u + 1) for j in range(q) for i in range(b.w + 1)
             if q * i + (q + 1) * j + u * k <= b.w]
    monos.sort(key=lambda m: (q * m[0] + (q + 1) * m[1] + u * m[2], m[2]))
    rows = []
    for idx in range(CURVE.n):
        P = CURVE.points[idx]
        for gamma in range(4):
            m = int(M[gamma, idx])
            if not m:
                continue
            ys = CURVE.y_series(P, m)
            xs = [P.alpha, 1] + [0] * max(0, m - 2)
            col_series = {}
            for (i, j, k) in monos:
                col_series[(i, j, k)] = _series_mul(_series_pow(xs[:m], i, m),
                                                    _series_pow(ys, j, m), m)
            for a in range(m):
                for bb in range(m - a):
                    row = []
                    for (i, j, k) in monos:
                        c = F.mul(F.from_int(comb(k, a)), F.pow(gamma, k - a)) if k >= a else 0
                        row.append(F.mul(c, col_series[(i, j, k)][bb]))
                    rows.append(row)
    R, pivots = linalg.rref(F, rows) if rows else ([], [])
    free = next(c for c in range(len(monos)) if c not in pivots)
    vec = [0] * len(monos)
    vec[free] = 1
    for r, p in enumerate(pivots):
        if p < free:
            vec[p] = F.neg(R[r][free])
    zf = []
    for c, (i, j, k) in zip(vec, monos):
        if c:
            while len(zf) <= k:
                zf.append(CURVE.zero())
            zf[k] = CURVE.add(zf[k], CURVE.monomial(i, j, c))
    return CURVE.z_trim(zf)


@criterion(9, "Q equals the brute-force minimal kernel element")
def test_criterion_09_minimality():
    rng = np.random.default_rng(909)
    for M in [EXAMPLE_M] + [random_M(rng, max_entry=3, density=0.5) for _ in range(30)]:
        Q = interpolate(CURVE, M, 4).Q
        oracle = kernel_oracle(M)
        assert CURVE.z_equal(normalize(CURVE, Q), normalize(CURVE, oracle))


# -- 10 --------------------------------------------------------------------------


@criterion(10, "every codeword scoring above deg_u(Q) is in the root list")
def test_criterion_10_completeness():
    rng = np.random.default_rng(1010)
    codewords = [CODE.encode(list(m)) for m in itertools.product(range(4), repeat=4)]
    checked = 0
    for t in range(30):
        # plant a codeword so that some scores exceed the bound
        M = random_M(rng, max_entry=2, density=0.3)
        cw = codewords[int(rng.integers(len(codewords)))]
        for i, c in enumerate(cw):
            M[c, i] += int(rng.integers(1, 4))
        Q = interpolate(CURVE, M, 4).Q
        bound = CURVE.weighted_degree(Q, 4)
        found = {tuple(c) for c in find_roots(Q, CODE).codewords}
        for c in codewords:
            if sum(int(M[g, i]) for i, g in enumerate(c)) > bound:
                assert tuple(c) in found
                checked += 1
    assert checked > 0


# -- 11 --------------------------------------------------------------------------


def _random_Q(rng):
    if rng.random() < 0.5:
        return interpolate(CURVE, random_M(rng), 4).Q
    Q = [CURVE.one()]
    for _ in range(int(rng.integers(1, 4))):
        f = CODE.function_of_message([int(c) for c in rng.integers(0, 4, size=4)])
        if rng.random() < 0.3:
            f = CURVE.add(f, CURVE.monomial(int(rng.integers(0, 4)), 1))
        nxt = [CURVE.zero() for _ in range(len(Q) + 1)]
        for k, psi in enumerate(Q):
            nxt[k + 1] = CURVE.add(nxt[k + 1], psi)
            nxt[k] = CURVE.sub(nxt[k], CURVE.mul(psi, f))
        Q = nxt
    return Q


@criterion(11, "find_roots agrees with exhaustive search")
def test_criterion_11_root_equivalence():
    rng = np.random.default_rng(1111)
    for _ in range(50):
        Q = _random_Q(rng)
        fast = sorted(CODE.coordinates(f) for f in find_roots(Q, CODE).roots)
        slow = sorted(CODE.coordinates(f) for f in brute_force_roots(Q, CODE).roots)
        assert fast == slow


# -- 12 --------------------------------------------------------------------------


@criterion(12, "Groebner conversion keeps the sum of diagonal degrees")
def test_criterion_12_unimodular_invariant():
    rng = np.random.default_rng(1212)
    for M in [EXAMPLE_M] + [random_M(rng) for _ in range(30)]:
        l = degree_bounds(M, 4, 2).l
        gens = algorithm_B(CURVE, M, l)
        before = sum(diagonal_degrees([to_vector(g, l, 2) for g in gens.rows]))
        after = sum(diagonal_degrees(algorithm_I(CURVE, gens, 4).rows))
        assert before == after


# -- 13 --------------------------------------------------------------------------


@criterion(13, "[8,4] QPSK simulation trends and reproducibility", max_seconds=600.0)
def test_criterion_13_simulation():
    snrs = [2.0, 3.0, 4.0, 5.0, 6.0]
    frames = 10_000
    recs = run_simulation(CODE, snrs, 2, "qpsk", frames=frames, seed=2024)
    fer = [r.fer for r in recs]
    print("FER(L=2):", " ".join(f"{s:g}dB={f:.4g}" for s, f in zip(snrs, fer)))
    assert all(a > b for a, b in zip(fer, fer[1:]))
    assert fer[-1] * 5 <= fer[0]
    l1 = run_simulation(CODE, [4.0], 1, "qpsk", frames=frames, seed=2024)[0].fer
    l3 = run_simulation(CODE, [4.0], 3, "qpsk", frames=frames, seed=2024)[0].fer
    print(f"FER at 4 dB: L=1 {l1:.4g}, L=3 {l3:.4g}")
    assert l3 <= l1
    again = run_simulation(CODE, snrs, 2, "qpsk", frames=frames, seed=2024)
    assert [r.as_dict() for r in again] == [r.as_dict() for r in recs]


# -- 14 --------------------------------------------------------------------------


@criterion(14, "[64,32] code over GF(16), one frame end to end", max_seconds=300.0)
def test_criterion_14_scale():
    code = HermitianCode(4, 37)
    assert (code.n, code.k) == (64, 32)
    modem = Modem(code.F, "bpsk")
    rng = frame_rng(7, 0)
    msg = rng.integers(0, 16, size=code.k).tolist()
    noise = rng.standard_normal(size=(code.n, modem.dims_per_symbol))
    sigma2 = modem.noise_variance(6.0, code.rate)
    pi = modem.posteriors(modem.channel(modem.modulate(code.encode(msg)), noise, sigma2), sigma2)
    M = kv_assign(pi, 1, code)
    res = decode_from_M(M, code, 1, pi)
    _check_membership(code.curve, M, res.Q)
    for f, cw in zip(res.candidates.roots, res.candidates.codewords):
        assert code.curve.is_zero(substitute(code.curve, res.Q, f))
        assert code.curve.pole_order(f) <= code.u
        assert code.curve.ev(f) == cw and code.is_codeword(cw)
    print(f"status {res.status}, {len(res.candidates)} candidate(s), "
          f"message {'correct' if res.message == msg else 'wrong'}")
