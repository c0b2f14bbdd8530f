"""Shared fixtures and a reader for hand-written polynomials.

``parse_ring`` and ``parse_z`` accept LaTeX-flavoured input such as
``\\alpha^2x^{11}+(x^3+1)y`` and build exact elements of R or R[z].
Integer coefficients are reduced into the prime field and ``a`` (or
``\\alpha``) stands for the field generator.
"""

import re

import numpy as np
import pytest
import sympy

from hermitian_asd.code import HermitianCode
from hermitian_asd.curve import HermitianCurve

_TOKEN = re.compile(r"\s*(\d+|[axyz]|\*\*|[()+\-^*])")
_OPERAND_END = ("num", "name", ")")
_OPERAND_START = ("num", "name", "(")


def _kind(tok):
    if tok.isdigit():
        return "num"
    if tok in "axyz":
        return "name"
    return tok


def _to_python(text):
    text = text.replace("\\alpha", "a").replace("{", "(").replace("}", ")")
    text = text.replace("\\cdot", "*").replace(" ", "")
    out, prev, pos = [], None, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        tok = m.group(1)
        pos = m.end()
        k = _kind(tok)
        if prev in _OPERAND_END and k in _OPERAND_START and out[-1] != "**":
            out.append("*")
        out.append("**" if tok == "^" else tok)
        prev = k
    return "".join(out)


_SYMS = sympy.symbols("a x y z")


def _terms(text):
    expr = sympy.expand(sympy.sympify(_to_python(text), locals=dict(zip("axyz", _SYMS))))
    if expr == 0:
        return []
    return sympy.Poly(expr, *_SYMS).terms()


def parse_z(curve, text):
    """A z-polynomial (list of ring elements by z-power)."""
    F = curve.F
    out = []
    for (e, i, j, k), c in _terms(text):
        coeff = F.mul(F.from_int(int(c) % F.p), F.pow(F.alpha, e))
        if not coeff:
            continue
        while len(out) <= k:
            out.append(curve.zero())
        mono = curve.mul(curve.monomial(i, 0, coeff), curve.power(curve.y(), j))
        out[k] = curve.add(out[k], mono)
    return curve.z_trim(out)


def parse_ring(curve, text):
    zf = parse_z(curve, text)
    if len(zf) > 1:
        raise ValueError("unexpected z in a ring element")
    return zf[0] if zf else curve.zero()


def parse_poly(curve, text):
    """A polynomial in x alone, as a coefficient list."""
    f = parse_ring(curve, text)
    if any(f[1:]):
        raise ValueError("unexpected y in an x-polynomial")
    return list(f[0])


def parse_vector(F, text):
    return [F.parse(t) for t in text.split(",")]


EXAMPLE_M = np.array([
    [3, 0, 0, 0, 2, 4, 5, 2],
    [2, 0, 3, 0, 0, 0, 0, 0],
    [0, 0, 0, 5, 1, 0, 0, 2],
    [0, 4, 0, 0, 0, 0, 0, 0],
], dtype=np.int64)


@pytest.fixture(scope="session")
def curve2():
    return HermitianCurve(2)


@pytest.fixture(scope="session")
def code4(curve2):
    return HermitianCode(2, 4, curve2)


@pytest.fixture
def example_M():
    return EXAMPLE_M.copy()


def random_M(rng, n=8, order=4, max_entry=3, density=0.4):
    """A random multiplicity matrix with at least one nonzero entry."""
    while True:
        M = rng.integers(0, max_entry + 1, size=(order, n))
        M = M * (rng.random((order, n)) < density)
        if M.any():
            return M.astype(np.int64)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
