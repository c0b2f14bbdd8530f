"""One-point Hermitian codes C_u = ev(L(u P_inf))."""

from __future__ import annotations

from functools import cached_property

from . import linalg
from .curve import HermitianCurve


def monomial_basis(q, u):
    """Exponents (i, j) of x^i y^j spanning L(u P_inf), by increasing pole order."""
    if u < 0:
        raise ValueError("u must be nonnegative")
    basis = [(i, j) for j in range(q) for i in range(u // q + 1) if q * i + (q + 1) * j <= u]
    basis.sort(key=lambda m: q * m[0] + (q + 1) * m[1])
    return basis


def information_set(F, G):
    """Lexicographically first set of linearly independent columns of G."""
    _, pivots = linalg.rref(F, G)
    return pivots


class HermitianCode:
    """The [q^3, k] Hermitian code C_u over GF(q^2).

    The generator matrix is the evaluation matrix of the monomial basis
    brought to reduced row echelon form, so it is the identity on the
    information set and a message is read straight off those positions.
    """

    def __init__(self, q, u, curve=None):
        self.curve = curve if curve is not None else HermitianCurve(q)
        self.F = self.curve.F
        self.q, self.u = q, u
        self.n = self.curve.n
        if not 0 < u < self.n:
            raise ValueError(f"need 0 < u < n = {self.n}")
        self.basis = monomial_basis(q, u)
        self.k = len(self.basis)
        self.raw_matrix = [self.curve.ev(self.curve.monomial(i, j)) for i, j in self.basis]
        G, pivots = linalg.rref(self.F, self.raw_matrix)
        if len(pivots) != self.k:
            raise ArithmeticError("evaluation matrix is rank deficient")
        self.generator_matrix = G
        self.info_set = pivots

    def __reduce__(self):
        return (HermitianCode, (self.q, self.u, self.curve))

    @property
    def dimension(self):
        return self.k

    @property
    def rate(self):
        return self.k / self.n

    def basis_function(self, r):
        i, j = self.basis[r]
        return self.curve.monomial(i, j)

    def encode(self, message):
        if len(message) != self.k:
            raise ValueError(f"message length {len(message)} != k = {self.k}")
        return linalg.vec_mat(self.F, list(message), self.generator_matrix)

    def extract_message(self, codeword):
        if len(codeword) != self.n:
            raise ValueError(f"codeword length {len(codeword)} != n = {self.n}")
        return [codeword[i] for i in self.info_set]

    @cached_property
    def _message_to_coords(self):
        # G = T * raw, so message m encodes ev(sum (m T)_r basis_r);
        # T is the inverse of the raw matrix restricted to the info set.
        sub = [[row[c] for c in self.info_set] for row in self.raw_matrix]
        k = self.k
        aug = [sub[r] + [int(r == s) for s in range(k)] for r in range(k)]
        R, _ = linalg.rref(self.F, aug)
        return [row[k:] for row in R]

    def function_of_message(self, message):
        """The element of L(u P_inf) whose evaluation is ``encode(message)``."""
        coords = linalg.vec_mat(self.F, list(message), self._message_to_coords)
        f = self.curve.zero()
        for c, r in zip(coords, range(self.k)):
            if c:
                f = self.curve.add(f, self.curve.scale(self.basis_function(r), c))
        return f

    def coordinates(self, f):
        """Coefficients of f in the monomial basis; None if f is not in L(u P_inf)."""
        coeffs = {(i, j): c for c, i, j in self.curve.terms(f)}
        out = [coeffs.pop(m, 0) for m in self.basis]
        return None if coeffs else out

    def is_codeword(self, v):
        return self.encode(self.extract_message(v)) == list(v)
