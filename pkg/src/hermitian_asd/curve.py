"""The Hermitian curve y^q + y = x^(q+1) and its coordinate ring.

Ring elements are lists of q polynomials in x (see :mod:`poly`); entry j
is the coefficient of y^j.  Elements of R[z] ("z-polynomials") are lists
of ring elements, entry k being the coefficient of z^k, with the top entry
nonzero.  Points are identified by their 0-based position in the canonical
order: x-coordinate first, then y-coordinate, both in field enumeration
order.
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple

from . import poly
from .gf import field_for

ZERO_DEGREE = -1  # pole order / weighted degree reported for the zero element


class RationalPoint(NamedTuple):
    alpha: int
    beta: int
    index: int


class HermitianCurve:
    """Arithmetic in R = F[x, y]/(y^q + y - x^(q+1)) over F = GF(q^2)."""

    def __init__(self, q, field=None):
        self.q = q
        self.F = F = field if field is not None else field_for(q)
        if F.q != q:
            raise ValueError("field does not match q")
        pts = []
        for a in F.elements():
            target = F.norm(a)
            for b in F.elements():
                if F.trace(b) == target:
                    pts.append(RationalPoint(a, b, len(pts)))
        self.points = pts
        self.n = len(pts)
        if self.n != q ** 3:
            raise AssertionError("wrong number of rational points")
        self.genus = q * (q - 1) // 2
        # x-classes, in field order of the x-coordinate
        classes = {}
        for P in pts:
            classes.setdefault(P.alpha, []).append(P.index)
        self.classes = [classes[a] for a in F.elements()]
        self._h = {}
        self._yser = {}

    def __reduce__(self):
        return (HermitianCurve, (self.q, self.F))

    def point(self, P):
        return self.points[P] if isinstance(P, int) else P

    # -- ring elements -------------------------------------------------------

    def zero(self):
        return [[] for _ in range(self.q)]

    def one(self):
        return self.const(1)

    def const(self, c):
        f = self.zero()
        if c:
            f[0] = [c]
        return f

    def monomial(self, i, j, c=1):
        """c * x^i * y^j (j < q)."""
        if not 0 <= j < self.q:
            raise ValueError("y-exponent out of range")
        f = self.zero()
        if c:
            f[j] = [0] * i + [c]
        return f

    def x(self):
        return self.monomial(1, 0)

    def y(self):
        return self.monomial(0, 1)

    @staticmethod
    def is_zero(f):
        return not any(f)

    def add(self, f, g):
        F = self.F
        return [poly.add(F, a, b) for a, b in zip(f, g)]

    def sub(self, f, g):
        F = self.F
        return [poly.sub(F, a, b) for a, b in zip(f, g)]

    def neg(self, f):
        return [poly.neg(self.F, a) for a in f]

    def scale(self, f, c):
        return [poly.scale(self.F, a, c) for a in f]

    def mul_xpoly(self, f, p):
        return [poly.mul(self.F, a, p) for a in f]

    def mul(self, f, g):
        """Product in R, reduced with y^q = x^(q+1) - y."""
        F, q = self.F, self.q
        prod = [[] for _ in range(2 * q - 1)]
        for j1, a in enumerate(f):
            if not a:
                continue
            for j2, b in enumerate(g):
                if b:
                    prod[j1 + j2] = poly.add(F, prod[j1 + j2], poly.mul(F, a, b))
        for j in range(2 * q - 2, q - 1, -1):
            c = prod[j]
            if c:
                prod[j - q] = poly.add(F, prod[j - q], poly.shift(c, q + 1))
                prod[j - q + 1] = poly.sub(F, prod[j - q + 1], c)
        return prod[:q]

    def power(self, f, e):
        out = self.one()
        for _ in range(e):
            out = self.mul(out, f)
        return out

    def pole_order(self, f):
        """-v_{P_inf}(f): the largest q*i + (q+1)*j over monomials of f."""
        q = self.q
        best = ZERO_DEGREE
        for j, a in enumerate(f):
            if a:
                best = max(best, q * (len(a) - 1) + (q + 1) * j)
        return best

    def leading(self, f):
        """(coefficient, i, j) of the monomial x^i y^j of largest pole order."""
        q = self.q
        best = None
        for j, a in enumerate(f):
            if a:
                w = q * (len(a) - 1) + (q + 1) * j
                if best is None or w > best[0]:
                    best = (w, a[-1], len(a) - 1, j)
        if best is None:
            raise ValueError("zero element has no leading term")
        return best[1:]

    def terms(self, f):
        """Nonzero terms as (coefficient, i, j)."""
        return [(c, i, j) for j, a in enumerate(f) for i, c in enumerate(a) if c]

    def evaluate(self, f, P):
        P = self.point(P)
        F = self.F
        acc = 0
        ypow = 1
        for a in f:
            if a:
                acc = F.add(acc, F.mul(poly.evaluate(F, a, P.alpha), ypow))
            ypow = F.mul(ypow, P.beta)
        return acc

    def ev(self, f):
        """Evaluation vector (f(P_1), ..., f(P_n))."""
        return [self.evaluate(f, P) for P in self.points]

    # -- indicator functions -------------------------------------------------

    def h(self, i):
        """The function h_i with h_i(P_j) = 1 if j == i else 0 (0-based)."""
        if i not in self._h:
            self._h[i] = self._build_h(i)
        return self._h[i]

    def _build_h(self, i):
        F, q = self.F, self.q
        P = self.points[i]
        xq2 = [0] * (q * q + 1)
        xq2[-1] = 1
        xq2[1] = F.neg(1)  # x^(q^2) - x
        # numerator as a polynomial in y of degree q (not reduced)
        tr = F.trace(P.beta)
        ycoef = [F.neg(tr), 1] + [0] * (q - 2) + [1]
        num = [poly.scale(F, xq2, c) for c in ycoef]
        # exact division by (y - beta), synthetic division from the top
        quot = [[] for _ in range(q)]
        carry = []
        for j in range(q, 0, -1):
            carry = poly.add(F, num[j], poly.scale(F, carry, P.beta))
            quot[j - 1] = carry
        rem = poly.add(F, num[0], poly.scale(F, carry, P.beta))
        if rem:
            raise ArithmeticError("h_i: division by (y - beta) is not exact")
        out = []
        for a in quot:
            qa, ra = poly.divmod_(F, a, [F.neg(P.alpha), 1])
            if ra:
                raise ArithmeticError("h_i: division by (x - alpha) is not exact")
            out.append(poly.neg(F, qa))
        return out

    def h_vector(self, v):
        """h_v = sum v_i h_i, the function with evaluation vector v."""
        out = self.zero()
        for i, c in enumerate(v):
            if c:
                out = self.add(out, self.scale(self.h(i), c))
        return out

    # -- local expansions ------------------------------------------------------

    def y_series(self, P, prec):
        """Expansion of y at P in t = x - alpha, modulo t^prec."""
        P = self.point(P)
        key = (P.index, prec)
        if key in self._yser:
            return self._yser[key]
        F, q = self.F, self.q
        s = [0] * prec
        if prec > 0:
            s[0] = P.beta
        if prec > 1:
            s[1] = F.add(s[1], F.pow(P.alpha, q))
        i = 0
        sign = 1
        while (q + 1) * q ** i < prec:
            e = (q + 1) * q ** i
            s[e] = F.add(s[e], sign)
            sign = F.neg(sign)
            i += 1
        self._yser[key] = s
        return s

    def _series_mul(self, a, b, prec):
        mt, at = self.F.mul_table, self.F.add_table
        out = [0] * prec
        for i, x in enumerate(a[:prec]):
            if x:
                row = mt[x]
                for j in range(prec - i):
                    yb = b[j]
                    if yb:
                        out[i + j] = at[out[i + j]][row[yb]]
        return out

    def local_expansion(self, f, P, prec):
        """Coefficients of f at P as a power series in t = x - alpha, mod t^prec."""
        P = self.point(P)
        F = self.F
        at = F.add_table
        out = [0] * prec
        ys = self.y_series(P, prec)
        ypow = None
        for j, a in enumerate(f):
            if j == 0:
                ypow = [1] + [0] * (prec - 1) if prec else []
            else:
                ypow = self._series_mul(ypow, ys, prec)
            if a:
                term = self._series_mul(poly.taylor(F, a, P.alpha, prec), ypow, prec)
                out = [at[u][v] for u, v in zip(out, term)]
        return out

    def valuation(self, f, P):
        """v_P(f) for nonzero f.

        The precision starts at q + 2 and doubles.  It never needs to exceed
        pole_order(f) + 1, because the zeros of f on the affine curve are
        balanced by its single pole at infinity.
        """
        if self.is_zero(f):
            raise ValueError("valuation of zero")
        cap = self.pole_order(f) + 1
        prec = min(self.q + 2, cap)
        while True:
            s = self.local_expansion(f, P, prec)
            for k, c in enumerate(s):
                if c:
                    return k
            if prec >= cap:
                raise ArithmeticError("series vanished beyond the precision cap")
            prec = min(2 * prec, cap)

    # -- z-polynomials -----------------------------------------------------------

    @staticmethod
    def z_trim(zf):
        while zf and not any(zf[-1]):
            zf.pop()
        return zf

    def z_degree(self, zf):
        return len(self.z_trim(list(zf))) - 1

    def weighted_degree(self, zf, u):
        """deg_u: max over monomials x^i y^j z^k of q*i + (q+1)*j + u*k."""
        best = ZERO_DEGREE
        for k, psi in enumerate(zf):
            p = self.pole_order(psi)
            if p != ZERO_DEGREE:
                best = max(best, p + u * k)
        return best

    def z_leading(self, zf, u):
        """Leading term under >_u as (coefficient, i, j, k)."""
        best = None
        q = self.q
        for k, psi in enumerate(zf):
            for j, a in enumerate(psi):
                if a:
                    key = (q * (len(a) - 1) + (q + 1) * j + u * k, k)
                    if best is None or key > best[0]:
                        best = (key, a[-1], len(a) - 1, j, k)
        if best is None:
            raise ValueError("zero polynomial has no leading term")
        return best[1:]

    def z_terms(self, zf):
        return [(c, i, j, k) for k, psi in enumerate(zf) for (c, i, j) in self.terms(psi)]

    def z_scale(self, zf, c):
        return [self.scale(psi, c) for psi in zf]

    def z_equal(self, f, g):
        f, g = self.z_trim(list(f)), self.z_trim(list(g))
        return len(f) == len(g) and all(a == b for a, b in zip(f, g))

    def surface_multiplicity(self, zf, P, gamma):
        """Multiplicity of f in R[z] at the surface point (P, gamma).

        Substituting z = gamma + s gives f = sum_a s^a phi_a with phi_a in R,
        and the multiplicity is min over a of a + v_P(phi_a).
        """
        F = self.F
        zf = self.z_trim(list(zf))
        if not zf:
            raise ValueError("multiplicity of the zero polynomial")
        top = len(zf) - 1
        best = None
        for a in range(top + 1):
            phi = self.zero()
            for k in range(a, top + 1):
                c = F.mul(F.from_int(comb(k, a)), F.pow(gamma, k - a))
                if c and any(zf[k]):
                    phi = self.add(phi, self.scale(zf[k], c))
            if self.is_zero(phi):
                continue
            if best is None:
                best = a + self.valuation(phi, P)
                continue
            prec = best - a
            if prec <= 0:
                break
            s = self.local_expansion(phi, P, prec)
            v = next((i for i, c in enumerate(s) if c), None)
            if v is not None:
                best = a + v
        return best

    # -- text form ---------------------------------------------------------------

    def _monomial_str(self, c, i, j, k=0):
        parts = []
        if i:
            parts.append("x" if i == 1 else f"x^{i}")
        if j:
            parts.append("y" if j == 1 else f"y^{j}")
        if k:
            parts.append("z" if k == 1 else f"z^{k}")
        if c != 1 or not parts:
            parts.insert(0, self.F.format(c))
        return "*".join(parts)

    def format(self, f):
        """Terms "c*x^i*y^j" by decreasing pole order, coefficients in log form."""
        q = self.q
        ts = sorted(self.terms(f), key=lambda t: -(q * t[1] + (q + 1) * t[2]))
        return " + ".join(self._monomial_str(*t) for t in ts) or "0"

    def format_z(self, zf, u):
        """Terms "c*x^i*y^j*z^k" in decreasing >_u order."""
        q = self.q
        ts = sorted(self.z_terms(zf),
                    key=lambda t: (q * t[1] + (q + 1) * t[2] + u * t[3], t[3]), reverse=True)
        return " + ".join(self._monomial_str(*t) for t in ts) or "0"
