"""Finite fields GF(q^2) with table-driven arithmetic.

Elements are plain ints in *enumeration form*: 0 is the zero element and
k (1 <= k <= q^2 - 1) is the primitive element raised to k - 1.  So 1 is
the unit, 2 is the primitive element ``a``, 3 is ``a^2`` and so on.  Every
module in the package uses this form, which also fixes the row order of
multiplicity and reliability matrices.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = ["GF", "FieldElement", "field_for"]


def _factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1:
                raise ValueError(f"q={q} is not a prime power")
            return p, e
    raise ValueError(f"q={q} is not a prime power")


# Fixed moduli (low-order coefficient first). Other q get the first
# primitive polynomial in lexicographic order.
_DEFAULT_MODULI = {
    2: (1, 1, 1),  # t^2 + t + 1
    4: (1, 1, 0, 0, 1),  # t^4 + t + 1
}


class GF:
    """The field GF(q^2), q = p^e, built from an irreducible ``modulus`` of
    degree 2e over GF(p).

    All methods take and return elements in enumeration form.
    """

    def __init__(self, q, modulus=None):
        p, e = _factor_prime_power(q)
        self.p, self.e, self.q = p, e, q
        self.order = q * q
        self.degree = 2 * e
        if modulus is None:
            modulus = _DEFAULT_MODULI.get(q) or self._find_primitive_modulus()
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != self.degree + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree 2e")
        self.modulus = modulus

        # vector form: base-p digits of an int, digit i = coefficient of t^i
        generator = self._find_generator()
        if generator is None:
            raise ValueError(f"modulus {modulus} is not irreducible over GF({p})")
        self.generator_vector = generator

        size = self.order
        vec_of = [0] * size
        v = 1
        for k in range(1, size):
            vec_of[k] = v
            v = self._vec_mul(v, generator)
        idx_of = [0] * size
        for k, v in enumerate(vec_of):
            idx_of[v] = k
        self._vec_of = vec_of
        self._idx_of = idx_of

        m = size - 1
        self.add_table = [[idx_of[self._vec_add(vec_of[a], vec_of[b])] for b in range(size)]
                          for a in range(size)]
        self.mul_table = [[0 if a == 0 or b == 0 else (a + b - 2) % m + 1 for b in range(size)]
                          for a in range(size)]
        self.neg_table = [idx_of[self._vec_neg(vec_of[a])] for a in range(size)]
        self.inv_table = [0] + [(-(a - 1)) % m + 1 for a in range(1, size)]
        self.sub_table = [[self.add_table[a][self.neg_table[b]] for b in range(size)]
                          for a in range(size)]
        # image of the integers 0..p-1
        self.int_table = [idx_of[c] for c in range(p)]

    # -- vector-form helpers (construction only) --------------------------

    def _digits(self, v):
        out = []
        for _ in range(self.degree):
            v, r = divmod(v, self.p)
            out.append(r)
        return out

    def _undigits(self, ds):
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _vec_add(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _vec_neg(self, a):
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def _vec_mul(self, a, b):
        p, d = self.p, self.degree
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c:
                for j in range(d + 1):
                    prod[i - d + j] = (prod[i - d + j] - c * self.modulus[j]) % p
        return self._undigits(prod[:d])

    def _multiplicative_order(self, v):
        if v == 0:
            return 0
        w, k = v, 1
        while w != 1:
            w = self._vec_mul(w, v)
            k += 1
            if k > self.order:
                return 0
        return k

    def _find_generator(self):
        target = self.order - 1
        for v in range(1, self.order):
            if self._multiplicative_order(v) == target:
                return v
        return None

    def _find_primitive_modulus(self):
        p, d = self.p, self.degree
        t = p  # vector form of t
        for tail in itertools.product(range(p), repeat=d):
            cand = tuple(reversed(tail)) + (1,)
            if cand[0] == 0:
                continue
            self.modulus = cand
            if self._multiplicative_order(t) == self.order - 1:
                return cand
        raise ValueError("no primitive polynomial found")  # pragma: no cover

    # -- arithmetic --------------------------------------------------------

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    @property
    def alpha(self):
        """The primitive element (enumeration index 2)."""
        return 2 if self.order > 2 else 1

    def elements(self):
        return range(self.order)

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.sub_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.order)
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul_table[a][self.inv(b)]

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if n == 0 else 0
        m = self.order - 1
        return ((a - 1) * n) % m + 1

    def from_int(self, n):
        """Image of the integer n under Z -> GF(p) -> GF(q^2)."""
        return self.int_table[n % self.p]

    def trace(self, b):
        """Trace down to GF(q): b^q + b."""
        return self.add(self.pow(b, self.q), b)

    def norm(self, a):
        """a^(q+1), the norm down to GF(q)."""
        return self.pow(a, self.q + 1)

    def log(self, a):
        if a == 0:
            raise ValueError("log of zero")
        return a - 1

    def exp(self, k):
        return k % (self.order - 1) + 1

    # -- conversions -------------------------------------------------------

    def to_vector(self, a):
        """Coefficients over GF(p) of a in the basis 1, t, ..., t^(2e-1)."""
        return self._digits(self._vec_of[a])

    def from_vector(self, digits):
        return self._idx_of[self._undigits([int(d) % self.p for d in digits])]

    def format(self, a):
        if a == 0:
            return "0"
        k = a - 1
        if k == 0:
            return "1"
        if k == 1:
            return "a"
        return f"a^{k}"

    _TOKEN = re.compile(r"^\s*(?:(0|1)|a(?:\^\{?(\d+)\}?)?)\s*$")

    def parse(self, text):
        m = self._TOKEN.match(str(text))
        if not m:
            raise ValueError(f"cannot parse field element {text!r}")
        if m.group(1) is not None:
            return int(m.group(1))
        k = int(m.group(2)) if m.group(2) is not None else 1
        return self.exp(k)

    def element(self, a):
        if isinstance(a, str):
            a = self.parse(a)
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element index of GF({self.order})")
        return FieldElement(self, a)

    def __repr__(self):
        return f"GF({self.order}, modulus={self.modulus})"

    def __reduce__(self):
        return (field_for, (self.q,)) if self.modulus == field_for(self.q).modulus \
            else (GF, (self.q, self.modulus))


@lru_cache(maxsize=None)
def field_for(q):
    """Shared GF(q^2) instance with the default modulus."""
    return GF(q)


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific GF(q^2), with operator overloads.

    The algorithms work on bare ints; this wrapper is for interactive use
    and for catching accidental mixing of fields.
    """

    field: GF
    value: int

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and (other.field.order != self.field.order
                                                  or other.field.modulus != self.field.modulus):
                raise ValueError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, b))

    def __pow__(self, n):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def trace(self):
        return FieldElement(self.field, self.field.trace(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.order == other.field.order and self.field.modulus == other.field.modulus \
                and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.field.modulus, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"FieldElement({self.field.format(self.value)!r}, GF({self.field.order}))"
