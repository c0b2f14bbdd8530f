"""Dense univariate polynomials over GF(q^2).

A polynomial is a list of field elements (enumeration form), lowest degree
first, with no trailing zeros; the zero polynomial is ``[]``.  Functions
never mutate their arguments unless the name says so.
"""


def trim(a):
    """Drop trailing zeros in place and return ``a``."""
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a):
    return len(a) - 1


def lc(a):
    return a[-1] if a else 0


def add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    tab = F.add_table
    out = list(a)
    for i, c in enumerate(b):
        if c:
            out[i] = tab[out[i]][c]
    return trim(out)


def sub(F, a, b):
    sub_tab = F.sub_table
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        if c:
            out[i] = sub_tab[out[i]][c]
    return trim(out)


def neg(F, a):
    t = F.neg_table
    return [t[c] for c in a]


def scale(F, a, c):
    if c == 0:
        return []
    if c == 1:
        return list(a)
    row = F.mul_table[c]
    return [row[x] for x in a]


def shift(a, d):
    """a * x^d."""
    return [0] * d + list(a) if a else []


def mul(F, a, b):
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    mt, at = F.mul_table, F.add_table
    out = [0] * (len(a) + len(b) - 1)
    for j, c in enumerate(b):
        if c:
            row = mt[c]
            for i, x in enumerate(a):
                if x:
                    k = i + j
                    out[k] = at[out[k]][row[x]]
    return out


def axpy(F, a, b, c, d=0):
    """a - c * x^d * b, computed without building the shifted product."""
    if c == 0 or not b:
        return list(a)
    n = max(len(a), len(b) + d)
    out = list(a) + [0] * (n - len(a))
    row = F.mul_table[c]
    st = F.sub_table
    for i, x in enumerate(b):
        if x:
            k = i + d
            out[k] = st[out[k]][row[x]]
    return trim(out)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv_lead = F.inv(b[-1])
    qt = [0] * (len(r) - db)
    mt, st = F.mul_table, F.sub_table
    for k in range(len(r) - 1 - db, -1, -1):
        c = mt[r[k + db]][inv_lead]
        qt[k] = c
        if c:
            row = mt[c]
            for i, x in enumerate(b):
                if x:
                    r[k + i] = st[r[k + i]][row[x]]
    return trim(qt), trim(r[:db])


def evaluate(F, a, x):
    mt, at = F.mul_table, F.add_table
    acc = 0
    for c in reversed(a):
        acc = at[mt[acc][x]][c]
    return acc


def from_roots(F, roots):
    """prod (x - r) over the (possibly repeated) roots."""
    out = [1]
    for r in roots:
        out = mul(F, out, [F.neg(r), 1])
    return out


def taylor(F, a, x0, prec):
    """First ``prec`` coefficients of a(x0 + t) as a series in t."""
    prec = max(prec, 0)
    out = [0] * prec
    if not a or prec == 0:
        return out
    mt, at = F.mul_table, F.add_table
    # Horner in t, truncated
    for c in reversed(a):
        # out <- out * (x0 + t) + c
        for i in range(prec - 1, 0, -1):
            out[i] = at[mt[out[i]][x0]][out[i - 1]]
        out[0] = at[mt[out[0]][x0]][c]
    return out
