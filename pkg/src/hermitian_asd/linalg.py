"""Gaussian elimination over GF(q^2) for small dense matrices."""


def rref(F, rows):
    """Reduced row echelon form.

    Returns ``(matrix, pivots)`` where ``pivots`` lists the pivot column of
    each nonzero row.  The input is not modified.
    """
    A = [list(r) for r in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    mt, st = F.mul_table, F.sub_table
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = F.inv(A[r][c])
        A[r] = [mt[x][inv] for x in A[r]]
        pivot_row = A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                row = mt[f]
                A[i] = [st[x][row[y]] for x, y in zip(A[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(F, rows):
    return len(rref(F, rows)[1])


def transpose(rows):
    return [list(c) for c in zip(*rows)]


def solve_left(F, A, C):
    """Solve v A = C for a square nonsingular A."""
    n = len(A)
    # v A = C  <=>  A^T v^T = C^T
    aug = [list(row) + [c] for row, c in zip(transpose(A), C)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise ArithmeticError("singular system")
    return [R[i][n] for i in range(n)]


def vec_mat(F, v, A):
    """Row vector times matrix."""
    mt, at = F.mul_table, F.add_table
    out = [0] * len(A[0])
    for c, row in zip(v, A):
        if c:
            m = mt[c]
            for j, x in enumerate(row):
                if x:
                    out[j] = at[out[j]][m[x]]
    return out
