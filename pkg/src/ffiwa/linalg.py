"""Dense linear algebra over a finite field on raw element values.

Matrices are lists of rows.
"""

from __future__ import annotations

from .poly import Poly


def rref(K, M):
    """Row-reduce a copy of ``M``; return ``(R, pivot_columns)``."""
    R = [list(r) for r in M]
    rows = len(R)
    cols = len(R[0]) if R else 0
    pivots = []
    r = 0
    mul, sub, inv = K.mul, K.sub, K.inv
    for c in range(cols):
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        a = inv(R[r][c])
        R[r] = [mul(a, x) for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                Ri, Rr = R[i], R[r]
                R[i] = [sub(x, mul(f, y)) for x, y in zip(Ri, Rr)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(K, M):
    return len(rref(K, M)[1]) if M else 0


def kernel(K, M, ncols=None):
    """Basis of ``{x : M x = 0}`` (column vectors returned as lists)."""
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    if not M:
        return [[int(i == j) for i in range(n)] for j in range(n)]
    R, pivots = rref(K, M)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = K.neg(R[i][f])
        basis.append(v)
    return basis


def solve(K, M, b):
    """One solution of ``M x = b`` or ``None``."""
    n = len(M[0])
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(K, aug)
    if n in pivots:
        return None
    x = [0] * n
    for i, c in enumerate(pivots):
        x[c] = R[i][n]
    return x


def mat_mul(K, A, B):
    add, mul = K.add, K.mul
    k = len(B[0])
    out = []
    for row in A:
        o = [0] * k
        for t, a in enumerate(row):
            if a:
                for j, bv in enumerate(B[t]):
                    if bv:
                        o[j] = add(o[j], mul(a, bv))
        out.append(o)
    return out


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_sub(K, A, B):
    return [[K.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def det(K, M):
    R = [list(r) for r in M]
    n = len(R)
    d = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if R[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            R[c], R[piv] = R[piv], R[c]
            d = K.neg(d)
        d = K.mul(d, R[c][c])
        a = K.inv(R[c][c])
        for i in range(c + 1, n):
            if R[i][c]:
                f = K.mul(R[i][c], a)
                R[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(R[i], R[c])]
    return d


def charpoly(K, M):
    """Characteristic polynomial ``det(x I - M)`` via Hessenberg reduction."""
    n = len(M)
    H = [list(r) for r in M]
    mul, sub, add, inv = K.mul, K.sub, K.add, K.inv
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        a = inv(H[m][m - 1])
        for i in range(m + 1, n):
            f = mul(H[i][m - 1], a)
            if f:
                H[i] = [sub(x, mul(f, y)) for x, y in zip(H[i], H[m])]
                for row in H:
                    row[m] = add(row[m], mul(f, row[i]))
    x = Poly.x(K)
    polys = [Poly.const(K, 1)]
    for k in range(n):
        pk = (x - Poly.const(K, H[k][k])) * polys[k]
        prod = 1
        for i in range(k - 1, -1, -1):
            prod = mul(prod, H[i + 1][i])
            term = polys[i].scale(mul(prod, H[i][k]))
            pk = pk - term
        polys.append(pk)
    return polys[n]


def eval_poly_at_matrix(K, f, M):
    n = len(M)
    R = [[0] * n for _ in range(n)]
    for c in reversed(f.c):
        R = mat_mul(K, R, M)
        for i in range(n):
            R[i][i] = K.add(R[i][i], c)
    return R
