"""Exact integer polynomial arithmetic: resultants, determinants, valuations.

Integer polynomials are plain lists of ints, low degree first.
"""

from __future__ import annotations

import math
from math import gcd

from .errors import DomainError
from .field import is_prime

INFINITY = math.inf


def valuation(n, p):
    """Largest ``k`` with ``p**k | n``; ``INFINITY`` for ``n == 0``."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime", p)
    n = abs(int(n))
    if n == 0:
        return INFINITY
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(trim(f)) - 1


def content(f):
    g = 0
    for c in f:
        g = gcd(g, c)
    return g


def add(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out)


def evaluate(f, x):
    r = 0
    for c in reversed(f):
        r = r * x + c
    return r


def pseudo_remainder(a, b):
    """``lc(b)**(deg a - deg b + 1) * a mod b`` over the integers."""
    a, b = trim(a), trim(b)
    db = len(b) - 1
    lb = b[-1]
    delta = len(a) - 1 - db
    if delta < 0:
        return a
    r = list(a)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        r = [lb * x for x in r]
        if c:
            base = k - db
            for i in range(db + 1):
                r[base + i] -= c * b[i]
        r.pop()
    # r was multiplied by lb once per step: delta + 1 steps in total
    return trim(r)


def resultant_int(f, g):
    """Resultant over the integers by the subresultant remainder sequence."""
    A, B = trim(f), trim(g)
    if not A and not B:
        raise DomainError("resultant of two zero polynomials")
    if not A or not B:
        return 0
    ca, cb = content(A), content(B)
    if A[-1] < 0:
        ca = -ca
    if B[-1] < 0:
        cb = -cb
    A = [x // ca for x in A]
    B = [x // cb for x in B]
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 and (len(B) - 1) % 2:
            s = -1
    if len(B) == 1:
        return s * t * B[0] ** (len(A) - 1)
    g_, h = 1, 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = pseudo_remainder(A, B)
        A = B
        div = g_ * h ** delta
        B = [x // div for x in R]
        g_ = A[-1]
        if delta == 0:
            pass
        else:
            h = g_ ** delta // h ** (delta - 1)
        if len(B) - 1 <= 0:
            break
    if not B:
        return 0
    dA = len(A) - 1
    h = B[-1] ** dA // h ** (dA - 1)
    return s * t * h


def sylvester(f, g):
    f, g = trim(f), trim(g)
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def det_int(M):
    """Exact determinant of an integer matrix (Bareiss fraction-free elimination)."""
    M = [list(r) for r in M]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def mat_mul_int(A, B):
    n, m, k = len(A), len(B), len(B[0])
    out = [[0] * k for _ in range(n)]
    for i in range(n):
        Ai, Oi = A[i], out[i]
        for t in range(m):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(k):
                    Oi[j] += a * Bt[j]
    return out


def mat_pow_int(A, e):
    n = len(A)
    R = [[int(i == j) for j in range(n)] for i in range(n)]
    while e:
        if e & 1:
            R = mat_mul_int(R, A)
        e >>= 1
        if e:
            A = mat_mul_int(A, A)
    return R


def companion(f):
    """Companion matrix of the monic integer polynomial ``f`` (char poly = f)."""
    f = trim(f)
    if not f or f[-1] != 1:
        raise DomainError("companion matrix needs a monic polynomial", f)
    n = len(f) - 1
    C = [[0] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = 1
    for i in range(n):
        C[i][n - 1] = -f[i]
    return C
