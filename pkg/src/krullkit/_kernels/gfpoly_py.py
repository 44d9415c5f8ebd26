"""Dense polynomial arithmetic over Z/p, pure-Python reference kernel.

Polynomials are lists of ints in [0, p), little-endian, with no trailing
zeros (the zero polynomial is the empty list).  This module and the Cython
twin _gfpoly expose the same functions; krullkit._kernels picks one at
import time.
"""


def ptrim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = (out[i] + b[i]) % p
    return ptrim(out)


def psub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return ptrim(out)


def pneg(a, p):
    return [(-c) % p for c in a]


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return ptrim(out)


def pdivmod(a, b, p):
    """Quotient and remainder of a by b; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lead = pow(b[db], p - 2, p)
    if len(r) - 1 < db:
        return [], ptrim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = (r[k + db] * inv_lead) % p
        if c:
            q[k] = c
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return ptrim(q), ptrim(r)


def pmonic(a, p):
    if not a:
        return []
    lead = a[-1]
    if lead == 1:
        return list(a)
    inv = pow(lead, p - 2, p)
    return [(c * inv) % p for c in a]


def pgcd(a, b, p):
    """Monic gcd of a and b."""
    a, b = ptrim(list(a)), ptrim(list(b))
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    return pmonic(a, p)


def pmulmod(a, b, mod, p):
    return pdivmod(pmul(a, b, p), mod, p)[1]
