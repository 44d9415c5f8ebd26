# cython: language_level=3, boundscheck=False, wraparound=False
"""Dense polynomial arithmetic over Z/p, compiled kernel.

Same contract as gfpoly_py: little-endian int lists, coefficients in [0, p),
no trailing zeros.  Moduli here are small primes, so plain C longs suffice.
"""

cpdef list ptrim(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


cpdef list padd(list a, list b, long p):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = (<long> out[i] + <long> b[i]) % p
    return ptrim(out)


cpdef list psub(list a, list b, long p):
    cdef Py_ssize_t n = max(len(a), len(b))
    cdef list out = [0] * n
    cdef long x, y
    cdef Py_ssize_t i
    for i in range(n):
        x = <long> a[i] if i < len(a) else 0
        y = <long> b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return ptrim(out)


cpdef list pneg(list a, long p):
    cdef Py_ssize_t i
    cdef list out = [0] * len(a)
    for i in range(len(a)):
        out[i] = (p - <long> a[i]) % p
    return out


cpdef list pmul(list a, list b, long p):
    cdef Py_ssize_t i, j
    cdef long ai
    if not a or not b:
        return []
    cdef list out = [0] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        ai = <long> a[i]
        if ai:
            for j in range(len(b)):
                out[i + j] = (<long> out[i + j] + ai * <long> b[j]) % p
    return ptrim(out)


cdef long _invmod(long x, long p):
    cdef long r = 1
    cdef long e = p - 2
    cdef long base = x % p
    while e:
        if e & 1:
            r = (r * base) % p
        base = (base * base) % p
        e >>= 1
    return r


cpdef tuple pdivmod(list a, list b, long p):
    cdef Py_ssize_t db, k, j
    cdef long c, inv_lead
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list r = list(a)
    db = len(b) - 1
    inv_lead = _invmod(<long> b[db], p)
    if len(r) - 1 < db:
        return [], ptrim(r)
    cdef list q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = (<long> r[k + db] * inv_lead) % p
        if c:
            q[k] = c
            for j in range(db + 1):
                r[k + j] = (<long> r[k + j] - c * <long> b[j]) % p
    return ptrim(q), ptrim(r)


cpdef list pmonic(list a, long p):
    cdef Py_ssize_t i
    cdef long inv
    if not a:
        return []
    if <long> a[len(a) - 1] == 1:
        return list(a)
    inv = _invmod(<long> a[len(a) - 1], p)
    cdef list out = [0] * len(a)
    for i in range(len(a)):
        out[i] = (<long> a[i] * inv) % p
    return out


cpdef list pgcd(list a, list b, long p):
    a = ptrim(list(a))
    b = ptrim(list(b))
    while b:
        a, b = b, pdivmod(a, b, p)[1]
    return pmonic(a, p)


cpdef list pmulmod(list a, list b, list mod, long p):
    return pdivmod(pmul(a, b, p), mod, p)[1]
