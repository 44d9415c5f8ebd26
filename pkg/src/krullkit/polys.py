"""Polynomial arithmetic over an abstract coefficient field.

Polynomials are tuples of field elements, little-endian, with no trailing
zeros; () is the zero polynomial.  For prime fields (coefficients are plain
ints mod p) the work is routed through the selected kernel backend; for
other fields (extension towers, quotient fields) a generic implementation
over the field's operations is used.
"""

from ._kernels import gfpoly
from .errors import DivisionByZeroPoly


def deg(f):
    """Degree, with deg 0 = -1."""
    return len(f) - 1


def trim(F, coeffs):
    coeffs = list(coeffs)
    while coeffs and F.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def _is_prime_field(F):
    return getattr(F, "prime_modulus", None) is not None


def padd(F, a, b):
    if _is_prime_field(F):
        return tuple(gfpoly.padd(list(a), list(b), F.prime_modulus))
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero
        y = b[i] if i < len(b) else F.zero
        out.append(F.add(x, y))
    return trim(F, out)


def pneg(F, a):
    if _is_prime_field(F):
        return tuple(gfpoly.pneg(list(a), F.prime_modulus))
    return tuple(F.neg(c) for c in a)


def psub(F, a, b):
    if _is_prime_field(F):
        return tuple(gfpoly.psub(list(a), list(b), F.prime_modulus))
    return padd(F, a, pneg(F, b))


def pmul(F, a, b):
    if _is_prime_field(F):
        return tuple(gfpoly.pmul(list(a), list(b), F.prime_modulus))
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not F.is_zero(ai):
            for j, bj in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return trim(F, out)


def pscale(F, c, a):
    if F.is_zero(c):
        return ()
    return trim(F, [F.mul(c, x) for x in a])


def pdivmod(F, a, b):
    """a = q*b + r with deg r < deg b; raises on zero divisor."""
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    if _is_prime_field(F):
        q, r = gfpoly.pdivmod(list(a), list(b), F.prime_modulus)
        return tuple(q), tuple(r)
    db = deg(b)
    inv_lead = F.inv(b[-1])
    r = list(a)
    if deg(a) < db:
        return (), tuple(a)
    q = [F.zero] * (len(a) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = F.mul(r[k + db], inv_lead)
        if not F.is_zero(c):
            q[k] = c
            for j in range(db + 1):
                r[k + j] = F.add(r[k + j], F.neg(F.mul(c, b[j])))
    return trim(F, q), trim(F, r)


def pmonic(F, a):
    if not a:
        return ()
    if F.eq(a[-1], F.one):
        return tuple(a)
    return pscale(F, F.inv(a[-1]), a)


def pgcd(F, a, b):
    """Monic gcd."""
    if _is_prime_field(F):
        return tuple(gfpoly.pgcd(list(a), list(b), F.prime_modulus))
    a, b = tuple(a), tuple(b)
    while b:
        a, b = b, pdivmod(F, a, b)[1]
    return pmonic(F, a)


def pxgcd(F, a, b):
    """(g, u, v) with u*a + v*b = g and g the monic gcd."""
    r0, r1 = tuple(a), tuple(b)
    u0, u1 = (F.one,), ()
    v0, v1 = (), (F.one,)
    while r1:
        q, r = pdivmod(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, psub(F, u0, pmul(F, q, u1))
        v0, v1 = v1, psub(F, v0, pmul(F, q, v1))
    if not r0:
        return (), u0, v0
    lead_inv = F.inv(r0[-1])
    scale = (lead_inv,)
    return pmonic(F, r0), pmul(F, scale, u0), pmul(F, scale, v0)


def pmulmod(F, a, b, mod):
    if _is_prime_field(F):
        return tuple(gfpoly.pmulmod(list(a), list(b), list(mod), F.prime_modulus))
    return pdivmod(F, pmul(F, a, b), mod)[1]


def peval(F, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def ppow(F, f, k):
    out = (F.one,)
    for _ in range(k):
        out = pmul(F, out, f)
    return out


def pdivides(F, d, a):
    """d | a, with 0 | a iff a = 0."""
    if not d:
        return not a
    return not pdivmod(F, a, d)[1]
