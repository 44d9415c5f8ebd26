"""Executable verifiers for the downstream propositions, plus brute-force
ground truth over small finite rings.

The two coefficient propositions (nilpotent polynomial => nilpotent
coefficients; invertible polynomial => nilpotent nonconstant coefficients)
are verified by literally walking their prime-ideal proofs: peel the leading
coefficient through an x-prime ideal of itself, confirm membership and a
nilpotency exponent, and recurse on the truncated polynomial.
"""

import math
from itertools import product

from .chain import new_maximal_ideal
from .errors import PreconditionViolated
from .quotient import quotient_by
from .rings import ModularRing
from .spectrum import x_prime_ideal


# -- raw polynomials over Z/n (coefficient tuples, little-endian) -------------

def zp_trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def zp_mul(f, g, n):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % n
    return zp_trim(out)


def zp_sub(f, g, n):
    out = [0] * max(len(f), len(g))
    for i in range(len(out)):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out[i] = (a - b) % n
    return zp_trim(out)


def _omega(n):
    """Number of prime factors of n with multiplicity."""
    count, d = 0, 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    if n > 1:
        count += 1
    return count


def _radical_index(n):
    """Least t with rad(n)^t = 0 in Z/n (t = 1 for n = 1)."""
    rad = 1
    m, d = n, 2
    while d * d <= m:
        if m % d == 0:
            rad *= d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        rad *= m
    t = 1
    while pow(rad, t, n) != 0:
        t += 1
    return t


def poly_nilpotency(ring, f):
    """Least k with f^k = 0 in Z/n[X] within the desk-scale bound, or None."""
    n = ring.n
    f = zp_trim(c % n for c in f)
    if not f:
        return 1
    bound = _omega(n) * len(f) + 1
    power = (1 % n,)
    for k in range(1, bound + 1):
        power = zp_mul(power, f, n)
        if not power:
            return k
    return None


def poly_inverse(ring, f, degree_bound=None):
    """Inverse of f in Z/n[X] by sequential undetermined coefficients.

    The inverse of a unit has degree at most deg f times the nilpotency
    index of n's radical; exceeding the bound means f is not a unit.
    """
    n = ring.n
    if n == 1:
        return ()
    f = zp_trim(c % n for c in f)
    if not f or math.gcd(f[0], n) != 1:
        return None
    if degree_bound is None:
        degree_bound = (len(f) - 1) * _radical_index(n)
    inv0 = pow(f[0], -1, n)
    g = [inv0]
    for k in range(1, degree_bound + 1):
        acc = 0
        for i in range(1, min(k, len(f) - 1) + 1):
            acc = (acc + f[i] * g[k - i]) % n
        g.append((-inv0 * acc) % n)
    g = zp_trim(g)
    if zp_mul(f, g, n) != (1,):
        return None
    return g


def verify_nilpotent_coefficients(ring, f):
    """Mirror of the prime-ideal proof: returns per-coefficient nilpotency
    exponents (ascending, exponent 1 for zero coefficients)."""
    if not isinstance(ring, ModularRing):
        raise PreconditionViolated("verifier runs over modular rings")
    f = zp_trim(f)
    if poly_nilpotency(ring, f) is None:
        raise PreconditionViolated("polynomial is not nilpotent within the bound")
    exps = [1] * len(f)
    g = f
    steps = []
    while g:
        d = len(g) - 1
        lead = g[d]
        P = x_prime_ideal(ring, lead)
        assert P.contains(lead), "leading coefficient escaped its own x-prime ideal"
        k = ring.is_nilpotent(lead)
        assert k is not None, "prime-ideal member failed direct nilpotency"
        exps[d] = k
        steps.append({"degree": d, "coefficient": lead, "exponent": k})
        g = zp_trim(g[:d])
        assert poly_nilpotency(ring, g) is not None, "truncation lost nilpotency"
    return exps, steps


def verify_invertible_coefficients(ring, f):
    """Mirror of the prime-ideal proof for units of Z/n[X]: returns
    ({degree: exponent} for nonconstant coefficients, the inverse of f)."""
    if not isinstance(ring, ModularRing):
        raise PreconditionViolated("verifier runs over modular rings")
    f = zp_trim(f)
    inverse = poly_inverse(ring, f)
    if inverse is None:
        raise PreconditionViolated("no inverse found within the degree bound")
    exps = {}
    g = f
    while len(g) > 1:
        d = len(g) - 1
        lead = g[d]
        P = x_prime_ideal(ring, lead)
        assert P.contains(lead), "nonconstant coefficient escaped its x-prime ideal"
        k = ring.is_nilpotent(lead)
        assert k is not None, "prime-ideal member failed direct nilpotency"
        exps[d] = k
        g = zp_trim(g[:d])
        # the unit group is closed under adding nilpotents
        assert poly_inverse(ring, g) is not None, "truncation lost invertibility"
    return exps, inverse


# -- matrix proposition -------------------------------------------------------

def matrix_not_surjective(ring, rows):
    """A target vector outside the image of a matrix with more rows than
    columns, certified by elimination over the quotient geometric field."""
    n = len(rows)
    m = len(rows[0]) if n else 0
    if any(len(r) != m for r in rows):
        raise PreconditionViolated("ragged matrix")
    if n <= m:
        raise PreconditionViolated("need strictly more rows than columns")
    if ring.is_trivial:
        raise PreconditionViolated("trivial ring: every map is onto, 1 = 0")
    K = quotient_by(new_maximal_ideal(ring))
    echelon = []  # (pivot row, fully reduced unit-pivot column vector)
    for c in range(m):
        v = [ring.check(rows[r][c]) for r in range(n)]
        for p, u in echelon:
            coef = v[p]
            if not K.is_zero(coef):
                v = [K.sub(vi, K.mul(coef, ui)) for vi, ui in zip(v, u)]
        pivot = next((r for r in range(n) if not K.is_zero(v[r])), None)
        if pivot is None:
            continue
        inv = K.inv(v[pivot])
        v = [K.mul(inv, vi) for vi in v]
        echelon = [
            (p, [K.sub(ui, K.mul(u[pivot], vi)) for ui, vi in zip(u, v)])
            for p, u in echelon
        ]
        echelon.append((pivot, v))
    pivot_rows = {p for p, _ in echelon}
    j = next(r for r in range(n) if r not in pivot_rows)
    cert = [ring.one if r == j else ring.zero for r in range(n)]
    if isinstance(ring, ModularRing) and ring.n**m <= 200_000:
        assert not _finite_image_hits(ring, rows, cert), (
            "exhaustive image enumeration reached the certificate"
        )
    return cert


def _finite_image_hits(ring, rows, target):
    n, m = len(rows), len(rows[0])
    for coeffs in product(range(ring.n), repeat=m):
        image = [
            sum(rows[r][c] * coeffs[c] for c in range(m)) % ring.n for r in range(n)
        ]
        if image == list(target):
            return True
    return False


# -- brute-force ground truth over Z/n ---------------------------------------

class BruteForceOracle:
    """Exhaustive unit/nilpotent sets and definitional ideal checks, n <= 30."""

    def __init__(self, ring):
        if not isinstance(ring, ModularRing) or ring.n > 30:
            raise PreconditionViolated("brute force oracle covers Z/n, n <= 30")
        self.ring = ring
        n = ring.n
        self.units = frozenset(x for x in range(n) if math.gcd(x, n) == 1)
        nil = {}
        for x in range(n):
            power = x % n
            for k in range(1, n + 2):
                if power == 0:
                    nil[x] = k
                    break
                power = (power * x) % n
        self.nilpotents = nil
        self.ideals = {
            d: frozenset(range(0, n, d)) for d in range(1, n + 1) if n % d == 0
        }

    def membership(self, x, gens):
        """x = sum(a_i g_i) for some coefficient tuple, exhaustively."""
        n = self.ring.n
        x %= n
        if not gens:
            return x == 0
        for coeffs in product(range(n), repeat=len(gens)):
            if sum(a * g for a, g in zip(coeffs, gens)) % n == x:
                return True
        return False

    def prime_check(self, subset):
        """Classical primality of a subset: proper ideal with the pair rule."""
        n = self.ring.n
        S = {x % n for x in subset}
        if 0 not in S or (1 % n) in S:
            return False
        for x in S:
            for y in range(n):
                if (x * y) % n not in S:
                    return False
                if y in S and (x + y) % n not in S:
                    return False
        for x in range(n):
            for y in range(n):
                if (x * y) % n in S and x not in S and y not in S:
                    return False
        return True


def maximal_ideal_member_set(ring):
    """All members of the canonically constructed maximal ideal of Z/n."""
    M = new_maximal_ideal(ring)
    return {x for x in ring.elements() if M.contains(x)}


__all__ = [
    "BruteForceOracle",
    "matrix_not_surjective",
    "maximal_ideal_member_set",
    "poly_inverse",
    "poly_nilpotency",
    "verify_invertible_coefficients",
    "verify_nilpotent_coefficients",
    "zp_mul",
    "zp_sub",
    "zp_trim",
]
