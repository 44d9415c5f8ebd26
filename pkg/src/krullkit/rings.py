"""Ring abstraction and the shipped strongly discrete instances.

Concrete rings: the integers, modular rings Z/n, prime fields GF(p),
univariate polynomial rings over a finite geometric field, and localizations
of a Euclidean domain at one element.  Every instance decides membership in
finitely generated ideals and returns coefficient witnesses; Euclidean
instances additionally expose gcd machinery used to compress the generator
chains of the maximal-ideal construction.
"""

import math
from dataclasses import dataclass

from . import polys
from .errors import RingUsageError, UnsupportedRing
from .witness import make_witness


def int_xgcd(a, b):
    """(g, u, v) with u*a + v*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        return -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def cantor_pair(u, v):
    return (u + v) * (u + v + 1) // 2 + v


def cantor_unpair(i):
    w = int((math.isqrt(8 * i + 1) - 1) // 2)
    t = w * (w + 1) // 2
    v = i - t
    return w - v, v


class Ring:
    """Common surface of all ring instances; elements are raw values."""

    kind = "abstract"
    is_trivial = False

    # -- element plumbing -------------------------------------------------
    def check(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def eq(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def is_zero(self, x):
        return self.eq(x, self.zero)

    def pow(self, x, k):
        out = self.one
        for _ in range(k):
            out = self.mul(out, x)
        return out

    # -- enumeration -------------------------------------------------------
    def enumerate(self, i):
        """i-th element of the canonical enumeration, or None."""
        raise NotImplementedError

    def index_of(self, x):
        """Least canonical index of x (closed form where available)."""
        raise NotImplementedError

    # -- strongly discrete oracle -------------------------------------------
    def ideal_membership(self, x, gens):
        """Witness for x in the ideal generated by gens, or None."""
        raise UnsupportedRing(f"no membership procedure for kind {self.kind!r}")

    def contains_one(self, gens):
        return self.ideal_membership(self.one, gens)

    def is_nilpotent(self, x):
        """Least k >= 1 with x^k = 0, or None."""
        raise UnsupportedRing(f"no nilpotency procedure for kind {self.kind!r}")

    def is_unit(self, x):
        """Multiplicative inverse of x, or None."""
        raise UnsupportedRing(f"no unit procedure for kind {self.kind!r}")

    # -- principal reduction of finitely generated ideals --------------------
    # state summarizes an ideal so that adding one generator and testing
    # 1-membership are O(1)-sized; used by the generator-chain fast path.
    def reduce_empty(self):
        raise UnsupportedRing(f"no ideal reduction for kind {self.kind!r}")

    def reduce_fold(self, state, x):
        raise UnsupportedRing(f"no ideal reduction for kind {self.kind!r}")

    def reduce_is_improper(self, state):
        raise UnsupportedRing(f"no ideal reduction for kind {self.kind!r}")

    def __repr__(self):
        return f"<{type(self).__name__} {self.describe()}>"

    def describe(self):
        return self.kind


class EuclideanRing(Ring):
    """Extra surface shared by the integers and K[X]: normalized gcds."""

    is_euclidean = True

    def gcd(self, a, b):
        raise NotImplementedError

    def xgcd(self, a, b):
        raise NotImplementedError

    def divides(self, d, x):
        raise NotImplementedError

    def exact_div(self, x, d):
        raise NotImplementedError

    def xgcd_fold(self, gens):
        """(g, coeffs) with sum(coeffs[i]*gens[i]) = g = normalized gcd.

        Generators that do not refine the running gcd get coefficient zero,
        which keeps witnesses sparse and reproducible.
        """
        g = self.zero
        coeffs = []
        for gen in gens:
            g2, u, v = self.xgcd(g, gen)
            if self.eq(g2, g):
                coeffs.append(self.zero)
                continue
            coeffs = [self.mul(c, u) for c in coeffs]
            coeffs.append(v)
            g = g2
        return g, coeffs

    def ideal_membership(self, x, gens):
        x = self.check(x)
        gens = tuple(self.check(g) for g in gens)
        if self.is_zero(x):
            return make_witness(self, gens, [self.zero] * len(gens), x)
        # prefer a one-generator witness when some generator divides x
        for i, gen in enumerate(gens):
            if not self.is_zero(gen) and self.divides(gen, x):
                coeffs = [self.zero] * len(gens)
                coeffs[i] = self.exact_div(x, gen)
                return make_witness(self, gens, coeffs, x)
        g, coeffs = self.xgcd_fold(gens)
        if self.is_zero(g) or not self.divides(g, x):
            return None
        t = self.exact_div(x, g)
        return make_witness(self, gens, [self.mul(c, t) for c in coeffs], x)


class IntegerRing(EuclideanRing):
    kind = "integers"

    def describe(self):
        return "Z"

    def check(self, x):
        if not isinstance(x, int) or isinstance(x, bool):
            raise RingUsageError(f"not an integer element: {x!r}")
        return x

    zero = property(lambda self: 0)
    one = property(lambda self: 1)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def eq(self, x, y):
        return x == y

    # zigzag enumeration 0, 1, -1, 2, -2, ...
    def enumerate(self, i):
        if i == 0:
            return 0
        if i % 2:
            return (i + 1) // 2
        return -(i // 2)

    def index_of(self, x):
        x = self.check(x)
        if x == 0:
            return 0
        if x > 0:
            return 2 * x - 1
        return -2 * x

    def gcd(self, a, b):
        return math.gcd(a, b)

    def xgcd(self, a, b):
        return int_xgcd(a, b)

    def divides(self, d, x):
        if d == 0:
            return x == 0
        return x % d == 0

    def exact_div(self, x, d):
        return x // d

    def is_nilpotent(self, x):
        return 1 if self.check(x) == 0 else None

    def is_unit(self, x):
        x = self.check(x)
        if x in (1, -1):
            return x
        return None

    def reduce_empty(self):
        return 0

    def reduce_fold(self, state, x):
        return math.gcd(state, x)

    def reduce_is_improper(self, state):
        return state == 1


class ModularRing(Ring):
    """Z/n with canonical representatives 0..n-1; partial enumeration."""

    kind = "modular"

    def __init__(self, n):
        if not isinstance(n, int) or n < 1:
            raise RingUsageError(f"modulus must be a positive integer: {n!r}")
        self.n = n
        self.is_trivial = n == 1

    def describe(self):
        return f"Z/{self.n}"

    def check(self, x):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.n:
            raise RingUsageError(f"not an element of Z/{self.n}: {x!r}")
        return x

    zero = property(lambda self: 0)
    one = property(lambda self: 1 % self.n)

    def add(self, x, y):
        return (x + y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def eq(self, x, y):
        return x % self.n == y % self.n

    def enumerate(self, i):
        return i if 0 <= i < self.n else None

    def index_of(self, x):
        return self.check(x)

    def ideal_membership(self, x, gens):
        x = self.check(x)
        gens = tuple(self.check(g) for g in gens)
        g, coeffs = _Z.xgcd_fold(list(gens) + [self.n])
        coeffs = coeffs[:-1]  # drop the modulus coefficient
        if x % g:
            return None
        t = x // g
        return make_witness(self, gens, [(c * t) % self.n for c in coeffs], x)

    def is_nilpotent(self, x):
        x = self.check(x)
        # decided by radical divisibility: every prime of n must divide x
        m = self.n
        while (d := math.gcd(m, x)) > 1:
            m //= d
        if m != 1:
            return None
        k = 1
        while pow(x, k, self.n) != 0:
            k += 1
        return k

    def is_unit(self, x):
        x = self.check(x)
        g, u, _ = int_xgcd(x, self.n)
        if g != 1:
            return None
        return u % self.n

    def reduce_empty(self):
        return self.n

    def reduce_fold(self, state, x):
        return math.gcd(state, x)

    def reduce_is_improper(self, state):
        return state == 1

    # element counting helpers used by oracles
    def elements(self):
        return range(self.n)


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


class PrimeField(ModularRing):
    """GF(p); also serves as a coefficient field for polynomial rings."""

    kind = "prime-field"

    def __init__(self, p):
        if not _is_prime(p):
            raise RingUsageError(f"not a prime: {p!r}")
        super().__init__(p)
        self.prime_modulus = p
        self.order = p

    def describe(self):
        return f"GF({self.n})"

    def inv(self, x):
        if x % self.n == 0:
            raise ZeroDivisionError("inverse of zero in a field")
        return pow(x, self.n - 2, self.n)


class PolynomialRing(EuclideanRing):
    """K[X] for a finite geometric field K (prime field or tower level)."""

    kind = "poly-ring"

    def __init__(self, base_field):
        order = getattr(base_field, "order", None)
        if order is None:
            raise UnsupportedRing(
                "polynomial rings need a finite coefficient field with known order"
            )
        self.base = base_field
        self.base_order = order

    def describe(self):
        return f"{self.base.describe()}[X]"

    def check(self, x):
        if not isinstance(x, tuple):
            raise RingUsageError(f"polynomial elements are tuples: {x!r}")
        for c in x:
            self.base.check(c)
        if x and self.base.is_zero(x[-1]):
            raise RingUsageError(f"trailing zero coefficient: {x!r}")
        return x

    zero = property(lambda self: ())
    one = property(lambda self: (self.base.one,))

    @property
    def gen(self):
        return (self.base.zero, self.base.one)

    def add(self, x, y):
        return polys.padd(self.base, x, y)

    def neg(self, x):
        return polys.pneg(self.base, x)

    def mul(self, x, y):
        return polys.pmul(self.base, x, y)

    def eq(self, x, y):
        return x == y

    # degree-major, coefficient-lexicographic: base-q digits are coefficients
    def enumerate(self, i):
        q = self.base_order
        digits = []
        while i:
            digits.append(self.base.enumerate(i % q))
            i //= q
        return tuple(digits)

    def index_of(self, x):
        x = self.check(x)
        q = self.base_order
        i = 0
        for c in reversed(x):
            i = i * q + self.base.index_of(c)
        return i

    def gcd(self, a, b):
        return polys.pgcd(self.base, a, b)

    def xgcd(self, a, b):
        return polys.pxgcd(self.base, a, b)

    def divides(self, d, x):
        return polys.pdivides(self.base, d, x)

    def exact_div(self, x, d):
        q, r = polys.pdivmod(self.base, x, d)
        if r:
            raise RingUsageError("non-exact polynomial division")
        return q

    def is_nilpotent(self, x):
        return 1 if not self.check(x) else None

    def is_unit(self, x):
        x = self.check(x)
        if len(x) == 1:
            return (self.base.inv(x[0]),)
        return None

    def reduce_empty(self):
        return ()

    def reduce_fold(self, state, x):
        return polys.pgcd(self.base, state, x)

    def reduce_is_improper(self, state):
        return len(state) == 1


@dataclass(frozen=True)
class Fraction:
    """num / s^exp in a localization A[1/s]."""

    num: object
    exp: int


def saturation_divides(A, x, g):
    """Least N >= 0 with x^N in (g), or None.

    Decision by the iterated-gcd loop: h := g; divide out gcd(h, x) while it
    is a nonunit; membership holds iff h ends up a unit.
    """
    x = A.check(x)
    g = A.check(g)
    if A.is_zero(g):
        return 1 if A.is_zero(x) else None
    h = g
    while True:
        if A.is_unit(h) is not None:
            break
        d = A.gcd(h, x)
        if A.is_unit(d) is not None:
            return None
        h = A.exact_div(h, d)
    n = 0
    power = A.one
    while not A.divides(g, power):
        power = A.mul(power, x)
        n += 1
        if n > 10_000:
            raise RuntimeError("saturation exponent search runaway")
    return n


class Localization(Ring):
    """A[1/s] for a Euclidean domain A; elements are fractions num/s^exp."""

    kind = "localization"

    def __init__(self, base_ring, s):
        if not getattr(base_ring, "is_euclidean", False):
            raise UnsupportedRing("localization requires a Euclidean base ring")
        self.base = base_ring
        self.s = base_ring.check(s)
        self.is_trivial = base_ring.is_zero(self.s)

    def describe(self):
        return f"{self.base.describe()}[1/{self.s!r}]"

    def check(self, x):
        if not isinstance(x, Fraction) or not isinstance(x.exp, int) or x.exp < 0:
            raise RingUsageError(f"not a localization element: {x!r}")
        self.base.check(x.num)
        return x

    def normalize(self, x):
        A = self.base
        num, exp = x.num, x.exp
        if A.is_zero(num):
            return Fraction(A.zero, 0)
        while exp > 0 and not A.is_unit(self.s) and A.divides(self.s, num):
            num = A.exact_div(num, self.s)
            exp -= 1
        if A.is_unit(self.s):
            # s invertible in A already; collapse the denominator
            inv = A.is_unit(self.s)
            num = A.mul(num, A.pow(inv, exp))
            exp = 0
        return Fraction(num, exp)

    def embed(self, a):
        return Fraction(self.base.check(a), 0)

    zero = property(lambda self: Fraction(self.base.zero, 0))
    one = property(lambda self: Fraction(self.base.one, 0))

    def add(self, x, y):
        A = self.base
        num = A.add(
            A.mul(x.num, A.pow(self.s, y.exp)),
            A.mul(y.num, A.pow(self.s, x.exp)),
        )
        return self.normalize(Fraction(num, x.exp + y.exp))

    def neg(self, x):
        return Fraction(self.base.neg(x.num), x.exp)

    def mul(self, x, y):
        return self.normalize(Fraction(self.base.mul(x.num, y.num), x.exp + y.exp))

    def eq(self, x, y):
        if self.is_trivial:
            return True
        A = self.base
        return A.eq(
            A.mul(x.num, A.pow(self.s, y.exp)),
            A.mul(y.num, A.pow(self.s, x.exp)),
        )

    # pairing of (numerator index, denominator exponent)
    def enumerate(self, i):
        u, v = cantor_unpair(i)
        num = self.base.enumerate(u)
        if num is None:
            return None
        return self.normalize(Fraction(num, v))

    def index_of(self, x):
        x = self.normalize(self.check(x))
        return cantor_pair(self.base.index_of(x.num), x.exp)

    def ideal_membership(self, x, gens):
        A = self.base
        x = self.check(x)
        gens = tuple(self.check(g) for g in gens)
        if self.is_trivial:
            return make_witness(self, gens, [self.zero] * len(gens), x)
        g, coeffs = A.xgcd_fold([gen.num for gen in gens])
        if A.is_zero(g):
            if A.is_zero(x.num):
                return make_witness(self, gens, [self.zero] * len(gens), x)
            return None
        # x in (gens) iff s^N * x.num in (g) for some N
        d = A.gcd(g, x.num)
        if saturation_divides(A, self.s, A.exact_div(g, d)) is None:
            return None
        n = 0
        power = x.num
        while not A.divides(g, power):
            power = A.mul(power, self.s)
            n += 1
        t = A.exact_div(power, g)  # s^n * x.num = t * g
        out = []
        for gen, c in zip(gens, coeffs):
            num = A.mul(A.mul(c, t), A.pow(self.s, gen.exp))
            out.append(self.normalize(Fraction(num, n + x.exp)))
        return make_witness(self, gens, out, x)

    def is_unit(self, x):
        x = self.check(x)
        if self.is_trivial:
            return self.one
        A = self.base
        if A.is_zero(x.num):
            return None
        n = saturation_divides(A, self.s, x.num)
        if n is None:
            return None
        q = A.exact_div(A.pow(self.s, n), x.num)
        return self.normalize(Fraction(A.mul(q, A.pow(self.s, x.exp)), n))

    def reduce_empty(self):
        return self.base.zero

    def reduce_fold(self, state, x):
        return self.base.gcd(state, x.num)

    def reduce_is_improper(self, state):
        if self.is_trivial:
            return True
        return saturation_divides(self.base, self.s, state) is not None


_Z = IntegerRing()


def integers():
    return _Z
