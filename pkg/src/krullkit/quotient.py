"""Quotient geometric fields, root adjunction and splitting-field towers.

quotient_by wraps a maximal-ideal chain as a field of representatives; the
Kronecker path instead locates a stabilized principal generator above (f)
in K[X], quotients by it directly (residues mod an irreducible modulus) and
iterates until the target polynomial splits into linear factors.
"""

from dataclasses import dataclass, field

from . import polys
from .chain import MaximalIdeal, new_maximal_ideal
from .errors import BoundExceeded, PreconditionViolated
from .rings import PolynomialRing


class GeometricField:
    """A/m with elements represented by members of A; zero-or-invertible."""

    def __init__(self, maximal_ideal):
        self.m = maximal_ideal
        self.ring = maximal_ideal.ring
        base_improper = (
            self.ring.is_trivial
            or self.ring.contains_one(maximal_ideal.base) is not None
        )
        self.is_trivial = base_improper

    zero = property(lambda self: self.ring.zero)
    one = property(lambda self: self.ring.one)

    def check(self, x):
        return self.ring.check(x)

    def add(self, x, y):
        return self.ring.add(x, y)

    def neg(self, x):
        return self.ring.neg(x)

    def sub(self, x, y):
        return self.ring.sub(x, y)

    def mul(self, x, y):
        return self.ring.mul(x, y)

    def is_zero(self, x):
        if self.is_trivial:
            return True
        return self.m.contains(x)

    def eq(self, x, y):
        return self.is_zero(self.ring.sub(x, y))

    def inv(self, x):
        """Inverse from the dichotomy witness 1 = y + a*x with y in m."""
        if self.is_zero(x):
            raise ZeroDivisionError("inverse of zero residue")
        d = self.m.dichotomy(x)
        assert d.verdict == "invertible"
        return d.witness.coefficients[-1]

    def canonical_rep(self, x):
        """First element in the ring's canonical order equal to x mod m."""
        i = 0
        while True:
            r = self.ring.enumerate(i)
            if r is not None and self.eq(x, r):
                return r
            i += 1


def quotient_by(maximal_ideal):
    return GeometricField(maximal_ideal)


class ExtensionField:
    """K[X]/(h) for a monic irreducible h over a finite field K.

    Elements are residue tuples of degree < deg h over K; satisfies the same
    coefficient-field protocol as PrimeField, so towers nest.
    """

    prime_modulus = None

    def __init__(self, base_field, modulus, level=1):
        if len(modulus) < 3:
            raise PreconditionViolated("extension modulus must have degree >= 2")
        self.base = base_field
        self.modulus = polys.pmonic(base_field, modulus)
        self.degree = polys.deg(self.modulus)
        self.order = base_field.order ** self.degree
        self.level = level

    def describe(self):
        return f"{self.base.describe()}[x{self.level}]/(deg {self.degree})"

    def check(self, x):
        if not isinstance(x, tuple) or len(x) > self.degree:
            raise ValueError(f"not a residue of degree < {self.degree}: {x!r}")
        for c in x:
            self.base.check(c)
        return x

    zero = property(lambda self: ())
    one = property(lambda self: (self.base.one,))

    @property
    def gen(self):
        """The adjoined root: the class of X."""
        return (self.base.zero, self.base.one)

    def embed(self, c):
        """Coefficient-field element c as a residue."""
        return () if self.base.is_zero(c) else (c,)

    def add(self, x, y):
        return polys.padd(self.base, x, y)

    def neg(self, x):
        return polys.pneg(self.base, x)

    def sub(self, x, y):
        return polys.psub(self.base, x, y)

    def mul(self, x, y):
        return polys.pmulmod(self.base, x, y, self.modulus)

    def eq(self, x, y):
        return x == y

    def is_zero(self, x):
        return not x

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero field element")
        g, u, _ = polys.pxgcd(self.base, x, self.modulus)
        if polys.deg(g) != 0:
            raise ArithmeticError("modulus is not irreducible after all")
        return polys.pdivmod(self.base, u, self.modulus)[1]

    def enumerate(self, i):
        if not 0 <= i < self.order:
            return None
        q = self.base.order
        digits = []
        while i:
            digits.append(self.base.enumerate(i % q))
            i //= q
        return polys.trim(self.base, digits)

    def index_of(self, x):
        q = self.base.order
        i = 0
        for c in reversed(self.check(x)):
            i = i * q + self.base.index_of(c)
        return i


# -- polynomial helper toolkit over any geometric field ----------------------

def poly_divmod(K, f, g):
    return polys.pdivmod(K, f, g)


def poly_gcd(K, f, g):
    return polys.pgcd(K, f, g)


def poly_eval(K, f, x):
    return polys.peval(K, f, x)


def is_irreducible_trial(K, h):
    """Trial division by every monic nonconstant g with 2*deg g <= deg h."""
    d = polys.deg(h)
    if d < 1:
        return False
    if d == 1:
        return True
    R = PolynomialRing(K)
    q = K.order
    for dd in range(1, d // 2 + 1):
        # monic of degree dd: arbitrary low coefficients, leading one
        for i in range(q**dd):
            low = R.enumerate(i)
            g = tuple(low) + (K.zero,) * (dd - len(low)) + (K.one,)
            if polys.pdivides(K, g, h):
                return False
    return True


def stabilized_generator(maximal_ideal):
    """Principal generator of the stabilized chain in K[X] above (f).

    Advances the chain until every polynomial of degree below the current
    principal generator has been processed; past that point no admission can
    change the generator (once irreducible, gcds with admitted elements
    reproduce it), so this equals the full advance up to deg f.  The result
    is asserted monic, a divisor of f, and irreducible by trial division.
    """
    M = maximal_ideal
    R = M.ring
    if not isinstance(R, PolynomialRing):
        raise PreconditionViolated("stabilized generators live in K[X] chains")
    K = R.base
    q = R.base_order
    M.advance(1)  # ensure the fold state reflects the base
    while True:
        h = M.principal_generator()
        bound = q ** max(polys.deg(h), 1)
        if M.processed() >= bound:
            break
        M.advance(min(bound, M.processed() + 256))
    h = polys.pmonic(K, M.principal_generator())
    assert is_irreducible_trial(K, h), "stabilized generator failed trial division"
    return h


def _adjoin(K, f, level):
    """One Kronecker step: (new field or K, root of f, stabilized modulus)."""
    R = PolynomialRing(K)
    f = polys.pmonic(K, R.check(f))
    if polys.deg(f) < 1:
        raise PreconditionViolated("root adjunction needs a nonconstant polynomial")
    M = new_maximal_ideal(R, base=(f,))
    h = stabilized_generator(M)
    if polys.deg(h) == 1:
        return K, K.neg(h[0]), h
    K2 = ExtensionField(K, h, level=level)
    return K2, K2.gen, h


def adjoin_root(K, f):
    """Field in which monic f has a root, with the root itself."""
    K2, root, _ = _adjoin(K, f, level=getattr(K, "level", 0) + 1)
    return K2, root


@dataclass(frozen=True)
class TowerLevel:
    field: object
    root: object
    modulus: tuple


@dataclass
class FieldTower:
    """Iterated Kronecker extensions from a ground prime field."""

    ground: object
    levels: list = field(default_factory=list)

    @property
    def top(self):
        return self.levels[-1].field if self.levels else self.ground

    @property
    def degree(self):
        d = 1
        for lvl in self.levels:
            d *= polys.deg(lvl.modulus)
        return d

    def to_json(self, fmt):
        return [
            {"modulus": fmt(lvl.modulus), "degree": polys.deg(lvl.modulus)}
            for lvl in self.levels
        ]


DEFAULT_MAX_DEGREE = 4
DEFAULT_MAX_CHAR = 7


def splitting_field(K0, f, max_degree=DEFAULT_MAX_DEGREE, max_char=DEFAULT_MAX_CHAR):
    """Tower and the full root multiset of monic f over prime field K0."""
    R0 = PolynomialRing(K0)
    f = R0.check(f)
    if not f or not K0.eq(f[-1], K0.one):
        raise PreconditionViolated("splitting fields require a monic polynomial")
    if polys.deg(f) > max_degree or K0.order > max_char:
        raise BoundExceeded(
            f"deg {polys.deg(f)} over GF({K0.order}) exceeds the configured budget"
        )
    tower = FieldTower(K0)
    K = K0
    g = f
    roots = []
    while polys.deg(g) >= 1:
        K2, root, _h = _adjoin(K, g, level=len(tower.levels) + 1)
        if K2 is not K:
            # lift everything found so far into the new top field
            g = tuple(K2.embed(c) for c in g)
            roots = [K2.embed(r) for r in roots]
            tower.levels.append(TowerLevel(K2, root, K2.modulus))
            K = K2
        roots.append(root)
        g, rem = polys.pdivmod(K, g, (K.neg(root), K.one))
        assert not rem, "claimed root does not divide the cofactor"
    # reconstruction: product of (X - r_i) must equal the lifted f
    prod = (K.one,)
    for r in roots:
        prod = polys.pmul(K, prod, (K.neg(r), K.one))
    lifted = f
    for lvl in tower.levels:
        lifted = tuple(lvl.field.embed(c) for c in lifted)
    assert prod == lifted, "root product does not reconstruct the polynomial"
    return tower, roots
