"""Enumerations of ring elements: canonical orders and controlled heads.

An enumeration is a partial surjection from the naturals onto a ring; the
maximal-ideal construction consumes it one index at a time.  Variants exist
because the constructed ideal depends on the order (e.g. a head starting
with a prime p over the integers yields (p))."""

from .errors import SpecParseError


class Enumeration:
    """Partial surjection N -> ring, with an inverse lookup."""

    def __init__(self, ring, name, at_fn, index_fn):
        self.ring = ring
        self.name = name
        self._at = at_fn
        self._index = index_fn

    def at(self, i):
        """Element at index i, or None when undefined."""
        if i < 0:
            raise ValueError("enumeration indices are naturals")
        return self._at(i)

    def index_of(self, x):
        """Some index i with at(i) == x."""
        return self._index(x)

    def __repr__(self):
        return f"<Enumeration {self.name} of {self.ring.describe()}>"


def canonical(ring):
    """The ring's own canonical order (zigzag / identity / degree-major)."""
    return Enumeration(ring, "canonical", ring.enumerate, ring.index_of)


def shifted(ring, k):
    """Canonical order with the first k+1 entries rotated so x_k comes first."""

    def at(i):
        if i == 0:
            return ring.enumerate(k)
        if i <= k:
            return ring.enumerate(i - 1)
        return ring.enumerate(i)

    def index_of(x):
        c = ring.index_of(x)
        if c == k:
            return 0
        if c < k:
            return c + 1
        return c

    return Enumeration(ring, f"shifted:{k}", at, index_of)


def explicit_prefix(ring, values):
    """Given head values, then the full canonical order as the tail."""
    values = [ring.check(v) for v in values]

    def at(i):
        if i < len(values):
            return values[i]
        return ring.enumerate(i - len(values))

    def index_of(x):
        for i, v in enumerate(values):
            if ring.eq(v, x):
                return i
        return len(values) + ring.index_of(x)

    return Enumeration(ring, "list:" + ",".join(repr(v) for v in values), at, index_of)


def from_spec(ring, spec, parse_element=None):
    """Parse an enumeration spec: zigzag | identity | canonical |
    shifted:<k> | list:<csv>."""
    if spec in ("zigzag", "identity", "canonical"):
        return canonical(ring)
    if spec.startswith("shifted:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError as e:
            raise SpecParseError(f"bad shift count in {spec!r}") from e
        if k < 0:
            raise SpecParseError(f"bad shift count in {spec!r}")
        return shifted(ring, k)
    if spec.startswith("list:"):
        parts = [p for p in spec.split(":", 1)[1].split(",") if p]
        if not parts:
            raise SpecParseError(f"empty list enumeration {spec!r}")
        if parse_element is None:
            raise SpecParseError("list enumeration needs an element parser")
        return explicit_prefix(ring, [parse_element(p) for p in parts])
    raise SpecParseError(f"unknown enumeration spec {spec!r}")
