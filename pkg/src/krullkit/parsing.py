"""Ring-spec, enumeration-spec and polynomial parsing for the CLI and tests.

Ring grammar: Z | Z/<n> | GF(<p>) | GF(<p>)[X] | Z[1/<x>].
Polynomial literals: terms like 3*X^2+X+4 (coefficients are decimal ints).
"""

import re

from .errors import SpecParseError
from .rings import (
    Fraction,
    IntegerRing,
    Localization,
    ModularRing,
    PolynomialRing,
    PrimeField,
    integers,
)

_RING_RES = [
    (re.compile(r"^Z$"), lambda m: integers()),
    (re.compile(r"^Z/(\d+)$"), lambda m: ModularRing(int(m.group(1)))),
    (re.compile(r"^GF\((\d+)\)$"), lambda m: PrimeField(int(m.group(1)))),
    (
        re.compile(r"^GF\((\d+)\)\[X\]$"),
        lambda m: PolynomialRing(PrimeField(int(m.group(1)))),
    ),
    (
        re.compile(r"^Z\[1/(-?\d+)\]$"),
        lambda m: Localization(integers(), int(m.group(1))),
    ),
]


def parse_ring(spec):
    spec = spec.strip()
    for regex, build in _RING_RES:
        m = regex.match(spec)
        if m:
            try:
                return build(m)
            except Exception as e:
                raise SpecParseError(f"bad ring spec {spec!r}: {e}") from e
    raise SpecParseError(f"unrecognized ring spec {spec!r}")


def canonical_spec(ring):
    if isinstance(ring, IntegerRing):
        return "Z"
    if isinstance(ring, PrimeField):
        return f"GF({ring.n})"
    if isinstance(ring, ModularRing):
        return f"Z/{ring.n}"
    if isinstance(ring, PolynomialRing):
        return f"{canonical_spec(ring.base)}[X]"
    if isinstance(ring, Localization):
        return f"{canonical_spec(ring.base)}[1/{ring.s}]"
    return ring.describe()


_TERM_RE = re.compile(
    r"^(?:(?P<coef>-?\d+)\*?)?(?:(?P<var>X)(?:\^(?P<exp>\d+))?)?$"
)


def parse_poly(text, field):
    """Parse a polynomial literal into a coefficient tuple over field."""
    s = text.replace(" ", "").replace("-", "+-")
    if s.startswith("+"):
        s = s[1:]
    if not s:
        raise SpecParseError(f"empty polynomial literal {text!r}")
    coeffs = {}
    for term in s.split("+"):
        if not term:
            raise SpecParseError(f"bad polynomial literal {text!r}")
        t = term[1:] if term.startswith("-") else term
        sign = -1 if term.startswith("-") else 1
        m = _TERM_RE.match(t)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise SpecParseError(f"bad term {term!r} in {text!r}")
        coef = int(m.group("coef")) if m.group("coef") is not None else 1
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
    if not coeffs:
        return ()
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c % field.order
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def format_poly(f, coef_fmt=str, var="X"):
    """Canonical rendering: descending degrees, unit coefficients elided."""
    if not f:
        return "0"
    parts = []
    for e in range(len(f) - 1, -1, -1):
        c = f[e]
        if isinstance(c, int) and c == 0:
            continue
        if e == 0:
            parts.append(coef_fmt(c))
        elif isinstance(c, int) and c == 1:
            parts.append(var if e == 1 else f"{var}^{e}")
        else:
            head = coef_fmt(c)
            parts.append(f"{head}*{var}" if e == 1 else f"{head}*{var}^{e}")
    return "+".join(parts) if parts else "0"


def element_to_json(x):
    """JSON-friendly element rendering: ints stay ints, residue/poly tuples
    become coefficient lists, fractions become num/exp objects."""
    if isinstance(x, bool):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, tuple):
        return [element_to_json(c) for c in x]
    if isinstance(x, Fraction):
        return {"num": element_to_json(x.num), "exp": x.exp}
    return str(x)


def parse_element(ring, text):
    """Parse an element literal appropriate to the ring kind."""
    text = text.strip()
    if isinstance(ring, PolynomialRing):
        return parse_poly(text, ring.base)
    try:
        v = int(text)
    except ValueError as e:
        raise SpecParseError(f"bad element literal {text!r}") from e
    if isinstance(ring, ModularRing):
        return v % ring.n
    if isinstance(ring, Localization):
        return Fraction(v, 0)
    return v
