"""Membership witnesses and the global recombination audit.

Every witness is checked at construction time: the linear combination of the
generators with the stored coefficients must equal the claimed member under
the owning ring's equality.  The audit counters let a test suite assert at
the end that every witness it caused to exist passed that check.
"""

from dataclasses import dataclass

from .errors import WitnessError


class _Audit:
    def __init__(self):
        self.created = 0
        self.verified = 0

    def reset(self):
        self.created = 0
        self.verified = 0


AUDIT = _Audit()


@dataclass(frozen=True)
class MembershipWitness:
    """Coefficients a_1..a_k aligned with a generator list g_1..g_k."""

    generators: tuple
    coefficients: tuple


def make_witness(ring, generators, coefficients, member):
    """Build a witness for member = sum(a_i * g_i), verifying the identity."""
    generators = tuple(generators)
    coefficients = tuple(coefficients)
    if len(generators) != len(coefficients):
        raise WitnessError("generator/coefficient length mismatch")
    AUDIT.created += 1
    total = ring.zero
    for g, a in zip(generators, coefficients):
        total = ring.add(total, ring.mul(a, g))
    if not ring.eq(total, member):
        raise WitnessError(
            f"witness does not recombine: got {total!r}, want {member!r}"
        )
    AUDIT.verified += 1
    return MembershipWitness(generators, coefficients)
