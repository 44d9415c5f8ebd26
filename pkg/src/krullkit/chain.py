"""The recursive maximal-ideal construction over an enumerated ring.

A chain processes enumeration indices in order; index n is admitted as a
generator exactly when 1 is not in the ideal spanned by the current
generators, the base ideal and the candidate.  Admission bits and the
running generator list are memoized, so queries are reproducible and the
number of ideal-oracle calls is measurable.  Two independent formulations
of the same membership predicate are provided for cross-checking: the
exponential binary-sequence oracle and the PA-style indicator recursion.
"""

import json
from dataclasses import dataclass
from itertools import product

from . import enumeration as enum_mod
from .errors import UndefinedIndex
from .witness import MembershipWitness


@dataclass(frozen=True)
class Dichotomy:
    """Zero(x in m, witnessed) or Invertible(1 in m + (x), witnessed)."""

    verdict: str  # "zero" | "invertible"
    witness: MembershipWitness
    stage: int

    def to_json(self, query, fmt=None):
        fmt = fmt or _default_fmt
        return {
            "query": fmt(query),
            "verdict": self.verdict,
            "generators": [fmt(g) for g in self.witness.generators],
            "coefficients": [fmt(c) for c in self.witness.coefficients],
            "stage": self.stage,
        }


def _default_fmt(x):
    return x if isinstance(x, int) else str(x)


@dataclass(frozen=True)
class _Record:
    element: object  # None when the enumeration is undefined here
    admitted: bool


class MaximalIdeal:
    """Memoized generator chain of the construction, above a base ideal."""

    def __init__(self, ring, enumeration=None, base=()):
        self.ring = ring
        self.enumeration = enumeration or enum_mod.canonical(ring)
        self.base = tuple(ring.check(g) for g in base)
        self._records = []
        self._gens = []
        state = ring.reduce_empty()
        for g in self.base:
            state = ring.reduce_fold(state, g)
        self._state = state
        self.oracle_calls = 0
        self._indicator = {}

    # -- chain advancement ---------------------------------------------------
    def advance(self, n):
        """Process indices < n; returns the generator list G_n."""
        ring = self.ring
        while len(self._records) < n:
            i = len(self._records)
            x = self.enumeration.at(i)
            if x is None:
                self._records.append(_Record(None, False))
                continue
            candidate = ring.reduce_fold(self._state, x)
            self.oracle_calls += 1
            if ring.reduce_is_improper(candidate):
                self._records.append(_Record(x, False))
            else:
                self._state = candidate
                self._gens.append(x)
                self._records.append(_Record(x, True))
        return [r.element for r in self._records[:n] if r.admitted]

    def generators(self, n):
        """G_n: elements admitted at indices < n."""
        return self.advance(n)

    def principal_generator(self):
        """Reduction state of (G_processed + base); a principal generator
        for Euclidean rings."""
        return self._state

    def processed(self):
        return len(self._records)

    # -- membership ------------------------------------------------------------
    def contains_index(self, n):
        """x_n in m, decided by the admission test at index n."""
        self.advance(n + 1)
        rec = self._records[n]
        if rec.element is None:
            raise UndefinedIndex(f"enumeration undefined at {n}")
        return rec.admitted

    def contains(self, x):
        x = self.ring.check(x)
        return self.contains_index(self.enumeration.index_of(x))

    def dichotomy(self, x):
        """Exactly one of: x in m (zero) or 1 in m + (x) (invertible)."""
        ring = self.ring
        x = ring.check(x)
        n = self.enumeration.index_of(x)
        if self.contains_index(n):
            gens = tuple(self.generators(n + 1)) + self.base
            w = ring.ideal_membership(x, gens)
            assert w is not None, "admitted element must lie in its stage ideal"
            return Dichotomy("zero", w, n)
        gens = tuple(self.generators(n)) + self.base + (x,)
        w = ring.contains_one(gens)
        assert w is not None, "rejected element must make the stage improper"
        return Dichotomy("invertible", w, n)

    # -- independent oracles ------------------------------------------------
    def contains_index_via_sequences(self, n):
        """Literal binary-sequence formulation; O(2^n) oracle calls by design."""
        ring = self.ring
        at = self.enumeration.at
        xn = at(n)
        if xn is None:
            raise UndefinedIndex(f"enumeration undefined at {n}")
        defined = [(i, at(i)) for i in range(n) if at(i) is not None]
        xs = [x for _, x in defined]
        m = len(xs)

        def prefix_ideal(bits, j):
            # (v_0 x_0, ..., v_{j-1} x_{j-1}, x_j) plus base generators
            gens = [xs[t] if bits[t] else ring.zero for t in range(j)]
            gens.append(xs[j] if j < m else xn)
            return tuple(gens) + self.base

        for bits in product((0, 1), repeat=m):
            consistent = True
            for j in range(m):
                not_in = ring.contains_one(prefix_ideal(bits, j)) is None
                if (bits[j] == 1) != not_in:
                    consistent = False
                    break
            if consistent and ring.contains_one(prefix_ideal(bits, m)) is not None:
                return False
        return True

    def indicator(self, n, i):
        """Joint indicator g(n, i): is x_i among the stage-n generators?"""
        if not 0 <= i < n:
            raise ValueError("indicator requires 0 <= i < n")
        return self._indicator_bit(n, i)

    def _indicator_bit(self, n, i):
        if n == 0 or i >= n:
            return 0
        key = (n, i)
        if key in self._indicator:
            return self._indicator[key]
        ring = self.ring
        at = self.enumeration.at
        if self._indicator_bit(n - 1, i):
            bit = 1
        elif i == n - 1 and at(n - 1) is not None:
            gens = [
                at(j)
                if at(j) is not None and self._indicator_bit(n - 1, j)
                else ring.zero
                for j in range(n - 1)
            ]
            gens.append(at(n - 1))
            bit = 1 if ring.contains_one(tuple(gens) + self.base) is None else 0
        else:
            bit = 0
        self._indicator[key] = bit
        return bit


def new_maximal_ideal(ring, enumeration=None, base=()):
    return MaximalIdeal(ring, enumeration, base)


def witness_json(dichotomy, query, fmt=None):
    """Fixed-field-order serialization of a dichotomy witness."""
    return json.dumps(dichotomy.to_json(query, fmt))
