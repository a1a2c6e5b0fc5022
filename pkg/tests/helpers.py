"""Shared random generators for the test suite.

Everything is driven by a seeded random.Random instance so failures are
reproducible; all generated objects stay small enough for the exact
(brute-force) decision procedures.
"""

from fractions import Fraction

from tropquiver import (
    FieldMatrix,
    PuiseuxElement,
    TropValue,
    ValuatedMatroid,
    pluecker_valuations,
)
from tropquiver.morphism import associated_map
from tropquiver.puiseux import rank_via_minors


def rand_rational(rng, lo=-4, hi=4):
    return Fraction(rng.randint(lo, hi), rng.choice([1, 1, 2]))


def rand_puiseux(rng, zero_prob=0.25, max_exp=2):
    """A short random Puiseux polynomial with small rational data."""
    if rng.random() < zero_prob:
        return PuiseuxElement()
    terms = {}
    for e in range(rng.randint(1, 2)):
        exp = Fraction(rng.randint(0, max_exp))
        coeff = Fraction(rng.randint(-3, 3))
        if coeff:
            terms[exp] = coeff
    return PuiseuxElement(terms)


def rand_field_matrix(rng, rows, cols, zero_prob=0.25):
    return FieldMatrix(
        [[rand_puiseux(rng, zero_prob) for _ in range(cols)] for _ in range(rows)]
    )


def rand_realization(rng, d, n, tries=50):
    """A random full-row-rank d x n matrix and its valuated matroid."""
    for _ in range(tries):
        m = rand_field_matrix(rng, d, n)
        if rank_via_minors(m) == d:
            return m, pluecker_valuations(m)
    raise RuntimeError("failed to sample a full-rank %dx%d matrix" % (d, n))


def rand_weakly_monomial(rng, n, zero_row_prob=0.2):
    """A random square weakly monomial matrix and its associated map."""
    rows = []
    for _ in range(n):
        row = [PuiseuxElement()] * n
        if rng.random() >= zero_row_prob:
            j = rng.randrange(n)
            coeff = Fraction(rng.choice([-2, -1, 1, 2, 3]))
            exp = Fraction(rng.randint(0, 3))
            row[j] = PuiseuxElement.monomial(coeff, exp)
        rows.append(row)
    a = FieldMatrix(rows)
    return a, associated_map(a)


def rand_trop_value(rng, inf_prob=0.25):
    if rng.random() < inf_prob:
        return TropValue(None)
    return TropValue(rand_rational(rng))


def rank1_matroid(n, values):
    """Rank-1 matroid on [n] from a coordinate list; None means infinity."""
    table = {(i,): v for i, v in enumerate(values, start=1) if v is not None}
    return ValuatedMatroid(n, 1, table)
