"""Shared test helpers.

The brute-force functions here are deliberately naive (plain sieves,
exhaustive searches, a tiny expression parser) so they cannot share bugs
with the library code they cross-check.
"""

import math
import random
import re
from fractions import Fraction

import pytest

from rgamma import (
    defining_equations,
    enumerate_sdec_below_conductor,
    from_generators,
)
from rgamma.symcore import Poly


# -- independent brute force ---------------------------------------------

def sieve_members(generators, bound):
    """member[n] for 0 <= n < bound by direct additive closure."""
    member = [False] * bound
    if bound:
        member[0] = True
    for n in range(1, bound):
        member[n] = any(v <= n and member[n - v] for v in generators)
    return member


def naive_conductor_and_gaps(generators):
    """Conductor and gap list straight from a sieve."""
    bound = min(generators) * max(generators) + 2
    member = sieve_members(generators, bound)
    gaps = [n for n in range(1, bound) if not member[n]]
    conductor = gaps[-1] + 1 if gaps else 0
    return conductor, gaps


def all_factorizations(generators, n):
    """Every exponent vector e with sum e_i * generators[i] == n."""
    out = []

    def extend(i, prefix, left):
        if i == len(generators):
            if left == 0:
                out.append(tuple(prefix))
            return
        v = generators[i]
        for e in range(left // v + 1):
            extend(i + 1, prefix + [e], left - e * v)

    extend(0, [], n)
    return out


def three_gen_semigroups(max_conductor=60):
    """Ascending generator triples of every semigroup with exactly three
    minimal generators and conductor at most max_conductor."""
    triples = []
    for v0 in range(3, max_conductor):
        bound = max_conductor + v0
        for v1 in range(v0 + 1, bound):
            if v1 % v0 == 0:
                continue
            pair = bytearray(bound)
            pair[0] = 1
            for n in range(1, bound):
                if (n >= v0 and pair[n - v0]) or (n >= v1 and pair[n - v1]):
                    pair[n] = 1
            for v2 in range(v1 + 1, bound):
                if pair[v2]:
                    continue
                if math.gcd(math.gcd(v0, v1), v2) != 1:
                    continue
                member = bytearray(bound)
                member[0] = 1
                for n in range(1, bound):
                    if (
                        (n >= v0 and member[n - v0])
                        or (n >= v1 and member[n - v1])
                        or (n >= v2 and member[n - v2])
                    ):
                        member[n] = 1
                if all(member[max_conductor:]):
                    triples.append((v0, v1, v2))
    return triples


# -- random data ----------------------------------------------------------

def random_fraction(rng, span=6):
    """Small rational, biased toward integers; zero included."""
    return Fraction(rng.randint(-span, span), rng.choice((1, 1, 1, 2, 3)))


def random_semigroup(rng, max_conductor=40, max_generators=4):
    """Rejection-sample a semigroup with conductor in [2, max_conductor]."""
    while True:
        count = rng.randint(2, max_generators)
        gens = rng.sample(range(2, 16), count)
        if math.gcd(*gens) != 1:
            continue
        gamma = from_generators(gens)
        if 2 <= gamma.conductor <= max_conductor:
            return gamma


def random_point(rng, template):
    return template.point(
        {name: random_fraction(rng) for name in template.variables}
    )


def on_variety_values(rng, presentation, elimination):
    """Free variables random, eliminated variables back-substituted.

    The result satisfies every solved equation; it lies on the variety
    whenever the elimination left no residual equations.
    """
    solved_names = {s.name for s in elimination.solved}
    values = {
        name: random_fraction(rng)
        for name in presentation.template.variables
        if name not in solved_names
    }
    for s in elimination.solved:
        values[s.name] = s.expression.evaluate(values)
    return values


# -- polynomial fixtures from text ----------------------------------------

_CHUNK = re.compile(r"[+-]?[^+-]+")


def parse_poly(text):
    """Parse '5*a5^3 - 1/2*b7*c15 + 7' into a Poly.

    Only the shapes the fixtures use: integer or p/q coefficients, '*'
    between factors, '^' powers.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial text")
    total = Poly.zero()
    for chunk in _CHUNK.findall(compact):
        body = chunk
        coeff = Fraction(1)
        if body[0] in "+-":
            coeff = Fraction(-1 if body[0] == "-" else 1)
            body = body[1:]
        exponents = {}
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"cannot parse term {chunk!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
            else:
                name, _, power = factor.partition("^")
                exponents[name] = exponents.get(name, 0) + (int(power) if power else 1)
        total = total + Poly.monomial(exponents, coeff)
    return total


# -- shared fixtures -------------------------------------------------------

@pytest.fixture(scope="session")
def g4613():
    return from_generators([4, 6, 13])


@pytest.fixture(scope="session")
def g91619():
    return from_generators([9, 16, 19])


@pytest.fixture(scope="session")
def g891011():
    return from_generators([8, 9, 10, 11])


@pytest.fixture(scope="session")
def pres4613(g4613):
    return defining_equations(g4613)


@pytest.fixture(scope="session")
def pres91619(g91619):
    return defining_equations(g91619)


@pytest.fixture(scope="session")
def pres891011(g891011):
    return defining_equations(g891011)


@pytest.fixture(scope="session")
def small_three_gen_survey():
    """All 3-generator semigroups with conductor <= 60, plus the variety
    presentations of those with a single deceptive binomial below it."""
    triples = three_gen_semigroups(60)
    singles = []
    for triple in triples:
        gamma = from_generators(triple)
        if len(enumerate_sdec_below_conductor(gamma)) == 1:
            singles.append(defining_equations(gamma))
    return triples, singles
