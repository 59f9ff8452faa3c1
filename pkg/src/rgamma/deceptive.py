"""Deceptive polynomials and binomial pairs of equal weighted degree.

Give the generator ring C[x_0, ..., x_g] the weights deg x_i = v_i.  A
polynomial is deceptive when its lowest weighted-homogeneous part vanishes
at (1, ..., 1); the stock of examples driving everything here is the set of
oriented binomials x^u - x^w with u, w distinct exponent vectors of equal
weighted degree.  Substituting normal-form generators into a deceptive
binomial produces a series whose order jumps past the weighted degree, and
the surviving gap coefficients cut out the moduli variety.

Display names for the generator ring are x, y, z, w while there are at most
four generators, x0, x1, ... otherwise; all structural comparisons use the
exponent vectors, never the names.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import UnknownVariable, WrongGeneratorCount, ZeroPolynomial
from .semigroup import NumericalSemigroup
from .symcore import Poly

_GEN_LETTERS = ("x", "y", "z", "w")


def generator_variable_names(count: int) -> tuple[str, ...]:
    if count <= len(_GEN_LETTERS):
        return _GEN_LETTERS[:count]
    return tuple(f"x{i}" for i in range(count))


def _power_str(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


@dataclass(frozen=True)
class GenMonomial:
    """A monomial in the generator ring, tracked with its weighted degree."""

    exponents: tuple[int, ...]
    weighted_degree: int

    @classmethod
    def from_exponents(
        cls, gamma: NumericalSemigroup, exponents: Sequence[int]
    ) -> "GenMonomial":
        exps = tuple(exponents)
        if len(exps) != len(gamma.generators):
            raise WrongGeneratorCount(
                f"expected {len(gamma.generators)} exponents, got {len(exps)}"
            )
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        degree = sum(e * v for e, v in zip(exps, gamma.generators))
        return cls(exps, degree)

    def as_poly(self, names: Sequence[str]) -> Poly:
        return Poly.monomial({n: e for n, e in zip(names, self.exponents) if e})

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = generator_variable_names(len(self.exponents))
        pieces = [
            _power_str(names[i], e) for i, e in enumerate(self.exponents) if e
        ]
        return "*".join(pieces) if pieces else "1"


@dataclass(frozen=True)
class DeceptiveBinomial:
    """x^lhs - x^rhs with lhs, rhs distinct of equal weighted degree.

    Pairs produced by enumerate_sdec_below_conductor are additionally
    oriented: at the smallest index where the exponent vectors differ, the
    lhs has the smaller entry.  The three-generator ideal generators reuse
    this type with the opposite orientation, so orientation is checked at
    the enumeration boundary rather than here.
    """

    lhs: GenMonomial
    rhs: GenMonomial
    degree: int

    def __post_init__(self):
        if len(self.lhs.exponents) != len(self.rhs.exponents):
            raise ValueError("exponent vectors of unequal length")
        if self.lhs.exponents == self.rhs.exponents:
            raise ValueError("binomial sides must be distinct monomials")
        if not (self.lhs.weighted_degree == self.rhs.weighted_degree == self.degree):
            raise ValueError(
                "sides have different weighted degrees: "
                f"{self.lhs.weighted_degree} vs {self.rhs.weighted_degree}"
            )

    @classmethod
    def oriented(
        cls, gamma: NumericalSemigroup, u: Sequence[int], w: Sequence[int]
    ) -> "DeceptiveBinomial":
        """Build from two exponent vectors, orienting by the first
        differing index (smaller entry goes on the left)."""
        a = GenMonomial.from_exponents(gamma, u)
        b = GenMonomial.from_exponents(gamma, w)
        m = next(i for i in range(len(a.exponents)) if a.exponents[i] != b.exponents[i])
        if a.exponents[m] > b.exponents[m]:
            a, b = b, a
        return cls(a, b, a.weighted_degree)

    def satisfies_orientation(self) -> bool:
        for e1, e2 in zip(self.lhs.exponents, self.rhs.exponents):
            if e1 != e2:
                return e1 < e2
        return False

    def as_poly(self, names: Optional[Sequence[str]] = None) -> Poly:
        if names is None:
            names = generator_variable_names(len(self.lhs.exponents))
        return self.lhs.as_poly(names) - self.rhs.as_poly(names)

    def render(self, names: Optional[Sequence[str]] = None) -> str:
        return f"{self.lhs.render(names)} - {self.rhs.render(names)}"

    def to_json_dict(self) -> dict:
        return {
            "lhs": list(self.lhs.exponents),
            "rhs": list(self.rhs.exponents),
            "degree": self.degree,
        }


def is_deceptive(
    gamma: NumericalSemigroup, f: Poly, names: Optional[Sequence[str]] = None
) -> bool:
    """Whether the lowest weighted-homogeneous part of f vanishes at
    (1, ..., 1), i.e. its coefficients sum to zero."""
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no lowest part")
    if names is None:
        names = generator_variable_names(len(gamma.generators))
    weights = {n: v for n, v in zip(names, gamma.generators)}

    lowest: Optional[int] = None
    total = None
    for mono, coeff in f.terms():
        degree = 0
        for var, e in mono:
            if var not in weights:
                raise UnknownVariable(f"{var!r} is not a generator variable")
            degree += weights[var] * e
        if lowest is None or degree < lowest:
            lowest, total = degree, coeff
        elif degree == lowest:
            total += coeff
    return total == 0


def enumerate_sdec_below_conductor(
    gamma: NumericalSemigroup,
) -> tuple[DeceptiveBinomial, ...]:
    """All oriented binomial pairs of equal weighted degree below the
    conductor, sorted by (degree, lhs, rhs)."""
    c = gamma.conductor
    vs = gamma.generators
    by_degree: dict[int, list[tuple[int, ...]]] = {}

    def extend(i: int, prefix: list[int], degree: int) -> None:
        if i == len(vs):
            if degree > 0:
                by_degree.setdefault(degree, []).append(tuple(prefix))
            return
        e = 0
        while degree + e * vs[i] < c:
            extend(i + 1, prefix + [e], degree + e * vs[i])
            e += 1

    if c > 0:
        extend(0, [], 0)

    out: list[DeceptiveBinomial] = []
    for degree in sorted(by_degree):
        bucket = sorted(by_degree[degree])
        for u, w in combinations(bucket, 2):
            out.append(DeceptiveBinomial.oriented(gamma, u, w))
    out.sort(key=lambda b: (b.degree, b.lhs.exponents, b.rhs.exponents))
    return tuple(out)


@dataclass(frozen=True)
class ThreeGenIdecGenerators:
    """Generators of the binomial ideal of relations for <v_0, v_1, v_2>:

        f1 = x^k0 - y^m0 z^m1,  f2 = y^k1 - x^n0 z^n1,  f3 = z^k2 - x^p0 y^p1

    with each k minimal and cofactors tie-broken by minimizing the last
    coordinate, then the middle.  Degrees may lie at or past the conductor.
    """

    binomials: tuple[DeceptiveBinomial, DeceptiveBinomial, DeceptiveBinomial]
    ks: tuple[int, int, int]


def idec_generators_3gen(gamma: NumericalSemigroup) -> ThreeGenIdecGenerators:
    vs = gamma.generators
    if len(vs) != 3:
        raise WrongGeneratorCount(
            f"the binomial presentation needs exactly 3 generators, got {len(vs)}"
        )

    binomials = []
    ks = []
    for axis in range(3):
        others = [i for i in range(3) if i != axis]
        va, (vb, vc) = vs[axis], (vs[others[0]], vs[others[1]])
        found = None
        k = 1
        while found is None:
            target = k * va
            # Scan the last cofactor upward so ties pick the smallest last,
            # then smallest middle coordinate (the remainder fixes the other).
            for last in range(target // vc + 1):
                rem = target - last * vc
                if rem % vb == 0:
                    found = (rem // vb, last)
                    break
            if found is None:
                k += 1
        lhs = [0, 0, 0]
        lhs[axis] = k
        rhs = [0, 0, 0]
        rhs[others[0]], rhs[others[1]] = found
        binomials.append(
            DeceptiveBinomial(
                GenMonomial.from_exponents(gamma, lhs),
                GenMonomial.from_exponents(gamma, rhs),
                k * va,
            )
        )
        ks.append(k)

    return ThreeGenIdecGenerators(tuple(binomials), tuple(ks))
