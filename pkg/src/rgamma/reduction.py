"""Reduction of truncated series against normal-form generators.

Given normal-form generators x_0(t), ..., x_g(t) of a subalgebra with
semigroup Gamma (conductor c), any series r mod t^c can be stripped of its
semigroup-supported part: walk the elements n of Gamma in (0, c) in
increasing order and, whenever t^n carries a nonzero coefficient q, subtract
q times the monomial series x^{e} built from the reverse-lexicographically
minimal factorization e of n.  Each subtraction clears t^n exactly (the
monomial series is monic of order n) and only disturbs higher powers, so
the result -- the reduction of r -- is supported on the gaps of Gamma.

The trace records every removal step and the witness polynomial
F = sum q * x^e, giving the exact reconstruction r = red(r) + phi(F).
Coefficients are Poly values throughout, so the same code path serves the
symbolic template generators and numeric instantiations.

reduce_subset restricts the removable powers to sums of a chosen subset of
the generators, which is what the plane stratum test needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ArityMismatch, EmptyInput, ModulusMismatch, NotNormalForm
from .deceptive import generator_variable_names
from .normalform import is_normal_form, template_modulus
from .semigroup import NumericalSemigroup
from .symcore import Poly, Series, poly_sum


@dataclass(frozen=True)
class ReductionStep:
    """One removal: coefficient ``multiplier`` of t^power was cleared by
    subtracting multiplier * x^factorization."""

    power: int
    multiplier: Poly
    factorization: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "power": self.power,
            "multiplier": str(self.multiplier),
            "factorization": list(self.factorization),
        }


@dataclass(frozen=True)
class ReductionTrace:
    reduced: Series
    steps: tuple[ReductionStep, ...]
    witness: Poly

    def to_json_dict(self) -> dict:
        return {
            "reduced": str(self.reduced),
            "steps": [s.to_json_dict() for s in self.steps],
        }


def phi_eval(
    generators: Sequence[Series],
    f: Poly,
    names: Optional[Sequence[str]] = None,
) -> Series:
    """Substitute the generator series for the ring variables of f.

    ``names`` lists the ring variables, one per generator (default x, y, z,
    w or x0, x1, ...).  Variables of f outside ``names`` ride along as
    scalar coefficients, which is what evaluating a reduction witness needs.
    """
    if not generators:
        raise EmptyInput("phi needs at least one generator series")
    if names is None:
        names = generator_variable_names(len(generators))
    if len(names) != len(generators):
        raise ArityMismatch(
            f"{len(generators)} generators but {len(names)} ring variables"
        )
    modulus = generators[0].modulus
    for s in generators[1:]:
        if s.modulus != modulus:
            raise ModulusMismatch("generator series must share one modulus")

    index = {name: i for i, name in enumerate(names)}
    cache: dict[tuple[int, ...], Series] = {}

    def monomial_series(vec: tuple[int, ...]) -> Series:
        if vec in cache:
            return cache[vec]
        result = Series.one(modulus)
        for i, e in enumerate(vec):
            if e:
                result = result * (generators[i] ** e)
        cache[vec] = result
        return result

    total = Series.zero(modulus)
    for mono, coeff in f.terms():
        vec = [0] * len(generators)
        residual: dict[str, int] = {}
        for var, e in mono:
            if var in index:
                vec[index[var]] = e
            else:
                residual[var] = e
        scalar = Poly.monomial(residual, coeff) if residual else Poly.const(coeff)
        total = total + monomial_series(tuple(vec)).scale(scalar)
    return total


class ReductionContext:
    """Shared caches for repeated reductions against one generator tuple.

    Building the monomial series x^e is the expensive part of a reduction;
    the variety presentation reduces one series per deceptive binomial with
    identical generators, so powers and monomials are cached here.
    """

    def __init__(
        self,
        gamma: NumericalSemigroup,
        generators: Sequence[Series],
        names: Optional[Sequence[str]] = None,
    ):
        if len(generators) != len(gamma.generators):
            raise ArityMismatch(
                f"{gamma} has {len(gamma.generators)} generators, "
                f"got {len(generators)} series"
            )
        modulus = template_modulus(gamma)
        for s in generators:
            if s.modulus != modulus:
                raise ModulusMismatch(
                    f"series modulus {s.modulus} differs from t^{modulus}"
                )
        if not is_normal_form(generators, gamma):
            raise NotNormalForm(
                "generators do not have normal-form shape for " + str(gamma)
            )
        self.gamma = gamma
        self.generators = tuple(generators)
        self.names = tuple(names) if names else generator_variable_names(len(generators))
        if len(self.names) != len(generators):
            raise ArityMismatch("one ring variable per generator is required")
        self.modulus = modulus
        self._powers: dict[tuple[int, int], Series] = {}
        self._monomials: dict[tuple[int, ...], Series] = {}
        self._subset_elements: dict[tuple[int, ...], tuple[int, ...]] = {}

    def _power(self, i: int, e: int) -> Series:
        key = (i, e)
        if key not in self._powers:
            self._powers[key] = self.generators[i] ** e
        return self._powers[key]

    def monomial_series(self, vec: Sequence[int]) -> Series:
        key = tuple(vec)
        if key not in self._monomials:
            result = Series.one(self.modulus)
            for i, e in enumerate(key):
                if e:
                    result = result * self._power(i, e)
            self._monomials[key] = result
        return self._monomials[key]

    def phi(self, f: Poly) -> Series:
        total = Series.zero(self.modulus)
        index = {name: i for i, name in enumerate(self.names)}
        for mono, coeff in f.terms():
            vec = [0] * len(self.generators)
            residual: dict[str, int] = {}
            for var, e in mono:
                if var in index:
                    vec[index[var]] = e
                else:
                    residual[var] = e
            scalar = Poly.monomial(residual, coeff) if residual else Poly.const(coeff)
            total = total + self.monomial_series(vec).scale(scalar)
        return total

    def _removable(self, indices: Optional[Sequence[int]]) -> tuple[int, ...]:
        key = self.gamma._validate_indices(indices)
        if key not in self._subset_elements:
            self._subset_elements[key] = self.gamma.subset_elements(key)
        return self._subset_elements[key]

    def reduce(
        self, r: Series, indices: Optional[Sequence[int]] = None
    ) -> ReductionTrace:
        if r.modulus != self.modulus:
            raise ModulusMismatch(
                f"input lives mod t^{r.modulus}, generators mod t^{self.modulus}"
            )
        current = r
        steps: list[ReductionStep] = []
        for n in self._removable(indices):
            q = current.coefficient(n)
            if q.is_zero:
                continue
            vec = self.gamma.revlex_min_factorization(n, indices)
            current = current - self.monomial_series(vec).scale(q)
            steps.append(ReductionStep(n, q, vec))
        witness = poly_sum(
            s.multiplier * Poly.monomial(
                {self.names[i]: e for i, e in enumerate(s.factorization) if e}
            )
            for s in steps
        )
        return ReductionTrace(current, tuple(steps), witness)


def reduce(
    gamma: NumericalSemigroup,
    generators: Sequence[Series],
    r: Series,
) -> ReductionTrace:
    """Strip every semigroup-supported term of r; see the module docstring."""
    return ReductionContext(gamma, generators).reduce(r)


def reduce_subset(
    gamma: NumericalSemigroup,
    indices: Sequence[int],
    generators: Sequence[Series],
    r: Series,
) -> ReductionTrace:
    """Reduction that only removes powers representable over the selected
    generator indices."""
    subset = tuple(sorted(set(indices)))
    if not subset:
        raise EmptyInput("the generator index subset must be non-empty")
    return ReductionContext(gamma, generators).reduce(r, subset)
