"""Brute-force linear-algebra oracle for subalgebra closures."""

import random
from fractions import Fraction

import pytest

from conftest import on_variety_values, random_point, random_semigroup
from rgamma import (
    ModulusMismatch,
    OrderZeroGenerator,
    build_template,
    canonical_normal_form,
    echelon_basis,
    from_generators,
    instantiate,
    is_normal_form,
    subalgebra_closure_semigroup,
    verify_point,
)
from rgamma.symcore import Poly, Series


def series_from_exponents(modulus, *exponents):
    out = Series.zero(modulus)
    for exp in exponents:
        out = out + Series.term(modulus, exp, 1)
    return out


class TestEchelonBasis:
    def test_known_rref(self):
        rows = [
            series_from_exponents(6, 1, 2),
            series_from_exponents(6, 1, 3),
        ]
        basis = echelon_basis(rows)
        assert basis.pivot_orders == (1, 2)
        # row reduction: r1 - r0 = t^3 - t^2, then clear t^2 from r0
        assert basis.rows[0] == series_from_exponents(6, 1, 3)
        assert basis.rows[1] == Series.term(6, 2, 1) - Series.term(6, 3, 1)

    def test_dependent_rows_collapse(self):
        s = series_from_exponents(8, 2, 5)
        basis = echelon_basis([s, s.scale(3), s.scale(Fraction(-1, 2))])
        assert basis.pivot_orders == (2,)
        assert basis.rows == (s,)

    def test_rref_shape_randomized(self):
        rng = random.Random(211)
        for _ in range(25):
            modulus = rng.randint(4, 12)
            rows = []
            for _ in range(rng.randint(1, 6)):
                coeffs = {
                    rng.randrange(modulus): Poly.const(
                        Fraction(rng.randint(-4, 4))
                    )
                    for _ in range(rng.randint(0, 4))
                }
                rows.append(Series(modulus, coeffs))
            basis = echelon_basis(rows)
            pivots = basis.pivot_orders
            assert list(pivots) == sorted(pivots)
            for row, pivot in zip(basis.rows, pivots):
                assert row.order() == pivot
                assert row.coefficient(pivot) == Poly.const(1)
                for other in basis.rows:
                    if other is not row:
                        assert other.coefficient(pivot).is_zero

    def test_span_is_idempotent(self):
        rng = random.Random(223)
        for _ in range(15):
            modulus = rng.randint(4, 10)
            rows = [
                Series(
                    modulus,
                    {
                        rng.randrange(modulus): Poly.const(rng.randint(1, 5))
                        for _ in range(rng.randint(1, 3))
                    },
                )
                for _ in range(rng.randint(1, 4))
            ]
            basis = echelon_basis(rows)
            again = echelon_basis(list(basis.rows))
            assert again.rows == basis.rows
            assert again.pivot_orders == basis.pivot_orders

    def test_validation(self):
        with pytest.raises(OrderZeroGenerator):
            echelon_basis([])
        with pytest.raises(ModulusMismatch):
            echelon_basis([Series.one(4), Series.one(5)])
        with pytest.raises(ValueError):
            echelon_basis([Series.term(4, 1, Poly.variable("a5"))])


class TestClosure:
    def test_known_monomial_algebra(self):
        gens = [Series.term(16, v, 1) for v in (4, 6, 13)]
        closure = subalgebra_closure_semigroup(gens)
        gamma = from_generators([4, 6, 13])
        assert closure == frozenset(gamma.elements_below_conductor)

    def test_perturbed_generators_grow_closure(self):
        # x_1 tail at t^9 breaks the b9 relation, so new orders appear
        gamma = from_generators([4, 6, 13])
        template = build_template(gamma)
        point = template.point({"b7": 1}, fill_missing=True)
        closure = subalgebra_closure_semigroup(instantiate(template, point))
        expected = frozenset(gamma.elements_below_conductor)
        assert closure != expected
        assert closure > expected
        assert 15 in closure

    def test_unit_generator_rejected(self):
        with pytest.raises(OrderZeroGenerator):
            subalgebra_closure_semigroup([Series.one(8)])

    def test_zero_generators_give_empty_closure(self):
        assert subalgebra_closure_semigroup([Series.zero(6)]) == frozenset()

    def test_permutation_invariance(self):
        rng = random.Random(227)
        for _ in range(10):
            gamma = random_semigroup(rng, max_conductor=30)
            template = build_template(gamma)
            series = [
                s
                for s in instantiate(template, random_point(rng, template))
                if not s.is_zero
            ]
            if not series:
                continue
            baseline = subalgebra_closure_semigroup(series)
            shuffled = series[:]
            rng.shuffle(shuffled)
            assert subalgebra_closure_semigroup(shuffled) == baseline

    def test_closure_contains_generated_orders(self):
        rng = random.Random(229)
        for _ in range(10):
            gamma = random_semigroup(rng, max_conductor=30)
            template = build_template(gamma)
            series = instantiate(template, random_point(rng, template))
            closure = subalgebra_closure_semigroup(
                [s for s in series if not s.is_zero]
            )
            assert closure >= frozenset(gamma.elements_below_conductor)


class TestCanonicalNormalForm:
    def test_strips_semigroup_tail(self):
        # t^3 + t^4 + t^5 over <3,5>: the t^5 term lies in the algebra
        s0 = series_from_exponents(8, 3, 4, 5)
        s1 = series_from_exponents(8, 5)
        detected, normal = canonical_normal_form([s0, s1])
        assert detected.generators == (3, 5)
        assert normal == (series_from_exponents(8, 3, 4), series_from_exponents(8, 5))
        assert is_normal_form(normal, detected)

    def test_already_normal_is_fixed(self):
        s = Series(4, {2: Poly.const(1), 3: Poly.const(1)})
        detected, normal = canonical_normal_form([s])
        assert detected.generators == (2, 5)
        assert normal == (s, Series.zero(4))

    def test_monomial_generators_unchanged(self):
        gens = [Series.term(16, v, 1) for v in (4, 6, 13)]
        detected, normal = canonical_normal_form(gens)
        assert detected.generators == (4, 6, 13)
        assert list(normal) == gens

    def test_round_trip_randomized(self):
        rng = random.Random(233)
        for _ in range(15):
            gamma = random_semigroup(rng, max_conductor=25)
            template = build_template(gamma)
            series = [
                s
                for s in instantiate(template, random_point(rng, template))
                if not s.is_zero
            ]
            if not series:
                continue
            detected, normal = canonical_normal_form(series)
            assert is_normal_form(normal, detected)
            modulus = series[0].modulus
            closure = subalgebra_closure_semigroup(series)
            assert closure == frozenset(
                n for n in range(1, modulus) if detected.contains(n)
            )


class TestVerifyPoint:
    def test_zero_point_verifies(self, g4613):
        template = build_template(g4613)
        assert verify_point(g4613, template.zero_point())

    def test_off_variety_point_fails(self, g4613):
        template = build_template(g4613)
        point = template.point({"b7": 1}, fill_missing=True)
        assert not verify_point(g4613, point)

    def test_on_variety_point_verifies(self, g4613):
        template = build_template(g4613)
        point = template.point(
            {"b7": 1, "b9": Fraction(1, 2)}, fill_missing=True
        )
        assert verify_point(g4613, point)

    def test_degenerate_whole_numbers(self):
        gamma = from_generators([1])
        template = build_template(gamma)
        assert verify_point(gamma, template.zero_point())

    def test_two_generator_points_always_verify(self):
        rng = random.Random(239)
        for pair in ((2, 5), (3, 7), (4, 9)):
            gamma = from_generators(pair)
            template = build_template(gamma)
            for _ in range(5):
                assert verify_point(gamma, random_point(rng, template))
