"""
1-Type Engine Tests
Type records, level allocation, realization, classification and decisions
"""

import pytest

from errors import LevelExhaustedError, PreconditionError
from hahn.element import embed, generator
from hahn.value import Value
from interpreter.expression_parser import parse_element
from onetypes.allocation import LevelAllocator
from onetypes.classifier import classify
from onetypes.decision import decide_pn_of_polynomial, decide_valuation_of_polynomial
from onetypes.realization import heir_realize, realize
from onetypes.types import (
    Infinitesimal,
    Realized,
    Residual,
    Unbounded,
    concentrates_on_zero,
    coset_of,
    describe,
)
from reports.samples import random_polynomial, sample_one_types
from series.coefficient import Coefficient
from series.laurent import LaurentSeries
from valfield.polynomial import MPolynomial
from valfield.predicates import CosetLabel, coset_label, pn_holds


class TestTypeRecords:

    def test_labels_are_normalized(self):
        assert Unbounded(3).k == CosetLabel(3)
        assert Infinitesimal(LaurentSeries.zero(), -2).k == CosetLabel(-2)

    def test_residual_base_point_constraints(self, t):
        Residual(t(-1) + 2, 1)
        with pytest.raises(PreconditionError):
            Residual(t(3), 3)
        with pytest.raises(PreconditionError):
            Residual((1 - t(1)).inverse(), 5)
        with pytest.raises(PreconditionError):
            Residual(LaurentSeries.constant(Coefficient.tau(1, 4)), 2)
        with pytest.raises(PreconditionError):
            Residual(LaurentSeries.zero(), 2, 0)

    def test_coset_of(self, t):
        assert coset_of(Realized(t(4) * 3)) == CosetLabel(4)
        assert coset_of(Infinitesimal(t(-1), 7)) == CosetLabel(-1)
        assert coset_of(Infinitesimal(LaurentSeries.zero(), 7)) == CosetLabel(7)
        assert coset_of(Residual(LaurentSeries.zero(), 3)) == CosetLabel(3)
        assert coset_of(Unbounded(-2)) == CosetLabel(-2)
        with pytest.raises(PreconditionError):
            coset_of(Realized(LaurentSeries.zero()))

    def test_concentrates_on_zero(self, t):
        assert concentrates_on_zero(Realized(LaurentSeries.zero()))
        assert not concentrates_on_zero(Infinitesimal(LaurentSeries.zero(), 0))

    def test_describe(self):
        assert describe(Unbounded(0)) == "pinf[k=0]"
        assert describe(Residual(LaurentSeries.constant(2), 3)) == "res[a=2,n=3,tau=1]"


class TestLevelAllocator:

    def test_fresh_levels_increase(self, allocator):
        assert [allocator.fresh_level() for _ in range(3)] == [1, 2, 3]
        assert allocator.used_levels == (1, 2, 3)

    def test_exhaustion(self):
        allocator = LevelAllocator(2, 4, 256)
        allocator.fresh_level()
        allocator.fresh_level()
        with pytest.raises(LevelExhaustedError):
            allocator.fresh_level()

    def test_observe_moves_above_context(self, allocator):
        allocator.observe(generator(5))
        assert allocator.fresh_level() == 6

    def test_reserve_and_fork(self, allocator):
        allocator.reserve(2)
        fork = allocator.fork()
        assert fork.fresh_level() == 3
        assert allocator.used_levels == (1, 2)

    def test_claim_tau(self, allocator):
        assert allocator.claim_tau(2) == 2
        assert allocator.claim_tau(2) == 3
        assert allocator.fresh_tau() == 4
        with pytest.raises(LevelExhaustedError):
            allocator.fresh_tau()


class TestClassification:

    def test_classify_realize_identity(self, config, rng):
        for p in sample_one_types(rng, config, 24):
            assert classify(realize(p, LevelAllocator.from_config(config))) == p

    @pytest.mark.parametrize("k", range(-8, 9))
    def test_realizations_land_in_their_coset(self, k, t):
        for p in (Unbounded(k), Infinitesimal(LaurentSeries.zero(), k)):
            x = realize(p)
            assert coset_label(x) == CosetLabel(k)
            assert all(pn_holds(x / t(k), n) for n in range(1, 11))

    def test_residual_example(self):
        assert classify(parse_element("2 + tau1*t^3")) == Residual(LaurentSeries.constant(2), 3, 1)

    def test_residual_with_laurent_base(self):
        p = classify(parse_element("t^-1 + tau2*t"))
        assert p == Residual(LaurentSeries.t_power(-1), 1, 2)

    def test_level_examples(self, t):
        assert classify(generator(1)) == Infinitesimal(LaurentSeries.zero(), 0)
        assert classify(embed(t(2)) * generator(1, -1)) == Unbounded(2)
        assert classify(embed(1 + t(1)) + embed(t(3)) * generator(2)) == Infinitesimal(1 + t(1), 3)
        assert classify(embed(t(-1) + 3)) == Realized(t(-1) + 3)

    def test_undesignated_transcendental_stays_standard(self):
        p = classify(parse_element("2 + tau1*t^3"), designated=frozenset({2}))
        assert isinstance(p, Realized)
        assert p.a.tau_support == frozenset({1})
        assert p.a.coefficient(0) == 2

    def test_heir_realization_dominates_context(self, allocator):
        first = heir_realize(Unbounded(0), allocator)
        second = heir_realize(Unbounded(0), allocator, context=(first,))
        assert second.used_levels() == frozenset({2})
        assert classify(first + second) == Unbounded(0)


class TestDecisions:

    def test_unbounded_polynomial_value(self, t):
        f = MPolynomial.of([1, 0, t(1)])
        value = decide_valuation_of_polynomial(Unbounded(2), f)
        assert value == Value.at_level(1, -2, 8, std=5)
        assert decide_pn_of_polynomial(Unbounded(2), f, 5)
        assert not decide_pn_of_polynomial(Unbounded(2), f, 2)

    def test_methods_agree_on_samples(self, config, rng):
        for p in sample_one_types(rng, config, 16):
            f = MPolynomial.of([random_polynomial(rng, config, -1, 2, 2) for _ in range(3)])
            evaluated = decide_valuation_of_polynomial(p, f, "evaluate", config)
            shifted = decide_valuation_of_polynomial(p, f, "lemma", config)
            assert evaluated.std == shifted.std
            for n in range(2, 5):
                assert decide_pn_of_polynomial(p, f, n, "evaluate", config) == \
                    decide_pn_of_polynomial(p, f, n, "lemma", config)

    def test_zero_base_point_lemma_route(self):
        f = MPolynomial.of([1, 1])
        zero = LaurentSeries.zero()
        for p in (Infinitesimal(zero, 2), Residual(zero, 3, 1)):
            for method in ("evaluate", "lemma"):
                assert decide_valuation_of_polynomial(p, f, method) == Value.standard(0, 8)
                assert all(decide_pn_of_polynomial(p, f, n, method) for n in range(2, 6))

    def test_infinitesimal_root_neighbourhood(self, t):
        # f(x) = x - 1 near x = 1 takes the infinitesimal's value
        f = MPolynomial.of([-1, 1])
        p = Infinitesimal(LaurentSeries.one(), 3)
        for method in ("evaluate", "lemma"):
            assert decide_valuation_of_polynomial(p, f, method) == Value.at_level(1, 1, 8, std=3)

    def test_rejects_bad_inputs(self):
        f = MPolynomial.of([0, 1])
        with pytest.raises(PreconditionError):
            decide_valuation_of_polynomial(Unbounded(0), f, "guess")
        with pytest.raises(PreconditionError):
            decide_pn_of_polynomial(Unbounded(0), f, 0)
        with pytest.raises(PreconditionError):
            decide_valuation_of_polynomial(Unbounded(0), MPolynomial.of([0]))
