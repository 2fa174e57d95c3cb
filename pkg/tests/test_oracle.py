"""
Realization Oracle Tests
Product words, Borel pair readings and rule checks against realized matrices
"""

import pytest

from abflows.borel import BorelTypeJ
from config.engine import EngineConfig
from errors import ClassificationError, LevelExhaustedError, PreconditionError
from onetypes.types import Infinitesimal, Realized, Unbounded
from oracle.verifier import RealizationOracle, Verdict, read_borel_pair
from oracle.words import BFactor, HFactor, MFactor, ProductWord, idempotent_word
from series.laurent import LaurentSeries
from sl2flow.matrices import Matrix2, Z4
from sl2flow.normal_form import SL2TypeNF, idempotent


@pytest.fixture
def oracle(small_config):
    return RealizationOracle(small_config)


class TestProductWords:

    def test_describe(self):
        assert idempotent_word().describe() == "H[pinf[k=0]] * B[pj[k=0]]"
        assert ProductWord.of().describe() == "[]"

    def test_concatenation(self):
        word = idempotent_word() + idempotent_word()
        assert len(word) == 4

    def test_borel_factor_arguments(self):
        assert BFactor(j=3).j == BorelTypeJ(3)
        with pytest.raises(PreconditionError):
            BFactor()
        with pytest.raises(PreconditionError):
            BFactor(j=1, pair=(Unbounded(0), Unbounded(0)))
        with pytest.raises(PreconditionError):
            BFactor(pair=(Unbounded(0), 3))


class TestBorelReadings:

    def test_minimal_ideal_element(self):
        zero = LaurentSeries.zero()
        assert read_borel_pair(Infinitesimal(zero, 2), Unbounded(2)) == BorelTypeJ(2)

    def test_standard_pair(self, t):
        assert read_borel_pair(Realized(t(1)), Realized(t(0))) == (t(1), t(0))

    def test_mismatched_cosets(self):
        zero = LaurentSeries.zero()
        with pytest.raises(ClassificationError):
            read_borel_pair(Infinitesimal(zero, 1), Unbounded(2))
        with pytest.raises(ClassificationError):
            read_borel_pair(Unbounded(1), Unbounded(1))


class TestClassifyWord:

    def test_idempotent_word(self, oracle):
        reading = oracle.classify_word(idempotent_word())
        assert reading.z is Z4.IDENTITY
        assert reading.q == Unbounded(0)
        assert reading.b_part == BorelTypeJ(0)
        assert reading.levels_used == (1, 2, 3)
        assert reading.to_normal_form() == idempotent()
        assert reading.describe() == "z=identity, q=pinf[k=0], b=pj[k=0]"

    def test_reserved_levels_are_not_reported(self, oracle):
        reading = oracle.classify_word(idempotent_word(), reserved_levels=2)
        assert reading.levels_used == (3, 4, 5)
        assert reading.b_part == BorelTypeJ(0)

    def test_standard_word(self, oracle, t):
        word = ProductWord.of(MFactor(Matrix2.borel(t(1), t(0))))
        reading = oracle.classify_word(word)
        assert reading.is_standard_b
        assert reading.b_part == (t(1), t(0))
        with pytest.raises(ClassificationError):
            reading.to_normal_form()

    def test_unipotent_heir(self, oracle):
        word = ProductWord.of(HFactor(Unbounded(3)))
        assert oracle.classify_word(word).q == Unbounded(3)


class TestCheckRule:

    def test_pass(self, oracle):
        result = oracle.check_rule(idempotent(), idempotent_word() + idempotent_word())
        assert result.passed
        assert result.observed == "identity * pinf[k=0] * pj[k=0]"
        assert result.levels_used == (1, 2, 3, 4, 5, 6)

    def test_corrupted_expectation_fails(self, oracle):
        wrong = SL2TypeNF(Z4.IDENTITY, Unbounded(1), BorelTypeJ(0))
        result = oracle.check_rule(wrong, idempotent_word())
        assert result.verdict is Verdict.FAIL
        assert result.expected == "identity * pinf[k=1] * pj[k=0]"
        assert result.observed == "identity * pinf[k=0] * pj[k=0]"

    def test_borel_and_unipotent_expectations(self, oracle):
        assert oracle.check_rule(BorelTypeJ(0), idempotent_word()).passed
        assert oracle.check_rule(Unbounded(0), idempotent_word()).passed
        assert not oracle.check_rule(BorelTypeJ(2), idempotent_word()).passed

    def test_unclassifiable_word_fails(self, oracle, t):
        word = ProductWord.of(MFactor(Matrix2.borel(t(1), t(0))))
        result = oracle.check_rule(idempotent(), word)
        assert result.verdict is Verdict.FAIL
        assert result.observed.startswith("unclassifiable")

    def test_level_exhaustion_propagates(self):
        oracle = RealizationOracle(EngineConfig(levels=2))
        with pytest.raises(LevelExhaustedError):
            oracle.check_rule(idempotent(), idempotent_word())


class TestHeirOrder:

    def test_swapped_borel_allocation(self, oracle):
        allocator = oracle.allocator()
        g = oracle.realize_word(ProductWord.of(BFactor(j=BorelTypeJ(0))), allocator, swap_borel=True)
        beta, gamma, _, _ = g.entries
        assert gamma.used_levels() == frozenset({1})
        assert beta.used_levels() == frozenset({2})

    def test_single_borel_factor_reads_the_same(self, oracle):
        word = ProductWord.of(BFactor(j=BorelTypeJ(2)))
        assert oracle.classify_word(word, swap_borel=True).b_part == BorelTypeJ(2)
        assert oracle.check_heir_order(word).passed

    @pytest.mark.parametrize("kb,kc", [(1, None), (0, 0), (1, -1)])
    def test_borel_orbit_words_are_insensitive(self, kb, kc, oracle, t):
        c = LaurentSeries.zero() if kc is None else t(kc)
        word = ProductWord.of(MFactor(Matrix2.borel(t(kb), c))) + idempotent_word()
        result = oracle.check_heir_order(word)
        assert result.verdict is Verdict.PASS
        assert result.expected == result.observed
