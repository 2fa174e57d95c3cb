"""
Realization Oracle
Brute-force check of symbolic type products: realize a product word as a
concrete matrix over the realization field, multiply, decompose, and read
the factors back as types. The oracle never consults the symbolic rules.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from abflows.borel import BorelTypeJ
from config.engine import EngineConfig
from errors import ClassificationError, PrecisionHorizonError, PreconditionError
from hahn.element import HahnElement
from onetypes.allocation import LevelAllocator
from onetypes.classifier import classify
from onetypes.realization import heir_realize
from onetypes.types import Infinitesimal, OneType, Realized, Unbounded
from series.laurent import LaurentSeries
from sl2flow.matrices import Decomposition, Matrix2, Z4, decompose
from sl2flow.normal_form import SL2TypeNF
from oracle.words import BFactor, HFactor, MFactor, ProductWord, ZFactor
from valfield.predicates import as_hahn

BorelReading = Union[BorelTypeJ, Tuple[LaurentSeries, LaurentSeries]]


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INDETERMINATE = "INDETERMINATE"


def read_borel_pair(beta_type: OneType, gamma_type: OneType) -> BorelReading:
    """p_k when beta is infinitesimal and gamma unbounded in the same coset; (b, c) when both are in M"""
    if (isinstance(beta_type, Infinitesimal) and beta_type.a.is_zero()
            and isinstance(gamma_type, Unbounded) and beta_type.k == gamma_type.k):
        return BorelTypeJ(beta_type.k)
    if isinstance(beta_type, Realized) and isinstance(gamma_type, Realized):
        return beta_type.a, gamma_type.a
    raise ClassificationError(
        f"Borel part is neither p_k nor standard: beta {beta_type.kind}, gamma {gamma_type.kind}")


@dataclass(frozen=True, eq=False)
class WordClassification:
    """Decomposed entries of a realized word with their types"""

    z: Z4
    q: OneType
    b_part: BorelReading
    entries: Decomposition
    levels_used: Tuple[int, ...]

    @property
    def is_standard_b(self) -> bool:
        return not isinstance(self.b_part, BorelTypeJ)

    def to_normal_form(self) -> SL2TypeNF:
        if self.is_standard_b:
            raise ClassificationError("the Borel part is standard, not an element of the minimal ideal")
        try:
            return SL2TypeNF(self.z, self.q, self.b_part)
        except PreconditionError as e:
            raise ClassificationError(str(e))

    def describe(self) -> str:
        from interpreter.printer import format_type
        if self.is_standard_b:
            b_text = "(" + ", ".join(str(e) for e in self.b_part) + ")"
        else:
            b_text = f"pj[k={int(self.b_part)}]"
        return f"z={self.z.name.lower()}, q={format_type(self.q)}, b={b_text}"


@dataclass
class CheckResult:
    verdict: Verdict
    expected: str
    observed: str
    word: str
    levels_used: Tuple[int, ...] = ()
    subcomputation: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


class RealizationOracle:
    """Realizes product words left to right with fresh dominating levels"""

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.logger = logging.getLogger(__name__)

    def allocator(self, reserved_levels: int = 0) -> LevelAllocator:
        """Fresh allocation context; the first `reserved_levels` levels are skipped"""
        allocator = LevelAllocator.from_config(self.config)
        allocator.reserve(reserved_levels)
        return allocator

    def _factor_matrix(self, factor, allocator: LevelAllocator, swap_borel: bool = False) -> Matrix2:
        if isinstance(factor, MFactor):
            return factor.matrix
        if isinstance(factor, HFactor):
            return Matrix2.lower_unipotent(heir_realize(factor.q, allocator))
        if isinstance(factor, BFactor):
            if factor.j is not None:
                k = factor.j.label
                beta_type, gamma_type = Infinitesimal(self._zero(), k), Unbounded(k)
            else:
                beta_type, gamma_type = factor.pair
            if swap_borel:
                gamma = heir_realize(gamma_type, allocator)
                beta = heir_realize(beta_type, allocator)
            else:
                beta = heir_realize(beta_type, allocator)
                gamma = heir_realize(gamma_type, allocator)
            return Matrix2.borel(beta, gamma)
        if isinstance(factor, ZFactor):
            return factor.z.matrix(LaurentSeries.one(transcendentals=self.config.transcendentals,
                                                     horizon=self.config.horizon))
        raise PreconditionError(f"unknown word factor {factor!r}")

    def realize_word(self, word: ProductWord, allocator: Optional[LevelAllocator] = None,
                     swap_borel: bool = False) -> Matrix2:
        """Exact product of the factor realizations

        Borel factors realize beta below gamma; swap_borel allocates gamma first.
        """
        allocator = allocator or self.allocator()
        product = Matrix2.identity(transcendentals=self.config.transcendentals,
                                   horizon=self.config.horizon)
        for factor in word.factors:
            product = product * self._factor_matrix(factor, allocator, swap_borel)
        self.logger.debug(f"realized {word.describe()} on levels {allocator.used_levels}")
        return product

    def _zero(self) -> LaurentSeries:
        return LaurentSeries.zero(transcendentals=self.config.transcendentals,
                                  horizon=self.config.horizon)

    def _lift(self, x) -> HahnElement:
        return as_hahn(x, self.config.levels)

    def classify_word(self, word: ProductWord, reserved_levels: int = 0,
                      swap_borel: bool = False) -> WordClassification:
        allocator = self.allocator(reserved_levels)
        g = self.realize_word(word, allocator, swap_borel)
        g = Matrix2(*(self._lift(e) for e in g.entries))
        parts = decompose(g, self.config.precision)
        q = classify(self._lift(parts.alpha))
        b_part = read_borel_pair(classify(self._lift(parts.beta)), classify(self._lift(parts.gamma)))
        levels = tuple(level for level in allocator.used_levels if level > reserved_levels)
        return WordClassification(parts.z, q, b_part, parts, levels)

    def check_rule(self, expected, word: ProductWord, reserved_levels: int = 0) -> CheckResult:
        """Compare a symbolic result (normal form, p_k, or unipotent 1-type) with the oracle"""
        from interpreter.printer import format_result
        expected_text = format_result(expected)
        try:
            observed = self.classify_word(word, reserved_levels)
            if isinstance(expected, SL2TypeNF):
                actual = observed.to_normal_form()
            elif isinstance(expected, BorelTypeJ):
                actual = observed.b_part
            else:
                actual = observed.q
            verdict = Verdict.PASS if actual == expected else Verdict.FAIL
            result = CheckResult(verdict, expected_text, format_result(actual), word.describe(),
                                 observed.levels_used)
        except PrecisionHorizonError as e:
            self.logger.warning(f"INDETERMINATE in {e.subcomputation}: {word.describe()}")
            return CheckResult(Verdict.INDETERMINATE, expected_text, "", word.describe(),
                               subcomputation=e.subcomputation)
        except ClassificationError as e:
            return CheckResult(Verdict.FAIL, expected_text, f"unclassifiable: {e}", word.describe())
        if not result.passed:
            self.logger.warning(f"oracle disagreement: expected {expected_text}, "
                                f"observed {result.observed} for {result.word}")
        return result

    def check_heir_order(self, word: ProductWord) -> CheckResult:
        """Classify the word with both heir orders of every Borel pair; PASS when the readings agree"""
        try:
            default = self.classify_word(word)
            swapped = self.classify_word(word, swap_borel=True)
        except PrecisionHorizonError as e:
            return CheckResult(Verdict.INDETERMINATE, "", "", word.describe(),
                               subcomputation=e.subcomputation)
        except ClassificationError as e:
            return CheckResult(Verdict.FAIL, "", f"unclassifiable: {e}", word.describe())
        same = default.z is swapped.z and default.q == swapped.q and default.b_part == swapped.b_part
        if not same:
            self.logger.warning(f"heir order changes {word.describe()}: "
                                f"{default.describe()} vs {swapped.describe()}")
        return CheckResult(Verdict.PASS if same else Verdict.FAIL, default.describe(),
                           swapped.describe(), word.describe(), swapped.levels_used)
