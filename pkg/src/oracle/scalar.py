"""
Scalar and Borel-Pair Oracle
One-dimensional products q * p for the additive and multiplicative flows,
and products of Borel pairs (b, c) * (beta, gamma) = (b beta, b gamma + c beta^-1),
each realized with heirs and read back by classification.
"""

import logging
from typing import Optional, Tuple

from abflows.borel import BorelTypeJ
from config.engine import EngineConfig
from errors import PreconditionError
from hahn.element import HahnElement, embed
from onetypes.allocation import LevelAllocator
from onetypes.classifier import classify
from onetypes.realization import heir_realize
from onetypes.types import Infinitesimal, OneType, Unbounded
from oracle.verifier import BorelReading, read_borel_pair
from series.laurent import LaurentSeries

FLOWS = ("add", "mul")


class ScalarOracle:
    """Heir products of 1-types and of Borel pairs"""

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.logger = logging.getLogger(__name__)

    def _allocator(self) -> LevelAllocator:
        return LevelAllocator.from_config(self.config)

    def _embed(self, a: LaurentSeries) -> HahnElement:
        return embed(a, levels=self.config.levels, horizon=self.config.horizon)

    def product(self, q: OneType, p: OneType, flow: str = "add") -> OneType:
        """tp(a op b) with a realizing q and b realizing the heir of p"""
        if flow not in FLOWS:
            raise PreconditionError(f"unknown flow '{flow}', expected one of {FLOWS}")
        allocator = self._allocator()
        a = heir_realize(q, allocator)
        b = heir_realize(p, allocator)
        result = classify(a + b if flow == "add" else a * b)
        self.logger.debug(f"scalar {flow} product on levels {allocator.used_levels}")
        return result

    def translate(self, a: LaurentSeries, p: OneType, flow: str = "add") -> OneType:
        """tp(a op x) for x realizing p"""
        x = heir_realize(p, self._allocator())
        return classify(self._embed(a) + x if flow == "add" else self._embed(a) * x)

    def _pair(self, x: BorelTypeJ, allocator: LevelAllocator) -> Tuple[HahnElement, HahnElement]:
        zero = LaurentSeries.zero(transcendentals=self.config.transcendentals,
                                  horizon=self.config.horizon)
        beta = heir_realize(Infinitesimal(zero, x.label), allocator)
        gamma = heir_realize(Unbounded(x.label), allocator)
        return beta, gamma

    @staticmethod
    def _read(beta: HahnElement, gamma: HahnElement) -> BorelReading:
        return read_borel_pair(classify(beta), classify(gamma))

    def borel_product(self, x: BorelTypeJ, y: BorelTypeJ) -> BorelReading:
        """p_x * p_y on the realized pairs"""
        allocator = self._allocator()
        b, c = self._pair(x, allocator)
        beta, gamma = self._pair(y, allocator)
        return self._read(b * beta, b * gamma + c * beta.inverse())

    def borel_translate(self, b: LaurentSeries, c: LaurentSeries, x: BorelTypeJ) -> BorelReading:
        """(b c; 0 b^-1) * p_x"""
        if b.is_zero():
            raise PreconditionError("Borel translation with b = 0")
        beta, gamma = self._pair(x, self._allocator())
        b, c = self._embed(b), self._embed(c)
        return self._read(b * beta, b * gamma + c * beta.inverse())

    def p0_conventions_agree(self) -> bool:
        """(beta, gamma) and (beta, gamma * beta) realize the same p_0"""
        beta, gamma = self._pair(BorelTypeJ(0), self._allocator())
        return self._read(beta, gamma) == self._read(beta, gamma * beta)
