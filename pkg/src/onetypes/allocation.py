"""
Level Allocation
Single-owner allocation context for fresh levels and fresh transcendentals.
A fresh level is always one above every level used so far, so generators
allocated later dominate everything allocated before them.
"""

import logging
from typing import Iterable, Optional

from config.engine import EngineConfig
from errors import LevelExhaustedError
from hahn.element import HahnElement, generator


class LevelAllocator:
    """Hands out levels s_1..s_L and transcendentals tau1..tauM in increasing order"""

    def __init__(self, levels: int, transcendentals: int, horizon: int,
                 used_levels: Iterable[int] = (), used_taus: Iterable[int] = ()):
        self.logger = logging.getLogger(__name__)
        self.levels = levels
        self.transcendentals = transcendentals
        self.horizon = horizon
        self._used_levels = set(used_levels)
        self._used_taus = set(used_taus)

    @classmethod
    def from_config(cls, config: Optional[EngineConfig] = None) -> "LevelAllocator":
        config = config or EngineConfig()
        return cls(config.levels, config.transcendentals, config.horizon)

    @property
    def used_levels(self):
        return tuple(sorted(self._used_levels))

    @property
    def used_taus(self):
        return tuple(sorted(self._used_taus))

    def context(self) -> dict:
        return {"levels": self.levels, "transcendentals": self.transcendentals,
                "horizon": self.horizon}

    def fresh_level(self) -> int:
        level = max(self._used_levels, default=0) + 1
        if level > self.levels:
            raise LevelExhaustedError(
                f"no fresh level above {level - 1} with L={self.levels}; increase --levels")
        self._used_levels.add(level)
        self.logger.debug(f"allocated level s_{level}")
        return level

    def fresh_tau(self) -> int:
        index = max(self._used_taus, default=0) + 1
        if index > self.transcendentals:
            raise LevelExhaustedError(
                f"no fresh transcendental with M={self.transcendentals}")
        self._used_taus.add(index)
        return index

    def claim_tau(self, index: int) -> int:
        """Use tau_index itself if it is still free, otherwise a fresh one"""
        if index in self._used_taus or index > self.transcendentals:
            return self.fresh_tau()
        self._used_taus.add(index)
        return index

    def reserve(self, count: int) -> None:
        """Mark levels 1..count as used"""
        self._used_levels.update(range(1, count + 1))

    def observe(self, element: HahnElement) -> None:
        """Mark the levels of an existing element as used"""
        self._used_levels.update(element.used_levels())

    def generator(self, level: int, sign: int = 1) -> HahnElement:
        return generator(level, sign, **self.context())

    def fork(self) -> "LevelAllocator":
        return LevelAllocator(self.levels, self.transcendentals, self.horizon,
                              self._used_levels, self._used_taus)

    def __repr__(self) -> str:
        return (f"LevelAllocator(L={self.levels}, used_levels={self.used_levels}, "
                f"used_taus={self.used_taus})")
