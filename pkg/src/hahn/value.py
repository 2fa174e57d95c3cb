"""
Value group of the realization field: (Q^L + Z, lex)
Levels are stored most significant first; the standard t-exponent is last.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Sequence, Tuple

from errors import PreconditionError


@total_ordering
@dataclass(frozen=True)
class Value:
    """Element of Q^L + Z ordered lexicographically

    levels[0] is level L, levels[-1] is level 1.
    """

    levels: Tuple[Fraction, ...]
    std: int

    @classmethod
    def standard(cls, std: int, levels: int) -> "Value":
        return cls((Fraction(0),) * levels, std)

    @classmethod
    def from_exponents(cls, exponents: Sequence[int]) -> "Value":
        """Value of a monomial s_L^e_L ... s_1^e_1 t^e_t"""
        return cls(tuple(Fraction(e) for e in exponents[:-1]), int(exponents[-1]))

    @classmethod
    def at_level(cls, level: int, amount, levels: int, std: int = 0) -> "Value":
        if not 1 <= level <= levels:
            raise PreconditionError(f"level {level} outside 1..{levels}")
        comps = [Fraction(0)] * levels
        comps[levels - level] = Fraction(amount)
        return cls(tuple(comps), std)

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, index: int) -> Fraction:
        """Component at level `index` (1-based)"""
        return self.levels[self.depth - index]

    def _key(self):
        return self.levels + (Fraction(self.std),)

    def _check(self, other: "Value"):
        if other.depth != self.depth:
            raise PreconditionError("values from realization fields with different level counts")

    def __lt__(self, other: "Value") -> bool:
        if not isinstance(other, Value):
            return NotImplemented
        self._check(other)
        return self._key() < other._key()

    def __add__(self, other: "Value") -> "Value":
        self._check(other)
        return Value(tuple(a + b for a, b in zip(self.levels, other.levels)), self.std + other.std)

    def __neg__(self) -> "Value":
        return Value(tuple(-a for a in self.levels), -self.std)

    def __sub__(self, other: "Value") -> "Value":
        return self + (-other)

    def scale(self, factor: int) -> "Value":
        return Value(tuple(a * factor for a in self.levels), self.std * factor)

    def is_standard(self) -> bool:
        return not any(self.levels)

    def leading_level(self) -> Optional[Tuple[int, Fraction]]:
        """(level index, component) of the most significant nonzero level"""
        for position, comp in enumerate(self.levels):
            if comp:
                return self.depth - position, comp
        return None

    def is_above_standard(self) -> bool:
        """Greater than every standard value"""
        lead = self.leading_level()
        return lead is not None and lead[1] > 0

    def is_below_standard(self) -> bool:
        """Less than every standard value"""
        lead = self.leading_level()
        return lead is not None and lead[1] < 0

    def describe(self) -> str:
        parts = [f"level{self.depth - i} {_signed(comp)}" for i, comp in enumerate(self.levels) if comp]
        parts.append(f"std {self.std}")
        return "(" + ", ".join(parts) + ")"

    def __str__(self) -> str:
        return self.describe()


def _signed(comp: Fraction) -> str:
    return f"+{comp}" if comp > 0 else str(comp)
