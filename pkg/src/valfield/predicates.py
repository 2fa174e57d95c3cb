"""
Valuation Predicates
P_n, N and divisibility on the realization field, plus coset labels for
K*/K*0. Everything is decided from the value group, never by extracting
coefficient roots: the residue field of the intended model is algebraically
closed, so n-th powers are exactly the elements with n-divisible value.
"""

from dataclasses import dataclass
from typing import Union

from errors import PreconditionError, ValuationOfZeroError
from hahn.element import HahnElement, embed
from hahn.value import Value
from series.laurent import LaurentSeries

FieldElement = Union[HahnElement, LaurentSeries]


@dataclass(frozen=True, order=True)
class CosetLabel:
    """Coset of K*0 indexed by the standard part of the valuation"""

    std: int

    def __add__(self, other: "CosetLabel") -> "CosetLabel":
        return CosetLabel(self.std + _label_int(other))

    __radd__ = __add__

    def __neg__(self) -> "CosetLabel":
        return CosetLabel(-self.std)

    def __sub__(self, other: "CosetLabel") -> "CosetLabel":
        return CosetLabel(self.std - _label_int(other))

    def scale(self, factor: int) -> "CosetLabel":
        return CosetLabel(self.std * factor)

    def __int__(self) -> int:
        return self.std

    def __str__(self) -> str:
        return str(self.std)


def _label_int(value) -> int:
    return value.std if isinstance(value, CosetLabel) else int(value)


def as_hahn(x: FieldElement, levels: int = None) -> HahnElement:
    if isinstance(x, HahnElement):
        return x
    if isinstance(x, LaurentSeries):
        return embed(x, levels=levels)
    raise PreconditionError(f"expected a field element, got {type(x).__name__}")


def nonzero_value(x: FieldElement, levels: int = None) -> Value:
    x = as_hahn(x, levels)
    if x.is_zero():
        raise ValuationOfZeroError("valuation predicate applied to zero")
    return x.hvaluation()


def pn_holds(x: FieldElement, n: int) -> bool:
    """P_n(x): x is an n-th power; true iff n divides the standard part of v(x)"""
    if n < 1:
        raise PreconditionError(f"P_n needs a positive n, got {n}")
    return nonzero_value(x).std % n == 0


def n_pred(x: FieldElement) -> bool:
    """N(x): v(x) = 1"""
    value = nonzero_value(x)
    return value == Value.standard(1, value.depth)


def divides_pred(x: FieldElement, y: FieldElement) -> bool:
    """x | y iff v(x) <= v(y)"""
    levels = next((e.levels for e in (x, y) if isinstance(e, HahnElement)), None)
    return nonzero_value(x, levels) <= nonzero_value(y, levels)


def coset_label(x: FieldElement) -> CosetLabel:
    return CosetLabel(nonzero_value(x).std)
