"""
Product Words
Ordered products of M-matrices, unipotent factors, Borel factors and
quarter turns. Each nonstandard factor is realized as an heir, on levels
strictly above every factor to its left.
"""

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from abflows.borel import BorelTypeJ
from errors import PreconditionError
from onetypes.types import OneType, Unbounded, is_one_type
from sl2flow.matrices import Matrix2, Z4


@dataclass(frozen=True, eq=False)
class MFactor:
    """A matrix over M"""

    matrix: Matrix2

    def describe(self) -> str:
        return f"M[{self.matrix}]"


@dataclass(frozen=True)
class HFactor:
    """(1 0; alpha 1) with alpha realizing q"""

    q: OneType

    def describe(self) -> str:
        from interpreter.printer import format_type
        return f"H[{format_type(self.q)}]"


@dataclass(frozen=True)
class BFactor:
    """(beta gamma; 0 beta^-1) realizing p_k, or a pair of 1-types for (beta, gamma)"""

    j: Optional[BorelTypeJ] = None
    pair: Optional[Tuple[OneType, OneType]] = None

    def __post_init__(self):
        if (self.j is None) == (self.pair is None):
            raise PreconditionError("a Borel factor needs exactly one of a label or a pair")
        if self.j is not None and not isinstance(self.j, BorelTypeJ):
            object.__setattr__(self, "j", BorelTypeJ(self.j))
        if self.pair is not None and not all(is_one_type(p) for p in self.pair):
            raise PreconditionError("a Borel pair must consist of two 1-types")

    def describe(self) -> str:
        if self.j is not None:
            return f"B[pj[k={int(self.j)}]]"
        from interpreter.printer import format_type
        return f"B[{format_type(self.pair[0])}, {format_type(self.pair[1])}]"


@dataclass(frozen=True)
class ZFactor:
    z: Z4

    def describe(self) -> str:
        return f"Z[{self.z.name.lower()}]"


Factor = Union[MFactor, HFactor, BFactor, ZFactor]


@dataclass(frozen=True, eq=False)
class ProductWord:
    factors: Tuple[Factor, ...]

    @classmethod
    def of(cls, *factors: Factor) -> "ProductWord":
        return cls(tuple(factors))

    def __add__(self, other: "ProductWord") -> "ProductWord":
        return ProductWord(self.factors + other.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def describe(self) -> str:
        return " * ".join(f.describe() for f in self.factors) or "[]"


def idempotent_word() -> ProductWord:
    """p_(inf,C0) * p_0"""
    return ProductWord.of(HFactor(Unbounded(0)), BFactor(j=BorelTypeJ(0)))
