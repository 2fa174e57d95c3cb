"""
Polynomials over M
One-variable polynomials with LaurentSeries coefficients, evaluated at
Laurent series or realization-field elements.
"""

from dataclasses import dataclass
from math import comb
from typing import List, Sequence, Tuple, Union

from errors import PreconditionError
from hahn.element import HahnElement, embed
from series.coefficient import Coefficient
from series.laurent import LaurentSeries


@dataclass(frozen=True)
class MPolynomial:
    """sum coefficients[i] * X^i"""

    coefficients: Tuple[LaurentSeries, ...]

    @classmethod
    def of(cls, coefficients: Sequence[Union[LaurentSeries, int]], **kwargs) -> "MPolynomial":
        converted = [c if isinstance(c, LaurentSeries) else LaurentSeries.constant(c, **kwargs)
                     for c in coefficients]
        while converted and converted[-1].is_zero():
            converted.pop()
        return cls(tuple(converted))

    @classmethod
    def variable(cls, **kwargs) -> "MPolynomial":
        return cls.of([0, 1], **kwargs)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return self.degree <= 0

    def evaluate(self, x: Union[LaurentSeries, HahnElement]):
        """Horner evaluation; coefficients embed when x is a realization-field element"""
        if self.is_zero():
            raise PreconditionError("evaluating the zero polynomial")
        lift = (lambda c: embed(c, levels=x.levels, horizon=x.horizon)) \
            if isinstance(x, HahnElement) else (lambda c: c)
        acc = lift(self.coefficients[-1])
        for c in reversed(self.coefficients[:-1]):
            acc = acc * x + lift(c)
        return acc

    def derivative(self) -> "MPolynomial":
        return MPolynomial.of([c * i for i, c in enumerate(self.coefficients)][1:])

    def taylor_shift(self, b: LaurentSeries) -> "MPolynomial":
        """g with g(X) = f(b + X)"""
        shifted: List[LaurentSeries] = []
        for i in range(len(self.coefficients)):
            acc = LaurentSeries.zero(transcendentals=b.transcendentals, horizon=b.horizon)
            for j in range(i, len(self.coefficients)):
                acc = acc + self.coefficients[j] * comb(j, i) * b ** (j - i)
            shifted.append(acc)
        return MPolynomial.of(shifted)

    def residue_coefficients(self) -> List[Coefficient]:
        """Coefficients reduced to the residue field"""
        return [c.residue() for c in self.coefficients]

    def __str__(self) -> str:
        from interpreter.printer import format_polynomial
        return format_polynomial(self)


def evaluate_residue(coefficients: Sequence[Coefficient], a0: Coefficient) -> Coefficient:
    acc = Coefficient(0)
    for c in reversed(coefficients):
        acc = acc * a0 + c
    return acc


def residue_derivative(coefficients: Sequence[Coefficient]) -> List[Coefficient]:
    return [c * i for i, c in enumerate(coefficients)][1:]
