"""
Complete 1-Types over M
The four kinds of the classification: realized points, infinitesimal
neighbourhoods of a point, unbounded types in a coset, and residual types
with a transcendental residue.
"""

from dataclasses import dataclass
from typing import ClassVar, Union

from errors import PreconditionError
from series.laurent import LaurentSeries
from valfield.predicates import CosetLabel


def _label(value) -> CosetLabel:
    return value if isinstance(value, CosetLabel) else CosetLabel(int(value))


@dataclass(frozen=True)
class Realized:
    """x = a"""

    a: LaurentSeries
    kind: ClassVar[str] = "real"


@dataclass(frozen=True)
class Infinitesimal:
    """v(x - a) above Z, with x - a in coset k"""

    a: LaurentSeries
    k: CosetLabel
    kind: ClassVar[str] = "pzero"

    def __post_init__(self):
        object.__setattr__(self, "k", _label(self.k))


@dataclass(frozen=True)
class Unbounded:
    """v(x) below Z, with x in coset k"""

    k: CosetLabel
    kind: ClassVar[str] = "pinf"

    def __post_init__(self):
        object.__setattr__(self, "k", _label(self.k))


@dataclass(frozen=True)
class Residual:
    """v(x - a) = n with a transcendental residue; a is a Laurent polynomial of degree < n"""

    a: LaurentSeries
    n: int
    tau_index: int = 1
    kind: ClassVar[str] = "res"

    def __post_init__(self):
        if not self.a.is_polynomial():
            raise PreconditionError("residual base point must be a Laurent polynomial")
        if self.a.tau_support:
            raise PreconditionError("residual base point must be free of transcendentals")
        if any(k >= self.n for k in self.a.polynomial_terms()):
            raise PreconditionError(f"residual base point must have degree below {self.n}")
        if self.tau_index < 1:
            raise PreconditionError("transcendental indices start at 1")


OneType = Union[Realized, Infinitesimal, Unbounded, Residual]

ONE_TYPE_CLASSES = (Realized, Infinitesimal, Unbounded, Residual)


def is_one_type(value) -> bool:
    return isinstance(value, ONE_TYPE_CLASSES)


def concentrates_on_zero(p: OneType) -> bool:
    return isinstance(p, Realized) and p.a.is_zero()


def coset_of(p: OneType) -> CosetLabel:
    """Coset label of the canonical realization of p"""
    if isinstance(p, Realized):
        if p.a.is_zero():
            raise PreconditionError("the type of 0 has no coset")
        return CosetLabel(p.a.valuation())
    if isinstance(p, Infinitesimal):
        return p.k if p.a.is_zero() else CosetLabel(p.a.valuation())
    if isinstance(p, Unbounded):
        return p.k
    if isinstance(p, Residual):
        return CosetLabel(p.n) if p.a.is_zero() else CosetLabel(p.a.valuation())
    raise PreconditionError(f"not a 1-type: {p!r}")


def describe(p) -> str:
    from interpreter.printer import format_type
    return format_type(p)
