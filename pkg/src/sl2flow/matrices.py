"""
SL2 Matrices and the z.h.t Decomposition
Every g in SL2 factors as z * (1 0; alpha 1) * (beta gamma; 0 beta^-1) with z
one of the four explicit matrices generated by the quarter turn.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from errors import DomainError, PrecisionHorizonError, PreconditionError
from hahn.element import HahnElement
from series.laurent import LaurentSeries

logger = logging.getLogger(__name__)

Entry = Union[LaurentSeries, HahnElement]


class Z4(Enum):
    """Powers of the quarter turn w = (0 -1; 1 0)"""

    IDENTITY = 0
    QUARTER = 1
    NEG_IDENTITY = 2
    THREE_QUARTER = 3

    @property
    def entries(self) -> Tuple[int, int, int, int]:
        return {
            Z4.IDENTITY: (1, 0, 0, 1),
            Z4.QUARTER: (0, -1, 1, 0),
            Z4.NEG_IDENTITY: (-1, 0, 0, -1),
            Z4.THREE_QUARTER: (0, 1, -1, 0),
        }[self]

    def __mul__(self, other: "Z4") -> "Z4":
        return Z4((self.value + other.value) % 4)

    def inverse(self) -> "Z4":
        return Z4(-self.value % 4)

    def is_central(self) -> bool:
        """+-identity"""
        return self in (Z4.IDENTITY, Z4.NEG_IDENTITY)

    def act(self, g: "Matrix2") -> "Matrix2":
        """Left multiplication, as row operations"""
        r1, r2 = (g.x1, g.x2), (g.x3, g.x4)
        if self is Z4.IDENTITY:
            rows = (r1, r2)
        elif self is Z4.QUARTER:
            rows = ((-r2[0], -r2[1]), r1)
        elif self is Z4.NEG_IDENTITY:
            rows = ((-r1[0], -r1[1]), (-r2[0], -r2[1]))
        else:
            rows = (r2, (-r1[0], -r1[1]))
        return Matrix2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])

    def matrix(self, like: Entry) -> "Matrix2":
        return Matrix2(*(constant_like(like, e) for e in self.entries))


def constant_like(like: Entry, value) -> Entry:
    """The constant `value` in the field `like` lives in"""
    if isinstance(like, HahnElement):
        return HahnElement.monomial(value, (0,) * (like.levels + 1), levels=like.levels,
                                    transcendentals=like.transcendentals, horizon=like.horizon)
    return LaurentSeries.constant(value, transcendentals=like.transcendentals,
                                  horizon=like.horizon)


@dataclass(frozen=True, eq=False)
class Matrix2:
    """(x1 x2; x3 x4)"""

    x1: Entry
    x2: Entry
    x3: Entry
    x4: Entry

    @classmethod
    def identity(cls, **kwargs) -> "Matrix2":
        return cls.diagonal(LaurentSeries.one(**kwargs))

    @classmethod
    def diagonal(cls, d: Entry) -> "Matrix2":
        """diag(d, d^-1)"""
        zero = constant_like(d, 0)
        return cls(d, zero, zero, d.inverse())

    @classmethod
    def lower_unipotent(cls, alpha: Entry) -> "Matrix2":
        return cls(constant_like(alpha, 1), constant_like(alpha, 0), alpha, constant_like(alpha, 1))

    @classmethod
    def borel(cls, beta: Entry, gamma: Entry) -> "Matrix2":
        """(beta gamma; 0 beta^-1)"""
        if beta.is_zero():
            raise DomainError("Borel factor with beta = 0")
        return cls(beta, gamma, constant_like(beta, 0), beta.inverse())

    @property
    def entries(self) -> Tuple[Entry, Entry, Entry, Entry]:
        return self.x1, self.x2, self.x3, self.x4

    def determinant(self) -> Entry:
        return self.x1 * self.x4 - self.x2 * self.x3

    def is_standard(self) -> bool:
        return all(isinstance(e, LaurentSeries) or e.is_standard_form() for e in self.entries)

    def __mul__(self, other: "Matrix2") -> "Matrix2":
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(
            self.x1 * other.x1 + self.x2 * other.x3,
            self.x1 * other.x2 + self.x2 * other.x4,
            self.x3 * other.x1 + self.x4 * other.x3,
            self.x3 * other.x2 + self.x4 * other.x4,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix2):
            return NotImplemented
        return all(a == b for a, b in zip(self.entries, other.entries))

    __hash__ = None

    def __repr__(self) -> str:
        return f"Matrix2({self})"

    def __str__(self) -> str:
        from interpreter.printer import format_matrix
        return format_matrix(self)


@dataclass(frozen=True, eq=False)
class Decomposition:
    z: Z4
    alpha: Entry
    beta: Entry
    gamma: Entry

    @property
    def factors(self) -> Tuple[Z4, Entry, Entry, Entry]:
        return self.z, self.alpha, self.beta, self.gamma


def certified_zero(x: Entry, subcomputation: str) -> bool:
    """Zero test; lazily generated entries must show a nonzero term within the horizon"""
    if x.is_zero():
        return True
    if x.is_exact:
        return False
    try:
        if isinstance(x, HahnElement):
            x.hvaluation()
        else:
            x.valuation()
    except PrecisionHorizonError:
        raise PrecisionHorizonError(subcomputation)
    return False


def has_unit_determinant(g: Matrix2, precision: int = 32) -> bool:
    det = g.determinant()
    if det.is_exact:
        return det == 1
    # lazily generated entries are compared below t^precision
    series = det if isinstance(det, LaurentSeries) else det.standard_series
    one = LaurentSeries.one(transcendentals=series.transcendentals, horizon=series.horizon)
    return series.agrees_with(one, precision)


def decompose(g: Matrix2, precision: int = 32) -> Decomposition:
    """z, alpha, beta, gamma with g = z * (1 0; alpha 1) * (beta gamma; 0 beta^-1)"""
    if not has_unit_determinant(g, precision):
        raise PreconditionError("decompose needs a matrix of determinant 1")
    if not certified_zero(g.x1, "decompose: zero test of x1"):
        return Decomposition(Z4.IDENTITY, g.x3 / g.x1, g.x1, g.x2)
    logger.debug("decompose: x1 = 0, using the quarter turn")
    return Decomposition(Z4.QUARTER, constant_like(g.x3, 0), g.x3, g.x4)


def compose(z: Z4, alpha: Entry, beta: Entry, gamma: Entry) -> Matrix2:
    """z * (1 0; alpha 1) * (beta gamma; 0 beta^-1)"""
    return z.act(Matrix2.lower_unipotent(alpha) * Matrix2.borel(beta, gamma))
