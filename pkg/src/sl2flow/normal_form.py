"""
SL2 Type Normal Forms
A type z * h * t with z in Z/4Z, h realizing a 1-type q in the unipotent
entry and t realizing p_j as an heir.
"""

from dataclasses import dataclass

from abflows.borel import BorelTypeJ
from errors import PreconditionError
from onetypes.types import Infinitesimal, OneType, Unbounded
from sl2flow.matrices import Z4


@dataclass(frozen=True)
class SL2TypeNF:
    z: Z4
    q: OneType
    j: BorelTypeJ

    def __post_init__(self):
        if not isinstance(self.q, (Unbounded, Infinitesimal)):
            raise PreconditionError(
                f"normal forms carry an unbounded or infinitesimal unipotent type, got {self.q.kind}")
        if not isinstance(self.j, BorelTypeJ):
            object.__setattr__(self, "j", BorelTypeJ(self.j))

    @property
    def m(self) -> int:
        return int(self.q.k)

    @property
    def j_label(self) -> int:
        return int(self.j.label)

    def is_v_shape(self) -> bool:
        return self.z is Z4.IDENTITY and (
            isinstance(self.q, Unbounded) or not self.q.a.is_zero())

    def __str__(self) -> str:
        from interpreter.printer import format_normal_form
        return format_normal_form(self)


def idempotent() -> SL2TypeNF:
    """p_(inf,C0) * p_0"""
    return SL2TypeNF(Z4.IDENTITY, Unbounded(0), BorelTypeJ(0))


def in_v(nf: SL2TypeNF) -> bool:
    """Membership in V with the derived parametrization m = -2j"""
    return nf.is_v_shape() and nf.m == -2 * nf.j_label


def in_v_as_stated(nf: SL2TypeNF) -> bool:
    """Membership in V with the parametrization m = 2j of the orbit statement"""
    return nf.is_v_shape() and nf.m == 2 * nf.j_label
