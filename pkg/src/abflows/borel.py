"""
Borel Minimal Ideal
Types p_k in the minimal ideal of the Borel flow, realized by a pair
(beta, gamma): beta infinitesimal, gamma unbounded on a higher level, both of
coset label k. The ideal is a group under *, isomorphic to the label group.
"""

from dataclasses import dataclass
from typing import Optional

from errors import DomainError
from series.laurent import LaurentSeries
from sl2flow.matrices import Matrix2
from valfield.predicates import CosetLabel, coset_label


@dataclass(frozen=True, order=True)
class BorelTypeJ:
    """p_k, identified by its coset label"""

    label: CosetLabel
    kind = "pj"

    def __post_init__(self):
        if not isinstance(self.label, CosetLabel):
            object.__setattr__(self, "label", CosetLabel(int(self.label)))

    def __int__(self) -> int:
        return int(self.label)


def j_identity() -> BorelTypeJ:
    """p_0"""
    return BorelTypeJ(CosetLabel(0))


def j_product(x: BorelTypeJ, y: BorelTypeJ) -> BorelTypeJ:
    return BorelTypeJ(x.label + y.label)


def j_inverse(x: BorelTypeJ) -> BorelTypeJ:
    return BorelTypeJ(-x.label)


def j_action(b: LaurentSeries, c: LaurentSeries, x: BorelTypeJ) -> BorelTypeJ:
    """(b c; 0 b^-1) * p_k = p_(k + label(b)); c does not move the label"""
    if b.is_zero():
        raise DomainError("Borel translation with b = 0")
    return BorelTypeJ(x.label + coset_label(b))


def coset_product(a: CosetLabel, b: CosetLabel) -> CosetLabel:
    """Multiplication in B(M)/B(M)^0 on labels"""
    return a + b


def pi_iso(x: BorelTypeJ, transcendentals: Optional[int] = None,
           horizon: Optional[int] = None) -> Matrix2:
    """Diagonal coset representative diag(t^k, t^-k)"""
    return Matrix2.diagonal(LaurentSeries.t_power(int(x.label), transcendentals=transcendentals,
                                                  horizon=horizon))
