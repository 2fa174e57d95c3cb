"""
Multiplicative Flow
P_0 = {p_(0,C)} and P_inf = {p_(inf,C)} are minimal subflows of (K*, *).
Multiplying by q moves the coset by the coset of q's realization.
"""

from typing import List

from errors import PreconditionError
from series.laurent import LaurentSeries
from onetypes.types import Infinitesimal, OneType, Realized, Unbounded, concentrates_on_zero, coset_of
from valfield.predicates import coset_label


def _require_flow_point(p: OneType) -> OneType:
    if isinstance(p, Unbounded):
        return p
    if isinstance(p, Infinitesimal) and p.a.is_zero():
        return p
    raise PreconditionError("multiplicative flow products need p in P_0 or P_inf")


def gm_product(q: OneType, p: OneType) -> OneType:
    p = _require_flow_point(p)
    if concentrates_on_zero(q):
        raise PreconditionError("q concentrates on 0")
    label = coset_of(q) + p.k
    return Unbounded(label) if isinstance(p, Unbounded) else Infinitesimal(p.a, label)


def gm_orbit(p: OneType, bound: int) -> List[OneType]:
    """gm_product(t^j, p) for |j| <= bound, ordered by label"""
    p = _require_flow_point(p)
    if bound < 0:
        raise PreconditionError(f"orbit bound must be non-negative, got {bound}")
    context = {"transcendentals": p.a.transcendentals, "horizon": p.a.horizon} \
        if isinstance(p, Infinitesimal) else {}
    orbit = {gm_product(Realized(LaurentSeries.t_power(j, **context)), p)
             for j in range(-bound, bound + 1)}
    return sorted(orbit, key=lambda element: int(element.k))


def stab_mul_contains(a: LaurentSeries, p: OneType) -> bool:
    """a fixes p iff a lies in K*0"""
    _require_flow_point(p)
    if a.is_zero():
        raise PreconditionError("the multiplicative stabilizer test needs a nonzero a")
    return int(coset_label(a)) == 0
