"""
Orbit Actions on the Idempotent
H(M), B(M) and Z/4Z act on p_(inf,C0) * p_0; together they generate the
orbit V' = V u (quarter-turn images), computed here on a label-truncated
fragment.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from abflows.borel import BorelTypeJ
from errors import DomainError, PreconditionError
from onetypes.types import Infinitesimal, Unbounded
from series.laurent import LaurentSeries
from sl2flow.matrices import Z4
from sl2flow.normal_form import SL2TypeNF, idempotent, in_v, in_v_as_stated
from valfield.predicates import coset_label

logger = logging.getLogger(__name__)


def _require_identity_z(nf: SL2TypeNF) -> None:
    if nf.z is not Z4.IDENTITY:
        raise PreconditionError("the action rules apply to normal forms with z = identity")


def h_action(a: LaurentSeries, nf: SL2TypeNF) -> SL2TypeNF:
    """(1 0; a 1) * nf: trivial on unbounded forms, translates infinitesimal base points"""
    _require_identity_z(nf)
    if isinstance(nf.q, Unbounded) or a.is_zero():
        return nf
    return SL2TypeNF(Z4.IDENTITY, Infinitesimal(nf.q.a + a, nf.q.k), nf.j)


def b_action(b: LaurentSeries, c: LaurentSeries, base: Optional[SL2TypeNF] = None) -> SL2TypeNF:
    """(b c; 0 b^-1) * base for a base form with an unbounded unipotent type"""
    base = base or idempotent()
    _require_identity_z(base)
    if not isinstance(base.q, Unbounded):
        raise PreconditionError("b_action needs a base form with an unbounded unipotent type")
    if b.is_zero():
        raise DomainError("Borel translation with b = 0")
    m0, j0 = base.m, base.j_label
    if c.is_zero():
        lb = int(coset_label(b))
        return SL2TypeNF(Z4.IDENTITY, Unbounded(m0 - 2 * lb), BorelTypeJ(j0 + lb))
    lc = int(coset_label(c))
    return SL2TypeNF(Z4.IDENTITY, Infinitesimal((b * c).inverse(), -2 * lc - m0),
                     BorelTypeJ(j0 + lc + m0))


def b_action_solve(target: SL2TypeNF, **context) -> Tuple[LaurentSeries, LaurentSeries]:
    """(b, c) with b_action(b, c) == target, for target in V"""
    if not in_v(target):
        raise PreconditionError("b_action_solve needs a target in V")
    k = target.j_label
    if isinstance(target.q, Unbounded):
        return LaurentSeries.t_power(k, **context), LaurentSeries.zero(**context)
    a = target.q.a
    t_k = LaurentSeries.t_power(k, transcendentals=a.transcendentals, horizon=a.horizon)
    return (a * t_k).inverse(), t_k


def z4_action(z: Z4, nf: SL2TypeNF, **context) -> SL2TypeNF:
    """z * nf; +-identity act trivially, both odd powers act as the quarter turn"""
    _require_identity_z(nf)
    if z.is_central():
        return nf
    q, j = nf.q, nf.j_label
    if isinstance(q, Unbounded):
        return SL2TypeNF(Z4.IDENTITY, Infinitesimal(LaurentSeries.zero(**context), -nf.m),
                         BorelTypeJ(nf.m + j))
    if q.a.is_zero():
        return SL2TypeNF(Z4.IDENTITY, Unbounded(-nf.m), BorelTypeJ(nf.m + j))
    va = q.a.valuation()
    return SL2TypeNF(Z4.IDENTITY, Infinitesimal(-q.a.inverse(), nf.m - 2 * va),
                     BorelTypeJ(j + va))


def z4_solve(target: SL2TypeNF) -> Tuple[Z4, SL2TypeNF]:
    """Quarter turn z and V-form nf with z4_action(z, nf) == target"""
    q = target.q
    if not isinstance(q, Infinitesimal):
        raise PreconditionError("z4_solve needs an infinitesimal target")
    if not q.a.is_zero():
        raise PreconditionError("targets with a nonzero base point lie in V itself")
    m, j = target.m, target.j_label
    return Z4.QUARTER, SL2TypeNF(Z4.IDENTITY, Unbounded(-m), BorelTypeJ(j + m))


@dataclass(frozen=True)
class OrbitElement:
    nf: SL2TypeNF
    provenance: str
    in_v: bool
    in_v_as_stated: bool


def _sort_key(element: OrbitElement):
    nf = element.nf
    base = "" if isinstance(nf.q, Unbounded) else str(nf.q.a)
    return (nf.z.value, nf.q.kind, nf.m, nf.j_label, base)


def orbit(bound: int, **context) -> List[OrbitElement]:
    """Fragment of the orbit of the idempotent with labels in [-2B, 2B]"""
    if bound < 0:
        raise PreconditionError(f"orbit bound must be non-negative, got {bound}")
    limit = 2 * bound
    found: Dict[SL2TypeNF, str] = {}

    def keep(nf: SL2TypeNF, provenance: str) -> None:
        if abs(nf.m) <= limit and abs(nf.j_label) <= limit and nf not in found:
            found[nf] = provenance

    keep(idempotent(), "idempotent")
    keep(h_action(LaurentSeries.t_power(bound, **context), idempotent()), "h_action")
    for kb in range(-bound, bound + 1):
        b = LaurentSeries.t_power(kb, **context)
        keep(b_action(b, LaurentSeries.zero(**context)), f"b_action(t^{kb},0)")
        for kc in range(-bound, bound + 1):
            keep(b_action(b, LaurentSeries.t_power(kc, **context)), f"b_action(t^{kb},t^{kc})")

    for nf, provenance in list(found.items()):
        keep(z4_action(Z4.QUARTER, nf, **context), f"z4_action(quarter)*{provenance}")

    elements = [OrbitElement(nf, provenance, in_v(nf), in_v_as_stated(nf))
                for nf, provenance in found.items()]
    logger.debug(f"orbit: bound={bound}, {len(elements)} elements")
    return sorted(elements, key=_sort_key)
