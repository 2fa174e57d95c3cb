"""
Additive Flow
The unbounded types p_(inf,C) are one-point minimal subflows of (K, +):
q * p_(inf,C) = p_(inf,C) for every q, since the heir of p dominates any
realization of q.
"""

from errors import PreconditionError
from series.laurent import LaurentSeries
from onetypes.types import OneType, Unbounded


def _require_unbounded(p: OneType) -> Unbounded:
    if not isinstance(p, Unbounded):
        raise PreconditionError(f"additive flow products need an unbounded right factor, got {p.kind}")
    return p


def ga_product(q: OneType, p: OneType) -> OneType:
    return _require_unbounded(p)


def stab_add_contains(a: LaurentSeries, p: OneType) -> bool:
    """Every translation fixes an unbounded type"""
    _require_unbounded(p)
    return True
