"""
Ellis Group of the SL2 Flow
The minimal ideal through p_(inf,C0) * p_0 carries the Ellis group
{p_(inf,C0) * p_j}, isomorphic to B(M)/B(M)^0: products and reductions
only move the Borel label.
"""

import logging
from typing import Optional, Tuple

from abflows.borel import BorelTypeJ
from config.engine import EngineConfig
from errors import ClassificationError, PreconditionError
from onetypes.types import (
    Infinitesimal,
    OneType,
    Realized,
    Residual,
    Unbounded,
    concentrates_on_zero,
)
from oracle.verifier import RealizationOracle
from oracle.words import BFactor, HFactor, MFactor, ProductWord, idempotent_word
from series.laurent import LaurentSeries
from sl2flow.matrices import Matrix2, Z4
from valfield.predicates import CosetLabel

logger = logging.getLogger(__name__)

# SL2(C((t)))^00 = SL2(C((t))): the connected component adds no further quotient
G00_IS_WHOLE_GROUP = True


def ellis_word(q: OneType, j: BorelTypeJ) -> ProductWord:
    """p_(inf,C0) * p_0 * (q * p_j)"""
    return idempotent_word() + ProductWord.of(HFactor(q), BFactor(j=j))


def ellis_reduce(q: OneType, j: BorelTypeJ, config: Optional[EngineConfig] = None) -> BorelTypeJ:
    """j' with p_(inf,C0) * p_0 * (q * p_j) = p_(inf,C0) * p_j', read off the oracle"""
    if concentrates_on_zero(q):
        raise PreconditionError("ellis_reduce needs q not concentrating on 0")
    j = j if isinstance(j, BorelTypeJ) else BorelTypeJ(j)
    reading = RealizationOracle(config).classify_word(ellis_word(q, j))
    if reading.is_standard_b:
        raise ClassificationError("Ellis reduction produced a standard Borel part")
    return reading.b_part


def reduction_shift(q: OneType) -> int:
    """Label moved by q in an Ellis reduction"""
    if isinstance(q, Unbounded):
        return int(q.k)
    if isinstance(q, Realized):
        if q.a.is_zero():
            raise PreconditionError("q concentrates on 0")
        return q.a.valuation()
    if isinstance(q, Infinitesimal):
        return 0 if q.a.is_zero() else q.a.valuation()
    if isinstance(q, Residual):
        return q.n if q.a.is_zero() else q.a.valuation()
    raise PreconditionError(f"not a 1-type: {q!r}")


def ellis_reduce_rule(q: OneType, j: BorelTypeJ) -> BorelTypeJ:
    j = j if isinstance(j, BorelTypeJ) else BorelTypeJ(j)
    return BorelTypeJ(j.label + reduction_shift(q))


def ellis_preimage(j: int) -> Tuple[OneType, BorelTypeJ]:
    """An r = q * p_i in V with ellis_reduce(q, i) = j"""
    return Unbounded(2 * j), BorelTypeJ(-j)


def ellis_product(i: BorelTypeJ, j: BorelTypeJ) -> BorelTypeJ:
    """(p_(inf,C0) * p_i) * (p_(inf,C0) * p_j) = p_(inf,C0) * p_(i+j)"""
    i = i if isinstance(i, BorelTypeJ) else BorelTypeJ(i)
    j = j if isinstance(j, BorelTypeJ) else BorelTypeJ(j)
    return BorelTypeJ(i.label + j.label)


def ellis_product_word(i: BorelTypeJ, j: BorelTypeJ) -> ProductWord:
    return ProductWord.of(HFactor(Unbounded(0)), BFactor(j=i), HFactor(Unbounded(0)), BFactor(j=j))


def amenability_witness(i: int, **context) -> Tuple[Matrix2, CosetLabel]:
    """g = diag(t, t^-1) moves the x11 coset of p_(inf,C0) * p_i from i to i + 1"""
    return Matrix2.diagonal(LaurentSeries.t_power(1, **context)), CosetLabel(int(i) + 1)


def amenability_word(i: int, **context) -> ProductWord:
    g, _ = amenability_witness(i, **context)
    return ProductWord.of(MFactor(g), HFactor(Unbounded(0)), BFactor(j=BorelTypeJ(i)))


def idempotent_check(config: Optional[EngineConfig] = None, trivial_borel: bool = False) -> bool:
    """(p_(inf,C0) * p_0) * (p_(inf,C0) * p_0) classifies back to the idempotent"""
    config = config or EngineConfig()
    if trivial_borel:
        identity = Matrix2.identity(transcendentals=config.transcendentals, horizon=config.horizon)
        half = ProductWord.of(HFactor(Unbounded(0)), MFactor(identity))
    else:
        half = idempotent_word()
    reading = RealizationOracle(config).classify_word(half + half)
    if reading.z is not Z4.IDENTITY or reading.q != Unbounded(0):
        return False
    if trivial_borel:
        beta, gamma = reading.b_part if reading.is_standard_b else (None, None)
        return beta is not None and beta == 1 and gamma.is_zero()
    logger.debug(f"idempotent check: {reading.describe()}")
    return reading.b_part == BorelTypeJ(0)
