"""
Canonical and Heir Realizations
Witnesses in the realization field for each kind of 1-type.
"""

import logging
from typing import Iterable, Optional

from errors import PreconditionError
from hahn.element import HahnElement, embed
from onetypes.allocation import LevelAllocator
from onetypes.types import Infinitesimal, OneType, Realized, Residual, Unbounded
from series.coefficient import Coefficient

logger = logging.getLogger(__name__)


def _t_power(k: int, allocator: LevelAllocator) -> HahnElement:
    return HahnElement.monomial(1, (0,) * allocator.levels + (k,), **allocator.context())


def _residual_term(tau_index: int, n: int, allocator: LevelAllocator) -> HahnElement:
    tau = Coefficient.tau(tau_index, allocator.transcendentals)
    return HahnElement.monomial(tau, (0,) * allocator.levels + (n,), **allocator.context())


def _realize(p: OneType, allocator: LevelAllocator, tau_index: int) -> HahnElement:
    if isinstance(p, Realized):
        return embed(p.a, levels=allocator.levels, horizon=allocator.horizon)
    if isinstance(p, Infinitesimal):
        level = allocator.fresh_level()
        base = embed(p.a, levels=allocator.levels, horizon=allocator.horizon)
        return base + _t_power(int(p.k), allocator) * allocator.generator(level, 1)
    if isinstance(p, Unbounded):
        level = allocator.fresh_level()
        return _t_power(int(p.k), allocator) * allocator.generator(level, -1)
    if isinstance(p, Residual):
        base = embed(p.a, levels=allocator.levels, horizon=allocator.horizon)
        return base + _residual_term(tau_index, p.n, allocator)
    raise PreconditionError(f"not a 1-type: {p!r}")


def realize(p: OneType, allocator: Optional[LevelAllocator] = None) -> HahnElement:
    """Canonical realization; classify(realize(p)) == p"""
    allocator = allocator or LevelAllocator.from_config()
    tau_index = allocator.claim_tau(p.tau_index) if isinstance(p, Residual) else 0
    x = _realize(p, allocator, tau_index)
    logger.debug(f"realize {p.kind}: {allocator!r}")
    return x


def heir_realize(p: OneType, allocator: LevelAllocator,
                 context: Iterable[HahnElement] = ()) -> HahnElement:
    """Realization on a level strictly above everything in `context` and the allocator"""
    for element in context:
        allocator.observe(element)
    tau_index = allocator.fresh_tau() if isinstance(p, Residual) else 0
    return _realize(p, allocator, tau_index)
