"""
Polynomial Predicates under a 1-Type
Decides P_n(f(x)) and the value of f(x) for x realizing a 1-type.

Two routes are available. "evaluate" computes f at the canonical
realization. "lemma" never leaves M: it Taylor-shifts f around the base
point and compares the values of the shifted terms symbolically.
"""

import logging
from typing import Optional

from config.engine import EngineConfig
from errors import PreconditionError
from hahn.value import Value
from onetypes.allocation import LevelAllocator
from onetypes.realization import realize
from onetypes.types import Infinitesimal, OneType, Realized, Residual, Unbounded
from valfield.polynomial import MPolynomial

logger = logging.getLogger(__name__)

METHODS = ("evaluate", "lemma")

# level carrying the fresh generator of a canonical realization in a new allocator
_CANONICAL_LEVEL = 1


def decide_valuation_of_polynomial(p: OneType, f: MPolynomial, method: str = "evaluate",
                                   config: Optional[EngineConfig] = None) -> Value:
    """Value of f(x) for x realizing p"""
    config = config or EngineConfig()
    if f.is_zero():
        raise PreconditionError("the zero polynomial has no value")
    if method == "evaluate":
        return _by_evaluation(p, f, config)
    if method == "lemma":
        return _by_taylor_shift(p, f, config.levels)
    raise PreconditionError(f"unknown decision method '{method}', expected one of {METHODS}")


def decide_pn_of_polynomial(p: OneType, f: MPolynomial, n: int, method: str = "evaluate",
                            config: Optional[EngineConfig] = None) -> bool:
    """P_n(f(x)) for x realizing p"""
    if n < 1:
        raise PreconditionError(f"P_n needs a positive n, got {n}")
    value = decide_valuation_of_polynomial(p, f, method, config)
    return value.std % n == 0


def _by_evaluation(p: OneType, f: MPolynomial, config: EngineConfig) -> Value:
    x = realize(p, LevelAllocator.from_config(config))
    y = f.evaluate(x)
    if y.is_zero():
        raise PreconditionError(f"f vanishes on the realized point {p.kind}")
    value = y.hvaluation()
    logger.debug(f"evaluate route: {p.kind} -> {value}")
    return value


def _by_taylor_shift(p: OneType, f: MPolynomial, levels: int) -> Value:
    if isinstance(p, Realized):
        y = f.evaluate(p.a)
        if y.is_zero():
            raise PreconditionError("f vanishes on the realized point")
        return Value.standard(y.valuation(), levels)

    if isinstance(p, Unbounded):
        # the top-degree term dominates: v(a_d) + d * (k - s_f)
        d = f.degree
        std = f.coefficients[d].valuation() + d * int(p.k)
        return Value.at_level(_CANONICAL_LEVEL, -d, levels, std) if d else Value.standard(std, levels)

    g = f.taylor_shift(p.a)
    constant = g.coefficients[0]

    if isinstance(p, Residual):
        candidates = [c.valuation() + i * p.n
                      for i, c in enumerate(g.coefficients) if i and not c.is_zero()]
        if not constant.is_zero():
            candidates.append(constant.valuation())
        return Value.standard(min(candidates), levels)

    if isinstance(p, Infinitesimal):
        if not constant.is_zero():
            return Value.standard(constant.valuation(), levels)
        i0 = next(i for i, c in enumerate(g.coefficients) if i and not c.is_zero())
        std = g.coefficients[i0].valuation() + i0 * int(p.k)
        return Value.at_level(_CANONICAL_LEVEL, i0, levels, std)

    raise PreconditionError(f"not a 1-type: {p!r}")
