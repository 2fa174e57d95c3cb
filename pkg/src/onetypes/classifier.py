"""
1-Type Classification
Reads a realization-field element back as one of the four kinds.
"""

import logging
from typing import FrozenSet, Optional

from errors import ClassificationError
from hahn.element import HahnElement, standard_prefix
from onetypes.types import Infinitesimal, OneType, Realized, Residual, Unbounded
from valfield.predicates import coset_label

logger = logging.getLogger(__name__)


def classify(x: HahnElement, designated: Optional[FrozenSet[int]] = None) -> OneType:
    """Type of x over M

    designated are the transcendental indices treated as residue-field
    generic points; all of them by default.
    """
    designated = (frozenset(range(1, x.transcendentals + 1)) if designated is None
                  else frozenset(designated))
    base, remainder = standard_prefix(x, designated)
    if remainder.is_zero():
        return Realized(base)

    value, coefficient = remainder.leading_term()
    if value.is_standard():
        taus = coefficient.transcendentals() & designated
        if not taus:
            raise ClassificationError(
                f"standard remainder without a designated transcendental at {value}")
        return Residual(base, value.std, min(taus))

    if x.hvaluation().is_below_standard():
        return Unbounded(coset_label(x))
    if value.is_above_standard():
        return Infinitesimal(base, coset_label(remainder))
    raise ClassificationError(f"remainder below the standard part at {value}")
