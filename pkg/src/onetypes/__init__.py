# Complete 1-Types Module
from onetypes.types import Infinitesimal, OneType, Realized, Residual, Unbounded, coset_of
from onetypes.allocation import LevelAllocator
from onetypes.realization import heir_realize, realize
from onetypes.classifier import classify
from onetypes.decision import decide_pn_of_polynomial, decide_valuation_of_polynomial
