"""
Seeded samplers for verification suites
All randomness flows through an explicit random.Random.
"""

import random
from typing import List, Optional

from config.engine import EngineConfig
from onetypes.types import Infinitesimal, OneType, Realized, Residual, Unbounded
from series.coefficient import Coefficient
from series.laurent import LaurentSeries


def _context(config: EngineConfig) -> dict:
    return {"transcendentals": config.transcendentals, "horizon": config.horizon}


def random_coefficient(rng: random.Random) -> Coefficient:
    re = rng.randint(-3, 3) or 1
    im = rng.choice((0, 0, 0, rng.randint(-2, 2)))
    return Coefficient.gaussian(re, im)


def random_polynomial(rng: random.Random, config: EngineConfig, low: int = -2, high: int = 3,
                      terms: int = 3) -> LaurentSeries:
    """Nonzero Laurent polynomial with exponents in [low, high]"""
    exponents = rng.sample(range(low, high + 1), min(terms, high - low + 1))
    return LaurentSeries.from_terms({e: random_coefficient(rng) for e in exponents},
                                    **_context(config))


def random_unit(rng: random.Random, config: EngineConfig, terms: int = 2) -> LaurentSeries:
    """1 + t * (polynomial): an element of 1 + m"""
    tail = LaurentSeries.from_terms({e: random_coefficient(rng) for e in
                                     rng.sample(range(1, 5), terms)}, **_context(config))
    return LaurentSeries.one(**_context(config)) + tail


def random_rational(rng: random.Random, config: EngineConfig) -> LaurentSeries:
    """A non-polynomial exact series p/q"""
    num = random_polynomial(rng, config, 0, 2)
    den = random_unit(rng, config, 1)
    return num / den


def sample_one_types(rng: random.Random, config: EngineConfig, count: int,
                     bound: Optional[int] = None) -> List[OneType]:
    """Types of every kind with labels within bound, the configured coset bound by default"""
    bound = config.coset_bound if bound is None else bound
    samples: List[OneType] = []
    for index in range(count):
        kind = index % 4
        k = rng.randint(-bound, bound)
        if kind == 0:
            samples.append(Realized(random_polynomial(rng, config)))
        elif kind == 1:
            base = random_polynomial(rng, config) if rng.random() < 0.5 else \
                LaurentSeries.zero(**_context(config))
            samples.append(Infinitesimal(base, k))
        elif kind == 2:
            samples.append(Unbounded(k))
        else:
            n = rng.randint(1, 4)
            base = random_polynomial(rng, config, -2, n - 1, 2) if rng.random() < 0.7 else \
                LaurentSeries.zero(**_context(config))
            samples.append(Residual(base, n, 1))
    return samples


def label_pairs(rng: random.Random, bound: int, count: int):
    return [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(count)]
