"""
Hensel Lifting
Newton iteration in truncated power series: n-th roots of 1-units and lifts
of simple residue roots. Precision doubles each step; the step count is
ceil(log2 N) + 2.
"""

import logging
from math import ceil, log2
from typing import Iterable, List, Union

from sympy import QQ, QQ_I
from sympy.polys.orderings import lex
from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyRing

from errors import NotInValuationRingError, PreconditionError
from hahn.element import HahnElement, embed, standard_part
from hahn.value import Value
from series.coefficient import Coefficient
from series.laurent import LaurentSeries
from series.rings import series_domain
from valfield.polynomial import MPolynomial, evaluate_residue, residue_derivative
from valfield.predicates import as_hahn

logger = logging.getLogger(__name__)


def newton_steps(precision: int) -> int:
    return ceil(log2(max(precision, 1))) + 2


class TruncatedSeries:
    """Power series arithmetic modulo t^precision over an exact domain"""

    def __init__(self, domain, precision: int, transcendentals: int, horizon: int):
        self.domain = domain
        self.precision = precision
        self.transcendentals = transcendentals
        self.horizon = horizon
        self.ring = PolyRing(("t",), domain, lex)
        self.t = self.ring.gens[0]

    def lift(self, series: LaurentSeries, precision: int = None):
        precision = precision or self.precision
        if series.is_zero():
            return self.ring.zero
        if series.offset < 0 and series.valuation() < 0:
            raise NotInValuationRingError("truncated power series needs a non-negative valuation")
        return self.ring.from_dict({(k,): self.element(c) for k, c in series.truncate(precision)})

    def constant(self, c: Coefficient):
        return self.ring.ground_new(self.element(c))

    def element(self, c: Coefficient):
        if self.domain == QQ:
            return c.scalar.x
        if self.domain == QQ_I:
            return c.scalar
        field = self.domain.field
        if c.is_scalar:
            return field.new(field.ring.ground_new(c.scalar))
        return c.fraction

    def coefficient(self, value) -> Coefficient:
        if self.domain == QQ:
            return Coefficient(QQ_I.convert_from(value, QQ))
        return Coefficient(value)

    def to_series(self, poly) -> LaurentSeries:
        return LaurentSeries.from_terms(
            {monom[0]: self.coefficient(c) for monom, c in poly.items()},
            transcendentals=self.transcendentals, horizon=self.horizon)

    def mul(self, a, b, precision: int):
        return rs_mul(a, b, self.t, precision)

    def pow(self, a, n: int, precision: int):
        if n == 0:
            return self.ring.one
        return rs_pow(a, n, self.t, precision)

    def inverse(self, a, precision: int):
        return rs_series_inversion(a, self.t, precision)

    def trunc(self, a, precision: int):
        return rs_trunc(a, self.t, precision)


def _domain_for(coefficients: Iterable[Coefficient]):
    return series_domain(list(coefficients))


def nth_root_unit(x: Union[HahnElement, LaurentSeries], n: int, precision: int) -> HahnElement:
    """y with y^n = x below t^precision and residue(y) = 1, for x in 1 + m"""
    if n < 1:
        raise PreconditionError(f"root order must be positive, got {n}")
    x = as_hahn(x)
    delta = x - 1
    if delta.is_zero():
        return HahnElement.one(levels=x.levels, transcendentals=x.transcendentals,
                               horizon=x.horizon)
    if not delta.hvaluation() > Value.standard(0, x.levels):
        raise PreconditionError("nth_root_unit needs an element of 1 + m")

    # below (0|N) the terms of a 1-unit are exactly its standard terms
    target = standard_part(x)
    terms = target.truncate(precision)
    arith = TruncatedSeries(_domain_for(c for _, c in terms), precision,
                            x.transcendentals, x.horizon)
    a = arith.lift(target)
    y = arith.ring.one
    current = 1
    for _ in range(newton_steps(precision)):
        current = min(2 * current, precision)
        residual = arith.pow(y, n, current) - arith.trunc(a, current)
        slope = arith.mul(arith.pow(y, n - 1, current), arith.ring(n), current)
        y = arith.trunc(y - arith.mul(residual, arith.inverse(slope, current), current), current)
    logger.debug(f"nth_root_unit: n={n}, precision={precision}, domain={arith.domain}")
    return embed(arith.to_series(y), levels=x.levels, horizon=x.horizon)


def hensel_lift_root(f: MPolynomial, a0: Coefficient, precision: int, *,
                     levels: int = None) -> HahnElement:
    """Root r of f with residue a0, correct below t^precision"""
    if f.is_constant():
        raise PreconditionError("Hensel lifting needs a nonconstant polynomial")
    a0 = Coefficient(a0)
    residues = f.residue_coefficients()
    if evaluate_residue(residues, a0):
        raise PreconditionError(f"{a0} is not a root of the residue polynomial")
    if not evaluate_residue(residue_derivative(residues), a0):
        raise PreconditionError(f"{a0} is a multiple root of the residue polynomial")

    template = f.coefficients[0]
    coefficient_terms: List[Coefficient] = [a0]
    for c in f.coefficients:
        coefficient_terms.extend(term for _, term in c.truncate(precision))
    arith = TruncatedSeries(_domain_for(coefficient_terms), precision,
                            template.transcendentals, template.horizon)
    lifted = [arith.lift(c) for c in f.coefficients]
    derivative = [arith.mul(c, arith.ring(i), precision) for i, c in enumerate(lifted)][1:]

    def horner(coefficients, r, prec):
        acc = arith.trunc(coefficients[-1], prec)
        for c in reversed(coefficients[:-1]):
            acc = arith.trunc(arith.mul(acc, r, prec) + c, prec)
        return acc

    r = arith.constant(a0)
    current = 1
    for _ in range(newton_steps(precision)):
        current = min(2 * current, precision)
        value = horner(lifted, r, current)
        slope = horner(derivative, r, current)
        r = arith.trunc(r - arith.mul(value, arith.inverse(slope, current), current), current)
    logger.debug(f"hensel_lift_root: degree={f.degree}, precision={precision}")
    return embed(arith.to_series(r), levels=levels)
