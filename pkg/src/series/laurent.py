"""
Lazy Exact Laurent Series
Elements of M = C((t)) with coefficients in Q(i)(tau1..tauM).

A series is either exact, t^shift * num/den with num and den polynomials in
t and the tau indeterminates whose t^0 parts are nonzero, or lazy, driven by
a memoized coefficient rule. Field operations on exact operands stay exact,
which is what lets zero be certified; lazy operands fall back to coefficient
recurrences bounded by the horizon.
"""

import logging
import threading
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Tuple

from config.engine import EngineConfig
from errors import (
    DomainError,
    NotInValuationRingError,
    PrecisionHorizonError,
    PreconditionError,
    ValuationOfZeroError,
)
from series.coefficient import Coefficient
from series.rings import laurent_ring, split_prefix

logger = logging.getLogger(__name__)

_DEFAULTS = EngineConfig()

Rule = Callable[["LaurentSeries", int], Coefficient]
Term = Tuple[int, Coefficient]


class LaurentSeries:
    """Formal Laurent series in t, exact or lazily generated"""

    __slots__ = ("_m", "_horizon", "_offset", "_num", "_den", "_rule", "_tau_support",
                 "_memo", "_lock", "_num_coeffs", "_den_coeffs", "_den0_inv")

    def __init__(self, offset: int, *, transcendentals: int, horizon: int,
                 num=None, den=None, rule: Optional[Rule] = None,
                 tau_support: FrozenSet[int] = frozenset()):
        if (num is None) == (rule is None):
            raise PreconditionError("a series needs exactly one of an exact form or a rule")
        self._m = transcendentals
        self._horizon = horizon
        self._offset = offset
        self._num = num
        self._den = den
        self._rule = rule
        self._memo: List[Coefficient] = []
        self._lock = threading.RLock()
        self._num_coeffs: Optional[Dict[int, Coefficient]] = None
        self._den_coeffs: Optional[Dict[int, Coefficient]] = None
        self._den0_inv: Optional[Coefficient] = None
        if num is not None:
            tau_support = _poly_tau_support(num) | _poly_tau_support(den)
        self._tau_support = frozenset(tau_support)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_fraction(cls, num, den, shift: int = 0, *, transcendentals: int,
                      horizon: int) -> "LaurentSeries":
        """t^shift * num/den for polynomials in laurent_ring(transcendentals)"""
        ring = laurent_ring(transcendentals)
        if not den:
            raise DomainError("series with zero denominator")
        if not num:
            return cls(0, transcendentals=transcendentals, horizon=horizon,
                       num=ring.zero, den=ring.one)
        num_low, den_low = _t_low(num), _t_low(den)
        num, den = _t_shift(num, -num_low), _t_shift(den, -den_low)
        shift += num_low - den_low
        num, den = _reduce(num, den)
        return cls(shift, transcendentals=transcendentals, horizon=horizon, num=num, den=den)

    @classmethod
    def lazy(cls, offset: int, rule: Rule, *, tau_support: FrozenSet[int] = frozenset(),
             transcendentals: Optional[int] = None, horizon: Optional[int] = None) -> "LaurentSeries":
        """Series whose coefficient at exponent n is rule(series, n); earlier ones are memoized first"""
        return cls(offset, rule=rule, tau_support=tau_support,
                   transcendentals=transcendentals or _DEFAULTS.transcendentals,
                   horizon=horizon or _DEFAULTS.horizon)

    @classmethod
    def monomial(cls, coefficient, exponent: int = 0, *, transcendentals: Optional[int] = None,
                 horizon: Optional[int] = None) -> "LaurentSeries":
        m = transcendentals or _DEFAULTS.transcendentals
        horizon = horizon or _DEFAULTS.horizon
        ring = laurent_ring(m)
        c = Coefficient(coefficient)
        if c.is_scalar:
            num, den = ring.ground_new(c.scalar), ring.one
        else:
            numer, denom = c.tau_terms()
            num = ring.from_dict({(0,) + k: v for k, v in numer.items()})
            den = ring.from_dict({(0,) + k: v for k, v in denom.items()})
        return cls.from_fraction(num, den, exponent, transcendentals=m, horizon=horizon)

    @classmethod
    def constant(cls, coefficient, **kwargs) -> "LaurentSeries":
        return cls.monomial(coefficient, 0, **kwargs)

    @classmethod
    def zero(cls, **kwargs) -> "LaurentSeries":
        return cls.monomial(0, 0, **kwargs)

    @classmethod
    def one(cls, **kwargs) -> "LaurentSeries":
        return cls.monomial(1, 0, **kwargs)

    @classmethod
    def t_power(cls, exponent: int, **kwargs) -> "LaurentSeries":
        return cls.monomial(1, exponent, **kwargs)

    @classmethod
    def from_terms(cls, terms: Dict[int, object], **kwargs) -> "LaurentSeries":
        """Finite sum of c * t^k"""
        total = cls.zero(**kwargs)
        for exponent in sorted(terms):
            total = total + cls.monomial(terms[exponent], exponent, **kwargs)
        return total

    # -- inspection -----------------------------------------------------------

    @property
    def transcendentals(self) -> int:
        return self._m

    @property
    def horizon(self) -> int:
        return self._horizon

    @property
    def offset(self) -> int:
        """Least exponent that may carry a nonzero coefficient"""
        return self._offset

    @property
    def is_exact(self) -> bool:
        return self._num is not None

    @property
    def exact_form(self):
        """(num, den, shift) for exact series, None for lazy ones"""
        if self._num is None:
            return None
        return self._num, self._den, self._offset

    @property
    def tau_support(self) -> FrozenSet[int]:
        """Superset of the tau indices any coefficient may depend on"""
        return self._tau_support

    def is_zero(self) -> bool:
        """Certified zero (exact zero numerator)"""
        return self._num is not None and not self._num

    def is_polynomial(self) -> bool:
        """Exact with a denominator free of t: finitely many terms"""
        return self._num is not None and all(monom[0] == 0 for monom in self._den.keys())

    def polynomial_terms(self) -> Dict[int, Coefficient]:
        if not self.is_polynomial():
            raise PreconditionError("series is not a Laurent polynomial")
        return {k: c for k, c in self._exact_terms(self._num, self._den).items() if c}

    def _exact_terms(self, num, den) -> Dict[int, Coefficient]:
        denom = Coefficient.from_tau_terms(
            {k[1:]: v for k, v in den.items()}, {(0,) * self._m: 1}, self._m)
        return {self._offset + k: c / denom for k, c in _t_groups(num, self._m).items()}

    def coefficient(self, exponent: int) -> Coefficient:
        """Coefficient of t^exponent (memoized)"""
        if exponent < self._offset:
            return Coefficient(0)
        if self.is_zero():
            return Coefficient(0)
        index = exponent - self._offset
        memo = self._memo
        if index < len(memo):
            return memo[index]
        with self._lock:
            while len(memo) <= index:
                memo.append(self._next_coefficient(len(memo)))
            return memo[index]

    def _next_coefficient(self, index: int) -> Coefficient:
        if self._rule is not None:
            return self._rule(self, self._offset + index)
        if self._num_coeffs is None:
            self._num_coeffs = _t_groups(self._num, self._m)
            self._den_coeffs = _t_groups(self._den, self._m)
            self._den0_inv = self._den_coeffs[0].inverse()
        value = self._num_coeffs.get(index, Coefficient(0))
        for i, d in self._den_coeffs.items():
            if 0 < i <= index:
                value = value - d * self._memo[index - i]
        return value * self._den0_inv

    def terms(self, upto: int) -> Iterator[Term]:
        """Nonzero terms with exponent below `upto`, increasing"""
        for exponent in range(self._offset, upto):
            c = self.coefficient(exponent)
            if c:
                yield exponent, c

    def truncate(self, precision: int) -> List[Term]:
        """All nonzero terms with exponent < precision"""
        if self.is_polynomial():
            return [(k, c) for k, c in sorted(self.polynomial_terms().items()) if k < precision]
        return list(self.terms(precision))

    def valuation(self) -> int:
        """Least exponent with a nonzero coefficient"""
        if self.is_zero():
            raise ValuationOfZeroError("valuation of a certified-zero series")
        if self._num is not None:
            # num and den both have nonzero t^0 parts
            return self._offset
        for exponent in range(self._offset, self._offset + self._horizon):
            if self.coefficient(exponent):
                return exponent
        raise PrecisionHorizonError("series valuation")

    def leading_coefficient(self) -> Coefficient:
        return self.coefficient(self.valuation())

    def residue(self) -> Coefficient:
        """Coefficient of t^0 for series in the valuation ring"""
        if self.is_zero() or self._offset >= 0:
            return self.coefficient(0)
        if self.valuation() < 0:
            raise NotInValuationRingError("residue of a series with negative valuation")
        return self.coefficient(0)

    def angular(self, gamma: int) -> Coefficient:
        """res(t^-gamma * x): the leading coefficient when v(x) = gamma"""
        actual = self.valuation()
        if actual != gamma:
            raise PreconditionError(f"angular component at {gamma} but valuation is {actual}")
        return (self * LaurentSeries.t_power(-gamma, **self._kwargs())).residue()

    # -- arithmetic ---------------------------------------------------------------

    def _kwargs(self) -> Dict[str, int]:
        return {"transcendentals": self._m, "horizon": self._horizon}

    def _coerce(self, other) -> Optional["LaurentSeries"]:
        if isinstance(other, LaurentSeries):
            if other._m != self._m:
                raise PreconditionError("series over different transcendental fields")
            return other
        if isinstance(other, (int, Fraction, Coefficient)):
            return LaurentSeries.constant(other, **self._kwargs())
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_exact and other.is_exact:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            low = min(self._offset, other._offset)
            left = _t_shift(self._num, self._offset - low)
            right = _t_shift(other._num, other._offset - low)
            if self._den == other._den:
                num, den = left + right, self._den
            else:
                num, den = left * other._den + right * self._den, self._den * other._den
            return LaurentSeries.from_fraction(num, den, low, **self._kwargs())
        x, y = self, other
        return LaurentSeries.lazy(
            min(x._offset, y._offset),
            lambda s, n: x.coefficient(n) + y.coefficient(n),
            tau_support=x._tau_support | y._tau_support, **self._kwargs())

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        if self.is_exact:
            return LaurentSeries.from_fraction(-self._num, self._den, self._offset, **self._kwargs())
        x = self
        return LaurentSeries.lazy(self._offset, lambda s, n: -x.coefficient(n),
                                  tau_support=self._tau_support, **self._kwargs())

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_exact and other.is_exact:
            if self._den == other._num:
                num, den = self._num, other._den
            elif other._den == self._num:
                num, den = other._num, self._den
            else:
                num, den = self._num * other._num, self._den * other._den
            return LaurentSeries.from_fraction(num, den, self._offset + other._offset,
                                               **self._kwargs())
        x, y = self, other
        return LaurentSeries.lazy(
            x._offset + y._offset,
            lambda s, n: _convolve(x, y, n),
            tau_support=x._tau_support | y._tau_support, **self._kwargs())

    __rmul__ = __mul__

    def inverse(self) -> "LaurentSeries":
        if self.is_zero():
            raise DomainError("inverse of a certified-zero series")
        if self.is_exact:
            return LaurentSeries.from_fraction(self._den, self._num, -self._offset, **self._kwargs())
        v = self.valuation()
        lead_inv = self.coefficient(v).inverse()
        x = self

        def rule(s: "LaurentSeries", n: int) -> Coefficient:
            k = n + v
            if k == 0:
                return lead_inv
            acc = Coefficient(0)
            for i in range(1, k + 1):
                acc = acc + x.coefficient(v + i) * s.coefficient(n - i)
            return -acc * lead_inv

        return LaurentSeries.lazy(-v, rule, tau_support=self._tau_support, **self._kwargs())

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "LaurentSeries":
        if exponent == 0:
            return LaurentSeries.one(**self._kwargs())
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.is_exact:
            return LaurentSeries.from_fraction(self._num ** exponent, self._den ** exponent,
                                               self._offset * exponent, **self._kwargs())
        result = LaurentSeries.one(**self._kwargs())
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except PreconditionError:
            return False
        if other is None:
            return NotImplemented
        if self.is_exact and other.is_exact:
            low = min(self._offset, other._offset)
            left = _t_shift(self._num, self._offset - low) * other._den
            right = _t_shift(other._num, other._offset - low) * self._den
            return left == right
        start = min(self._offset, other._offset)
        for exponent in range(start, start + self._horizon):
            if self.coefficient(exponent) != other.coefficient(exponent):
                return False
        raise PrecisionHorizonError("series equality")

    def __hash__(self) -> int:
        if self.is_zero():
            return 0
        v = self.valuation()
        return hash((v, self.coefficient(v), self.coefficient(v + 1)))

    def agrees_with(self, other: "LaurentSeries", precision: int) -> bool:
        """Coefficientwise agreement below t^precision"""
        start = min(self._offset, other._offset)
        return all(self.coefficient(n) == other.coefficient(n) for n in range(start, precision))

    def __repr__(self) -> str:
        return f"LaurentSeries({self})"

    def __str__(self) -> str:
        from interpreter.printer import format_series
        return format_series(self)


def _convolve(x: LaurentSeries, y: LaurentSeries, n: int) -> Coefficient:
    acc = Coefficient(0)
    for i in range(x.offset, n - y.offset + 1):
        a = x.coefficient(i)
        if a:
            acc = acc + a * y.coefficient(n - i)
    return acc


def _t_low(poly) -> int:
    return min(monom[0] for monom in poly.keys())


def _t_shift(poly, k: int):
    if k == 0:
        return poly
    return poly.ring.from_dict({(monom[0] + k,) + monom[1:]: c for monom, c in poly.items()})


def _poly_tau_support(poly) -> FrozenSet[int]:
    used = set()
    for monom in poly.keys():
        used.update(i for i, e in enumerate(monom) if i and e)
    return frozenset(used)


def _t_groups(poly, transcendentals: int) -> Dict[int, Coefficient]:
    """Coefficient of each power of t in a polynomial over Q(i)[tau]"""
    one = {(0,) * transcendentals: 1}
    return {prefix[0]: Coefficient.from_tau_terms(terms, one, transcendentals)
            for prefix, terms in split_prefix(poly, 1).items()}


def _reduce(num, den):
    """Fold constant denominators into the numerator and cancel common factors"""
    if len(den) == 1:
        (monom, c), = den.items()
        if not any(monom):
            return num.quo_ground(c), den.ring.one
    q, r = num.div(den)
    if not r:
        return q, den.ring.one
    _, num, den = num.cofactors(den)
    if den.is_ground:
        return num.quo_ground(den.LC), den.ring.one
    return num, den
