"""
Realization Field Elements
Generalized series in t and the level generators s_1..s_L with value group
(Q^L + Z, lex), where nonstandard types are realized.

Elements built from embedded series, generators and field operations are
kept exactly as monomial * num/den with num, den polynomials over Q(i) in
s_L..s_1, t, tau1..tauM. The valuation is the lexicographic minimum of the
(s, t) exponents, so leading terms, zero tests and the standard part are all
exact. Terms are enumerated lazily by repeated leading-term extraction.
Lazily generated Laurent series embed as standard-mode elements.
"""

import logging
import threading
from fractions import Fraction
from itertools import islice
from typing import FrozenSet, Iterator, List, Optional, Tuple

from config.engine import EngineConfig
from errors import (
    ClassificationError,
    DomainError,
    InexactOperationError,
    PrecisionHorizonError,
    PreconditionError,
    ValuationOfZeroError,
)
from hahn.value import Value
from series.coefficient import Coefficient
from series.laurent import LaurentSeries
from series.rings import hahn_ring, laurent_ring, split_prefix

logger = logging.getLogger(__name__)

_DEFAULTS = EngineConfig()

Term = Tuple[Value, Coefficient]


class HahnElement:
    """Element of the realization field"""

    __slots__ = ("_levels", "_m", "_horizon", "_num", "_den", "_shift", "_series",
                 "_terms", "_rest", "_lock")

    def __init__(self, *, levels: int, transcendentals: int, horizon: int,
                 num=None, den=None, shift: Optional[Tuple[int, ...]] = None,
                 series: Optional[LaurentSeries] = None):
        self._levels = levels
        self._m = transcendentals
        self._horizon = horizon
        self._num = num
        self._den = den
        self._shift = shift
        self._series = series
        self._terms: List[Term] = []
        self._rest: Optional["HahnElement"] = self if num is not None else None
        self._lock = threading.RLock()

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_fraction(cls, num, den, shift: Tuple[int, ...], *, levels: int,
                      transcendentals: int, horizon: int) -> "HahnElement":
        """monomial(shift) * num/den with num, den in hahn_ring(levels, transcendentals)"""
        ring = hahn_ring(levels, transcendentals)
        width = levels + 1
        if not den:
            raise DomainError("realization-field element with zero denominator")
        if not num:
            return cls(levels=levels, transcendentals=transcendentals, horizon=horizon,
                       num=ring.zero, den=ring.one, shift=(0,) * width)
        shift = list(shift)
        for p in range(width):
            num_low = min(monom[p] for monom in num.keys())
            den_low = min(monom[p] for monom in den.keys())
            if num_low:
                num = _shift_position(num, p, -num_low)
            if den_low:
                den = _shift_position(den, p, -den_low)
            shift[p] += num_low - den_low
        num, den = _reduce(num, den)
        return cls(levels=levels, transcendentals=transcendentals, horizon=horizon,
                   num=num, den=den, shift=tuple(shift))

    @classmethod
    def monomial(cls, coefficient, exponents: Tuple[int, ...], *, levels: int,
                 transcendentals: int, horizon: int) -> "HahnElement":
        """c * s_L^e_L ... s_1^e_1 t^e_t"""
        ring = hahn_ring(levels, transcendentals)
        pad = (0,) * (levels + 1)
        c = Coefficient(coefficient)
        if c.is_scalar:
            num, den = ring.ground_new(c.scalar), ring.one
        else:
            numer, denom = c.tau_terms()
            num = ring.from_dict({pad + k: v for k, v in numer.items()})
            den = ring.from_dict({pad + k: v for k, v in denom.items()})
        return cls.from_fraction(num, den, tuple(exponents), levels=levels,
                                 transcendentals=transcendentals, horizon=horizon)

    @classmethod
    def zero(cls, **kwargs) -> "HahnElement":
        levels = kwargs.get("levels", _DEFAULTS.levels)
        return cls.monomial(0, (0,) * (levels + 1), **_context(kwargs))

    @classmethod
    def one(cls, **kwargs) -> "HahnElement":
        levels = kwargs.get("levels", _DEFAULTS.levels)
        return cls.monomial(1, (0,) * (levels + 1), **_context(kwargs))

    # -- inspection -----------------------------------------------------------

    @property
    def levels(self) -> int:
        return self._levels

    @property
    def transcendentals(self) -> int:
        return self._m

    @property
    def horizon(self) -> int:
        return self._horizon

    @property
    def is_exact(self) -> bool:
        return self._num is not None

    @property
    def standard_series(self) -> Optional[LaurentSeries]:
        """The wrapped series of a standard-mode element"""
        return self._series

    def _context(self):
        return {"levels": self._levels, "transcendentals": self._m, "horizon": self._horizon}

    def is_zero(self) -> bool:
        """Certified zero"""
        if self._num is not None:
            return not self._num
        return self._series.is_zero()

    def used_levels(self) -> FrozenSet[int]:
        """Levels whose generator occurs in the exact form"""
        if self._num is None:
            return frozenset()
        used = {self._levels - p for p in range(self._levels) if self._shift[p]}
        for poly in (self._num, self._den):
            for monom in poly.keys():
                used.update(self._levels - p for p in range(self._levels) if monom[p])
        return frozenset(used)

    def is_standard_form(self) -> bool:
        """No level generator occurs (the element lies in the embedded copy of M)"""
        return not self.used_levels()

    def leading_term(self) -> Term:
        if self.is_zero():
            raise ValuationOfZeroError("leading term of a certified-zero element")
        if self._num is None:
            v = self._series.valuation()
            return Value.standard(v, self._levels), self._series.coefficient(v)
        width = self._levels + 1
        num_groups = split_prefix(self._num, width)
        den_groups = split_prefix(self._den, width)
        num_low, den_low = min(num_groups), min(den_groups)
        exponents = tuple(s + a - b for s, a, b in zip(self._shift, num_low, den_low))
        coefficient = Coefficient.from_tau_terms(num_groups[num_low], den_groups[den_low], self._m)
        return Value.from_exponents(exponents), coefficient

    def hvaluation(self) -> Value:
        return self.leading_term()[0]

    def leading_coefficient(self) -> Coefficient:
        return self.leading_term()[1]

    def terms(self) -> Iterator[Term]:
        """Terms in increasing value order, memoized"""
        if self._num is None:
            yield from self._standard_terms()
            return
        index = 0
        while True:
            with self._lock:
                while len(self._terms) <= index:
                    rest = self._rest
                    if rest is None or rest.is_zero():
                        self._rest = None
                        return
                    value, coefficient = rest.leading_term()
                    self._terms.append((value, coefficient))
                    self._rest = rest - self._term_element(value, coefficient)
                term = self._terms[index]
            yield term
            index += 1

    def _standard_terms(self) -> Iterator[Term]:
        series = self._series
        if series.is_zero():
            return
        exponent = series.offset
        gap = 0
        while True:
            c = series.coefficient(exponent)
            if c:
                gap = 0
                yield Value.standard(exponent, self._levels), c
            else:
                gap += 1
                if gap > self._horizon:
                    raise PrecisionHorizonError("term enumeration")
            exponent += 1

    def _term_element(self, value: Value, coefficient: Coefficient) -> "HahnElement":
        if any(comp.denominator != 1 for comp in value.levels):
            raise InexactOperationError("term with a fractional level exponent")
        exponents = tuple(int(comp) for comp in value.levels) + (value.std,)
        return HahnElement.monomial(coefficient, exponents, **self._context())

    # -- arithmetic ---------------------------------------------------------------

    def _coerce(self, other) -> Optional["HahnElement"]:
        if isinstance(other, HahnElement):
            if (other._levels, other._m) != (self._levels, self._m):
                raise PreconditionError("elements of realization fields with different shapes")
            return other
        if isinstance(other, LaurentSeries):
            return embed(other, levels=self._levels, horizon=self._horizon)
        if isinstance(other, (int, Fraction, Coefficient)):
            return HahnElement.monomial(other, (0,) * (self._levels + 1), **self._context())
        return None

    def _as_series(self) -> LaurentSeries:
        """View a standard element as a Laurent series"""
        if self._num is None:
            return self._series
        if not self.is_standard_form():
            raise InexactOperationError(
                "a lazily generated series cannot be combined with a nonstandard element")
        ring = laurent_ring(self._m)
        width = self._levels
        num = ring.from_dict({monom[width:]: c for monom, c in self._num.items()})
        den = ring.from_dict({monom[width:]: c for monom, c in self._den.items()})
        return LaurentSeries.from_fraction(num, den, self._shift[-1],
                                           transcendentals=self._m, horizon=self._horizon)

    def _standard_result(self, series: LaurentSeries) -> "HahnElement":
        return embed(series, levels=self._levels, horizon=self._horizon)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._num is None or other._num is None:
            return self._standard_result(self._as_series() + other._as_series())
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = tuple(min(a, b) for a, b in zip(self._shift, other._shift))
        left = _mul_monomial(self._num, tuple(a - c for a, c in zip(self._shift, low)), self._m)
        right = _mul_monomial(other._num, tuple(b - c for b, c in zip(other._shift, low)), self._m)
        if self._den == other._den:
            num, den = left + right, self._den
        else:
            num, den = left * other._den + right * self._den, self._den * other._den
        return HahnElement.from_fraction(num, den, low, **self._context())

    __radd__ = __add__

    def __neg__(self) -> "HahnElement":
        if self._num is None:
            return self._standard_result(-self._series)
        return HahnElement.from_fraction(-self._num, self._den, self._shift, **self._context())

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
        if self._num is None or other._num is None:
            return self._standard_result(self._as_series() * other._as_series())
        shift = tuple(a + b for a, b in zip(self._shift, other._shift))
        if self._den == other._num:
            num, den = self._num, other._den
        elif other._den == self._num:
            num, den = other._num, self._den
        else:
            num, den = self._num * other._num, self._den * other._den
        return HahnElement.from_fraction(num, den, shift, **self._context())

    __rmul__ = __mul__

    def inverse(self) -> "HahnElement":
        if self.is_zero():
            raise DomainError("inverse of a certified-zero element")
        if self._num is None:
            return self._standard_result(self._series.inverse())
        return HahnElement.from_fraction(self._den, self._num, tuple(-e for e in self._shift),
                                         **self._context())

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

    def __pow__(self, exponent: int) -> "HahnElement":
        if exponent == 0:
            return HahnElement.monomial(1, (0,) * (self._levels + 1), **self._context())
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self._num is None:
            return self._standard_result(self._series ** exponent)
        return HahnElement.from_fraction(self._num ** exponent, self._den ** exponent,
                                         tuple(e * exponent for e in self._shift), **self._context())

    # -- comparison ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except PreconditionError:
            return False
        if other is None:
            return NotImplemented
        if self._num is not None and other._num is not None:
            low = tuple(min(a, b) for a, b in zip(self._shift, other._shift))
            left = _mul_monomial(self._num, tuple(a - c for a, c in zip(self._shift, low)), self._m)
            right = _mul_monomial(other._num, tuple(b - c for b, c in zip(other._shift, low)), self._m)
            return left * other._den == right * self._den
        for element in (self, other):
            if element._num is not None and not element.is_standard_form():
                return False
        return self._as_series() == other._as_series()

    def __hash__(self) -> int:
        if self.is_zero():
            return 0
        return hash(self.leading_term())

    def __repr__(self) -> str:
        return f"HahnElement({self})"

    def __str__(self) -> str:
        from interpreter.printer import format_hahn
        return format_hahn(self)

    @property
    def exact_form(self):
        """(num, den, shift) for exact elements"""
        if self._num is None:
            return None
        return self._num, self._den, self._shift


# -- module operations -----------------------------------------------------------


def _context(kwargs) -> dict:
    return {
        "levels": kwargs.get("levels", _DEFAULTS.levels),
        "transcendentals": kwargs.get("transcendentals", _DEFAULTS.transcendentals),
        "horizon": kwargs.get("horizon", _DEFAULTS.horizon),
    }


def embed(x: LaurentSeries, *, levels: Optional[int] = None,
          horizon: Optional[int] = None) -> HahnElement:
    """M -> realization field; exact series stay exact, lazy ones become standard-mode"""
    levels = levels or _DEFAULTS.levels
    horizon = horizon or x.horizon
    m = x.transcendentals
    if not x.is_exact:
        return HahnElement(levels=levels, transcendentals=m, horizon=horizon, series=x)
    num, den, shift = x.exact_form
    ring = hahn_ring(levels, m)
    pad = (0,) * levels
    return HahnElement.from_fraction(
        ring.from_dict({pad + monom: c for monom, c in num.items()}),
        ring.from_dict({pad + monom: c for monom, c in den.items()}),
        pad + (shift,), levels=levels, transcendentals=m, horizon=horizon)


def generator(level: int, sign: int = 1, *, levels: Optional[int] = None,
              transcendentals: Optional[int] = None, horizon: Optional[int] = None) -> HahnElement:
    """s_level ** sign"""
    context = _context({"levels": levels or _DEFAULTS.levels,
                        "transcendentals": transcendentals or _DEFAULTS.transcendentals,
                        "horizon": horizon or _DEFAULTS.horizon})
    total = context["levels"]
    if not 1 <= level <= total:
        raise PreconditionError(f"generator level {level} outside 1..{total}")
    if sign not in (1, -1):
        raise PreconditionError(f"generator sign must be +1 or -1, got {sign}")
    exponents = [0] * (total + 1)
    exponents[total - level] = sign
    return HahnElement.monomial(1, tuple(exponents), **context)


def hvaluation(x: HahnElement) -> Value:
    return x.hvaluation()


def hahn_truncate(x: HahnElement, count: int) -> List[Term]:
    """The first `count` terms"""
    return list(islice(x.terms(), count))


def standard_part(x: HahnElement) -> LaurentSeries:
    """Level-zero component of x, for x without terms below every standard value.

    Specializes s_L, ..., s_1 to zero in turn; a level whose least exponent
    is positive makes the standard part vanish.
    """
    m = x.transcendentals
    if x.is_zero():
        return LaurentSeries.zero(transcendentals=m, horizon=x.horizon)
    if not x.is_exact:
        return x.standard_series
    num, den, shift = x.exact_form
    shift = list(shift)
    for p in range(x.levels):
        num_low = min(monom[p] for monom in num.keys())
        den_low = min(monom[p] for monom in den.keys())
        total = shift[p] + num_low - den_low
        if total > 0:
            return LaurentSeries.zero(transcendentals=m, horizon=x.horizon)
        if total < 0:
            raise ClassificationError("standard part requested below every standard value")
        num = _slice_position(num, p, num_low)
        den = _slice_position(den, p, den_low)
        shift[p] = 0
    ring = laurent_ring(m)
    width = x.levels
    return LaurentSeries.from_fraction(
        ring.from_dict({monom[width:]: c for monom, c in num.items()}),
        ring.from_dict({monom[width:]: c for monom, c in den.items()}),
        shift[-1], transcendentals=m, horizon=x.horizon)


def standard_prefix(x: HahnElement,
                    designated: Optional[FrozenSet[int]] = None) -> Tuple[LaurentSeries, HahnElement]:
    """Split x into base (standard, free of designated taus) and remainder"""
    m = x.transcendentals
    designated = frozenset(range(1, m + 1)) if designated is None else frozenset(designated)
    if x.is_zero():
        return LaurentSeries.zero(transcendentals=m, horizon=x.horizon), x
    if x.hvaluation().is_below_standard():
        return LaurentSeries.zero(transcendentals=m, horizon=x.horizon), x
    standard = standard_part(x)
    base = _tau_free_prefix(standard, designated)
    if base is standard and not x.is_exact:
        return base, HahnElement.zero(**x._context())
    return base, x - embed(base, levels=x.levels, horizon=x.horizon)


def _tau_free_prefix(series: LaurentSeries, designated: FrozenSet[int]) -> LaurentSeries:
    """Initial run of terms whose coefficients avoid the designated taus"""
    if series.is_zero() or not (series.tau_support & designated):
        return series
    if series.is_polynomial():
        candidates = sorted(series.polynomial_terms().items())
    else:
        candidates = series.terms(series.offset + series.horizon)
    kept = {}
    for exponent, c in candidates:
        if c.transcendentals() & designated:
            return LaurentSeries.from_terms(kept, transcendentals=series.transcendentals,
                                            horizon=series.horizon)
        kept[exponent] = c
    if series.is_polynomial():
        return series
    raise PrecisionHorizonError("standard prefix")


def _mul_monomial(poly, exponents: Tuple[int, ...], transcendentals: int):
    if not any(exponents):
        return poly
    return poly.mul_monom(tuple(exponents) + (0,) * transcendentals)


def _shift_position(poly, position: int, amount: int):
    return poly.ring.from_dict({
        monom[:position] + (monom[position] + amount,) + monom[position + 1:]: c
        for monom, c in poly.items()})


def _slice_position(poly, position: int, exponent: int):
    """Terms with the given exponent at `position`, with that exponent cleared"""
    return poly.ring.from_dict({
        monom[:position] + (0,) + monom[position + 1:]: c
        for monom, c in poly.items() if monom[position] == exponent})


def _reduce(num, den):
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
