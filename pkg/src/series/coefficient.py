"""
Residue Field Coefficients
Exact elements of Q(i)(tau1..tauM). Gaussian rationals are kept as bare Q(i)
scalars; anything that mentions a transcendental becomes a reduced fraction
of polynomials in the tau indeterminates.
"""

from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Tuple, Union

from sympy import Dummy, I, Poly, QQ_I, Rational, factor_list, integer_nthroot
from sympy.polys.fields import FracElement, FracField

from errors import DomainError, PreconditionError
from series.rings import gaussian, gaussian_parts, tau_field

Number = Union[int, Fraction]


class Coefficient:
    """Exact element of Q(i)(tau1..tauM)

    Either a Q(i) scalar or a non-constant tau fraction in lowest terms;
    equal elements always share the same variant.
    """

    __slots__ = ("_scalar", "_frac")

    def __init__(self, value: Union[Number, "Coefficient", FracElement, object] = 0):
        if isinstance(value, Coefficient):
            self._scalar, self._frac = value._scalar, value._frac
        elif isinstance(value, (int, Fraction)):
            self._scalar, self._frac = gaussian(Fraction(value)), None
        elif isinstance(value, FracElement):
            self._scalar, self._frac = _normalize_fraction(value)
        else:
            # a Q(i) domain element
            self._scalar, self._frac = QQ_I.convert(value), None

    # -- constructors ---------------------------------------------------

    @classmethod
    def gaussian(cls, re: Number, im: Number = 0) -> "Coefficient":
        return cls(gaussian(Fraction(re), Fraction(im)))

    @classmethod
    def imaginary_unit(cls) -> "Coefficient":
        return cls.gaussian(0, 1)

    @classmethod
    def tau(cls, index: int, transcendentals: int) -> "Coefficient":
        if not 1 <= index <= transcendentals:
            raise PreconditionError(f"tau{index} outside tau1..tau{transcendentals}")
        return cls(tau_field(transcendentals).gens[index - 1])

    @classmethod
    def from_tau_terms(cls, numerator: Dict[Tuple[int, ...], object],
                       denominator: Dict[Tuple[int, ...], object],
                       transcendentals: int) -> "Coefficient":
        """Quotient of two tau polynomials given as {exponents: Q(i)} dicts"""
        if not denominator:
            raise DomainError("coefficient with zero denominator")
        zero = (0,) * transcendentals
        if set(numerator) <= {zero} and set(denominator) <= {zero}:
            if not numerator:
                return cls(0)
            return cls(numerator[zero] / denominator[zero])
        field = tau_field(transcendentals)
        return cls(field.new(field.ring.from_dict(numerator), field.ring.from_dict(denominator)))

    # -- inspection -------------------------------------------------------

    @property
    def is_scalar(self) -> bool:
        return self._frac is None

    @property
    def scalar(self):
        """The Q(i) value; only for scalar coefficients"""
        if self._frac is not None:
            raise PreconditionError("coefficient depends on a transcendental")
        return self._scalar

    @property
    def field(self) -> Optional[FracField]:
        return None if self._frac is None else self._frac.field

    @property
    def fraction(self) -> Optional[FracElement]:
        return self._frac

    def is_zero(self) -> bool:
        return self._frac is None and not self._scalar

    def __bool__(self) -> bool:
        return not self.is_zero()

    def parts(self) -> Tuple[Fraction, Fraction]:
        """Real and imaginary parts of a scalar coefficient"""
        return gaussian_parts(self.scalar)

    def transcendentals(self) -> FrozenSet[int]:
        """Indices of the tau indeterminates this coefficient depends on"""
        if self._frac is None:
            return frozenset()
        used = set()
        for poly in (self._frac.numer, self._frac.denom):
            for monom in poly.keys():
                used.update(i + 1 for i, e in enumerate(monom) if e)
        return frozenset(used)

    def is_free_of(self, indices) -> bool:
        return not (self.transcendentals() & frozenset(indices))

    def tau_terms(self) -> Tuple[Dict[Tuple[int, ...], object], Dict[Tuple[int, ...], object]]:
        """Numerator and denominator as {exponents: Q(i)} dicts over `transcendentals` variables"""
        if self._frac is None:
            raise PreconditionError("scalar coefficient has no tau terms")
        return dict(self._frac.numer.items()), dict(self._frac.denom.items())

    # -- arithmetic -------------------------------------------------------

    def _as_frac(self, field: FracField) -> FracElement:
        if self._frac is not None:
            if self._frac.field != field:
                raise PreconditionError("coefficients over different transcendental fields")
            return self._frac
        return field.new(field.ring.ground_new(self._scalar))

    def _combine(self, other, op) -> "Coefficient":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self._frac is None and other._frac is None:
            return Coefficient(op(self._scalar, other._scalar))
        field = self.field or other.field
        return Coefficient(op(self._as_frac(field), other._as_frac(field)))

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._combine(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> "Coefficient":
        if self._frac is None:
            return Coefficient(-self._scalar)
        return Coefficient(-self._frac)

    def __pos__(self) -> "Coefficient":
        return self

    def inverse(self) -> "Coefficient":
        if self.is_zero():
            raise DomainError("inverse of zero coefficient")
        if self._frac is None:
            return Coefficient(QQ_I.one / self._scalar)
        return Coefficient(self._frac.field.raw_new(self._frac.denom, self._frac.numer))

    def __pow__(self, exponent: int) -> "Coefficient":
        if exponent == 0:
            return Coefficient(1)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self._frac is None:
            return Coefficient(self._scalar ** exponent)
        return Coefficient(self._frac ** exponent)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self._frac is None or other._frac is None:
            return self._frac is None and other._frac is None and self._scalar == other._scalar
        if self._frac.field != other._frac.field:
            return False
        return self._frac.numer * other._frac.denom == other._frac.numer * self._frac.denom

    def __hash__(self) -> int:
        if self._frac is None:
            return hash(self._scalar)
        lc = self._frac.denom.LC
        return hash((frozenset(self._frac.numer.quo_ground(lc).items()),
                     frozenset(self._frac.denom.quo_ground(lc).items())))

    # -- roots ------------------------------------------------------------

    def nth_root(self, n: int) -> Optional["Coefficient"]:
        """r with r**n == self when representable, else None"""
        if n < 1:
            raise PreconditionError(f"root order must be positive, got {n}")
        if n == 1 or self.is_zero():
            return self
        if self._frac is None:
            root = gaussian_nth_root(self._scalar, n)
            return None if root is None else Coefficient(root)
        field = self._frac.field
        lc = self._frac.denom.LC
        numer_root = _poly_nth_root(self._frac.numer.quo_ground(lc), n)
        denom_root = _poly_nth_root(self._frac.denom.quo_ground(lc), n)
        if numer_root is None or denom_root is None:
            return None
        return Coefficient(field.new(numer_root, denom_root))

    def __repr__(self) -> str:
        return f"Coefficient({self})"

    def __str__(self) -> str:
        from interpreter.printer import format_coefficient
        return format_coefficient(self)


def _coerce(value) -> Optional[Coefficient]:
    if isinstance(value, Coefficient):
        return value
    if isinstance(value, (int, Fraction)):
        return Coefficient(value)
    return None


def _normalize_fraction(frac: FracElement):
    """Collapse tau-free fractions to Q(i) scalars"""
    if frac.numer.is_ground and frac.denom.is_ground:
        if not frac.numer:
            return gaussian(Fraction(0)), None
        return frac.numer.LC / frac.denom.LC, None
    return None, frac


def gaussian_nth_root(z, n: int):
    """Canonical n-th root of a Q(i) element inside Q(i), or None.

    Among the roots r * (roots of unity in Q(i)) the one in the first
    quadrant (real part > 0, imaginary part >= 0) is returned.
    """
    if not z or n == 1:
        return z
    re, im = gaussian_parts(z)
    if im == 0 and re > 0:
        num_root, num_exact = integer_nthroot(re.numerator, n)
        den_root, den_exact = integer_nthroot(re.denominator, n)
        if num_exact and den_exact:
            return gaussian(Fraction(num_root, den_root))
    x = Dummy("x")
    target = Rational(re.numerator, re.denominator) + I * Rational(im.numerator, im.denominator)
    _, factors = factor_list(x ** n - target, x, extension=I)
    roots = []
    for factor, _ in factors:
        poly = Poly(factor, x)
        if poly.degree() == 1:
            lead, const = poly.all_coeffs()
            roots.append(-QQ_I.from_sympy(const) / QQ_I.from_sympy(lead))
    if not roots:
        return None
    return min(roots, key=lambda r: r.quadrant())


def _grlex_key(monom):
    return sum(monom), monom


def _poly_nth_root(poly, n: int):
    """Polynomial r with r**n == poly over Q(i), or None.

    Builds r term by term from the graded leading term downwards.
    """
    ring = poly.ring
    if not poly:
        return poly
    lead = max(poly.keys(), key=_grlex_key)
    if any(e % n for e in lead):
        return None
    lead_coeff = gaussian_nth_root(poly[lead], n)
    if lead_coeff is None:
        return None
    lead_root = tuple(e // n for e in lead)
    root = ring.from_dict({lead_root: lead_coeff})
    lowest = min(sum(m) for m in poly.keys())
    scale = lead_coeff ** (n - 1) * n
    offset = tuple((n - 1) * e for e in lead_root)

    while True:
        rem = poly - root ** n
        if not rem:
            return root
        monom = max(rem.keys(), key=_grlex_key)
        step = tuple(a - b for a, b in zip(monom, offset))
        if min(step) < 0 or n * sum(step) < lowest or _grlex_key(step) >= _grlex_key(lead_root):
            return None
        root = root + ring.from_dict({step: rem[monom] / scale})
