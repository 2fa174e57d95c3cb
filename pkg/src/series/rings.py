"""
Exact algebraic domains shared by the engine
Gaussian rationals Q(i), the residue field Q(i)(tau1..tauM), and the sparse
polynomial rings that carry exact Laurent series and realization-field
elements. Rings are cached so every value built under the same settings
shares one parent.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from sympy import QQ, QQ_I
from sympy.polys.fields import FracField
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing


def tau_names(transcendentals: int) -> Tuple[str, ...]:
    return tuple(f"tau{i}" for i in range(1, transcendentals + 1))


def level_names(levels: int) -> Tuple[str, ...]:
    """Generator names, most significant level first"""
    return tuple(f"s{i}" for i in range(levels, 0, -1))


@lru_cache(maxsize=None)
def tau_field(transcendentals: int) -> FracField:
    """Q(i)(tau1..tauM)"""
    return FracField(tau_names(transcendentals), QQ_I, lex)


@lru_cache(maxsize=None)
def laurent_ring(transcendentals: int) -> PolyRing:
    """Q(i)[t, tau1..tauM]; exponent 0 is t"""
    return PolyRing(("t",) + tau_names(transcendentals), QQ_I, lex)


@lru_cache(maxsize=None)
def hahn_ring(levels: int, transcendentals: int) -> PolyRing:
    """Q(i)[s_L..s_1, t, tau1..tauM]; the first levels + 1 exponents carry the value"""
    return PolyRing(level_names(levels) + ("t",) + tau_names(transcendentals), QQ_I, lex)


def gaussian(re: Fraction, im: Fraction = Fraction(0)):
    """Q(i) element from two Python fractions"""
    re, im = Fraction(re), Fraction(im)
    return QQ_I(QQ(re.numerator, re.denominator), QQ(im.numerator, im.denominator))


def _qq_to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def gaussian_parts(z) -> Tuple[Fraction, Fraction]:
    """Real and imaginary parts of a Q(i) element as Python fractions"""
    return _qq_to_fraction(z.x), _qq_to_fraction(z.y)


def split_prefix(poly, width: int):
    """Group terms by their first `width` exponents.

    Returns a dict prefix -> {suffix: coeff}; the suffix exponents are the
    tau exponents.
    """
    groups = {}
    for monom, coeff in poly.items():
        groups.setdefault(monom[:width], {})[monom[width:]] = coeff
    return groups


def series_domain(coefficients):
    """Smallest exact domain holding the given Coefficients: QQ, QQ_I or the tau fraction field"""
    domain = QQ
    for c in coefficients:
        if c.transcendentals():
            return c.field.to_domain()
        if c.is_scalar and c.scalar.y:
            domain = QQ_I
    return domain
