"""
Printer
Text forms for coefficients, series, realization-field elements, types,
matrices and normal forms. Exact values print in the grammar the parser
reads, so print-then-parse is the identity on them.
"""

from fractions import Fraction
from typing import Sequence, Tuple

from series.rings import gaussian_parts, level_names, tau_names

# terms of a lazily generated series shown before the O(t^N) marker
LAZY_DISPLAY_TERMS = 10


def _fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gaussian(z) -> str:
    re, im = gaussian_parts(z)
    if not im:
        return _fraction(re)
    imaginary = "i" if im == 1 else "-i" if im == -1 else f"{_fraction(im)}*i"
    if not re:
        return imaginary
    sign = "-" if im < 0 else "+"
    magnitude = "i" if abs(im) == 1 else f"{_fraction(abs(im))}*i"
    return f"({_fraction(re)} {sign} {magnitude})"


def _monomial(exponents: Sequence[int], names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, exponents):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def _term(coefficient, exponents: Sequence[int], names: Sequence[str]) -> str:
    mono = _monomial(exponents, names)
    c = format_gaussian(coefficient)
    if not mono:
        return c
    if c == "1":
        return mono
    if c == "-1":
        return f"-{mono}"
    return f"{c}*{mono}"


def _join(terms: Sequence[str]) -> str:
    if not terms:
        return "0"
    text = terms[0]
    for term in terms[1:]:
        text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return text


def _poly_terms(poly, names: Sequence[str], shift: Tuple[int, ...] = ()) -> str:
    """Sum of the terms of poly, with `shift` added to the leading exponents"""
    terms = []
    for monom, c in sorted(poly.items(), key=lambda item: item[0]):
        exponents = tuple(e + (shift[i] if i < len(shift) else 0) for i, e in enumerate(monom))
        terms.append(_term(c, exponents, names))
    return _join(terms)


def _is_one(poly) -> bool:
    return poly == poly.ring.one


def _fraction_form(num, den, shift: Tuple[int, ...], names: Sequence[str]) -> str:
    if _is_one(den):
        return _poly_terms(num, names, shift)
    prefix = _monomial(shift, names)
    body = f"({_poly_terms(num, names)})/({_poly_terms(den, names)})"
    return f"{prefix}*{body}" if prefix else body


def format_coefficient(c) -> str:
    if c.is_scalar:
        return format_gaussian(c.scalar)
    frac = c.fraction
    names = tau_names(len(frac.field.symbols))
    if _is_one(frac.denom):
        return f"({_poly_terms(frac.numer, names)})"
    return f"({_poly_terms(frac.numer, names)})/({_poly_terms(frac.denom, names)})"


def format_series(x, precision: int = LAZY_DISPLAY_TERMS) -> str:
    if x.is_zero():
        return "0"
    if x.is_exact:
        num, den, shift = x.exact_form
        return _fraction_form(num, den, (shift,), ("t",) + tau_names(x.transcendentals))
    # lazily generated: a truncation, not a round-trippable value
    start = x.offset
    terms = []
    for exponent, c in x.terms(start + precision):
        coefficient = format_coefficient(c)
        mono = _monomial((exponent,), ("t",))
        if not mono:
            terms.append(coefficient)
        elif coefficient in ("1", "-1"):
            terms.append(mono if coefficient == "1" else f"-{mono}")
        else:
            terms.append(f"{coefficient}*{mono}")
    return f"{_join(terms)} + O(t^{start + precision})"


def format_hahn(x) -> str:
    if x.is_zero():
        return "0"
    if not x.is_exact:
        return format_series(x.standard_series)
    num, den, shift = x.exact_form
    names = level_names(x.levels) + ("t",) + tau_names(x.transcendentals)
    return _fraction_form(num, den, shift, names)


def format_polynomial(f) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(f.coefficients):
        if c.is_zero():
            continue
        power = "" if i == 0 else "X" if i == 1 else f"X^{i}"
        terms.append(f"({format_series(c)})" + (f"*{power}" if power else ""))
    return " + ".join(terms)


def format_type(p) -> str:
    kind = p.kind
    if kind == "real":
        return f"real[a={format_series(p.a)}]"
    if kind == "pzero":
        return f"pzero[a={format_series(p.a)},k={int(p.k)}]"
    if kind == "pinf":
        return f"pinf[k={int(p.k)}]"
    if kind == "res":
        return f"res[a={format_series(p.a)},n={p.n},tau={p.tau_index}]"
    if kind == "pj":
        return f"pj[k={int(p.label)}]"
    raise ValueError(f"no text form for {p!r}")


def format_entry(x) -> str:
    return format_series(x) if hasattr(x, "offset") else format_hahn(x)


def format_matrix(g) -> str:
    return f"{format_entry(g.x1)},{format_entry(g.x2)};{format_entry(g.x3)},{format_entry(g.x4)}"


def format_normal_form(nf) -> str:
    return f"{nf.z.name.lower()} * {format_type(nf.q)} * pj[k={nf.j_label}]"


def format_result(x) -> str:
    """Text for any value the engine returns"""
    from abflows.borel import BorelTypeJ
    from hahn.element import HahnElement
    from hahn.value import Value
    from onetypes.types import is_one_type
    from series.laurent import LaurentSeries
    from sl2flow.matrices import Matrix2
    from sl2flow.normal_form import SL2TypeNF

    if isinstance(x, SL2TypeNF):
        return format_normal_form(x)
    if isinstance(x, BorelTypeJ) or is_one_type(x):
        return format_type(x)
    if isinstance(x, Matrix2):
        return format_matrix(x)
    if isinstance(x, LaurentSeries):
        return format_series(x)
    if isinstance(x, HahnElement):
        return format_hahn(x)
    if isinstance(x, Value):
        return x.describe()
    if isinstance(x, tuple):
        return "(" + ", ".join(format_result(e) for e in x) + ")"
    return str(x)
