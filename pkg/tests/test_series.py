"""
Laurent Series Tests
Exact and lazily generated series over Q(i)(tau)
"""

from fractions import Fraction

import pytest

from errors import (
    DomainError,
    NotInValuationRingError,
    PrecisionHorizonError,
    PreconditionError,
    ValuationOfZeroError,
)
from series.coefficient import Coefficient
from series.laurent import LaurentSeries
from reports.samples import random_polynomial


class TestExactArithmetic:
    """Field operations on exact series"""

    def test_offset_and_coefficients(self, series):
        x = series({-1: Fraction(1, 2), 0: 1, 2: 2})
        assert x.valuation() == -1
        assert x.coefficient(-1) == Coefficient(Fraction(1, 2))
        assert x.coefficient(1) == 0
        assert x.coefficient(2) == 2
        assert x.is_polynomial()

    def test_field_axioms_on_samples(self, config, rng):
        one = LaurentSeries.one()
        for _ in range(10):
            x, y, z = (random_polynomial(rng, config) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert x * (y + z) == x * y + x * z
            assert x * x.inverse() == one
            assert (x / y) * y == x
            assert (x * y).valuation() == x.valuation() + y.valuation()

    def test_geometric_series_inverse(self, t):
        x = (1 - t(1)).inverse()
        assert x.is_exact
        assert all(x.coefficient(n) == 1 for n in range(20))

    def test_negative_power(self, t):
        x = (t(-1) + 1) ** -2
        assert x * (t(-1) + 1) ** 2 == 1
        assert x.valuation() == 2

    def test_zero_exponent(self, t):
        assert LaurentSeries.zero() ** 0 == LaurentSeries.one()
        assert (t(3) + 2) ** 0 == 1
        geometric = LaurentSeries.lazy(0, lambda s, n: Coefficient(1))
        assert (geometric ** 0).is_exact
        assert Coefficient(0) ** 0 == 1

    def test_common_factors_cancel(self, t):
        x = (1 + t(1)) / ((1 + t(1) * 2) * (1 + t(1) * 3))
        y = (1 + t(1) * 2) / (1 + t(1) * 4)
        _, den, _ = (x * y).exact_form
        assert max(monom[0] for monom in den.keys()) == 2
        assert x * y == (1 + t(1)) / ((1 + t(1) * 3) * (1 + t(1) * 4))

    def test_residue_requires_valuation_ring(self, t):
        assert (t(1) + 3).residue() == 3
        with pytest.raises(NotInValuationRingError):
            (t(-1) + 3).residue()

    def test_zero_has_no_valuation(self):
        with pytest.raises(ValuationOfZeroError):
            LaurentSeries.zero().valuation()

    def test_inverse_of_zero(self):
        with pytest.raises(DomainError):
            LaurentSeries.zero().inverse()

    def test_gaussian_coefficients(self, t):
        i = Coefficient.imaginary_unit()
        x = LaurentSeries.constant(i) * t(1)
        assert (x * x).coefficient(2) == -1

    def test_tau_coefficients(self):
        tau = Coefficient.tau(1, 4)
        assert tau * tau.inverse() == 1
        assert tau.transcendentals() == frozenset({1})
        assert LaurentSeries.constant(tau).tau_support == frozenset({1})
        with pytest.raises(PreconditionError):
            Coefficient.tau(5, 4)

    def test_coefficient_roots(self):
        assert Coefficient(4).nth_root(2) == 2
        assert Coefficient(2).nth_root(2) is None
        square = Coefficient.tau(1, 4) * Coefficient.tau(1, 4)
        root = square.nth_root(2)
        assert root * root == square
        quotient = (square - 1) / (Coefficient.tau(1, 4) - 1)
        assert quotient == Coefficient.tau(1, 4) + 1

    def test_angular_component(self, t):
        assert (t(2) * 3 + t(5)).angular(2) == 3
        assert t(-1).angular(-1) == 1
        with pytest.raises(PreconditionError):
            (t(2) * 3).angular(1)

    def test_truncate(self, t):
        assert (1 - t(1)).inverse().truncate(3) == [(0, 1), (1, 1), (2, 1)]
        assert t(5).truncate(3) == []
        assert (1 + t(1) * 2).truncate(10) == [(0, 1), (1, 2)]

    def test_mixed_transcendental_fields_rejected(self):
        x = LaurentSeries.one(transcendentals=2)
        y = LaurentSeries.one(transcendentals=3)
        with pytest.raises(PreconditionError):
            x + y


class TestLazySeries:
    """Memoized coefficient rules and bounded equality"""

    def test_rule_coefficients(self):
        squares = LaurentSeries.lazy(0, lambda s, n: Coefficient(n * n))
        assert squares.coefficient(5) == 25
        assert not squares.is_exact

    def test_equality_with_agreeing_series_is_indeterminate(self, t):
        geometric = LaurentSeries.lazy(0, lambda s, n: Coefficient(1))
        with pytest.raises(PrecisionHorizonError) as error:
            geometric == (1 - t(1)).inverse()
        assert error.value.subcomputation == "series equality"

    def test_inequality_is_decided(self, t):
        geometric = LaurentSeries.lazy(0, lambda s, n: Coefficient(1))
        assert not geometric == (1 - t(1) * 2).inverse()
        assert geometric.agrees_with((1 - t(1)).inverse(), 32)

    def test_lazy_arithmetic(self, t):
        geometric = LaurentSeries.lazy(0, lambda s, n: Coefficient(1))
        product = geometric * (1 - t(1))
        assert product.agrees_with(LaurentSeries.one(), 40)

    def test_valuation_beyond_horizon(self):
        late = LaurentSeries.lazy(0, lambda s, n: Coefficient(0), horizon=16)
        with pytest.raises(PrecisionHorizonError):
            late.valuation()
