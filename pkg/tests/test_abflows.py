"""
Abelian Flow Tests
Additive and multiplicative flows and the Borel minimal ideal, each
checked against the scalar oracle
"""

import pytest

from abflows.additive import ga_product, stab_add_contains
from abflows.borel import (
    BorelTypeJ,
    coset_product,
    j_action,
    j_identity,
    j_inverse,
    j_product,
    pi_iso,
)
from abflows.multiplicative import gm_orbit, gm_product, stab_mul_contains
from errors import DomainError, PreconditionError
from onetypes.types import Infinitesimal, Realized, Residual, Unbounded
from oracle.scalar import ScalarOracle
from reports.samples import random_unit, sample_one_types
from series.laurent import LaurentSeries
from sl2flow.matrices import Matrix2
from valfield.predicates import CosetLabel

LABELS = range(-2, 3)


@pytest.fixture
def scalar(config):
    return ScalarOracle(config)


class TestAdditiveFlow:

    def test_one_point_flow(self, config, rng, scalar):
        for q in sample_one_types(rng, config, 8):
            p = Unbounded(rng.choice(LABELS))
            assert ga_product(q, p) == p
            assert scalar.product(q, p, "add") == p

    def test_needs_unbounded_right_factor(self):
        with pytest.raises(PreconditionError):
            ga_product(Unbounded(0), Infinitesimal(LaurentSeries.zero(), 0))

    def test_stabilizer_is_everything(self, config, rng, scalar, t):
        for a in (t(-3) * 7, 1 + t(2), LaurentSeries.zero()):
            p = Unbounded(1)
            assert stab_add_contains(a, p)
            assert scalar.translate(a, p, "add") == p


class TestMultiplicativeFlow:

    def test_label_additivity(self):
        for k1 in range(-5, 6):
            for k2 in range(-5, 6):
                assert gm_product(Unbounded(k1), Unbounded(k2)) == Unbounded(k1 + k2)

    def test_kind_follows_the_flow_point(self, t):
        p = Infinitesimal(LaurentSeries.zero(), 2)
        assert gm_product(Realized(t(3)), p) == Infinitesimal(LaurentSeries.zero(), 5)
        assert gm_product(Residual(LaurentSeries.zero(), 4), Unbounded(0)) == Unbounded(4)

    def test_matches_oracle(self, config, rng, scalar):
        for q in sample_one_types(rng, config, 8):
            k = rng.choice(LABELS)
            for p in (Unbounded(k), Infinitesimal(LaurentSeries.zero(), k)):
                assert scalar.product(q, p, "mul") == gm_product(q, p)

    def test_preconditions(self, t):
        with pytest.raises(PreconditionError):
            gm_product(Realized(LaurentSeries.zero()), Unbounded(0))
        with pytest.raises(PreconditionError):
            gm_product(Unbounded(0), Infinitesimal(t(1), 0))

    def test_orbit(self):
        orbit = gm_orbit(Unbounded(1), 2)
        assert [int(p.k) for p in orbit] == [-1, 0, 1, 2, 3]

    def test_stabilizer_is_connected_component(self, config, rng, scalar, t):
        p = Unbounded(0)
        for k in (-1, 0, 1):
            a = random_unit(rng, config) * t(k)
            assert stab_mul_contains(a, p) == (k == 0)
            assert (scalar.translate(a, p, "mul") == p) == (k == 0)
        with pytest.raises(PreconditionError):
            stab_mul_contains(LaurentSeries.zero(), p)

    def test_unknown_flow(self, scalar):
        with pytest.raises(PreconditionError):
            scalar.product(Unbounded(0), Unbounded(0), "xor")


class TestBorelIdeal:

    def test_group_law(self):
        x, y = BorelTypeJ(2), BorelTypeJ(3)
        assert j_product(x, y) == BorelTypeJ(5)
        assert j_product(j_identity(), x) == x
        assert j_product(x, j_inverse(x)) == j_identity()
        assert coset_product(CosetLabel(2), CosetLabel(3)) == CosetLabel(5)

    def test_product_table_matches_oracle(self, scalar):
        for i in LABELS:
            for j in LABELS:
                assert scalar.borel_product(BorelTypeJ(i), BorelTypeJ(j)) == BorelTypeJ(i + j)

    def test_translation(self, scalar, t):
        x = BorelTypeJ(1)
        b, c = t(2) * 3, t(-1) + 1
        assert j_action(b, c, x) == BorelTypeJ(3)
        assert scalar.borel_translate(b, c, x) == BorelTypeJ(3)
        assert scalar.borel_translate(b, LaurentSeries.zero(), x) == BorelTypeJ(3)
        with pytest.raises(DomainError):
            j_action(LaurentSeries.zero(), c, x)

    def test_pi_iso(self, t):
        assert pi_iso(BorelTypeJ(2)) == Matrix2.diagonal(t(2))
        assert pi_iso(BorelTypeJ(1)) != pi_iso(BorelTypeJ(-1))
        x, y = BorelTypeJ(2), BorelTypeJ(-5)
        assert pi_iso(j_product(x, y)) == pi_iso(x) * pi_iso(y)

    def test_p0_conventions(self, scalar):
        assert scalar.p0_conventions_agree()
