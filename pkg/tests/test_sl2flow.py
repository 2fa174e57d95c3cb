"""
SL2 Flow Tests
Decomposition, normal forms, orbit actions and the Ellis group
"""

import pytest

from abflows.borel import BorelTypeJ
from config.engine import EngineConfig
from errors import DomainError, PreconditionError
from onetypes.types import Infinitesimal, Realized, Residual, Unbounded
from oracle.verifier import RealizationOracle
from oracle.words import HFactor, BFactor, MFactor, ProductWord, ZFactor, idempotent_word
from series.laurent import LaurentSeries
from sl2flow.actions import b_action, b_action_solve, h_action, orbit, z4_action, z4_solve
from sl2flow.ellis import (
    G00_IS_WHOLE_GROUP,
    amenability_witness,
    ellis_preimage,
    ellis_product,
    ellis_reduce,
    ellis_reduce_rule,
    idempotent_check,
    reduction_shift,
)
from sl2flow.matrices import Matrix2, Z4, compose, decompose
from sl2flow.normal_form import SL2TypeNF, idempotent, in_v, in_v_as_stated
from valfield.predicates import CosetLabel


def nf(q, j, z=Z4.IDENTITY):
    return SL2TypeNF(z, q, BorelTypeJ(j))


@pytest.fixture
def oracle(small_config):
    return RealizationOracle(small_config)


@pytest.fixture
def zero():
    return LaurentSeries.zero()


class TestMatrices:

    def test_quarter_turn_group(self):
        assert Z4.QUARTER * Z4.QUARTER == Z4.NEG_IDENTITY
        assert Z4.THREE_QUARTER.inverse() == Z4.QUARTER
        assert Z4.NEG_IDENTITY.is_central()
        assert not Z4.QUARTER.is_central()

    def test_row_action_matches_multiplication(self, t):
        g = compose(Z4.IDENTITY, t(1), t(-1) + 2, t(3))
        for z in Z4:
            assert z.act(g) == z.matrix(t(0)) * g

    def test_decompose_round_trip(self, t):
        alpha, beta, gamma = t(2) + 1, t(-1) * 3, t(1) - 4
        g = compose(Z4.IDENTITY, alpha, beta, gamma)
        parts = decompose(g)
        assert parts.z is Z4.IDENTITY
        assert parts.alpha == alpha
        assert parts.beta == beta
        assert parts.gamma == gamma

    def test_quarter_turn_decomposition(self, t, zero):
        g = Matrix2(zero, -t(0), t(0), t(0) * 2)
        parts = decompose(g)
        assert parts.z is Z4.QUARTER
        assert parts.alpha.is_zero()
        assert parts.beta == 1
        assert parts.gamma == 2
        assert compose(*parts.factors) == g

    def test_needs_unit_determinant(self, t, zero):
        with pytest.raises(PreconditionError):
            decompose(Matrix2(t(1), zero, zero, t(1)))

    def test_borel_factor_needs_beta(self, zero):
        with pytest.raises(DomainError):
            Matrix2.borel(zero, zero)


class TestNormalForms:

    def test_unipotent_type_kinds(self, t):
        assert nf(Unbounded(0), 0) == idempotent()
        with pytest.raises(PreconditionError):
            nf(Realized(t(1)), 0)
        with pytest.raises(PreconditionError):
            nf(Residual(LaurentSeries.zero(), 2), 0)

    def test_labels(self):
        form = SL2TypeNF(Z4.IDENTITY, Unbounded(-4), 2)
        assert form.j == BorelTypeJ(2)
        assert (form.m, form.j_label) == (-4, 2)

    def test_v_membership(self, t):
        assert in_v(idempotent()) and in_v_as_stated(idempotent())
        assert in_v(nf(Unbounded(-4), 2))
        assert not in_v_as_stated(nf(Unbounded(-4), 2))
        assert in_v_as_stated(nf(Unbounded(4), 2))
        assert not in_v(nf(Infinitesimal(LaurentSeries.zero(), 0), 0))
        assert in_v(nf(Infinitesimal(t(-3), -2), 1))


class TestBorelAction:

    def test_diagonal_translation(self, t, zero):
        assert b_action(t(2), zero) == nf(Unbounded(-4), 2)
        assert b_action(t(0), zero) == idempotent()

    def test_translation_with_upper_entry(self, t):
        assert b_action(t(2), t(1)) == nf(Infinitesimal(t(-3), -2), 1)

    def test_translated_base(self, t, zero):
        base = nf(Unbounded(2), 1)
        assert b_action(t(1), zero, base) == nf(Unbounded(0), 2)
        assert b_action(t(0) * 5, t(-1), base) == \
            nf(Infinitesimal((t(-1) * 5).inverse(), 0), 2)

    def test_rejected_inputs(self, t, zero):
        with pytest.raises(DomainError):
            b_action(zero, t(1))
        with pytest.raises(PreconditionError):
            b_action(t(1), zero, nf(Infinitesimal(zero, 0), 0))

    @pytest.mark.parametrize("kb,kc", [(0, None), (1, None), (-1, 0), (1, -1)])
    def test_solve_inverts_action(self, kb, kc, t, zero):
        c = zero if kc is None else t(kc) * 2
        target = b_action(t(kb) * 3, c)
        assert in_v(target)
        assert b_action(*b_action_solve(target)) == target

    def test_solve_uses_caller_context(self):
        b, c = b_action_solve(idempotent(), transcendentals=2)
        assert b.transcendentals == c.transcendentals == 2
        assert b == LaurentSeries.one(transcendentals=2)
        assert c.is_zero()

    def test_solve_needs_v(self):
        with pytest.raises(PreconditionError):
            b_action_solve(nf(Unbounded(2), 2))

    @pytest.mark.parametrize("kb,kc", [(1, None), (0, 0), (-1, 1)])
    def test_matches_oracle(self, kb, kc, oracle, t, zero):
        b = t(kb)
        c = zero if kc is None else t(kc)
        word = ProductWord.of(MFactor(Matrix2.borel(b, c))) + idempotent_word()
        assert oracle.check_rule(b_action(b, c), word).passed


class TestUnipotentAction:

    def test_trivial_on_unbounded(self, t):
        assert h_action(t(-2) * 7, idempotent()) == idempotent()

    def test_translates_base_point(self, t):
        form = nf(Infinitesimal(t(-1), 0), 0)
        assert h_action(t(1), form) == nf(Infinitesimal(t(-1) + t(1), 0), 0)

    def test_matches_oracle(self, oracle, t):
        a = t(1) * 2
        word = ProductWord.of(MFactor(Matrix2.lower_unipotent(a))) + idempotent_word()
        assert oracle.check_rule(h_action(a, idempotent()), word).passed


class TestQuarterTurn:

    def test_unbounded_and_infinitesimal_swap(self, zero):
        turned = z4_action(Z4.QUARTER, nf(Unbounded(2), -1))
        assert turned == nf(Infinitesimal(zero, -2), 1)
        assert z4_action(Z4.QUARTER, turned) == nf(Unbounded(2), -1)

    def test_nonzero_base_point(self, t):
        assert z4_action(Z4.QUARTER, nf(Infinitesimal(t(1), -2), 1)) == \
            nf(Infinitesimal(-t(-1), -4), 2)

    def test_central_and_odd_powers(self):
        form = nf(Unbounded(2), -1)
        assert z4_action(Z4.NEG_IDENTITY, form) == form
        assert z4_action(Z4.THREE_QUARTER, form) == z4_action(Z4.QUARTER, form)

    def test_solve(self, zero):
        target = nf(Infinitesimal(zero, 3), 1)
        z, form = z4_solve(target)
        assert form == nf(Unbounded(-3), 4)
        assert z4_action(z, form) == target

    def test_preconditions(self, t, zero):
        with pytest.raises(PreconditionError):
            z4_action(Z4.QUARTER, nf(Unbounded(0), 0, Z4.QUARTER))
        with pytest.raises(PreconditionError):
            z4_solve(nf(Infinitesimal(t(1), 0), 0))

    @pytest.mark.parametrize("m,j", [(0, 0), (2, -1), (-1, 1)])
    def test_matches_oracle(self, m, j, oracle):
        form = nf(Unbounded(m), j)
        word = ProductWord.of(ZFactor(Z4.QUARTER), HFactor(form.q), BFactor(j=form.j))
        assert oracle.check_rule(z4_action(Z4.QUARTER, form), word).passed

    def test_non_default_transcendentals(self):
        config = EngineConfig(transcendentals=2, coset_bound=1)
        context = {"transcendentals": 2, "horizon": config.horizon}
        form = nf(Unbounded(2), -1)
        turned = z4_action(Z4.QUARTER, form, **context)
        assert turned.q.a.transcendentals == 2
        word = ProductWord.of(ZFactor(Z4.QUARTER), HFactor(form.q), BFactor(j=form.j))
        assert RealizationOracle(config).check_rule(turned, word).passed


class TestOrbit:

    def test_bound_zero_fragment(self, zero):
        elements = orbit(0)
        forms = {element.nf for element in elements}
        assert len(elements) == 4
        assert idempotent() in forms
        assert nf(Infinitesimal(zero, 0), 0) in forms
        assert nf(Infinitesimal(LaurentSeries.one(), 0), 0) in forms
        assert nf(Infinitesimal(-LaurentSeries.one(), 0), 0) in forms

    def test_fragment_shape(self):
        for element in orbit(1):
            assert element.nf.z is Z4.IDENTITY
            if element.in_v:
                assert element.nf.m == -2 * element.nf.j_label
            else:
                assert element.provenance.startswith("z4_action")

    def test_context_reaches_every_base_point(self):
        for element in orbit(1, transcendentals=2):
            if isinstance(element.nf.q, Infinitesimal):
                assert element.nf.q.a.transcendentals == 2

    def test_negative_bound(self):
        with pytest.raises(PreconditionError):
            orbit(-1)


class TestEllisGroup:

    def test_connected_component_is_whole_group(self):
        g, label = amenability_witness(0, transcendentals=2)
        assert G00_IS_WHOLE_GROUP
        assert g.determinant() == 1
        assert g.entries[0].transcendentals == 2
        assert label == CosetLabel(1)

    def test_reduction_shifts(self, t, zero):
        assert reduction_shift(Unbounded(-3)) == -3
        assert reduction_shift(Realized(t(2) * 5)) == 2
        assert reduction_shift(Infinitesimal(zero, 4)) == 0
        assert reduction_shift(Infinitesimal(t(-1), 4)) == -1
        assert reduction_shift(Residual(zero, 3)) == 3
        with pytest.raises(PreconditionError):
            reduction_shift(Realized(zero))

    def test_preimage_reduces_onto_label(self):
        for j in range(-4, 5):
            q, i = ellis_preimage(j)
            assert in_v(nf(q, i))
            assert ellis_reduce_rule(q, i) == BorelTypeJ(j)

    def test_stated_instance_moves_to_three_j(self):
        assert ellis_reduce_rule(Unbounded(4), 2) == BorelTypeJ(6)

    def test_group_law(self):
        assert ellis_product(BorelTypeJ(2), BorelTypeJ(-5)) == BorelTypeJ(-3)
        assert ellis_product(0, 3) == BorelTypeJ(3)

    def test_amenability_witness(self, t):
        g, label = amenability_witness(3)
        assert g == Matrix2.diagonal(t(1))
        assert label == CosetLabel(4)

    @pytest.mark.parametrize("q,j", [(Unbounded(1), 0), (Unbounded(-1), 1)])
    def test_reduction_matches_oracle(self, q, j, small_config):
        assert ellis_reduce(q, BorelTypeJ(j), small_config) == ellis_reduce_rule(q, j)

    def test_reduction_rejects_zero(self, zero):
        with pytest.raises(PreconditionError):
            ellis_reduce(Realized(zero), BorelTypeJ(0))

    def test_idempotent(self, small_config):
        assert idempotent_check(small_config)
        assert idempotent_check(small_config, trivial_borel=True)
