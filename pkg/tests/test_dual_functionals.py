from fractions import Fraction

import pytest

from conebarrel.dual_functionals import (FuncKind, RbarFunctional, check_functional_grid,
                                         check_inf_bar_contrast, check_nonneg,
                                         check_polar_agreement, check_polar_off_index,
                                         check_polar_lemmas, check_polar_monotone,
                                         check_rbar_dual, check_subcone_lifting, eval_dual,
                                         eval_subcone_dual, functional_grid, in_polar_analytic,
                                         in_polar_sampled, inf_bar, is_linear_check,
                                         parse_functional, polar_cover_witness,
                                         polar_violation_witness, rbar_dual_eval, rbar_in_polar,
                                         scaled, zero_bar, zero_functional)
from conebarrel.errors import DomainError, ParseError
from conebarrel.indexed_cone import INF_ELEM, ZERO_ELEM, member, p_le_v
from conebarrel.sampling import derive_rng
from conebarrel.scalars import POS_INF, ExtScalar


class TestFamilies:

    def test_canonical_form(self):
        assert scaled(0, 3) == zero_bar(3)
        assert scaled(0, 3).kind is FuncKind.ZERO_BAR
        assert scaled(Fraction(1, 2), 3).is_canonical

    def test_invalid(self):
        with pytest.raises(DomainError):
            scaled(1, 0)
        with pytest.raises(DomainError):
            scaled(-1, 2)

    @pytest.mark.parametrize('text', ['zero', 'infbar', 'zerobar@4', 'lam:3/2@2'])
    def test_text_round_trip(self, text):
        assert str(parse_functional(text)) == text

    @pytest.mark.parametrize('text', ['lam:3/2', 'zerobar@x', 'lam:1@0', 'bar'])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_functional(text)


class TestEval:

    def test_scaled(self):
        assert eval_dual(scaled(3, 2), member(4, 2)) == ExtScalar(12)
        assert eval_dual(scaled(3, 2), member(4, 5)) == POS_INF
        assert eval_dual(scaled(3, 2), ZERO_ELEM) == ExtScalar(0)
        assert eval_dual(scaled(3, 2), INF_ELEM) == POS_INF

    def test_bars(self):
        assert eval_dual(inf_bar(), ZERO_ELEM) == ExtScalar(0)
        assert eval_dual(inf_bar(), member(1, 1)) == POS_INF
        assert eval_dual(zero_bar(4), member(9, 4)) == ExtScalar(0)
        assert eval_dual(zero_bar(4), member(9, 3)) == POS_INF
        assert eval_dual(zero_bar(4), INF_ELEM) == POS_INF
        assert eval_dual(zero_functional(), INF_ELEM) == ExtScalar(0)

    def test_callable(self):
        assert scaled(3, 2)(member(1, 2)) == ExtScalar(3)

    def test_subcone(self):
        assert eval_subcone_dual(scaled(3, 2), member(4, 2), 2) == ExtScalar(12)
        with pytest.raises(DomainError):
            eval_subcone_dual(scaled(3, 2), member(4, 5), 5)
        with pytest.raises(DomainError):
            eval_subcone_dual(inf_bar(), member(4, 5), 2)


class TestDualMembership:

    @pytest.mark.parametrize('mu', [scaled(2, 3), inf_bar(), zero_bar(2), zero_functional()])
    def test_linear(self, mu, cfg):
        assert is_linear_check(mu, cfg).passed

    @pytest.mark.parametrize('mu', [scaled(5, 1), zero_functional(), inf_bar()])
    def test_nonneg(self, mu, cfg):
        assert check_nonneg(mu, cfg).passed

    def test_grid(self, cfg):
        report = check_functional_grid(cfg)
        assert report.passed, report.violations
        assert report.details['functionals'] == str(cfg.outer_count)

    def test_grid_covers_every_family(self, cfg):
        grid = functional_grid(derive_rng(cfg.seed, 'grid'), cfg, 40)
        assert {mu.kind for mu in grid} == set(FuncKind)
        assert all(mu.is_canonical for mu in grid)


class TestPolar:

    @pytest.mark.parametrize('mu, v, expected', [
        (scaled(1, 2), Fraction(1, 2), True),
        (inf_bar(), Fraction(1000), True),
        (scaled(2, 1), Fraction(1), False),
        (zero_bar(4), Fraction(3), True),
        (scaled(1, 1), Fraction(1), True),
    ])
    def test_analytic(self, mu, v, expected):
        assert in_polar_analytic(mu, v) is expected

    def test_violation_witness(self):
        a, b = polar_violation_witness(scaled(2, 1), 1)
        assert p_le_v(a, b, 1)
        assert eval_dual(scaled(2, 1), a) > eval_dual(scaled(2, 1), b) + ExtScalar(1)
        assert polar_violation_witness(scaled(1, 1), 1) is None

    @pytest.mark.parametrize('mu, v, passed', [
        (zero_bar(4), Fraction(3), True),
        (scaled(1, 1), Fraction(1), True),
        (scaled(2, 1), Fraction(1), False),
    ])
    def test_sampled(self, mu, v, passed, cfg):
        assert in_polar_sampled(mu, v, cfg).passed is passed

    @pytest.mark.parametrize('mu, v', [(scaled(2, 3), Fraction(1, 6)), (inf_bar(), Fraction(1)),
                                       (zero_functional(), Fraction(1))])
    def test_cover(self, mu, v):
        assert polar_cover_witness(mu) == v

    def test_agreement(self, cfg):
        report = check_polar_agreement(cfg)
        assert report.passed, report.violations
        assert int(report.details['refuted']) > 0

    def test_fixed_polar_members(self, cfg):
        assert check_polar_lemmas(cfg).passed

    @pytest.mark.parametrize('k', [1, 2])
    def test_off_index(self, k, cfg):
        report = check_polar_off_index(k, 1, cfg)
        assert report.passed
        assert int(report.details['premise_hits']) > 0

    def test_monotone(self, cfg):
        assert check_polar_monotone(cfg).passed


class TestSubconeAndRbar:

    def test_lifting(self, cfg):
        assert check_subcone_lifting(cfg).passed

    def test_inf_bar_contrast(self, cfg):
        report = check_inf_bar_contrast(2, cfg)
        assert report.passed
        assert 'rbar_witness' in report.details

    def test_rbar_eval(self):
        assert rbar_dual_eval(RbarFunctional(), ExtScalar(5)) == ExtScalar(0)
        assert rbar_dual_eval(RbarFunctional(), POS_INF) == POS_INF
        assert rbar_dual_eval(RbarFunctional(Fraction(0)), POS_INF) == ExtScalar(0)
        assert rbar_dual_eval(RbarFunctional(Fraction(2)), ExtScalar(3)) == ExtScalar(6)
        assert rbar_in_polar(RbarFunctional(Fraction(2)), Fraction(1, 2))
        assert not rbar_in_polar(RbarFunctional(Fraction(2)), Fraction(1))

    def test_rbar_dual(self, cfg):
        assert check_rbar_dual(cfg).passed
