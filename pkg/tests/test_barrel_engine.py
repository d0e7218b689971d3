from fractions import Fraction

import pytest

from conebarrel.barrel_engine import (BarrelKind, SeparationCase, b1_witness, b2_witness,
                                      b2_witness_subcone, b_union_oracle, barrel_members,
                                      barreled_witness, bsub, bunion, check_convexity,
                                      check_scaling_identity, in_barrel, lemma21_check,
                                      parse_barrel, refute_upper_barreled,
                                      scale_barrel_membership, vtilde)
from conebarrel.dual_functionals import inf_bar, scaled
from conebarrel.errors import (DomainError, NotANonMemberError, ParseError,
                               UncoveredCaseError)
from conebarrel.indexed_cone import INF_ELEM, ZERO_ELEM, member, p_smul
from conebarrel.sampling import derive_rng, draw_log_grid


def m(value, index):
    return member(Fraction(value), index)


class TestSpecs:

    @pytest.mark.parametrize('text', ['vtilde:2/1', 'bsub:3:1/2', 'b:1/1'])
    def test_round_trip(self, text):
        assert str(parse_barrel(text)) == text

    @pytest.mark.parametrize('text', ['vtilde:0', 'bsub:0:1', 'b', 'ball:1'])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_barrel(text)

    def test_kinds(self):
        assert vtilde(1).kind is BarrelKind.VTILDE
        assert bsub(2, 1).j == 2
        with pytest.raises(DomainError):
            bunion(0)


class TestMembership:

    @pytest.mark.parametrize('pair, expected', [
        ((m(3, 2), m(5, 2)), True),
        ((ZERO_ELEM, m(9, 4)), True),
        ((m(3, 2), ZERO_ELEM), False),
        ((m(1, 5), INF_ELEM), True),
        ((m(6, 2), m(5, 2)), True),
        ((m('61/10', 2), m(5, 2)), False),
    ])
    def test_union(self, pair, expected):
        assert in_barrel(bunion(1), pair) is expected

    def test_subcone_radius_shrinks(self):
        assert in_barrel(bsub(2, 1), (m(6, 2), m(5, 2)))
        assert not in_barrel(bsub(2, 1), (m('61/10', 2), m(5, 2)))
        assert not in_barrel(bsub(2, 1), (m(1, 3), INF_ELEM))

    def test_vtilde_radius_grows_with_index(self):
        assert in_barrel(vtilde(1), (m(7, 3), m(4, 3)))
        assert not in_barrel(bunion(1), (m(7, 3), m(4, 3)))

    @pytest.mark.parametrize('pair, j_max, expected', [
        ((ZERO_ELEM, ZERO_ELEM), 1, True),
        ((m(3, 2), m(5, 2)), 2, True),
        ((m(3, 2), m(5, 3)), 5, False),
    ])
    def test_oracle(self, pair, j_max, expected):
        assert b_union_oracle(pair, 1, j_max) is expected
        assert in_barrel(bunion(1), pair) is expected

    def test_oracle_needs_enough_indices(self):
        with pytest.raises(DomainError):
            b_union_oracle((m(1, 4), m(1, 4)), 1, 3)

    @pytest.mark.parametrize('lam, expected', [(2, False), (4, True), (1, False)])
    def test_scaling(self, lam, expected):
        pair = (m(6, 1), m(2, 1))
        assert scale_barrel_membership(bunion(1), lam, pair) is expected

    def test_members_sampler(self, cfg):
        rng = derive_rng(cfg.seed, 'members')
        for spec in (vtilde(1), bsub(2, 1), bunion(1)):
            assert all(in_barrel(spec, p) for p in barrel_members(rng, spec, cfg, 50))


class TestAbsorption:

    @pytest.mark.parametrize('spec, b, v', [
        (bunion(1), m(5, 3), Fraction(1, 3)),
        (bunion(1), ZERO_ELEM, Fraction(1)),
        (bsub(2, 1), m(4, 2), Fraction(1, 2)),
    ])
    def test_b1(self, spec, b, v, cfg):
        witness = b1_witness(spec, b, cfg, 50)
        assert (witness.v, witness.lam) == (v, 1)
        assert witness.report.passed

    def test_b1_outside_subcone(self, cfg):
        with pytest.raises(DomainError):
            b1_witness(bsub(2, 1), m(1, 3), cfg)

    @pytest.mark.parametrize('spec, b, v', [
        (bunion(1), m(5, 3), Fraction(1, 3)),
        (bunion(1), INF_ELEM, Fraction(1)),
        (bsub(2, 1), m(1, 2), Fraction(1, 2)),
    ])
    def test_barreled(self, spec, b, v, cfg):
        witness = barreled_witness(spec, b, cfg, 50)
        assert (witness.v, witness.lam) == (v, 1)
        assert witness.report.passed

    @pytest.mark.parametrize('spec', [vtilde(2), bsub(3, 1), bunion(1)])
    def test_lemma21(self, spec, cfg):
        report = lemma21_check(spec, cfg)
        assert report.passed
        assert int(report.details['premise_hits']) > 0

    @pytest.mark.parametrize('spec', [vtilde(Fraction(1, 2)), bsub(2, 1), bsub(3, 3), bunion(1)])
    def test_scaling_identity(self, spec, cfg):
        report = check_scaling_identity(spec, cfg)
        assert report.passed
        assert report.samples == cfg.sample_count
        assert 0 < int(report.details['inside']) < report.samples

    @pytest.mark.parametrize('lam', [Fraction(1, 7), Fraction(3, 2), Fraction(40)])
    def test_scaled_pair_matches_unscaled(self, lam):
        spec = bunion(1)
        for pair, inside in [((m(6, 2), m(5, 2)), True), ((m(7, 2), m(5, 2)), False),
                             ((ZERO_ELEM, m(1, 3)), True), ((m(1, 3), m(1, 2)), False)]:
            scaled_pair = (p_smul(lam, pair[0]), p_smul(lam, pair[1]))
            assert scale_barrel_membership(spec, lam, scaled_pair) is inside
            assert in_barrel(spec, pair) is inside

    @pytest.mark.parametrize('spec', [bsub(2, 1), bunion(1), vtilde(1)])
    def test_convexity(self, spec, cfg):
        assert check_convexity(spec, cfg).passed


class TestSeparation:

    @pytest.mark.parametrize('pair, case, mu', [
        ((m(3, 2), ZERO_ELEM), SeparationCase.CASE_I, inf_bar()),
        ((m(3, 2), m(1, 2)), SeparationCase.CASE_II, scaled(1, 2)),
        ((m(1, 2), m(5, 3)), SeparationCase.CASE_III, scaled(1, 3)),
        ((INF_ELEM, m(5, 3)), SeparationCase.CASE_III, scaled(1, 3)),
    ])
    def test_union(self, pair, case, mu, cfg):
        witness = b2_witness(bunion(1), pair, cfg, 100)
        assert witness.case is case
        assert witness.mu == mu
        assert witness.strict_ok and witness.members_ok

    def test_member_rejected(self, cfg):
        with pytest.raises(NotANonMemberError):
            b2_witness(bunion(1), (m(3, 2), m(5, 2)), cfg)

    def test_only_union(self, cfg):
        with pytest.raises(DomainError):
            b2_witness(vtilde(1), (m(9, 2), m(1, 2)), cfg)

    @pytest.mark.parametrize('pair, case, mu', [
        ((m(5, 2), m(1, 2)), SeparationCase.SUBCONE_I, scaled(1, 2)),
        ((m(5, 2), ZERO_ELEM), SeparationCase.SUBCONE_II, inf_bar()),
    ])
    def test_subcone(self, pair, case, mu, cfg):
        witness = b2_witness_subcone(2, 1, pair, cfg, 100)
        assert (witness.case, witness.mu) == (case, mu)

    def test_subcone_uncovered(self, cfg):
        with pytest.raises(UncoveredCaseError):
            b2_witness_subcone(2, 1, (INF_ELEM, m(1, 2)), cfg)

    def test_subcone_pair_outside(self, cfg):
        with pytest.raises(DomainError):
            b2_witness_subcone(2, 1, (m(5, 3), m(1, 2)), cfg)


class TestRefutation:

    @pytest.mark.parametrize('u, j, a', [
        (Fraction(1), 2, Fraction(5, 2)),
        (Fraction(1, 2), 3, Fraction(9, 4)),
        (Fraction(100), 1, 1 + Fraction(101, 2)),
    ])
    def test_examples(self, u, j, a):
        witness = refute_upper_barreled(u, 1)
        assert (witness.j, witness.a, witness.b) == (j, a, 1)
        assert witness.in_vtilde and witness.not_in_b
        assert in_barrel(vtilde(u), witness.pair)
        assert not in_barrel(bunion(1), witness.pair)

    def test_window(self):
        for u in draw_log_grid(200):
            w = refute_upper_barreled(u, Fraction(3, 2))
            assert w.w < w.j * u
            assert w.w < w.a - w.b < w.j * u

    def test_non_positive(self):
        with pytest.raises(DomainError):
            refute_upper_barreled(0, 1)
