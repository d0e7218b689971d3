from fractions import Fraction

import pytest

from conebarrel.errors import DomainError, ParseError
from conebarrel.indexed_cone import (INF_ELEM, ZERO_ELEM, ElemKind, PElem, in_lower_nbhd,
                                     in_qj, in_symmetric, in_upper_nbhd, index_class,
                                     lambda_inverse, lambda_inverse_discontinuity_witness,
                                     lambda_iso, max_of_symmetric, member, p_add, p_le_v,
                                     p_order, p_smul, parse_elem, rbar_le_v, symmetric_nbhd)
from conebarrel.scalars import POS_INF, ExtScalar


def m(value, index):
    return member(Fraction(value), index)


class TestElements:

    def test_member_invariants(self):
        with pytest.raises(DomainError):
            m(0, 1)
        with pytest.raises(DomainError):
            m(1, 0)
        with pytest.raises(DomainError):
            PElem(ElemKind.ZERO, Fraction(1))

    def test_text_forms(self):
        assert str(m('1/2', 3)) == '1/2@3'
        assert str(ZERO_ELEM) == '0_0'
        assert str(INF_ELEM) == 'inf_inf'
        assert repr(m(5, 2)) == 'Member(5/1, 2)'
        for x in (ZERO_ELEM, INF_ELEM, m('7/3', 4)):
            assert parse_elem(str(x)) == x

    @pytest.mark.parametrize('text', ['5', '1/2@x', '0@1', '-1@2', '1@0', 'inf'])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_elem(text)

    def test_index_class(self):
        assert index_class(ZERO_ELEM) == 0
        assert index_class(INF_ELEM) == 'inf'
        assert index_class(m(1, 6)) == 6


class TestOperations:

    def test_add(self):
        assert p_add(m(2, 3), m(5, 3)) == m(7, 3)
        assert p_add(m(2, 3), m(5, 4)) == INF_ELEM
        assert p_add(ZERO_ELEM, m(5, 4)) == m(5, 4)
        assert p_add(INF_ELEM, ZERO_ELEM) == INF_ELEM

    def test_smul(self):
        assert p_smul(0, INF_ELEM) == ZERO_ELEM
        assert p_smul(2, m(3, 5)) == m(6, 5)
        assert p_smul(1, m('1/3', 2)) == m('1/3', 2)
        assert p_smul(3, INF_ELEM) == INF_ELEM
        with pytest.raises(DomainError):
            p_smul(-1, m(1, 1))

    def test_order(self):
        assert p_order(m(2, 3), m(5, 3))
        assert not p_order(m(2, 3), m(5, 4))
        assert not p_order(ZERO_ELEM, m(1, 1))
        assert p_order(INF_ELEM, INF_ELEM)


class TestRelation:

    def test_same_index(self):
        assert p_le_v(m(5, 2), m(2, 2), 2)
        assert not p_le_v(m(7, 2), m(2, 2), 2)

    def test_escape_clauses(self):
        for y in (ZERO_ELEM, INF_ELEM, m(3, 1)):
            assert p_le_v(ZERO_ELEM, y, 1)
        assert p_le_v(INF_ELEM, INF_ELEM, 1)
        assert not p_le_v(INF_ELEM, m(3, 1), 1000)

    def test_different_index(self):
        assert not p_le_v(m(1, 2), m(1, 3), 100)

    def test_radius_must_be_positive(self):
        with pytest.raises(DomainError):
            p_le_v(m(1, 1), m(1, 1), 0)

    def test_upper_and_lower(self):
        assert in_upper_nbhd(ZERO_ELEM, m(1, 1), 1)
        assert not in_lower_nbhd(ZERO_ELEM, m(1, 1), 1)
        assert in_lower_nbhd(INF_ELEM, m(1, 1), 1)
        assert not in_upper_nbhd(INF_ELEM, m(1, 1), 1)


class TestSymmetricNeighborhood:

    def test_singletons(self):
        for center in (ZERO_ELEM, INF_ELEM):
            nbhd = symmetric_nbhd(center, 5)
            assert nbhd.is_singleton
            assert center in nbhd
            assert m(1, 1) not in nbhd

    def test_closed_interval(self):
        nbhd = symmetric_nbhd(m(5, 2), 1)
        assert (nbhd.index, nbhd.lower, nbhd.lower_closed, nbhd.upper) == (2, 3, True, 7)
        assert m(3, 2) in nbhd and m(7, 2) in nbhd
        assert m('29/10', 2) not in nbhd and m(5, 3) not in nbhd
        assert str(nbhd) == '{a@2 : a in [3/1, 7/1]}'

    def test_clipped_lower_bound(self):
        nbhd = symmetric_nbhd(m(1, 3), 1)
        assert not nbhd.lower_closed
        assert nbhd.upper == 4
        assert m('1/1000', 3) in nbhd

    def test_in_symmetric(self):
        assert in_symmetric(m(3, 2), m(5, 2), 1)
        assert not in_symmetric(ZERO_ELEM, m(1, 1), 1)
        for x in (ZERO_ELEM, INF_ELEM, m('2/9', 4)):
            assert in_symmetric(x, x, '1/100')

    def test_max(self):
        assert max_of_symmetric(m(5, 2), 1) == m(7, 2)
        assert max_of_symmetric(ZERO_ELEM, 1) == ZERO_ELEM
        c = max_of_symmetric(m(1, 3), 2)
        assert c == m(7, 3)
        assert p_order(m(4, 3), c)


class TestSubcones:

    def test_in_qj(self):
        assert in_qj(m(4, 2), 2)
        assert not in_qj(m(4, 2), 3)
        assert in_qj(INF_ELEM, 7)
        assert in_qj(ZERO_ELEM, 1)
        with pytest.raises(DomainError):
            in_qj(ZERO_ELEM, 0)

    def test_rbar_relation(self):
        assert rbar_le_v(ExtScalar(3), ExtScalar(2), 1)
        assert not rbar_le_v(POS_INF, ExtScalar(5), 100)
        assert rbar_le_v(POS_INF, POS_INF, 1)

    def test_lambda(self):
        assert lambda_iso(2, m(4, 2)) == ExtScalar(2)
        assert lambda_iso(5, ZERO_ELEM) == ExtScalar(0)
        assert lambda_iso(5, INF_ELEM) == POS_INF
        with pytest.raises(DomainError):
            lambda_iso(3, m(1, 2))

    def test_lambda_inverse(self):
        assert lambda_inverse(3, ExtScalar(2)) == m(6, 3)
        assert lambda_inverse(3, ExtScalar(0)) == ZERO_ELEM
        assert lambda_inverse(3, POS_INF) == INF_ELEM
        for x in (m('1/2', 3), ZERO_ELEM, INF_ELEM):
            assert lambda_inverse(3, lambda_iso(3, x)) == x

    @pytest.mark.parametrize('j, v, eps', [(1, 1, '1/2'), (3, 10, 1), (2, '1/7', '1/100')])
    def test_discontinuity_witness(self, j, v, eps):
        s, t = lambda_inverse_discontinuity_witness(j, v, eps)
        assert s == ExtScalar(Fraction(eps)) and t == ExtScalar(0)
        assert not p_le_v(lambda_inverse(j, s), ZERO_ELEM, v)
