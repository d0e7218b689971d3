from fractions import Fraction

import pytest

from conebarrel.errors import DomainError, ParseError
from conebarrel.scalars import (POS_INF, ExtScalar, exact, ext_add, ext_le, ext_mul,
                                format_ext, format_scalar, parse_ext, parse_scalar, positive)


def F(x):
    return ExtScalar(Fraction(x))


class TestExact:

    def test_accepts_int_fraction_and_text(self):
        assert exact(2) == Fraction(2)
        assert exact(Fraction(3, 4)) == Fraction(3, 4)
        assert exact('3/4') == Fraction(3, 4)

    @pytest.mark.parametrize('value', [0.5, True, None, [1]])
    def test_refuses_inexact(self, value):
        with pytest.raises(DomainError):
            exact(value)

    def test_positive(self):
        assert positive('1/7') == Fraction(1, 7)
        with pytest.raises(DomainError):
            positive(0)


class TestExtAdd:

    def test_finite(self):
        assert ext_add(F('2/3'), F('1/3')) == F(1)

    def test_inf_absorbs(self):
        assert ext_add(POS_INF, F(5)) == POS_INF
        assert F(5) + POS_INF == POS_INF

    def test_identity(self):
        for x in (F(0), F('7/2'), POS_INF):
            assert ext_add(F(0), x) == x


class TestExtMul:

    def test_zero_times_inf(self):
        assert ext_mul(Fraction(0), POS_INF) == F(0)

    def test_finite(self):
        assert ext_mul(Fraction(2), F('3/4')) == F('3/2')
        assert Fraction(2) * F('3/4') == F('3/2')

    def test_identity_on_inf(self):
        assert ext_mul(Fraction(1), POS_INF) == POS_INF

    def test_negative_scalar(self):
        with pytest.raises(DomainError):
            ext_mul(Fraction(-1), F(1))


class TestExtOrder:

    def test_values(self):
        assert ext_le(F('1/2'), F('2/3'))
        assert not ext_le(POS_INF, F(10 ** 9))
        assert ext_le(POS_INF, POS_INF)
        assert F(3) < POS_INF

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            ExtScalar(-1)

    def test_repr_and_hash(self):
        assert repr(F('1/2')) == 'Finite(1/2)'
        assert repr(POS_INF) == 'PosInf'
        assert len({F(1), F(1), ExtScalar()}) == 2

    def test_inf_has_no_value(self):
        with pytest.raises(DomainError):
            POS_INF.value


class TestText:

    @pytest.mark.parametrize('text, value', [('3/4', Fraction(3, 4)), ('2', Fraction(2)),
                                             (' 6/8 ', Fraction(3, 4))])
    def test_parse_scalar(self, text, value):
        assert parse_scalar(text) == value

    @pytest.mark.parametrize('text', ['1.5', 'a/b', '1/0', '', '1/2/3'])
    def test_parse_scalar_errors(self, text):
        with pytest.raises(ParseError):
            parse_scalar(text)

    def test_format_is_always_p_over_q(self):
        assert format_scalar(Fraction(2)) == '2/1'
        assert format_scalar(Fraction(6, 8)) == '3/4'

    def test_ext(self):
        assert parse_ext('inf') == POS_INF
        assert parse_ext('1/2') == F('1/2')
        assert format_ext(POS_INF) == 'inf'
        assert format_ext(F(3)) == '3/1'
        assert str(F('1/3')) == '1/3'
