"""Exact nonnegative rationals and the extended half-line [0, +inf].

Every value in the package is a :class:`fractions.Fraction`; floats are
rejected on entry. ``ExtScalar`` adjoins ``+inf`` with the convention
``0 * inf = 0``.
"""
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Optional, Union

from .errors import DomainError, ParseError

__all__ = [
    'ExactScalar', 'ExtScalar', 'POS_INF', 'ZERO', 'ONE', 'exact',
    'positive', 'finite', 'ext_add', 'ext_mul', 'ext_le',
    'parse_scalar', 'format_scalar', 'parse_ext', 'format_ext',
]

ExactScalar = Fraction

ScalarLike = Union[int, Fraction, str]


def exact(x: ScalarLike) -> Fraction:
    """Coerce ``x`` to an exact rational. Floats are refused."""
    if isinstance(x, bool):
        raise DomainError(f'not a rational scalar: {x!r}')
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise DomainError(f'not an exact rational: {x!r} ({type(x).__name__})')


def positive(x: ScalarLike, name: str = 'v') -> Fraction:
    """Return ``x`` as a Fraction, requiring ``x > 0``."""
    value = exact(x)
    if value <= 0:
        raise DomainError(f'{name} must be > 0, got {format_scalar(value)}')
    return value


@total_ordering
class ExtScalar:
    """An element of [0, +inf]: either ``Finite(q)`` or ``PosInf``."""

    __slots__ = ('_value', )

    def __init__(self, value: Optional[ScalarLike] = None):
        if value is None:
            self._value = None
        else:
            value = exact(value)
            if value < 0:
                raise DomainError(
                    f'extended scalars are nonnegative, got {value}')
            self._value = value

    @classmethod
    def finite(cls, value: ScalarLike) -> 'ExtScalar':
        return cls(value)

    @property
    def is_inf(self) -> bool:
        return self._value is None

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> Fraction:
        """The finite value; raises on ``PosInf``."""
        if self._value is None:
            raise DomainError('PosInf has no finite value')
        return self._value

    def __eq__(self, other):
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other):
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return not ext_le(other, self)

    def __hash__(self):
        return hash(('ExtScalar', self._value))

    def __add__(self, other):
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return ext_add(self, other)

    def __rmul__(self, r):
        if isinstance(r, ExtScalar) or isinstance(r, float):
            return NotImplemented
        return ext_mul(exact(r), self)

    def __repr__(self):
        if self._value is None:
            return 'PosInf'
        return f'Finite({format_scalar(self._value)})'

    def __str__(self):
        return format_ext(self)


POS_INF = ExtScalar()
ZERO = Fraction(0)
ONE = Fraction(1)


def finite(value: ScalarLike) -> ExtScalar:
    return ExtScalar(value)


def ext_add(x: ExtScalar, y: ExtScalar) -> ExtScalar:
    if x.is_inf or y.is_inf:
        return POS_INF
    return ExtScalar(x.value + y.value)


def ext_mul(r: Fraction, x: ExtScalar) -> ExtScalar:
    """``r * x`` with ``0 * inf = 0``."""
    if r < 0:
        raise DomainError(f'scalar must be >= 0, got {format_scalar(r)}')
    if r == 0:
        return ExtScalar(0)
    if x.is_inf:
        return POS_INF
    return ExtScalar(r * x.value)


def ext_le(x: ExtScalar, y: ExtScalar) -> bool:
    if y.is_inf:
        return True
    if x.is_inf:
        return False
    return x.value <= y.value


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimal and float syntax is refused."""
    raw = text.strip()
    num, sep, den = raw.partition('/')
    try:
        numerator = int(num)
        denominator = int(den) if sep else 1
    except ValueError:
        raise ParseError(f'invalid rational {text!r}, expected p/q') from None
    if denominator == 0:
        raise ParseError(f'zero denominator in {text!r}')
    return Fraction(numerator, denominator)


def format_scalar(x: Fraction) -> str:
    return f'{x.numerator}/{x.denominator}'


def parse_ext(text: str) -> ExtScalar:
    if text.strip().lower() in ('inf', '+inf'):
        return POS_INF
    return ExtScalar(parse_scalar(text))


def format_ext(x: ExtScalar) -> str:
    return 'inf' if x.is_inf else format_scalar(x.value)
