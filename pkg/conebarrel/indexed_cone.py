"""The indexed cone P, its subcones Q_j and the reference cone [0, +inf].

P consists of positive rationals tagged with an index ``i >= 1`` together
with a neutral element ``0_0`` and an absorbing element ``inf_inf``. Index 0
and index inf are never stored as integers: they are the element kinds
``ElemKind.ZERO`` and ``ElemKind.INF``.

Neighborhood radii scale with the index: ``a_i <= b_j + v`` holds iff
``i == j and a <= b + j*v``, or ``a_i == 0_0``, or ``b_j == inf_inf``.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DomainError, ParseError, WitnessError
from .scalars import (POS_INF, ExtScalar, exact, format_scalar,
                      parse_scalar, positive)

__all__ = [
    'ElemKind', 'PElem', 'ZERO_ELEM', 'INF_ELEM', 'member', 'parse_elem',
    'p_add', 'p_smul', 'p_order', 'p_le_v', 'SymNbhd', 'symmetric_nbhd',
    'in_symmetric', 'in_upper_nbhd', 'in_lower_nbhd', 'in_qj',
    'max_of_symmetric', 'rbar_le_v', 'lambda_iso', 'lambda_inverse',
    'lambda_inverse_discontinuity_witness', 'index_class',
]


class ElemKind(Enum):
    ZERO = 'zero'
    MEMBER = 'member'
    INF = 'inf'


@dataclass(frozen=True)
class PElem:
    """An element of P.

    Use :data:`ZERO_ELEM`, :data:`INF_ELEM` and :func:`member` rather than
    the constructor.
    """
    kind: ElemKind
    value: Fraction = Fraction(0)
    index: int = 0

    def __post_init__(self):
        if self.kind is ElemKind.MEMBER:
            if self.value <= 0:
                raise DomainError(
                    f'member value must be > 0, got {self.value}')
            if self.index < 1:
                raise DomainError(
                    f'member index must be >= 1, got {self.index}')
        elif self.value != 0 or self.index != 0:
            raise DomainError(f'{self.kind.value} element carries no data')

    @property
    def is_zero(self) -> bool:
        return self.kind is ElemKind.ZERO

    @property
    def is_inf(self) -> bool:
        return self.kind is ElemKind.INF

    @property
    def is_member(self) -> bool:
        return self.kind is ElemKind.MEMBER

    def __str__(self):
        if self.is_zero:
            return '0_0'
        if self.is_inf:
            return 'inf_inf'
        return f'{format_scalar(self.value)}@{self.index}'

    def __repr__(self):
        if self.is_member:
            return f'Member({format_scalar(self.value)}, {self.index})'
        return 'ZeroElem' if self.is_zero else 'InfElem'


ZERO_ELEM = PElem(ElemKind.ZERO)
INF_ELEM = PElem(ElemKind.INF)


def member(value, index: int) -> PElem:
    return PElem(ElemKind.MEMBER, exact(value), int(index))


def parse_elem(text: str) -> PElem:
    """Parse ``"0_0"``, ``"inf_inf"`` or ``"p/q@i"``."""
    raw = text.strip()
    if raw == '0_0':
        return ZERO_ELEM
    if raw == 'inf_inf':
        return INF_ELEM
    value, sep, index = raw.partition('@')
    if not sep:
        raise ParseError(f'invalid element {text!r}, expected a@i')
    try:
        idx = int(index)
    except ValueError:
        raise ParseError(f'invalid index in {text!r}') from None
    try:
        return member(parse_scalar(value), idx)
    except DomainError as e:
        raise ParseError(str(e)) from None


def index_class(x: PElem):
    """Structural index: 0 for ``0_0``, the string ``'inf'`` for ``inf_inf``."""
    if x.is_zero:
        return 0
    if x.is_inf:
        return 'inf'
    return x.index


def p_add(x: PElem, y: PElem) -> PElem:
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    if x.is_inf or y.is_inf or x.index != y.index:
        return INF_ELEM
    return member(x.value + y.value, x.index)


def p_smul(r, x: PElem) -> PElem:
    r = exact(r)
    if r < 0:
        raise DomainError(f'scalar must be >= 0, got {format_scalar(r)}')
    if r == 0:
        return ZERO_ELEM
    if x.is_member:
        return member(r * x.value, x.index)
    return x


def p_order(x: PElem, y: PElem) -> bool:
    """The preorder: same index class and value <= value."""
    if x.kind is not y.kind:
        return False
    if not x.is_member:
        return True
    return x.index == y.index and x.value <= y.value


def p_le_v(x: PElem, y: PElem, v) -> bool:
    """``x <= y + v`` in P."""
    v = positive(v)
    if x.is_zero or y.is_inf:
        return True
    if x.is_member and y.is_member and x.index == y.index:
        return x.value <= y.value + y.index * v
    return False


def in_upper_nbhd(a: PElem, b: PElem, v) -> bool:
    """``a`` in v(b), i.e. ``a <= b + v``."""
    return p_le_v(a, b, v)


def in_lower_nbhd(a: PElem, b: PElem, v) -> bool:
    """``a`` in (b)v, i.e. ``b <= a + v``."""
    return p_le_v(b, a, v)


def in_symmetric(a: PElem, b: PElem, v) -> bool:
    return p_le_v(a, b, v) and p_le_v(b, a, v)


@dataclass(frozen=True)
class SymNbhd:
    """Closed form of the symmetric neighborhood v(b)v.

    For ``0_0`` and ``inf_inf`` the neighborhood is the singleton of the
    center. For a member ``b_j`` it is ``{a_j : lower <= a <= upper}`` with
    ``a > 0``; when ``b - j*v <= 0`` the lower end is the open bound 0 and
    ``lower_closed`` is False.
    """
    center: PElem
    v: Fraction
    index: Optional[int] = None
    lower: Fraction = Fraction(0)
    lower_closed: bool = False
    upper: Fraction = Fraction(0)

    @property
    def is_singleton(self) -> bool:
        return not self.center.is_member

    def __contains__(self, a: PElem) -> bool:
        if self.is_singleton:
            return a == self.center
        if not a.is_member or a.index != self.index:
            return False
        if self.lower_closed and a.value < self.lower:
            return False
        return a.value <= self.upper

    def __str__(self):
        if self.is_singleton:
            return '{' + str(self.center) + '}'
        left = '[' if self.lower_closed else '('
        return (f'{{a@{self.index} : a in {left}{format_scalar(self.lower)}, '
                f'{format_scalar(self.upper)}]}}')


def symmetric_nbhd(b: PElem, v) -> SymNbhd:
    v = positive(v)
    if not b.is_member:
        return SymNbhd(center=b, v=v)
    radius = b.index * v
    low = b.value - radius
    if low > 0:
        return SymNbhd(b, v, b.index, low, True, b.value + radius)
    return SymNbhd(b, v, b.index, Fraction(0), False, b.value + radius)


def max_of_symmetric(b: PElem, v) -> PElem:
    """The ⪯-greatest element of v(b)v: ``(b + j*v)_j`` for members."""
    v = positive(v)
    if not b.is_member:
        return b
    return member(b.value + b.index * v, b.index)


def in_qj(x: PElem, j: int) -> bool:
    if j < 1:
        raise DomainError(f'subcone index must be >= 1, got {j}')
    return not x.is_member or x.index == j


def rbar_le_v(x: ExtScalar, y: ExtScalar, v) -> bool:
    """``x <= y + v`` in [0, +inf]."""
    v = positive(v)
    if y.is_inf:
        return True
    if x.is_inf:
        return False
    return x.value <= y.value + v


def lambda_iso(j: int, x: PElem) -> ExtScalar:
    """The isomorphism Q_j -> [0, +inf], ``a_j -> a/j``."""
    if not in_qj(x, j):
        raise DomainError(f'{x} is not in Q_{j}')
    if x.is_zero:
        return ExtScalar(0)
    if x.is_inf:
        return POS_INF
    return ExtScalar(x.value / j)


def lambda_inverse(j: int, s: ExtScalar) -> PElem:
    if j < 1:
        raise DomainError(f'subcone index must be >= 1, got {j}')
    if s.is_inf:
        return INF_ELEM
    if s.value == 0:
        return ZERO_ELEM
    return member(s.value * j, j)


def lambda_inverse_discontinuity_witness(j: int, v, eps) -> Tuple[ExtScalar, ExtScalar]:
    """Return ``(s, t)`` with ``s <= t + eps`` in [0, +inf] while
    ``Λ⁻¹(s) <= Λ⁻¹(t) + v`` fails in Q_j, for every radius ``v``."""
    v = positive(v)
    eps = positive(eps, 'eps')
    s, t = ExtScalar(eps), ExtScalar(0)
    if not rbar_le_v(s, t, eps):
        raise WitnessError(f'{s} <= {t} + {format_scalar(eps)} failed')
    image_s, image_t = lambda_inverse(j, s), lambda_inverse(j, t)
    if p_le_v(image_s, image_t, v):
        raise WitnessError(
            f'{image_s} <= {image_t} + {format_scalar(v)} unexpectedly holds')
    return s, t
