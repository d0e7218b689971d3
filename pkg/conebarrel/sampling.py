"""Seeded sample pools.

Every law draws from its own ``numpy.random.Generator`` derived from
``(seed, law name)``, so results do not depend on evaluation order. Values
are built as exact Fractions from drawn integers.

Pools always contain the case boundaries the construction hinges on:
``0_0``, ``inf_inf``, equal and adjacent indices, and values sitting exactly
on the edge ``b +- j*v`` of a neighborhood.
"""
import zlib
from fractions import Fraction
from typing import List

import numpy as np

from .indexed_cone import (INF_ELEM, ZERO_ELEM, PElem, SymNbhd, member)
from .scalars import POS_INF, ExtScalar

__all__ = [
    'derive_rng', 'draw_int', 'draw_positive', 'draw_scalar', 'draw_unit',
    'draw_elem', 'draw_member', 'draw_index', 'boundary_elems',
    'boundary_scalars', 'boundary_positive', 'elem_pool', 'positive_pool',
    'scalar_pool', 'pick', 'related_elem', 'draw_ext', 'boundary_ext',
    'related_ext', 'nbhd_members', 'draw_log_grid',
]


def derive_rng(seed: int, name: str) -> np.random.Generator:
    """Independent generator for the law ``name``."""
    salt = zlib.crc32(name.encode('utf-8'))
    return np.random.default_rng(np.random.SeedSequence([int(seed), salt]))


def draw_int(rng, low: int, high: int) -> int:
    """Uniform integer in ``[low, high]``."""
    return int(rng.integers(low, high + 1))


def draw_positive(rng, cfg) -> Fraction:
    return Fraction(draw_int(rng, 1, cfg.max_numerator),
                    draw_int(rng, 1, cfg.max_denominator))


def draw_scalar(rng, cfg) -> Fraction:
    """Nonnegative rational; zero with probability about 1/8."""
    if draw_int(rng, 0, 7) == 0:
        return Fraction(0)
    return draw_positive(rng, cfg)


def draw_unit(rng, cfg, closed=True) -> Fraction:
    """Rational in ``[0, 1]`` (or ``(0, 1)`` when ``closed`` is False)."""
    den = draw_int(rng, 2, max(2, cfg.max_denominator))
    if closed:
        return Fraction(draw_int(rng, 0, den), den)
    return Fraction(draw_int(rng, 1, den - 1), den)


def draw_index(rng, cfg) -> int:
    return draw_int(rng, 1, cfg.max_index)


def draw_member(rng, cfg, index=None) -> PElem:
    return member(draw_positive(rng, cfg),
                  draw_index(rng, cfg) if index is None else index)


def draw_elem(rng, cfg) -> PElem:
    roll = draw_int(rng, 0, 9)
    if roll == 0:
        return ZERO_ELEM
    if roll == 1:
        return INF_ELEM
    return draw_member(rng, cfg)


def boundary_elems(cfg) -> List[PElem]:
    top = cfg.max_index
    elems = [ZERO_ELEM, INF_ELEM, member(1, 1), member(2, 1), member(1, 2),
             member(Fraction(1, 2), 2), member(3, 2), member(1, top)]
    if top > 1:
        elems.append(member(1, top - 1))
    return elems


def boundary_scalars() -> List[Fraction]:
    return [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2)]


def boundary_positive() -> List[Fraction]:
    return [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(1, 7)]


def elem_pool(rng, cfg) -> List[PElem]:
    return boundary_elems(cfg) + [draw_elem(rng, cfg) for _ in range(cfg.pool_size)]


def positive_pool(rng, cfg) -> List[Fraction]:
    return boundary_positive() + [draw_positive(rng, cfg) for _ in range(cfg.pool_size)]


def scalar_pool(rng, cfg) -> List[Fraction]:
    return boundary_scalars() + [draw_scalar(rng, cfg) for _ in range(cfg.pool_size)]


def pick(rng, pool):
    return pool[int(rng.integers(0, len(pool)))]


def related_elem(rng, cfg, y: PElem, v: Fraction) -> PElem:
    """An ``x`` biased towards ``x <= y + v``, often exactly on the edge."""
    roll = draw_int(rng, 0, 9)
    if roll == 0:
        return ZERO_ELEM
    if roll == 1 or not y.is_member:
        return draw_elem(rng, cfg)
    edge = y.value + y.index * v
    if roll <= 4:
        return member(edge, y.index)
    if roll <= 7:
        return member(edge * draw_unit(rng, cfg, closed=False), y.index)
    # just past the edge, or an adjacent index
    if roll == 8:
        return member(edge + Fraction(1, cfg.max_denominator), y.index)
    return member(edge, y.index % cfg.max_index + 1)


def nbhd_members(rng, cfg, nbhd: SymNbhd, count: int) -> List[PElem]:
    """Members of v(b)v, both interval edges included where attained."""
    if nbhd.is_singleton:
        return [nbhd.center]
    out = [member(nbhd.upper, nbhd.index), nbhd.center]
    if nbhd.lower_closed:
        out.append(member(nbhd.lower, nbhd.index))
    while len(out) < count:
        t = draw_unit(rng, cfg, closed=nbhd.lower_closed)
        out.append(member(nbhd.lower + (nbhd.upper - nbhd.lower) * t, nbhd.index))
    return out[:max(count, 1)]


def draw_ext(rng, cfg) -> ExtScalar:
    roll = draw_int(rng, 0, 9)
    if roll == 0:
        return ExtScalar(0)
    if roll == 1:
        return POS_INF
    return ExtScalar(draw_positive(rng, cfg))


def boundary_ext() -> List[ExtScalar]:
    return [ExtScalar(0), POS_INF, ExtScalar(1), ExtScalar(Fraction(1, 2))]


def related_ext(rng, cfg, y: ExtScalar, v: Fraction) -> ExtScalar:
    if y.is_inf:
        return draw_ext(rng, cfg)
    roll = draw_int(rng, 0, 3)
    if roll == 0:
        return ExtScalar(y.value + v)
    if roll == 1:
        return ExtScalar((y.value + v) * draw_unit(rng, cfg))
    return draw_ext(rng, cfg)


def draw_log_grid(count: int, low_exp: int = -3, high_exp: int = 3) -> List[Fraction]:
    """``count`` exact rationals spread over ``(10**low_exp, 10**high_exp)``.

    Inside each decade the grid interpolates linearly, so consecutive points
    are increasing and evenly spread on a logarithmic scale to within a
    factor of the decade.
    """
    span = high_exp - low_exp
    grid = []
    for k in range(1, count + 1):
        t = Fraction(span * k, count + 1)
        decade = int(t)
        frac = t - decade
        grid.append(Fraction(10) ** (low_exp + decade) * (1 + 9 * frac))
    return grid
