"""Law checks on the symmetric neighborhoods of P and on Λ: Q_j -> [0, +inf]."""
from functools import partial

from .cone_axioms import LawReport, check_linearity
from .errors import WitnessError
from .indexed_cone import (ZERO_ELEM, in_lower_nbhd, in_qj, in_symmetric,
                           in_upper_nbhd, index_class, lambda_iso, member,
                           lambda_inverse_discontinuity_witness,
                           max_of_symmetric, p_le_v, p_order, rbar_le_v,
                           symmetric_nbhd)
from .instances import p_instance, qj_instance
from .sampling import (derive_rng, draw_unit, nbhd_members, pick,
                       positive_pool, related_elem)
from .scalars import ExtScalar, ext_add, ext_le, format_scalar

__all__ = [
    'check_index_preservation', 'check_symmetric_closed_form',
    'check_subcone_union', 'check_upper_nbhd_contrast', 'check_lambda_linear',
    'check_lambda_continuity', 'check_lambda_inverse_discontinuity',
]


def check_index_preservation(cfg, centers: int, per_center: int = 10) -> LawReport:
    """Members of v(b)v share b's index, and ``b + j*v`` dominates them."""
    rng = derive_rng(cfg.seed, 'index-preservation')
    report = LawReport('symmetric neighborhoods keep the index')
    inst = p_instance(cfg)
    pool, radii = inst.pool(rng, cfg), positive_pool(rng, cfg)
    for _ in range(centers):
        b, v = pick(rng, pool), pick(rng, radii)
        nbhd = symmetric_nbhd(b, v)
        c = max_of_symmetric(b, v)
        if c not in nbhd:
            report.record({'b': str(b), 'v': format_scalar(v)}, 'b + jv in v(b)v', str(c),
                          cfg.max_witnesses)
        for a in nbhd_members(rng, cfg, nbhd, per_center):
            report.samples += 1
            inputs = {'a': str(a), 'b': str(b), 'v': format_scalar(v)}
            if index_class(a) != index_class(b):
                report.record(inputs, f'index {index_class(b)}', str(index_class(a)),
                              cfg.max_witnesses, key='index')
            if not in_symmetric(a, b, v):
                report.record(inputs, 'a in v(b)v', 'false', cfg.max_witnesses, key='member')
            if not p_order(a, c):
                report.record(inputs, f'a <= {c}', 'false', cfg.max_witnesses, key='max')
    return report.finish()


def check_symmetric_closed_form(cfg) -> LawReport:
    """The interval description of v(b)v agrees with ``a <= b+v and b <= a+v``,
    and the upper and lower neighborhoods match their closed forms."""
    rng = derive_rng(cfg.seed, 'symmetric-closed-form')
    report = LawReport('closed form of v(b), (b)v and v(b)v')
    inst = p_instance(cfg)
    pool, radii = inst.pool(rng, cfg), positive_pool(rng, cfg)
    for _ in range(cfg.sample_count):
        b, v = pick(rng, pool), pick(rng, radii)
        a = related_elem(rng, cfg, b, v) if rng.integers(0, 2) else pick(rng, pool)
        inputs = {'a': str(a), 'b': str(b), 'v': format_scalar(v)}
        report.samples += 1
        if (a in symmetric_nbhd(b, v)) != in_symmetric(a, b, v):
            report.record(inputs, f'membership in {symmetric_nbhd(b, v)}',
                          str(in_symmetric(a, b, v)), cfg.max_witnesses, key='sym')
        if b.is_member:
            radius = b.index * v
            upper = a.is_zero or (a.is_member and a.index == b.index
                                  and a.value <= b.value + radius)
            lower = a.is_inf or (a.is_member and a.index == b.index
                                 and b.value <= a.value + radius)
        else:
            upper = a == b or a.is_zero or b.is_inf
            lower = a == b or a.is_inf or b.is_zero
        if in_upper_nbhd(a, b, v) != upper:
            report.record(inputs, f'a in v(b) is {upper}', str(not upper),
                          cfg.max_witnesses, key='upper')
        if in_lower_nbhd(a, b, v) != lower:
            report.record(inputs, f'a in (b)v is {lower}', str(not lower),
                          cfg.max_witnesses, key='lower')
    return report.finish()


def check_subcone_union(cfg) -> LawReport:
    """Every element lies in some Q_j, and ``a_i`` lies in Q_j iff ``j = i``."""
    rng = derive_rng(cfg.seed, 'subcone-union')
    report = LawReport('P is the union of the Q_j')
    pool = p_instance(cfg).pool(rng, cfg)
    for _ in range(cfg.sample_count):
        x = pick(rng, pool)
        report.samples += 1
        hits = [j for j in range(1, cfg.max_index + 1) if in_qj(x, j)]
        expected = [x.index] if x.is_member else list(range(1, cfg.max_index + 1))
        if hits != expected:
            report.record({'x': str(x)}, f'in Q_j for j in {expected}', str(hits),
                          cfg.max_witnesses)
    return report.finish()


def check_upper_nbhd_contrast(cfg, j: int = 1) -> LawReport:
    """v(0) = [0, v] in [0, +inf] while v(0_0) = {0_0} in Q_j."""
    rng = derive_rng(cfg.seed, f'upper-contrast/{j}')
    report = LawReport(f'v(0) in [0,+inf] versus v(0_0) in Q_{j}')
    radii = positive_pool(rng, cfg)
    zero = ExtScalar(0)
    for _ in range(cfg.sample_count):
        v, t = pick(rng, radii), draw_unit(rng, cfg)
        report.samples += 1
        inputs = {'v': format_scalar(v), 't': format_scalar(t)}
        if not rbar_le_v(ExtScalar(t * v), zero, v):
            report.record(inputs, 't*v in v(0)', 'false', cfg.max_witnesses, key='rbar-in')
        if rbar_le_v(ExtScalar(v + t + 1), zero, v):
            report.record(inputs, 'v + t + 1 not in v(0)', 'true', cfg.max_witnesses,
                          key='rbar-out')
        if t > 0 and p_le_v(member(t, j), ZERO_ELEM, v):
            report.record(inputs, f'{t}@{j} not in v(0_0)', 'true', cfg.max_witnesses,
                          key='p-out')
        if not p_le_v(ZERO_ELEM, ZERO_ELEM, v):
            report.record(inputs, '0_0 in v(0_0)', 'false', cfg.max_witnesses, key='p-in')
    return report.finish()


def check_lambda_linear(j: int, cfg) -> LawReport:
    return check_linearity(partial(lambda_iso, j), qj_instance(j, cfg), cfg, name=f'Lambda_{j}')


def check_lambda_continuity(j: int, cfg) -> LawReport:
    """Λ is monotone, ``x <= y + eps`` in Q_j gives ``Λx <= Λy + eps``
    and ``x <= y + eps/j`` gives ``Λx <= Λy + eps/j``."""
    rng = derive_rng(cfg.seed, f'lambda-continuity/{j}')
    report = LawReport(f'Lambda_{j} monotone and uniformly continuous')
    inst = qj_instance(j, cfg)
    pool, radii = inst.pool(rng, cfg), positive_pool(rng, cfg)
    for _ in range(cfg.sample_count):
        y, eps = pick(rng, pool), pick(rng, radii)
        x = inst.propose(rng, cfg, y, eps)
        lx, ly = lambda_iso(j, x), lambda_iso(j, y)
        inputs = {'x': str(x), 'y': str(y), 'eps': format_scalar(eps)}
        report.samples += 1
        if p_order(x, y) and not ext_le(lx, ly):
            report.record(inputs, 'Lambda(x) <= Lambda(y)', f'{lx} > {ly}',
                          cfg.max_witnesses, key='monotone')
        for radius in (eps, eps / j):
            bound = ext_add(ly, ExtScalar(radius))
            if p_le_v(x, y, radius) and not ext_le(lx, bound):
                report.record(dict(inputs, radius=format_scalar(radius)),
                              f'Lambda(x) <= {bound}', str(lx),
                              cfg.max_witnesses, key='continuity')
    return report.finish()


def check_lambda_inverse_discontinuity(cfg, radii, epsilons) -> LawReport:
    """The inverse of Λ is not uniformly continuous: for every j, v and eps a
    verified witness exists."""
    report = LawReport('inverse of Lambda is not uniformly continuous')
    for j in range(1, cfg.max_index + 1):
        for v in radii:
            for eps in epsilons:
                report.samples += 1
                try:
                    lambda_inverse_discontinuity_witness(j, v, eps)
                except WitnessError as e:
                    report.record({'j': str(j), 'v': format_scalar(v),
                                   'eps': format_scalar(eps)},
                                  'verified witness', str(e), cfg.max_witnesses)
    return report.finish()
