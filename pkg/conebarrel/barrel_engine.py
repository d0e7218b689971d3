"""Barrels in P and Q_j, their certificates, and the refutation witness.

Three decidable families of subsets of P x P are handled:

* ``vtilde:u`` -- all pairs with ``a <= b + u``;
* ``bsub:j:w`` -- ``B_j``, pairs in ``Q_j`` with ``a <= b + w/j``;
* ``b:w`` -- ``B``, the union of all ``B_j``.

Membership in ``B`` is decided in closed form; ``b_union_oracle`` scans the
union directly and is exact once ``j_max`` covers the indices in the pair,
because membership in ``B_j`` forces every finite index of the pair to be
``j``.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from loguru import logger

from .cone_axioms import LawReport
from .dual_functionals import DualFunctional, eval_dual, inf_bar, scaled
from .errors import (DomainError, NotANonMemberError, ParseError,
                     UncoveredCaseError, WitnessError)
from .indexed_cone import (INF_ELEM, ZERO_ELEM, PElem, in_qj, index_class,
                           max_of_symmetric, member, p_add, p_le_v, p_order,
                           p_smul, symmetric_nbhd)
from .instances import p_instance, qj_instance
from .sampling import (derive_rng, draw_index, draw_int, draw_positive,
                       draw_unit, nbhd_members, pick, positive_pool,
                       related_elem)
from .scalars import (ExtScalar, ext_add, ext_le, format_scalar,
                      parse_scalar, positive)

__all__ = [
    'BarrelKind', 'BarrelSpec', 'vtilde', 'bsub', 'bunion', 'parse_barrel',
    'in_barrel', 'b_union_oracle', 'scale_barrel_membership',
    'AbsorptionWitness', 'b1_witness', 'barreled_witness', 'SeparationCase',
    'SeparationWitness', 'b2_witness', 'b2_witness_subcone',
    'barrel_members', 'lemma21_check', 'check_convexity', 'check_scaling_identity',
    'RefutationWitness', 'refute_upper_barreled',
]

Pair = Tuple[PElem, PElem]


class BarrelKind(Enum):
    VTILDE = 'vtilde'
    BSUB = 'bsub'
    BUNION = 'b'


@dataclass(frozen=True)
class BarrelSpec:
    """``radius`` is ``u`` for ``vtilde`` and ``w`` for ``bsub`` / ``b``."""
    kind: BarrelKind
    radius: Fraction
    j: int = 0

    def __post_init__(self):
        if self.radius <= 0:
            raise DomainError(f'barrel radius must be > 0, got {self.radius}')
        if self.kind is BarrelKind.BSUB and self.j < 1:
            raise DomainError(f'B_j needs j >= 1, got {self.j}')

    def __str__(self):
        r = format_scalar(self.radius)
        if self.kind is BarrelKind.VTILDE:
            return f'vtilde:{r}'
        if self.kind is BarrelKind.BSUB:
            return f'bsub:{self.j}:{r}'
        return f'b:{r}'


def vtilde(u) -> BarrelSpec:
    return BarrelSpec(BarrelKind.VTILDE, positive(u, 'u'))


def bsub(j: int, w) -> BarrelSpec:
    return BarrelSpec(BarrelKind.BSUB, positive(w, 'w'), int(j))


def bunion(w) -> BarrelSpec:
    return BarrelSpec(BarrelKind.BUNION, positive(w, 'w'))


def parse_barrel(text: str) -> BarrelSpec:
    """Parse ``vtilde:u``, ``bsub:j:w`` or ``b:w``."""
    parts = text.strip().split(':')
    try:
        if parts[0] == 'vtilde' and len(parts) == 2:
            return vtilde(parse_scalar(parts[1]))
        if parts[0] == 'bsub' and len(parts) == 3:
            return bsub(int(parts[1]), parse_scalar(parts[2]))
        if parts[0] == 'b' and len(parts) == 2:
            return bunion(parse_scalar(parts[1]))
    except (ValueError, DomainError):
        pass
    raise ParseError(f'invalid barrel spec {text!r}')


def in_barrel(spec: BarrelSpec, pair: Pair) -> bool:
    a, b = pair
    if spec.kind is BarrelKind.VTILDE:
        return p_le_v(a, b, spec.radius)
    if spec.kind is BarrelKind.BSUB:
        return in_qj(a, spec.j) and in_qj(b, spec.j) and p_le_v(a, b, spec.radius / spec.j)
    if a.is_zero or b.is_inf:
        return True
    return (a.is_member and b.is_member and a.index == b.index
            and a.value <= b.value + spec.radius)


def b_union_oracle(pair: Pair, w, j_max: int) -> bool:
    """Brute-force ``exists j <= j_max`` with the pair in ``B_j``."""
    w = positive(w, 'w')
    needed = max([x.index for x in pair if x.is_member] + [1])
    if j_max < needed:
        raise DomainError(f'j_max={j_max} does not cover index {needed}')
    return any(in_barrel(bsub(j, w), pair) for j in range(1, j_max + 1))


def scale_barrel_membership(spec: BarrelSpec, lam, pair: Pair) -> bool:
    """Membership of ``pair`` in ``lam * spec``."""
    lam = positive(lam, 'lambda')
    a, b = pair
    return in_barrel(spec, (p_smul(1 / lam, a), p_smul(1 / lam, b)))


class AbsorptionWitness(NamedTuple):
    v: Fraction
    lam: Fraction
    report: LawReport


def _radius_at(spec: BarrelSpec, b: PElem) -> Fraction:
    if spec.kind is BarrelKind.VTILDE:
        raise DomainError('absorption witnesses are built for B_j and B only')
    if spec.kind is BarrelKind.BSUB and not in_qj(b, spec.j):
        raise DomainError(f'{b} is not in Q_{spec.j}')
    if not b.is_member:
        return spec.radius
    return spec.radius / b.index


def b1_witness(spec: BarrelSpec, b: PElem, cfg, count: Optional[int] = None) -> AbsorptionWitness:
    """``v = w/j`` and ``lambda = 1`` absorb v(b)v into the barrel."""
    v, lam = _radius_at(spec, b), Fraction(1)
    nbhd = symmetric_nbhd(b, v)
    rng = derive_rng(cfg.seed, f'b1/{spec}/{b}')
    report = LawReport(f'B1 for {spec} at {b}')
    for a in nbhd_members(rng, cfg, nbhd, count or cfg.outer_count):
        report.samples += 1
        if index_class(a) != index_class(b):
            report.record({'a': str(a), 'b': str(b), 'v': format_scalar(v)},
                          'index of a equals index of b', str(index_class(a)),
                          cfg.max_witnesses)
        if not scale_barrel_membership(spec, lam, (a, b)):
            report.record({'a': str(a), 'b': str(b), 'v': format_scalar(v)},
                          f'(a, b) in {spec}', 'false', cfg.max_witnesses)
    return AbsorptionWitness(v, lam, report.finish())


def barreled_witness(spec: BarrelSpec, b: PElem, cfg,
                     count: Optional[int] = None) -> AbsorptionWitness:
    """A single ``(v, lambda)`` absorbing the whole of v(b)v.

    The greatest element ``c = b + j*v`` of v(b)v is absorbed with some
    ``lambda_c``; every ``a <= c`` in the neighborhood is then absorbed with
    the same ``lambda_c``.
    """
    absorb = b1_witness(spec, b, cfg, count)
    v, lam_a = absorb.v, absorb.lam
    c = max_of_symmetric(b, v)
    nbhd = symmetric_nbhd(b, v)
    report = LawReport(f'barreled at {b} for {spec}')
    report.details['c'] = str(c)
    if c not in nbhd:
        report.record({'b': str(b), 'v': format_scalar(v)}, 'c in v(b)v', str(c),
                      cfg.max_witnesses)
    lam_c = Fraction(1)
    while not scale_barrel_membership(spec, lam_c, (c, b)) and lam_c <= cfg.rho_cap:
        lam_c *= 2
    report.details['lambda_c'] = format_scalar(lam_c)
    rng = derive_rng(cfg.seed, f'barreled/{spec}/{b}')
    for a in nbhd_members(rng, cfg, nbhd, count or cfg.outer_count):
        report.samples += 1
        inputs = {'a': str(a), 'b': str(b), 'c': str(c)}
        if not p_order(a, c):
            report.record(inputs, 'a <= c', 'false', cfg.max_witnesses)
        elif scale_barrel_membership(spec, lam_a, (a, b)) \
                and not scale_barrel_membership(spec, lam_c, (a, b)):
            report.record(inputs, f'(a, b) in {format_scalar(lam_c)}*{spec}', 'false',
                          cfg.max_witnesses)
    if not absorb.report.passed:
        report.violation_count += absorb.report.violation_count
        report.violations.extend(absorb.report.violations)
    return AbsorptionWitness(v, lam_c, report.finish())


class SeparationCase(Enum):
    CASE_I = 'I'
    CASE_II = 'II'
    CASE_III = 'III'
    SUBCONE_I = 'i'
    SUBCONE_II = 'ii'


@dataclass
class SeparationWitness:
    """A functional separating a non-member from the barrel."""
    mu: DualFunctional
    case: SeparationCase
    strict_ok: bool
    members_ok: bool
    report: LawReport = field(repr=False)


def barrel_members(rng, spec: BarrelSpec, cfg, count: int) -> List[Pair]:
    """Sampled members of a barrel, case boundaries first."""
    if spec.kind is BarrelKind.VTILDE:
        fixed = [(ZERO_ELEM, ZERO_ELEM), (INF_ELEM, INF_ELEM), (ZERO_ELEM, member(1, 1)),
                 (member(1 + spec.radius, 1), member(1, 1))]
    else:
        j = spec.j or 1
        fixed = [(ZERO_ELEM, ZERO_ELEM), (INF_ELEM, INF_ELEM), (ZERO_ELEM, member(1, j)),
                 (member(1, j), INF_ELEM), (member(1 + spec.radius, j), member(1, j))]
    out = [p for p in fixed if in_barrel(spec, p)]
    while len(out) < count:
        if spec.kind is BarrelKind.VTILDE:
            j, radius = draw_index(rng, cfg), spec.radius
        else:
            j = spec.j or draw_index(rng, cfg)
            radius = spec.radius / j
        roll = draw_int(rng, 0, 9)
        if roll == 0:
            b = ZERO_ELEM
        elif roll == 1:
            b = INF_ELEM
        else:
            b = member(draw_positive(rng, cfg), j)
        a = related_elem(rng, cfg, b, radius)
        if a.is_member and spec.kind is not BarrelKind.VTILDE:
            a = member(a.value, j)
        if in_barrel(spec, (a, b)):
            out.append((a, b))
    return out[:count]


def _verify_separation(spec, pair, mu, case, cfg, count) -> SeparationWitness:
    a, b = pair
    one = ExtScalar(1)
    strict_ok = not ext_le(eval_dual(mu, a), ext_add(eval_dual(mu, b), one))
    rng = derive_rng(cfg.seed, f'b2/{spec}/{a}/{b}')
    report = LawReport(f'B2 for {spec} at ({a}, {b}) with {mu}')
    report.details['case'] = case.value
    for c, d in barrel_members(rng, spec, cfg, count or cfg.inner_count):
        report.samples += 1
        mc, md = eval_dual(mu, c), eval_dual(mu, d)
        if not ext_le(mc, ext_add(md, one)):
            report.record({'c': str(c), 'd': str(d)}, 'mu(c) <= mu(d) + 1',
                          f'{mc} > {ext_add(md, one)}', cfg.max_witnesses)
    report.finish()
    if not strict_ok or not report.passed:
        raise WitnessError(f'{mu} does not separate ({a}, {b}) from {spec}: '
                           f'strict={strict_ok}, members={report.passed}')
    logger.debug('case {} separates ({}, {}) from {} with {}', case.value, a, b, spec, mu)
    return SeparationWitness(mu, case, strict_ok, report.passed, report)


def b2_witness(spec: BarrelSpec, pair: Pair, cfg,
               count: Optional[int] = None) -> SeparationWitness:
    """Separate a non-member of ``B`` by the case analysis on indices."""
    if spec.kind is not BarrelKind.BUNION:
        raise DomainError(f'b2_witness handles B only, got {spec}')
    if in_barrel(spec, pair):
        raise NotANonMemberError(f'({pair[0]}, {pair[1]}) lies in {spec}')
    a, b = pair
    w = spec.radius
    if b.is_zero:
        mu, case = inf_bar(), SeparationCase.CASE_I
    elif a.is_member and b.is_member and a.index == b.index:
        mu, case = scaled(1 / w, a.index), SeparationCase.CASE_II
    elif b.is_member:
        # a is inf_inf or a member of another index
        mu, case = scaled(1 / w, b.index), SeparationCase.CASE_III
    else:
        raise UncoveredCaseError(f'no separation case for ({a}, {b})')
    return _verify_separation(spec, pair, mu, case, cfg, count)


def b2_witness_subcone(j: int, w, pair: Pair, cfg,
                       count: Optional[int] = None) -> SeparationWitness:
    """Separate a non-member of ``B_j`` inside ``Q_j``.

    Only two cases are handled: equal indices with ``c > d + w``, and a zero
    target. A pair ``(inf_inf, d_j)`` is rejected as uncovered.
    """
    spec = bsub(j, w)
    a, b = pair
    if not (in_qj(a, j) and in_qj(b, j)):
        raise DomainError(f'({a}, {b}) is not a pair in Q_{j}')
    if in_barrel(spec, pair):
        raise NotANonMemberError(f'({a}, {b}) lies in {spec}')
    if a.is_member and b.is_member:
        mu, case = scaled(1 / spec.radius, j), SeparationCase.SUBCONE_I
    elif b.is_zero and not a.is_zero:
        mu, case = inf_bar(), SeparationCase.SUBCONE_II
    else:
        raise UncoveredCaseError(f'({a}, {b}) matches no separation case in Q_{j}')
    return _verify_separation(spec, pair, mu, case, cfg, count)


def _membership_boundary(spec: BarrelSpec, pair: Pair) -> Optional[Fraction]:
    """The scale making membership of a same-index pair an equality."""
    a, b = pair
    if not (a.is_member and b.is_member and a.index == b.index) or a.value <= b.value:
        return None
    if spec.kind is BarrelKind.VTILDE:
        return (a.value - b.value) / (a.index * spec.radius)
    return (a.value - b.value) / spec.radius


def lemma21_check(spec: BarrelSpec, cfg) -> LawReport:
    """``(a,b) in λ_a·B``, ``(c,b) in λ_c·B`` and ``a <= c`` imply
    ``(a,b) in λ_c·B``."""
    rng = derive_rng(cfg.seed, f'lemma21/{spec}')
    report = LawReport(f'absorption lemma for {spec}')
    inst = qj_instance(spec.j, cfg) if spec.kind is BarrelKind.BSUB else p_instance(cfg)
    pool = inst.pool(rng, cfg)
    grid = [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(4)]
    hits = 0
    for _ in range(cfg.sample_count):
        c = pick(rng, pool)
        a = p_smul(draw_unit(rng, cfg), c)
        if draw_int(rng, 0, 1) and c.is_member:
            b = member(draw_positive(rng, cfg), c.index)
        else:
            b = pick(rng, pool)
        lam_a, lam_c = pick(rng, grid), pick(rng, grid)
        if draw_int(rng, 0, 2) == 0:
            lam_a = _membership_boundary(spec, (a, b)) or lam_a
        if draw_int(rng, 0, 2) == 0:
            lam_c = _membership_boundary(spec, (c, b)) or lam_c
        report.samples += 1
        if not (scale_barrel_membership(spec, lam_a, (a, b))
                and scale_barrel_membership(spec, lam_c, (c, b)) and p_order(a, c)):
            continue
        hits += 1
        if not scale_barrel_membership(spec, lam_c, (a, b)):
            report.record({'a': str(a), 'b': str(b), 'c': str(c),
                           'lambda_a': format_scalar(lam_a), 'lambda_c': format_scalar(lam_c)},
                          '(a, b) in lambda_c * B', 'false', cfg.max_witnesses)
    report.details['premise_hits'] = str(hits)
    return report.finish()


def check_convexity(spec: BarrelSpec, cfg) -> LawReport:
    """``t·p + (1-t)·q`` stays in the barrel for members ``p``, ``q``."""
    rng = derive_rng(cfg.seed, f'convexity/{spec}')
    report = LawReport(f'convexity of {spec}')
    members = barrel_members(rng, spec, cfg, max(cfg.pool_size, 16))
    for _ in range(cfg.sample_count):
        (a, b), (c, d) = pick(rng, members), pick(rng, members)
        t = draw_unit(rng, cfg, closed=False)
        left = p_add(p_smul(t, a), p_smul(1 - t, c))
        right = p_add(p_smul(t, b), p_smul(1 - t, d))
        report.samples += 1
        if not in_barrel(spec, (left, right)):
            report.record({'p': f'({a}, {b})', 'q': f'({c}, {d})', 't': format_scalar(t)},
                          f'combination in {spec}', f'({left}, {right})', cfg.max_witnesses)
    return report.finish()


def check_scaling_identity(spec: BarrelSpec, cfg) -> LawReport:
    """``(lam*x, lam*y)`` is in ``lam*spec`` exactly when ``(x, y)`` is in ``spec``."""
    rng = derive_rng(cfg.seed, f'scaling/{spec}')
    report = LawReport(f'scaling identity for {spec}')
    members = barrel_members(rng, spec, cfg, max(cfg.pool_size, 16))
    pool, lams = p_instance(cfg).pool(rng, cfg), positive_pool(rng, cfg)
    inside = 0
    for _ in range(cfg.sample_count):
        if draw_int(rng, 0, 1):
            x, y = pick(rng, members)
        else:
            x, y = pick(rng, pool), pick(rng, pool)
        lam = pick(rng, lams)
        expected = in_barrel(spec, (x, y))
        got = scale_barrel_membership(spec, lam, (p_smul(lam, x), p_smul(lam, y)))
        report.samples += 1
        inside += expected
        if got != expected:
            report.record({'x': str(x), 'y': str(y), 'lambda': format_scalar(lam)},
                          str(expected).lower(), str(got).lower(), cfg.max_witnesses)
    report.details['inside'] = str(inside)
    return report.finish()


@dataclass(frozen=True)
class RefutationWitness:
    """``(a_j, b_j)`` lies in ``vtilde(u)`` but not in ``B(w)``."""
    u: Fraction
    w: Fraction
    j: int
    a: Fraction
    b: Fraction
    in_vtilde: bool
    not_in_b: bool

    @property
    def pair(self) -> Pair:
        return member(self.a, self.j), member(self.b, self.j)


def refute_upper_barreled(u, w) -> RefutationWitness:
    """Exhibit a pair of ``vtilde(u)`` outside ``B(w)``.

    ``j = floor(w/u) + 1`` makes ``j*u > w``; ``b = 1`` and ``a - b`` is the
    midpoint of ``(w, j*u)``.
    """
    u, w = positive(u, 'u'), positive(w, 'w')
    j = int(w // u) + 1
    b = Fraction(1)
    a = b + (w + j * u) / 2
    if not (w < j * u and w < a - b < j * u):
        raise WitnessError(f'window w < a-b < ju violated for u={u}, w={w}')
    pair = member(a, j), member(b, j)
    in_vtilde = in_barrel(vtilde(u), pair)
    not_in_b = not in_barrel(bunion(w), pair)
    if not (in_vtilde and not_in_b):
        raise WitnessError(f'refutation pair {pair} for u={u} does not verify')
    return RefutationWitness(u, w, j, a, b, in_vtilde, not_in_b)
