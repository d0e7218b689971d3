"""The enumerated dual cone of P and polar membership.

The dual of P is represented by four families:

* ``zero``: the zero functional;
* ``lam:λ@k``: ``λ·a`` on ``a_k``, 0 on ``0_0``, ``+inf`` elsewhere;
* ``zerobar@k``: 0 on ``Q_k`` minus ``inf_inf``, ``+inf`` elsewhere;
* ``infbar``: 0 on ``0_0`` only, ``+inf`` elsewhere.

``lam:0@k`` coincides pointwise with ``zerobar@k`` and is canonicalised to it.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Optional, Tuple

from .cone_axioms import (ConeInstance, LawReport, check_functional_continuity,
                          check_linearity, check_nonnegativity)
from .errors import DomainError, ParseError, WitnessError
from .indexed_cone import PElem, in_qj, lambda_iso, member, p_le_v
from .instances import p_instance, qj_instance, rbar_instance
from .sampling import (derive_rng, draw_index, draw_int, draw_unit, pick,
                       positive_pool, related_elem)
from .scalars import (POS_INF, ExtScalar, exact, ext_add, ext_le,
                      format_scalar, parse_scalar, positive)

__all__ = [
    'FuncKind', 'DualFunctional', 'zero_functional', 'scaled', 'zero_bar',
    'inf_bar', 'parse_functional', 'eval_dual', 'eval_subcone_dual',
    'is_linear_check', 'check_nonneg', 'in_polar_analytic',
    'in_polar_sampled', 'polar_violation_witness', 'polar_cover_witness',
    'check_polar_off_index', 'RbarFunctional', 'rbar_dual_eval',
    'rbar_in_polar', 'rbar_inf_bar', 'functional_grid', 'check_functional_grid',
    'check_subcone_lifting', 'check_inf_bar_contrast', 'check_rbar_dual',
    'check_polar_agreement', 'check_polar_lemmas', 'check_polar_monotone',
]


class FuncKind(Enum):
    ZERO = 'zero'
    SCALED = 'lam'
    ZERO_BAR = 'zerobar'
    INF_BAR = 'infbar'


@dataclass(frozen=True)
class DualFunctional:
    kind: FuncKind
    lam: Fraction = Fraction(0)
    index: int = 0

    def __post_init__(self):
        if self.kind in (FuncKind.SCALED, FuncKind.ZERO_BAR) and self.index < 1:
            raise DomainError(f'{self.kind.value} needs an index >= 1')
        if self.lam < 0:
            raise DomainError(f'functional scale must be >= 0, got {self.lam}')

    @property
    def is_canonical(self) -> bool:
        return not (self.kind is FuncKind.SCALED and self.lam == 0)

    def canonical(self) -> 'DualFunctional':
        if self.is_canonical:
            return self
        return zero_bar(self.index)

    def __call__(self, x: PElem) -> ExtScalar:
        return eval_dual(self, x)

    def __str__(self):
        if self.kind is FuncKind.ZERO:
            return 'zero'
        if self.kind is FuncKind.INF_BAR:
            return 'infbar'
        if self.kind is FuncKind.ZERO_BAR:
            return f'zerobar@{self.index}'
        return f'lam:{format_scalar(self.lam)}@{self.index}'


def zero_functional() -> DualFunctional:
    return DualFunctional(FuncKind.ZERO)


def scaled(lam, k: int) -> DualFunctional:
    """The lifted functional λ̃_k, canonicalised."""
    return DualFunctional(FuncKind.SCALED, exact(lam), int(k)).canonical()


def zero_bar(k: int) -> DualFunctional:
    return DualFunctional(FuncKind.ZERO_BAR, Fraction(0), int(k))


def inf_bar() -> DualFunctional:
    return DualFunctional(FuncKind.INF_BAR)


def parse_functional(text: str) -> DualFunctional:
    """Parse ``zero``, ``infbar``, ``zerobar@j`` or ``lam:p/q@j``."""
    raw = text.strip()
    if raw == 'zero':
        return zero_functional()
    if raw == 'infbar':
        return inf_bar()
    try:
        if raw.startswith('zerobar@'):
            return zero_bar(int(raw[len('zerobar@'):]))
        if raw.startswith('lam:'):
            lam, sep, index = raw[len('lam:'):].partition('@')
            if sep:
                return scaled(parse_scalar(lam), int(index))
    except (ValueError, DomainError):
        pass
    raise ParseError(f'invalid functional {text!r}')


def eval_dual(mu: DualFunctional, x: PElem) -> ExtScalar:
    if mu.kind is FuncKind.ZERO or x.is_zero:
        return ExtScalar(0)
    if mu.kind is FuncKind.INF_BAR or x.is_inf or x.index != mu.index:
        return POS_INF
    if mu.kind is FuncKind.ZERO_BAR:
        return ExtScalar(0)
    return ExtScalar(mu.lam * x.value)


def eval_subcone_dual(mu: DualFunctional, x: PElem, j: int) -> ExtScalar:
    """The unlifted functional on Q_j (λ_j, 0̄_j, ∞̄ or 0)."""
    if not in_qj(x, j):
        raise DomainError(f'{x} is not in Q_{j}')
    if mu.kind in (FuncKind.SCALED, FuncKind.ZERO_BAR) and mu.index != j:
        raise DomainError(f'{mu} is not a functional on Q_{j}')
    if mu.kind is FuncKind.ZERO or x.is_zero:
        return ExtScalar(0)
    if x.is_inf or mu.kind is FuncKind.INF_BAR:
        return POS_INF
    return ExtScalar(mu.lam * x.value)


def _polar_instance(mu: DualFunctional, cfg) -> ConeInstance:
    inst = p_instance(cfg)
    if mu.index:
        inst.boundary = list(inst.boundary) + [member(1, mu.index), member(2, mu.index)]
    return inst


def is_linear_check(mu: DualFunctional, cfg) -> LawReport:
    return check_linearity(partial(eval_dual, mu), p_instance(cfg), cfg, name=str(mu))


def check_nonneg(mu: DualFunctional, cfg) -> LawReport:
    return check_nonnegativity(partial(eval_dual, mu), p_instance(cfg), cfg, name=str(mu))


def in_polar_analytic(mu: DualFunctional, v) -> bool:
    """Closed-form polar membership: only ``lam:λ@k`` is constrained, by
    ``λ·k·v <= 1``."""
    v = positive(v)
    if mu.kind is not FuncKind.SCALED:
        return True
    return mu.lam * mu.index * v <= 1


def polar_violation_witness(mu: DualFunctional, v) -> Optional[Tuple[PElem, PElem]]:
    """A verified pair ``a <= b + v`` with ``mu(a) > mu(b) + 1``, or None
    when ``mu`` lies in the polar of ``v``."""
    v = positive(v)
    if in_polar_analytic(mu, v):
        return None
    b = member(2, mu.index)
    a = member(b.value + mu.index * v, mu.index)
    bound = ext_add(eval_dual(mu, b), ExtScalar(1))
    if not p_le_v(a, b, v) or ext_le(eval_dual(mu, a), bound):
        raise WitnessError(f'polar witness ({a}, {b}) for {mu} at v={v} does not verify')
    return a, b


def in_polar_sampled(mu: DualFunctional, v, cfg) -> LawReport:
    """Sampled oracle for polar membership; fails with a witness pair."""
    v = positive(v)
    return check_functional_continuity(partial(eval_dual, mu), _polar_instance(mu, cfg),
                                       v, cfg, name=str(mu))


def polar_cover_witness(mu: DualFunctional) -> Fraction:
    """Some ``v > 0`` whose polar contains ``mu``."""
    if mu.kind is FuncKind.SCALED and mu.lam > 0:
        v = 1 / (mu.lam * mu.index)
    else:
        v = Fraction(1)
    if not in_polar_analytic(mu, v):
        raise WitnessError(f'{mu} not in the polar of {v}')
    return v


def check_polar_off_index(k: int, w, cfg) -> LawReport:
    """For ``a <= b + v`` with ``b`` outside ``{0_0} ∪ Q_k`` members,
    ``(1/w)~_k(b)`` is ``+inf`` and the polar inequality holds trivially."""
    w = positive(w, 'w')
    mu = scaled(1 / w, k)
    rng = derive_rng(cfg.seed, f'polar-off-index/{k}/{w}')
    report = LawReport(f'{mu} in the polar off index {k}')
    inst = p_instance(cfg)
    pool, radii = inst.pool(rng, cfg), positive_pool(rng, cfg)
    hits = 0
    for _ in range(cfg.sample_count):
        b, v = pick(rng, pool), pick(rng, radii)
        a = related_elem(rng, cfg, b, v)
        report.samples += 1
        if b.is_zero or (b.is_member and b.index == k) or not p_le_v(a, b, v):
            continue
        hits += 1
        mb = eval_dual(mu, b)
        if not mb.is_inf or not ext_le(eval_dual(mu, a), ext_add(mb, ExtScalar(1))):
            report.record({'a': str(a), 'b': str(b), 'v': format_scalar(v)},
                          'mu(b) = inf and mu(a) <= mu(b) + 1', str(mb),
                          cfg.max_witnesses)
    report.details['premise_hits'] = str(hits)
    return report.finish()


def functional_grid(rng, cfg, size: int):
    """``size`` canonical functionals mixing every family."""
    grid = [zero_functional(), inf_bar()]
    grid += [zero_bar(k) for k in range(1, cfg.max_index + 1)]
    grid += [scaled(1, k) for k in range(1, cfg.max_index + 1)]
    lams = positive_pool(rng, cfg)
    while len(grid) < size:
        roll = int(rng.integers(0, 10))
        k = int(rng.integers(1, cfg.max_index + 1))
        if roll == 0:
            grid.append(zero_bar(k))
        elif roll == 1:
            grid.append(inf_bar())
        else:
            grid.append(scaled(pick(rng, lams), k))
    return grid[:size]


@dataclass(frozen=True)
class RbarFunctional:
    """A functional in the dual of [0, +inf]: ``λ·x`` or ``0̄`` (when
    ``lam`` is None: 0 on finite values, ``+inf`` at ``+inf``)."""
    lam: Optional[Fraction] = None

    def __str__(self):
        return 'zerobar' if self.lam is None else f'lam:{format_scalar(self.lam)}'


def rbar_dual_eval(mu: RbarFunctional, x: ExtScalar) -> ExtScalar:
    if x.is_inf:
        return ExtScalar(0) if mu.lam == 0 else POS_INF
    if mu.lam is None:
        return ExtScalar(0)
    return ExtScalar(mu.lam * x.value)


def rbar_in_polar(mu: RbarFunctional, v) -> bool:
    v = positive(v)
    return mu.lam is None or mu.lam * v <= 1


def rbar_inf_bar(x: ExtScalar) -> ExtScalar:
    """0 at 0 and ``+inf`` elsewhere: linear on [0, +inf] but not continuous."""
    return ExtScalar(0) if x == ExtScalar(0) else POS_INF


def check_functional_grid(cfg) -> LawReport:
    """Linearity, nonnegativity and membership in the polar of
    ``polar_cover_witness(mu)`` for ``cfg.outer_count`` grid functionals."""
    rng = derive_rng(cfg.seed, 'functional-grid')
    grid = functional_grid(rng, cfg, cfg.outer_count)
    per = cfg.copy(sample_count=max(1, cfg.sample_count // 100))
    report = LawReport(f'{len(grid)} functionals: linear, nonnegative, continuous')
    for mu in grid:
        report.absorb(is_linear_check(mu, per), cfg.max_witnesses)
        report.absorb(check_nonneg(mu, per), cfg.max_witnesses)
        try:
            v = polar_cover_witness(mu)
        except WitnessError as e:
            report.record({'mu': str(mu)}, 'some polar contains mu', str(e), cfg.max_witnesses)
            continue
        report.absorb(in_polar_sampled(mu, v, per), cfg.max_witnesses)
    report.details['functionals'] = str(len(grid))
    return report.finish()


def check_subcone_lifting(cfg) -> LawReport:
    """On Q_j each lifted functional agrees with its unlifted version and,
    through Λ, with ``(λ·j)·x`` or ``zerobar`` on [0, +inf]."""
    rng = derive_rng(cfg.seed, 'subcone-lifting')
    report = LawReport('lifted functionals restricted to Q_j')
    pools = {j: qj_instance(j, cfg).pool(rng, cfg) for j in range(1, cfg.max_index + 1)}
    lams = positive_pool(rng, cfg)
    for _ in range(cfg.sample_count):
        j = draw_index(rng, cfg)
        x, lam = pick(rng, pools[j]), pick(rng, lams)
        image = lambda_iso(j, x)
        pairs = ((scaled(lam, j), RbarFunctional(lam * j)),
                 (zero_bar(j), RbarFunctional()),
                 (zero_functional(), RbarFunctional(Fraction(0))),
                 (inf_bar(), None))
        for mu, counterpart in pairs:
            lifted, local = eval_dual(mu, x), eval_subcone_dual(mu, x, j)
            transported = rbar_inf_bar(image) if counterpart is None \
                else rbar_dual_eval(counterpart, image)
            if not lifted == local == transported:
                report.record({'mu': str(mu), 'x': str(x), 'j': str(j)},
                              f'{lifted} on P, on Q_{j} and through Lambda',
                              f'{local}, {transported}', cfg.max_witnesses, key=mu.kind.value)
        report.samples += 1
    return report.finish()


def check_inf_bar_contrast(j: int, cfg) -> LawReport:
    """``infbar`` is continuous on Q_j, where v(0_0) = {0_0}, while its
    counterpart on [0, +inf] is not."""
    v = Fraction(1)
    report = LawReport(f'infbar continuous on Q_{j} but not on [0,+inf]')
    report.absorb(check_functional_continuity(partial(eval_dual, inf_bar()), qj_instance(j, cfg),
                                              v, cfg, name='infbar'), cfg.max_witnesses)
    on_rbar = check_functional_continuity(rbar_inf_bar, rbar_instance(cfg), v, cfg,
                                          name='infbar')
    report.samples += on_rbar.samples
    if on_rbar.passed:
        report.record({'v': format_scalar(v)}, 'a violation on [0,+inf]', 'none found',
                      cfg.max_witnesses)
    else:
        first = on_rbar.violations[0].inputs
        report.details['rbar_witness'] = ', '.join(f'{k}={first[k]}' for k in sorted(first))
    return report.finish()


def check_rbar_dual(cfg) -> LawReport:
    """``λ·x`` and ``zerobar`` are linear, nonnegative and continuous on
    [0, +inf], lying in the polar of ``v`` when ``λ·v <= 1``."""
    rng = derive_rng(cfg.seed, 'rbar-dual')
    report = LawReport('dual of [0,+inf]')
    inst = rbar_instance(cfg)
    per = cfg.copy(sample_count=max(1, cfg.sample_count // 100))
    lams = positive_pool(rng, cfg)
    funcs = [RbarFunctional(), RbarFunctional(Fraction(0))]
    funcs += [RbarFunctional(pick(rng, lams)) for _ in range(cfg.max_index)]
    for mu in funcs:
        ev = partial(rbar_dual_eval, mu)
        report.absorb(check_linearity(ev, inst, per, name=str(mu)), cfg.max_witnesses)
        report.absorb(check_nonnegativity(ev, inst, per, name=str(mu)), cfg.max_witnesses)
        v = 1 / mu.lam if mu.lam else Fraction(1)
        if not rbar_in_polar(mu, v):
            report.record({'mu': str(mu), 'v': format_scalar(v)}, 'mu in the polar of v',
                          'false', cfg.max_witnesses)
        report.absorb(check_functional_continuity(ev, inst, v, per, name=str(mu)),
                      cfg.max_witnesses)
    return report.finish()


def check_polar_agreement(cfg) -> LawReport:
    """``in_polar_analytic`` against ``in_polar_sampled`` for
    ``cfg.outer_count`` pairs ``(mu, v)``, ``cfg.inner_count`` samples each.

    Every closed-form refusal must come with a verified violating pair.
    """
    rng = derive_rng(cfg.seed, 'polar-agreement')
    report = LawReport('polar membership: closed form against sampling')
    inner = cfg.copy(sample_count=cfg.inner_count)
    radii = positive_pool(rng, cfg)
    refuted = 0
    for mu in functional_grid(rng, cfg, cfg.outer_count):
        if mu.kind is FuncKind.SCALED and draw_int(rng, 0, 3) == 0:
            v = 1 / (mu.lam * mu.index)
        else:
            v = pick(rng, radii)
        inputs = {'mu': str(mu), 'v': format_scalar(v)}
        analytic = in_polar_analytic(mu, v)
        sampled = in_polar_sampled(mu, v, inner)
        report.samples += 1
        if analytic != sampled.passed:
            report.record(inputs, f'sampled outcome {analytic}', str(sampled.passed),
                          cfg.max_witnesses, key='agree')
        if analytic:
            continue
        try:
            polar_violation_witness(mu, v)
            refuted += 1
        except WitnessError as e:
            report.record(inputs, 'verified violating pair', str(e), cfg.max_witnesses,
                          key='witness')
    report.details['refuted'] = str(refuted)
    return report.finish()


def check_polar_lemmas(cfg) -> LawReport:
    """``zero``, ``zerobar@k`` and ``infbar`` lie in every polar;
    ``lam:(1/w)@k`` lies in the polar of ``w/k`` and in no wider one."""
    rng = derive_rng(cfg.seed, 'polar-lemmas')
    report = LawReport('listed functionals lie in the stated polars')
    per = cfg.copy(sample_count=max(1, cfg.inner_count // 4))
    radii = positive_pool(rng, cfg)
    for k in range(1, cfg.max_index + 1):
        v = pick(rng, radii)
        for mu in (zero_functional(), zero_bar(k), inf_bar()):
            report.samples += 1
            sampled = in_polar_sampled(mu, v, per)
            if not (in_polar_analytic(mu, v) and sampled.passed):
                report.record({'mu': str(mu), 'v': format_scalar(v)}, 'mu in the polar of v',
                              'false', cfg.max_witnesses, key=f'always/{mu.kind.value}')
        w = pick(rng, radii)
        mu, radius = scaled(1 / w, k), w / k
        report.samples += 1
        inputs = {'mu': str(mu), 'v': format_scalar(radius)}
        if not (in_polar_analytic(mu, radius) and in_polar_sampled(mu, radius, per).passed):
            report.record(inputs, 'mu in the polar of w/k', 'false', cfg.max_witnesses,
                          key='scaled')
        try:
            wider = polar_violation_witness(mu, radius * Fraction(9, 8))
        except WitnessError as e:
            wider = str(e)
        if not isinstance(wider, tuple):
            report.record(inputs, 'a violating pair for 9/8 * w/k', str(wider),
                          cfg.max_witnesses, key='tight')
    return report.finish()


def check_polar_monotone(cfg) -> LawReport:
    """``u <= v`` and ``mu`` in the polar of ``v`` give ``mu`` in the polar of ``u``."""
    rng = derive_rng(cfg.seed, 'polar-monotone')
    report = LawReport('smaller radii have larger polars')
    grid = functional_grid(rng, cfg, cfg.outer_count)
    radii = positive_pool(rng, cfg)
    for _ in range(cfg.sample_count):
        mu, v = pick(rng, grid), pick(rng, radii)
        u = v * draw_unit(rng, cfg, closed=False)
        report.samples += 1
        if in_polar_analytic(mu, v) and not in_polar_analytic(mu, u):
            report.record({'mu': str(mu), 'v': format_scalar(v), 'u': format_scalar(u)},
                          'mu in the polar of u', 'false', cfg.max_witnesses)
    return report.finish()
