"""Sampler-driven law checks for preordered cones with a neighborhood system.

A :class:`ConeInstance` bundles a carrier sampler with the cone operations,
the preorder and the relation ``x <= y + v``. Each ``check_*`` function
draws ``cfg.sample_count`` tuples from seeded pools (boundary elements
always included) and returns a :class:`LawReport`; violations are data,
never exceptions.
"""
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from loguru import logger

from .sampling import (derive_rng, draw_unit, pick, positive_pool,
                       scalar_pool)
from .scalars import ExtScalar, ext_add, ext_le, ext_mul, format_scalar

__all__ = [
    'ConeInstance', 'Violation', 'LawReport', 'check_cone_axioms',
    'check_order_compat', 'check_v_system', 'check_bounded_below',
    'check_functional_continuity', 'check_linearity', 'check_nonnegativity',
]


@dataclass
class ConeInstance:
    """A carrier together with its cone structure.

    ``v_relation(x, y, v)`` reads ``x <= y + v`` and is only queried with
    ``v > 0``. ``related(rng, cfg, y, v)`` optionally proposes an ``x`` that
    is likely to satisfy the relation; without it the checker falls back to
    scaling ``y`` down.
    """
    name: str
    sample: Callable[[Any, Any], Any]
    add: Callable[[Any, Any], Any]
    scale: Callable[[Fraction, Any], Any]
    zero: Any
    preorder: Callable[[Any, Any], bool]
    v_relation: Callable[[Any, Any, Fraction], bool]
    boundary: Sequence[Any] = ()
    related: Optional[Callable] = None
    eq: Callable[[Any, Any], bool] = operator.eq
    render: Callable[[Any], str] = str

    def pool(self, rng, cfg) -> List[Any]:
        return list(self.boundary) + [self.sample(rng, cfg) for _ in range(cfg.pool_size)]

    def propose(self, rng, cfg, y, v):
        if self.related is not None:
            return self.related(rng, cfg, y, v)
        return self.scale(2 * draw_unit(rng, cfg), y)


@dataclass
class Violation:
    inputs: Dict[str, str]
    expected: str
    got: str

    def to_dict(self) -> Dict[str, Any]:
        return {'inputs': dict(self.inputs), 'expected': self.expected, 'got': self.got}


@dataclass
class LawReport:
    """Outcome of one law over ``samples`` sampled tuples.

    ``violations`` keeps the first witness of each failing sub-law (at most
    ``max_witnesses``), ``violation_count`` counts every failure.
    """
    name: str
    samples: int = 0
    violations: List[Violation] = field(default_factory=list)
    violation_count: int = 0
    inconclusive: int = 0
    details: Dict[str, str] = field(default_factory=dict)
    _seen: set = field(default_factory=set, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    @property
    def status(self) -> str:
        if not self.passed:
            return 'fail'
        if self.inconclusive:
            return 'inconclusive'
        return 'pass'

    def record(self, inputs: Dict[str, str], expected: str, got: str,
               limit: int = 5, key: Optional[str] = None):
        self.violation_count += 1
        key = expected if key is None else key
        if key in self._seen or len(self.violations) >= max(limit, 1):
            return
        self._seen.add(key)
        self.violations.append(Violation(inputs, expected, got))

    def finish(self) -> 'LawReport':
        if self.passed:
            logger.debug('{}: {} samples, pass', self.name, self.samples)
        else:
            logger.warning('{}: {} violations in {} samples, first {}',
                           self.name, self.violation_count, self.samples,
                           self.violations[0].to_dict())
        return self

    def absorb(self, other: 'LawReport', limit: int = 5) -> 'LawReport':
        """Fold ``other`` into this report, keeping at most ``limit`` witnesses."""
        self.samples += other.samples
        self.violation_count += other.violation_count
        self.inconclusive += other.inconclusive
        for v in other.violations:
            if len(self.violations) >= max(limit, 1):
                break
            self.violations.append(v)
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'samples': self.samples,
            'status': self.status,
            'violation_count': self.violation_count,
            'inconclusive': self.inconclusive,
            'details': dict(self.details),
            'violations': [v.to_dict() for v in self.violations],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LawReport':
        return cls(name=data['name'],
                   samples=data['samples'],
                   violations=[Violation(dict(v['inputs']), v['expected'], v['got'])
                               for v in data.get('violations', [])],
                   violation_count=data.get('violation_count', len(data.get('violations', []))),
                   inconclusive=data.get('inconclusive', 0),
                   details=dict(data.get('details', {})))


def _fmt(inst: ConeInstance, **values) -> Dict[str, str]:
    out = {}
    for k, v in values.items():
        out[k] = format_scalar(v) if isinstance(v, Fraction) else inst.render(v)
    return out


def check_cone_axioms(inst: ConeInstance, cfg) -> LawReport:
    """Monoid laws, both distributivities, ``(rs)x = r(sx)``, ``1x = x``,
    ``0x = 0``."""
    rng = derive_rng(cfg.seed, f'{inst.name}/cone-axioms')
    report = LawReport(f'{inst.name}: cone axioms')
    pool, scalars = inst.pool(rng, cfg), scalar_pool(rng, cfg)
    add, scale, eq, zero = inst.add, inst.scale, inst.eq, inst.zero
    for _ in range(cfg.sample_count):
        x, y, z = pick(rng, pool), pick(rng, pool), pick(rng, pool)
        r, s = pick(rng, scalars), pick(rng, scalars)
        laws = (
            ('x+(y+z) = (x+y)+z', add(x, add(y, z)), add(add(x, y), z)),
            ('x+y = y+x', add(x, y), add(y, x)),
            ('x+0 = x', add(x, zero), x),
            ('r(x+y) = rx+ry', scale(r, add(x, y)), add(scale(r, x), scale(r, y))),
            ('(r+s)x = rx+sx', scale(r + s, x), add(scale(r, x), scale(s, x))),
            ('(rs)x = r(sx)', scale(r * s, x), scale(r, scale(s, x))),
            ('1x = x', scale(Fraction(1), x), x),
            ('0x = 0', scale(Fraction(0), x), zero),
        )
        for law, lhs, rhs in laws:
            if not eq(lhs, rhs):
                report.record(_fmt(inst, x=x, y=y, z=z, r=r, s=s),
                              f'{law}: {inst.render(rhs)}', inst.render(lhs),
                              cfg.max_witnesses, key=law)
        report.samples += 1
    return report.finish()


def check_order_compat(inst: ConeInstance, cfg) -> LawReport:
    """Reflexivity, transitivity and compatibility of the preorder with
    addition and scaling."""
    rng = derive_rng(cfg.seed, f'{inst.name}/order-compat')
    report = LawReport(f'{inst.name}: preorder compatibility')
    pool, scalars = inst.pool(rng, cfg), scalar_pool(rng, cfg)
    le, add, scale = inst.preorder, inst.add, inst.scale
    hits = 0
    for _ in range(cfg.sample_count):
        y, z, r = pick(rng, pool), pick(rng, pool), pick(rng, scalars)
        x = scale(draw_unit(rng, cfg), y) if rng.integers(0, 2) else pick(rng, pool)
        if not le(y, y):
            report.record(_fmt(inst, x=y), 'x <= x', 'false', cfg.max_witnesses)
        c = pick(rng, pool)
        b = scale(draw_unit(rng, cfg), c)
        a = scale(draw_unit(rng, cfg), b)
        if le(a, b) and le(b, c) and not le(a, c):
            report.record(_fmt(inst, a=a, b=b, c=c), 'a <= b <= c implies a <= c',
                          'false', cfg.max_witnesses)
        if le(x, y):
            hits += 1
            if not le(add(x, z), add(y, z)):
                report.record(_fmt(inst, x=x, y=y, z=z), 'x <= y implies x+z <= y+z',
                              f'{inst.render(add(x, z))} > {inst.render(add(y, z))}',
                              cfg.max_witnesses)
            if not le(scale(r, x), scale(r, y)):
                report.record(_fmt(inst, x=x, y=y, r=r), 'x <= y implies rx <= ry',
                              f'{inst.render(scale(r, x))} > {inst.render(scale(r, y))}',
                              cfg.max_witnesses)
        report.samples += 1
    report.details['ordered_pairs'] = str(hits)
    return report.finish()


def check_v_system(inst: ConeInstance, cfg) -> LawReport:
    """Monotonicity in v, composition ``v + u`` and order embedding of the
    relation ``x <= y + v``. Directedness and closure of the radii are
    structural: the radii are the positive rationals, directed by ``min``."""
    rng = derive_rng(cfg.seed, f'{inst.name}/v-system')
    report = LawReport(f'{inst.name}: neighborhood system')
    pool, radii = inst.pool(rng, cfg), positive_pool(rng, cfg)
    rel, le = inst.v_relation, inst.preorder
    for _ in range(cfg.sample_count):
        y, z = pick(rng, pool), pick(rng, pool)
        v, u = pick(rng, radii), pick(rng, radii)
        directed = min(u, v)
        if not (0 < directed <= u and directed <= v and u + v > 0):
            report.record({'u': format_scalar(u), 'v': format_scalar(v)},
                          'radii directed and closed', 'false', cfg.max_witnesses)
        x = inst.propose(rng, cfg, y, v)
        if rel(x, y, v) and not rel(x, y, v + u):
            report.record(_fmt(inst, x=x, y=y, v=v, u=v + u),
                          'x <= y + v and v <= u implies x <= y + u', 'false',
                          cfg.max_witnesses)
        mid = inst.propose(rng, cfg, z, u)
        first = inst.propose(rng, cfg, mid, v)
        if rel(first, mid, v) and rel(mid, z, u) and not rel(first, z, v + u):
            report.record(_fmt(inst, x=first, y=mid, z=z, v=v, u=u),
                          'x <= y + v and y <= z + u implies x <= z + (v+u)',
                          'false', cfg.max_witnesses)
        below = inst.scale(draw_unit(rng, cfg), y)
        for a, b in ((y, y), (below, y), (x, y)):
            if le(a, b) and not rel(a, b, v):
                report.record(_fmt(inst, x=a, y=b, v=v),
                              'x <= y implies x <= y + v', 'false',
                              cfg.max_witnesses)
        report.samples += 1
    report.details['directed'] = 'min(u, v)'
    return report.finish()


def check_bounded_below(inst: ConeInstance, cfg) -> LawReport:
    """Search ``rho`` in 1, 2, 4, ... up to ``cfg.rho_cap`` with
    ``0 <= a + rho*v``. An exhausted search is inconclusive, not a failure."""
    rng = derive_rng(cfg.seed, f'{inst.name}/bounded-below')
    report = LawReport(f'{inst.name}: bounded below')
    pool, radii = inst.pool(rng, cfg), positive_pool(rng, cfg)
    largest = 0
    for _ in range(cfg.sample_count):
        a, v = pick(rng, pool), pick(rng, radii)
        rho, found = 1, None
        while rho <= cfg.rho_cap:
            if inst.v_relation(inst.zero, a, rho * v):
                found = rho
                break
            rho *= 2
        if found is None:
            report.inconclusive += 1
        else:
            largest = max(largest, found)
        report.samples += 1
    if report.inconclusive:
        logger.warning('{}: rho search exhausted (cap {}) for {} samples',
                       report.name, cfg.rho_cap, report.inconclusive)
    report.details['max_rho'] = str(largest)
    return report.finish()


def check_functional_continuity(mu_eval: Callable[[Any], ExtScalar],
                                inst: ConeInstance, v: Fraction, cfg,
                                name: str = 'mu') -> LawReport:
    """``a <= b + v`` implies ``mu(a) <= mu(b) + 1`` over sampled pairs."""
    rng = derive_rng(cfg.seed, f'{inst.name}/continuity/{name}/{v}')
    report = LawReport(f'{inst.name}: continuity of {name} at v={format_scalar(v)}')
    pool = inst.pool(rng, cfg)
    one, hits = ExtScalar(1), 0
    for _ in range(cfg.sample_count):
        b = pick(rng, pool)
        a = inst.propose(rng, cfg, b, v)
        if inst.v_relation(a, b, v):
            hits += 1
            ma, mb = mu_eval(a), mu_eval(b)
            if not ext_le(ma, ext_add(mb, one)):
                report.record(_fmt(inst, a=a, b=b, v=v),
                              f'{name}(a) <= {name}(b) + 1',
                              f'{ma} > {ext_add(mb, one)}', cfg.max_witnesses,
                              key='continuity')
        report.samples += 1
    report.details['related_pairs'] = str(hits)
    return report.finish()


def check_linearity(mu_eval: Callable[[Any], ExtScalar], inst: ConeInstance,
                    cfg, name: str = 'mu') -> LawReport:
    """``mu(x+y) = mu(x)+mu(y)`` and ``mu(r x) = r mu(x)`` with ``0*inf = 0``."""
    rng = derive_rng(cfg.seed, f'{inst.name}/linearity/{name}')
    report = LawReport(f'{inst.name}: linearity of {name}')
    pool, scalars = inst.pool(rng, cfg), scalar_pool(rng, cfg)
    for _ in range(cfg.sample_count):
        x, y, r = pick(rng, pool), pick(rng, pool), pick(rng, scalars)
        lhs, rhs = mu_eval(inst.add(x, y)), ext_add(mu_eval(x), mu_eval(y))
        if lhs != rhs:
            report.record(_fmt(inst, x=x, y=y), f'{name}(x+y) = {rhs}', str(lhs),
                          cfg.max_witnesses, key='additive')
        lhs, rhs = mu_eval(inst.scale(r, x)), ext_mul(r, mu_eval(x))
        if lhs != rhs:
            report.record(_fmt(inst, x=x, r=r), f'{name}(rx) = {rhs}', str(lhs),
                          cfg.max_witnesses, key='homogeneous')
        report.samples += 1
    return report.finish()


def check_nonnegativity(mu_eval: Callable[[Any], ExtScalar], inst: ConeInstance,
                        cfg, name: str = 'mu') -> LawReport:
    """``mu(0) = 0`` and ``mu(x) >= 0``, together with the premise
    ``0 <= x + t*v`` for every sampled radius that forces it."""
    rng = derive_rng(cfg.seed, f'{inst.name}/nonneg/{name}')
    report = LawReport(f'{inst.name}: nonnegativity of {name}')
    pool, radii = inst.pool(rng, cfg), positive_pool(rng, cfg)
    zero = ExtScalar(0)
    if mu_eval(inst.zero) != zero:
        report.record({'x': inst.render(inst.zero)}, f'{name}(0) = 0',
                      str(mu_eval(inst.zero)), cfg.max_witnesses)
    for _ in range(cfg.sample_count):
        x, v = pick(rng, pool), pick(rng, radii)
        if not inst.v_relation(inst.zero, x, v):
            report.record(_fmt(inst, x=x, v=v), '0 <= x + v', 'false',
                          cfg.max_witnesses)
        value = mu_eval(x)
        if not isinstance(value, ExtScalar) or not ext_le(zero, value):
            report.record(_fmt(inst, x=x), f'{name}(x) >= 0', str(value),
                          cfg.max_witnesses)
        report.samples += 1
    return report.finish()
