"""Named verification suites.

Each suite maps to one statement about the construction and expands to a
list of law checks. Checks are independent (every law derives its own
generator), so a suite may evaluate them on a thread pool; reports are always
collected in declaration order.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Dict, List

from loguru import logger
from tqdm import tqdm

from .barrel_engine import (b1_witness, b2_witness, b2_witness_subcone,
                            b_union_oracle, barreled_witness, bsub, bunion,
                            check_convexity, check_scaling_identity, in_barrel,
                            lemma21_check, refute_upper_barreled, vtilde)
from .cone_axioms import (LawReport, check_bounded_below, check_cone_axioms,
                          check_linearity, check_order_compat, check_v_system)
from .dual_functionals import (check_functional_grid, check_inf_bar_contrast,
                               check_polar_agreement, check_polar_off_index,
                               check_polar_lemmas, check_polar_monotone,
                               check_rbar_dual, check_subcone_lifting,
                               in_polar_sampled, polar_cover_witness, scaled)
from .errors import ConfigError, ConeBarrelError, UncoveredCaseError
from .indexed_cone import INF_ELEM, ZERO_ELEM, member
from .instances import (broken_commutative_instance, broken_preorder_instance,
                        broken_relation_instance, p_instance, qj_instance,
                        rbar_instance)
from .neighborhoods import (check_index_preservation, check_lambda_continuity,
                            check_lambda_inverse_discontinuity,
                            check_lambda_linear, check_subcone_union,
                            check_symmetric_closed_form,
                            check_upper_nbhd_contrast)
from .sampling import (derive_rng, draw_elem, draw_int, draw_log_grid,
                       draw_member)
from .scalars import ExtScalar, format_scalar
from .utils import Timer

__all__ = ['Suite', 'SuiteReport', 'SUITES', 'suite_names', 'run_suite']

Task = Callable[[], LawReport]


@dataclass
class SuiteReport:
    suite: str
    statement: str
    laws: List[LawReport] = field(default_factory=list)
    duration_ms: int = 0
    control: bool = False

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    @property
    def ok(self) -> bool:
        """Expected outcome: controls are expected to fail every law."""
        if self.control:
            return bool(self.laws) and not any(law.passed for law in self.laws)
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'paper_ref': self.statement,
            'pass': self.passed,
            'control': self.control,
            'ok': self.ok,
            'duration_ms': self.duration_ms,
            'laws': [law.to_dict() for law in self.laws],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SuiteReport':
        return cls(suite=data['suite'],
                   statement=data['paper_ref'],
                   laws=[LawReport.from_dict(law) for law in data['laws']],
                   duration_ms=data.get('duration_ms', 0),
                   control=data.get('control', False))


@dataclass(frozen=True)
class Suite:
    name: str
    statement: str
    tasks: Callable[[Any], List[Task]]
    control: bool = False


def _axioms(cfg) -> List[Task]:
    # P at full scale, the subcones and [0,+inf] at inner_count
    inner = cfg.copy(sample_count=min(cfg.sample_count, cfg.inner_count))
    runs = [(p_instance(cfg), cfg)]
    runs += [(qj_instance(j, inner), inner) for j in sorted({1, cfg.max_index})]
    runs.append((rbar_instance(inner), inner))
    checks = (check_cone_axioms, check_order_compat, check_v_system, check_bounded_below)
    return [partial(check, inst, run_cfg) for inst, run_cfg in runs for check in checks]


def _neighborhoods(cfg) -> List[Task]:
    radii, epsilons = draw_log_grid(20), draw_log_grid(20)
    lam_cfg = cfg.copy(sample_count=cfg.inner_count)
    tasks = [
        partial(check_index_preservation, cfg, max(1, cfg.sample_count // 10)),
        partial(check_symmetric_closed_form, cfg),
        partial(check_subcone_union, cfg),
        partial(check_upper_nbhd_contrast, cfg),
        partial(check_lambda_inverse_discontinuity, cfg, radii, epsilons),
    ]
    for j in range(1, cfg.max_index + 1):
        tasks.append(partial(check_lambda_linear, j, lam_cfg))
        tasks.append(partial(check_lambda_continuity, j, lam_cfg))
    return tasks


def _duals(cfg) -> List[Task]:
    return [
        partial(check_functional_grid, cfg),
        partial(check_subcone_lifting, cfg),
        partial(check_inf_bar_contrast, 1, cfg),
        partial(check_rbar_dual, cfg),
    ]


def _polars(cfg) -> List[Task]:
    tasks = [partial(check_polar_agreement, cfg), partial(check_polar_lemmas, cfg),
             partial(check_polar_monotone, cfg)]
    tasks += [partial(check_polar_off_index, k, cfg.w, cfg)
              for k in range(1, min(3, cfg.max_index) + 1)]
    return tasks


def _lemma21(cfg) -> List[Task]:
    specs = (vtilde(cfg.w), bsub(min(3, cfg.max_index), cfg.w), bunion(cfg.w))
    return ([partial(lemma21_check, spec, cfg) for spec in specs]
            + [partial(check_scaling_identity, spec, cfg) for spec in specs])


def check_union_oracle(cfg) -> LawReport:
    """The closed form of B against ``exists j <= max_index`` with the pair in B_j."""
    rng = derive_rng(cfg.seed, 'union-oracle')
    spec = bunion(cfg.w)
    report = LawReport(f'{spec} closed form against the union of B_j')
    for _ in range(cfg.sample_count):
        b = draw_elem(rng, cfg)
        if b.is_member and rng.integers(0, 2):
            a = member(b.value + cfg.w * draw_int(rng, 0, 2) / 2, b.index)
        else:
            a = draw_elem(rng, cfg)
        report.samples += 1
        closed, brute = in_barrel(spec, (a, b)), b_union_oracle((a, b), cfg.w, cfg.max_index)
        if closed != brute:
            report.record({'a': str(a), 'b': str(b)}, f'oracle says {brute}', str(closed),
                          cfg.max_witnesses)
    return report.finish()


def _centers(cfg, name, count, index=None):
    rng = derive_rng(cfg.seed, name)
    centers = [ZERO_ELEM, INF_ELEM, member(1, index or 1)]
    while len(centers) < count:
        centers.append(draw_member(rng, cfg, index=index))
    return centers[:max(count, 1)]


def check_b1(spec, cfg, count, index=None) -> LawReport:
    report = LawReport(f'B1 for {spec}')
    for b in _centers(cfg, f'b1-centers/{spec}', count, index):
        report.absorb(b1_witness(spec, b, cfg).report, cfg.max_witnesses)
    return report.finish()


def _non_members(cfg, spec, count, index=None):
    """Pairs outside ``spec``, fixed case boundaries first."""
    j = index or min(2, cfg.max_index)
    fixed = [(member(1, j), ZERO_ELEM), (INF_ELEM, ZERO_ELEM),
             (member(3 + cfg.w, j), member(1, j)), (INF_ELEM, member(1, j))]
    if index is None and cfg.max_index >= 3:
        fixed += [(member(1, 2), member(5, 3)), (member(1, 1), member(1, cfg.max_index))]
    rng = derive_rng(cfg.seed, f'non-members/{spec}')
    out = [p for p in fixed if not in_barrel(spec, p)]
    while len(out) < count:
        b = draw_elem(rng, cfg) if index is None else draw_member(rng, cfg, index=index)
        a = draw_elem(rng, cfg) if index is None else draw_member(rng, cfg, index=index)
        if rng.integers(0, 2) and b.is_member:
            a = member(b.value + cfg.w + draw_int(rng, 1, 3), b.index)
        if not in_barrel(spec, (a, b)):
            out.append((a, b))
    return out[:count]


def check_b2(cfg) -> LawReport:
    """Every sampled non-member of B is separated, by a functional of P*."""
    spec = bunion(cfg.w)
    report = LawReport(f'B2 for {spec}')
    cases: Dict[str, int] = {}
    for pair in _non_members(cfg, spec, cfg.outer_count):
        inputs = {'a': str(pair[0]), 'b': str(pair[1])}
        try:
            sep = b2_witness(spec, pair, cfg)
            polar_cover_witness(sep.mu)
        except ConeBarrelError as e:
            report.samples += 1
            report.record(inputs, 'verified separating functional', str(e), cfg.max_witnesses)
            continue
        cases[sep.case.value] = cases.get(sep.case.value, 0) + 1
        report.absorb(sep.report, cfg.max_witnesses)
    report.details['cases'] = ', '.join(f'{k}={cases[k]}' for k in sorted(cases))
    return report.finish()


def check_b2_subcone(j, cfg) -> LawReport:
    """Separation inside Q_j; ``(inf_inf, d_j)`` must be rejected as uncovered."""
    spec = bsub(j, cfg.w)
    report = LawReport(f'B2 for {spec} in Q_{j}')
    uncovered = 0
    for pair in _non_members(cfg, spec, max(1, cfg.outer_count // 4), index=j):
        a, b = pair
        inputs = {'a': str(a), 'b': str(b)}
        try:
            sep = b2_witness_subcone(j, cfg.w, pair, cfg, max(1, cfg.inner_count // 4))
        except UncoveredCaseError:
            uncovered += 1
            report.samples += 1
            if not (a.is_inf and b.is_member):
                report.record(inputs, 'a separation case', 'uncovered', cfg.max_witnesses)
            continue
        except ConeBarrelError as e:
            report.samples += 1
            report.record(inputs, 'verified separating functional', str(e), cfg.max_witnesses)
            continue
        report.absorb(sep.report, cfg.max_witnesses)
    report.details['uncovered'] = str(uncovered)
    return report.finish()


def _barrel_b1b2(cfg) -> List[Task]:
    spec = bunion(cfg.w)
    tasks = [
        partial(check_union_oracle, cfg),
        partial(check_convexity, spec, cfg),
        partial(check_convexity, bsub(min(2, cfg.max_index), cfg.w), cfg),
        partial(check_b1, spec, cfg, cfg.center_count),
        partial(check_b2, cfg),
    ]
    for j in range(1, min(3, cfg.max_index) + 1):
        tasks.append(partial(check_b1, bsub(j, cfg.w), cfg, max(1, cfg.center_count // 4), j))
        tasks.append(partial(check_b2_subcone, j, cfg))
    return tasks


def check_barreled(spec, cfg, count, index=None) -> LawReport:
    report = LawReport(f'{spec} absorbs a whole symmetric neighborhood')
    largest = 0
    for b in _centers(cfg, f'barreled-centers/{spec}', count, index):
        absorb = barreled_witness(spec, b, cfg)
        largest = max(largest, absorb.lam)
        report.absorb(absorb.report, cfg.max_witnesses)
    report.details['max_lambda'] = format_scalar(largest)
    return report.finish()


def _barreled(cfg) -> List[Task]:
    count = max(1, cfg.center_count // 2)
    tasks = [partial(check_barreled, bunion(cfg.w), cfg, count)]
    tasks += [partial(check_barreled, bsub(j, cfg.w), cfg, count, j)
              for j in range(1, min(3, cfg.max_index) + 1)]
    return tasks


def check_refutation(cfg) -> LawReport:
    """For every u on a log grid over (10^-3, 10^3) some pair of vtilde(u)
    lies outside B."""
    grid = draw_log_grid(cfg.u_grid_size)
    report = LawReport(f'vtilde(u) not inside {bunion(cfg.w)}')
    witnesses, largest = 0, 0
    for u in tqdm(grid, desc='refute-upper', disable=cfg.quiet, leave=False):
        report.samples += 1
        try:
            found = refute_upper_barreled(u, cfg.w)
        except ConeBarrelError as e:
            report.record({'u': format_scalar(u)}, 'verified refutation pair', str(e),
                          cfg.max_witnesses)
            continue
        witnesses += 1
        largest = max(largest, found.j)
    report.details['witnesses'] = str(witnesses)
    report.details['max_j'] = str(largest)
    return report.finish()


def _control_axioms(cfg) -> List[Task]:
    return [partial(check_cone_axioms, broken_commutative_instance(cfg), cfg),
            partial(check_order_compat, broken_preorder_instance(cfg), cfg)]


def _control_vsystem(cfg) -> List[Task]:
    return [partial(check_v_system, broken_relation_instance(cfg), cfg)]


def _control_polar(cfg) -> List[Task]:
    def constant_one(x):
        return ExtScalar(1)

    return [partial(in_polar_sampled, scaled(2, 1), 1, cfg),
            partial(check_linearity, constant_one, p_instance(cfg), cfg, name='one')]


SUITES: Dict[str, Suite] = {
    s.name: s for s in (
        Suite('axioms', 'P, Q_j and [0,+inf] are locally convex cones', _axioms),
        Suite('neighborhoods',
              'symmetric neighborhoods keep the index; Lambda: Q_j -> [0,+inf] is an '
              'isomorphism of cones whose inverse is not uniformly continuous',
              _neighborhoods),
        Suite('duals', 'the listed functionals are linear, nonnegative and continuous', _duals),
        Suite('polars', 'polars of P: closed form, fixed members and monotonicity', _polars),
        Suite('lemma21', 'absorbing the greatest element absorbs everything below it',
              _lemma21),
        Suite('barrel-b1b2', 'B_j and B are barrels', _barrel_b1b2),
        Suite('barreled', 'Q_j and P are barreled', _barreled),
        Suite('refute-upper', 'P is not upper-barreled',
              lambda cfg: [partial(check_refutation, cfg)]),
        Suite('control-axioms', 'broken addition and strict order violate the cone axioms',
              _control_axioms, control=True),
        Suite('control-vsystem', 'an empty relation is not a neighborhood system',
              _control_vsystem, control=True),
        Suite('control-polar', 'lam:2@1 is outside the polar of 1; a constant is not linear',
              _control_polar, control=True),
    )
}


def suite_names(include_controls: bool = True) -> List[str]:
    names = [n for n, s in SUITES.items() if include_controls or not s.control]
    return names + ['all']


def _run_tasks(tasks: List[Task], cfg, desc: str) -> List[LawReport]:
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(task) for task in tasks]
            return [f.result() for f in tqdm(futures, desc=desc, disable=cfg.quiet, leave=False)]
    return [task() for task in tqdm(tasks, desc=desc, disable=cfg.quiet, leave=False)]


def run_suite(name: str, cfg) -> SuiteReport:
    """Run the suite ``name`` (or every non-control suite for ``all``)."""
    cfg.validate()
    if name != 'all' and name not in SUITES:
        raise ConfigError(f'unknown suite {name!r}, choose from {", ".join(suite_names())}')
    timer = Timer()
    timer.tic()
    if name == 'all':
        selected = [s for s in SUITES.values() if not s.control]
        statement = 'every statement above'
    else:
        selected = [SUITES[name]]
        statement = selected[0].statement
    logger.info('suite {}: seed {}, {} samples per law', name, cfg.seed, cfg.sample_count)
    laws: List[LawReport] = []
    for suite in selected:
        reports = _run_tasks(suite.tasks(cfg), cfg, suite.name)
        if name == 'all':
            for report in reports:
                report.name = f'{suite.name}/{report.name}'
        laws.extend(reports)
    elapsed = timer.toc_ms()
    report = SuiteReport(suite=name, statement=statement, laws=laws,
                         duration_ms=elapsed if cfg.record_timing else 0,
                         control=name != 'all' and SUITES[name].control)
    logger.info('suite {}: {} laws, {} ({} ms)', name, len(laws),
                'ok' if report.ok else 'FAILED', elapsed)
    return report
