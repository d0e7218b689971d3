from .barrel_engine import (BarrelSpec, b1_witness, b2_witness, b2_witness_subcone,
                            barreled_witness, bsub, bunion, in_barrel, lemma21_check,
                            parse_barrel, refute_upper_barreled, vtilde)
from .cone_axioms import (ConeInstance, LawReport, check_bounded_below, check_cone_axioms,
                          check_functional_continuity, check_linearity,
                          check_nonnegativity, check_order_compat, check_v_system)
from .config import SampleConfig
from .dual_functionals import (DualFunctional, eval_dual, in_polar_analytic,
                               in_polar_sampled, inf_bar, parse_functional,
                               polar_cover_witness, scaled, zero_bar, zero_functional)
from .errors import (ConeBarrelError, ConfigError, DomainError, NotANonMemberError,
                     ParseError, UncoveredCaseError, WitnessError)
from .indexed_cone import (INF_ELEM, ZERO_ELEM, PElem, in_symmetric, lambda_iso,
                           member, p_add, p_le_v, p_order, p_smul, parse_elem,
                           symmetric_nbhd)
from .report import emit_report, load_report
from .scalars import POS_INF, ExtScalar, ext_add, ext_mul, parse_scalar
from .suites import SUITES, SuiteReport, run_suite
from .version import __version__
