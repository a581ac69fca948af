"""
Shapes of unit lattices of cubic orders Z[theta] whose unit group contains
theta and a*theta - b, computed with certified dyadic interval arithmetic.
"""

from .errors import (CertificateNotApplicable, ConsistencyError,
                     InconclusiveCertificate, NonIntegralCoefficients, NotAUnit,
                     NotTotallyReal, PrecisionError)
from .exactnum import (DEFAULT_PRECISION, DyadicInterval, enclose_rational,
                       interval_log, interval_sqrt, sqrt3)
from .polycubic import (MonicCubic, RootEnclosures, discriminant,
                        isolate_real_roots, rational_root_test, refine_root)
from .orders import (AlphaSchedule, CubicOrder, FamilyParams,
                     build_family_polynomial, build_ft, choose_k,
                     irreducible_witness, schedule_a, unit_norm_check,
                     verify_root_bound_lemma)
from .modular import (ExactPoint, UpperHalfPoint, hyperbolic_distance,
                      in_fundamental_domain, quotient_distance, reduce_exact,
                      reduce_sl2)
from .regshape import (CertStatus, cusick_certify, limit_shape,
                       log_embedding_of_unit, regulator_pair, shape_data,
                       shape_of_order, shape_via_gram_oracle, taylor_diagnostics)
from .sweeps import (SweepConfig, SweepRecord, alpha_sweep, cusp_escape_table,
                     exponent_fit, t_sweep_fixed_ab)
from .report import emit_csv, emit_json, emit_svg, read_csv

__version__ = "0.1.0"
