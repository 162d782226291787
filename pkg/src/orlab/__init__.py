"""orlab: Orlicz-space norms, half-plane extensions, conjugation, and
maximal operators, with runnable verification of their norm identities."""

from .errors import OrlabError
from .grids import (GridFunction, GridSpec, bump, constant, gauss,
                    poisson_slice, rect, sample, smooth_rect, tent)
from .growth import (GrowthFunction, explike, power, powerlog, qoverlog,
                     tlog, check_delta2, check_dini_domination,
                     check_equivalence, check_nabla2, check_type_bounds,
                     complementary, estimate_indices, parse_phi)
from .halfplane import (HalfPlaneField, HeightLattice, RadonMeasure,
                        cauchy_transform, conjugate_extend, poisson_extend,
                        poisson_extend_measure)
from .hilbert import (analytic_boundary, hilbert_maximal, hilbert_transform,
                      l2_pairing)
from .maximal import (CounterexampleReport, DyadicInterval, PiecewiseConstant,
                      dyadic_maximal_at, hl_maximal_at, grid_as_piecewise,
                      build_counterexample, dyadic_cover, dyadic_maximal,
                      hl_maximal, nontangential_maximal, radial_maximal,
                      stopping_intervals)
from .norms import luxemburg_norm, modular, orlicz_dual_norm
from .verify import (DiskField, VerificationReport, cayley_transfer,
                     verify_cauchy_representation, verify_duality,
                     verify_maximal_equivalences,
                     verify_measure_representation,
                     verify_poisson_representation, verify_riesz_projection)

__version__ = "0.1.0"
