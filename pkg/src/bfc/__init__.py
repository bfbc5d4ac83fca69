"""Exact complexity measures of Boolean functions and the VC-dimension/degree trade-offs."""

from .algebraic import F2Polynomial, anf, f2_degree, monomial_witness, weight_bounded_degree_check
from .census import CensusRow, SuiteReport, equality_census, verify_exhaustive, verify_sampled
from .constructions import (
    SubcubeSpec,
    counterexample_n15,
    is_subcube,
    paper_example_n4,
    random_function,
    random_low_f2_degree,
    subcube,
)
from .core import (
    BooleanFunction,
    PointAssignment,
    SetFamily,
    from_support,
    loads,
    dumps,
    read_function,
    support,
    write_function,
    zeta_subset_f2,
    zeta_superset_parity,
)
from .errors import (
    BFCError,
    DimensionCap,
    EmptyFamily,
    FormatError,
    InvalidSpec,
    PreconditionViolated,
    WitnessNotFound,
    ZeroFunction,
)
from .measures import (
    GraphStats,
    certificate_complexity,
    decision_tree_depth,
    one_inclusion_stats,
    sensitivity,
    tradeoff_report,
)
from .spectral import FourierSpectrum, check_uncertainty, degree, fourier_degree, spectral_support_size, wht
from .vc import (
    DesignCheckReport,
    ShatterWitness,
    extract_shattered_from_design,
    is_shattered,
    null_design_check_containment,
    null_design_check_disjoint,
    null_design_check_trace,
    sauer_check,
    vc,
    vc_dimension,
)

__version__ = "0.1.0"
