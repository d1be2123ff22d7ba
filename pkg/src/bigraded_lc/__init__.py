"""Exact computation of graded local cohomology components over the
x-subring of a bigraded polynomial ring, with regularity, dimension and
annihilation diagnostics."""

from .cohomology import (
    BigradedIdeal,
    CohomologyComponent,
    annihilation_exponent,
    bigraded_resolution,
    cohomology_component,
    content_ideal,
    dual_basis_count,
    induced_complex,
    load_ideal,
    monomial_top_predictor,
    parse_ideal_file,
    predicted_reg_regular_sequence,
    predicted_reg_two_summands,
    regsum_check,
    top_component_presentation,
)
from .errors import (
    BigradedError,
    CompositionNonzero,
    HypothesisViolated,
    NotBihomogeneous,
    NotFound,
    NotMonomial,
    NotMultigraded,
    NotStabilized,
    ParseError,
    ZeroModule,
    ZeroPolynomial,
)
from .groebner import (
    Ideal,
    Vec,
    buchberger,
    exact_divide,
    ideal_power,
    normal_form,
    pair_gcd,
    syzygy_basis,
)
from .hilbert import HilbertSeries, hilbert_series, krull_dimension
from .oracle import KoszulOracle, ext_oracle
from .presentations import (
    GradedPresentation,
    free_presentation,
    homology_presentation,
    kernel_of_mult,
    quotient_presentation,
)
from .resolutions import (
    BettiTable,
    FreeResolution,
    betti_hilbert_identity,
    betti_numbers,
    check_lcm_bound,
    minimal_resolution,
    multigraded_shifts,
    presentation_of_monomial_quotient,
    regularity,
)
from .rings import (
    Field,
    Poly,
    PolyRing,
    bidegree_of,
    content_coefficients,
    parse_poly,
    poly_str,
    specialize,
)

__version__ = "0.1.0"
