"""Evaluation codes on minimal Hirzebruch surfaces over small finite fields.

Construct the code for a surface parameter eta and bidegree (dT, dX) over
GF(q), compute its parameters [n, k, d] by closed-form combinatorics, and
cross-check every closed form with brute-force oracles (matrix rank and
exhaustive or witness-certified minimum-weight search).
"""

from .algebra import (
    DistanceBoundReport,
    compare,
    distance_bound,
    divisibility_count,
    leading_monomial,
    order_key,
    project,
    project_poly,
    special_kernel_element,
)
from .code import (
    DEFAULT_BUDGET,
    CodeParameters,
    LinearCode,
    build_code,
    codeword_weight,
    curve_point_bound,
    dimension_closed_form,
    dimension_oracle,
    distance_closed_form,
    exhaustive_min_weight,
    min_distance,
    puncture_fiber,
    puncture_torus,
    rank_over_field,
    witness_polynomial,
)
from .errors import (
    BudgetExceededWithoutWitnessMatch,
    CaseOutOfRange,
    DivisionByZero,
    EmptyGradedPiece,
    EtaOneUnsupported,
    FieldTooLarge,
    HirzecodeError,
    MixedFields,
    NonPrimeCharacteristic,
    NotARepresentative,
    OutsidePolygon,
    PrecedingConditionsViolated,
    SpecialRegimeRequired,
    ZeroPolynomial,
)
from .gf import FieldElement, FieldSpec, elements, field_from_order, field_new
from .lattice import (
    LatticePoint,
    PolygonSummary,
    equivalent,
    polygon_points,
    polygon_summary,
    reduce,
    representatives,
    special_regime,
)
from .surface import (
    Bidegree,
    CoxPolynomial,
    ExponentVector,
    SurfacePoint,
    evaluate,
    evaluate_vector,
    evaluation_matrix,
    monomial_basis,
    monomial_from_lattice,
    rational_points,
)

__all__ = [name for name in dir() if not name.startswith("_")]
