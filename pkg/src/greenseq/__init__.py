"""Quiver mutation, maximal green sequences, and refined DT products."""

from .bricks import (
    BrickSequence,
    Interval,
    TruncatedSearchError,
    all_intervals,
    cross_validate,
    enumerate_maximal_chains,
    hom_nonzero,
    is_forward_orthogonal,
    is_maximal_forward_orthogonal,
    linear_quiver,
)
from .framed import (
    CVector,
    FramedState,
    MutationSequence,
    NotCoframedError,
    Permutation,
    SignCoherenceError,
    frame,
)
from .qdilog import (
    LaurentPoly,
    QuantumAffineSpace,
    QuantumSeries,
    RationalFunction,
    dt_product,
    identity_check,
    q_exp,
)
from .quiver import CyclicQuiverError, Quiver, triangular_extension
from .search import (
    SearchConfig,
    SearchReport,
    StepReport,
    VerifyReport,
    count_mgs,
    enumerate_mgs,
    shortest_mgs,
    source_sequence,
    verify_sequence,
)
from .transforms import (
    InvalidSequenceError,
    RealizationFailure,
    TriangularExtensionReport,
    check_triangular_extension,
    restrict_mgs,
    rotate,
)

__version__ = "0.1.0"

__all__ = [
    "BrickSequence",
    "CVector",
    "CyclicQuiverError",
    "FramedState",
    "Interval",
    "InvalidSequenceError",
    "LaurentPoly",
    "MutationSequence",
    "NotCoframedError",
    "Permutation",
    "Quiver",
    "QuantumAffineSpace",
    "QuantumSeries",
    "RationalFunction",
    "RealizationFailure",
    "SearchConfig",
    "SearchReport",
    "SignCoherenceError",
    "StepReport",
    "TriangularExtensionReport",
    "TruncatedSearchError",
    "VerifyReport",
    "all_intervals",
    "check_triangular_extension",
    "count_mgs",
    "cross_validate",
    "dt_product",
    "enumerate_maximal_chains",
    "enumerate_mgs",
    "frame",
    "hom_nonzero",
    "identity_check",
    "is_forward_orthogonal",
    "is_maximal_forward_orthogonal",
    "linear_quiver",
    "q_exp",
    "restrict_mgs",
    "rotate",
    "shortest_mgs",
    "source_sequence",
    "triangular_extension",
    "verify_sequence",
]
