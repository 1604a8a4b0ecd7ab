"""Exact arithmetic on rank-2 polarized K3 Picard lattices."""

from .lattice import (
    F,
    H,
    ZERO,
    ConeData,
    DivClass,
    PolarizedLattice,
    classes_under,
    cone_data,
    deg_h,
    elliptic_pencil_classes,
    format_class,
    intersect,
    is_nef,
    is_primitive,
    minus_two_classes,
    square,
)
from .cohomology import (
    CohomologyVector,
    InvariantError,
    PencilKind,
    PositivityReport,
    cohomology,
    euler_char,
    h0,
    positivity,
)
from .clifford import CliffordReport, check_a0_properties, clifford_index, enumerate_A
from .acm import (
    AcmVerdict,
    classify_acm_initialized,
    is_acm,
    quartic_acm_predicate,
    quartic_splitting_types,
)
from .lm import (
    DmCandidate,
    InvalidMarkerError,
    LmInvariants,
    PencilMarker,
    StabilityTag,
    StabilityVerdict,
    destabilizer_search,
    dm_candidates,
    gonality_pencil_classes,
    lm_invariants,
    stability_classify,
)
from .verify import ALL_CHECKS, CheckResult, SweepConfig, run_sweep, valid_pairs

__version__ = "0.1.0"
