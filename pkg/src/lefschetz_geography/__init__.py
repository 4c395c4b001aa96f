"""Exact invariants, slope bounds and geography sweeps for hyperelliptic
genus-g Lefschetz fibrations over the sphere."""

from .checks import (
    CHECK_IDS,
    REGISTRY,
    CheckResult,
    HypothesisFlags,
    Verdict,
    min_nonseparating,
    run_all,
    run_check,
)
from .enumeration import (
    DiophantineFamily,
    RegionLabel,
    SweepBox,
    SweepReport,
    classify_region_g2,
    enumerate_admissible,
    g2_boundary_ratio_sequence,
    solve_g2_system,
    solve_g3_system,
    verify_theorems,
)
from .invariants import (
    FibrationNumerics,
    InvalidFibration,
    InvariantSet,
    compute_invariants,
    signature,
    signature_from_slope,
    slope,
    slope_alternate_forms,
    weighted_separating_sum,
)
from .reports import GeographyPoint, emit_geography, geography_points

__version__ = "0.1.0"
