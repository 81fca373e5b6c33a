# flake8: noqa: F401
from .fibers import (
    FiberCount,
    ProjectionProfile,
    fiber_count,
    gap_levels,
    profile,
    width_in_direction,
)
from .heights import (
    CriticalPoint,
    Genericity,
    critical_points,
    graph_seed,
    is_generic,
    mu,
    mu_many,
    nlm,
    nlm_profile,
    perturb_direction,
    updown_degrees,
)
