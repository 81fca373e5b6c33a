"""This file contains all package constants."""

__version__ = "0.3.1"

# Geometry
SEPARATION_TOL = 1e-9
UNIT_TOL = 1e-12
DERIVATIVE_TOL = 1e-12
MERGE_TOL = 1e-9

# Non-generic directions
PERTURB_ANGLE = 1e-7
PERTURB_RETRIES = 8
MAX_REJECTION_RATE = 1e-3

# Flat-map search
BRUTE_FORCE_MAX_VERTICES = 10
EXHAUSTIVE_MAX_VERTICES = 6
EXHAUSTIVE_MAX_EDGES = 8
MAX_ARGMIN = 64
BRUTE_FORCE_MAX_EVALUATIONS = 29_030_400  # 10! * 8
PERMUTATION_BLOCK = 40_320

# Sphere sampling
CTC_SCAN_POINTS = 10_000
MC_BLOCK = 65_536

TOLERANCES = (
    "SEPARATION_TOL",
    "UNIT_TOL",
    "DERIVATIVE_TOL",
    "MERGE_TOL",
    "PERTURB_ANGLE",
    "MAX_REJECTION_RATE",
)
