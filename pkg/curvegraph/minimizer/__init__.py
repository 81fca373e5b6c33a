# flake8: noqa: F401
from .checks import one_point_union, one_point_union_check, trivalent_formula_check
from .families import (
    CATALOG,
    FAMILIES,
    CatalogEntry,
    Family,
    catalog,
    catalog_bridge,
    catalog_entry,
    catalog_value,
    families_with_minimum,
    generate,
    parse_family,
)
from .flat import (
    FlatResult,
    HeightAssignment,
    bridge_number,
    check_budget,
    flat_min,
    flat_min_exhaustive,
    mu_of_assignment,
    nlm_of_assignment,
)
