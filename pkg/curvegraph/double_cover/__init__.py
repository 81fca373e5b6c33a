# flake8: noqa: F401
from .circuit import (
    COPIES,
    Circuit,
    DoubledGraph,
    Traversal,
    check_closed,
    check_double_cover,
    double,
    euler_circuit,
)
from .passages import (
    Passage,
    circuit_local_maxima,
    nlm_from_circuit,
    passages,
    vertex_passage_curvature,
)
