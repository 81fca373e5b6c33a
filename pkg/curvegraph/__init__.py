# flake8: noqa: F401 # pylint: disable=E0401
from .__config__ import __version__
from .crofton import crofton_ntc, mu_heatmap
from .curvature import (
    circuit_curvature,
    ctc_vertex,
    curvature_report,
    ntc_total,
    ntc_vertex,
    tc_vertex,
    vtc_vertex,
)
from .double_cover import double, euler_circuit, nlm_from_circuit
from .graph import (
    CombinatorialGraph,
    HalfInt,
    SpatialGraph,
    VertexStar,
    load_graph,
    read_graph,
    save_graph,
    tangent_star,
)
from .minimizer import bridge_number, flat_min, generate, mu_of_assignment
from .projection import mu, nlm, profile
