# flake8: noqa: F401
from .half_int import HalfInt
from .io import graph_from_dict, graph_to_dict, load_graph, read_graph, save_graph, write_graph
from .refine import (
    ParametricArc,
    circle_arc,
    glue,
    inscribe,
    refine_segment,
    subdivide,
    wild_curve_arc,
    wild_height,
)
from .spatial_graph import (
    CombinatorialGraph,
    Edge,
    PolylineArrays,
    SpatialGraph,
    VertexStar,
    as_direction,
    as_point,
    tangent_star,
)
from .random_graphs import random_embedding, random_multigraph, random_star, random_trivalent
