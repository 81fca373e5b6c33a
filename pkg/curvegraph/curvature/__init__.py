# flake8: noqa: F401
from .arrangement import Cell, Circle, SphericalArrangement, build_arrangement, chi_sum
from .graph import (
    FUNCTIONALS,
    CurvatureReport,
    circuit_curvature,
    ctc_total,
    curvature_report,
    cylindrical_shrink,
    joint_angle_sum,
    joint_exterior_angles,
    ntc_total,
    subadditivity_defect,
    tc_total,
    vtc_total,
)
from .vertex import (
    VertexReport,
    cone_value,
    ctc_vertex,
    exterior_angles,
    ntc_from_arrangement,
    ntc_vertex,
    ntc_vertex_mc,
    tc_vertex,
    vertex_report,
    vtc_vertex,
)
