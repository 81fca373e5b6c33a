import math
import unittest

import numpy as np

from curvegraph.curvature import (
    circuit_curvature,
    ctc_total,
    curvature_report,
    cylindrical_shrink,
    joint_angle_sum,
    ntc_total,
    subadditivity_defect,
    tc_total,
    vtc_total,
)
from curvegraph.double_cover import double, euler_circuit
from curvegraph.graph import SpatialGraph
from curvegraph.minimizer import generate
from curvegraph.utils import errors

from ..utils import planar_theta, square

ALPHA = math.atan(0.5)


def skew_quadrilateral() -> SpatialGraph:
    return SpatialGraph.build(
        {"a": [0, 0, 0], "b": [1, 0, 0.5]},
        [("e0", "a", "b", [[0.5, 1, 0]]), ("e1", "b", "a", [[0.2, -0.7, 1.1]])],
        name="skew",
    )


class GraphTotalsTest(unittest.TestCase):
    """NTC, TC, CTC and VTC of whole graphs."""

    def test_square(self):
        graph = square()
        self.assertAlmostEqual(ntc_total(graph), 2 * math.pi, places=9)
        self.assertAlmostEqual(joint_angle_sum(graph), 3 * math.pi / 2, places=12)
        self.assertAlmostEqual(vtc_total(graph), 4 * math.sqrt(2), places=12)

    def test_knot_totals_agree(self):
        graph = skew_quadrilateral()
        ntc = ntc_total(graph)
        self.assertGreater(ntc, 2 * math.pi)
        self.assertAlmostEqual(tc_total(graph), ntc, places=9)
        self.assertAlmostEqual(ctc_total(graph), ntc, places=7)

    def test_butterfly(self):
        graph = generate("butterfly", embed=True)
        self.assertAlmostEqual(ntc_total(graph), 5 * math.pi - 4 * ALPHA, places=9)
        part = graph.without_edge("L0")
        self.assertAlmostEqual(ntc_total(part), 6 * math.pi - 8 * ALPHA, places=9)

    def test_planar_theta(self):
        # both vertices have tangents in a half-plane: ntc pi each, plus two right-angle joints
        self.assertAlmostEqual(ntc_total(planar_theta()), 3 * math.pi, places=9)

    def test_report(self):
        report = curvature_report(planar_theta(), "all", breakdown=True)
        for key in ("ntc_total", "tc_total", "ctc_total", "vtc_total", "joint_angle_sum"):
            self.assertIn(key, report)
        self.assertEqual(report.vertices["q+"]["degree"], 3)
        self.assertIn("q- (degree 3)", report.text())
        self.assertEqual(report.to_json(), curvature_report(planar_theta(), "all", True).to_json())

    def test_report_only_ntc(self):
        report = curvature_report(square())
        self.assertNotIn("tc_total", report)
        self.assertNotIn("vertices", report)

    def test_report_unknown_functional(self):
        with self.assertRaises(errors.BadParameters):
            curvature_report(square(), "mean")


class CircuitCurvatureTest(unittest.TestCase):
    def test_square_double_cover(self):
        graph = square()
        circuit = euler_circuit(double(graph), nonreversing=True, seed=0)
        self.assertAlmostEqual(circuit_curvature(graph, circuit), 4 * math.pi, places=9)

    def test_trivalent_identity(self):
        graph = planar_theta()
        twice = 2 * ntc_total(graph)
        for seed in range(5):
            circuit = euler_circuit(double(graph), nonreversing=True, seed=seed)
            self.assertAlmostEqual(circuit_curvature(graph, circuit), twice, places=9)

    def test_any_circuit_bounds_twice_ntc(self):
        graph = generate("complete:4", embed=True)
        twice = 2 * ntc_total(graph)
        for seed in range(5):
            circuit = euler_circuit(double(graph), seed=seed)
            self.assertGreaterEqual(circuit_curvature(graph, circuit), twice - 1e-9)


class ShrinkTest(unittest.TestCase):
    """Cylindrical shrinking towards a direction."""

    def test_identity(self):
        graph = planar_theta()
        self.assertAlmostEqual(
            ntc_total(cylindrical_shrink(graph, (0, 1, 0), 1.0)), ntc_total(graph), places=12
        )

    def test_limit_is_two_pi_mu(self):
        shrunk = cylindrical_shrink(planar_theta(), (0, 1, 0), 1e-4)
        self.assertAlmostEqual(ntc_total(shrunk) / (3 * math.pi), 1.0, delta=0.01)

    def test_keeps_combinatorics(self):
        shrunk = cylindrical_shrink(planar_theta(), (0, 2, 0), 0.5)
        self.assertEqual(shrunk.combinatorial(), planar_theta().combinatorial())
        np.testing.assert_allclose(shrunk.edge("e0").joints, [[-0.5, 0, 0]])

    def test_bad_factor(self):
        for delta in (0.0, -0.5, 1.5):
            with self.assertRaises(errors.BadParameters):
                cylindrical_shrink(square(), (0, 0, 1), delta)


class SubadditivityTest(unittest.TestCase):
    def test_union_at_a_corner(self):
        corner = square(name="corner").transformed(lambda p: np.array([-2 * p[0], 0, 2 * p[1]]))
        result = subadditivity_defect(square(), corner, samples=8, seed=1)
        self.assertEqual(result.glue_points, ["v0"])
        self.assertTrue(result.subadditive)
        self.assertGreaterEqual(result.defect, -1e-9)

    def test_disjoint_union_is_additive(self):
        far = square(name="far").transformed(lambda p: p + np.array([5.0, 0, 0]))
        result = subadditivity_defect(square(), far, directions=[(0.3, 0.4, 0.5)])
        self.assertEqual(result.glue_points, [])
        self.assertAlmostEqual(result.defect, 0.0, places=9)


if __name__ == "__main__":
    unittest.main()
