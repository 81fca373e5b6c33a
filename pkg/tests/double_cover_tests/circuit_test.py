import math
import unittest

from curvegraph.double_cover import (
    Circuit,
    Traversal,
    check_closed,
    check_double_cover,
    circuit_local_maxima,
    double,
    euler_circuit,
    nlm_from_circuit,
    passages,
    vertex_passage_curvature,
)
from curvegraph.graph import CombinatorialGraph
from curvegraph.minimizer import generate
from curvegraph.projection import mu, nlm
from curvegraph.utils import errors
from curvegraph.utils.random_utils import block_generator
from curvegraph.utils.sphere import uniform_sphere

from ..utils import planar_theta, square


class DoubledGraphTest(unittest.TestCase):
    def test_degrees(self):
        dg = double(planar_theta())
        self.assertDictEqual(dg.degrees(), {"q+": 6, "q-": 6})
        self.assertEqual(len(dg.copies), 6)

    def test_loop(self):
        dg = double(square())
        self.assertEqual(len(dg.ends["v0"]), 4)


class EulerCircuitTest(unittest.TestCase):
    """Random Euler circuits of the double."""

    def test_connected_non_reversing(self):
        graph = generate("complete:4", embed=True)
        for seed in range(10):
            circuit = euler_circuit(double(graph), nonreversing=True, seed=seed)
            self.assertEqual(len(circuit.components), 1)
            self.assertEqual(len(circuit), 12)
            self.assertEqual(circuit.immediate_reversals(), [])
            check_double_cover(graph, circuit)

    def test_reproducible(self):
        dg = double(planar_theta())
        self.assertEqual(
            euler_circuit(dg, seed=4).as_json(), euler_circuit(dg, seed=4).as_json()
        )

    def test_components_without_splicing(self):
        graph = planar_theta()
        circuit = euler_circuit(double(graph), seed=2, connected=False)
        check_double_cover(graph, circuit)

    def test_leaf(self):
        graph = CombinatorialGraph.from_pairs([("a", "b"), ("b", "b")])
        with self.assertRaises(errors.NonReversingImpossible):
            euler_circuit(double(graph), nonreversing=True)
        circuit = euler_circuit(double(graph))
        check_double_cover(graph, circuit)
        self.assertTrue(circuit.immediate_reversals())


class CircuitChecksTest(unittest.TestCase):
    def setUp(self):
        self.graph = planar_theta()

    def test_gap(self):
        circuit = Circuit(((Traversal("e0", True), Traversal("e1", True)),))
        with self.assertRaises(errors.NonClosedCircuit):
            check_closed(self.graph, circuit)

    def test_unknown_edge(self):
        circuit = Circuit(((Traversal("e0", True), Traversal("e9", False)),))
        with self.assertRaises(errors.NonClosedCircuit):
            check_closed(self.graph, circuit)

    def test_copy_used_twice(self):
        lap = (Traversal("e0", True), Traversal("e1", False))
        circuit = Circuit((lap + lap,))
        check_closed(self.graph, circuit)
        with self.assertRaisesRegex(errors.NonClosedCircuit, "used twice"):
            check_double_cover(self.graph, circuit)

    def test_missing_copies(self):
        circuit = Circuit(((Traversal("e0", True), Traversal("e1", False)),))
        with self.assertRaisesRegex(errors.NonClosedCircuit, "not traversed"):
            check_double_cover(self.graph, circuit)


class PassagesTest(unittest.TestCase):
    """Vertex passages and the extrema they carry."""

    def test_square_passages(self):
        graph = square()
        circuit = euler_circuit(double(graph), nonreversing=True, seed=1)
        angles = [p.exterior_angle for p in passages(graph, circuit)]
        self.assertEqual(len(angles), 2)
        for angle in angles:
            self.assertAlmostEqual(angle, math.pi / 2, places=12)
        self.assertAlmostEqual(vertex_passage_curvature(graph, circuit)["v0"], math.pi, places=12)

    def test_theta_passages(self):
        graph = planar_theta()
        circuit = euler_circuit(double(graph), nonreversing=True, seed=0)
        self.assertAlmostEqual(
            vertex_passage_curvature(graph, circuit)["q+"], 2 * math.pi, places=9
        )
        self.assertEqual(
            nlm_from_circuit(graph, circuit, (0, 1, 0), "q+"), nlm(graph, (0, 1, 0), "q+")
        )
        self.assertEqual(circuit_local_maxima(graph, circuit, (0, 1, 0)), 3)

    def test_nlm_from_any_circuit(self):
        graph = generate("complete:4", embed=True)
        directions = uniform_sphere(block_generator(8), 10)
        for seed in range(4):
            circuit = euler_circuit(double(graph), seed=seed)
            for e in directions:
                for q in graph.vertex_ids:
                    self.assertEqual(nlm_from_circuit(graph, circuit, e, q), nlm(graph, e, q))
                maxima = circuit_local_maxima(graph, circuit, e)
                self.assertGreaterEqual(maxima, mu(graph, e).doubled)

    def test_errors(self):
        graph = square()
        circuit = euler_circuit(double(graph), seed=0)
        with self.assertRaises(errors.UnknownVertex):
            nlm_from_circuit(graph, circuit, (0.1, 0.2, 1), "v9")
        with self.assertRaises(errors.NonGenericDirection):
            nlm_from_circuit(graph, circuit, (0, 0, 1), "v0")


if __name__ == "__main__":
    unittest.main()
