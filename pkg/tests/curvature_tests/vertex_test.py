import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from curvegraph.curvature import (
    build_arrangement,
    cone_value,
    ctc_vertex,
    exterior_angles,
    ntc_vertex,
    ntc_vertex_mc,
    tc_vertex,
    vertex_report,
    vtc_vertex,
)
from curvegraph.cli.repro import planar_ctc, planar_star
from curvegraph.graph import VertexStar, random_star
from curvegraph.utils import errors
from curvegraph.utils.random_utils import block_generator

from ..utils import tripod, unit

ORTHOGONAL = VertexStar.from_vectors([[1, 0, 0], [0, 1, 0]])


class VertexFunctionalsTest(unittest.TestCase):
    """ntc, tc, ctc and vtc of hand-made stars."""

    def test_degree_two_is_exterior_angle(self):
        for angle in (0.3, math.pi / 2, 2.5):
            star = VertexStar.from_vectors([[1, 0, 0], [math.cos(angle), math.sin(angle), 0]])
            exterior = math.pi - angle
            self.assertAlmostEqual(ntc_vertex(star), exterior, places=9)
            self.assertAlmostEqual(tc_vertex(star), exterior, places=12)
            self.assertAlmostEqual(ctc_vertex(star), exterior, places=7)

    def test_orthogonal_pair(self):
        self.assertAlmostEqual(ntc_vertex(ORTHOGONAL), math.pi / 2, places=9)
        self.assertAlmostEqual(vtc_vertex(ORTHOGONAL), math.sqrt(2), places=12)

    def test_opposite_pair(self):
        star = VertexStar.from_vectors([[0, 0, 1], [0, 0, -1]])
        self.assertAlmostEqual(ntc_vertex(star), 0.0, places=9)
        self.assertAlmostEqual(ctc_vertex(star), 0.0, places=9)
        self.assertAlmostEqual(vtc_vertex(star), 0.0, places=12)

    def test_planar_tripod(self):
        star = tripod()
        self.assertAlmostEqual(ntc_vertex(star), math.pi / 2, places=9)
        self.assertAlmostEqual(tc_vertex(star), math.pi, places=9)
        self.assertAlmostEqual(vtc_vertex(star), 0.0, places=12)
        self.assertAlmostEqual(ctc_vertex(star), math.pi / 6, places=7)
        self.assertAlmostEqual(cone_value(star, (0, 0, 1)), 0.0, places=12)

    def test_coplanar_equal_angle_ctc(self):
        for d in range(3, 7):
            star = planar_star(d)
            expected = math.pi / (2 * d) if d % 2 else 0.0
            self.assertAlmostEqual(ctc_vertex(star), expected, places=7, msg=f"d={d}")
            self.assertAlmostEqual(planar_ctc(d), expected, places=15)
            self.assertAlmostEqual(cone_value(star, star.tangents[0]), expected, places=12)
            self.assertAlmostEqual(cone_value(star, (0, 0, 1)), 0.0, places=12)

    def test_planar_square_star(self):
        star = VertexStar.from_vectors([[1, 0, 0], [0, 1, 0], [-1, 0, 0], [0, -1, 0]])
        self.assertAlmostEqual(ntc_vertex(star), 0.0, places=9)
        self.assertAlmostEqual(tc_vertex(star), 2 * math.pi, places=9)
        self.assertAlmostEqual(ctc_vertex(star), 0.0, places=7)

    def test_single_tangent(self):
        star = VertexStar.from_vectors([[0, 0, 1]])
        self.assertAlmostEqual(ntc_vertex(star), math.pi / 2, places=9)
        with self.assertRaises(errors.BadParameters):
            tc_vertex(star)

    def test_exterior_angles(self):
        angles = exterior_angles(tripod())
        self.assertEqual([(i, j) for i, j, _ in angles], [(0, 1), (0, 2), (1, 2)])
        for _, _, angle in angles:
            self.assertAlmostEqual(angle, math.pi / 3, places=12)

    def test_report(self):
        report = vertex_report(tripod(), mc_samples=20_000, seed=1)
        self.assertEqual(report.degree, 3)
        self.assertIn("ntc_mc_stderr", report)
        self.assertLess(abs(report.ntc_mc - report.ntc), 5 * report.ntc_mc_stderr + 1e-12)
        self.assertIn("ntc = ", report.text())

    def test_report_needs_seed(self):
        with self.assertRaises(errors.BadParameters):
            vertex_report(tripod(), mc_samples=100)

    def test_monte_carlo_is_reproducible(self):
        star = random_star(block_generator(2), 4)
        self.assertEqual(ntc_vertex_mc(star, 1000, 7), ntc_vertex_mc(star, 1000, 7))


class VertexPropertiesTest(unittest.TestCase):
    """Properties over random stars."""

    @settings(deadline=None, max_examples=40)
    @given(st.integers(1, 8), st.integers(0, 2**32))
    def test_arrangement_covers_sphere(self, degree, seed):
        arrangement = build_arrangement(random_star(block_generator(seed), degree))
        self.assertAlmostEqual(arrangement.total_area, 4 * math.pi, places=9)

    @settings(deadline=None, max_examples=40)
    @given(st.integers(2, 6), st.integers(0, 2**32))
    def test_tc_bounds_ntc(self, degree, seed):
        star = random_star(block_generator(seed), degree)
        ntc = ntc_vertex(star)
        self.assertGreaterEqual(ntc, -1e-12)
        self.assertGreaterEqual(tc_vertex(star), (degree - 1) * ntc - 1e-9)

    @settings(deadline=None, max_examples=30)
    @given(st.sampled_from([1, 3, 5, 7]), st.integers(0, 2**32))
    def test_odd_degree_floor(self, degree, seed):
        star = random_star(block_generator(seed), degree)
        self.assertGreaterEqual(ntc_vertex(star), math.pi / 2 - 1e-9)

    @settings(deadline=None, max_examples=30)
    @given(st.integers(2, 6), st.integers(0, 2**32))
    def test_ntc_is_invariant(self, degree, seed):
        rng = block_generator(seed)
        star = random_star(rng, degree)
        matrix, _ = np.linalg.qr(rng.standard_normal((3, 3)))
        rotated = VertexStar(star.tangents @ matrix.T)
        permuted = VertexStar(star.tangents[rng.permutation(degree)])
        self.assertAlmostEqual(ntc_vertex(rotated), ntc_vertex(star), places=8)
        self.assertAlmostEqual(ntc_vertex(permuted), ntc_vertex(star), places=8)

    def test_non_coplanar_tripod_is_above_floor(self):
        star = VertexStar.from_vectors([unit(1, 0, 0.3), unit(-0.5, 0.8, 0.3), unit(-0.5, -0.8, 0.3)])
        self.assertGreater(ntc_vertex(star), math.pi / 2 + 1e-6)


if __name__ == "__main__":
    unittest.main()
