import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from curvegraph.graph import HalfInt, SpatialGraph, random_embedding, random_multigraph
from curvegraph.minimizer import generate
from curvegraph.projection import (
    critical_points,
    fiber_count,
    gap_levels,
    is_generic,
    mu,
    mu_many,
    nlm,
    perturb_direction,
    profile,
    updown_degrees,
    width_in_direction,
)
from curvegraph.utils import errors
from curvegraph.utils.random_utils import block_generator
from curvegraph.utils.sphere import uniform_sphere

from ..utils import planar_theta, square, unit

IN_PLANE = unit(1, 2, 0)


class HeightsTest(unittest.TestCase):
    """d+, d-, nlm and mu in one direction."""

    def test_theta_along_axis(self):
        graph = planar_theta()
        e = (0, 1, 0)
        self.assertTrue(is_generic(graph, e).generic)
        self.assertEqual(updown_degrees(graph, e, "q-"), (3, 0))
        self.assertEqual(nlm(graph, e, "q+"), HalfInt(3))
        self.assertEqual(nlm(graph, e, "q-"), HalfInt(-3))
        self.assertEqual(mu(graph, e), HalfInt(3))

    def test_square_in_plane(self):
        graph = square()
        points = critical_points(graph, IN_PLANE)
        self.assertEqual([p.name for p in points], ["v0", "loop#1"])
        self.assertEqual(mu(graph, IN_PLANE), 1)

    def test_unknown_vertex(self):
        with self.assertRaises(errors.UnknownVertex):
            nlm(square(), IN_PLANE, "x")

    def test_zero_direction(self):
        with self.assertRaises(errors.BadParameters):
            mu(square(), (0, 0, 0))

    def test_non_generic(self):
        graph = square()
        check = is_generic(graph, (0, 0, 1))
        self.assertFalse(check.generic)
        self.assertIn("orthogonal", check.witness)
        with self.assertRaises(errors.NonGenericDirection):
            mu(graph, (0, 0, 1))

    def test_diagonal_is_generic(self):
        # (1, 0, 0) and (0, 1, 0) share a height but are monotone joints
        self.assertTrue(is_generic(square(), unit(1, 1, 0)).generic)

    def test_equal_critical_heights(self):
        graph = SpatialGraph.build(
            {"a": [0, 0, 0], "b": [1, 0, 0]},
            [("e0", "a", "b", [[0.5, 1, 0.1]]), ("e1", "b", "a", [[0.5, -1, -0.1]])],
        )
        check = is_generic(graph, unit(0.1, 0.2, 1))
        self.assertTrue(check.generic)
        check = is_generic(graph, (0, 1, 0))
        self.assertFalse(check.generic)
        self.assertIn("share a height", check.witness)

    def test_perturb_is_reproducible(self):
        graph = square()
        e1, attempts = perturb_direction(graph, (0, 0, 1))
        e2, _ = perturb_direction(graph, (0, 0, 1))
        self.assertGreaterEqual(attempts, 1)
        np.testing.assert_array_equal(e1, e2)
        self.assertLess(np.linalg.norm(e1 - np.array([0, 0, 1.0])), 1e-6)
        self.assertEqual(mu(graph, e1), 1)

    def test_perturb_keeps_generic(self):
        e, attempts = perturb_direction(square(), IN_PLANE)
        self.assertEqual(attempts, 0)
        np.testing.assert_allclose(e, IN_PLANE)

    def test_mu_many_matches_mu(self):
        graph = generate("complete:4", embed=True)
        directions = uniform_sphere(block_generator(11), 200)
        values, generic = mu_many(graph, directions)
        self.assertTrue(np.all(generic))
        for e, value in zip(directions, values):
            self.assertEqual(mu(graph, e).doubled, value)


class FibersTest(unittest.TestCase):
    """Level-set counts and width."""

    def test_theta_fibers(self):
        graph = planar_theta()
        self.assertEqual(fiber_count(graph, (0, 1, 0), 0.5), 3)
        self.assertEqual(width_in_direction(graph, (0, 1, 0)), 3)

    def test_critical_level(self):
        with self.assertRaises(errors.BadParameters):
            fiber_count(planar_theta(), (0, 1, 0), 1.0)

    def test_gap_levels(self):
        self.assertEqual(gap_levels(planar_theta(), (0, 1, 0)), [0.0])

    def test_profile(self):
        result = profile(square(), (0, 0, 1), levels=[0.0001])
        self.assertGreaterEqual(result.perturbations, 1)
        self.assertEqual(result.mu, 1)
        self.assertEqual(result.nlm_sum, 0)
        self.assertEqual(result.width, 2)
        self.assertEqual(len(result.critical), 2)
        self.assertEqual(result.fibers[0].count, 0)
        self.assertIn("mu = 1", result.text())

    def test_profile_without_perturbation(self):
        with self.assertRaises(errors.NonGenericDirection):
            profile(square(), (0, 0, 1), perturb=False)


class ProjectionPropertiesTest(unittest.TestCase):
    """nlm sums and fiber counts on random embeddings."""

    @settings(deadline=None, max_examples=40)
    @given(st.integers(2, 5), st.integers(0, 3), st.integers(0, 2**32))
    def test_nlm_sum_and_fibers(self, vertices, extra, seed):
        rng = block_generator(seed)
        graph = random_embedding(random_multigraph(rng, vertices, vertices - 1 + extra), rng)
        e, _ = perturb_direction(graph, uniform_sphere(rng, 1)[0])
        result = profile(graph, e)
        self.assertEqual(result.nlm_sum, 0)
        self.assertGreaterEqual(result.mu.doubled, result.width)
        heights = [point["height"] for point in result.critical]
        level = float(rng.uniform(min(heights), max(heights)))
        count = fiber_count(graph, e, level)
        above = sum(
            (point["nlm"] for point in result.critical if point["height"] > level), HalfInt(0)
        )
        self.assertEqual(count, above.doubled)

    @settings(deadline=None, max_examples=40)
    @given(st.integers(2, 5), st.integers(0, 3), st.integers(0, 2**32))
    def test_antipodal_directions(self, vertices, extra, seed):
        rng = block_generator(seed)
        graph = random_embedding(random_multigraph(rng, vertices, vertices - 1 + extra), rng)
        e, _ = perturb_direction(graph, uniform_sphere(rng, 1)[0])
        self.assertTrue(is_generic(graph, -e).generic)
        self.assertEqual(mu(graph, e), mu(graph, -e))
        for q in graph.vertex_ids:
            self.assertEqual(nlm(graph, -e, q), -nlm(graph, e, q))
            down, up = updown_degrees(graph, -e, q)
            self.assertEqual((up, down), updown_degrees(graph, e, q))


if __name__ == "__main__":
    unittest.main()
