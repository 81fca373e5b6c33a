import math
import os
import shutil
import unittest

import numpy as np

from curvegraph.crofton import crofton_ntc, lattice_directions, mu_heatmap, plot_mu_heatmap
from curvegraph.curvature import ntc_total
from curvegraph.minimizer import generate
from curvegraph.utils import errors

from ..utils import DATA_DIR, planar_theta, square


class CroftonTest(unittest.TestCase):
    """NTC as 2*pi times the mean multiplicity."""

    def test_convex_loop_is_exact(self):
        for scheme in ("monte_carlo", "fibonacci"):
            result = crofton_ntc(square(), scheme, samples=500, seed=3)
            self.assertAlmostEqual(result.estimate, 2 * math.pi, places=12)
            self.assertEqual(result.stderr, 0.0)
            self.assertEqual(result.rejected, 0)

    def test_monte_carlo_agrees(self):
        graph = planar_theta()
        result = crofton_ntc(graph, "mc", samples=40_000, seed=1)
        self.assertEqual(result.scheme, "monte_carlo")
        self.assertLess(abs(result.estimate - ntc_total(graph)), 5 * result.stderr)

    def test_lattice_agrees(self):
        graph = generate("complete:4", embed=True)
        result = crofton_ntc(graph, "fibonacci", samples=20_000, seed=0)
        self.assertAlmostEqual(result.estimate / ntc_total(graph), 1.0, delta=0.01)

    def test_reproducible(self):
        first = crofton_ntc(planar_theta(), samples=1000, seed=9)
        second = crofton_ntc(planar_theta(), samples=1000, seed=9)
        self.assertEqual(first.to_json(), second.to_json())

    def test_bad_parameters(self):
        with self.assertRaises(errors.BadParameters):
            crofton_ntc(square(), "grid", samples=100)
        with self.assertRaises(errors.BadParameters):
            crofton_ntc(square(), samples=9)

    def test_lattice_directions(self):
        directions = lattice_directions(100, seed=4)
        self.assertEqual(directions.shape, (100, 3))
        np.testing.assert_allclose(np.linalg.norm(directions, axis=1), 1, atol=1e-12)
        np.testing.assert_array_equal(directions, lattice_directions(100, seed=4))

    def test_text(self):
        text = crofton_ntc(square(), samples=10, seed=0).text()
        self.assertIn("scheme = monte_carlo", text)


class HeatmapTest(unittest.TestCase):
    """mu on a longitude/latitude grid."""

    def setUp(self):
        os.makedirs(DATA_DIR, exist_ok=True)

    def tearDown(self):
        shutil.rmtree(DATA_DIR, ignore_errors=True)

    def test_square(self):
        heatmap = mu_heatmap(square(), resolution=8)
        self.assertEqual(heatmap.mu_doubled.shape, (8, 16))
        self.assertTrue(np.all(heatmap.generic))
        self.assertEqual(heatmap.minimum(), 1.0)

    def test_theta_minimum(self):
        heatmap = mu_heatmap(planar_theta(), resolution=16)
        self.assertEqual(heatmap.minimum(), 1.5)

    def test_csv(self):
        lines = mu_heatmap(square(), resolution=8).to_csv().splitlines()
        self.assertEqual(lines[0], "lon,lat,mu_doubled,generic")
        self.assertEqual(len(lines), 1 + 8 * 16)
        self.assertEqual(lines[1], "-168.750000,-78.750000,2,1")

    def test_low_resolution(self):
        with self.assertRaises(errors.BadParameters):
            mu_heatmap(square(), resolution=4)

    def test_save_h5(self):
        path = mu_heatmap(square(), resolution=8).save_h5(os.path.join(DATA_DIR, "square"))
        self.assertTrue(path.endswith("square.h5"))
        self.assertTrue(os.path.exists(path))

    def test_plot(self):
        path = os.path.join(DATA_DIR, "square.png")
        fig = plot_mu_heatmap(mu_heatmap(square(), resolution=8), path)
        self.assertEqual(fig.axes[0].get_title(), "square")
        self.assertTrue(os.path.exists(path))


if __name__ == "__main__":
    unittest.main()
