import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from curvegraph.graph import random_embedding, random_multigraph, random_star, random_trivalent
from curvegraph.utils import errors
from curvegraph.utils.random_utils import block_generator


class RandomGraphsTest(unittest.TestCase):
    """Seeded random graphs used by the property suites."""

    def test_trivalent(self):
        graph = random_trivalent(8, seed=3)
        self.assertEqual(len(graph.vertices), 8)
        self.assertEqual(set(graph.degrees().values()), {3})
        self.assertEqual(graph, random_trivalent(8, seed=3))

    def test_trivalent_odd(self):
        with self.assertRaises(errors.BadParameters):
            random_trivalent(7, seed=0)

    def test_star(self):
        star = random_star(block_generator(1), 5)
        self.assertEqual(star.degree, 5)
        np.testing.assert_allclose(np.linalg.norm(star.tangents, axis=1), 1, atol=1e-12)

    @settings(deadline=None, max_examples=30)
    @given(st.integers(1, 6), st.integers(0, 4), st.integers(0, 2**32))
    def test_multigraph_is_connected(self, vertices, extra, seed):
        edges = max(vertices - 1, 1) + extra
        graph = random_multigraph(block_generator(seed), vertices, edges)
        self.assertEqual(len(graph.edges), edges)
        self.assertTrue(graph.is_connected())

    def test_multigraph_too_few_edges(self):
        with self.assertRaises(errors.BadParameters):
            random_multigraph(block_generator(0), 4, 2)

    def test_embedding(self):
        rng = block_generator(5)
        graph = random_multigraph(rng, 3, 5)
        spatial = random_embedding(graph, rng, joints=1, pinned={"v0": [0, 0, 0]})
        self.assertEqual(spatial.combinatorial(), graph)
        np.testing.assert_array_equal(spatial.vertices["v0"], [0, 0, 0])
        for edge in spatial.edges:
            self.assertGreaterEqual(len(edge.joints), 2 if edge.is_loop else 1)


if __name__ == "__main__":
    unittest.main()
