import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from curvegraph.graph import HalfInt


class HalfIntTest(unittest.TestCase):
    """Exact half-integers used for nlm and mu."""

    def test_str(self):
        self.assertEqual(str(HalfInt(3)), "3/2")
        self.assertEqual(str(HalfInt(-1)), "-1/2")
        self.assertEqual(str(HalfInt(4)), "2")

    def test_of_and_parse(self):
        self.assertEqual(HalfInt.of(2).doubled, 4)
        self.assertEqual(HalfInt.of(Fraction(5, 2)).doubled, 5)
        self.assertEqual(HalfInt.parse("-1/2").doubled, -1)
        self.assertEqual(HalfInt.parse(" 4 ").doubled, 8)

    def test_of_not_half_integer(self):
        with self.assertRaises(ValueError):
            HalfInt.of(Fraction(1, 3))

    def test_doubled_should_be_integer(self):
        with self.assertRaises(TypeError):
            HalfInt(1.5)  # type: ignore
        with self.assertRaises(TypeError):
            HalfInt(True)  # type: ignore

    def test_immutable(self):
        value = HalfInt(3)
        with self.assertRaises(AttributeError):
            value.doubled = 5  # type: ignore

    def test_ntc_str(self):
        self.assertEqual(HalfInt(6).ntc_str(), "6*pi")
        self.assertEqual(HalfInt(1).ntc_str(), "pi")
        self.assertEqual(HalfInt(0).ntc_str(), "0")
        self.assertEqual(HalfInt(-3).ntc_str(), "-3*pi")

    def test_positive(self):
        self.assertEqual(HalfInt(-3).positive(), 0)
        self.assertEqual(HalfInt(3).positive(), HalfInt(3))

    def test_arithmetic(self):
        self.assertEqual(HalfInt(3) + HalfInt(1), 2)
        self.assertEqual(HalfInt(3) - 1, HalfInt(1))
        self.assertEqual(1 - HalfInt(3), HalfInt(-1))
        self.assertEqual(HalfInt(3) * 2, 3)
        self.assertEqual(2 * HalfInt(3), 3)
        self.assertEqual(sum([HalfInt(1), HalfInt(1), HalfInt(1)], HalfInt(0)), HalfInt(3))

    def test_comparison(self):
        self.assertLess(HalfInt(3), 2)
        self.assertGreater(HalfInt(5), HalfInt(4))
        self.assertEqual(HalfInt(1), Fraction(1, 2))
        self.assertNotEqual(HalfInt(1), "1/2")

    def test_hash(self):
        self.assertEqual(len({HalfInt(2), HalfInt.of(1), HalfInt(3)}), 2)

    def test_float(self):
        self.assertEqual(float(HalfInt(-5)), -2.5)

    @settings(deadline=None)
    @given(st.integers(-1000, 1000), st.integers(-1000, 1000))
    def test_sum_is_exact(self, a, b):
        self.assertEqual((HalfInt(a) + HalfInt(b)).fraction, Fraction(a, 2) + Fraction(b, 2))
        self.assertEqual(HalfInt(a) < HalfInt(b), a < b)


if __name__ == "__main__":
    unittest.main()
