import math
import unittest
from fractions import Fraction

from curvegraph.utils.title_parsing import (
    ValueForPrint,
    format_pi,
    format_title,
    parse_get_format,
    pi_multiple,
)


class UnitsFormatTest(unittest.TestCase):
    """Keys with units and formats."""

    def test_parse_get_format_3args(self):
        self.assertTupleEqual(
            parse_get_format("ntc_total__rad__2f"), ("ntc_total", "rad", "2f")
        )

    def test_parse_get_format_2args(self):
        self.assertTupleEqual(parse_get_format("ntc_total__rad"), ("ntc_total", "rad", None))
        self.assertTupleEqual(parse_get_format("stderr__2e"), ("stderr", None, "2e"))
        self.assertTupleEqual(parse_get_format("ntc_total__pi"), ("ntc_total", None, "pi"))

    def test_parse_get_format_1arg(self):
        self.assertTupleEqual(parse_get_format("width"), ("width", None, None))

    def test_parse_get_format_errors(self):
        self.assertTupleEqual(
            parse_get_format("ntc_total__rad__2f__abc"), ("ntc_total", "rad", "2f")
        )

    def test_format_title_working(self):
        values = [
            ValueForPrint("estimate", 9.42477796, "rad", ".2f"),
            ValueForPrint("scheme", "fibonacci", None, None),
            ValueForPrint("stderr", 0.0012, None, ".1e"),
        ]
        txt = format_title(values, max_length=30)
        self.assertIn("estimate = 9.42 (rad)", txt)
        self.assertIn("scheme = fibonacci", txt)
        self.assertNotIn("()", txt)
        self.assertIn("stderr = 1.2e-03", txt)
        self.assertLessEqual(max(len(t) for t in txt.split("\n")), 30)

    def test_format_p(self):
        self.assertEqual(ValueForPrint("tol", 1e-9, None, ".1p").format_value(), "1e-9")


class PiFormatTest(unittest.TestCase):
    """Exact multiples of pi in reports."""

    def test_pi_multiple(self):
        self.assertEqual(pi_multiple(6 * math.pi), "6*pi")
        self.assertEqual(pi_multiple(math.pi), "pi")
        self.assertEqual(pi_multiple(math.pi / 2), "pi/2")
        self.assertEqual(pi_multiple(-3 * math.pi / 4), "-3*pi/4")
        self.assertEqual(pi_multiple(0.0), "0")
        self.assertIsNone(pi_multiple(1.0))
        self.assertIsNone(pi_multiple(math.pi / 6))

    def test_format_pi(self):
        self.assertEqual(format_pi(Fraction(5, 2)), "5*pi/2")
        self.assertEqual(format_pi(Fraction(-1)), "-pi")


if __name__ == "__main__":
    unittest.main()
