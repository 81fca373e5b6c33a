import json
import math
import unittest

import numpy as np

from curvegraph.attrdict import AttrDict, jsonable
from curvegraph.graph import HalfInt

DATA = {"ntc_total": 3 * math.pi, "tc_total": 10.0, "name": "theta", "vertices": 2}


class AttrDictMainTest(unittest.TestCase):
    """Reports as dictionaries with attribute access."""

    def setUp(self) -> None:
        self.data = AttrDict(DATA)

    def test_dict_equal(self):
        self.assertDictEqual(self.data, DATA)

    def test_has_attr(self):
        for key in DATA:
            self.assertTrue(hasattr(self.data, key))
        self.data.mu = HalfInt(3)
        self.assertEqual(self.data["mu"], HalfInt(3))

    def test_nested(self):
        data = AttrDict(breakdown={"q+": {"ntc": math.pi}})
        self.assertIsInstance(data.breakdown, AttrDict)
        self.assertEqual(data.breakdown["q+"]["ntc"], math.pi)

    def test_output_1(self):
        out = self.data.output(["tc_total__rad__.3f"])
        self.assertEqual("tc_total = 10.000 (rad)", out)

    def test_output_2(self):
        out = self.data.output(["tc_total__rad__.3f", "name__graph"])
        self.assertEqual("tc_total = 10.000 (rad); name = theta (graph)", out)

    def test_output_pi(self):
        self.assertEqual(self.data.output(["ntc_total__pi"]), "ntc_total = 3*pi")
        self.data.ntc_total = 1.0
        self.assertEqual(self.data.output(["ntc_total__pi"]), "ntc_total = 1.0")

    def test_output_str_end(self):
        out = self.data.output(["tc_total__rad__.3f", "name__graph"], max_length=10)
        self.assertEqual("tc_total = 10.000 (rad)\nname = theta (graph)", out)

    def test_output_missing_key(self):
        with self.assertRaises(ValueError):
            self.data.output(["ctc_total"])

    def test_to_json(self):
        self.data.mu = HalfInt(3)
        self.data.direction = np.array([0.0, 1.0, 0.0])
        document = json.loads(self.data.to_json())
        self.assertEqual(document["mu"], "3/2")
        self.assertEqual(document["direction"], [0.0, 1.0, 0.0])
        self.assertEqual(list(document), sorted(document))

    def test_jsonable(self):
        value = {"flag": np.bool_(True), "count": np.int64(4), "pair": (np.float64(0.5), "a")}
        self.assertDictEqual(jsonable(value), {"flag": True, "count": 4, "pair": [0.5, "a"]})


if __name__ == "__main__":
    unittest.main()
