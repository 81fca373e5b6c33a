import io
import json
import math
import os
import shutil
import unittest
from unittest import mock

from curvegraph import __config__ as cfg
from curvegraph.cli import COMMANDS, main, parse_config, run as run_config
from curvegraph.cli.config import parse_tolerance, tolerances
from curvegraph.graph import read_graph, write_graph
from curvegraph.utils import errors

from ..utils import DATA_DIR, planar_theta, square


def run(*argv: str):
    """Run the command line; return (exit status, output)."""
    stream = io.StringIO()
    status = run_config(parse_config(list(argv)), stream)
    return status, stream.getvalue()


class CliTest(unittest.TestCase):
    """Subcommands end to end, through `run`."""

    def setUp(self):
        os.makedirs(DATA_DIR, exist_ok=True)
        self.theta = os.path.join(DATA_DIR, "theta.json")
        self.square = os.path.join(DATA_DIR, "square.json")
        write_graph(self.theta, planar_theta())
        write_graph(self.square, square())

    def tearDown(self):
        shutil.rmtree(DATA_DIR, ignore_errors=True)

    def test_minimize_family(self):
        status, out = run("minimize", "--family", "complete:5")
        self.assertEqual(status, 0)
        report = json.loads(out)
        self.assertEqual(report["ntc_star"], "6*pi")
        self.assertEqual(report["catalog"], "6*pi")
        self.assertEqual(report["width_star"], 6)

    def test_minimize_text(self):
        status, out = run("minimize", "--family", "theta:3", "--format", "text", "--formula")
        self.assertEqual(status, 0)
        self.assertIn("ntc_star = 3*pi", out)
        self.assertIn("q- < q+", out)

    def test_minimize_needs_a_graph(self):
        status, out = run("minimize")
        self.assertEqual(status, 1)
        self.assertEqual(out, "")

    def test_minimize_graph_file(self):
        status, out = run("minimize", self.theta, "--combinatorial", "--exhaustive")
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)["exhaustive"]["mu_star"], "3/2")

    def test_ntc(self):
        status, out = run("ntc", self.theta, "--functional", "all", "--breakdown", "--format", "json")
        self.assertEqual(status, 0)
        report = json.loads(out)
        self.assertAlmostEqual(report["ntc_total"], 3 * math.pi, places=9)
        self.assertEqual(sorted(report["vertices"]), ["q+", "q-"])

    def test_ntc_text_by_default(self):
        status, out = run("ntc", self.theta)
        self.assertEqual(status, 0)
        lines = out.strip().splitlines()
        self.assertTrue(lines[-1].startswith("ntc_total = 9.42477"), lines[-1])
        self.assertTrue(lines[0].startswith("joint_angle_sum = "))
        status, out = run("ntc", self.theta, "--functional", "all", "--breakdown", "--format", "text")
        self.assertEqual(status, 0)
        self.assertTrue(out.strip().splitlines()[-1].startswith("ntc_total = 9.42477"))
        self.assertIn("q+ (degree 3)", out)

    def test_missing_file(self):
        status, out = run("ntc", os.path.join(DATA_DIR, "missing.json"))
        self.assertEqual(status, 1)
        self.assertEqual(out, "")

    def test_vertex(self):
        status, out = run("vertex", "--tangents", "1,0,0;0,1,0")
        self.assertEqual(status, 0)
        self.assertAlmostEqual(json.loads(out)["ntc"], math.pi / 2, places=9)
        status, _ = run("vertex", self.theta, "--vertex", "q+")
        self.assertEqual(status, 0)
        status, _ = run("vertex", "--tangents", "1,0;0,1")
        self.assertEqual(status, 1)

    def test_mu(self):
        status, out = run("mu", self.theta, "--dir", "0,1,0", "--levels", "0.5")
        self.assertEqual(status, 0)
        report = json.loads(out)
        self.assertEqual(report["mu"], "3/2")
        self.assertEqual(report["fibers"][0]["count"], 3)

    def test_mu_has_no_csv(self):
        status, _ = run("mu", self.theta, "--dir", "0,1,0", "--format", "csv")
        self.assertEqual(status, 1)

    def test_crofton(self):
        status, out = run("crofton", self.square, "--samples", "1000", "--seed", "2")
        self.assertEqual(status, 0)
        report = json.loads(out)
        self.assertTrue(report["agrees"])
        self.assertAlmostEqual(report["estimate"], 2 * math.pi, places=12)

    def test_heatmap_csv(self):
        status, out = run("heatmap", self.square, "--resolution", "8", "--format", "csv")
        self.assertEqual(status, 0)
        self.assertEqual(out.splitlines()[0], "lon,lat,mu_doubled,generic")

    def test_doublecover(self):
        status, out = run("doublecover", self.theta, "--nonreversing", "--circuits", "3")
        self.assertEqual(status, 0)
        report = json.loads(out)
        self.assertEqual(len(report["circuits"]), 3)
        for circuit in report["circuits"]:
            self.assertEqual(circuit["reversals"], 0)
            self.assertAlmostEqual(circuit["curvature"], report["twice_ntc"], places=9)

    def test_catalog_csv(self):
        status, out = run("catalog", "--format", "csv")
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "family,ntc_min,result,proven")
        self.assertTrue(lines[1].startswith("complete,"))

    def test_gen(self):
        path = os.path.join(DATA_DIR, "cycle.json")
        status, out = run("gen", "cycle:3", "-o", path)
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)["name"], "cycle:3")
        self.assertEqual(read_graph(path).degrees(), {"v0": 2, "v1": 2, "v2": 2})

    def test_gen_combinatorial(self):
        status, out = run("gen", "theta:3", "--combinatorial")
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)["vertices"], ["q-", "q+"])

    def test_repro(self):
        status, out = run("repro", "butterfly", "--format", "text")
        self.assertEqual(status, 0)
        self.assertIn("PASS butterfly/ntc", out)
        self.assertIn("3 passed, 0 failed", out)

    def test_unknown_experiment(self):
        status, _ = run("repro", "nope")
        self.assertEqual(status, 1)

    def test_numerical_failure_exit_code(self):
        def failing(config):
            raise errors.NumericalCheckFailed("mismatch")

        with mock.patch.dict(COMMANDS, {"catalog": failing}):
            status, out = run("catalog")
        self.assertEqual(status, 2)
        self.assertEqual(out, "")


class ParseConfigTest(unittest.TestCase):
    """Arguments, tolerance overrides and usage errors."""

    def test_tolerance(self):
        self.assertEqual(parse_tolerance("separation_tol=1e-8"), ("SEPARATION_TOL", 1e-8))
        for text in ("separation_tol", "speed=1", "unit_tol=x", "unit_tol=-1"):
            with self.assertRaises(errors.BadParameters, msg=text):
                parse_tolerance(text)

    def test_config(self):
        config = parse_config(
            ["crofton", "g.json", "--samples", "50", "--tol", "merge_tol=1e-6", "--format", "text"]
        )
        self.assertEqual(config.command, "crofton")
        self.assertEqual(config.inputs, ("g.json",))
        self.assertEqual(config.samples, 50)
        self.assertEqual(config.output_format, "text")
        self.assertEqual(config.tolerances, (("MERGE_TOL", 1e-6),))
        self.assertEqual(parse_config(["ntc", "g.json"]).output_format, "text")
        self.assertEqual(parse_config(["crofton", "g.json"]).output_format, "json")

    def test_tolerances_are_restored(self):
        before = cfg.SEPARATION_TOL
        with tolerances((("SEPARATION_TOL", 1e-3),)):
            self.assertEqual(cfg.SEPARATION_TOL, 1e-3)
        self.assertEqual(cfg.SEPARATION_TOL, before)

    def test_usage_errors(self):
        self.assertEqual(main(["nope"]), 1)
        self.assertEqual(main(["ntc"]), 1)
        self.assertEqual(main(["crofton", "g.json", "--scheme", "grid"]), 1)


if __name__ == "__main__":
    unittest.main()
