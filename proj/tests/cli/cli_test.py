"""End-to-end checks of the wishdiff command-line tool.

Usage: cli_test.py <path-to-wishdiff> <schema-dir>
"""

import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest
from fractions import Fraction

import jsonschema

BINARY = None
SCHEMAS = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("WISHDIFF_WORKERS", None)
    if env:
        full_env.update(env)
    return subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env)


def schema(name):
    with open(os.path.join(SCHEMAS, name)) as f:
        return json.load(f)


def rows(text):
    return list(csv.reader(io.StringIO(text)))


ENSEMBLE = ["--n", "3", "--n1", "4", "--n2", "5", "--a1", "1", "--a2", "1"]


class Density(unittest.TestCase):
    def test_wide_grid(self):
        r = run("density", "--n", "4", "--n1", "5", "--n2", "7", "--a1", "2/3", "--a2", "8/7",
                "--grid", "-12:8:400")
        self.assertEqual(r.returncode, 0, r.stderr)
        table = rows(r.stdout)
        self.assertEqual(table[0], ["x", "density"])
        self.assertEqual(len(table), 401)
        xs = [float(t[0]) for t in table[1:]]
        ps = [float(t[1]) for t in table[1:]]
        self.assertEqual(xs[0], -12.0)
        self.assertEqual(xs[-1], 8.0)
        self.assertTrue(all(p >= 0 for p in ps))
        mass = sum((xs[i + 1] - xs[i]) * (ps[i] + ps[i + 1]) / 2 for i in range(len(xs) - 1))
        # The window clips part of the left tail (the mean is -14/3).
        self.assertGreater(mass, 0.8)
        self.assertLess(mass, 1.0)

    def test_oracle_column_agrees(self):
        r = run("density", *ENSEMBLE, "--grid", "-6:6:7", "--oracle")
        self.assertEqual(r.returncode, 0, r.stderr)
        table = rows(r.stdout)
        self.assertEqual(table[0], ["x", "density", "oracle", "rel_diff"])
        for t in table[1:]:
            self.assertLess(float(t[3]), 1e-8)

    def test_json_and_summary(self):
        with tempfile.TemporaryDirectory() as d:
            summary = os.path.join(d, "s.json")
            r = run("density", *ENSEMBLE, "--grid", "-1:1:3", "--format", "json", "--summary", summary)
            self.assertEqual(r.returncode, 0, r.stderr)
            doc = json.loads(r.stdout)
            jsonschema.validate(doc, schema("table.json"))
            with open(summary) as f:
                s = json.load(f)
            self.assertEqual(Fraction(s["p_plus"]) + Fraction(s["p_minus"]), 1)
            self.assertEqual(doc["summary"], s)

    def test_exact_form(self):
        r = run("density", "--n", "1", "--n1", "1", "--n2", "1", "--exact-form")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("exact_form.json"))
        # Laplace law with unit rates.
        self.assertEqual(doc["density"]["neg"], [{"c": "1/2", "p": 0, "r": "1"}])
        self.assertEqual(doc["density"]["zero"], "1/2")

    def test_default_grid(self):
        r = run("density", *ENSEMBLE)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(len(rows(r.stdout)), 202)


class Records(unittest.TestCase):
    def test_positivity(self):
        r = run("positivity", "--n", "2", "--n1", "2", "--n2", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("positivity.json"))
        self.assertEqual(doc["p_plus"], "1/2")
        self.assertEqual(doc["P_plus"], doc["P_minus"])
        self.assertLess(Fraction(doc["P_plus"]) + Fraction(doc["P_minus"]), 1)

    def test_positivity_csv(self):
        r = run("positivity", *ENSEMBLE, "--format", "csv")
        self.assertEqual(r.returncode, 0, r.stderr)
        table = rows(r.stdout)
        self.assertEqual(table[0], ["quantity", "exact", "decimal"])
        self.assertEqual([t[0] for t in table[1:]], ["P_plus", "P_minus", "p_plus", "p_minus"])

    def test_moments(self):
        r = run("moments", "--n", "2", "--n1", "3", "--n2", "4", "--a1", "1/2", "--a2", "2",
                "--gamma-max", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("moments.json"))
        a1, a2, n, n1, n2 = Fraction(1, 2), Fraction(2), 2, 3, 4
        self.assertEqual(Fraction(doc["moments"][0]["moment"]), a1 * n1 - a2 * n2)
        second = a1 * a1 * n1 * (n + n1) + a2 * a2 * n2 * (n + n2) - 2 * a1 * a2 * n1 * n2
        self.assertEqual(Fraction(doc["moments"][1]["moment"]), second)
        self.assertEqual(doc["moments"][1]["moment"], doc["moments"][1]["abs_moment"])

    def test_gamma_cap(self):
        self.assertEqual(run("moments", *ENSEMBLE, "--gamma-max", "13").returncode, 2)


class Verify(unittest.TestCase):
    def test_all_pass(self):
        r = run("verify", *ENSEMBLE)
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = r.stdout.strip().splitlines()
        self.assertGreater(len(lines), 5)
        self.assertTrue(all(line.startswith("PASS ") for line in lines), r.stdout)

    def test_json(self):
        r = run("verify", "--n", "2", "--n1", "3", "--n2", "3", "--a1", "1/3", "--a2", "1/3",
                "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("verify.json"))
        self.assertTrue(doc["all_pass"])
        self.assertIn("symmetric_positivity", [c["name"] for c in doc["checks"]])


class Simulate(unittest.TestCase):
    def test_deterministic_across_workers(self):
        with tempfile.TemporaryDirectory() as d:
            outs = []
            for workers in ("1", "3"):
                out = os.path.join(d, f"h{workers}.csv")
                summary = os.path.join(d, f"s{workers}.json")
                r = run("simulate", *ENSEMBLE, "--samples", "500", "--seed", "11", "--bins", "10",
                        "--workers", workers, "--output", out, "--summary", summary)
                self.assertEqual(r.returncode, 0, r.stderr)
                with open(out, "rb") as f, open(summary, "rb") as g:
                    outs.append((f.read(), g.read()))
            self.assertEqual(outs[0], outs[1])
            s = json.loads(outs[0][1])
            jsonschema.validate(s, schema("simulate_summary.json"))
            self.assertEqual(s["eigenvalues"], 1500)
            table = rows(outs[0][0].decode())
            self.assertEqual(table[0], ["lo", "hi", "count", "density"])
            self.assertEqual(sum(int(t[2]) for t in table[1:]), 1500)

    def test_environment_workers(self):
        a = run("simulate", *ENSEMBLE, "--samples", "200", "--seed", "5")
        b = run("simulate", *ENSEMBLE, "--samples", "200", "--seed", "5", env={"WISHDIFF_WORKERS": "2"})
        self.assertEqual(a.returncode, 0, a.stderr)
        self.assertEqual(a.stdout, b.stdout)
        bad = run("simulate", *ENSEMBLE, "--samples", "10", env={"WISHDIFF_WORKERS": "zero"})
        self.assertEqual(bad.returncode, 2)

    def test_seed_changes_output(self):
        a = run("simulate", *ENSEMBLE, "--samples", "200", "--seed", "1")
        b = run("simulate", *ENSEMBLE, "--samples", "200", "--seed", "2")
        self.assertNotEqual(a.stdout, b.stdout)

    def test_exact_agreement(self):
        r = run("simulate", *ENSEMBLE, "--samples", "20000", "--seed", "4", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("table.json"))
        self.assertLess(doc["summary"]["ks_vs_exact"], 0.01)

    def test_density_matrices(self):
        r = run("simulate", "--n", "2", "--n1", "2", "--n2", "3", "--density-matrices",
                "--samples", "5000", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        s = json.loads(r.stdout)["summary"]
        self.assertLess(s["ks_vs_exact"], 0.02)


class Helstrom(unittest.TestCase):
    def test_fixture(self):
        r = run("helstrom", "--n", "2", "--n1", "2", "--n2", "2", "--grid", "-1:1:5", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema("table.json"))
        jsonschema.validate(doc["summary"], schema("helstrom_summary.json"))
        self.assertEqual(doc["summary"]["backend"], "fixture")
        self.assertEqual(doc["summary"]["abs_mean"], "18/35")
        self.assertEqual(doc["rows"][1], [-0.5, 15 / 16])

    def test_reflection(self):
        a = rows(run("helstrom", "--n", "3", "--n1", "3", "--n2", "4", "--grid", "-1:1:9").stdout)
        b = rows(run("helstrom", "--n", "3", "--n1", "4", "--n2", "3", "--grid", "-1:1:9").stdout)
        self.assertEqual([t[1] for t in a[1:]], [t[1] for t in reversed(b[1:])])

    def test_backends(self):
        with tempfile.TemporaryDirectory() as d:
            s = os.path.join(d, "s.json")
            r = run("helstrom", "--n", "5", "--n1", "5", "--n2", "6", "--simulate", "300", "--summary", s)
            self.assertEqual(r.returncode, 0, r.stderr)
            with open(s) as f:
                doc = json.load(f)
            jsonschema.validate(doc, schema("helstrom_summary.json"))
            self.assertEqual(doc["backend"], "mc")
            self.assertIsNone(doc["abs_mean"])

            r = run("helstrom", "--n", "20", "--n1", "20", "--n2", "20", "--asymptotic", "--summary", s)
            self.assertEqual(r.returncode, 0, r.stderr)
            with open(s) as f:
                doc = json.load(f)
            jsonschema.validate(doc, schema("helstrom_summary.json"))
            self.assertEqual(doc["backend"], "asymptotic")
            self.assertAlmostEqual(doc["support"][1], 0.16651, places=5)

    def test_small_asymptotic_warns(self):
        r = run("helstrom", "--n", "4", "--n1", "4", "--n2", "4", "--asymptotic")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("warning", r.stderr)

    def test_untabulated(self):
        r = run("helstrom", "--n", "5", "--n1", "5", "--n2", "5")
        self.assertEqual(r.returncode, 3)
        self.assertIn("--simulate", r.stderr)


class Asymptotic(unittest.TestCase):
    def test_scaled(self):
        with tempfile.TemporaryDirectory() as d:
            s = os.path.join(d, "s.json")
            r = run("asymptotic", "--c1", "1", "--c2", "1", "--alpha1", "1", "--alpha2", "1",
                    "--grid", "-4:4:9", "--summary", s)
            self.assertEqual(r.returncode, 0, r.stderr)
            with open(s) as f:
                doc = json.load(f)
            edge = ((11 + 5 * 5 ** 0.5) / 2) ** 0.5
            self.assertAlmostEqual(doc["support"][1], edge, places=10)
            table = rows(r.stdout)
            self.assertAlmostEqual(float(table[5][1]), 1 / 3.141592653589793, places=12)

    def test_unscaled(self):
        r = run("asymptotic", "--n", "50", "--n1", "100", "--n2", "200", "--a1", "2", "--a2", "3/4")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(rows(r.stdout)[0], ["x", "density"])

    def test_mixed_parameters(self):
        r = run("asymptotic", "--n", "5", "--n1", "5", "--n2", "5", "--c1", "1", "--c2", "1",
                "--alpha1", "1", "--alpha2", "1")
        self.assertEqual(r.returncode, 2)
        r = run("asymptotic", "--c1", "1")
        self.assertEqual(r.returncode, 2)


class Other(unittest.TestCase):
    def test_wlaw(self):
        with tempfile.TemporaryDirectory() as d:
            s = os.path.join(d, "s.json")
            r = run("wlaw", "--n1", "2", "--n2", "3", "--a1", "2/3", "--a2", "1/5", "--deriv", "3",
                    "--grid", "-1:1:3", "--summary", s)
            self.assertEqual(r.returncode, 0, r.stderr)
            with open(s) as f:
                self.assertTrue(json.load(f)["continuous_at_zero"])
        r = run("wlaw", "--n1", "2", "--n2", "3", "--deriv", "4")
        self.assertEqual(r.returncode, 2)
        r = run("wlaw", "--n1", "2", "--n2", "3", "--exact-form")
        jsonschema.validate(json.loads(r.stdout), schema("exact_form.json"))

    def test_correlate(self):
        r = run("correlate", *ENSEMBLE, "--points", "0,1")
        self.assertEqual(r.returncode, 0, r.stderr)
        table = rows(r.stdout)
        self.assertEqual(table[0], ["r", "correlation"])
        self.assertEqual(table[1][0], "2")
        self.assertGreater(float(table[1][1]), 0)
        self.assertEqual(run("correlate", *ENSEMBLE, "--points", "0,1,2,3").returncode, 2)


class Errors(unittest.TestCase):
    def test_invalid_arguments(self):
        self.assertEqual(run("simulate", *ENSEMBLE, "--samples", "0").returncode, 2)
        self.assertEqual(run("density", "--n", "4", "--n1", "3", "--n2", "5").returncode, 2)
        self.assertEqual(run("density", "--n", "2").returncode, 2)
        self.assertEqual(run("density", *ENSEMBLE, "--grid", "1:0:10").returncode, 2)
        self.assertEqual(run("density", *ENSEMBLE, "--grid", "0:1:1").returncode, 2)
        self.assertEqual(run("density", *ENSEMBLE, "--format", "xml").returncode, 2)
        self.assertEqual(run("nonsense").returncode, 2)
        self.assertEqual(run().returncode, 2)

    def test_decimals_rejected(self):
        r = run("density", "--n", "2", "--n1", "2", "--n2", "2", "--a1", "0.5")
        self.assertEqual(r.returncode, 2)
        self.assertIn("exact", r.stderr)

    def test_help(self):
        r = run("--help")
        self.assertEqual(r.returncode, 0)
        for sub in ("density", "asymptotic", "simulate", "positivity", "moments", "helstrom", "verify"):
            self.assertIn(sub, r.stdout)


if __name__ == "__main__":
    BINARY = os.path.abspath(sys.argv[1])
    SCHEMAS = os.path.abspath(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=1)
