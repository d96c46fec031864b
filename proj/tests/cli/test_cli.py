"""End-to-end checks of the dhom binary: schema, determinism, exit codes, table text.

Usage: test_cli.py <path-to-dhom> <repo-root>
"""

import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

DHOM = ""
ROOT = pathlib.Path(".")
COMMANDS = ["check-dct", "wide", "homoepi", "univloc", "theorem-b", "ar-quiver", "derived-indec"]


def run(*args):
    return subprocess.run([DHOM, *map(str, args)], capture_output=True, text=True, timeout=300)


def fixture(name):
    return ROOT / "fixtures" / name


class Schema(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        schema = json.loads((ROOT / "schema" / "report.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        cls.validator = jsonschema.Draft202012Validator(schema)

    def check(self, spec, command, *extra):
        p = run(command, spec, "--format", "json", *extra)
        self.assertEqual(p.returncode, 0, p.stderr)
        report = json.loads(p.stdout)
        errors = sorted(self.validator.iter_errors(report), key=str)
        self.assertFalse(errors, "\n".join(e.message for e in errors[:5]))
        self.assertEqual(report["command"], command)
        self.assertTrue(report["pass"])
        return report

    def test_every_command_on_flagship(self):
        for c in COMMANDS:
            with self.subTest(command=c):
                self.check(fixture("vaso-3-2-2.json"), c)

    def test_every_fixture_theorem_b(self):
        for spec in sorted((ROOT / "fixtures").glob("*.json")):
            if spec.name.endswith(".names.json"):
                continue
            with self.subTest(spec=spec.name):
                self.check(spec, "theorem-b")

    def test_flags(self):
        r = self.check(fixture("vaso-3-2-2.json"), "derived-indec", "--window", "2")
        self.assertTrue(all(len(o["shifts"]) == 5 for o in r["result"]["orbits"]))
        r = self.check(fixture("vaso-3-2-2.json"), "wide", "--include-zero")
        self.assertEqual(r["result"]["count"], 8)
        self.assertIn([], [w["generators"] for w in r["result"]["wide"]])


class Flagship(unittest.TestCase):
    def test_check_dct_line(self):
        p = run("check-dct", fixture("vaso-3-2-2.json"))
        self.assertEqual(p.returncode, 0)
        self.assertIn("F is 2-cluster-tilting: true\n", p.stdout)

    def test_tables_markdown(self):
        p = run("theorem-b", fixture("vaso-3-2-2.json"))
        self.assertEqual(p.returncode, 0, p.stderr)
        rows = [
            "| 1 | End(f1) | 1 | add(Γ1) | 1 ↦ id_{f1} |",
            "| 2 | End(f2⊕f2) | 4 | add(Γ2) | 1 ↦ id_{f2⊕f2} |",
            "| 3 | End(f3⊕f3) | 4 | add(Γ3) | 1 ↦ id_{f3⊕f3} |",
            "| 4 | End(f4) | 1 | add(Γ4) | 1 ↦ id_{f4} |",
            "| 5 | End(f1⊕f3⊕f3) | 5 | add(Γ5) | 1 ↦ id_{f1⊕f3⊕f3} |",
            "| 6 | End(f2⊕f2⊕f4) | 5 | add(Γ6) | 1 ↦ id_{f2⊕f2⊕f4} |",
            "| 7 | End(Φ_Φ) ≅ Φ | 5 | F | 1 ↦ id_{Φ_Φ} |",
            "| 1 | add{Σ^ℤ{f1}} | add{Σ^ℤ{f2,f3,x}} |",
            "| 2 | add{Σ^ℤ{f2}} | add{Σ^ℤ{f3,f4,s2}} |",
            "| 3 | add{Σ^ℤ{f3}} | add{Σ^ℤ{f1,f4,x}} |",
            "| 4 | add{Σ^ℤ{f4}} | add{Σ^ℤ{f1,f2,s2}} |",
            "| 5 | add{Σ^ℤ{f1,f3}} | add{Σ^ℤ{x}} |",
            "| 6 | add{Σ^ℤ{f2,f4}} | add{Σ^ℤ{s2}} |",
            "| 7 | D^b(mod Φ) | 0 |",
        ]
        for r in rows:
            self.assertIn(r, p.stdout)

    def test_kA2_has_four_rows(self):
        r = json.loads(run("theorem-b", fixture("kA2.json"), "--format", "json").stdout)
        self.assertEqual(len(r["result"]["table2"]), 4)

    def test_determinism(self):
        for c in COMMANDS:
            for fmt in ("md", "json"):
                with self.subTest(command=c, format=fmt):
                    a = run(c, fixture("vaso-3-2-2.json"), "--format", fmt)
                    b = run(c, fixture("vaso-3-2-2.json"), "--format", fmt)
                    self.assertEqual(a.returncode, 0)
                    self.assertEqual(a.stdout, b.stdout)


class Errors(unittest.TestCase):
    def write(self, doc):
        f = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
        json.dump(doc, f) if not isinstance(doc, str) else f.write(doc)
        f.close()
        return f.name

    def base(self):
        return json.loads(fixture("vaso-3-2-2.json").read_text())

    def test_unknown_arrow_in_relation(self):
        doc = self.base()
        doc["relations"] = [[{"coeff": 1, "path": ["a", "c"]}]]
        p = run("wide", self.write(doc))
        self.assertEqual(p.returncode, 2)
        self.assertIn("/relations/0/0/path/1", p.stderr)
        self.assertIn("'c'", p.stderr)

    def test_non_composable_path(self):
        doc = self.base()
        doc["relations"] = [[{"path": ["b", "a"]}]]
        p = run("wide", self.write(doc))
        self.assertEqual(p.returncode, 2)
        self.assertIn("arrow 'a'", p.stderr)

    def test_malformed_json(self):
        p = run("wide", self.write("{\"vertices\": ["))
        self.assertEqual(p.returncode, 2)
        self.assertTrue(p.stderr.startswith("error: "))

    def test_bad_field_and_d(self):
        doc = self.base()
        doc["field"] = "R"
        self.assertEqual(run("wide", self.write(doc)).returncode, 2)
        doc = self.base()
        doc["d"] = 0
        self.assertEqual(run("wide", self.write(doc)).returncode, 2)

    def test_gldim_above_d_is_refused(self):
        doc = json.loads(fixture("kA4-rad3.json").read_text())
        doc["d"] = 1
        p = run("univloc", self.write(doc))
        self.assertEqual(p.returncode, 2, p.stdout)

    def test_unknown_F_member(self):
        doc = self.base()
        doc["F"] = ["f1", "nope"]
        p = run("wide", self.write(doc), "--names", fixture("vaso-3-2-2.names.json"))
        self.assertEqual(p.returncode, 2)
        self.assertIn("/F/1", p.stderr)

    def test_not_representation_finite(self):
        doc = {"field": "Q", "vertices": ["1", "2"],
               "arrows": [{"name": "a", "from": "1", "to": "2"}, {"name": "b", "from": "1", "to": "2"}],
               "relations": [], "d": 1}
        p = run("check-dct", self.write(doc), "--dim-cap", "12")
        self.assertEqual(p.returncode, 2, p.stdout)
        self.assertIn("NotRepresentationFinite", p.stderr)


if __name__ == "__main__":
    DHOM = sys.argv[1]
    ROOT = pathlib.Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
