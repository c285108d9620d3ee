"""
Tests for the command line interface.
"""

from contextlib import redirect_stderr, redirect_stdout
import io
import json
import os
import tempfile

from primitive_dfa.catalog import a4_dfa
from primitive_dfa.cli import EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main
from primitive_dfa.dfa_file import format_dfa_file, read_dfa_file, write_dfa_file
from primitive_dfa.families import cyclic_dfa, maslov_pair

from .utils import TestsBase


class TestCli(TestsBase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()

    def path(self, name: str) -> str:
        return os.path.join(self.tmp, name)

    def run_main(self, *argv: str) -> tuple[int, str, str]:
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_analyze(self):
        write_dfa_file(self.path("a4.dfa"), a4_dfa())
        code, out, _ = self.run_main("analyze", self.path("a4.dfa"))
        self.assertEqual(code, EXIT_OK)
        self.assertIn("states: 4\n", out)
        self.assertIn("uniformly minimal: yes (primitive, order 12)\n", out)
        self.assertIn("group primitive: yes\n", out)

    def test_analyze_json(self):
        write_dfa_file(self.path("c6.dfa"), cyclic_dfa(6))
        code, out, _ = self.run_main("analyze", "--json", self.path("c6.dfa"))
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["states"], 6)
        self.assertEqual(report["group_order"], 6)
        self.assertFalse(report["uniformly_minimal"])
        self.assertFalse(report["uniformly_minimal_bruteforce"])
        self.assertIn("{1,3,5}", report["indistinguishable_classes"])

    def test_product(self):
        left, right = maslov_pair(3, 3)
        write_dfa_file(self.path("left.dfa"), left)
        write_dfa_file(self.path("right.dfa"), right)
        code, out, _ = self.run_main(
            "product", "--boolean", "--ubm",
            self.path("left.dfa"), self.path("right.dfa"),
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("product states: 9\n", out)
        self.assertIn("intersection 9", out)
        self.assertIn("uniformly boolean minimal: yes\n", out)

    def test_gen_to_stdout(self):
        code, out, _ = self.run_main("gen", "cyclic", "--n", "4")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, format_dfa_file(cyclic_dfa(4)))

    def test_gen_pair_to_files(self):
        prefix = self.path("maslov")
        code, _, _ = self.run_main("gen", "maslov", "--m", "3", "--n", "4", "-o", prefix)
        self.assertEqual(code, EXIT_OK)
        left, right = maslov_pair(3, 4)
        self.assertEqual(read_dfa_file(f"{prefix}-left.dfa"), left)
        self.assertEqual(read_dfa_file(f"{prefix}-right.dfa"), right)

    def test_usage_errors(self):
        code, _, err = self.run_main("gen", "cyclic", "--n", "1")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("error:", err)
        code, _, err = self.run_main("gen", "maslov", "--n", "3")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("--m", err)
        code, _, _ = self.run_main("analyze", self.path("missing.dfa"))
        self.assertEqual(code, EXIT_USAGE)
        with open(self.path("bad.dfa"), "w", encoding="utf-8") as f:
            f.write("states: 2\nalphabet: a\n")
        code, _, err = self.run_main("analyze", self.path("bad.dfa"))
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("line 2", err)
        with self.assertRaises(SystemExit), redirect_stderr(io.StringIO()):
            main(["frobnicate"])

    def test_paper_suite(self):
        code, out, _ = self.run_main("paper-suite", "--only", "cyclic-blocks")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("cyclic-blocks  pass"))
        self.assertTrue(out.endswith("1 rows, 0 failed\n"))

    def test_conjecture(self):
        code, out, _ = self.run_main("conjecture-affine-ubm", "--k", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "k=1: not uniformly boolean minimal (FxF on {1} and {1})\n")
        code, _, err = self.run_main("conjecture-affine-ubm", "--k", "4")
        self.assertEqual(code, EXIT_LIMIT)
        self.assertIn("refused:", err)
