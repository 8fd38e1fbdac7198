import json
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path


def _record(status="pass", suite="kernel", case="kernel/relations#0", **kw):
    from report import VerificationReport

    return VerificationReport(suite=suite, case=case, seed=7, sizes={"n": 1}, status=status, **kw)


class TestValues(unittest.TestCase):
    def test_format_value(self):
        from report import format_value

        self.assertEqual(format_value(Fraction(4, 6)), "2/3")
        self.assertEqual(format_value((Fraction(1), Fraction(-1, 2))), "1; -1/2")

    def test_outcome(self):
        from report import FAIL, PASS, outcome

        self.assertEqual(outcome(Fraction(1, 2), Fraction(2, 4)), ("1/2", "1/2", PASS))
        self.assertEqual(outcome((Fraction(1),), (Fraction(2),))[2], FAIL)


class TestReportFiles(unittest.TestCase):
    def test_jsonl_fields(self):
        rec = _record(lhs="1", rhs="1", wall_ms=1.5)
        data = json.loads(rec.to_json())
        self.assertEqual(
            sorted(data),
            ["case", "lhs", "message", "rhs", "seed", "sizes", "status", "suite", "wall_ms"],
        )
        self.assertTrue(rec.passed)

    def test_writes_latest_and_stamped(self):
        from report import write_report_files

        with tempfile.TemporaryDirectory() as tmp:
            latest = Path(tmp) / "reports" / "latest.jsonl"
            latest_path, stamped_path = write_report_files([_record(), _record("fail")], str(latest))
            self.assertEqual(latest_path, str(latest))
            self.assertTrue(Path(stamped_path).name.startswith("report_"))
            text = Path(latest_path).read_text(encoding="utf-8")
            self.assertEqual(text, Path(stamped_path).read_text(encoding="utf-8"))
            self.assertEqual(len(text.splitlines()), 2)


class TestSummary(unittest.TestCase):
    def test_counts_per_suite(self):
        from report import summarize

        rows = summarize([_record(), _record("fail"), _record(suite="hc", case="hc/x#0")])
        self.assertEqual([r["suite"] for r in rows], ["kernel", "hc"])
        self.assertEqual((rows[0]["pass"], rows[0]["fail"], rows[0]["error"]), (1, 1, 0))

    def test_table_icons(self):
        from report import STATUS_ICONS, summary_table

        table = summary_table([_record(), _record(suite="hc", case="hc/x#0", status="error")])
        lines = table.splitlines()
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith(STATUS_ICONS["pass"]))
        self.assertTrue(lines[2].startswith(STATUS_ICONS["error"]))

    def test_failure_lines(self):
        from report import failure_lines

        lines = failure_lines([
            _record(),
            _record("fail", lhs="1", rhs="2"),
            _record("error", message="PoleError: pole of g(1, 1)"),
        ])
        self.assertEqual(len(lines), 2)
        self.assertIn("lhs = 1, rhs = 2", lines[0])
        self.assertIn("PoleError", lines[1])

    def test_display_width_of_plain_text(self):
        from report import display_width, pad

        self.assertEqual(display_width("abc"), 3)
        self.assertEqual(pad("ab", 4), "ab  ")


if __name__ == "__main__":
    unittest.main()
