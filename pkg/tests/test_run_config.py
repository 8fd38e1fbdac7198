import tempfile
import unittest
from fractions import Fraction
from pathlib import Path


class TestRunConfig(unittest.TestCase):
    def test_defaults_when_missing(self):
        from run_config import load_config

        cfg = load_config("/tmp/nonexistent-verifier-config.json")
        self.assertEqual(cfg.q, "2")
        self.assertEqual(cfg.kappa, ["1", "1", "1"])
        self.assertEqual(cfg.seed, 7)
        self.assertEqual(cfg.threads, 1)

    def test_defaults_when_malformed(self):
        from run_config import load_config

        with tempfile.TemporaryDirectory() as tmp:
            p = Path(tmp) / "cfg.json"
            p.write_text("{not json", encoding="utf-8")
            self.assertEqual(load_config(str(p)).max_a, 3)
            p.write_text("[1, 2]", encoding="utf-8")
            self.assertEqual(load_config(str(p)).trials, 5)

    def test_save_and_load(self):
        from run_config import RunConfig, load_config, save_config

        with tempfile.TemporaryDirectory() as tmp:
            p = Path(tmp) / "nested" / "cfg.json"
            save_config(str(p), RunConfig(q="3/2", uC=["3"], seed=11))
            cfg = load_config(str(p))
            self.assertEqual((cfg.q, cfg.uC, cfg.seed), ("3/2", ["3"], 11))

    def test_unknown_keys_are_ignored(self):
        from run_config import config_from_dict

        cfg = config_from_dict({"q": 3, "color": "blue", "trials": "4"})
        self.assertEqual((cfg.q, cfg.trials), ("3", 4))

    def test_flags_override(self):
        from run_config import RunConfig, override

        cfg = override(RunConfig(), seed=3, q=None, kappa=["1", "5/3", "1"])
        self.assertEqual((cfg.seed, cfg.q, cfg.kappa), (3, "2", ["1", "5/3", "1"]))

    def test_twist_needs_three_components(self):
        from errors import InputError
        from run_config import RunConfig, run_twist

        with self.assertRaises(InputError):
            run_twist(RunConfig(kappa=["1", "2"]))

    def test_bethe_config_from_arrays(self):
        from run_config import RunConfig, run_bethe_config

        cfg = run_bethe_config(RunConfig(uC=["3"], vC=["5"], uB=[], vB=[]))
        self.assertEqual(cfg.r1.value(Fraction(3)), Fraction(17, 4))

    def test_spectral_point_needs_r_values(self):
        from errors import InputError
        from run_config import RunConfig, run_bethe_config

        with self.assertRaises(InputError):
            run_bethe_config(RunConfig(z="7", r1_at_z="2"))

    def test_rprime_must_pair_with_points(self):
        from errors import InputError
        from run_config import RunConfig, run_bethe_config

        with self.assertRaises(InputError):
            run_bethe_config(RunConfig(uC=["3"], uB=["5"], rprime1=["1", "2"]))


if __name__ == "__main__":
    unittest.main()
