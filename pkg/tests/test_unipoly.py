import unittest
from fractions import Fraction


class TestPolynomials(unittest.TestCase):
    def test_interpolation_recovers_quadratic(self):
        from unipoly import poly_coefficients, poly_eval, poly_interpolate

        p = poly_interpolate([(0, 1), (1, 2), (2, 5)])
        self.assertEqual(poly_coefficients(p), [Fraction(1), Fraction(0), Fraction(1)])
        self.assertEqual(poly_eval(p, 3), Fraction(10))

    def test_interpolation_small_cases(self):
        from unipoly import poly_coefficients, poly_interpolate

        self.assertEqual(poly_coefficients(poly_interpolate([(0, 1), (1, 3)])), [Fraction(1), Fraction(2)])
        self.assertEqual(poly_coefficients(poly_interpolate([(0, 0), (1, 0), (2, 0)])), [])

    def test_interpolation_rejects_repeated_abscissa(self):
        from errors import InputError
        from unipoly import poly_interpolate

        with self.assertRaises(InputError):
            poly_interpolate([(1, 2), (1, 3)])

    def test_derivative(self):
        from unipoly import poly_derivative, poly_eval, poly_interpolate

        p = poly_interpolate([(0, 1), (1, 2), (2, 5)])
        self.assertEqual(poly_eval(poly_derivative(p), 1), Fraction(2))


class TestRatFun(unittest.TestCase):
    def test_simple_residue(self):
        from unipoly import RatFun

        f = 3 / (2 - 2 * RatFun.var())
        self.assertEqual(f.residue(1), Fraction(-3, 2))
        self.assertEqual(f.residue(0), Fraction(0))

    def test_evaluation_limits_and_residues(self):
        from errors import PoleError
        from unipoly import RatFun

        e = RatFun.var()
        f = (e * e + 5 * e) / e
        self.assertEqual(f.eval(2), Fraction(7))
        self.assertEqual(f.limit(0), Fraction(5))
        self.assertEqual(RatFun.const(Fraction(3, 4)).eval(11), Fraction(3, 4))
        self.assertEqual(((e - 1) / (e - 1)).limit(1), Fraction(1))
        self.assertEqual(((3 * e + 2) / e).residue(0), Fraction(2))
        self.assertEqual((e * e + 1).residue(5), Fraction(0))
        with self.assertRaises(PoleError):
            (1 / (e - 1)).eval(1)

    def test_double_pole_is_unsupported(self):
        from errors import UnsupportedOrderError
        from unipoly import RatFun

        x = RatFun.var()
        with self.assertRaises(UnsupportedOrderError):
            (1 / (x * x)).residue(0)

    def test_limit_after_cancellation(self):
        from unipoly import RatFun

        x = RatFun.var()
        f = (x * x - 1) / (x - 1)
        self.assertEqual(f.limit(1), Fraction(2))

    def test_genuine_pole(self):
        from errors import PoleError
        from unipoly import RatFun

        with self.assertRaises(PoleError):
            (1 / RatFun.var()).limit(0)

    def test_arithmetic_and_equality(self):
        from unipoly import RatFun

        x = RatFun.linear(1, 2)
        self.assertEqual(x - x, 0)
        self.assertEqual((x * x).derivative().eval(0), Fraction(4))
        self.assertEqual(RatFun.const(Fraction(3, 4)), Fraction(3, 4))
        self.assertEqual(hash(RatFun.const(5)), hash(Fraction(5)))

    def test_coerce_rejects_strings(self):
        from unipoly import RatFun

        with self.assertRaises(TypeError):
            RatFun.coerce("x")


if __name__ == "__main__":
    unittest.main()
