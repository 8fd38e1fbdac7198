import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies


small_fracs = strategies.fractions(min_value=-20, max_value=20, max_denominator=12)


class TestScalars(unittest.TestCase):
    def test_parse_reduces(self):
        from exact import scalar_parse

        self.assertEqual(scalar_parse("4/6"), Fraction(2, 3))
        self.assertEqual(scalar_parse("-7"), Fraction(-7))
        self.assertEqual(scalar_parse(" 3/9 "), Fraction(1, 3))

    def test_parse_rejects_malformed(self):
        from errors import ParseError
        from exact import scalar_parse

        for text in ("", "1/0", "abc", "1.5", "2/-3"):
            with self.assertRaises(ParseError):
                scalar_parse(text)

    def test_format_is_canonical(self):
        from exact import scalar_format

        self.assertEqual(scalar_format(Fraction(4, 6)), "2/3")
        self.assertEqual(scalar_format(Fraction(-8, 4)), "-2")


class TestDeterminants(unittest.TestCase):
    def test_two_by_two(self):
        from exact import det_rows

        self.assertEqual(det_rows([[1, 2], [3, 4]]), Fraction(-2))

    def test_empty_and_identity(self):
        from exact import ExactMatrix, det_exact, det_rows, scalar_parse

        self.assertEqual(det_rows([]), Fraction(1))
        self.assertEqual(det_exact(ExactMatrix.identity(3)), Fraction(1))
        self.assertEqual(scalar_parse("5/3"), Fraction(5, 3))

    def test_zero_pivot_swaps_rows(self):
        from exact import det_rows

        self.assertEqual(det_rows([[0, 1], [1, 0]]), Fraction(-1))
        self.assertEqual(det_rows([[0, 0], [1, 2]]), Fraction(0))

    def test_ragged_rows(self):
        from errors import DimensionError
        from exact import ExactMatrix

        with self.assertRaises(DimensionError):
            ExactMatrix.from_rows([[1, 2], [3]])

    def test_non_square(self):
        from errors import DimensionError
        from exact import ExactMatrix, det_exact

        with self.assertRaises(DimensionError):
            det_exact(ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))

    @settings(deadline=None, max_examples=40)
    @given(strategies.data())
    def test_bareiss_matches_cofactor(self, data):
        from exact import ExactMatrix, det_cofactor, det_exact

        n = data.draw(strategies.integers(min_value=1, max_value=4))
        rows = [[data.draw(small_fracs) for _ in range(n)] for _ in range(n)]
        m = ExactMatrix.from_rows(rows)
        self.assertEqual(det_exact(m), det_cofactor(m))

    @settings(deadline=None, max_examples=25)
    @given(strategies.data())
    def test_determinant_is_multiplicative(self, data):
        from exact import ExactMatrix, det_exact, matmul

        n = data.draw(strategies.integers(min_value=1, max_value=3))
        a = ExactMatrix.from_rows([[data.draw(small_fracs) for _ in range(n)] for _ in range(n)])
        b = ExactMatrix.from_rows([[data.draw(small_fracs) for _ in range(n)] for _ in range(n)])
        self.assertEqual(det_exact(matmul(a, b)), det_exact(a) * det_exact(b))

    def test_sum_and_product(self):
        from exact import exact_prod, exact_sum

        self.assertEqual(exact_sum([]), 0)
        self.assertEqual(exact_prod([]), 1)
        self.assertEqual(exact_sum([Fraction(1, 2), Fraction(1, 3)]), Fraction(5, 6))
        self.assertEqual(exact_prod([Fraction(2, 3), Fraction(3, 4)]), Fraction(1, 2))


if __name__ == "__main__":
    unittest.main()
