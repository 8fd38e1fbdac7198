import unittest
from fractions import Fraction
from math import comb

from hypothesis import given, settings, strategies


class TestPartitions(unittest.TestCase):
    def test_counts_match_binomials(self):
        from partitions import enum_all_pairs, enum_pair_partitions

        xs = [Fraction(k) for k in range(1, 6)]
        for k in range(6):
            self.assertEqual(len(list(enum_pair_partitions(xs, k))), comb(5, k))
        self.assertEqual(len(list(enum_all_pairs(xs))), 2 ** 5)

    def test_blocks_keep_source_order(self):
        from partitions import enum_pair_partitions

        for p in enum_pair_partitions("abcd", 2):
            self.assertEqual(list(p.first), sorted(p.first))
            self.assertEqual(list(p.second), sorted(p.second))
            self.assertEqual(sorted(p.first + p.second), list("abcd"))

    def test_small_enumerations(self):
        from partitions import enum_partitions

        self.assertEqual(len(list(enum_partitions("abc", (1, 2)))), 3)
        self.assertEqual(list(enum_partitions([], ())), [[]])
        self.assertEqual(len(list(enum_partitions("abcd", (2, 2)))), 6)

    def test_multinomial(self):
        from partitions import enum_partitions, multinomial

        self.assertEqual(multinomial([2, 1, 1]), 12)
        self.assertEqual(len(list(enum_partitions(range(4), (2, 1, 1)))), 12)

    def test_bad_sizes(self):
        from errors import InputError
        from partitions import enum_pair_partitions, enum_partitions

        with self.assertRaises(InputError):
            list(enum_partitions([1, 2], (1, 2)))
        with self.assertRaises(InputError):
            list(enum_pair_partitions([1, 2], 3))

    def test_parity(self):
        from partitions import permutation_parity

        self.assertEqual(permutation_parity("abc", "c", "ab"), 1)
        self.assertEqual(permutation_parity("abc", "b", "ac"), -1)
        self.assertEqual(permutation_parity("", "", ""), 1)
        self.assertEqual(permutation_parity("xy", "y", "x"), -1)
        self.assertEqual(permutation_parity("xy", "x", "y"), 1)

    def test_sign_of_a_transposition(self):
        from kernel import QContext
        from partitions import Partition2, partition_sign

        ctx = QContext(2)
        origin = (Fraction(3), Fraction(7))
        self.assertEqual(partition_sign(Partition2((Fraction(7),), (Fraction(3),), origin), ctx), -1)
        self.assertEqual(partition_sign(Partition2(origin, (), origin), ctx), 1)

    @settings(deadline=None, max_examples=15)
    @given(strategies.integers(min_value=0, max_value=10 ** 6), strategies.integers(min_value=0, max_value=5))
    def test_g_ratio_is_the_parity(self, seed, n):
        from kernel import QContext
        from partitions import enum_all_pairs, parity_scalar, partition_sign
        from sampling import Sampler

        ctx = QContext(2)
        xs = Sampler(seed, "partitions", 0, ctx.q).points(n)
        for p in enum_all_pairs(xs):
            self.assertEqual(partition_sign(p, ctx), parity_scalar(p))


if __name__ == "__main__":
    unittest.main()
