import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies

seeds = strategies.integers(min_value=0, max_value=10 ** 6)
branches = strategies.sampled_from(["l", "r"])


def _sampler(seed, label="identities"):
    from sampling import Sampler

    return Sampler(seed, label, 0, Fraction(2))


class TestWorkedValues(unittest.TestCase):
    def test_lemma3_single_pair(self):
        from identities import g_n, lemma3
        from kernel import QContext

        ctx = QContext(2)
        self.assertEqual(g_n([3], [5], ctx), Fraction(135, 28))
        lhs, rhs = lemma3([3], [5], 7, ctx)
        self.assertEqual(lhs, Fraction(-675, 56))
        self.assertEqual(rhs, Fraction(-675, 56))

    def test_lambda_fold_single_pair(self):
        from identities import lambda_pair
        from kernel import QContext

        left, right = lambda_pair([3], [5], 7, QContext(2))
        self.assertEqual(left, Fraction(-675, 56))
        self.assertEqual(right, Fraction(-675, 56))

    def test_corollary_1a_single_pair(self):
        from identities import corollaries
        from kernel import QContext

        self.assertEqual(corollaries([3], [5], "1a", QContext(2)), (Fraction(135, 28), Fraction(135, 28)))

    def test_triv_relation_holds_per_partition(self):
        from identities import corollaries, joint_partitions
        from kernel import QContext

        ctx = QContext(2)
        alpha, beta = [Fraction(3), Fraction(7)], [Fraction(5), Fraction(-1, 3)]
        lhs, rhs = corollaries(alpha, beta, "triv", ctx)
        self.assertEqual(len(lhs), len(list(joint_partitions(alpha, beta))))
        self.assertEqual(len(lhs), 6)
        for k, (left, right) in enumerate(zip(lhs, rhs)):
            self.assertEqual(left, right, k)

    def test_empty_sets(self):
        from identities import COROLLARIES, corollaries, lambda_pair, lemma3
        from kernel import QContext

        ctx = QContext(2)
        self.assertEqual(lemma3([], [], 7, ctx), (Fraction(1), Fraction(1)))
        self.assertEqual(lambda_pair([], [], 7, ctx), (Fraction(1), Fraction(1)))
        for which in COROLLARIES:
            lhs, rhs = corollaries([], [], which, ctx)
            self.assertEqual(lhs, rhs, which)
        self.assertEqual(corollaries([], [], "3", ctx), (Fraction(0), Fraction(0)))

    def test_block_expansion_by_hand(self):
        from identities import RowBlock, genmat
        from kernel import QContext, delta_n

        ctx = QContext(2)
        xs = [Fraction(3), Fraction(7)]
        lhs, rhs = genmat(RowBlock(1, lambda i, x: x), RowBlock(1, lambda j, x: 1), xs, ctx)
        self.assertEqual(lhs, delta_n(xs, ctx) * (xs[0] - xs[1]))
        self.assertEqual(rhs, lhs)

    def test_lemma2_with_vanishing_phi1(self):
        from identities import lemma2
        from izergin import izergin
        from kernel import QContext

        ctx = QContext(2)
        gamma, xi = [Fraction(3), Fraction(5)], [Fraction(7), Fraction(-1, 3)]
        phi1 = {g: Fraction(0) for g in gamma}
        phi2 = {gamma[0]: Fraction(2), gamma[1]: Fraction(-3, 4)}
        lhs, rhs = lemma2(gamma, xi, phi1, phi2, "r", ctx)
        self.assertEqual(lhs, izergin(gamma, xi, "r", ctx) * Fraction(-3, 2))
        self.assertEqual(rhs, lhs)

    def test_argument_errors(self):
        from errors import InputError
        from identities import corollaries, lemma1, lemma2, lambda_residue_checks
        from kernel import QContext

        ctx = QContext(2)
        with self.assertRaises(InputError):
            lemma1([1, 2], [3], [], "l", ctx)
        with self.assertRaises(InputError):
            lemma2([3], [5], {3: 1}, {4: 1}, "l", ctx)
        with self.assertRaises(InputError):
            corollaries([3], [5], "4", ctx)
        with self.assertRaises(InputError):
            lambda_residue_checks([], [], 7, "l-at-beta", ctx)


class TestIdentities(unittest.TestCase):
    @settings(deadline=None, max_examples=12)
    @given(seeds, branches, strategies.integers(min_value=0, max_value=2), strategies.integers(min_value=0, max_value=2))
    def test_lemma1(self, seed, branch, m1, m2):
        from identities import lemma1
        from kernel import QContext

        s = _sampler(seed)
        lhs, rhs = lemma1(s.points(m1 + m2), s.points(m1), s.points(m2), branch, QContext(2))
        self.assertEqual(lhs, rhs)

    @settings(deadline=None, max_examples=12)
    @given(seeds, branches, strategies.integers(min_value=0, max_value=3))
    def test_lemma2(self, seed, branch, m):
        from identities import lemma2
        from kernel import QContext

        s = _sampler(seed)
        gamma, xi = s.points(m), s.points(m)
        lhs, rhs = lemma2(gamma, xi, s.table(gamma), s.table(gamma), branch, QContext(2))
        self.assertEqual(lhs, rhs)

    @settings(deadline=None, max_examples=10)
    @given(seeds, strategies.integers(min_value=0, max_value=3))
    def test_lemma3(self, seed, n):
        from identities import lemma3
        from kernel import QContext

        s = _sampler(seed)
        lhs, rhs = lemma3(s.points(n), s.points(n), s.fresh(), QContext(2))
        self.assertEqual(lhs, rhs)

    @settings(deadline=None, max_examples=20)
    @given(seeds, strategies.sampled_from(["1a", "1b", "2a", "2b", "3", "triv"]), strategies.integers(min_value=1, max_value=3))
    def test_corollaries(self, seed, which, n):
        from identities import corollaries
        from kernel import QContext

        s = _sampler(seed)
        lhs, rhs = corollaries(s.points(n), s.points(n), which, QContext(2))
        self.assertEqual(lhs, rhs)

    @settings(deadline=None, max_examples=10)
    @given(seeds, strategies.integers(min_value=0, max_value=2), strategies.integers(min_value=0, max_value=2))
    def test_block_determinant_expansion(self, seed, a, b):
        from identities import RowBlock, genmat
        from kernel import QContext

        ctx = QContext(2)
        s = _sampler(seed)
        alpha, beta, xs = s.points(a), s.points(b), s.points(a + b)
        block1 = RowBlock(a, lambda i, x: ctx.g(x, alpha[i]))
        block2 = RowBlock(b, lambda j, x: ctx.h(beta[j], x) + x)
        lhs, rhs = genmat(block1, block2, xs, ctx)
        self.assertEqual(lhs, rhs)

    @settings(deadline=None, max_examples=10)
    @given(seeds, strategies.integers(min_value=0, max_value=3))
    def test_lambda_forms(self, seed, n):
        from identities import lambda_pair, lambda_r_recursion
        from kernel import QContext

        s = _sampler(seed)
        alpha, beta, z = s.points(n), s.points(n), s.fresh()
        ctx = QContext(2)
        left, right = lambda_pair(alpha, beta, z, ctx)
        self.assertEqual(left, right)
        product, closed = lambda_r_recursion(alpha, beta, z, ctx)
        self.assertEqual(product, closed)

    @settings(deadline=None, max_examples=12)
    @given(seeds, strategies.sampled_from(["l-at-beta", "l-at-betaq-2", "r-at-beta", "r-at-betaq-2"]), strategies.integers(min_value=1, max_value=2))
    def test_residues(self, seed, which, n):
        from identities import lambda_residue_checks
        from kernel import QContext

        s = _sampler(seed)
        residue, predicted = lambda_residue_checks(s.points(n), s.points(n), s.fresh(), which, QContext(2))
        self.assertEqual(residue, predicted)


if __name__ == "__main__":
    unittest.main()
