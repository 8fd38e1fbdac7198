import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies


class TestKernels(unittest.TestCase):
    def test_trigonometric_values(self):
        from kernel import QContext

        ctx = QContext(2)
        self.assertEqual(ctx.c, Fraction(3, 2))
        self.assertEqual(ctx.f(3, 1), Fraction(11, 4))
        self.assertEqual(ctx.h(3, 1), Fraction(11, 3))
        self.assertEqual(ctx.t(3, 1), Fraction(9, 44))
        self.assertEqual(ctx.g(1, 4), Fraction(-1, 2))

    def test_same_set_h_includes_diagonal(self):
        from kernel import QContext, kfun_prod

        ctx = QContext(2)
        self.assertEqual(ctx.h(7, 7), Fraction(7))
        self.assertEqual(kfun_prod("h", [3, 5], [1], ctx), Fraction(209, 9))
        self.assertEqual(kfun_prod("h", [3, 5], [], ctx), Fraction(1))

    def test_deltas(self):
        from kernel import QContext, delta_n, delta_prime

        ctx = QContext(2)
        self.assertEqual(delta_n([3, 1], ctx), Fraction(-3, 4))
        self.assertEqual(delta_prime([3, 1], ctx), Fraction(3, 4))
        self.assertEqual(delta_n([], ctx), Fraction(1))

    def test_products_over_sets(self):
        from bethe import TwistVector, onshell_config
        from kernel import QContext, c_h, kfun_prod, pprod

        ctx = QContext(2)
        self.assertEqual(kfun_prod("f", [], [1, 2], ctx), Fraction(1))
        self.assertEqual(kfun_prod("f", [3], [1], ctx), Fraction(11, 4))
        self.assertEqual(pprod([2, 3, 5]), Fraction(30))
        self.assertEqual(pprod([]), Fraction(1))
        self.assertEqual(pprod([Fraction(-1, 2), 4]), Fraction(-2))
        self.assertEqual(c_h(onshell_config([], [], [], [], TwistVector(), ctx)), Fraction(1))
        self.assertEqual(c_h(onshell_config([7], [], [3], [], TwistVector(), ctx)), Fraction(3))
        self.assertEqual(c_h(onshell_config([], [5], [], [7], TwistVector(), ctx)), Fraction(5))

    def test_scaling_examples(self):
        from errors import InputError
        from kernel import scaling_substitute

        self.assertEqual(scaling_substitute("f", 3, 1, 2).limit(0), Fraction(2))
        self.assertEqual(scaling_substitute("g", 3, 1, 2).limit(0), Fraction(1))
        with self.assertRaises(InputError):
            scaling_substitute("h", 4, 4, 2)

    def test_invariant_values(self):
        from kernel import kfun_invariant

        self.assertEqual(kfun_invariant("f", 3, 1, 2), Fraction(2))
        self.assertEqual(kfun_invariant("g", 3, 1, 2), Fraction(1))
        self.assertEqual(kfun_invariant("t", 3, 1, 2), Fraction(1, 2))

    def test_poles(self):
        from errors import PoleError
        from kernel import QContext

        ctx = QContext(2)
        with self.assertRaises(PoleError) as cm:
            ctx.g(5, 5)
        self.assertEqual(cm.exception.kernel, "g")
        with self.assertRaises(PoleError):
            ctx.t(1, 4)

    def test_degenerate_q(self):
        from errors import InputError
        from kernel import QContext

        for q in (0, 1, -1):
            with self.assertRaises(InputError):
                QContext(q)

    def test_unknown_kind(self):
        from errors import InputError
        from kernel import QContext, kfun

        with self.assertRaises(InputError):
            kfun("k", 1, 2, QContext(2))

    @settings(deadline=None, max_examples=30)
    @given(strategies.integers(min_value=0, max_value=10 ** 6), strategies.sampled_from(["2", "3/2", "-5/3"]))
    def test_relations_hold(self, seed, q_text):
        from exact import scalar_parse
        from kernel import QContext, kernel_relations
        from sampling import Sampler

        q = scalar_parse(q_text)
        x, y = Sampler(seed, "kernel", 0, q).points(2)
        for label, lhs, rhs in kernel_relations(x, y, QContext(q)):
            self.assertEqual(lhs, rhs, label)

    @settings(deadline=None, max_examples=20)
    @given(strategies.integers(min_value=0, max_value=10 ** 6))
    def test_scaling_limit_gives_invariant_kernels(self, seed):
        from kernel import KINDS, kfun_invariant, scaling_substitute
        from sampling import Sampler

        c = Fraction(2)
        s = Sampler(seed, "scaling", 0, Fraction(2))
        x, y = s.slopes(2, c)
        for kind in KINDS:
            self.assertEqual(scaling_substitute(kind, x, y, c).limit(0), kfun_invariant(kind, x, y, c), kind)


if __name__ == "__main__":
    unittest.main()
