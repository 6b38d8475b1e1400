import io
import random
from fractions import Fraction

from django.test import SimpleTestCase
from factory.random import reseed_random

from coherent.states import DiskCoefficients, x_disk_coefficients
from core.tests.factories import DiskCoefficientsFactory, LocallyConstantFunctionFactory
from padic_fn import exceptions
from padic_fn.distributions import (
    GeneralizedFunction,
    TestFunction,
    coarsen,
    constant_function,
    dk_functional_norm,
    evaluate,
    gf_delta,
    gf_pair,
    haar_integral,
    indicator,
    l2_inner,
    multiply,
    refine,
)
from padic_fn.file_format import (
    format_test_function,
    read_test_function,
    write_test_function,
)
from scalars.scalar_lib import ONE, ZERO, abs2, conj_constant, constant, real_part
from words.exceptions import InsufficientResolutionError
from words.word_lib import (
    Disk,
    Word,
    ball_contains,
    is_prefix,
    parse_point,
    parse_word,
    words_of_length,
    words_up_to,
)


def w(literal, p=2):
    return parse_word(literal, p)


class IndicatorTest(SimpleTestCase):
    def test_indicator_of_empty_word_is_one(self):
        self.assertEqual(constant_function(2, 1), indicator(w("e")))

    def test_subdisk_decomposition(self):
        for p in (2, 3):
            for word in words_up_to(p, 2):
                total = TestFunction(p, 0)
                for i in range(p):
                    total = total + indicator(word.append(i))
                self.assertEqual(indicator(word), total)

    def test_evaluate_is_ball_membership(self):
        x = parse_point("0110", 2)
        for word in words_up_to(2, 3):
            expected = ONE if ball_contains(Disk(word), x) else ZERO
            self.assertEqual(expected, evaluate(indicator(word), x))

    def test_level_below_word_length(self):
        with self.assertRaises(exceptions.LevelError):
            indicator(w("01"), 1)


class RefineTest(SimpleTestCase):
    def setUp(self):
        reseed_random(7)

    def test_refined_constant(self):
        f = refine(indicator(w("e")), 2)
        self.assertEqual(2, f.level)
        self.assertEqual(4, len(f.items()))
        self.assertTrue(all(value == ONE for word, value in f.items()))

    def test_integral_is_refinement_invariant(self):
        f = LocallyConstantFunctionFactory(p=3, level=2)
        self.assertEqual(haar_integral(f), haar_integral(refine(f, 4)))

    def test_l2_inner_is_refinement_invariant(self):
        f = LocallyConstantFunctionFactory(level=1)
        g = LocallyConstantFunctionFactory(level=3)
        self.assertEqual(l2_inner(f, g), l2_inner(refine(f, 3), g))
        self.assertEqual(l2_inner(f, g), l2_inner(refine(f, 5), refine(g, 5)))

    def test_refine_down_is_rejected(self):
        with self.assertRaises(exceptions.LevelError):
            refine(indicator(w("01")), 1)

    def test_coarsen(self):
        self.assertEqual(1, coarsen(refine(indicator(w("0")), 3)).level)
        self.assertEqual(0, coarsen(constant_function(3, 2, level=2)).level)
        self.assertEqual(3, coarsen(indicator(w("011"))).level)


class HaarIntegralTest(SimpleTestCase):
    def test_indicator(self):
        for p in (2, 3, 5):
            for word in words_up_to(p, 2):
                self.assertEqual(
                    constant(Fraction(1, p ** len(word))), haar_integral(indicator(word))
                )

    def test_total_mass_is_one(self):
        self.assertEqual(ONE, haar_integral(constant_function(5, 1, level=2)))

    def test_linear_combination(self):
        f = indicator(w("0")).scale(2) + indicator(w("1")).scale(-1)
        self.assertEqual(constant(Fraction(1, 2)), haar_integral(f))


class L2InnerTest(SimpleTestCase):
    def setUp(self):
        reseed_random(11)

    def test_indicators_of_one_level_are_orthogonal(self):
        for p in (2, 3):
            for k in range(3):
                for i in words_of_length(p, k):
                    for j in words_of_length(p, k):
                        expected = constant(Fraction(1, p**k)) if i == j else ZERO
                        self.assertEqual(expected, l2_inner(indicator(i), indicator(j)))

    def test_scaled_indicators_of_nested_disks(self):
        p = 2
        for i in words_up_to(p, 3):
            for j in words_up_to(p, 3):
                if not is_prefix(j, i):
                    continue
                f = indicator(i).scale(p ** len(i))
                g = indicator(j).scale(p ** len(j))
                self.assertEqual(constant(p ** len(j)), l2_inner(f, g))

    def test_conjugate_symmetric(self):
        f = LocallyConstantFunctionFactory(level=2)
        g = LocallyConstantFunctionFactory(level=1)
        self.assertEqual(conj_constant(l2_inner(f, g)), l2_inner(g, f))

    def test_integral_is_product_with_one(self):
        f = LocallyConstantFunctionFactory(p=3, level=2)
        self.assertEqual(haar_integral(f), l2_inner(constant_function(3, 1), f))

    def test_mismatched_p(self):
        with self.assertRaises(exceptions.FunctionBranchingFactorMismatchError):
            l2_inner(constant_function(2, 1), constant_function(3, 1))

    def test_multiply(self):
        self.assertEqual(
            indicator(w("01")), multiply(indicator(w("0")), indicator(w("01")))
        )


class EvaluateTest(SimpleTestCase):
    def test_indicator_values(self):
        x = parse_point("0111", 2)
        self.assertEqual(ONE, evaluate(indicator(w("0")), x))
        self.assertEqual(ZERO, evaluate(indicator(w("1")), x))

    def test_constant(self):
        c = constant(Fraction(2, 3), -1)
        self.assertEqual(c, evaluate(constant_function(3, c, level=2), parse_point("12", 3)))

    def test_insufficient_resolution(self):
        with self.assertRaises(InsufficientResolutionError):
            evaluate(indicator(w("011")), parse_point("01", 2))


class GeneralizedFunctionTest(SimpleTestCase):
    def setUp(self):
        reseed_random(13)

    def test_indicator_reads_coefficient(self):
        u = GeneralizedFunction(DiskCoefficientsFactory(p=3, depth=3))
        for word in words_up_to(3, 3):
            self.assertEqual(u[word], gf_pair(u, indicator(word)))

    def test_pairing_is_refinement_invariant(self):
        u = GeneralizedFunction(DiskCoefficientsFactory(depth=4))
        f = LocallyConstantFunctionFactory(level=2)
        self.assertEqual(gf_pair(u, f), gf_pair(u, refine(f, 4)))

    def test_pairing_is_linear(self):
        u = GeneralizedFunction(DiskCoefficientsFactory(depth=3))
        f = LocallyConstantFunctionFactory(level=2)
        g = LocallyConstantFunctionFactory(level=3)
        c = constant(1, -1)
        self.assertEqual(gf_pair(u, f) + c * gf_pair(u, g), gf_pair(u, f + g.scale(c)))

    def test_zero(self):
        u = GeneralizedFunction(DiskCoefficients(2, 3))
        self.assertEqual(ZERO, gf_pair(u, LocallyConstantFunctionFactory(level=3)))

    def test_test_function_deeper_than_generalized_function(self):
        u = GeneralizedFunction(DiskCoefficientsFactory(depth=1))
        with self.assertRaises(exceptions.GeneralizedFunctionDepthError):
            gf_pair(u, indicator(w("01")))


class DeltaFunctionTest(SimpleTestCase):
    def test_delta_evaluates_test_functions(self):
        rng = random.Random(19)
        reseed_random(19)
        for p in (2, 3, 5):
            depth = 3
            for unused in range(50):
                x = parse_point("".join(str(rng.randrange(p)) for unused in range(depth)), p)
                f = LocallyConstantFunctionFactory(p=p, level=rng.randint(0, depth))
                self.assertEqual(evaluate(f, x), gf_pair(gf_delta(x, depth), f))

    def test_delta_on_indicators(self):
        x = parse_point("0110", 2)
        u = gf_delta(x, 4)
        for word in words_up_to(2, 4):
            expected = ONE if ball_contains(Disk(word), x) else ZERO
            self.assertEqual(expected, gf_pair(u, indicator(word)))


class DkNormTest(SimpleTestCase):
    def setUp(self):
        reseed_random(23)

    def test_delta(self):
        u = gf_delta(parse_point("101", 2), 3)
        for k in range(4):
            norm = dk_functional_norm(u, k)
            self.assertEqual(Fraction(1), norm.modulus_squared)
            self.assertEqual(Word(2), norm.word)

    def test_x_state(self):
        u = GeneralizedFunction(x_disk_coefficients(w("01"), 4))
        for k in range(5):
            self.assertEqual(Fraction(1), dk_functional_norm(u, k).modulus_squared)

    def test_zero(self):
        norm = dk_functional_norm(GeneralizedFunction(DiskCoefficients(2, 2)), 2)
        self.assertEqual(Fraction(0), norm.modulus_squared)
        self.assertIsNone(norm.word)

    def test_ties_go_to_lexicographically_smallest_word(self):
        u = GeneralizedFunction(
            DiskCoefficients(2, 2, {w("1"): 2, w("01"): -2, w("e"): 1})
        )
        self.assertEqual(w("01"), dk_functional_norm(u, 2).word)

    def test_norm_bounds_and_is_attained(self):
        rng = random.Random(29)
        for p in (2, 3):
            u = GeneralizedFunction(DiskCoefficientsFactory(p=p, depth=3))
            for k in range(4):
                norm = dk_functional_norm(u, k)
                f = TestFunction(
                    p,
                    k,
                    {
                        word: Fraction(rng.randint(-3, 3), 2)
                        for word in words_of_length(p, k)
                    },
                )
                total = sum((abs(real_part(value)) for word, value in f.items()), Fraction(0))
                self.assertLessEqual(
                    abs2(gf_pair(u, f)), norm.modulus_squared * total**2
                )
                attained = max(
                    abs2(gf_pair(u, indicator(word))) for word in words_up_to(p, k)
                )
                self.assertEqual(norm.modulus_squared, attained)

    def test_level_deeper_than_generalized_function(self):
        with self.assertRaises(exceptions.GeneralizedFunctionDepthError):
            dk_functional_norm(gf_delta(parse_point("01", 2), 2), 3)


class TestFunctionFileTest(SimpleTestCase):
    def test_read(self):
        f = read_test_function(io.StringIO("# f\n2,1\n0 2\n1 -1\n"))
        self.assertEqual(indicator(w("0")).scale(2) + indicator(w("1")).scale(-1), f)

    def test_format(self):
        self.assertEqual("2,2\n01 i\n", format_test_function(indicator(w("01")).scale(constant(0, 1))))

    def test_written_function_is_read_back(self):
        reseed_random(31)
        f = LocallyConstantFunctionFactory(p=5, level=2)
        stream = io.StringIO()
        write_test_function(f, stream)
        stream.seek(0)
        self.assertEqual(f, read_test_function(stream))

    def test_invalid_header(self):
        with self.assertRaises(exceptions.TestFunctionFormatError):
            read_test_function(["p=2"])

    def test_bad_value(self):
        with self.assertRaises(exceptions.TestFunctionFormatError) as ctx:
            read_test_function(["3,1", "2 x"])
        self.assertEqual(2, ctx.exception.line_number)
