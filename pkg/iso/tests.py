from fractions import Fraction
from unittest.mock import patch

from django.test import SimpleTestCase, override_settings
from factory.random import reseed_random

from coherent.exceptions import CascadeViolationError
from coherent.pairing import renormalized_pairing
from coherent.states import (
    DiskCoefficients,
    XCombination,
    delta_disk_coefficients,
    x_disk_coefficients,
)
from core.tests.factories import (
    DiskCoefficientsFactory,
    LocallyConstantFunctionFactory,
    XCombinationFactory,
)
from iso import choices, controller, exceptions
from iso.maps import (
    canonicalize,
    equivalent,
    phi,
    phi_inverse,
    phi_matrix,
    phi_prime,
    phi_prime_inverse,
)
from iso.reports import CheckResult, VerificationReport, render_value
from padic_fn.distributions import (
    GeneralizedFunction,
    TestFunction,
    constant_function,
    gf_delta,
    gf_pair,
    indicator,
    l2_inner,
)
from scalars.scalar_lib import ONE, ZERO, constant
from words.word_lib import parse_point, parse_word, words_up_to


def w(literal, p=2):
    return parse_word(literal, p)


class PhiTest(SimpleTestCase):
    def test_x_of_empty_word_is_constant_one(self):
        self.assertEqual(constant_function(2, 1), phi(XCombination.x(w("e"))))

    def test_x_state_is_scaled_indicator(self):
        for p in (2, 3):
            for word in words_up_to(p, 2):
                f = phi(XCombination.x(word))
                self.assertEqual(len(word), f.level)
                self.assertEqual(indicator(word).scale(p ** len(word)), f)

    def test_refinement_identity_is_respected(self):
        word = w("01")
        refined = XCombination(2, {word.append(j): Fraction(1, 2) for j in range(2)})
        self.assertEqual(phi(XCombination.x(word)), phi(refined))

    def test_level_is_applied(self):
        f = phi(XCombination.x(w("0")), 3)
        self.assertEqual(3, f.level)
        self.assertEqual(4, len(f.items()))

    def test_level_below_longest_word(self):
        with self.assertRaises(exceptions.PhiLevelError):
            phi(XCombination.x(w("011")), 2)


class PhiInverseTest(SimpleTestCase):
    def setUp(self):
        reseed_random(37)

    def test_indicator(self):
        self.assertEqual(
            XCombination(2, {w("01"): Fraction(1, 4)}), phi_inverse(indicator(w("01")))
        )

    def test_zero(self):
        self.assertFalse(phi_inverse(TestFunction(3, 2)))

    def test_phi_of_phi_inverse_is_identity(self):
        for p in (2, 3):
            f = LocallyConstantFunctionFactory(p=p, level=2)
            self.assertEqual(f, phi(phi_inverse(f)))

    def test_phi_inverse_of_phi_is_equivalent(self):
        for word in words_up_to(2, 3):
            combination = XCombination.x(word)
            self.assertTrue(equivalent(combination, phi_inverse(phi(combination, 3))))

    def test_random_combinations_round_trip_modulo_refinement(self):
        for unused in range(10):
            combination = XCombinationFactory(max_length=3)
            self.assertTrue(equivalent(combination, phi_inverse(phi(combination))))


class CanonicalizeTest(SimpleTestCase):
    def test_x_state_spreads_over_subdisks(self):
        canonical = canonicalize(XCombination.x(w("1", 3)), 2)
        self.assertEqual(
            XCombination(3, {w("1" + d, 3): Fraction(1, 3) for d in "012"}), canonical
        )

    def test_word_longer_than_level(self):
        with self.assertRaises(exceptions.PhiLevelError):
            canonicalize(XCombination.x(w("01")), 1)

    def test_equivalent_distinguishes_different_states(self):
        self.assertFalse(equivalent(XCombination.x(w("0")), XCombination.x(w("1"))))
        self.assertFalse(equivalent(XCombination.x(w("e", 2)), XCombination.x(w("e", 3))))


class PhiPrimeTest(SimpleTestCase):
    def setUp(self):
        reseed_random(41)

    def test_delta_state_is_delta_function(self):
        x = parse_point("0110", 2)
        self.assertEqual(gf_delta(x, 4), phi_prime(delta_disk_coefficients(x, 4)))

    def test_indicator_reads_renormalized_pairing(self):
        dc = DiskCoefficientsFactory(p=3, depth=3)
        u = phi_prime(dc)
        for word in words_up_to(3, 3):
            pairing = renormalized_pairing(dc, XCombination.x(word))
            self.assertEqual(dc[word], gf_pair(u, indicator(word)))
            self.assertEqual(
                constant(Fraction(1, 3 ** len(word))) * pairing, gf_pair(u, indicator(word))
            )

    def test_zero(self):
        self.assertEqual(GeneralizedFunction(DiskCoefficients(2, 2)), phi_prime(DiskCoefficients(2, 2)))

    def test_intertwines_pairings(self):
        for unused in range(5):
            dc = DiskCoefficientsFactory(depth=4)
            combination = XCombinationFactory(max_length=3)
            self.assertEqual(
                renormalized_pairing(dc, combination), gf_pair(phi_prime(dc), phi(combination))
            )

    def test_inverse_round_trips(self):
        dc = DiskCoefficientsFactory(p=3, depth=2)
        self.assertEqual(dc, phi_prime_inverse(phi_prime(dc)))
        x = parse_point("21", 3)
        self.assertEqual(delta_disk_coefficients(x, 2), phi_prime_inverse(gf_delta(x, 2)))

    def test_inverse_rejects_cascade_violation(self):
        u = GeneralizedFunction(DiskCoefficients(2, 1, {w("e"): 1, w("0"): 1, w("1"): 1}))
        with self.assertRaises(CascadeViolationError) as ctx:
            phi_prime_inverse(u)
        self.assertEqual([w("e")], ctx.exception.words)


class PhiMatrixTest(SimpleTestCase):
    def test_diagonal(self):
        self.assertEqual(
            [constant(n) for n in (1, 2, 2, 4, 4, 4, 4)], [entry for word, entry in phi_matrix(2, 2)]
        )
        self.assertEqual([constant(n) for n in (1, 3, 3, 3)], [entry for word, entry in phi_matrix(3, 1)])

    def test_gram_matrices_agree(self):
        basis = list(words_up_to(2, 3))
        for i in basis:
            conjugate = x_disk_coefficients(i, 3)
            for j in basis:
                self.assertEqual(
                    renormalized_pairing(conjugate, XCombination.x(j)),
                    l2_inner(phi(XCombination.x(i)), phi(XCombination.x(j))),
                )


class ReportTest(SimpleTestCase):
    def test_check_result_render(self):
        result = CheckResult("ccr", "a = b", "w=e", ONE, ONE)
        self.assertTrue(result.passed)
        self.assertEqual("PASS ccr a = b w=e: 1 == 1", result.render())

    def test_failed_check_is_reported(self):
        report = VerificationReport("cascade", 2, 3, 7)
        with self.assertLogs("iso.reports", level="ERROR"):
            self.assertFalse(report.check("x", "case", ONE, ZERO))
        self.assertEqual(1, len(report.failures))
        self.assertFalse(report.passed)

    def test_render_header_and_footer(self):
        report = VerificationReport("xrelat", 3, 2, 11)
        report.check("b", "2", ONE, ONE, (2,))
        report.check("b", "1", ZERO, ZERO, (1,))
        report.check("a", "9", ONE, ONE, (9,))
        self.assertEqual(
            "# suite=xrelat p=3 depth=2 seed=11\n"
            "PASS xrelat a 9: 1 == 1\n"
            "PASS xrelat b 1: 0 == 0\n"
            "PASS xrelat b 2: 1 == 1\n"
            "# PASS 3 checks, 0 failed\n",
            report.render(),
        )

    def test_render_value(self):
        self.assertEqual("1/2", render_value(constant(Fraction(1, 2))))
        self.assertEqual("01", render_value(w("01")))
        self.assertEqual("{e: 1, 0: 1}", render_value(delta_disk_coefficients(parse_point("0", 2), 1)))
        self.assertEqual("True", render_value(True))


class RunSuiteTest(SimpleTestCase):
    def test_every_suite_passes_for_p_2(self):
        for suite in controller.SUITES:
            with self.subTest(suite=suite):
                report = controller.run_suite(suite, 2, 3, 7)
                self.assertTrue(report.results)
                self.assertEqual([], [r.render() for r in report.failures])

    def test_every_suite_passes_for_p_3(self):
        for suite in controller.SUITES:
            if suite == choices.THRESHOLD:
                continue
            with self.subTest(suite=suite):
                report = controller.run_suite(suite, 3, 2, 5)
                self.assertTrue(report.passed)

    def test_example6_for_p_5(self):
        self.assertTrue(controller.run_suite(choices.EXAMPLE6, 5, 3, 7).passed)

    def test_all_runs_every_suite(self):
        report = controller.run_suite(choices.ALL, 2, 2, 7)
        self.assertTrue(report.passed)
        self.assertEqual(set(controller.SUITES), {r.suite for r in report.results})
        self.assertTrue(report.render().startswith("# suite=all p=2 depth=2 seed=7\n"))

    def test_same_seed_gives_same_report(self):
        first = controller.run_suite(choices.LEMMA2, 2, 3, 13).render()
        self.assertEqual(first, controller.run_suite(choices.LEMMA2, 2, 3, 13).render())

    def test_suite_alone_matches_suite_inside_all(self):
        alone = controller.run_suite(choices.CASCADE, 2, 2, 3)
        inside = controller.run_suite(choices.ALL, 2, 2, 3)
        self.assertEqual(
            [r.render() for r in alone.sorted_results()],
            [r.render() for r in inside.sorted_results() if r.suite == choices.CASCADE],
        )

    def test_threshold_reports_growth(self):
        report = controller.run_suite(choices.THRESHOLD, 2, 5, 7)
        self.assertTrue(report.passed)
        self.assertIn("t=5/2", report.render())

    def test_failing_suite_fails_the_report(self):
        def broken(report, p, depth, rng):
            report.check("one = zero", "case", ONE, ZERO)

        with patch.dict(controller.SUITES, {choices.CCR: broken}):
            with self.assertLogs("iso.reports", level="ERROR"):
                report = controller.run_suite(choices.CCR, 2, 2, 7)
        self.assertFalse(report.passed)
        self.assertIn("# FAIL 1 checks, 1 failed", report.render())

    def test_unknown_suite(self):
        with self.assertRaises(exceptions.UnknownSuiteError) as ctx:
            controller.run_suite("lemma99", 2, 2, 7)
        self.assertEqual("lemma99", ctx.exception.suite)

    def test_depth_below_one(self):
        for suite in (choices.CCR, choices.EIGEN, choices.ALL):
            with self.assertRaises(exceptions.SuiteDepthError) as ctx:
                controller.run_suite(suite, 2, 0, 7)
            self.assertEqual(0, ctx.exception.depth)

    def test_threshold_keeps_delta_norm_partial(self):
        report = controller.run_suite(choices.THRESHOLD, 2, 2, 7)
        self.assertTrue(report.passed)
        self.assertIn("|delta_x|^2 has no finite tail", report.render())

    def test_lemma5_checks_the_bound_with_test_functions(self):
        report = controller.run_suite(choices.LEMMA5, 2, 2, 7)
        self.assertTrue(report.passed)
        bounds = [r for r in report.results if r.identity == "|(u, f)| <= |u|_Dk sum |f(I)|"]
        # three random states and one delta, levels 0..2
        self.assertEqual(4 * 3, len(bounds))


class SuiteSizeTest(SimpleTestCase):
    def test_pairs_reach_length_4(self):
        report = controller.run_suite(choices.COROLLARY4, 2, 4, 7)
        self.assertTrue(report.passed)
        self.assertEqual(2 * 31**2, len(report.results))
        report = controller.run_suite(choices.INTERTWINE, 2, 5, 7)
        self.assertTrue(report.passed)
        self.assertIn("Psi=X:0111 ", report.render())

    def test_corollary4_for_p_3(self):
        self.assertTrue(controller.run_suite(choices.COROLLARY4, 3, 4, 11).passed)

    @override_settings(FCS_SUITE_STATES=100)
    def test_eigenvectors_over_100_states(self):
        for p in (2, 3):
            with self.subTest(p=p):
                report = controller.run_suite(choices.EIGEN, p, 4, 7)
                self.assertTrue(report.passed)
                states = [r for r in report.results if r.identity == "A Psi - L Psi supported at depth"]
                self.assertEqual(100, len(states))

    @override_settings(FCS_SUITE_STATES=1, FCS_SUITE_MAX_LENGTH=2)
    def test_sizes_follow_settings(self):
        report = controller.run_suite(choices.COROLLARY4, 2, 4, 7)
        self.assertEqual(2 * 7**2, len(report.results))
        self.assertEqual(2, len(controller.run_suite(choices.CASCADE, 2, 3, 7).results))
