import io
import math
import random
from fractions import Fraction

from django.test import SimpleTestCase

from coherent import exceptions
from coherent.file_format import (
    format_disk_coefficients,
    read_disk_coefficients,
    write_disk_coefficients,
)
from coherent.pairing import (
    TruncatedNorm,
    divergence_certificate,
    induced_coefficients,
    norm_squared,
    pairing_series,
    renormalized_pairing,
    renormalized_pairing_numeric,
    stabilized_level_pairing,
)
from coherent.random_states import random_cascade, random_x_combination
from coherent.states import (
    DiskCoefficients,
    XCombination,
    build_delta,
    build_x,
    build_x_combination,
    cascade_from_leaves,
    cascade_violations,
    delta_disk_coefficients,
    eigen_residual,
    fcs_to_fock,
    fock_to_fcs,
    residual_at_boundary,
    x_combination_coefficients,
    x_disk_coefficients,
)
from fock.exceptions import NotCoherentError
from fock.fock_lib import FockVector, inner_product, sum_vectors
from scalars.scalar_lib import FIELD, ONE, ZERO, L, as_complex, constant
from scalars.series import GeometricSeriesValue
from words.exceptions import InsufficientResolutionError
from words.word_lib import Word, parse_point, parse_word, words_of_length, words_up_to


def w(literal, p=2):
    return parse_word(literal, p)


class CascadeFromLeavesTest(SimpleTestCase):
    def test_interior_is_sum_of_children(self):
        dc = cascade_from_leaves(2, 1, {w("0"): 1, w("1"): 0})
        self.assertEqual(ONE, dc[w("e")])

    def test_zero_leaves(self):
        self.assertFalse(cascade_from_leaves(3, 2, {}))

    def test_delta_leaves_give_prefix_indicator(self):
        x = parse_point("011", 2)
        dc = cascade_from_leaves(2, 3, {w("011"): 1})
        self.assertEqual(delta_disk_coefficients(x, 3), dc)
        self.assertEqual(ONE, dc[w("01")])
        self.assertEqual(ZERO, dc[w("1")])

    def test_leaf_of_wrong_length(self):
        with self.assertRaises(exceptions.DepthTooSmallError):
            cascade_from_leaves(2, 2, {w("0"): 1})

    def test_random_cascade_has_no_violations(self):
        rng = random.Random(3)
        for p in (2, 3):
            self.assertEqual([], cascade_violations(random_cascade(p, 3, rng)))

    def test_violations_are_reported(self):
        dc = DiskCoefficients(2, 1, {w("e"): 1})
        self.assertEqual([w("e")], cascade_violations(dc))


class XStateTest(SimpleTestCase):
    def test_x_of_empty_word(self):
        expected = FockVector(
            2,
            2,
            {
                w("e"): 1,
                w("0"): L / 2,
                w("1"): L / 2,
                w("00"): L**2 / 4,
                w("10"): L**2 / 4,
                w("01"): L**2 / 4,
                w("11"): L**2 / 4,
            },
        )
        self.assertEqual(expected, build_x(w("e"), 2))

    def test_x_of_two_digit_word(self):
        expected = FockVector(
            2,
            3,
            {
                w("e"): 1,
                w("0"): L,
                w("01"): L**2,
                w("010"): L**3 / 2,
                w("011"): L**3 / 2,
            },
        )
        self.assertEqual(expected, build_x(w("01"), 3))

    def test_word_longer_than_depth(self):
        with self.assertRaises(exceptions.DepthTooSmallError):
            build_x(w("011"), 2)

    def test_x_disk_coefficients(self):
        dc = x_disk_coefficients(w("0"), 2)
        self.assertEqual(ONE, dc[w("e")])
        self.assertEqual(ONE, dc[w("0")])
        self.assertEqual(ZERO, dc[w("1")])
        self.assertEqual(constant(Fraction(1, 2)), dc[w("01")])
        self.assertEqual([], cascade_violations(dc))

    def test_fock_vector_of_x_disk_coefficients_is_x(self):
        for p in (2, 3):
            for word in words_up_to(p, 3):
                self.assertEqual(
                    build_x(word, 3), fcs_to_fock(x_disk_coefficients(word, 3))
                )

    def test_refinement_identity(self):
        for p in (2, 3):
            depth = 3
            for word in words_up_to(p, depth - 1):
                refined = sum_vectors(
                    p,
                    depth,
                    (build_x(word.append(j), depth) for j in range(p)),
                ).scale(Fraction(1, p))
                self.assertEqual(build_x(word, depth), refined)


class DeltaStateTest(SimpleTestCase):
    def test_build_delta(self):
        x = parse_point("0111", 2)
        self.assertEqual(
            FockVector(2, 2, {w("e"): 1, w("0"): L, w("01"): L**2}),
            build_delta(x, 2),
        )

    def test_fock_vector_of_delta_cascade(self):
        x = parse_point("21021", 3)
        self.assertEqual(build_delta(x, 4), fcs_to_fock(delta_disk_coefficients(x, 4)))

    def test_insufficient_resolution(self):
        with self.assertRaises(InsufficientResolutionError):
            build_delta(parse_point("01", 2), 3)


class FockRoundTripTest(SimpleTestCase):
    def test_fock_to_fcs_inverts_fcs_to_fock(self):
        rng = random.Random(5)
        for p in (2, 3):
            dc = random_cascade(p, 3, rng)
            self.assertEqual(dc, fock_to_fcs(fcs_to_fock(dc)))

    def test_fock_to_fcs_rejects_cascade_violation(self):
        with self.assertRaises(exceptions.CascadeViolationError):
            fock_to_fcs(FockVector(2, 1, {w("e"): 1}))

    def test_fock_to_fcs_rejects_non_coherent_vector(self):
        with self.assertRaises(NotCoherentError):
            fock_to_fcs(FockVector(2, 1, {w("0"): 1}))


class EigenResidualTest(SimpleTestCase):
    def test_x_states(self):
        for word in words_up_to(2, 3):
            self.assertTrue(residual_at_boundary(build_x(word, 3)))

    def test_random_cascades(self):
        rng = random.Random(17)
        for p in (2, 3):
            for unused in range(10):
                v = fcs_to_fock(random_cascade(p, 3, rng))
                residual = eigen_residual(v)
                self.assertTrue(all(len(word) == 3 for word, c in residual.items()))

    def test_delta_state(self):
        self.assertTrue(residual_at_boundary(build_delta(parse_point("0110", 2), 4)))

    def test_non_coherent_vector(self):
        v = FockVector(2, 2, {w("0"): 1})
        residual = eigen_residual(v)
        self.assertEqual(FIELD.one, residual.coefficient(w("e")))
        self.assertFalse(residual_at_boundary(v))


class PairingSeriesTest(SimpleTestCase):
    def test_equal_length_words_with_common_prefix(self):
        series = pairing_series(
            x_disk_coefficients(w("010"), 4), XCombination.x(w("011"))
        )
        self.assertEqual(GeometricSeriesValue(2, [ONE, ONE, ONE], ZERO, 3), series)

    def test_self_pairing(self):
        series = pairing_series(x_disk_coefficients(w("01"), 4), XCombination.x(w("01")))
        self.assertEqual(GeometricSeriesValue(2, [ONE, ONE, ONE], ONE, 2), series)

    def test_x_of_empty_word_reads_total(self):
        dc = random_cascade(3, 2, random.Random(1))
        series = pairing_series(dc, XCombination.x(Word(3)))
        self.assertEqual(dc[Word(3)], series.tail_constant)

    def test_combination_deeper_than_coefficients(self):
        with self.assertRaises(exceptions.DepthTooSmallError):
            pairing_series(x_disk_coefficients(w("0"), 1), XCombination.x(w("01")))

    def test_cascade_violation_breaks_stabilization(self):
        dc = DiskCoefficients(2, 2, {w("e"): 1})
        with self.assertRaises(exceptions.PairingStabilizationError):
            pairing_series(dc, XCombination.x(w("e")))

    def test_series_matches_fock_product(self):
        rng = random.Random(23)
        dc = random_cascade(2, 3, rng)
        combination = random_x_combination(2, 2, rng)
        series = pairing_series(dc, combination)
        self.assertEqual(
            series.truncated(3),
            inner_product(
                build_x_combination(combination.conjugate(), 3), fcs_to_fock(dc)
            ),
        )


class RenormalizedPairingTest(SimpleTestCase):
    def test_gram_identity_equal_lengths(self):
        top = 4
        for p in (2, 3, 5):
            for k in range(top + 1):
                words = words_of_length(p, k)
                for i in words:
                    dc = x_disk_coefficients(i, top)
                    for j in words:
                        expected = constant(p**k) if i == j else ZERO
                        self.assertEqual(
                            expected, renormalized_pairing(dc, XCombination.x(j))
                        )

    def test_nested_words(self):
        self.assertEqual(
            constant(2),
            renormalized_pairing(x_disk_coefficients(w("01"), 3), XCombination.x(w("0"))),
        )

    def test_delta_against_x(self):
        x = parse_point("01111", 2)
        dc = delta_disk_coefficients(x, 5)
        self.assertEqual(constant(2), renormalized_pairing(dc, XCombination.x(w("0"))))
        self.assertEqual(ZERO, renormalized_pairing(dc, XCombination.x(w("1"))))
        self.assertEqual(constant(8), renormalized_pairing(dc, XCombination.x(w("011"))))

    def test_pairing_reads_cascade_coefficients(self):
        rng = random.Random(29)
        depth = 6
        for p in (2, 3):
            for unused in range(100):
                dc = random_cascade(p, depth, rng)
                for word in words_up_to(p, depth):
                    combination = XCombination.x(word)
                    self.assertEqual(
                        constant(p ** len(word)) * dc[word],
                        renormalized_pairing(dc, combination),
                    )
                    stable = [
                        stabilized_level_pairing(dc, combination, k)
                        for k in range(len(word), depth + 1)
                    ]
                    self.assertEqual([stable[0]] * len(stable), stable)

    def test_pairing_is_linear_in_the_combination(self):
        rng = random.Random(31)
        dc = random_cascade(2, 3, rng)
        a = random_x_combination(2, 3, rng)
        b = random_x_combination(2, 3, rng)
        c = constant(Fraction(1, 3), -2)
        self.assertEqual(
            renormalized_pairing(dc, a) + c * renormalized_pairing(dc, b),
            renormalized_pairing(dc, a + b.scale(c)),
        )


class NumericPairingTest(SimpleTestCase):
    def setUp(self):
        self.dc = x_disk_coefficients(w("01"), 4)
        self.combination = XCombination.x(w("01"))
        self.exact = as_complex(renormalized_pairing(self.dc, self.combination))

    def _numeric(self, eps):
        return renormalized_pairing_numeric(
            self.dc, self.combination, math.sqrt(2 * (1 - eps))
        )

    def test_error_is_linear_in_eps(self):
        for eps in (1e-2, 1e-4, 1e-6):
            error = abs(self._numeric(eps) - self.exact)
            self.assertLessEqual(error, 10 * eps * (abs(self.exact) + 1))

    def test_halving_eps_halves_error(self):
        for eps in (1e-2, 1e-3):
            ratio = abs(self._numeric(eps / 2) - self.exact) / abs(
                self._numeric(eps) - self.exact
            )
            self.assertTrue(0.4 <= ratio <= 0.6, ratio)

    def test_small_lambda_keeps_level_zero_term(self):
        self.assertAlmostEqual(
            1.0, renormalized_pairing_numeric(self.dc, self.combination, 1e-4).real, 6
        )

    def test_threshold(self):
        for lambda0 in (math.sqrt(2), 2.0, 0.0, -1.0):
            with self.assertRaises(exceptions.ThresholdError):
                renormalized_pairing_numeric(self.dc, self.combination, lambda0)


class NormSquaredTest(SimpleTestCase):
    def test_delta_state_keeps_its_partial_sum(self):
        g = norm_squared(delta_disk_coefficients(parse_point("0000", 2), 3))
        self.assertIsInstance(g, TruncatedNorm)
        self.assertEqual(ZERO, g.tail_constant)
        self.assertEqual([ONE] * 4, list(g.coefficients))
        self.assertEqual(constant(Fraction(15, 8)), g.evaluate(Fraction(1, 2)))

    def test_delta_state_certifies_growth(self):
        g = norm_squared(delta_disk_coefficients(parse_point("0000", 2), 3))
        certificate = g.certificate(2)
        self.assertEqual([1, 3, 7, 15], certificate.partial_sums)
        self.assertTrue(certificate.diverges)
        self.assertFalse(g.certificate(Fraction(1, 2)).diverges)

    def test_x_state_past_its_length_keeps_the_tail(self):
        self.assertEqual(
            norm_squared(XCombination.x(w("0"))), norm_squared(x_disk_coefficients(w("0"), 3))
        )
        self.assertNotIsInstance(norm_squared(x_disk_coefficients(w("0"), 3)), TruncatedNorm)

    def test_x_state_at_its_own_length_is_truncated(self):
        self.assertIsInstance(norm_squared(x_disk_coefficients(w("01"), 2)), TruncatedNorm)

    def test_x_of_empty_word(self):
        g = norm_squared(XCombination.x(w("e")))
        self.assertEqual(GeometricSeriesValue(2, [ONE], ONE, 0), g)
        self.assertEqual(constant(2), g.evaluate(Fraction(1)))

    def test_closed_form_matches_deep_partial_sum_plus_tail(self):
        closed = norm_squared(XCombination.x(w("e"))).evaluate(Fraction(1))
        deep = norm_squared(x_disk_coefficients(w("e"), 12))
        partial = sum((deep.coefficient(k) for k in range(13)), ZERO)
        tail = deep.evaluate(Fraction(1)) - partial
        self.assertEqual(constant(Fraction(1, 2**12)), tail)
        self.assertEqual(closed, partial + tail)

    def test_fock_vector_partial_sums(self):
        dc = random_cascade(2, 3, random.Random(37))
        self.assertEqual(
            norm_squared(dc).coefficients, norm_squared(fcs_to_fock(dc)).coefficients
        )

    def test_zero(self):
        self.assertEqual(GeometricSeriesValue(2), norm_squared(FockVector(2, 3)))

    def test_unsupported_value(self):
        with self.assertRaises(TypeError):
            norm_squared("X:0")


class DivergenceCertificateTest(SimpleTestCase):
    def test_delta_norm_grows_at_and_above_threshold(self):
        x = parse_point("0" * 12, 2)
        for lambda2 in (Fraction(2), Fraction(5, 2)):
            certificate = divergence_certificate(x, lambda2)
            self.assertTrue(certificate.monotone)
            self.assertTrue(certificate.diverges)
            self.assertEqual(list(range(4, 13)), certificate.depths)
            self.assertGreater(certificate.partial_sums[-1], 2**12)

    def test_below_threshold_terms_shrink(self):
        certificate = divergence_certificate(parse_point("1" * 12, 3), Fraction(1, 2))
        self.assertTrue(certificate.monotone)
        self.assertFalse(certificate.diverges)


class InducedCoefficientsTest(SimpleTestCase):
    def test_induced_coefficients_satisfy_cascade(self):
        rng = random.Random(41)
        for p in (2, 3):
            combination = random_x_combination(p, 2, rng)
            dc = induced_coefficients(combination, 2)
            self.assertEqual([], cascade_violations(dc))
            self.assertEqual(x_combination_coefficients(combination, 2), dc)

    def test_depth_too_small(self):
        with self.assertRaises(exceptions.DepthTooSmallError):
            induced_coefficients(XCombination.x(w("011")), 2)


class DiskCoefficientsFileTest(SimpleTestCase):
    def test_read(self):
        text = "# header p,D then leaves\n2,2\n00 1\n10 -1/2\n01 i\n"
        dc = read_disk_coefficients(io.StringIO(text))
        self.assertEqual(constant(1, 1), dc[w("0")])
        self.assertEqual(constant(Fraction(-1, 2)), dc[w("1")])
        self.assertEqual(constant(Fraction(1, 2), 1), dc[w("e")])

    def test_written_coefficients_are_read_back(self):
        dc = random_cascade(3, 2, random.Random(43))
        stream = io.StringIO()
        write_disk_coefficients(dc, stream)
        stream.seek(0)
        self.assertEqual(dc, read_disk_coefficients(stream))

    def test_header_line(self):
        dc = x_disk_coefficients(w("1"), 1)
        self.assertEqual("2,1\n1 1\n", format_disk_coefficients(dc))

    def test_invalid_header(self):
        with self.assertRaises(exceptions.DiskCoefficientsFormatError):
            read_disk_coefficients(["p=2 depth=2"])

    def test_leaf_of_wrong_length(self):
        with self.assertRaises(exceptions.DiskCoefficientsFormatError) as ctx:
            read_disk_coefficients(["2,2", "0 1"])
        self.assertEqual(2, ctx.exception.line_number)
