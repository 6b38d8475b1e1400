import io
from fractions import Fraction

from django.test import SimpleTestCase

from fock import exceptions
from fock.fock_lib import (
    FockVector,
    annihilate,
    averaged_create,
    basis_vector,
    create,
    inner_product,
    level_component,
    norm_levels,
    total_annihilate,
    vacuum,
    zero_vector,
)
from fock.vector_format import format_vector, read_vector, write_vector
from scalars.scalar_lib import FIELD, L, conj, constant, scalar
from words.word_lib import Word, words_up_to


def w(*digits, p=2):
    return Word(p, digits)


class FockVectorTest(SimpleTestCase):
    def test_zero_coefficients_are_dropped(self):
        v = FockVector(2, 3, {w(0): FIELD.zero, w(1): L})
        self.assertEqual([w(1)], v.support())

    def test_word_beyond_depth_is_rejected(self):
        with self.assertRaises(exceptions.DepthBoundError):
            FockVector(2, 1, {w(0, 1): 1})

    def test_word_with_other_p_is_rejected(self):
        with self.assertRaises(exceptions.FockBranchingFactorMismatchError):
            FockVector(2, 1, {Word(3, (2,)): 1})

    def test_equality_is_map_equality(self):
        self.assertEqual(
            FockVector(2, 2, {w(0): L}), FockVector(2, 3, {w(0): L, w(1): 0})
        )
        self.assertNotEqual(FockVector(2, 2, {w(0): L}), FockVector(2, 2, {w(0): 1}))

    def test_sub_of_itself_is_zero(self):
        v = FockVector(2, 2, {w(0): L, w(0, 1): L**2})
        self.assertFalse(v - v)

    def test_scale(self):
        v = FockVector(2, 2, {w(0): L})
        self.assertEqual(FockVector(2, 2, {w(0): L**2}), v.scale(L))


class VacuumTest(SimpleTestCase):
    def test_vacuum(self):
        self.assertEqual(FockVector(2, 4, {w(): 1}), vacuum(2, 4))

    def test_annihilation_kills_vacuum(self):
        for i in range(2):
            self.assertFalse(annihilate(i, vacuum(2, 4)))

    def test_vacuum_is_normalized(self):
        self.assertEqual(FIELD.one, inner_product(vacuum(2, 4), vacuum(2, 4)))


class CreateTest(SimpleTestCase):
    def test_create_on_vacuum(self):
        self.assertEqual(FockVector(2, 4, {w(1): 1}), create(1, vacuum(2, 4)))

    def test_create_appends_last_digit(self):
        v = FockVector(2, 4, {w(1): L})
        self.assertEqual(FockVector(2, 4, {w(1, 0): L}), create(0, v))

    def test_create_drops_words_at_depth_bound(self):
        v = FockVector(2, 1, {w(): 1, w(1): 1})
        self.assertEqual(FockVector(2, 1, {w(0): 1}), create(0, v))

    def test_create_index_out_of_range(self):
        with self.assertRaises(exceptions.CreatorIndexError):
            create(2, vacuum(2, 1))

    def test_guarantee_is_raised_up_to_the_depth(self):
        v = FockVector(2, 3, {w(): 1}, guarantee=1)
        self.assertEqual(2, create(0, v).guarantee)
        self.assertEqual(3, create(0, vacuum(2, 3)).guarantee)

    def test_averaged_create(self):
        self.assertEqual(
            FockVector(2, 3, {w(0): Fraction(1, 2), w(1): Fraction(1, 2)}),
            averaged_create(vacuum(2, 3)),
        )

    def test_total_annihilate_inverts_averaged_create(self):
        v = FockVector(3, 3, {Word(3, (2,)): L, Word(3, (0, 1)): 1 + L})
        self.assertEqual(v, total_annihilate(averaged_create(v)))

    def test_averaged_create_divides_norm_by_p(self):
        v = FockVector(3, 3, {Word(3, (2,)): 1 + L})
        self.assertEqual(
            inner_product(v, v) / 3,
            inner_product(averaged_create(v), averaged_create(v)),
        )


class AnnihilateTest(SimpleTestCase):
    def test_strips_matching_last_digit(self):
        self.assertEqual(
            FockVector(2, 3, {w(0): 1}), annihilate(1, FockVector(2, 3, {w(0, 1): 1}))
        )

    def test_kills_other_last_digit(self):
        self.assertFalse(annihilate(0, FockVector(2, 3, {w(0, 1): 1})))

    def test_guarantee_decreases(self):
        self.assertEqual(2, annihilate(0, vacuum(2, 3)).guarantee)
        self.assertEqual(-1, annihilate(0, FockVector(2, 3, {}, 0)).guarantee)

    def test_total_annihilate(self):
        v = FockVector(2, 2, {w(0): 1, w(1): 1})
        self.assertEqual(FockVector(2, 2, {w(): 2}), total_annihilate(v))
        self.assertFalse(total_annihilate(vacuum(2, 2)))


class CanonicalRelationsTest(SimpleTestCase):
    def test_annihilate_after_create_is_kronecker_delta(self):
        for p in (2, 3):
            depth = 3
            for word in words_up_to(p, depth - 1):
                e_w = basis_vector(word, depth)
                for i in range(p):
                    for j in range(p):
                        expected = e_w if i == j else zero_vector(p, depth)
                        self.assertEqual(expected, annihilate(i, create(j, e_w)))

    def test_create_and_annihilate_are_adjoint(self):
        p, depth = 2, 3
        u = FockVector(p, depth, {w(): 1 + L, w(0, 1): scalar(constant(0, 1)), w(1): L})
        v = FockVector(p, depth, {w(1): L**2, w(0, 1, 0): 3, w(1, 1): 1})
        for i in range(p):
            self.assertEqual(
                inner_product(create(i, u), v), inner_product(u, annihilate(i, v))
            )


class InnerProductTest(SimpleTestCase):
    def test_orthogonal_words(self):
        self.assertEqual(
            FIELD.zero,
            inner_product(FockVector(2, 1, {w(0): 1}), FockVector(2, 1, {w(1): 1})),
        )

    def test_lambda_squared(self):
        v = FockVector(2, 2, {w(0, 1): L})
        self.assertEqual(L**2, inner_product(v, v))

    def test_conjugate_linear_in_first_argument(self):
        i = scalar(constant(0, 1))
        u = FockVector(2, 1, {w(0): i})
        v = FockVector(2, 1, {w(0): 1})
        self.assertEqual(-i, inner_product(u, v))
        self.assertEqual(i, inner_product(v, u))

    def test_conjugate_symmetric(self):
        u = FockVector(2, 2, {w(0): 1 + 2 * scalar(constant(0, 1)), w(1, 1): 3})
        v = FockVector(2, 2, {w(0): scalar(constant(2, -1)), w(1, 1): 1, w(1): 5})
        self.assertEqual(conj(inner_product(u, v)), inner_product(v, u))

    def test_mismatched_p(self):
        with self.assertRaises(exceptions.FockBranchingFactorMismatchError):
            inner_product(vacuum(2, 1), vacuum(3, 1))


class LevelComponentTest(SimpleTestCase):
    def _coherent(self):
        return FockVector(
            2,
            2,
            {w(): 1, w(0): L, w(1): 2 * L, w(0, 0): L**2 / 2, w(1, 1): -(L**2)},
        )

    def test_level_component_divides_out_lambda(self):
        self.assertEqual(
            FockVector(2, 1, {w(0): 1, w(1): 2}), level_component(self._coherent(), 1)
        )

    def test_vacuum_level_zero(self):
        self.assertEqual(vacuum(2, 0), level_component(vacuum(2, 3), 0))

    def test_non_coherent_input(self):
        with self.assertRaises(exceptions.NotCoherentError):
            level_component(FockVector(2, 2, {w(0): 1}), 1)

    def test_levels_are_orthogonal(self):
        u = self._coherent()
        v = FockVector(2, 2, {w(): 3, w(1): L, w(1, 1): L**2})
        expected = FIELD.zero
        for k in range(3):
            expected += L ** (2 * k) * inner_product(
                level_component(u, k), level_component(v, k)
            )
        self.assertEqual(expected, inner_product(u, v))

    def test_norm_levels(self):
        self.assertEqual(
            [FIELD.one, scalar(5), scalar(Fraction(5, 4))], norm_levels(self._coherent())
        )


class VectorFormatTest(SimpleTestCase):
    def test_format(self):
        v = FockVector(2, 2, {w(): 1, w(0): L, w(0, 1): L**2 / 2}, guarantee=1)
        self.assertEqual(
            "p=2 depth=2 guarantee=1\ne 1\n0 L\n01 (L^2)/(2)\n", format_vector(v)
        )

    def test_read_with_comments(self):
        text = "# x state\np=2 depth=2 guarantee=2\n\ne 1  # vacuum\n01 (1+L^2)/(2)\n"
        v = read_vector(io.StringIO(text))
        self.assertEqual(FockVector(2, 2, {w(): 1, w(0, 1): (1 + L**2) / 2}), v)
        self.assertEqual(2, v.guarantee)

    def test_written_vector_is_read_back(self):
        v = FockVector(
            3, 2, {Word(3, (2,)): scalar(constant(1, -1)) * L, Word(3, (0, 2)): L**2 / 9}
        )
        stream = io.StringIO()
        write_vector(v, stream)
        stream.seek(0)
        self.assertEqual(v, read_vector(stream))

    def test_vector_above_p_10_is_read_back(self):
        v = FockVector(13, 2, {Word(13, (12,)): L, Word(13, (3, 11)): L**2 / 2})
        stream = io.StringIO()
        write_vector(v, stream)
        self.assertIn("\n3.11 ", stream.getvalue())
        stream.seek(0)
        self.assertEqual(v, read_vector(stream))

    def test_missing_header(self):
        with self.assertRaises(exceptions.VectorFormatError):
            read_vector(["e 1"])

    def test_bad_line_reports_line_number(self):
        with self.assertRaises(exceptions.VectorFormatError) as ctx:
            read_vector(["p=2 depth=1 guarantee=1", "2 1"])
        self.assertEqual(2, ctx.exception.line_number)
