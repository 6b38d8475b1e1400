import re
from fractions import Fraction

from django.test import SimpleTestCase

from words import exceptions
from words.line_format import read_word_lines
from words.word_lib import (
    Disk,
    PAdicPoint,
    Word,
    ball_contains,
    children,
    common_prefix_len,
    format_word,
    from_padic_integer,
    is_prefix,
    padic_distance,
    parse_point,
    parse_word,
    prefix,
    to_padic_integer,
    words_of_length,
    words_up_to,
)


class WordTest(SimpleTestCase):
    def test_digit_out_of_range_is_rejected(self):
        with self.assertRaises(exceptions.WordDigitOutOfRangeError):
            Word(2, (0, 2))

    def test_branching_factor_below_two_is_rejected(self):
        with self.assertRaises(exceptions.InvalidBranchingFactorError):
            Word(1, ())

    def test_words_are_hashable_values(self):
        self.assertEqual({Word(2, (0, 1)): 1}[Word(2, [0, 1])], 1)

    def test_words_with_different_p_are_different(self):
        self.assertNotEqual(Word(2, (1,)), Word(3, (1,)))


class ToPadicIntegerTest(SimpleTestCase):
    def test_p2_01(self):
        self.assertEqual(2, to_padic_integer(Word(2, (0, 1))))

    def test_empty_word(self):
        self.assertEqual(0, to_padic_integer(Word(3)))

    def test_p5_403(self):
        self.assertEqual(79, to_padic_integer(Word(5, (4, 0, 3))))

    def test_is_a_bijection_onto_range_for_fixed_length(self):
        for p, k in ((2, 4), (3, 3), (5, 2)):
            values = [to_padic_integer(w) for w in words_of_length(p, k)]
            self.assertEqual(list(range(p**k)), values)

    def test_from_padic_integer_inverts(self):
        self.assertEqual(Word(5, (4, 0, 3)), from_padic_integer(79, 5, 3))

    def test_negative_length(self):
        with self.assertRaises(exceptions.WordLengthError) as ctx:
            words_of_length(2, -1)
        self.assertEqual(-1, ctx.exception.length)
        self.assertEqual([], list(words_up_to(2, -1)))


class PrefixTest(SimpleTestCase):
    def test_prefixes(self):
        w = Word(2, (0, 1, 1))
        self.assertEqual(Word(2, (0, 1)), prefix(w, 2))
        self.assertEqual(Word(2), prefix(w, 0))
        self.assertEqual(w, prefix(w, 3))

    def test_out_of_range(self):
        with self.assertRaises(exceptions.PrefixLengthOutOfRangeError):
            prefix(Word(2, (0, 1, 1)), 4)

    def test_is_prefix(self):
        self.assertTrue(is_prefix(Word(2, (0,)), Word(2, (0, 1))))
        self.assertTrue(is_prefix(Word(2), Word(2, (1,))))
        self.assertFalse(is_prefix(Word(2, (1,)), Word(2, (0, 1))))


class ChildrenTest(SimpleTestCase):
    def test_children_in_digit_order(self):
        self.assertEqual([Word(2, (0,)), Word(2, (1,))], children(Word(2)))
        self.assertEqual([Word(2, (1, 0)), Word(2, (1, 1))], children(Word(2, (1,))))
        self.assertEqual(
            [Word(3, (2, 0)), Word(3, (2, 1)), Word(3, (2, 2))],
            children(Word(3, (2,))),
        )

    def test_children_share_exactly_the_parent_prefix(self):
        w = Word(3, (2, 0))
        kids = children(w)
        for child in kids:
            self.assertGreaterEqual(common_prefix_len(child, w), len(w))
        for a in kids:
            for b in kids:
                if a != b:
                    self.assertEqual(len(w), common_prefix_len(a, b))


class CommonPrefixLenTest(SimpleTestCase):
    def test_values(self):
        self.assertEqual(2, common_prefix_len(Word(2, (0, 1, 1)), Word(2, (0, 1, 0))))
        self.assertEqual(0, common_prefix_len(Word(2, (1,)), Word(2, (0,))))
        self.assertEqual(2, common_prefix_len(Word(2, (0, 1)), Word(2, (0, 1))))

    def test_p_mismatch(self):
        with self.assertRaises(exceptions.BranchingFactorMismatchError):
            common_prefix_len(Word(2, (0,)), Word(3, (0,)))

    def test_padic_distance(self):
        self.assertEqual(Fraction(1, 4), padic_distance(Word(2, (0, 1, 1)), Word(2, (0, 1, 0))))
        self.assertEqual(0, padic_distance(Word(2, (0, 1)), Word(2, (0, 1))))


class BallContainsTest(SimpleTestCase):
    def setUp(self):
        self.x = PAdicPoint(2, (0, 1, 1, 1))

    def test_matching_digit(self):
        self.assertTrue(ball_contains(Disk(Word(2, (0,))), self.x))

    def test_other_digit(self):
        self.assertFalse(ball_contains(Disk(Word(2, (1,))), self.x))

    def test_whole_disk(self):
        self.assertTrue(ball_contains(Disk(Word(2)), self.x))

    def test_is_prefix_equality(self):
        for w in words_up_to(2, 3):
            self.assertEqual(
                self.x.truncation(len(w)) == w, ball_contains(Disk(w), self.x)
            )

    def test_insufficient_resolution(self):
        with self.assertRaises(exceptions.InsufficientResolutionError):
            ball_contains(Disk(Word(2, (0, 1))), PAdicPoint(2, (0,)))

    def test_disk_measure(self):
        self.assertEqual(Fraction(1, 9), Disk(Word(3, (1, 2))).measure)


class WordLiteralTest(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(Word(2, (0, 1, 1)), parse_word("011", 2))
        self.assertEqual(Word(2), parse_word("e", 2))

    def test_format(self):
        self.assertEqual("011", format_word(Word(2, (0, 1, 1))))
        self.assertEqual("e", format_word(Word(3)))

    def test_parse_point(self):
        self.assertEqual(PAdicPoint(2, (0, 1, 1, 1, 1)), parse_point("01111", 2))

    def test_digit_too_large(self):
        with self.assertRaises(exceptions.WordLiteralError):
            parse_word("012", 2)

    def test_garbage(self):
        with self.assertRaises(exceptions.WordLiteralError):
            parse_word("0x", 2)

    def test_dotted_literal_above_ten(self):
        word = Word(13, (12, 0, 3))
        self.assertEqual("12.0.3", format_word(word))
        self.assertEqual(word, parse_word("12.0.3", 13))
        self.assertEqual(Word(11, (10,)), parse_word("10", 11))
        self.assertEqual(PAdicPoint(11, (10, 1)), parse_point("10.1", 11))

    def test_dotted_literal_rejects_empty_digit(self):
        for literal in ("1..2", "12.", "13.0"):
            with self.assertRaises(exceptions.WordLiteralError):
                parse_word(literal, 13)


class LineError(ValueError):
    def __init__(self, line_number, message=None):
        self.line_number = line_number
        super().__init__(message or line_number)


HEADER = re.compile(r"^(?P<p>\d+),(?P<length>\d+)$")


class ReadWordLinesTest(SimpleTestCase):
    def test_rows_with_comments_and_whitespace(self):
        parsed = read_word_lines(
            ["# header\n", "2,2\n", "\n", "01\t 3  # one\n", "10   -1\n"], HEADER, int, LineError
        )
        self.assertEqual("2", parsed.header.group("p"))
        self.assertEqual([(4, Word(2, (0, 1)), 3), (5, Word(2, (1, 0)), -1)], parsed.rows)

    def test_value_keeps_inner_spaces(self):
        parsed = read_word_lines(["3,1", "2 a b"], HEADER, str, LineError)
        self.assertEqual([(2, Word(3, (2,)), "a b")], parsed.rows)

    def test_missing_header(self):
        with self.assertRaises(LineError) as ctx:
            read_word_lines(["# nothing"], HEADER, int, LineError)
        self.assertEqual(0, ctx.exception.line_number)

    def test_invalid_header(self):
        with self.assertRaises(LineError) as ctx:
            read_word_lines(["p=2", "0 1"], HEADER, int, LineError)
        self.assertEqual(1, ctx.exception.line_number)

    def test_row_errors_report_line_number(self):
        for row in ("01", "2 1", "0 x"):
            with self.subTest(row=row):
                with self.assertRaises(LineError) as ctx:
                    read_word_lines(["2,1", "1 1", row], HEADER, int, LineError)
                self.assertEqual(3, ctx.exception.line_number)

    def test_word_length_from_header(self):
        with self.assertRaises(LineError) as ctx:
            read_word_lines(["2,2", "0 1"], HEADER, int, LineError, length_group="length")
        self.assertEqual(2, ctx.exception.line_number)
