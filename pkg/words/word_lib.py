"""
Digit strings over {0, ..., p-1}.

A ``Word`` I = i_0 ... i_{k-1} is at the same time a multi-index of the free
Fock space, the p-adic integer sum(i_j * p**j) and the center of the disk of
radius p**-k in Z_p. Digits are stored least significant first, in the order
they are written.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Tuple, Union

from django.utils.translation import gettext as _

from . import exceptions

LOGGER = logging.getLogger(__name__)

EMPTY_WORD_LITERAL = "e"
# one character per digit
MAX_LITERAL_P = 10
DIGIT_SEPARATOR = "."


def _check_p(p):
    if not isinstance(p, int) or p < 2:
        raise exceptions.InvalidBranchingFactorError(
            _("Branching factor must be an integer >= 2, got {}").format(p)
        )


def _check_digits(p, digits):
    for digit in digits:
        if not isinstance(digit, int) or not 0 <= digit < p:
            raise exceptions.WordDigitOutOfRangeError(
                _("Digit {} is out of range for p={}").format(digit, p)
            )


@dataclass(frozen=True)
class Word:
    p: int
    digits: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        _check_p(self.p)
        digits = tuple(self.digits)
        _check_digits(self.p, digits)
        object.__setattr__(self, "digits", digits)

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return format_word(self)

    def append(self, digit):
        return Word(self.p, self.digits + (digit,))

    @property
    def last(self):
        return self.digits[-1] if self.digits else None

    @property
    def parent(self):
        return Word(self.p, self.digits[:-1])


@dataclass(frozen=True)
class PAdicPoint:
    """
    The first ``resolution`` digits of a p-adic integer.
    """

    p: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        _check_p(self.p)
        digits = tuple(self.digits)
        if not digits:
            raise exceptions.InsufficientResolutionError(
                _("A p-adic point needs at least one digit")
            )
        _check_digits(self.p, digits)
        object.__setattr__(self, "digits", digits)

    @property
    def resolution(self):
        return len(self.digits)

    def truncation(self, k):
        """
        I_k = i_0 ... i_{k-1}
        """
        if not 0 <= k <= self.resolution:
            raise exceptions.InsufficientResolutionError(
                _("Point {} has resolution {}, truncation {} requested").format(
                    self, self.resolution, k
                )
            )
        return Word(self.p, self.digits[:k])

    def __str__(self):
        return "".join(str(d) for d in self.digits)


@dataclass(frozen=True)
class Disk:
    center: Word

    @property
    def p(self):
        return self.center.p

    @property
    def radius_exponent(self):
        return len(self.center)

    @property
    def radius(self):
        return Fraction(1, self.p**self.radius_exponent)

    @property
    def measure(self):
        # normalized Haar measure of a disk equals its radius
        return self.radius


Digits = Union[Word, PAdicPoint]


def to_padic_integer(w: Word) -> int:
    return sum(digit * w.p**j for j, digit in enumerate(w.digits))


def from_padic_integer(n: int, p: int, k: int) -> Word:
    """
    The length-k word whose p-adic value is n, 0 <= n < p**k.
    """
    if not 0 <= n < p**k:
        raise exceptions.WordDigitOutOfRangeError(
            _("{} is not the value of a word of length {} for p={}").format(n, k, p)
        )
    digits = []
    for unused in range(k):
        n, digit = divmod(n, p)
        digits.append(digit)
    return Word(p, digits)


def prefix(w: Word, m: int) -> Word:
    if not 0 <= m <= len(w):
        raise exceptions.PrefixLengthOutOfRangeError(
            _("Prefix length {} is out of range for {}").format(m, w)
        )
    return Word(w.p, w.digits[:m])


def children(w: Word) -> List[Word]:
    return [w.append(digit) for digit in range(w.p)]


def _check_same_p(u, v):
    if u.p != v.p:
        raise exceptions.BranchingFactorMismatchError(
            _("Cannot compare digit strings with p={} and p={}").format(u.p, v.p)
        )


def common_prefix_len(u: Digits, v: Digits) -> int:
    _check_same_p(u, v)
    count = 0
    for a, b in zip(u.digits, v.digits):
        if a != b:
            break
        count += 1
    return count


def is_prefix(u: Word, v: Digits) -> bool:
    """
    True if u is a prefix of v (every word is a prefix of itself)
    """
    _check_same_p(u, v)
    return v.digits[: len(u)] == u.digits


def ball_contains(d: Disk, x: PAdicPoint) -> bool:
    _check_same_p(d.center, x)
    if x.resolution < d.radius_exponent:
        raise exceptions.InsufficientResolutionError(
            _("Point {} has resolution {}, disk {} needs {}").format(
                x, x.resolution, d.center, d.radius_exponent
            )
        )
    return x.digits[: d.radius_exponent] == d.center.digits


def padic_distance(u: Digits, v: Digits) -> Fraction:
    """
    |u - v|_p read off the digits: p**-c, c the common prefix length.

    Equal digit strings of the same length are at distance 0.
    """
    c = common_prefix_len(u, v)
    if c == len(u.digits) == len(v.digits):
        return Fraction(0)
    return Fraction(1, u.p**c)


def words_of_length(p: int, k: int) -> List[Word]:
    """
    All p**k words of length k ordered by their p-adic value
    """
    _check_p(p)
    if k < 0:
        raise exceptions.WordLengthError(k, _("Word length must be >= 0, got {}").format(k))
    return [from_padic_integer(n, p, k) for n in range(p**k)]


def words_up_to(p: int, depth: int) -> Iterator[Word]:
    for k in range(depth + 1):
        yield from words_of_length(p, k)


def word_sort_key(w: Word):
    return (len(w), to_padic_integer(w))


def format_word(w: Word) -> str:
    if not w.digits:
        return EMPTY_WORD_LITERAL
    if w.p > MAX_LITERAL_P:
        return DIGIT_SEPARATOR.join(str(d) for d in w.digits)
    return "".join(str(d) for d in w.digits)


def _literal_digits(literal, p):
    _check_p(p)
    # dotted digits past one character per digit
    parts = literal.split(DIGIT_SEPARATOR) if p > MAX_LITERAL_P else list(literal)
    if not literal or not all(part.isdecimal() for part in parts):
        raise exceptions.WordLiteralError(
            literal, _("Invalid word literal {!r}").format(literal)
        )
    digits = tuple(int(part) for part in parts)
    if any(d >= p for d in digits):
        raise exceptions.WordLiteralError(
            literal, _("Word literal {!r} has digits >= {}").format(literal, p)
        )
    return digits


def parse_word(literal: str, p: int) -> Word:
    """
    Parse a word literal: ``011`` is (0, 1, 1), ``e`` is the empty word.
    """
    literal = literal.strip()
    if literal in (EMPTY_WORD_LITERAL, ""):
        _check_p(p)
        return Word(p)
    return Word(p, _literal_digits(literal, p))


def parse_point(literal: str, p: int) -> PAdicPoint:
    return PAdicPoint(p, _literal_digits(literal.strip(), p))
