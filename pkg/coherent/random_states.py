"""
Seeded pseudo-random states.

Leaves are drawn from a small Gaussian-rational grid: real and imaginary
parts are ``settings.FCS_LEAF_GRID`` values divided by
``settings.FCS_LEAF_DENOMINATOR``.
"""
import logging
from fractions import Fraction

from django.conf import settings

from scalars.scalar_lib import constant
from words.word_lib import Word, words_of_length, words_up_to

from .states import DiskCoefficients, XCombination, cascade_from_leaves

LOGGER = logging.getLogger(__name__)


def random_constant(rng, complex_values=True):
    grid = settings.FCS_LEAF_GRID
    denominator = settings.FCS_LEAF_DENOMINATOR
    re = Fraction(rng.choice(grid), denominator)
    im = Fraction(rng.choice(grid), denominator) if complex_values else 0
    return constant(re, im)


def random_leaves(p, depth, rng, complex_values=True):
    return {w: random_constant(rng, complex_values) for w in words_of_length(p, depth)}


def random_cascade(p, depth, rng, complex_values=True) -> DiskCoefficients:
    return cascade_from_leaves(p, depth, random_leaves(p, depth, rng, complex_values))


def random_word(p, max_length, rng) -> Word:
    length = rng.randint(0, max_length)
    return Word(p, [rng.randrange(p) for unused in range(length)])


def random_x_combination(p, max_length, rng, terms=3, complex_values=True) -> XCombination:
    """
    ``terms`` X_I with random words of length <= max_length
    """
    combination = XCombination(p)
    for unused in range(terms):
        combination = combination + XCombination(
            p, {random_word(p, max_length, rng): random_constant(rng, complex_values)}
        )
    return combination


def x_basis(p, max_length):
    return [XCombination.x(w) for w in words_up_to(p, max_length)]
