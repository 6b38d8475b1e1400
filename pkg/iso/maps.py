"""
The isomorphism between the free coherent state picture and functions on Z_p.

    phi:  X_I -> p**|I| theta_|I|(x - I)   (span of the X_I -> test functions)
    phi': Psi -> Psi o phi**-1             (coherent states -> generalized functions)

With the shared ``DiskCoefficients`` representation phi' is a re-tagging;
the content is that (phi' Psi, phi Phi) equals the renormalized pairing.
"""
import logging
from fractions import Fraction
from typing import List, Tuple

from django.utils.translation import gettext as _

from coherent.states import DiskCoefficients, XCombination, check_cascade
from padic_fn.distributions import GeneralizedFunction, TestFunction, indicator
from scalars.scalar_lib import Constant, constant
from words.word_lib import Word, words_of_length, words_up_to

from . import exceptions

LOGGER = logging.getLogger(__name__)


def phi(combination: XCombination, level=None) -> TestFunction:
    """
    sum_I c_I p**|I| theta_|I|(x - I) refined to ``level``

    Raises
    ------
    PhiLevelError
        level is below the longest word of the combination
    """
    if level is None:
        level = combination.max_length
    if level < combination.max_length:
        raise exceptions.PhiLevelError(
            _("phi needs level >= {}, got {}").format(combination.max_length, level)
        )
    total = TestFunction(combination.p, level)
    for w, c in combination.items():
        total = total + indicator(w, level).scale(c * constant(combination.p ** len(w)))
    return total


def phi_inverse(f: TestFunction) -> XCombination:
    """
    sum_{|I| = k} f(I) p**-k X_I, k the level of f
    """
    weight = constant(Fraction(1, f.p**f.level))
    return XCombination(f.p, {w: value * weight for w, value in f.items()})


def canonicalize(combination: XCombination, level) -> XCombination:
    """
    Rewrite every X_I with |I| < level as p**-m sum_{|w|=m} X_{Iw}
    """
    p = combination.p
    terms = {}
    for word, c in combination.items():
        m = level - len(word)
        if m < 0:
            raise exceptions.PhiLevelError(
                _("Cannot canonicalize a word of length {} to level {}").format(
                    len(word), level
                )
            )
        weight = c * constant(Fraction(1, p**m))
        for tail in words_of_length(p, m):
            refined = Word(p, word.digits + tail.digits)
            terms[refined] = terms.get(refined, constant(0)) + weight
    return XCombination(p, terms)


def equivalent(a: XCombination, b: XCombination) -> bool:
    """
    Equality modulo X_I = p**-1 sum_j X_{Ij}
    """
    if a.p != b.p:
        return False
    level = max(a.max_length, b.max_length)
    return canonicalize(a, level) == canonicalize(b, level)


def phi_prime(dc: DiskCoefficients) -> GeneralizedFunction:
    return GeneralizedFunction(dc)


def phi_prime_inverse(u: GeneralizedFunction) -> DiskCoefficients:
    """
    Raises
    ------
    CascadeViolationError
    """
    return check_cascade(u.coefficients)


def phi_matrix(p, level) -> List[Tuple[Word, Constant]]:
    """
    Diagonal of phi in the bases X_I and theta_|I|(x - I), |I| <= level
    """
    return [(w, constant(p ** len(w))) for w in words_up_to(p, level)]
