"""
Locally constant test functions on Z_p and generalized functions.

A test function of level k takes one constant value on each disk of radius
p**-k, that is on each length-k word. A generalized function is given by its
values Psi_I on all disks up to some depth; finite additivity over subdisks
is the cascade relation, so it shares ``DiskCoefficients`` with the free
coherent states.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from django.utils.translation import gettext as _

from coherent.states import DiskCoefficients, delta_disk_coefficients
from scalars.scalar_lib import (
    ONE,
    ZERO,
    Constant,
    abs2,
    conj_constant,
    constant,
    render_constant,
)
from words.word_lib import (
    PAdicPoint,
    Word,
    format_word,
    words_of_length,
    words_up_to,
)

from . import exceptions

LOGGER = logging.getLogger(__name__)


def _as_constant(value) -> Constant:
    if isinstance(value, Constant):
        return value
    return constant(value)


class TestFunction:
    """
    Values on the p**level disks of radius p**-level, absent disks are 0
    """

    __test__ = False

    def __init__(self, p, level, values=None):
        if level < 0:
            raise exceptions.LevelError(_("Level must be >= 0, got {}").format(level))
        self.p = p
        self.level = level
        self._values: Dict[Word, Constant] = {}
        for w, value in (values or {}).items():
            if w.p != p:
                raise exceptions.FunctionBranchingFactorMismatchError(
                    _("Word {} has p={}, function has p={}").format(w, w.p, p)
                )
            if len(w) != level:
                raise exceptions.LevelError(
                    _("Disk {} is not at level {}").format(format_word(w), level)
                )
            value = _as_constant(value)
            if value:
                self._values[w] = value

    def __repr__(self):
        return "TestFunction(p={}, level={}, support={})".format(
            self.p, self.level, len(self._values)
        )

    def __getitem__(self, w: Word) -> Constant:
        return self._values.get(w, ZERO)

    def __eq__(self, other):
        """
        Equal as functions on Z_p, whatever the levels
        """
        if not isinstance(other, TestFunction):
            return NotImplemented
        if self.p != other.p:
            return False
        level = max(self.level, other.level)
        return refine(self, level)._values == refine(other, level)._values

    def __bool__(self):
        return bool(self._values)

    def items(self):
        return self._values.items()

    def values_by_disk(self):
        return [(w, self[w]) for w in words_of_length(self.p, self.level)]

    def __add__(self, other):
        a, b = _common_level(self, other)
        values = dict(a._values)
        for w, value in b.items():
            values[w] = values.get(w, ZERO) + value
        return TestFunction(a.p, a.level, values)

    def __mul__(self, other):
        if not isinstance(other, TestFunction):
            return NotImplemented
        return multiply(self, other)

    def scale(self, c) -> "TestFunction":
        c = _as_constant(c)
        return TestFunction(
            self.p, self.level, {w: c * value for w, value in self._values.items()}
        )

    def conjugate(self) -> "TestFunction":
        return TestFunction(
            self.p,
            self.level,
            {w: conj_constant(value) for w, value in self._values.items()},
        )


@dataclass(frozen=True)
class GeneralizedFunction:
    """
    Continuous linear functional on test functions: the disk around I has
    mass Psi_I.
    """

    coefficients: DiskCoefficients

    @property
    def p(self):
        return self.coefficients.p

    @property
    def depth(self):
        return self.coefficients.depth

    def __getitem__(self, w: Word) -> Constant:
        return self.coefficients[w]


@dataclass(frozen=True)
class DkNorm:
    word: Optional[Word]
    modulus_squared: Fraction


def _check_same_p(f, g):
    if f.p != g.p:
        raise exceptions.FunctionBranchingFactorMismatchError(
            _("Cannot combine functions with p={} and p={}").format(f.p, g.p)
        )


def _common_level(f, g):
    _check_same_p(f, g)
    level = max(f.level, g.level)
    return refine(f, level), refine(g, level)


def indicator(word: Word, level=None) -> TestFunction:
    """
    theta_|I|(x - I) at the given level (default |I|)
    """
    if level is None:
        level = len(word)
    if level < len(word):
        raise exceptions.LevelError(
            _("Indicator of {} needs level >= {}, got {}").format(
                format_word(word), len(word), level
            )
        )
    return refine(TestFunction(word.p, len(word), {word: ONE}), level)


def constant_function(p, c, level=0) -> TestFunction:
    return refine(TestFunction(p, 0, {Word(p): c}), level)


def refine(f: TestFunction, level) -> TestFunction:
    """
    Copy each disk value to its p**(level - f.level) subdisks
    """
    if level < f.level:
        raise exceptions.LevelError(
            _("Cannot refine level {} to level {}").format(f.level, level)
        )
    if level == f.level:
        return f
    values = {}
    for w, value in f.items():
        for tail in words_of_length(f.p, level - f.level):
            values[Word(f.p, w.digits + tail.digits)] = value
    return TestFunction(f.p, level, values)


def coarsen(f: TestFunction) -> TestFunction:
    """
    The same function at the lowest level that represents it exactly
    """
    while f.level > 0:
        values = {}
        for parent in words_of_length(f.p, f.level - 1):
            children = {f[parent.append(i)] for i in range(f.p)}
            if len(children) > 1:
                return f
            values[parent] = children.pop()
        f = TestFunction(f.p, f.level - 1, values)
    return f


def multiply(f: TestFunction, g: TestFunction) -> TestFunction:
    a, b = _common_level(f, g)
    return TestFunction(
        a.p, a.level, {w: value * b[w] for w, value in a.items() if b[w]}
    )


def haar_integral(f: TestFunction) -> Constant:
    """
    sum over disks of value * p**-level
    """
    total = sum((value for w, value in f.items()), ZERO)
    return total * constant(Fraction(1, f.p**f.level))


def l2_inner(f: TestFunction, g: TestFunction) -> Constant:
    """
    (f, g) = integral of conj(f) g, conjugate-linear in f
    """
    return haar_integral(multiply(f.conjugate(), g))


def evaluate(f: TestFunction, x: PAdicPoint) -> Constant:
    """
    Raises
    ------
    InsufficientResolutionError
    """
    _check_same_p(f, x)
    return f[x.truncation(f.level)]


def generalized_function(dc: DiskCoefficients) -> GeneralizedFunction:
    return GeneralizedFunction(dc)


def gf_pair(u: GeneralizedFunction, f: TestFunction) -> Constant:
    """
    (u, f) = sum over level-k disks I of f(I) Psi_I, bilinear
    """
    _check_same_p(u, f)
    if u.depth < f.level:
        raise exceptions.GeneralizedFunctionDepthError(
            _("Generalized function of depth {} cannot pair with level {}").format(
                u.depth, f.level
            )
        )
    return sum((value * u[w] for w, value in f.items()), ZERO)


def gf_delta(x: PAdicPoint, depth) -> GeneralizedFunction:
    """
    delta(x - .): unit mass on every disk containing x
    """
    return GeneralizedFunction(delta_disk_coefficients(x, depth))


def dk_functional_norm(u: GeneralizedFunction, level) -> DkNorm:
    """
    max_{|I| <= level} |Psi_I|, reported as the maximizing word and the exact
    |Psi_I|**2. Ties go to the lexicographically smallest word.
    """
    if level > u.depth:
        raise exceptions.GeneralizedFunctionDepthError(
            _("Level {} is deeper than the generalized function ({})").format(
                level, u.depth
            )
        )
    word = min(words_up_to(u.p, level), key=lambda w: (-abs2(u[w]), w.digits))
    modulus_squared = abs2(u[word])
    if not modulus_squared:
        return DkNorm(None, Fraction(0))
    best = DkNorm(word, modulus_squared)
    LOGGER.debug(
        "D_%s norm attained at %s: |%s|^2=%s",
        level,
        format_word(word),
        render_constant(u[word]),
        modulus_squared,
    )
    return best
