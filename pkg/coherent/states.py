"""
Free coherent states.

A free coherent state with eigenvalue L is determined by its coefficients
Psi_I, one per word, subject to the cascade relation
Psi_I = sum_i Psi_{Ii}. ``DiskCoefficients`` keeps these coefficients up to a
depth; the Fock vector is sum_I L**|I| Psi_I A+_I Omega.
"""
import logging
from fractions import Fraction
from typing import Dict, List

from django.utils.translation import gettext as _

from fock.fock_lib import (
    FockVector,
    averaged_create,
    basis_vector,
    level_component,
    total_annihilate,
)
from scalars.scalar_lib import (
    FIELD,
    ONE,
    ZERO,
    Constant,
    L,
    conj_constant,
    constant,
    monomial,
    render_constant,
    scalar,
    to_constant,
)
from words.word_lib import (
    PAdicPoint,
    Word,
    children,
    format_word,
    word_sort_key,
    words_of_length,
    words_up_to,
)

from . import exceptions

LOGGER = logging.getLogger(__name__)


def _as_constant(value) -> Constant:
    if isinstance(value, Constant):
        return value
    return constant(value)


def _check_depth(word, depth):
    if len(word) > depth:
        raise exceptions.DepthTooSmallError(
            _("Word {} does not fit depth {}").format(format_word(word), depth)
        )


class DiskCoefficients:
    """
    Coefficients Psi_I for every word of length <= depth (absent = 0).

    Also read as the generalized function on Z_p whose value on the disk
    around I is Psi_I.
    """

    def __init__(self, p, depth, values=None):
        self.p = p
        self.depth = depth
        self._values: Dict[Word, Constant] = {}
        for w, value in (values or {}).items():
            if w.p != p:
                raise exceptions.StateBranchingFactorMismatchError(
                    _("Word {} has p={}, coefficients have p={}").format(w, w.p, p)
                )
            _check_depth(w, depth)
            value = _as_constant(value)
            if value:
                self._values[w] = value

    def __repr__(self):
        return "DiskCoefficients(p={}, depth={}, support={})".format(
            self.p, self.depth, len(self._values)
        )

    def __getitem__(self, w: Word) -> Constant:
        _check_depth(w, self.depth)
        return self._values.get(w, ZERO)

    def __eq__(self, other):
        if not isinstance(other, DiskCoefficients):
            return NotImplemented
        return (
            self.p == other.p
            and self.depth == other.depth
            and self._values == other._values
        )

    def __bool__(self):
        return bool(self._values)

    def items(self):
        return self._values.items()

    def level(self, k) -> Dict[Word, Constant]:
        return {w: self[w] for w in words_of_length(self.p, k)}

    def leaves(self) -> Dict[Word, Constant]:
        return self.level(self.depth)

    def __add__(self, other):
        if self.p != other.p or self.depth != other.depth:
            raise exceptions.StateBranchingFactorMismatchError(
                _("Cannot add coefficients of shape ({}, {}) and ({}, {})").format(
                    self.p, self.depth, other.p, other.depth
                )
            )
        values = dict(self._values)
        for w, value in other.items():
            values[w] = values.get(w, ZERO) + value
        return DiskCoefficients(self.p, self.depth, values)

    def scale(self, c) -> "DiskCoefficients":
        c = _as_constant(c)
        return DiskCoefficients(
            self.p, self.depth, {w: c * value for w, value in self._values.items()}
        )

    def conjugate(self) -> "DiskCoefficients":
        return DiskCoefficients(
            self.p,
            self.depth,
            {w: conj_constant(value) for w, value in self._values.items()},
        )

    def restrict(self, depth) -> "DiskCoefficients":
        if depth > self.depth:
            raise exceptions.DepthTooSmallError(
                _("Cannot restrict depth {} coefficients to depth {}").format(
                    self.depth, depth
                )
            )
        return DiskCoefficients(
            self.p,
            depth,
            {w: value for w, value in self._values.items() if len(w) <= depth},
        )


class XCombination:
    """
    Finite formal sum sum_I c_I X_I with constant coefficients
    """

    def __init__(self, p, terms=None):
        self.p = p
        self._terms: Dict[Word, Constant] = {}
        for w, c in (terms or {}).items():
            if w.p != p:
                raise exceptions.StateBranchingFactorMismatchError(
                    _("Word {} has p={}, combination has p={}").format(w, w.p, p)
                )
            c = self._terms.get(w, ZERO) + _as_constant(c)
            if c:
                self._terms[w] = c
            else:
                self._terms.pop(w, None)

    @classmethod
    def x(cls, w: Word) -> "XCombination":
        return cls(w.p, {w: ONE})

    def __repr__(self):
        return "XCombination({})".format(
            " + ".join(
                "({})*X:{}".format(render_constant(c), format_word(w))
                for w, c in self.items()
            )
        )

    def __eq__(self, other):
        if not isinstance(other, XCombination):
            return NotImplemented
        return self.p == other.p and self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    def items(self):
        return [(w, self._terms[w]) for w in sorted(self._terms, key=word_sort_key)]

    def coefficient(self, w: Word) -> Constant:
        return self._terms.get(w, ZERO)

    @property
    def max_length(self):
        return max((len(w) for w in self._terms), default=0)

    def __add__(self, other):
        if self.p != other.p:
            raise exceptions.StateBranchingFactorMismatchError(
                _("Cannot add combinations with p={} and p={}").format(self.p, other.p)
            )
        terms = dict(self._terms)
        for w, c in other.items():
            terms[w] = terms.get(w, ZERO) + c
        return XCombination(self.p, terms)

    def scale(self, c) -> "XCombination":
        c = _as_constant(c)
        return XCombination(self.p, {w: c * a for w, a in self._terms.items()})

    def conjugate(self) -> "XCombination":
        return XCombination(self.p, {w: conj_constant(c) for w, c in self._terms.items()})


def cascade_from_leaves(p, depth, leaf) -> DiskCoefficients:
    """
    Fill the interior coefficients by summing children upwards.

    Arguments
    ---------
        leaf: dict from length-depth words to constants, missing words are 0
    """
    values = {}
    for w, value in leaf.items():
        if len(w) != depth:
            raise exceptions.DepthTooSmallError(
                _("Leaf {} does not have length {}").format(format_word(w), depth)
            )
        values[w] = _as_constant(value)
    for k in range(depth - 1, -1, -1):
        for w in words_of_length(p, k):
            values[w] = sum((values.get(c, ZERO) for c in children(w)), ZERO)
    return DiskCoefficients(p, depth, values)


def cascade_violations(dc: DiskCoefficients) -> List[Word]:
    """
    Words I with |I| < depth where Psi_I != sum_i Psi_{Ii}
    """
    violations = []
    for w in words_up_to(dc.p, dc.depth - 1):
        if dc[w] != sum((dc[c] for c in children(w)), ZERO):
            violations.append(w)
    return violations


def check_cascade(dc: DiskCoefficients) -> DiskCoefficients:
    violations = cascade_violations(dc)
    if violations:
        LOGGER.error("Cascade relation fails at %s words", len(violations))
        raise exceptions.CascadeViolationError(
            violations,
            _("Cascade relation fails at {}").format(
                ", ".join(format_word(w) for w in violations[:5])
            ),
        )
    return dc


def fcs_to_fock(dc: DiskCoefficients) -> FockVector:
    """
    sum_I L**|I| Psi_I A+_I Omega
    """
    return FockVector(
        dc.p,
        dc.depth,
        {w: monomial(value, len(w)) for w, value in dc.items()},
    )


def fock_to_fcs(v: FockVector) -> DiskCoefficients:
    """
    Read Psi_I back from the level components of a coherent-form vector.

    Raises
    ------
    NotCoherentError
        a coefficient is not a constant multiple of L**|I|
    CascadeViolationError
    """
    values = {}
    for k in range(v.depth + 1):
        for w, value in level_component(v, k).items():
            values[w] = to_constant(value)
    return check_cascade(DiskCoefficients(v.p, v.depth, values))


def x_disk_coefficients(word: Word, depth) -> DiskCoefficients:
    """
    Psi_J = 1 on the prefixes of I, p**-m on I.w with |w| = m, 0 elsewhere
    """
    _check_depth(word, depth)
    p = word.p
    values = {}
    for k in range(len(word) + 1):
        values[Word(p, word.digits[:k])] = ONE
    for m in range(1, depth - len(word) + 1):
        weight = constant(Fraction(1, p**m))
        for w in words_of_length(p, m):
            values[Word(p, word.digits + w.digits)] = weight
    return DiskCoefficients(p, depth, values)


def x_combination_coefficients(combination: XCombination, depth) -> DiskCoefficients:
    """
    sum_I c_I x_disk_coefficients(I, depth)
    """
    total = DiskCoefficients(combination.p, depth)
    for w, c in combination.items():
        total = total + x_disk_coefficients(w, depth).scale(c)
    return total


def delta_disk_coefficients(x: PAdicPoint, depth) -> DiskCoefficients:
    """
    Psi_I = 1 if I is a prefix of x, else 0
    """
    return DiskCoefficients(
        x.p, depth, {x.truncation(k): ONE for k in range(depth + 1)}
    )


def build_x(word: Word, depth) -> FockVector:
    """
    X_I = sum_k L**k ((1/p) sum_i A+_i)**k L**|I| A+_I Omega
          + sum_{l=1}^{|I|} L**-l A**l L**|I| A+_I Omega

    Raises
    ------
    DepthTooSmallError
    """
    _check_depth(word, depth)
    seed = basis_vector(word, depth).scale(L ** len(word))
    total = seed
    term = seed
    for unused in range(depth - len(word)):
        term = averaged_create(term).scale(L)
        total = total + term
    term = seed
    inverse = FIELD.one / L
    for unused in range(len(word)):
        term = total_annihilate(term).scale(inverse)
        total = total + term
    return total.with_guarantee(depth)


def build_x_combination(combination: XCombination, depth) -> FockVector:
    total = FockVector(combination.p, depth)
    for w, c in combination.items():
        total = total + build_x(w, depth).scale(scalar(c))
    return total


def build_delta(x: PAdicPoint, depth) -> FockVector:
    """
    delta_x = sum_k L**k A+_{x_k} Omega, x_k the first k digits of x

    Raises
    ------
    InsufficientResolutionError
    """
    return FockVector(
        x.p, depth, {x.truncation(k): L**k for k in range(depth + 1)}
    )


def eigen_residual(v: FockVector) -> FockVector:
    """
    A v - L v; supported on the depth-bound words only when v is a
    truncated eigenvector of A = sum_i A_i
    """
    return total_annihilate(v) - v.scale(L)


def residual_at_boundary(v: FockVector) -> bool:
    return all(len(w) == v.depth for w, value in eigen_residual(v).items())
