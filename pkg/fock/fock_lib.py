"""
Depth-truncated free Fock space over a p-dimensional one-particle space.

The basis vector A+_I Omega is labelled by the word I. Creation appends the
new digit at the end of the word and annihilation strips the last digit, so
building A+_I Omega applies A+_{i_0} first.

Every ``FockVector`` carries a guarantee g <= D: its coefficients on words of
length <= g are exact for the untruncated object. A guarantee of -1 means
nothing is guaranteed.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, List

from django.utils.translation import gettext as _

from scalars.scalar_lib import FIELD, L, Scalar, conj, scalar
from words.word_lib import Word, word_sort_key

from . import exceptions

LOGGER = logging.getLogger(__name__)

NO_GUARANTEE = -1


def _check_depth(depth):
    if not isinstance(depth, int) or depth < 0:
        raise exceptions.DepthBoundError(
            _("Depth bound must be an integer >= 0, got {}").format(depth)
        )


class FockVector:
    """
    Immutable finite map Word -> Scalar over words of length <= depth.

    Zero coefficients are dropped on construction. Two vectors are equal when
    they have the same p and the same coefficient map.
    """

    def __init__(self, p, depth, coeffs=None, guarantee=None):
        _check_depth(depth)
        if guarantee is None:
            guarantee = depth
        self.p = p
        self.depth = depth
        self.guarantee = max(NO_GUARANTEE, min(guarantee, depth))
        self._coeffs = {}
        for w, value in (coeffs or {}).items():
            if w.p != p:
                raise exceptions.FockBranchingFactorMismatchError(
                    _("Word {} has p={}, vector has p={}").format(w, w.p, p)
                )
            if len(w) > depth:
                raise exceptions.DepthBoundError(
                    _("Word {} exceeds the depth bound {}").format(w, depth)
                )
            value = scalar(value)
            if value:
                self._coeffs[w] = value

    def __repr__(self):
        return "FockVector(p={}, depth={}, guarantee={}, support={})".format(
            self.p, self.depth, self.guarantee, len(self._coeffs)
        )

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.p == other.p and self._coeffs == other._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def support(self) -> List[Word]:
        return sorted(self._coeffs, key=word_sort_key)

    def coefficient(self, w: Word) -> Scalar:
        return self._coeffs.get(w, FIELD.zero)

    def __add__(self, other):
        _check_same_p(self, other)
        coeffs = dict(self._coeffs)
        for w, value in other.items():
            coeffs[w] = coeffs.get(w, FIELD.zero) + value
        return FockVector(
            self.p,
            max(self.depth, other.depth),
            coeffs,
            min(self.guarantee, other.guarantee),
        )

    def __neg__(self):
        return self.scale(-FIELD.one)

    def __sub__(self, other):
        return self + (-other)

    def with_guarantee(self, guarantee) -> "FockVector":
        return FockVector(self.p, self.depth, dict(self._coeffs), guarantee)

    def scale(self, c) -> "FockVector":
        c = scalar(c)
        return FockVector(
            self.p,
            self.depth,
            {w: c * value for w, value in self._coeffs.items()},
            self.guarantee,
        )


def _check_same_p(u, v):
    if u.p != v.p:
        raise exceptions.FockBranchingFactorMismatchError(
            _("Cannot combine Fock vectors with p={} and p={}").format(u.p, v.p)
        )


def _check_index(i, v):
    if not isinstance(i, int) or not 0 <= i < v.p:
        raise exceptions.CreatorIndexError(
            _("Operator index {} is out of range for p={}").format(i, v.p)
        )


def zero_vector(p, depth) -> FockVector:
    return FockVector(p, depth)


def vacuum(p, depth) -> FockVector:
    return FockVector(p, depth, {Word(p): FIELD.one})


def basis_vector(w: Word, depth) -> FockVector:
    """
    A+_w Omega
    """
    return FockVector(w.p, depth, {w: FIELD.one})


def sum_vectors(p, depth, vectors: Iterable[FockVector]) -> FockVector:
    total = zero_vector(p, depth)
    for v in vectors:
        total = total + v
    return total


def create(i, v: FockVector) -> FockVector:
    """
    A+_i v: every word w goes to w.i; words that would exceed the depth
    bound are dropped.
    """
    _check_index(i, v)
    coeffs = {}
    dropped = 0
    for w, value in v.items():
        if len(w) < v.depth:
            coeffs[w.append(i)] = value
        else:
            dropped += 1
    if dropped:
        LOGGER.debug("create(%s) dropped %s words at depth %s", i, dropped, v.depth)
    return FockVector(v.p, v.depth, coeffs, min(v.guarantee + 1, v.depth))


def annihilate(i, v: FockVector) -> FockVector:
    """
    A_i v: w.i goes to w; the empty word and words ending in another digit
    are killed.
    """
    _check_index(i, v)
    coeffs = {w.parent: value for w, value in v.items() if w.last == i}
    return FockVector(v.p, v.depth, coeffs, v.guarantee - 1)


def total_annihilate(v: FockVector) -> FockVector:
    """
    A = sum_i A_i
    """
    coeffs: Dict[Word, Scalar] = {}
    for w, value in v.items():
        if w.digits:
            coeffs[w.parent] = coeffs.get(w.parent, FIELD.zero) + value
    return FockVector(v.p, v.depth, coeffs, v.guarantee - 1)


def averaged_create(v: FockVector) -> FockVector:
    """
    (1/p) sum_i A+_i
    """
    weight = scalar(Fraction(1, v.p))
    return sum_vectors(
        v.p, v.depth, (create(i, v).scale(weight) for i in range(v.p))
    ).with_guarantee(min(v.guarantee + 1, v.depth))


def inner_product(u: FockVector, v: FockVector) -> Scalar:
    """
    <u, v> = sum_w conj(u_w) v_w, conjugate-linear in u
    """
    _check_same_p(u, v)
    if len(u) > len(v):
        small, large, conjugate_small = v, u, False
    else:
        small, large, conjugate_small = u, v, True
    total = FIELD.zero
    for w, value in small.items():
        other = large.coefficient(w)
        if other:
            if conjugate_small:
                total += conj(value) * other
            else:
                total += conj(other) * value
    return total


def level_component(v: FockVector, k) -> FockVector:
    """
    Words of length exactly k with L**k divided out of their coefficients.

    Raises
    ------
    NotCoherentError
        when a coefficient is not divisible by L**k
    """
    if not 0 <= k <= v.depth:
        raise exceptions.DepthBoundError(
            _("Level {} is out of range for depth {}").format(k, v.depth)
        )
    coeffs = {}
    power = L**k
    for w, value in v.items():
        if len(w) != k:
            continue
        quotient = value / power
        if not quotient.denom.is_ground:
            LOGGER.warning("Coefficient of %s is not divisible by L^%s", w, k)
            raise exceptions.NotCoherentError(
                w,
                _("Coefficient of {} is not divisible by L^{}").format(w, k),
            )
        coeffs[w] = quotient
    return FockVector(v.p, k, coeffs)


def norm_levels(v: FockVector) -> List[Scalar]:
    """
    ||level_component(v, k)||**2 for k = 0 .. depth
    """
    levels = []
    for k in range(v.depth + 1):
        component = level_component(v, k)
        levels.append(inner_product(component, component))
    return levels
