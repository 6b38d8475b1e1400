"""
Renormalized pairing of free coherent states with the span of the X_I.

For Psi with coefficients Psi_J and Phi = sum_I c_I X_I the Fock product
splits into levels,

    <conj(Phi), Psi> = sum_k t**k * sum_I c_I <X_I^k, Psi^k>,   t = L**2,

and past the longest word K of Phi every level overlap is p**-k S with
S = sum_I c_I p**|I| Psi_I. The product is therefore a polynomial of degree K
plus a geometric tail, and the renormalized pairing
lim (1 - t/p) <conj(Phi), Psi> is S. The pairing is linear in both
arguments.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence

from django.utils.translation import gettext as _

from fock.fock_lib import FockVector, norm_levels
from scalars.scalar_lib import ZERO, Constant, abs2, constant, render_constant, to_constant
from scalars.series import GeometricSeriesValue, renormalized_limit
from words.word_lib import PAdicPoint, Word, prefix, words_of_length

from . import exceptions
from .states import (
    DiskCoefficients,
    XCombination,
    build_x_combination,
    delta_disk_coefficients,
    fock_to_fcs,
    x_combination_coefficients,
)

LOGGER = logging.getLogger(__name__)


def _check_p(dc, combination):
    if dc.p != combination.p:
        raise exceptions.StateBranchingFactorMismatchError(
            _("Cannot pair p={} coefficients with a p={} combination").format(
                dc.p, combination.p
            )
        )


def level_overlap(dc: DiskCoefficients, word: Word, k) -> Constant:
    """
    <X_I^k, Psi^k>: the L-free overlap of the length-k level components
    """
    p = dc.p
    if k <= len(word):
        return dc[Word(p, word.digits[:k])]
    m = k - len(word)
    total = ZERO
    for w in words_of_length(p, m):
        total += dc[Word(p, word.digits + w.digits)]
    return total * constant(Fraction(1, p**m))


def combination_overlap(dc: DiskCoefficients, combination: XCombination, k) -> Constant:
    return sum(
        (c * level_overlap(dc, w, k) for w, c in combination.items()), ZERO
    )


def stabilized_level_pairing(dc: DiskCoefficients, combination: XCombination, k) -> Constant:
    """
    S_k = p**k <Phi^k, Psi^k>; constant for k >= the longest word of Phi
    """
    _check_p(dc, combination)
    if k > dc.depth:
        raise exceptions.DepthTooSmallError(
            _("Level {} is deeper than the coefficients ({})").format(k, dc.depth)
        )
    return combination_overlap(dc, combination, k) * constant(dc.p**k)


def pairing_series(dc: DiskCoefficients, combination: XCombination) -> GeometricSeriesValue:
    """
    <conj(Phi), Psi> as polynomial part plus geometric tail in t = L**2

    Raises
    ------
    DepthTooSmallError
        Psi is shallower than the longest word of Phi
    PairingStabilizationError
        S_K != S_{K+1}, which means Psi violates the cascade relation
    """
    _check_p(dc, combination)
    top = combination.max_length
    if dc.depth < top:
        raise exceptions.DepthTooSmallError(
            _("Pairing needs depth {}, coefficients have depth {}").format(
                top, dc.depth
            )
        )
    coefficients = [combination_overlap(dc, combination, k) for k in range(top + 1)]
    stable = coefficients[top] * constant(dc.p**top)
    if dc.depth > top:
        following = stabilized_level_pairing(dc, combination, top + 1)
        if following != stable:
            LOGGER.error(
                "Level pairing did not stabilize: S_%s=%s S_%s=%s",
                top,
                render_constant(stable),
                top + 1,
                render_constant(following),
            )
            raise exceptions.PairingStabilizationError(
                _("Level pairing did not stabilize: S_{}={} S_{}={}").format(
                    top, render_constant(stable), top + 1, render_constant(following)
                )
            )
    else:
        LOGGER.debug("Depth %s equals the longest word, reading S_%s alone", dc.depth, top)
    # tail coefficient of t**k is S * p**-k = (S p**-K) p**K p**-k
    tail_constant = stable * constant(Fraction(1, dc.p**top))
    return GeometricSeriesValue(dc.p, coefficients, tail_constant, top)


def renormalized_pairing(dc: DiskCoefficients, combination: XCombination) -> Constant:
    """
    (Psi, Phi) = lim_{L**2 -> p} (1 - L**2/p) <conj(Phi), Psi>
               = sum_I c_I p**|I| Psi_I
    """
    return renormalized_limit(pairing_series(dc, combination), dc.p)


def _check_lambda(lambda0, p):
    if lambda0 <= 0 or lambda0 * lambda0 >= p:
        LOGGER.warning("L=%s is outside (0, sqrt(%s))", lambda0, p)
        raise exceptions.ThresholdError(
            lambda0,
            _("L must lie in (0, sqrt(p)) = (0, sqrt({})), got {}").format(p, lambda0),
        )


def renormalized_pairing_numeric(
    dc: DiskCoefficients, combination: XCombination, lambda0: float
) -> complex:
    """
    (1 - L**2/p) <conj(Phi), Psi> at L = lambda0, closed-form tail included

    Raises
    ------
    ThresholdError
        lambda0 <= 0 or lambda0**2 >= p, where the series diverges
    """
    _check_lambda(lambda0, dc.p)
    return pairing_series(dc, combination).prelimit(float(lambda0) ** 2)


def _level_norms(dc: DiskCoefficients) -> List[Fraction]:
    norms = []
    for k in range(dc.depth + 1):
        norms.append(sum((abs2(v) for v in dc.level(k).values()), Fraction(0)))
    return norms


def _splits_evenly(dc: DiskCoefficients) -> bool:
    """
    Deepest level spreads each parent evenly over its p children, as an
    X-combination shorter than the depth does
    """
    if dc.depth < 1:
        return False
    weight = constant(Fraction(1, dc.p))
    return all(
        value == dc[prefix(w, dc.depth - 1)] * weight
        for w, value in dc.leaves().items()
    )


def _geometric_norm(dc: DiskCoefficients) -> GeometricSeriesValue:
    norms = [constant(n) for n in _level_norms(dc)]
    return GeometricSeriesValue(dc.p, norms, norms[-1], dc.depth)


def norm_squared(v) -> GeometricSeriesValue:
    """
    <v, v> as a series in t = L**2.

    Arguments
    ---------
        v: XCombination, DiskCoefficients or FockVector

    Return
    ------
    For X-combinations, and for disk coefficients whose deepest level splits
    evenly, the exact value with its geometric tail. Other disk coefficients
    (delta states among them) give a ``TruncatedNorm``: the partial sum
    through their depth, which certifies growth at a given t. Fock vectors
    give their partial sum (no tail).
    """
    if isinstance(v, XCombination):
        return _geometric_norm(x_combination_coefficients(v, v.max_length))
    if isinstance(v, DiskCoefficients):
        if _splits_evenly(v):
            return _geometric_norm(v)
        LOGGER.debug("No geometric continuation past depth %s, keeping the partial sum", v.depth)
        return TruncatedNorm(v.p, _level_norms(v))
    if isinstance(v, FockVector):
        return GeometricSeriesValue(
            v.p, [to_constant(n) for n in norm_levels(v)], ZERO, v.depth
        )
    raise TypeError(_("Cannot take the norm of {!r}").format(v))


@dataclass
class DivergenceCertificate:
    """
    Partial sums of sum_k t**k ||Psi^k||**2 over depths
    """

    p: int
    lambda2: Fraction
    depths: Sequence[int]
    partial_sums: List[Fraction] = field(default_factory=list)
    level_ratios: List[Fraction] = field(default_factory=list)

    @property
    def monotone(self):
        return all(a <= b for a, b in zip(self.partial_sums, self.partial_sums[1:]))

    @property
    def diverges(self):
        """
        Monotone growth with no level shrinking: the partial sums grow at
        least by a fixed positive amount per level.
        """
        return self.monotone and all(r >= 1 for r in self.level_ratios)


def _certify(p, lambda2, norms, depths) -> DivergenceCertificate:
    terms = [lambda2**k * n for k, n in enumerate(norms)]
    certificate = DivergenceCertificate(p, lambda2, depths)
    for depth in depths:
        certificate.partial_sums.append(sum(terms[: depth + 1], Fraction(0)))
    first = min(depths)
    certificate.level_ratios = [b / a for a, b in zip(terms[first:], terms[first + 1 :]) if a]
    return certificate


class TruncatedNorm(GeometricSeriesValue):
    """
    Norm of a cascade with no known continuation past its depth, kept as the
    partial sum through that depth
    """

    def __init__(self, p, level_norms: List[Fraction]):
        super().__init__(p, [constant(n) for n in level_norms], ZERO, len(level_norms) - 1)
        self.level_norms = list(level_norms)

    @property
    def depth(self):
        return len(self.level_norms) - 1

    def certificate(self, lambda2, depths=None) -> DivergenceCertificate:
        if depths is None:
            depths = range(self.depth + 1)
        return _certify(self.p, Fraction(lambda2), self.level_norms, list(depths))


def divergence_certificate(x: PAdicPoint, lambda2, depths=range(4, 13)) -> DivergenceCertificate:
    """
    Certify the growth of ||delta_x||**2 at t = lambda2 from exact partial
    sums; at t >= p the ratio of consecutive level terms is >= 1.
    """
    lambda2 = Fraction(lambda2)
    depths = list(depths)
    dc = delta_disk_coefficients(x, max(depths))
    certificate = _certify(x.p, lambda2, _level_norms(dc), depths)
    LOGGER.info(
        "||delta_%s||^2 at t=%s: partial sums %s .. %s",
        x,
        lambda2,
        certificate.partial_sums[0],
        certificate.partial_sums[-1],
    )
    return certificate


def induced_coefficients(combination: XCombination, depth) -> DiskCoefficients:
    """
    Psi_J = p**-|J| (Phi, X_J) for |J| <= depth.

    The Fock vector of Phi is built one level deeper than ``depth`` and its
    coefficients are read back from the level components, so the pairings
    can check their own stabilization.
    """
    if depth < combination.max_length:
        raise exceptions.DepthTooSmallError(
            _("Combination needs depth {}, got {}").format(
                combination.max_length, depth
            )
        )
    read_back = fock_to_fcs(build_x_combination(combination, depth + 1))
    values = {}
    for k in range(depth + 1):
        weight = constant(Fraction(1, combination.p**k))
        for w in words_of_length(combination.p, k):
            values[w] = weight * renormalized_pairing(read_back, XCombination.x(w))
    LOGGER.debug("Induced coefficients of %s at depth %s", combination, depth)
    return DiskCoefficients(combination.p, depth, values)


def describe_series(g: GeometricSeriesValue) -> List[str]:
    lines = []
    for k, c in enumerate(g.coefficients):
        lines.append("t^{} {}".format(k, render_constant(c)))
    lines.append(
        "tail {} * p^{} * sum_{{k>{}}} (t/p)^k".format(
            render_constant(g.tail_constant), g.tail_start, g.tail_start
        )
    )
    return lines
