"""
Pairings of free coherent states as series in t = L**2.

A ``GeometricSeriesValue`` stores

    P(t) + c * p**K * sum_{k>K} (t/p)**k

exactly: the polynomial part P as its coefficients in t, the tail constant c
and the tail start K. The tail sums to c * t**(K+1) / (p - t), so the only
pole is at t = p and the renormalized limit is the read-off p**K * c.
"""
import logging
from fractions import Fraction

from django.utils.translation import gettext as _
from sympy.polys.domains import QQ_I

from . import exceptions
from .scalar_lib import (
    FIELD,
    ZERO,
    L,
    Constant,
    Scalar,
    as_complex,
    constant,
    monomial,
    render_constant,
    render_scalar,
)

LOGGER = logging.getLogger(__name__)


def _trim(coefficients):
    coefficients = list(coefficients)
    while coefficients and not coefficients[-1]:
        coefficients.pop()
    return tuple(coefficients)


class GeometricSeriesValue:
    def __init__(self, p, coefficients=(), tail_constant=ZERO, tail_start=0):
        if tail_start < 0:
            raise exceptions.SeriesRebaseError(
                _("Tail start must be >= 0, got {}").format(tail_start)
            )
        self.p = p
        self.coefficients = _trim(coefficients)
        self.tail_constant = tail_constant
        self.tail_start = tail_start

    def __repr__(self):
        return "GeometricSeriesValue(p={}, coefficients={}, tail_constant={}, tail_start={})".format(
            self.p,
            [render_constant(c) for c in self.coefficients],
            render_constant(self.tail_constant),
            self.tail_start,
        )

    def __str__(self):
        return "{} + ({})*sum_{{k>{}}} (L^2/{})^k*{}^{}".format(
            render_scalar(self.polynomial),
            render_constant(self.tail_constant),
            self.tail_start,
            self.p,
            self.p,
            self.tail_start,
        )

    def __eq__(self, other):
        if not isinstance(other, GeometricSeriesValue) or self.p != other.p:
            return NotImplemented
        start = max(self.tail_start, other.tail_start)
        a, b = self.rebase(start), other.rebase(start)
        return a.coefficients == b.coefficients and a.tail_constant == b.tail_constant

    def coefficient(self, k):
        """
        Coefficient of t**k in the expanded series
        """
        if k > self.tail_start:
            return self._tail_term(k)
        if k < len(self.coefficients):
            return self.coefficients[k]
        return ZERO

    def _tail_term(self, k):
        # c * p**K * p**-k
        return self.tail_constant * constant(Fraction(1, self.p ** (k - self.tail_start)))

    def rebase(self, start):
        """
        Same value with the tail starting after ``start`` >= tail_start.

        The tail terms tail_start < k <= start move into the polynomial part.
        """
        if start < self.tail_start:
            raise exceptions.SeriesRebaseError(
                _("Cannot move the tail start from {} back to {}").format(
                    self.tail_start, start
                )
            )
        if start == self.tail_start:
            return self
        coefficients = list(self.coefficients) + [ZERO] * (
            start + 1 - len(self.coefficients)
        )
        for k in range(self.tail_start + 1, start + 1):
            coefficients[k] += self._tail_term(k)
        return GeometricSeriesValue(self.p, coefficients, self._tail_term(start), start)

    def __add__(self, other):
        if not isinstance(other, GeometricSeriesValue):
            return NotImplemented
        if self.p != other.p:
            raise exceptions.SeriesMismatchError(
                _("Cannot add series with p={} and p={}").format(self.p, other.p)
            )
        start = max(self.tail_start, other.tail_start)
        a, b = self.rebase(start), other.rebase(start)
        size = max(len(a.coefficients), len(b.coefficients))
        coefficients = [a.coefficient(k) + b.coefficient(k) for k in range(size)]
        return GeometricSeriesValue(
            self.p, coefficients, a.tail_constant + b.tail_constant, start
        )

    def scale(self, c: Constant):
        return GeometricSeriesValue(
            self.p,
            [c * a for a in self.coefficients],
            c * self.tail_constant,
            self.tail_start,
        )

    @property
    def polynomial(self) -> Scalar:
        """
        P as a polynomial in L
        """
        total = FIELD.zero
        for k, c in enumerate(self.coefficients):
            if c:
                total += monomial(c, 2 * k)
        return total

    def as_scalar(self) -> Scalar:
        """
        The represented rational function P(L**2) + c*L**(2K+2)/(p - L**2)
        """
        tail = monomial(self.tail_constant, 2 * self.tail_start + 2) / (
            FIELD(constant(self.p)) - L**2
        )
        return self.polynomial + tail

    def truncated(self, depth) -> Scalar:
        """
        Partial sum through t**depth as a polynomial in L
        """
        total = FIELD.zero
        for k in range(depth + 1):
            c = self.coefficient(k)
            if c:
                total += monomial(c, 2 * k)
        return total

    def evaluate(self, lambda2):
        """
        Value at t = lambda2: exact for ints and Fractions, complex for floats
        """
        if isinstance(lambda2, float):
            t = lambda2
            if t == self.p:
                raise exceptions.ScalarPoleError(lambda2, _("Series diverges at L^2=p"))
            value = sum(as_complex(c) * t**k for k, c in enumerate(self.coefficients))
            return value + as_complex(self.tail_constant) * t ** (
                self.tail_start + 1
            ) / (self.p - t)
        t = constant(lambda2)
        p = constant(self.p)
        if t == p:
            raise exceptions.ScalarPoleError(lambda2, _("Series diverges at L^2=p"))
        value = ZERO
        for k, c in enumerate(self.coefficients):
            value += c * t**k
        return value + QQ_I.quo(
            self.tail_constant * t ** (self.tail_start + 1), p - t
        )

    def prelimit(self, lambda2):
        """
        (1 - t/p) times the value; finite up to and including t = p
        """
        if isinstance(lambda2, float):
            t = lambda2
            value = sum(as_complex(c) * t**k for k, c in enumerate(self.coefficients))
            return (1 - t / self.p) * value + as_complex(self.tail_constant) * t ** (
                self.tail_start + 1
            ) / self.p
        t = constant(lambda2)
        value = ZERO
        for k, c in enumerate(self.coefficients):
            value += c * t**k
        weight = constant(1 - Fraction(lambda2) / self.p)
        return weight * value + self.tail_constant * t ** (
            self.tail_start + 1
        ) * constant(Fraction(1, self.p))


def renormalized_limit(g: GeometricSeriesValue, p: int) -> Constant:
    """
    lim_{L^2 -> p} (1 - L^2/p) * g = p**K * c

    The polynomial part is killed by the vanishing factor.
    """
    if g.p != p:
        raise exceptions.SeriesMismatchError(
            _("Series built for p={} read at p={}").format(g.p, p)
        )
    return g.tail_constant * constant(p**g.tail_start)
