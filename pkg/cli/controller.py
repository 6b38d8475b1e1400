"""
Glue between the management commands and the libraries: state specs,
pairing output, Gram matrices and convergence tables.

State specs::

    X:01                    a single X_I
    1/2*X:0 + -i*X:11       a combination, terms joined by " + "
    delta:0110              delta state at a p-adic point
    gf:path/to/file         disk coefficients file (header p,D)
"""
import csv
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from django.utils.translation import gettext as _

from coherent.file_format import read_disk_coefficients
from coherent.pairing import (
    describe_series,
    pairing_series,
    renormalized_pairing,
    renormalized_pairing_numeric,
)
from coherent.states import (
    DiskCoefficients,
    XCombination,
    build_delta,
    build_x,
    build_x_combination,
    delta_disk_coefficients,
    fcs_to_fock,
    fock_to_fcs,
    x_combination_coefficients,
)
from fock.fock_lib import FockVector
from iso.maps import phi, phi_prime
from padic_fn.distributions import gf_pair, l2_inner
from padic_fn.file_format import read_test_function
from scalars.scalar_lib import (
    ONE,
    Constant,
    as_complex,
    parse_constant,
    render_constant,
    render_float,
)
from scalars.series import renormalized_limit
from words.word_lib import PAdicPoint, Word, format_word, parse_point, parse_word, words_up_to

from . import choices, exceptions

LOGGER = logging.getLogger(__name__)

TERM_SEPARATOR = re.compile(r"\s+\+\s+")
TERM_PATTERN = re.compile(r"^(?:(?P<coefficient>.+?)\s*\*\s*)?X:(?P<word>\S*)$")


@dataclass(frozen=True)
class State:
    spec: str
    kind: str
    coefficients: DiskCoefficients
    combination: Optional[XCombination] = None
    point: Optional[PAdicPoint] = None

    def require_combination(self) -> XCombination:
        if self.combination is None:
            raise exceptions.NotInXSpanError(
                self.spec,
                _("{!r} is not in the span of the X_I states").format(self.spec),
            )
        return self.combination

    def fock_vector(self) -> FockVector:
        depth = self.coefficients.depth
        if self.combination is not None:
            return build_x_combination(self.combination, depth)
        if self.point is not None:
            return build_delta(self.point, depth)
        return fcs_to_fock(self.coefficients)


def parse_combination(spec, p) -> XCombination:
    combination = XCombination(p)
    for term in TERM_SEPARATOR.split(spec.strip()):
        match = TERM_PATTERN.match(term.strip())
        if not match:
            raise exceptions.StateSpecError(
                spec, _("Invalid term {!r} in {!r}").format(term, spec)
            )
        literal = match.group("coefficient")
        c = parse_constant(literal) if literal else ONE
        word = parse_word(match.group("word"), p)
        combination = combination + XCombination(p, {word: c})
    return combination


def read_state_file(path, p) -> DiskCoefficients:
    with open(path) as stream:
        dc = read_disk_coefficients(stream)
    if dc.p != p:
        raise exceptions.StateSpecError(
            path, _("File {} has p={}, expected p={}").format(path, dc.p, p)
        )
    return dc


def parse_state(spec: str, p, depth) -> State:
    """
    Raises
    ------
    StateSpecError
    WordLiteralError, ScalarLiteralError
    InsufficientResolutionError
        delta point with fewer than ``depth`` digits
    DepthTooSmallError
        X_I longer than ``depth``
    """
    text = spec.strip()
    kind, sep, rest = text.partition(":")
    if not sep:
        raise exceptions.StateSpecError(
            spec, _("Invalid state {!r}, expected X:, delta: or gf:").format(spec)
        )
    if kind == choices.STATE_DELTA:
        point = parse_point(rest, p)
        return State(spec, kind, delta_disk_coefficients(point, depth), point=point)
    if kind == choices.STATE_GF:
        return State(spec, kind, read_state_file(rest, p))
    combination = parse_combination(text, p)
    return State(
        spec,
        choices.STATE_X,
        x_combination_coefficients(combination, depth),
        combination=combination,
    )


def parse_lambda2(literal) -> Fraction:
    """
    ``num/den`` or a decimal, strictly positive
    """
    try:
        value = Fraction(literal)
    except (ValueError, ZeroDivisionError) as e:
        raise exceptions.LambdaLiteralError(
            literal, _("Invalid lambda^2 {!r}: {}").format(literal, e)
        )
    if value <= 0:
        raise exceptions.LambdaLiteralError(
            literal, _("lambda^2 must be > 0, got {}").format(literal)
        )
    return value


def parse_eps_grid(values) -> List[float]:
    if isinstance(values, str):
        values = [v for v in values.split(",") if v.strip()]
    grid = []
    for value in values:
        try:
            eps = float(value)
        except ValueError:
            raise exceptions.EpsGridError(value, _("Invalid eps {!r}").format(value))
        if not 0 < eps < 1:
            raise exceptions.EpsGridError(
                value, _("eps must lie strictly between 0 and 1, got {}").format(value)
            )
        grid.append(eps)
    return grid


def pair_lines(lhs: State, rhs: State, lambda2: Optional[Fraction] = None) -> List[str]:
    """
    Exact renormalized pairing alone on the first line, then the series

    Raises
    ------
    NotInXSpanError
    ThresholdError
        lambda2 >= p
    """
    combination = rhs.require_combination()
    series = pairing_series(lhs.coefficients, combination)
    lines = [render_constant(renormalized_limit(series, series.p))]
    lines.extend(describe_series(series))
    if lambda2 is not None:
        numeric = renormalized_pairing_numeric(
            lhs.coefficients, combination, math.sqrt(lambda2)
        )
        lines.append("value t={} {}".format(lambda2, render_constant(series.evaluate(lambda2))))
        lines.append("prelimit t={} {}".format(lambda2, render_float(numeric)))
    return lines


def gram_matrices(p, depth, max_len) -> Dict[str, List[List[Constant]]]:
    """
    Gram matrices of X_I, |I| <= max_len: renormalized pairing of the Fock
    vectors, L2 product of phi(X_I), and their difference
    """
    if not 0 <= max_len <= depth:
        raise exceptions.GramSizeError(
            _("max_len must lie in [0, depth={}], got {}").format(depth, max_len)
        )
    basis = gram_basis(p, max_len)
    fock, l2 = [], []
    for i in basis:
        read_back = fock_to_fcs(build_x(i, depth)).conjugate()
        image = phi(XCombination.x(i))
        fock.append([renormalized_pairing(read_back, XCombination.x(j)) for j in basis])
        l2.append([l2_inner(image, phi(XCombination.x(j))) for j in basis])
    difference = [[a - b for a, b in zip(x, y)] for x, y in zip(fock, l2)]
    LOGGER.info("Gram matrices p=%s depth=%s size=%s", p, depth, len(basis))
    return {
        choices.GRAM_FOCK: fock,
        choices.GRAM_L2: l2,
        choices.GRAM_DIFFERENCE: difference,
    }


def gram_basis(p, max_len) -> List[Word]:
    return list(words_up_to(p, max_len))


def _write_table(stream, rows):
    widths = [max(len(row[k]) for row in rows) for k in range(len(rows[0]))]
    for row in rows:
        stream.write("  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip())
        stream.write("\n")


def write_gram(stream, basis, matrices, output_format):
    labels = [format_word(w) for w in basis]
    if output_format == choices.FORMAT_CSV:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["matrix", "I"] + labels)
        for name, matrix in matrices.items():
            for label, row in zip(labels, matrix):
                writer.writerow([name, label] + [render_constant(c) for c in row])
        return
    for name, matrix in matrices.items():
        stream.write("# {}\n".format(name))
        rows = [["I\\J"] + labels]
        rows.extend(
            [label] + [render_constant(c) for c in row] for label, row in zip(labels, matrix)
        )
        _write_table(stream, rows)


def convergence_rows(lhs: State, rhs: State, eps_grid):
    """
    (eps, lambda, prelimit, exact, abs_error) at lambda**2 = p (1 - eps)
    """
    combination = rhs.require_combination()
    p = lhs.coefficients.p
    exact = renormalized_pairing(lhs.coefficients, combination)
    exact_value = as_complex(exact)
    rows = []
    for eps in eps_grid:
        lambda0 = math.sqrt(p * (1 - eps))
        prelimit = renormalized_pairing_numeric(lhs.coefficients, combination, lambda0)
        rows.append((eps, lambda0, prelimit, exact_value, abs(prelimit - exact_value)))
    return rows


def write_convergence(stream, rows, output_format):
    rendered = [
        [repr(eps), render_float(lambda0), render_float(prelimit), render_float(exact), render_float(error)]
        for eps, lambda0, prelimit, exact, error in rows
    ]
    if output_format == choices.FORMAT_CSV:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(choices.CONVERGENCE_COLUMNS)
        writer.writerows(rendered)
        return
    _write_table(stream, [list(choices.CONVERGENCE_COLUMNS)] + rendered)


def gf_pair_value(state: State, path) -> Constant:
    """
    (phi'(Psi), f) for the test function stored at ``path``
    """
    with open(path) as stream:
        f = read_test_function(stream)
    return gf_pair(phi_prime(state.coefficients), f)
