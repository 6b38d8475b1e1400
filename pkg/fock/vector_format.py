"""
Line-oriented Fock vector format::

    # comment
    p=2 depth=3 guarantee=3
    e 1
    0 L
    01 L^2
"""
import logging
import re

from scalars.scalar_lib import parse_scalar, render_scalar
from words.line_format import read_word_lines
from words.word_lib import format_word

from . import exceptions
from .fock_lib import FockVector

LOGGER = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(
    r"^p=(?P<p>\d+)\s+depth=(?P<depth>\d+)\s+guarantee=(?P<guarantee>-?\d+)$"
)


def read_vector(lines) -> FockVector:
    """
    Parse an iterable of lines (an open file works) into a ``FockVector``.
    Repeated words add up.

    Raises
    ------
    VectorFormatError
    """
    parsed = read_word_lines(lines, HEADER_PATTERN, parse_scalar, exceptions.VectorFormatError)
    coeffs = {}
    for line_number, word, value in parsed.rows:
        coeffs[word] = coeffs.get(word, 0) + value
    header = parsed.header
    LOGGER.debug("Read %s words at p=%s", len(coeffs), header.group("p"))
    return FockVector(
        int(header.group("p")), int(header.group("depth")), coeffs, int(header.group("guarantee"))
    )


def format_vector(v: FockVector) -> str:
    lines = ["p={} depth={} guarantee={}".format(v.p, v.depth, v.guarantee)]
    for w in v.support():
        lines.append("{} {}".format(format_word(w), render_scalar(v.coefficient(w))))
    return "\n".join(lines) + "\n"


def write_vector(v: FockVector, stream):
    stream.write(format_vector(v))
