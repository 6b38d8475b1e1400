"""
Disk coefficient files, the ``gf:<path>`` states::

    # header p,D then one leaf per line
    2,2
    00 1
    10 -1/2
    01 i

Only the length-D leaves are stored; interior coefficients follow from the
cascade relation. Missing leaves are 0.
"""
import logging
import re

from scalars.scalar_lib import parse_constant, render_constant
from words.line_format import read_word_lines
from words.word_lib import format_word

from . import exceptions
from .states import DiskCoefficients, cascade_from_leaves

LOGGER = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r"^(?P<p>\d+)\s*,\s*(?P<depth>\d+)$")


def read_disk_coefficients(lines) -> DiskCoefficients:
    """
    Raises
    ------
    DiskCoefficientsFormatError
    """
    parsed = read_word_lines(
        lines,
        HEADER_PATTERN,
        parse_constant,
        exceptions.DiskCoefficientsFormatError,
        length_group="depth",
    )
    p, depth = int(parsed.header.group("p")), int(parsed.header.group("depth"))
    leaf = {word: value for line_number, word, value in parsed.rows}
    LOGGER.debug("Read %s leaves at p=%s depth=%s", len(leaf), p, depth)
    return cascade_from_leaves(p, depth, leaf)


def format_disk_coefficients(dc: DiskCoefficients) -> str:
    lines = ["{},{}".format(dc.p, dc.depth)]
    for w, value in dc.leaves().items():
        if value:
            lines.append("{} {}".format(format_word(w), render_constant(value)))
    return "\n".join(lines) + "\n"


def write_disk_coefficients(dc: DiskCoefficients, stream):
    stream.write(format_disk_coefficients(dc))
