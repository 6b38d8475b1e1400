"""
Test function files::

    # header p,level then one disk value per line
    2,1
    0 2
    1 -1
"""
import logging
import re

from scalars.scalar_lib import parse_constant, render_constant
from words.line_format import read_word_lines
from words.word_lib import format_word

from . import exceptions
from .distributions import TestFunction

LOGGER = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r"^(?P<p>\d+)\s*,\s*(?P<level>\d+)$")


def read_test_function(lines) -> TestFunction:
    """
    Raises
    ------
    TestFunctionFormatError
    """
    parsed = read_word_lines(
        lines,
        HEADER_PATTERN,
        parse_constant,
        exceptions.TestFunctionFormatError,
        length_group="level",
    )
    values = {word: value for line_number, word, value in parsed.rows}
    LOGGER.debug("Read %s values at level %s", len(values), parsed.header.group("level"))
    return TestFunction(int(parsed.header.group("p")), int(parsed.header.group("level")), values)


def format_test_function(f: TestFunction) -> str:
    lines = ["{},{}".format(f.p, f.level)]
    for w, value in f.values_by_disk():
        if value:
            lines.append("{} {}".format(format_word(w), render_constant(value)))
    return "\n".join(lines) + "\n"


def write_test_function(f: TestFunction, stream):
    stream.write(format_test_function(f))
