"""
Line-oriented files keyed by words: one header line, then one
``<word> <value>`` row per line. ``#`` starts a comment and blank lines are
skipped. Rows are split with ``csv`` on single spaces after runs of
whitespace are collapsed.
"""
import csv
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, List, Match, Optional, Pattern, Tuple, Type

from django.utils.translation import gettext as _

from .word_lib import Word, parse_word

LOGGER = logging.getLogger(__name__)


@dataclass
class WordLines:
    header: Match
    rows: List[Tuple[int, Word, Any]] = field(default_factory=list)


def _content_lines(lines):
    for line_number, line in enumerate(lines, start=1):
        line = " ".join(line.split("#", 1)[0].split())
        if line:
            yield line_number, line


def read_word_lines(
    lines,
    header_pattern: Pattern,
    parse_value: Callable[[str], Any],
    error: Type[ValueError],
    length_group: Optional[str] = None,
) -> WordLines:
    """
    Parse the header with ``header_pattern`` (which must name a ``p`` group)
    and every row into (line number, word, parsed value).

    Arguments
    ---------
        length_group: header group holding the length every word must have

    Raises
    ------
    error(line_number, message)
        on a bad header, a missing header or a bad row; line 0 means the
        header is missing
    """
    content = list(_content_lines(lines))
    reader = csv.reader((line for line_number, line in content), delimiter=" ")
    parsed = None
    for (line_number, line), fields in zip(content, reader):
        if parsed is None:
            header = header_pattern.match(line)
            if not header:
                raise error(line_number, _("Invalid header {!r}").format(line))
            parsed = WordLines(header)
            p = int(header.group("p"))
            length = int(header.group(length_group)) if length_group else None
            continue
        try:
            if len(fields) < 2:
                raise ValueError(_("expected <word> <value>"))
            word = parse_word(fields[0], p)
            if length is not None and len(word) != length:
                raise ValueError(_("word must have length {}").format(length))
            parsed.rows.append((line_number, word, parse_value(" ".join(fields[1:]))))
        except (ValueError, ArithmeticError) as e:
            raise error(
                line_number, _("Invalid line {}: {!r} ({})").format(line_number, line, e)
            )
    if parsed is None:
        raise error(0, _("Missing header"))
    LOGGER.debug("Read %s rows", len(parsed.rows))
    return parsed
