"""Key/option extraction from settings lines.

Four line shapes show up in a Scrapy ``settings.py``::

    ROBOTSTXT_OBEY = True              active item
    #DOWNLOAD_DELAY = 3                item commented out, '#' glued to the key
    #DEFAULT_REQUEST_HEADERS = {       option spanning several lines
    # Obey robots.txt rules            prose comment, not an item

The key is the text between the optional ``#`` and the first equal symbol,
trimmed; the option is the trimmed text after that equal symbol.
"""

# spiderforge
# Copyright (C) 2025  spiderforge developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.


import re
from dataclasses import dataclass
from typing import Optional, Sequence

from spiderforge.constants import (
    CLOSE_BRACKETS,
    COMMENT_MARKER,
    DEFAULT_EQUAL,
    OPEN_BRACKETS,
)
from spiderforge.utils import line_terminator

KEY_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")


@dataclass(frozen=True)
class ConfigLine:
    """A parsed settings line.

    Attributes
    ----------
    head : str
        text before the key: empty, or ``#`` followed by optional spaces
    key : str
    option : str
        trimmed text after the first equal symbol
    raw : str
        the line as read, terminator included
    terminator : str
    """

    head: str
    key: str
    option: str
    raw: str
    terminator: str

    @property
    def commented(self) -> bool:
        return COMMENT_MARKER in self.head

    @property
    def continues(self) -> bool:
        """True when the option opens brackets it does not close."""
        return bracket_delta(self.option) > 0


def bracket_delta(text: str) -> int:
    """Opened minus closed brackets, outside quotes and before a comment."""
    depth = 0
    quote: Optional[str] = None
    escaped = False
    for ch in text:
        if quote:
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == quote:
                quote = None
            continue
        if ch in "'\"":
            quote = ch
        elif ch == COMMENT_MARKER:
            break
        elif ch in OPEN_BRACKETS:
            depth += 1
        elif ch in CLOSE_BRACKETS:
            depth -= 1
    return depth


def parse_config_line(line: str, equal: str = DEFAULT_EQUAL) -> Optional[ConfigLine]:
    """Split a settings line into head, key and option.

    Parameters
    ----------
    line : str
        one line, terminator allowed
    equal : str
        the symbol between key and option

    Returns
    -------
    ConfigLine or None
        None for lines that are not items: no equal symbol, indented lines,
        prose comments, or a key that is not a plain name
    """
    terminator = line_terminator(line)
    body = line[: len(line) - len(terminator)]
    if not equal or equal not in body:
        return None
    # indented lines belong to a multi-line option or a code block
    if body[:1] in (" ", "\t"):
        return None

    rest = body
    if body.startswith(COMMENT_MARKER):
        rest = body[len(COMMENT_MARKER) :].lstrip(" \t")
    head = body[: len(body) - len(rest)]

    key_part, _, option_part = rest.partition(equal)
    key = key_part.strip()
    if not KEY_RE.match(key):
        return None
    # ``A == B`` is a comparison, not an assignment
    if option_part.startswith(equal):
        return None
    return ConfigLine(
        head=head,
        key=key,
        option=option_part.strip(),
        raw=line,
        terminator=terminator,
    )


def option_extent(lines: Sequence[str], index: int, first: ConfigLine) -> int:
    """End (exclusive) of the option starting at ``lines[index]``.

    A multi-line option runs until its brackets balance. When the first line
    is commented, each continuation line must start with ``#`` as well.
    """
    depth = bracket_delta(first.option)
    end = index + 1
    while depth > 0 and end < len(lines):
        content = lines[end].rstrip("\r\n")
        if first.commented:
            if not content.startswith(COMMENT_MARKER):
                break
            content = content[len(COMMENT_MARKER) :]
        depth += bracket_delta(content)
        end += 1
    return end


def format_item(head: str, key: str, equal: str, option: str) -> str:
    """``head + key + " = " + option``, without a trailing space for empty options."""
    if option:
        return f"{head}{key} {equal} {option}"
    return f"{head}{key} {equal}"


#  LocalWords:  ROBOTSTXT
