"""Utility functions used in spiderforge."""

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
from datetime import datetime, timezone

_IDENTIFIER_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def utc_now() -> datetime:
    """Current time, timezone-aware UTC, whole seconds."""
    return datetime.now(timezone.utc).replace(microsecond=0)


def is_identifier(name: str) -> bool:
    """Letters, digits and underscore, not starting with a digit."""
    return bool(_IDENTIFIER_RE.match(name))


def class_name(name: str, suffix: str = "") -> str:
    """Turn ``snake_name`` into ``SnakeName`` + suffix.

    Examples
    --------
    >>> class_name("demo", "Spider")
    'DemoSpider'
    >>> class_name("news_site")
    'NewsSite'
    """
    parts = [p for p in name.split("_") if p]
    camel = "".join(p[:1].upper() + p[1:] for p in parts) or "Project"
    return camel + suffix


def leading_whitespace(line: str) -> str:
    """The run of spaces and tabs a line starts with."""
    stripped = line.lstrip(" \t")
    return line[: len(line) - len(stripped)]
