"""Repeatable edits of key/option settings files."""

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


import enum
from dataclasses import dataclass
from typing import List, Optional

from spiderforge.confi.config_line import (
    KEY_RE,
    ConfigLine,
    format_item,
    option_extent,
    parse_config_line,
)
from spiderforge.confi.wait import wait_for_file
from spiderforge.constants import (
    COMMENT_MARKER,
    DEFAULT_EQUAL,
    DEFAULT_TERMINATOR,
    WAIT_INTERVAL,
    WAIT_TIMEOUT,
)
from spiderforge.exceptions import InvalidOption, KeyNotFound
from spiderforge.type_hints import Lines, PathLike
from spiderforge.utils import (
    atomic_write_text,
    line_terminator,
    read_text,
    setup_logger,
    split_lines,
)

logger = setup_logger(__name__)


class EditAction(enum.Enum):
    SET = "set"
    TOGGLE = "toggle"
    APPEND = "append"


@dataclass(frozen=True)
class ConfigEdit:
    """One edit to apply to a settings file.

    ``option`` is required for SET and APPEND and ignored by TOGGLE.
    """

    key: str
    action: EditAction
    option: Optional[str] = None
    equal: str = DEFAULT_EQUAL
    terminator: str = DEFAULT_TERMINATOR


@dataclass
class ConfigEditReport:
    """What an edit did.

    Attributes
    ----------
    key : str
    action : EditAction
    found : bool
        at least one line carried the key
    appended : bool
        the item was added at the end of the file
    changed : bool
        the file bytes changed
    commented : List[bool]
        for TOGGLE, the new comment state of every toggled line
    """

    key: str
    action: EditAction
    found: bool = False
    appended: bool = False
    changed: bool = False
    commented: Optional[List[bool]] = None


@dataclass(frozen=True)
class ConfigValue:
    option: str
    commented: bool
    # the option continues on the following lines
    continues: bool = False


def _check_key(key: str) -> None:
    if not KEY_RE.match(key):
        raise InvalidOption(f"{key!r} is not a settings key")


def _option_lines(option: str) -> List[str]:
    """Split option text into the lines to write; the first one trimmed."""
    lines = [line.rstrip("\r \t") for line in option.split("\n")]
    lines[0] = lines[0].strip()
    while len(lines) > 1 and not lines[-1].strip():
        lines.pop()
    if not lines[0]:
        raise InvalidOption("option text is empty")
    if lines[0] == COMMENT_MARKER and len(lines) == 1:
        raise InvalidOption(f"{COMMENT_MARKER!r} is reserved for toggling comments")
    return lines


def _render(
    head: str, key: str, equal: str, option_lines: List[str], terminator: str
) -> Lines:
    first = format_item(head, key, equal, option_lines[0]) + terminator
    return [first] + [head[:1] + line + terminator for line in option_lines[1:]]


def _commented_copy(parsed: ConfigLine, block: Lines, equal: str, end: str) -> Lines:
    first = format_item(COMMENT_MARKER, parsed.key, equal, parsed.option) + end
    return [first] + [COMMENT_MARKER + line for line in block[1:]]


def _uncommented_copy(parsed: ConfigLine, block: Lines, equal: str, end: str) -> Lines:
    first = format_item("", parsed.key, equal, parsed.option) + end
    return [first] + [line[len(COMMENT_MARKER) :] for line in block[1:]]


def _read(file_path: PathLike, interval: float, timeout: float) -> Lines:
    wait_for_file(file_path, interval=interval, timeout=timeout)
    return split_lines(read_text(file_path))


def _write_if_changed(file_path: PathLike, before: Lines, after: Lines) -> bool:
    old, new = "".join(before), "".join(after)
    if old == new:
        return False
    atomic_write_text(file_path, new)
    return True


def set_option(
    file_path: PathLike,
    key: str,
    option: str,
    equal: str = DEFAULT_EQUAL,
    terminator: str = DEFAULT_TERMINATOR,
    interval: float = WAIT_INTERVAL,
    timeout: float = WAIT_TIMEOUT,
) -> ConfigEditReport:
    """Make ``key = option`` the one active item for ``key``.

    The first line carrying the key, with the rest of its option when that
    spans several lines, is replaced by ``key = option``. Later active lines
    with the same key are commented out; later commented ones stay as they
    are. Other lines are copied byte for byte. A missing key is appended
    after a blank line.

    Parameters
    ----------
    file_path : PathLike
    key : str
    option : str
        may span several lines; must not be ``#``
    equal : str
    terminator : str
    interval, timeout : float
        polling of the file's existence, see ``wait_for_file``

    Returns
    -------
    ConfigEditReport

    Raises
    ------
    InvalidOption
    FileWaitTimeout
    OSError
    """
    _check_key(key)
    option_lines = _option_lines(option)
    lines = _read(file_path, interval, timeout)
    report = ConfigEditReport(key=key, action=EditAction.SET)

    out: Lines = []
    index = 0
    while index < len(lines):
        parsed = parse_config_line(lines[index], equal)
        if parsed is None or parsed.key != key:
            out.append(lines[index])
            index += 1
            continue
        end = option_extent(lines, index, parsed)
        block = lines[index:end]
        if not report.found:
            out.extend(_render("", key, equal, option_lines, terminator))
            report.found = True
        elif not parsed.commented:
            logger.warning(
                "commenting out duplicate %s at line %d of %s",
                key,
                index + 1,
                file_path,
            )
            out.extend(_commented_copy(parsed, block, equal, parsed.terminator))
        else:
            out.extend(block)
        index = end

    if not report.found:
        if out and not line_terminator(out[-1]):
            out[-1] += terminator
        if out:
            out.append(terminator)
        out.extend(_render("", key, equal, option_lines, terminator))
        report.appended = True

    report.changed = _write_if_changed(file_path, lines, out)
    logger.info(
        "set %s in %s (%s)",
        key,
        file_path,
        "appended" if report.appended else "replaced",
    )
    return report


def toggle_comment(
    file_path: PathLike,
    key: str,
    equal: str = DEFAULT_EQUAL,
    terminator: str = DEFAULT_TERMINATOR,
    interval: float = WAIT_INTERVAL,
    timeout: float = WAIT_TIMEOUT,
) -> ConfigEditReport:
    """Flip the comment state of every item line carrying ``key``.

    The existing option is kept; continuation lines of a multi-line option
    are flipped together with its first line. A missing key leaves the file
    alone and comes back as ``found=False``.

    Raises
    ------
    InvalidOption
    FileWaitTimeout
    OSError
    """
    _check_key(key)
    lines = _read(file_path, interval, timeout)
    report = ConfigEditReport(key=key, action=EditAction.TOGGLE, commented=[])

    out: Lines = []
    index = 0
    while index < len(lines):
        parsed = parse_config_line(lines[index], equal)
        if parsed is None or parsed.key != key:
            out.append(lines[index])
            index += 1
            continue
        end = option_extent(lines, index, parsed)
        block = lines[index:end]
        if parsed.commented:
            out.extend(_uncommented_copy(parsed, block, equal, terminator))
        else:
            out.extend(_commented_copy(parsed, block, equal, terminator))
        report.commented.append(not parsed.commented)
        report.found = True
        index = end

    if not report.found:
        logger.warning("toggle: key %s not found in %s", key, file_path)
        return report
    report.changed = _write_if_changed(file_path, lines, out)
    logger.info("toggled %s in %s", key, file_path)
    return report


def append_option(
    file_path: PathLike,
    key: str,
    option: str,
    equal: str = DEFAULT_EQUAL,
    terminator: str = DEFAULT_TERMINATOR,
    interval: float = WAIT_INTERVAL,
    timeout: float = WAIT_TIMEOUT,
) -> ConfigEditReport:
    """Add ``key = option`` only when no line carries the key yet."""
    _check_key(key)
    lines = _read(file_path, interval, timeout)
    if any(
        (parsed := parse_config_line(line, equal)) is not None and parsed.key == key
        for line in lines
    ):
        return ConfigEditReport(key=key, action=EditAction.APPEND, found=True)
    report = set_option(file_path, key, option, equal, terminator, interval, timeout)
    report.action = EditAction.APPEND
    return report


def get_option(
    file_path: PathLike, key: str, equal: str = DEFAULT_EQUAL
) -> ConfigValue:
    """Option and comment state of the first line carrying ``key``.

    For a multi-line option only the first line's text is returned, with
    ``continues`` set.

    Raises
    ------
    KeyNotFound
    OSError
    """
    for line in split_lines(read_text(file_path)):
        parsed = parse_config_line(line, equal)
        if parsed is not None and parsed.key == key:
            return ConfigValue(
                option=parsed.option,
                commented=parsed.commented,
                continues=parsed.continues,
            )
    raise KeyNotFound(key)


def apply_edit(
    file_path: PathLike,
    edit: ConfigEdit,
    interval: float = WAIT_INTERVAL,
    timeout: float = WAIT_TIMEOUT,
) -> ConfigEditReport:
    """Dispatch a ``ConfigEdit`` to the matching operation."""
    if edit.action is EditAction.TOGGLE:
        return toggle_comment(
            file_path, edit.key, edit.equal, edit.terminator, interval, timeout
        )
    if edit.option is None:
        raise InvalidOption(f"{edit.action.value} needs an option for {edit.key}")
    if edit.action is EditAction.APPEND:
        operation = append_option
    else:
        operation = set_option
    return operation(
        file_path, edit.key, edit.option, edit.equal, edit.terminator, interval, timeout
    )


#  LocalWords:  toggled
