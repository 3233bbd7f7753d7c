"""One-shot code insertion at positions located through the block tree."""

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
from pathlib import Path
from typing import List, Sequence, Tuple

from spiderforge.blocktree import (
    BlockPath,
    build_block_tree,
    code_inds_list,
    locate_block,
)
from spiderforge.exceptions import (
    BlockNotFound,
    IndexOutOfRange,
    InvalidInsertion,
    TargetNotFound,
)
from spiderforge.type_hints import PathLike
from spiderforge.utils import (
    atomic_write_text,
    leading_whitespace,
    line_terminator,
    read_text,
    setup_logger,
    split_lines,
)

logger = setup_logger(__name__)


class Placement(enum.Enum):
    FRONT = "front"
    BACK = "back"


@dataclass(frozen=True)
class InsertionRequest:
    """Insert ``code`` relative to the block named by ``path``.

    Attributes
    ----------
    file_path : Path
    path : BlockPath
    code : tuple of str
        lines without terminators; the resolved indentation is prefixed to
        each, so only indentation relative to the first line belongs here
    placement : Placement
        BACK inserts after the resolved line, FRONT before it
    """

    file_path: Path
    path: BlockPath
    code: Tuple[str, ...]
    placement: Placement = Placement.BACK

    def __post_init__(self) -> None:
        if not self.code:
            raise InvalidInsertion("nothing to insert")
        for line in self.code:
            if "\n" in line or "\r" in line:
                raise InvalidInsertion(f"code line contains a line break: {line!r}")


def _file_terminator(lines: Sequence[str]) -> str:
    for line in lines:
        ending = line_terminator(line)
        if ending:
            return ending
    return "\n"


def insert_at_index(file_path: PathLike, ind: int, code_lines: Sequence[str]) -> str:
    """Write ``code_lines`` right after line ``ind`` of a file.

    ``ind = 0`` prepends at the top. Every other byte is kept; the file is
    replaced atomically.

    Parameters
    ----------
    file_path : PathLike
    ind : int
        1-based line after which to insert, 0 to prepend
    code_lines : Sequence[str]
        lines to insert, without terminators

    Returns
    -------
    str
        the new file content

    Raises
    ------
    IndexOutOfRange
        when ``ind`` is outside ``[0, line count]``
    OSError
    """
    lines = split_lines(read_text(file_path))
    if ind < 0 or ind > len(lines):
        raise IndexOutOfRange(
            f"index {ind} outside of {file_path} ({len(lines)} lines)"
        )
    ending = _file_terminator(lines)
    if ind == len(lines) and lines and not line_terminator(lines[-1]):
        # the old last line needs a terminator once something follows it
        lines[-1] += ending
    new_lines = [line + ending for line in code_lines]
    lines[ind:ind] = new_lines
    content = "".join(lines)
    atomic_write_text(file_path, content)
    logger.info(
        "inserted %d line(s) after line %d of %s", len(new_lines), ind, file_path
    )
    return content


def resolve_insertion(lines: Sequence[str], path: BlockPath) -> Tuple[int, str]:
    """Find the line to insert around and the indentation to copy.

    The block path is resolved on the block tree first, the answer being the
    block's last body line. When that fails and the path has one signature,
    the first line equal to that signature is used instead.

    Returns
    -------
    Tuple[int, str]
        1-based line index and that line's leading whitespace

    Raises
    ------
    TargetNotFound
    """
    stripped = [line.rstrip("\r\n") for line in lines]
    try:
        node = locate_block(build_block_tree(stripped), path)
    except BlockNotFound as e:
        if len(path) != 1:
            raise TargetNotFound(str(e)) from e
        matches = code_inds_list(stripped, path.signatures[0])
        if not matches:
            raise TargetNotFound(
                f"no block or line matches {path.signatures[0]!r}"
            ) from e
        ind = matches[0]
        logger.warning(
            "no block header %r, falling back to line %d", path.signatures[0], ind
        )
        return ind, leading_whitespace(stripped[ind - 1])
    logger.debug("block %r ends at line %d", node.header, node.end)
    return node.end, leading_whitespace(stripped[node.end - 1])


def insert_in_block(request: InsertionRequest) -> str:
    """Insert code into the block named by a block path.

    The inserted lines take the exact leading whitespace of the resolved
    line. BACK places them after that line, FRONT before it.

    Returns
    -------
    str
        the new file content

    Raises
    ------
    TargetNotFound
        when neither the block path nor the single-line fallback resolves
    MixedIndentation
    RaggedIndent
    OSError
    """
    lines = split_lines(read_text(request.file_path))
    ind, indent = resolve_insertion(lines, request.path)
    code: List[str] = [indent + line if line else line for line in request.code]
    if request.placement is Placement.BACK:
        return insert_at_index(request.file_path, ind, code)
    return insert_at_index(request.file_path, ind - 1, code)


#  LocalWords:  ind
