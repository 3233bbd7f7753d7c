"""Atomic rewrite of text files."""

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


import os
import re
import shutil
import tempfile
from pathlib import Path

from spiderforge.exceptions import NotTextFile
from spiderforge.type_hints import Lines, PathLike

# a line with its terminator; the last line may have none
_LINE_RE = re.compile(r"[^\n]*\n|[^\n]+")

# mkstemp creates 0600 files
NEW_FILE_MODE = 0o644


def split_lines(text: str) -> Lines:
    """Split text into lines that keep their terminators.

    ``"".join(split_lines(text)) == text`` always holds; ``\\r\\n`` stays on
    its line.
    """
    return _LINE_RE.findall(text)


def line_terminator(line: str) -> str:
    """Return the terminator ending ``line`` ("\\r\\n", "\\n" or "")."""
    if line.endswith("\r\n"):
        return "\r\n"
    if line.endswith("\n"):
        return "\n"
    return ""


def read_text(path: PathLike) -> str:
    """Read a UTF-8 file without newline translation.

    Raises
    ------
    NotTextFile
        when the bytes do not decode as UTF-8
    OSError
    """
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            return f.read()
    except UnicodeDecodeError as e:
        raise NotTextFile(path, e.reason) from e


def atomic_write_text(path: PathLike, text: str) -> None:
    """Replace ``path`` with ``text`` so readers never see a torn file.

    The data is written to a temporary file in the same folder, flushed to
    disk, then renamed over the target. An existing file's permission bits
    are kept.

    Parameters
    ----------
    path : PathLike
        the file to replace or create
    text : str
        the full new content, written without newline translation

    Raises
    ------
    OSError
        when the folder is not writable or the rename fails
    """
    target = Path(path)
    fd, tmp_name = tempfile.mkstemp(
        prefix=f".{target.name}.", suffix=".tmp", dir=str(target.parent)
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as tmp:
            tmp.write(text)
            tmp.flush()
            os.fsync(tmp.fileno())
        if target.exists():
            shutil.copymode(str(target), tmp_name)
        else:
            os.chmod(tmp_name, NEW_FILE_MODE)
        os.replace(tmp_name, str(target))
    finally:
        try:
            os.remove(tmp_name)
        except OSError:
            pass
