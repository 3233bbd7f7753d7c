"""Waiting for a file to appear."""

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


import time
from pathlib import Path

from spiderforge.constants import WAIT_INTERVAL, WAIT_TIMEOUT
from spiderforge.exceptions import FileWaitTimeout
from spiderforge.type_hints import PathLike
from spiderforge.utils import setup_logger

logger = setup_logger(__name__)


def wait_for_file(
    path: PathLike, interval: float = WAIT_INTERVAL, timeout: float = WAIT_TIMEOUT
) -> Path:
    """Poll until ``path`` exists.

    Parameters
    ----------
    path : PathLike
    interval : float
        seconds between checks, > 0
    timeout : float
        seconds after which to give up

    Returns
    -------
    Path
        the path, once it exists

    Raises
    ------
    ValueError
        when ``interval`` is not positive
    FileWaitTimeout
        when the file is still missing after ``timeout`` seconds
    """
    if interval <= 0:
        raise ValueError(f"interval must be > 0, got {interval}")
    target = Path(path)
    deadline = time.monotonic() + timeout
    while not target.exists():
        remaining = deadline - time.monotonic()
        if remaining <= 0:
            raise FileWaitTimeout(f"{target} did not appear within {timeout}s")
        logger.debug("waiting for %s", target)
        time.sleep(min(interval, remaining))
    return target
