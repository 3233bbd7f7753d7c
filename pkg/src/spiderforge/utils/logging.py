"""Logging utilities."""

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


import logging
import os
import sys
import tempfile
from logging.handlers import RotatingFileHandler
from typing import Optional

from spiderforge.constants import LOG_DIR_ENV

# the logger format used
LOG_FMT = "LVL: %(levelname)s | FILE PATH: %(pathname)s | FUN: %(funcName)s | msg: %(message)s | ln#:%(lineno)d"
# handlers hang off this logger, module loggers propagate to it
PACKAGE_LOGGER = "spiderforge"


def _log_folder() -> Optional[str]:
    """Pick a writable log folder, or None when there is none."""
    log_folder = os.environ.get(LOG_DIR_ENV)
    if not log_folder:
        log_folder = os.path.join(tempfile.gettempdir(), "spiderforge", "logs")
    try:
        os.makedirs(log_folder, exist_ok=True)
    except OSError:
        return None
    return log_folder


def _configure_package_logger() -> logging.Logger:
    """Attach the console and file handlers to the package logger, once."""
    lgr = logging.getLogger(PACKAGE_LOGGER)
    if getattr(lgr, "_spiderforge_configured", False):
        return lgr
    lgr.setLevel(logging.DEBUG)
    # Remove any existing handlers on this logger to avoid duplicates
    for _h in list(lgr.handlers):
        lgr.removeHandler(_h)
    log_formatter = logging.Formatter(LOG_FMT)

    # stdout carries the CLI report lines, so diagnostics go to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(log_formatter)
    console_handler.setLevel(logging.WARNING)
    lgr.addHandler(console_handler)

    file_handler = None
    log_folder = _log_folder()
    if log_folder:
        log_path = os.path.join(log_folder, "spiderforge.log")
        # Use RotatingFileHandler to prevent unbounded log growth
        try:
            file_handler = RotatingFileHandler(
                log_path, maxBytes=5 * 1024 * 1024, backupCount=5, encoding="utf-8"
            )
            file_handler.setFormatter(log_formatter)
            file_handler.setLevel(logging.DEBUG)
        except OSError:
            file_handler = None
    if file_handler:
        lgr.addHandler(file_handler)

    lgr.propagate = False
    lgr._spiderforge_configured = True  # type: ignore[attr-defined]
    return lgr


# --- Logging Setup ---
def setup_logger(logger_name: str) -> logging.Logger:
    """Set up logger for a python module.

    The console and rotating file handlers live on the package logger, so
    every module logger shares them.

    Parameters
    ----------
    logger_name : str
        The name for the logger, __name__ is idiomatic

    Returns
    -------
    logging.Logger
        the created logger
    """
    _configure_package_logger()
    lgr = logging.getLogger(name=logger_name)
    lgr.debug("logger %s initialized", logger_name)
    return lgr


def set_log_level(level: int) -> None:
    """Set the console threshold of the package logger.

    Parameters
    ----------
    level : int
        a ``logging`` level, e.g. ``logging.DEBUG``
    """
    lgr = _configure_package_logger()
    for handler in lgr.handlers:
        if not isinstance(handler, RotatingFileHandler):
            handler.setLevel(level)


#  LocalWords:  RotatingFileHandler stderr
