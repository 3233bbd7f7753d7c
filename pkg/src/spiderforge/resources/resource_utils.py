# spiderforge/resources/resource_utils.py
"""Utility functions for accessing the template sets shipped with spiderforge."""
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

from typing import List

from importlib_resources import files
from importlib_resources.abc import Traversable

RESOURCE_PACKAGE = "spiderforge.resources"
TEMPLATES_FOLDER = "templates"


def get_templates_root() -> Traversable:
    """
    Get the folder holding the packaged template sets.

    Returns
    -------
    Traversable
        ``spiderforge/resources/templates``, possibly inside a zip
    """
    return files(RESOURCE_PACKAGE).joinpath(TEMPLATES_FOLDER)


def get_template_set_dir(set_id: str) -> Traversable:
    """
    Get the folder of one packaged template set.

    Parameters
    ----------
    set_id : str
        Template set id (e.g. 'default')

    Returns
    -------
    Traversable
        Folder with the set's ``*.tmpl`` files

    Raises
    ------
    FileNotFoundError
        If no packaged set has this id
    """
    folder = get_templates_root().joinpath(set_id)
    if not folder.is_dir():
        raise FileNotFoundError(
            f"Template set '{set_id}' not found in package '{RESOURCE_PACKAGE}'"
        )
    return folder


def list_packaged_template_sets() -> List[str]:
    """
    List the ids of the packaged template sets.

    Returns
    -------
    List[str]
        Sorted set ids
    """
    root = get_templates_root()
    return sorted(entry.name for entry in root.iterdir() if entry.is_dir())


#  LocalWords:  importlib Traversable
