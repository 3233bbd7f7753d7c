"""Where spiderforge keeps its registry, projects and user templates."""

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
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional

from spiderforge.constants import (
    PROJECTS_DIR,
    REGISTRY_FILE,
    USER_TEMPLATES_DIR,
    WORKSPACE_ENV,
)
from spiderforge.registry import ProjectRegistry
from spiderforge.type_hints import PathLike


@dataclass(frozen=True)
class Workspace:
    """Resolved workspace paths.

    Attributes
    ----------
    root : Path
    registry_path : Path
        ``<root>/spiders.json`` unless overridden
    projects_dir : Path
        default parent folder of generated projects, ``<root>/spiders``
    templates_dir : Path
        user template sets, ``<root>/templates/<set-id>/``
    """

    root: Path
    registry_path: Path
    projects_dir: Path
    templates_dir: Path

    @classmethod
    def resolve(
        cls,
        root: Optional[PathLike] = None,
        registry_path: Optional[PathLike] = None,
        projects_dir: Optional[PathLike] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> "Workspace":
        """Build a workspace: explicit argument, then environment, then cwd."""
        env = os.environ if environ is None else environ
        base = Path(root or env.get(WORKSPACE_ENV) or os.getcwd()).resolve()
        return cls(
            root=base,
            registry_path=Path(registry_path or base / REGISTRY_FILE).resolve(),
            projects_dir=Path(projects_dir or base / PROJECTS_DIR).resolve(),
            templates_dir=base / USER_TEMPLATES_DIR,
        )

    def registry(self) -> ProjectRegistry:
        return ProjectRegistry(self.registry_path)
