"""Shared fixtures for the spiderforge test suite."""

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

from pathlib import Path
from typing import Callable, Sequence

import pytest

from spiderforge.registry import ProjectRegistry
from spiderforge.scaffold import GeneratedProject, ProjectGenerator, ProjectSpec
from spiderforge.workspace import Workspace


@pytest.fixture
def workspace(tmp_path: Path) -> Workspace:
    """A fresh workspace rooted in the test's temporary folder."""
    return Workspace.resolve(root=tmp_path / "ws", environ={})


@pytest.fixture
def registry(workspace: Workspace) -> ProjectRegistry:
    return workspace.registry()


@pytest.fixture
def generator(workspace: Workspace, registry: ProjectRegistry) -> ProjectGenerator:
    return ProjectGenerator(registry, user_templates_dir=workspace.templates_dir)


@pytest.fixture
def demo_spec(workspace: Workspace) -> ProjectSpec:
    return ProjectSpec(
        name="demo",
        target_dir=workspace.projects_dir,
        allowed_domains=["example.com"],
    )


@pytest.fixture
def demo_project(
    generator: ProjectGenerator, demo_spec: ProjectSpec
) -> GeneratedProject:
    """The ``demo`` project, generated and registered."""
    return generator.generate_project(demo_spec)


@pytest.fixture
def write_lines(tmp_path: Path) -> Callable[..., Path]:
    """Write lines, each ending in a newline, to a file under tmp_path."""

    def _write(lines: Sequence[str], name: str = "source.py") -> Path:
        path = tmp_path / name
        path.write_bytes("".join(line + "\n" for line in lines).encode("utf-8"))
        return path

    return _write
