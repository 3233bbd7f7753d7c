"""Time throwaway generations, single and multi-project, with and without settings."""

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


import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import List

from spiderforge.constants import (
    BENCH_CONFIG_OVERRIDES,
    BENCH_DOMAIN,
    PROJECTS_DIR,
    REGISTRY_FILE,
)
from spiderforge.registry import ProjectRegistry
from spiderforge.scaffold.generator import ProjectGenerator
from spiderforge.scaffold.project_spec import ProjectSpec
from spiderforge.utils import setup_logger

logger = setup_logger(__name__)


@dataclass
class BenchRow:
    scenario: str
    count: int
    with_config: bool
    seconds: float
    failed: int

    @property
    def ok(self) -> bool:
        return self.failed == 0


def scenario_name(count: int, with_config: bool) -> str:
    """Row label, e.g. ``multiple projects + config``."""
    label = "single project" if count == 1 else "multiple projects"
    return f"{label} + config" if with_config else label


def bench_specs(count: int, with_config: bool, target_dir: Path) -> List[ProjectSpec]:
    overrides = list(BENCH_CONFIG_OVERRIDES) if with_config else []
    return [
        ProjectSpec(
            name=f"bench_{i}",
            target_dir=target_dir,
            allowed_domains=[BENCH_DOMAIN],
            config_overrides=overrides,
        )
        for i in range(count)
    ]


def run_bench(count: int, with_config: bool = False, workers: int = 1) -> BenchRow:
    """Generate ``count`` projects in a temporary workspace and time it.

    The workspace, registry included, is deleted afterwards.
    """
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    with tempfile.TemporaryDirectory(prefix="spiderforge-bench-") as tmp:
        workspace = Path(tmp)
        generator = ProjectGenerator(ProjectRegistry(workspace / REGISTRY_FILE))
        batch = generator.generate_batch(
            bench_specs(count, with_config, workspace / PROJECTS_DIR), workers=workers
        )
    row = BenchRow(
        scenario=scenario_name(count, with_config),
        count=count,
        with_config=with_config,
        seconds=batch.elapsed,
        failed=sum(not r.ok for r in batch.results),
    )
    logger.info("bench %s: %.3f s", row.scenario, row.seconds)
    return row
