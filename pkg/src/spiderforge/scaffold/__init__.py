"""Project generation: layout, batches, verification and benchmarks."""

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

from spiderforge.scaffold.bench import BenchRow, run_bench
from spiderforge.scaffold.external import ScrapyCommand, generate_external_skeleton
from spiderforge.scaffold.generator import (
    BatchResult,
    LayoutReport,
    ProjectGenerator,
    ProjectResult,
    verify_layout,
)
from spiderforge.scaffold.project_spec import (
    GeneratedProject,
    ProjectSpec,
    expected_layout,
)
