"""The change-once step: items, pipelines and spider rewritten from a template set."""

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


from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from spiderforge.codein.template import TemplateSet
from spiderforge.constants import ITEMS_FILE, PIPELINES_FILE, SPIDERS_DIR
from spiderforge.exceptions import AlreadyApplied, LayoutMismatch
from spiderforge.registry import ProjectRegistry
from spiderforge.type_hints import Bindings, PathLike
from spiderforge.utils import atomic_write_text, setup_logger

logger = setup_logger(__name__)


@dataclass
class ChangeOnceReport:
    template_set: str
    written: List[Path] = field(default_factory=list)


def change_once_targets(
    project_root: Path, bindings: Bindings
) -> List[Tuple[str, Path]]:
    """(template name, file path) pairs the change-once step rewrites."""
    package = project_root / bindings["spname"]
    return [
        (ITEMS_FILE, package / ITEMS_FILE),
        (PIPELINES_FILE, package / PIPELINES_FILE),
        ("spider.py", package / SPIDERS_DIR / f"{bindings['spider_name']}.py"),
    ]


def apply_change_once_set(
    project_root: PathLike,
    template_set: TemplateSet,
    bindings: Bindings,
    registry: Optional[ProjectRegistry] = None,
) -> ChangeOnceReport:
    """Overwrite the change-once files of a project from a template set.

    Only items, pipelines and the spider source are touched: middlewares
    keep what generation wrote and settings belong to the config editor.

    Parameters
    ----------
    project_root : PathLike
        the level-1 project folder (the one holding ``scrapy.cfg``)
    template_set : TemplateSet
    bindings : Bindings
        placeholder values, ``spname`` and ``spider_name`` included
    registry : ProjectRegistry, optional
        when the project is registered, its change-once marker is checked
        and then set

    Returns
    -------
    ChangeOnceReport

    Raises
    ------
    AlreadyApplied
        when the registry marks this project as initialized
    LayoutMismatch
        when a file to rewrite is missing
    MissingBinding
    UnknownPlaceholder
    """
    root = Path(project_root)
    entry = registry.find_by_root(root) if registry is not None else None
    if entry is not None and entry.change_once_applied:
        raise AlreadyApplied(f"change-once templates already applied to {root}")

    targets = change_once_targets(root, bindings)
    missing = [path for _, path in targets if not path.is_file()]
    if missing:
        raise LayoutMismatch(missing)

    # render everything before writing anything
    rendered = [(path, template_set.render(name, bindings)) for name, path in targets]
    report = ChangeOnceReport(template_set=template_set.id)
    for path, text in rendered:
        atomic_write_text(path, text)
        report.written.append(path)

    if entry is not None and registry is not None:
        registry.mark_change_once(entry.name)
    logger.info("applied template set %s to %s", template_set.id, root)
    return report
