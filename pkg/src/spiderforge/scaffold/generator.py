"""Generate Scrapy project trees, one at a time or from a manifest."""

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


import shutil
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

from spiderforge.codein import (
    TemplateSet,
    apply_change_once_set,
    load_skeleton,
    load_template_set,
)
from spiderforge.confi import set_option
from spiderforge.constants import (
    DEFAULT_TEMPLATE_SET,
    INIT_FILE,
    ITEMS_FILE,
    MIDDLEWARES_FILE,
    PIPELINES_FILE,
    SCRAPY_CFG,
    SETTINGS_FILE,
    SPIDERS_DIR,
)
from spiderforge.exceptions import (
    AlreadyExists,
    DuplicateName,
    SpiderForgeException,
    UnknownProject,
)
from spiderforge.registry import ConfigHistoryItem, ProjectRegistry, RegistryEntry
from spiderforge.scaffold.external import ScrapyCommand, generate_external_skeleton
from spiderforge.scaffold.project_spec import (
    GeneratedProject,
    ProjectSpec,
    expected_layout,
    project_paths,
)
from spiderforge.type_hints import Bindings, PathLike
from spiderforge.utils import atomic_write_text, setup_logger, utc_now

logger = setup_logger(__name__)

SPIDERS_INIT = (
    "# This package will contain the spiders of your Scrapy project\n"
    "#\n"
    "# Please refer to the documentation for information on how to create and manage\n"
    "# your spiders.\n"
)

IGNORED_NAMES = ("__pycache__", ".scrapy")


@dataclass
class ProjectResult:
    """Outcome of one manifest entry."""

    spec: ProjectSpec
    project: Optional[GeneratedProject] = None
    error: Optional[Exception] = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass
class BatchResult:
    results: List[ProjectResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


@dataclass
class LayoutReport:
    """What ``verify_layout`` found under a project root.

    Attributes
    ----------
    root : Path
    missing : List[str]
        expected entries that are absent, relative to root
    extra : List[str]
        files present that no generated project has
    change_once_applied : bool, optional
        the registry marker, None when the project is not registered
    """

    root: Path
    missing: List[str] = field(default_factory=list)
    extra: List[str] = field(default_factory=list)
    change_once_applied: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return not self.missing


def verify_layout(
    root: PathLike,
    registry: Optional[ProjectRegistry] = None,
    spider_name: Optional[str] = None,
) -> LayoutReport:
    """Check a project folder against the generated layout.

    The project name is the folder name. The spider file name comes from
    ``spider_name``, else the registry entry, else the project name.
    """
    root = Path(root).resolve()
    entry = registry.find_by_root(root) if registry is not None else None
    name = entry.name if entry is not None else root.name
    if spider_name is None:
        spider_name = entry.spider_name if entry is not None else name

    expected = expected_layout(name, spider_name)
    report = LayoutReport(
        root=root,
        change_once_applied=entry.change_once_applied if entry else None,
    )
    report.missing = [p for p in expected if not (root / p).is_file()]
    if root.is_dir():
        present = (
            p.relative_to(root).as_posix()
            for p in root.rglob("*")
            if p.is_file() and not set(p.relative_to(root).parts) & set(IGNORED_NAMES)
        )
        report.extra = sorted(p for p in present if p not in expected)
    logger.debug(
        "layout of %s: %d missing, %d extra",
        root,
        len(report.missing),
        len(report.extra),
    )
    return report


class ProjectGenerator:
    """Builds project trees and records them in a registry.

    Parameters
    ----------
    registry : ProjectRegistry
    user_templates_dir : Path, optional
        folder of user template sets, searched before the packaged ones
    use_external_generator : bool
        let an installed Scrapy write the skeleton, then patch it
    scrapy : ScrapyCommand, optional
        the Scrapy wrapper used in external mode
    """

    def __init__(
        self,
        registry: ProjectRegistry,
        user_templates_dir: Optional[Path] = None,
        use_external_generator: bool = False,
        scrapy: Optional[ScrapyCommand] = None,
    ) -> None:
        self.registry = registry
        self.user_templates_dir = user_templates_dir
        self.use_external_generator = use_external_generator
        self.scrapy = scrapy

    def _write_skeleton(
        self,
        spec: ProjectSpec,
        bindings: Bindings,
        skeleton: TemplateSet,
        stock: TemplateSet,
    ) -> None:
        root = spec.root
        package = root / spec.name
        (package / SPIDERS_DIR).mkdir(parents=True)
        files = [
            (root / SCRAPY_CFG, skeleton.render(SCRAPY_CFG, bindings)),
            (package / INIT_FILE, ""),
            (package / SETTINGS_FILE, skeleton.render(SETTINGS_FILE, bindings)),
            (package / MIDDLEWARES_FILE, skeleton.render(MIDDLEWARES_FILE, bindings)),
            (package / ITEMS_FILE, stock.render(ITEMS_FILE, bindings)),
            (package / PIPELINES_FILE, stock.render(PIPELINES_FILE, bindings)),
            (package / SPIDERS_DIR / INIT_FILE, SPIDERS_INIT),
            (
                package / SPIDERS_DIR / f"{spec.spider_name}.py",
                stock.render("spider.py", bindings),
            ),
        ]
        for path, text in files:
            atomic_write_text(path, text)

    def generate_project(self, spec: ProjectSpec) -> GeneratedProject:
        """Generate, initialize, configure and register one project.

        Any failure after the root folder is created removes the whole tree.

        Raises
        ------
        InvalidProjectSpec
        AlreadyExists
            when the root folder exists or the name is registered
        TemplateSetNotFound
        ExternalGeneratorError
            in external mode
        SpiderForgeException
            any codein, confi or registry error
        """
        spec.validate()
        root = spec.root
        if root.exists():
            raise AlreadyExists(f"{root} already exists")
        try:
            self.registry.get(spec.name)
        except UnknownProject:
            pass
        else:
            raise AlreadyExists(f"project {spec.name!r} already exists in the registry")

        # resolve every template before touching the disk
        template_set = load_template_set(spec.template_set, self.user_templates_dir)
        skeleton = load_skeleton(self.user_templates_dir)
        stock = load_template_set(DEFAULT_TEMPLATE_SET, self.user_templates_dir)
        bindings = spec.bindings()

        spec.target_dir.mkdir(parents=True, exist_ok=True)
        try:
            root.mkdir()
        except FileExistsError:
            raise AlreadyExists(f"{root} already exists") from None

        created_at = utc_now()
        settings_path, spider_path = project_paths(root, spec.name, spec.spider_name)
        try:
            if self.use_external_generator:
                generate_external_skeleton(spec, self.scrapy)
            else:
                self._write_skeleton(spec, bindings, skeleton, stock)
            apply_change_once_set(root, template_set, bindings)
            for key, option in spec.config_overrides:
                set_option(settings_path, key, option)
            entry = RegistryEntry(
                name=spec.name,
                root=str(root),
                template_set=template_set.id,
                created_at=created_at,
                spider_name=spec.spider_name,
                change_once_applied=True,
                config_history=[
                    ConfigHistoryItem(key=k, option=o, timestamp=created_at)
                    for k, o in spec.config_overrides
                ],
            )
            self.registry.record_project(entry)
        except BaseException as e:
            logger.warning(
                "generation of %s failed (%s), removing %s", spec.name, e, root
            )
            shutil.rmtree(root, ignore_errors=True)
            if isinstance(e, DuplicateName):
                raise AlreadyExists(str(e)) from e
            raise

        logger.info("generated project %s at %s", spec.name, root)
        return GeneratedProject(
            root=root,
            settings_path=settings_path,
            spider_path=spider_path,
            created_at=created_at,
        )

    def _attempt(self, spec: ProjectSpec) -> ProjectResult:
        try:
            return ProjectResult(spec=spec, project=self.generate_project(spec))
        except (SpiderForgeException, OSError) as e:
            logger.error("project %s failed: %s", spec.name, e)
            return ProjectResult(spec=spec, error=e)

    def generate_batch(
        self, specs: Sequence[ProjectSpec], workers: int = 1
    ) -> BatchResult:
        """Generate every spec, recording failures instead of stopping.

        Parameters
        ----------
        specs : Sequence[ProjectSpec]
        workers : int
            projects generated at once; 1 keeps manifest order on disk

        Returns
        -------
        BatchResult
            one result per spec in manifest order, and the wall time
        """
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        if not specs:
            return BatchResult()
        start = time.perf_counter()
        if workers == 1:
            results = [self._attempt(spec) for spec in specs]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(self._attempt, specs))
        elapsed = time.perf_counter() - start
        logger.info(
            "batch of %d finished in %.3f s, %d failed",
            len(results),
            elapsed,
            sum(not r.ok for r in results),
        )
        return BatchResult(results=results, elapsed=elapsed)

    def verify_layout(
        self, root: PathLike, spider_name: Optional[str] = None
    ) -> LayoutReport:
        return verify_layout(root, self.registry, spider_name)


#  LocalWords:  rglob pycache
