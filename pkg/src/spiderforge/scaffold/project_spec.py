"""Inputs and outputs of project generation."""

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
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple

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
from spiderforge.exceptions import InvalidProjectSpec
from spiderforge.type_hints import Bindings, ConfigPair
from spiderforge.utils import class_name, is_identifier, utc_now

SPEC_FIELDS = (
    "name",
    "spider_name",
    "allowed_domains",
    "start_urls",
    "template_set",
    "target_dir",
    "config_overrides",
)


def _python_list(values: List[str]) -> str:
    """Render strings as a Python list literal in double quotes."""
    return "[" + ", ".join('"' + v.replace('"', '\\"') + '"' for v in values) + "]"


@dataclass
class ProjectSpec:
    """What to generate.

    Attributes
    ----------
    name : str
        project name, also the root and package folder name
    spider_name : str
        defaults to ``name``
    allowed_domains : List[str]
    start_urls : List[str]
        defaults to ``https://<domain>/`` for every allowed domain
    template_set : str
    target_dir : Path
        parent folder of the project root
    config_overrides : List[Tuple[str, str]]
        ``(key, option)`` pairs written into settings, in order
    """

    name: str
    target_dir: Path
    spider_name: str = ""
    allowed_domains: List[str] = field(default_factory=list)
    start_urls: List[str] = field(default_factory=list)
    template_set: str = DEFAULT_TEMPLATE_SET
    config_overrides: List[ConfigPair] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.target_dir = Path(self.target_dir)
        if not self.spider_name:
            self.spider_name = self.name
        if not self.start_urls:
            self.start_urls = [f"https://{d}/" for d in self.allowed_domains]
        self.config_overrides = [(str(k), str(v)) for k, v in self.config_overrides]

    def validate(self) -> None:
        """Raise InvalidProjectSpec when a name rule is broken."""
        for label, value in (("name", self.name), ("spider_name", self.spider_name)):
            if not is_identifier(value):
                raise InvalidProjectSpec(
                    f"{label} {value!r} must be letters, digits and underscores, "
                    "not starting with a digit"
                )

    @property
    def root(self) -> Path:
        return self.target_dir / self.name

    def bindings(self) -> Bindings:
        """Placeholder values for the project templates."""
        return {
            "spname": self.name,
            "project_class": class_name(self.name),
            "spider_name": self.spider_name,
            "spider_class": class_name(self.spider_name, "Spider"),
            "allowed_domains": _python_list(self.allowed_domains),
            "start_urls": _python_list(self.start_urls),
        }

    @classmethod
    def from_dict(
        cls, data: Mapping[str, Any], default_target_dir: Optional[Path] = None
    ) -> "ProjectSpec":
        """Build a spec from a manifest object (snake_case field names).

        Raises
        ------
        InvalidProjectSpec
            on unknown fields or wrong shapes
        """
        if not isinstance(data, Mapping):
            raise InvalidProjectSpec(f"project spec must be an object, got {data!r}")
        unknown = set(data) - set(SPEC_FIELDS)
        if unknown:
            raise InvalidProjectSpec(f"unknown fields: {', '.join(sorted(unknown))}")
        if "name" not in data:
            raise InvalidProjectSpec("project spec needs a name")
        target_dir = data.get("target_dir", default_target_dir)
        if target_dir is None:
            raise InvalidProjectSpec(f"no target_dir for {data['name']!r}")
        overrides = data.get("config_overrides", [])
        if not isinstance(overrides, list) or not all(
            isinstance(pair, (list, tuple))
            and len(pair) == 2
            and all(isinstance(part, str) for part in pair)
            for pair in overrides
        ):
            raise InvalidProjectSpec("config_overrides must be [key, option] pairs")
        for list_field in ("allowed_domains", "start_urls"):
            value = data.get(list_field, [])
            if not isinstance(value, list) or not all(
                isinstance(v, str) for v in value
            ):
                raise InvalidProjectSpec(f"{list_field} must be a list of strings")
        return cls(
            name=str(data["name"]),
            target_dir=Path(target_dir),
            spider_name=str(data.get("spider_name", "")),
            allowed_domains=list(data.get("allowed_domains", [])),
            start_urls=list(data.get("start_urls", [])),
            template_set=str(data.get("template_set", DEFAULT_TEMPLATE_SET)),
            config_overrides=overrides,
        )


@dataclass
class GeneratedProject:
    root: Path
    settings_path: Path
    spider_path: Path
    created_at: datetime = field(default_factory=utc_now)


def expected_layout(name: str, spider_name: str) -> List[str]:
    """Paths, relative to the project root, every generated project has."""
    package = name
    return [
        SCRAPY_CFG,
        f"{package}/{INIT_FILE}",
        f"{package}/{ITEMS_FILE}",
        f"{package}/{MIDDLEWARES_FILE}",
        f"{package}/{PIPELINES_FILE}",
        f"{package}/{SETTINGS_FILE}",
        f"{package}/{SPIDERS_DIR}/{INIT_FILE}",
        f"{package}/{SPIDERS_DIR}/{spider_name}.py",
    ]


def project_paths(root: Path, name: str, spider_name: str) -> Tuple[Path, Path]:
    """(settings file, spider file) of a project."""
    package = root / name
    return package / SETTINGS_FILE, package / SPIDERS_DIR / f"{spider_name}.py"


#  LocalWords:  spname
