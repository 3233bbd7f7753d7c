"""Preset templates with ``{{name}}`` placeholders, grouped in template sets."""

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


import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional

from spiderforge.constants import PROJECT_BINDINGS, SKELETON_SET, TEMPLATE_SUFFIX
from spiderforge.exceptions import (
    MissingBinding,
    NotTextFile,
    TemplateSetNotFound,
    UnknownPlaceholder,
)
from spiderforge.resources.resource_utils import (
    get_template_set_dir,
    list_packaged_template_sets,
)
from spiderforge.type_hints import Bindings
from spiderforge.utils import setup_logger

logger = setup_logger(__name__)

PLACEHOLDER_RE = re.compile(r"\{\{([A-Za-z_][A-Za-z0-9_]*)\}\}")

# template names a change-once set must provide
CHANGE_ONCE_TEMPLATES = ("items.py", "pipelines.py", "spider.py")
SKELETON_TEMPLATES = ("scrapy.cfg", "settings.py", "middlewares.py")


def find_placeholders(body: str) -> List[str]:
    """Placeholder names in order of first appearance."""
    seen: Dict[str, None] = {}
    for match in PLACEHOLDER_RE.finditer(body):
        seen.setdefault(match.group(1), None)
    return list(seen)


@dataclass(frozen=True)
class Template:
    """A text body with ``{{name}}`` placeholders.

    Attributes
    ----------
    id : str
    body : str
    required_bindings : FrozenSet[str]
        placeholder names the body may use; inferred from the body when the
        template is built with ``Template.from_body``
    """

    id: str
    body: str
    required_bindings: FrozenSet[str] = field(default_factory=frozenset)

    @classmethod
    def from_body(
        cls, template_id: str, body: str, required: Optional[Iterable[str]] = None
    ) -> "Template":
        names = frozenset(required) if required is not None else None
        if names is None:
            names = frozenset(find_placeholders(body))
        return cls(id=template_id, body=body, required_bindings=names)

    @property
    def placeholders(self) -> List[str]:
        return find_placeholders(self.body)


def instantiate_template(template: Template, bindings: Mapping[str, str]) -> str:
    """Replace every ``{{name}}`` of the body by its binding.

    Parameters
    ----------
    template : Template
    bindings : Mapping[str, str]
        must cover ``template.required_bindings``; extra names are ignored

    Returns
    -------
    str
        the body with no placeholder left, otherwise byte-identical

    Raises
    ------
    UnknownPlaceholder
        when the body uses a name outside ``required_bindings``
    MissingBinding
        when a required name has no binding
    """
    for name in template.placeholders:
        if name not in template.required_bindings:
            raise UnknownPlaceholder(name)
    for name in sorted(template.required_bindings):
        if name not in bindings:
            raise MissingBinding(name)
    return PLACEHOLDER_RE.sub(lambda m: bindings[m.group(1)], template.body)


@dataclass
class TemplateSet:
    """Templates keyed by the file name they render (``items.py``, ...)."""

    id: str
    templates: Dict[str, Template]
    source: str = ""

    def get(self, name: str) -> Template:
        try:
            return self.templates[name]
        except KeyError:
            raise TemplateSetNotFound(f"{self.id}/{name}") from None

    def render(self, name: str, bindings: Bindings) -> str:
        return instantiate_template(self.get(name), bindings)


def _read_set(set_id: str, folder, source: str) -> TemplateSet:
    templates = {}
    for entry in folder.iterdir():
        if entry.is_file() and entry.name.endswith(TEMPLATE_SUFFIX):
            name = entry.name[: -len(TEMPLATE_SUFFIX)]
            try:
                body = entry.read_text(encoding="utf-8")
            except UnicodeDecodeError as e:
                raise NotTextFile(entry, e.reason) from e
            templates[name] = Template.from_body(
                f"{set_id}/{name}", body, PROJECT_BINDINGS
            )
    return TemplateSet(id=set_id, templates=templates, source=source)


def load_template_set(
    set_id: str,
    user_dir: Optional[Path] = None,
    required: Iterable[str] = CHANGE_ONCE_TEMPLATES,
) -> TemplateSet:
    """Load a template set, user folder first, then the packaged sets.

    Parameters
    ----------
    set_id : str
    user_dir : Path, optional
        folder holding user sets as ``<user_dir>/<set_id>/*.tmpl``
    required : Iterable[str]
        template names the set must contain

    Raises
    ------
    TemplateSetNotFound
        when no folder has this id, or it lacks a required template
    """
    template_set: Optional[TemplateSet] = None
    if user_dir is not None and (Path(user_dir) / set_id).is_dir():
        folder = Path(user_dir) / set_id
        template_set = _read_set(set_id, folder, str(folder))
    else:
        try:
            folder = get_template_set_dir(set_id)
        except FileNotFoundError:
            raise TemplateSetNotFound(set_id) from None
        template_set = _read_set(set_id, folder, "package")

    missing = [name for name in required if name not in template_set.templates]
    if missing:
        logger.error("template set %s lacks %s", set_id, missing)
        raise TemplateSetNotFound(set_id)
    logger.debug("loaded template set %s from %s", set_id, template_set.source)
    return template_set


def load_skeleton(user_dir: Optional[Path] = None) -> TemplateSet:
    """The stock files written before any change-once set."""
    return load_template_set(SKELETON_SET, user_dir, SKELETON_TEMPLATES)


def list_template_sets(user_dir: Optional[Path] = None) -> List[str]:
    """Ids of the selectable template sets, packaged and user ones."""
    ids = set(list_packaged_template_sets())
    if user_dir is not None and Path(user_dir).is_dir():
        ids.update(p.name for p in Path(user_dir).iterdir() if p.is_dir())
    ids.discard(SKELETON_SET)
    return sorted(ids)


#  LocalWords:  spname
