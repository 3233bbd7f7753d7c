"""Tests for templates and template sets."""

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

import pytest

from spiderforge.codein import (
    Template,
    instantiate_template,
    list_template_sets,
    load_skeleton,
    load_template_set,
)
from spiderforge.codein.template import CHANGE_ONCE_TEMPLATES, find_placeholders
from spiderforge.constants import PROJECT_BINDINGS
from spiderforge.exceptions import (
    MissingBinding,
    NotTextFile,
    TemplateSetNotFound,
    UnknownPlaceholder,
)
from spiderforge.scaffold import ProjectSpec


class TestInstantiateTemplate:
    """Test placeholder substitution."""

    def test_substitution(self):
        template = Template.from_body("t", "name = '{{spname}}'")
        assert instantiate_template(template, {"spname": "demo"}) == "name = 'demo'"

    def test_identity_without_placeholders(self):
        """A body without placeholders comes back unchanged."""
        body = "x = {'a': 1}\n# {not a placeholder}\n"
        assert instantiate_template(Template.from_body("t", body), {}) == body

    def test_missing_binding(self):
        with pytest.raises(MissingBinding) as info:
            instantiate_template(Template.from_body("t", "{{a}}"), {})
        assert info.value.name == "a"

    def test_unknown_placeholder(self):
        """A placeholder outside the declared bindings is refused."""
        template = Template("t", "{{a}} {{b}}", frozenset({"a"}))
        with pytest.raises(UnknownPlaceholder) as info:
            instantiate_template(template, {"a": "1", "b": "2"})
        assert info.value.name == "b"

    def test_repeated_placeholder(self):
        template = Template.from_body("t", "{{a}}-{{a}}")
        assert template.required_bindings == frozenset({"a"})
        assert instantiate_template(template, {"a": "x", "extra": "y"}) == "x-x"

    def test_find_placeholders_order(self):
        assert find_placeholders("{{b}} {{a}} {{b}} {{ c }}") == ["b", "a"]


class TestTemplateSets:
    """Test loading packaged and user template sets."""

    def test_packaged_sets(self):
        """The skeleton is not a selectable set."""
        assert list_template_sets() == ["crawl", "default"]

    @pytest.mark.parametrize("set_id", ["default", "crawl"])
    def test_sets_render_with_project_bindings(self, set_id, tmp_path):
        template_set = load_template_set(set_id)
        bindings = ProjectSpec(name="news", target_dir=tmp_path).bindings()
        assert set(bindings) == PROJECT_BINDINGS
        for name in CHANGE_ONCE_TEMPLATES:
            assert "{{" not in template_set.render(name, bindings)

    def test_skeleton(self, tmp_path):
        skeleton = load_skeleton()
        bindings = ProjectSpec(name="news", target_dir=tmp_path).bindings()
        assert "default = news.settings" in skeleton.render("scrapy.cfg", bindings)
        assert 'BOT_NAME = "news"' in skeleton.render("settings.py", bindings)
        assert "class NewsSpiderMiddleware:" in skeleton.render(
            "middlewares.py", bindings
        )

    def test_unknown_set(self):
        with pytest.raises(TemplateSetNotFound):
            load_template_set("nosuch")

    def test_user_set_shadows_packaged(self, tmp_path):
        """A user folder with a packaged id wins over the package."""
        folder = tmp_path / "default"
        folder.mkdir()
        for name in CHANGE_ONCE_TEMPLATES:
            (folder / f"{name}.tmpl").write_text(f"# user {name} {{{{spname}}}}\n")
        template_set = load_template_set("default", tmp_path)
        assert template_set.source == str(folder)
        bindings = ProjectSpec(name="demo", target_dir=tmp_path).bindings()
        rendered = template_set.render("items.py", bindings)
        assert rendered == "# user items.py demo\n"

    def test_user_set_listed(self, tmp_path):
        (tmp_path / "mine").mkdir()
        assert list_template_sets(tmp_path) == ["crawl", "default", "mine"]

    def test_incomplete_user_set(self, tmp_path):
        """A set lacking a change-once template is refused."""
        folder = tmp_path / "partial"
        folder.mkdir()
        (folder / "items.py.tmpl").write_text("pass\n")
        with pytest.raises(TemplateSetNotFound):
            load_template_set("partial", tmp_path)

    def test_user_set_not_utf8(self, tmp_path):
        folder = tmp_path / "latin"
        folder.mkdir()
        for name in CHANGE_ONCE_TEMPLATES:
            (folder / f"{name}.tmpl").write_bytes(b"# caf\xe9\n")
        with pytest.raises(NotTextFile, match="not UTF-8"):
            load_template_set("latin", tmp_path)
