"""End-to-end tests of the command line, exit codes included."""

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

import json
from pathlib import Path

import pytest

from spiderforge.blocktree import BlockPath, build_block_tree, locate_block
from spiderforge.cli import main
from spiderforge.confi import get_option
from spiderforge.constants import WORKSPACE_ENV
from spiderforge.registry import ProjectRegistry

SPIDER_CLASS = "class DemoSpider(scrapy.Spider):"
LATIN1_SETTINGS = b"KEY = 1\n# caf\xe9\n"


@pytest.fixture
def ws(tmp_path: Path) -> Path:
    return tmp_path / "ws"


@pytest.fixture
def run(ws, capsys):
    """Run the CLI in the test workspace; returns (exit code, stdout, stderr)."""

    def _run(*argv: str):
        code = main(["--workspace", str(ws), *argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def demo(run, ws) -> Path:
    """Generate ``demo`` and return its root."""
    code, out, _ = run("new", "demo", "--domain", "example.com")
    assert code == 0
    return ws / "spiders" / "demo"


def spider_lines(root: Path):
    path = root / "demo" / "spiders" / "demo.py"
    return path.read_text(encoding="utf-8").splitlines()


class TestNew:
    """Test ``spiderforge new``."""

    def test_new_with_config(self, run, ws):
        code, out, _ = run("new", "demo", "--config", "ROBOTSTXT_OBEY=False")
        root = (ws / "spiders" / "demo").resolve()
        assert code == 0
        assert out == f"ok demo {root}\n"
        value = get_option(root / "demo" / "settings.py", "ROBOTSTXT_OBEY")
        assert (value.option, value.commented) == ("False", False)

    def test_twice(self, run, demo):
        code, out, err = run("new", "demo")
        assert code == 1
        assert out == ""
        assert "already exists" in err

    def test_bad_name(self, run, ws):
        code, _, err = run("new", "9bad")
        assert code == 2
        assert not (ws / "spiders" / "9bad").exists()

    def test_bad_config_pair(self, run):
        assert run("new", "demo", "--config", "NOVALUE")[0] == 2

    def test_unknown_template_set(self, run):
        code, _, err = run("new", "demo", "--template-set", "nosuch")
        assert code == 1
        assert "nosuch" in err

    def test_target_dir(self, run, tmp_path):
        code, out, _ = run("new", "demo", "--target-dir", str(tmp_path / "elsewhere"))
        assert code == 0
        assert (tmp_path / "elsewhere" / "demo" / "scrapy.cfg").is_file()

    def test_workspace_from_environment(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv(WORKSPACE_ENV, str(tmp_path / "envws"))
        assert main(["new", "demo"]) == 0
        assert (tmp_path / "envws" / "spiders.json").is_file()

    def test_no_command(self, run):
        assert run()[0] == 2


class TestBatch:
    """Test ``spiderforge batch``."""

    def write_manifest(self, tmp_path: Path, specs) -> str:
        path = tmp_path / "manifest.json"
        path.write_text(json.dumps(specs), encoding="utf-8")
        return str(path)

    def test_three_projects(self, run, tmp_path):
        manifest = self.write_manifest(
            tmp_path,
            [
                {"name": "a", "allowed_domains": ["a.example"]},
                {"name": "b", "config_overrides": [["DOWNLOAD_DELAY", "2"]]},
                {"name": "c", "template_set": "crawl"},
            ],
        )
        code, out, _ = run("batch", manifest)
        lines = out.splitlines()
        assert code == 0
        assert [line.split()[:2] for line in lines[:3]] == [
            ["ok", "a"],
            ["ok", "b"],
            ["ok", "c"],
        ]
        assert lines[3].startswith("time_s ")
        float(lines[3].split()[1])

    def test_duplicate(self, run, tmp_path):
        manifest = self.write_manifest(
            tmp_path, [{"name": "a"}, {"name": "a"}, {"name": "b"}]
        )
        code, out, _ = run("batch", manifest)
        statuses = [line.split()[0] for line in out.splitlines()[:3]]
        assert code == 1
        assert statuses == ["ok", "failed", "ok"]

    def test_missing_manifest(self, run, tmp_path):
        assert run("batch", str(tmp_path / "nope.json"))[0] == 2

    @pytest.mark.parametrize(
        "text",
        [
            "{not json",
            '{"name": "a"}',
            '[{"nom": "a"}]',
            '[{"name": "a", "config_overrides": ["AB"]}]',
        ],
    )
    def test_invalid_manifest(self, run, tmp_path, text):
        path = tmp_path / "manifest.json"
        path.write_text(text, encoding="utf-8")
        assert run("batch", str(path))[0] == 2

    def test_parallel_workers(self, run, tmp_path):
        manifest = self.write_manifest(tmp_path, [{"name": f"p{i}"} for i in range(4)])
        code, out, _ = run("batch", manifest, "--workers", "2")
        assert code == 0
        assert out.count("ok ") == 4


class TestConfig:
    """Test ``spiderforge config``."""

    def test_set_then_get(self, run, demo, ws):
        assert run("config", "demo", "set", "DOWNLOAD_DELAY", "2")[0] == 0
        code, out, _ = run("config", "demo", "get", "DOWNLOAD_DELAY")
        assert code == 0
        assert out == "DOWNLOAD_DELAY = 2 (active)\n"
        history = ProjectRegistry(ws / "spiders.json").get("demo").config_history
        assert [(h.key, h.option) for h in history] == [("DOWNLOAD_DELAY", "2")]

    def test_toggle(self, run, demo, ws):
        run("config", "demo", "set", "DOWNLOAD_DELAY", "2")
        code, out, _ = run("config", "demo", "toggle", "DOWNLOAD_DELAY")
        assert code == 0
        assert out == "DOWNLOAD_DELAY = 2 (commented)\n"
        history = ProjectRegistry(ws / "spiders.json").get("demo").config_history
        assert [h.option for h in history] == ["2", "#"]

    def test_unknown_project(self, run, ws):
        code, _, err = run("config", "nosuch", "set", "K", "V")
        assert code == 1
        assert "nosuch" in err

    def test_missing_key(self, run, demo):
        assert run("config", "demo", "get", "NO_SUCH_KEY")[0] == 1
        assert run("config", "demo", "toggle", "NO_SUCH_KEY")[0] == 1

    def test_explicit_file(self, run, tmp_path):
        path = tmp_path / "custom.py"
        path.write_text("#ROBOTSTXT_OBEY = True\n", encoding="utf-8")
        code, out, _ = run("config", "--file", str(path), "get", "ROBOTSTXT_OBEY")
        assert (code, out) == (0, "ROBOTSTXT_OBEY = True (commented)\n")
        code, _, _ = run(
            "config", "--file", str(path), "set", "ROBOTSTXT_OBEY", "False"
        )
        assert code == 0
        assert path.read_text(encoding="utf-8") == "ROBOTSTXT_OBEY = False\n"

    @pytest.mark.parametrize(
        "argv",
        [
            ("config",),
            ("config", "demo", "set", "K"),
            ("config", "demo", "frob", "K"),
            ("config", "demo", "get", "K", "extra"),
        ],
    )
    def test_usage_errors(self, run, demo, argv):
        assert run(*argv)[0] == 2


    def test_not_utf8(self, run, tmp_path):
        path = tmp_path / "latin.py"
        path.write_bytes(LATIN1_SETTINGS)
        code, out, err = run("config", "--file", str(path), "get", "KEY")
        assert (code, out) == (1, "")
        assert err.startswith("error: ") and "not UTF-8" in err
        assert path.read_bytes() == LATIN1_SETTINGS

class TestInsert:
    """Test ``spiderforge insert``."""

    def test_into_spider_class(self, run, demo):
        """The line follows the class's last body line and copies its indent.

        The spider class ends in ``parse``, so the line joins that method.
        """
        before = spider_lines(demo)
        path = BlockPath.of(SPIDER_CLASS)
        end = locate_block(build_block_tree(before), path).end
        code, out, _ = run(
            "insert", "demo", "--block", SPIDER_CLASS, "--code", "custom_attr = 1"
        )
        after = spider_lines(demo)
        node = locate_block(build_block_tree(after), path)
        assert code == 0
        assert node.end == end + 1
        assert after[end - 1] == "        pass"
        assert after[end] == "        custom_attr = 1"
        assert node.contains(end + 1)
        method = locate_block(
            build_block_tree(after),
            BlockPath.of(SPIDER_CLASS, "def parse(self, response):"),
        )
        assert method.contains(end + 1)

    def test_front_placement(self, run, demo):
        """Front puts the line before the resolved line instead of after it."""
        before = spider_lines(demo)
        end = locate_block(build_block_tree(before), BlockPath.of(SPIDER_CLASS)).end
        run(
            "insert",
            "demo",
            "--block",
            SPIDER_CLASS,
            "--code",
            "custom_attr = 1",
            "--placement",
            "front",
        )
        after = spider_lines(demo)
        assert after[end - 1].strip() == "custom_attr = 1"
        assert after[end] == before[end - 1]

    def test_absent_block(self, run, demo):
        before = spider_lines(demo)
        code, _, err = run("insert", "demo", "--block", "class Nope:", "--code", "x")
        assert code == 1
        assert spider_lines(demo) == before

    def test_items_module(self, run, demo):
        code, _, _ = run(
            "insert",
            "demo",
            "--module",
            "items",
            "--block",
            "class DemoItem(scrapy.Item):",
            "--code",
            "title = scrapy.Field()",
        )
        items = (demo / "demo" / "items.py").read_text(encoding="utf-8")
        assert code == 0
        assert "    title = scrapy.Field()\n" in items

    def test_not_utf8(self, run, tmp_path):
        path = tmp_path / "latin.py"
        path.write_bytes(LATIN1_SETTINGS)
        code, _, err = run(
            "insert", "--file", str(path), "--block", "class A:", "--code", "x = 1"
        )
        assert code == 1
        assert "not UTF-8" in err
        assert path.read_bytes() == LATIN1_SETTINGS

    def test_needs_target(self, run):
        assert run("insert", "--block", "a:", "--code", "x")[0] == 2


class TestListTemplatesVerify:
    """Test ``list``, ``templates`` and ``verify``."""

    def test_list(self, run, demo):
        code, out, _ = run("list")
        fields = out.split()
        assert code == 0
        assert fields[0] == "demo"
        assert fields[1] == str(demo.resolve())
        assert fields[2] == "default"
        assert fields[4] == "applied"
        assert run("list", "x*")[1] == ""

    def test_templates(self, run):
        code, out, _ = run("templates")
        assert (code, out) == (0, "crawl\ndefault\n")

    def test_verify(self, run, demo):
        code, out, _ = run("verify", "demo")
        assert code == 0
        assert "change_once applied\n" in out
        assert out.endswith(f"ok {demo.resolve()}\n")
        (demo / "demo" / "pipelines.py").unlink()
        code, out, _ = run("verify", "demo")
        assert code == 1
        assert "missing demo/pipelines.py\n" in out

    def test_verify_plain_folder(self, run, tmp_path):
        code, out, _ = run("verify", "--root", str(tmp_path))
        assert code == 1
        assert "change_once unregistered\n" in out


class TestBench:
    """Test ``spiderforge bench``."""

    def test_multiple_with_config(self, run):
        code, out, _ = run("bench", "3", "--with-config")
        lines = out.splitlines()
        assert code == 0
        assert "multiple projects + config" in lines[1]
        assert lines[-1].startswith("time_s ")
        assert float(lines[-1].split()[1]) < 5

    def test_single(self, run):
        code, out, _ = run("bench", "1")
        assert code == 0
        assert "single project" in out

    def test_zero(self, run):
        assert run("bench", "0")[0] == 2
