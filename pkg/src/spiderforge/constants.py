"""Defaults and fixed names used across spiderforge."""

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

# --- Block tree ---
DEFAULT_INDENT_WIDTH = 4
COMMENT_MARKER = "#"

# --- Config files ---
DEFAULT_EQUAL = "="
DEFAULT_TERMINATOR = "\n"
# seconds between existence checks, and the bound on the whole wait
WAIT_INTERVAL = 0.1
WAIT_TIMEOUT = 30.0
OPEN_BRACKETS = "([{"
CLOSE_BRACKETS = ")]}"

# --- Templates ---
TEMPLATE_SUFFIX = ".tmpl"
SKELETON_SET = "skeleton"
DEFAULT_TEMPLATE_SET = "default"
# every placeholder a project template may use
PROJECT_BINDINGS = frozenset(
    {
        "spname",
        "project_class",
        "spider_name",
        "spider_class",
        "allowed_domains",
        "start_urls",
    }
)

# --- Project layout ---
SCRAPY_CFG = "scrapy.cfg"
INIT_FILE = "__init__.py"
SPIDERS_DIR = "spiders"
ITEMS_FILE = "items.py"
MIDDLEWARES_FILE = "middlewares.py"
PIPELINES_FILE = "pipelines.py"
SETTINGS_FILE = "settings.py"

# --- Workspace ---
WORKSPACE_ENV = "SPIDERFORGE_WORKSPACE"
LOG_DIR_ENV = "SPIDERFORGE_LOG_DIR"
REGISTRY_FILE = "spiders.json"
PROJECTS_DIR = "spiders"
USER_TEMPLATES_DIR = "templates"

# --- Registry ---
REGISTRY_VERSION = 1
REGISTRY_LOCK_SUFFIX = ".lock"
REGISTRY_LOCK_TIMEOUT = 10.0
REGISTRY_LOCK_INTERVAL = 0.05

# --- External generator ---
SCRAPY_EXECUTABLE = "scrapy"
MIN_SCRAPY_VERSION = "2.0"

# --- Bench ---
BENCH_CONFIG_OVERRIDES = (
    ("ROBOTSTXT_OBEY", "False"),
    ("DOWNLOAD_DELAY", "1"),
    ("CONCURRENT_REQUESTS_PER_DOMAIN", "8"),
    ("USER_AGENT", "'spiderforge-bench (+https://example.com)'"),
)
BENCH_DOMAIN = "example.com"
