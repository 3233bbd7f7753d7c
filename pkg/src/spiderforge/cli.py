"""Command line interface: ``spiderforge <command> ...``."""

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


import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from spiderforge import APP_NAME, APP_VERSION
from spiderforge.blocktree import BlockPath
from spiderforge.codein import (
    InsertionRequest,
    Placement,
    insert_in_block,
    list_template_sets,
)
from spiderforge.confi import get_option, set_option, toggle_comment
from spiderforge.constants import (
    DEFAULT_EQUAL,
    DEFAULT_TEMPLATE_SET,
    ITEMS_FILE,
    PIPELINES_FILE,
    SETTINGS_FILE,
    SPIDERS_DIR,
    WAIT_TIMEOUT,
)
from spiderforge.exceptions import (
    InvalidProjectSpec,
    KeyNotFound,
    SpiderForgeException,
    UsageError,
)
from spiderforge.registry import RegistryEntry
from spiderforge.scaffold import (
    ProjectGenerator,
    ProjectSpec,
    run_bench,
    verify_layout,
)
from spiderforge.type_hints import ConfigPair
from spiderforge.utils import is_identifier, set_log_level, setup_logger
from spiderforge.workspace import Workspace

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

CONFIG_ACTIONS = ("set", "toggle", "get")
INSERT_MODULES = ("spider", "items", "pipelines")


# --- argument types ---
def identifier(text: str) -> str:
    if not is_identifier(text):
        raise argparse.ArgumentTypeError(
            f"{text!r} must be letters, digits and underscores, "
            "not starting with a digit"
        )
    return text


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return value


def config_pair(text: str) -> ConfigPair:
    """``KEY=VALUE``, split at the first equal sign."""
    key, sep, option = text.partition("=")
    if not sep or not key.strip() or not option.strip():
        raise argparse.ArgumentTypeError(f"{text!r} is not KEY=VALUE")
    return key.strip(), option.strip()


# --- helpers ---
def _generator(args: argparse.Namespace, workspace: Workspace) -> ProjectGenerator:
    return ProjectGenerator(
        workspace.registry(),
        user_templates_dir=workspace.templates_dir,
        use_external_generator=args.use_external_generator,
    )


def _settings_path(entry: RegistryEntry) -> Path:
    return Path(entry.root) / entry.name / SETTINGS_FILE


def _module_path(entry: RegistryEntry, module: str) -> Path:
    package = Path(entry.root) / entry.name
    if module == "items":
        return package / ITEMS_FILE
    if module == "pipelines":
        return package / PIPELINES_FILE
    return package / SPIDERS_DIR / f"{entry.spider_name}.py"


def load_manifest(path: Path, target_dir: Path) -> List[ProjectSpec]:
    """Read a manifest: a JSON array of project spec objects.

    Raises
    ------
    UsageError
        when the file cannot be read or does not hold project specs
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read manifest {path}: {e}") from e
    if not isinstance(data, list):
        raise UsageError(f"manifest {path} must hold a JSON array")
    try:
        return [ProjectSpec.from_dict(item, target_dir) for item in data]
    except InvalidProjectSpec as e:
        raise UsageError(f"manifest {path}: {e}") from e


# --- commands ---
def cmd_new(args: argparse.Namespace, workspace: Workspace) -> int:
    spec = ProjectSpec(
        name=args.name,
        target_dir=workspace.projects_dir,
        spider_name=args.spider_name or "",
        allowed_domains=args.domains,
        start_urls=args.urls,
        template_set=args.template_set,
        config_overrides=args.config,
    )
    project = _generator(args, workspace).generate_project(spec)
    print(f"ok {spec.name} {project.root}")
    return EXIT_OK


def cmd_batch(args: argparse.Namespace, workspace: Workspace) -> int:
    specs = load_manifest(Path(args.manifest), workspace.projects_dir)
    batch = _generator(args, workspace).generate_batch(specs, workers=args.workers)
    for result in batch.results:
        if result.ok and result.project is not None:
            print(f"ok {result.spec.name} {result.project.root}")
        else:
            print(f"failed {result.spec.name} {result.error}")
    print(f"time_s {batch.elapsed:.3f}")
    return EXIT_OK if batch.ok else EXIT_FAILURE


def _config_target(
    args: argparse.Namespace, workspace: Workspace
) -> Tuple[Path, Optional[str], List[str]]:
    """Settings file, registered project name and the remaining words."""
    words = list(args.words)
    if args.file:
        return Path(args.file), None, words
    if not words:
        raise UsageError("config needs a project name or --file")
    name = words.pop(0)
    entry = workspace.registry().get(name)
    return _settings_path(entry), entry.name, words


def cmd_config(args: argparse.Namespace, workspace: Workspace) -> int:
    path, project, words = _config_target(args, workspace)
    if len(words) < 2 or words[0] not in CONFIG_ACTIONS:
        raise UsageError(
            "usage: config (PROJECT | --file PATH) set|toggle|get KEY [VALUE]"
        )
    action, key, rest = words[0], words[1], words[2:]
    equal = args.equal

    if action == "set":
        if len(rest) != 1:
            raise UsageError("config set needs exactly one VALUE")
        set_option(path, key, rest[0], equal=equal, timeout=args.timeout)
        if project is not None:
            workspace.registry().log_config_edit(project, key, rest[0])
    elif rest:
        raise UsageError(f"config {action} takes no VALUE")
    elif action == "toggle":
        report = toggle_comment(path, key, equal=equal, timeout=args.timeout)
        if not report.found:
            raise KeyNotFound(key)
        if project is not None:
            workspace.registry().log_config_edit(project, key, "#")

    value = get_option(path, key, equal=equal)
    state = "commented" if value.commented else "active"
    print(f"{key} {equal} {value.option} ({state})")
    return EXIT_OK


def cmd_insert(args: argparse.Namespace, workspace: Workspace) -> int:
    if args.file:
        path = Path(args.file)
    elif args.project:
        path = _module_path(workspace.registry().get(args.project), args.module)
    else:
        raise UsageError("insert needs a project name or --file")
    request = InsertionRequest(
        file_path=path,
        path=BlockPath.of(*args.block),
        code=tuple(args.code),
        placement=Placement(args.placement),
    )
    insert_in_block(request)
    print(f"ok {path}")
    return EXIT_OK


def cmd_list(args: argparse.Namespace, workspace: Workspace) -> int:
    for entry in workspace.registry().list_projects(args.pattern):
        flag = "applied" if entry.change_once_applied else "pending"
        print(
            f"{entry.name} {entry.root} {entry.template_set} "
            f"{entry.created_at.isoformat()} {flag}"
        )
    return EXIT_OK


def cmd_templates(args: argparse.Namespace, workspace: Workspace) -> int:
    for set_id in list_template_sets(workspace.templates_dir):
        print(set_id)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, workspace: Workspace) -> int:
    registry = workspace.registry()
    if args.root:
        root = Path(args.root)
    elif args.project:
        root = Path(registry.get(args.project).root)
    else:
        raise UsageError("verify needs a project name or --root")
    report = verify_layout(root, registry)
    for entry in report.missing:
        print(f"missing {entry}")
    for entry in report.extra:
        print(f"extra {entry}")
    if report.change_once_applied is None:
        print("change_once unregistered")
    else:
        print(f"change_once {'applied' if report.change_once_applied else 'pending'}")
    print(f"{'ok' if report.ok else 'incomplete'} {report.root}")
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_bench(args: argparse.Namespace, workspace: Workspace) -> int:
    row = run_bench(args.count, with_config=args.with_config, workers=args.workers)
    print(f"{'scenario':<28} {'projects':>8} {'seconds':>9}")
    print(f"{row.scenario:<28} {row.count:>8} {row.seconds:>9.3f}")
    print(f"time_s {row.seconds:.3f}")
    return EXIT_OK if row.ok else EXIT_FAILURE


# --- parser ---
def _add_generator_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--target-dir",
        help="parent folder of generated projects (default: <workspace>/spiders)",
    )
    parser.add_argument(
        "--use-external-generator",
        action="store_true",
        help="let an installed scrapy write the skeleton, then patch it",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description="Generate Scrapy projects from templates and edit them afterwards.",
    )
    parser.add_argument("--version", action="version", version=APP_VERSION)
    parser.add_argument("--workspace", help="workspace root (default: cwd)")
    parser.add_argument("--registry", help="registry file")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    new = commands.add_parser("new", help="generate one project")
    new.add_argument("name", type=identifier)
    new.add_argument("--spider-name", type=identifier)
    new.add_argument("--template-set", default=DEFAULT_TEMPLATE_SET)
    new.add_argument(
        "--domain", dest="domains", action="append", default=[], metavar="DOMAIN"
    )
    new.add_argument("--url", dest="urls", action="append", default=[], metavar="URL")
    new.add_argument(
        "--config",
        action="append",
        type=config_pair,
        default=[],
        metavar="KEY=VALUE",
        help="settings override, repeatable, applied in order",
    )
    _add_generator_flags(new)
    new.set_defaults(handler=cmd_new)

    batch = commands.add_parser("batch", help="generate the projects of a manifest")
    batch.add_argument("manifest", help="JSON array of project specs")
    batch.add_argument("--workers", type=positive_int, default=1)
    _add_generator_flags(batch)
    batch.set_defaults(handler=cmd_batch)

    config = commands.add_parser(
        "config",
        help="set, toggle or read a settings item",
        usage="%(prog)s (PROJECT | --file PATH) set|toggle|get KEY [VALUE]",
    )
    config.add_argument("words", nargs="*", metavar="ARG")
    config.add_argument("--file", help="edit this file instead of a project")
    config.add_argument("--equal", default=DEFAULT_EQUAL)
    config.add_argument("--timeout", type=float, default=WAIT_TIMEOUT)
    config.set_defaults(handler=cmd_config)

    insert = commands.add_parser("insert", help="insert code into a block")
    insert.add_argument("project", nargs="?")
    insert.add_argument("--file", help="edit this file instead of a project")
    insert.add_argument(
        "--module", choices=INSERT_MODULES, default="spider", help="project file"
    )
    insert.add_argument(
        "--block",
        action="append",
        required=True,
        metavar="SIGNATURE",
        help="block header, outermost first, repeatable",
    )
    insert.add_argument("--code", action="append", required=True, metavar="LINE")
    insert.add_argument(
        "--placement", choices=[p.value for p in Placement], default="back"
    )
    insert.set_defaults(handler=cmd_insert)

    listing = commands.add_parser("list", help="list registered projects")
    listing.add_argument("pattern", nargs="?", help="name glob")
    listing.set_defaults(handler=cmd_list)

    templates = commands.add_parser("templates", help="list template sets")
    templates.set_defaults(handler=cmd_templates)

    verify = commands.add_parser("verify", help="check a project's layout")
    verify.add_argument("project", nargs="?")
    verify.add_argument("--root", help="project folder, registered or not")
    verify.set_defaults(handler=cmd_verify)

    bench = commands.add_parser("bench", help="time throwaway generations")
    bench.add_argument("count", type=positive_int)
    bench.add_argument("--with-config", action="store_true")
    bench.add_argument("--workers", type=positive_int, default=1)
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    if args.verbose:
        set_log_level(logging.DEBUG)
    elif args.quiet:
        set_log_level(logging.ERROR)

    workspace = Workspace.resolve(
        root=args.workspace,
        registry_path=args.registry,
        projects_dir=getattr(args, "target_dir", None),
    )
    handler: Callable[[argparse.Namespace, Workspace], int] = args.handler
    try:
        return handler(args, workspace)
    except UsageError as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SpiderForgeException, OSError) as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


#  LocalWords:  argparse
