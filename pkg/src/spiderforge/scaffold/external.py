"""Delegate the project skeleton to an installed Scrapy."""

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
import subprocess
from pathlib import Path
from typing import List, Optional

from packaging.version import InvalidVersion, Version
from packaging.version import parse as parse_version

from spiderforge.constants import (
    BENCH_DOMAIN,
    MIN_SCRAPY_VERSION,
    SCRAPY_EXECUTABLE,
    SPIDERS_DIR,
)
from spiderforge.exceptions import ExternalGeneratorError
from spiderforge.scaffold.project_spec import ProjectSpec
from spiderforge.utils import setup_logger

logger = setup_logger(__name__)


class ScrapyCommand:
    """Thin wrapper around the ``scrapy`` console script.

    Parameters
    ----------
    executable : str
        name or path of the script, found on ``PATH`` when not absolute
    """

    def __init__(self, executable: str = SCRAPY_EXECUTABLE) -> None:
        self.executable = executable

    def available(self) -> bool:
        return shutil.which(self.executable) is not None

    def run(self, args: List[str], cwd: Optional[Path] = None) -> str:
        """Run one scrapy command and return its standard output.

        Raises
        ------
        ExternalGeneratorError
            when the script is missing or exits non-zero
        """
        command = [self.executable, *args]
        logger.debug("running %s in %s", command, cwd)
        try:
            completed = subprocess.run(
                command,
                cwd=str(cwd) if cwd is not None else None,
                capture_output=True,
                text=True,
                check=False,
            )
        except OSError as e:
            raise ExternalGeneratorError(f"cannot run {self.executable}: {e}") from e
        if completed.returncode != 0:
            raise ExternalGeneratorError(
                f"{' '.join(command)} exited with {completed.returncode}: "
                f"{completed.stderr.strip()}"
            )
        return completed.stdout

    def version(self) -> Version:
        """Installed Scrapy version, from ``scrapy version``."""
        output = self.run(["version"]).strip()
        # "Scrapy 2.11.0"
        text = output.split()[-1] if output else ""
        try:
            return parse_version(text)
        except InvalidVersion:
            raise ExternalGeneratorError(
                f"cannot read a version from {output!r}"
            ) from None

    def check_version(self, minimum: str = MIN_SCRAPY_VERSION) -> Version:
        found = self.version()
        if found < parse_version(minimum):
            raise ExternalGeneratorError(
                f"Scrapy {found} is too old, {minimum} or newer is needed"
            )
        logger.info("using Scrapy %s", found)
        return found


def generate_external_skeleton(
    spec: ProjectSpec, scrapy: Optional[ScrapyCommand] = None
) -> None:
    """Create ``spec.root`` with ``scrapy startproject`` and ``scrapy genspider``.

    The generated files are stock Scrapy output; the caller patches them
    with the change-once set afterwards.
    """
    scrapy = scrapy or ScrapyCommand()
    scrapy.check_version()
    spec.target_dir.mkdir(parents=True, exist_ok=True)
    scrapy.run(["startproject", spec.name, str(spec.root)], cwd=spec.target_dir)
    if spec.spider_name == spec.name:
        # scrapy refuses a spider named like its project
        spider = spec.root / spec.name / SPIDERS_DIR / f"{spec.spider_name}.py"
        spider.touch()
        return
    domain = spec.allowed_domains[0] if spec.allowed_domains else BENCH_DOMAIN
    scrapy.run(["genspider", spec.spider_name, domain], cwd=spec.root)


#  LocalWords:  startproject genspider
