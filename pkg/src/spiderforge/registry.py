"""The registry of generated projects, kept as one JSON document."""

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


import contextlib
import fnmatch
import json
import os
import time
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import psutil
from dateutil.parser import isoparse

from spiderforge.constants import (
    REGISTRY_LOCK_INTERVAL,
    REGISTRY_LOCK_SUFFIX,
    REGISTRY_LOCK_TIMEOUT,
    REGISTRY_VERSION,
)
from spiderforge.exceptions import (
    DuplicateName,
    RegistryCorrupt,
    RegistryLocked,
    UnknownProject,
)
from spiderforge.type_hints import PathLike
from spiderforge.utils import atomic_write_text, setup_logger, utc_now

logger = setup_logger(__name__)


def _timestamp(value: Any) -> datetime:
    if not isinstance(value, str):
        raise ValueError(f"timestamp must be a string, got {value!r}")
    return isoparse(value)


@dataclass
class ConfigHistoryItem:
    """One settings edit made on a registered project."""

    key: str
    option: str
    timestamp: datetime

    def to_dict(self) -> Dict[str, Any]:
        return {
            "key": self.key,
            "option": self.option,
            "timestamp": self.timestamp.isoformat(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ConfigHistoryItem":
        return cls(
            key=str(data["key"]),
            option=str(data["option"]),
            timestamp=_timestamp(data["timestamp"]),
        )


@dataclass
class RegistryEntry:
    """The persisted record of one generated project.

    Attributes
    ----------
    name : str
        unique within the registry
    root : str
        absolute path of the project root folder
    template_set : str
    created_at : datetime
        timezone-aware UTC
    spider_name : str
    change_once_applied : bool
        set once the change-once templates were written
    config_history : List[ConfigHistoryItem]
        append-only
    """

    name: str
    root: str
    template_set: str
    created_at: datetime = field(default_factory=utc_now)
    spider_name: str = ""
    change_once_applied: bool = False
    config_history: List[ConfigHistoryItem] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.root = str(Path(self.root).resolve())
        if not self.spider_name:
            self.spider_name = self.name

    def to_dict(self) -> Dict[str, Any]:
        """Serialize for the registry file."""
        return {
            "name": self.name,
            "root": self.root,
            "template_set": self.template_set,
            "created_at": self.created_at.isoformat(),
            "spider_name": self.spider_name,
            "change_once_applied": self.change_once_applied,
            "config_history": [item.to_dict() for item in self.config_history],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RegistryEntry":
        """Rebuild an entry from its registry form."""
        return cls(
            name=str(data["name"]),
            root=str(data["root"]),
            template_set=str(data["template_set"]),
            created_at=_timestamp(data["created_at"]),
            spider_name=str(data.get("spider_name", "")),
            change_once_applied=bool(data.get("change_once_applied", False)),
            config_history=[
                ConfigHistoryItem.from_dict(item)
                for item in data.get("config_history", [])
            ],
        )


class ProjectRegistry:
    """Reads and writes the registry file.

    Every write is a locked read-modify-write ending in an atomic replace. A
    corrupt file is reported and never overwritten.

    Parameters
    ----------
    path : PathLike
        the registry file, usually ``<workspace>/spiders.json``
    """

    def __init__(self, path: PathLike) -> None:
        self.path = Path(path)
        self.lock_path = self.path.with_name(self.path.name + REGISTRY_LOCK_SUFFIX)

    # --- persistence ---
    def load(self) -> List[RegistryEntry]:
        """Read every entry, in creation order.

        Raises
        ------
        RegistryCorrupt
            when the file is not a registry document this version understands
        """
        if not self.path.exists():
            return []
        try:
            with open(self.path, "r", encoding="utf-8") as f:
                document = json.load(f)
            if not isinstance(document, dict) or document.get("v") != REGISTRY_VERSION:
                raise ValueError(f"unsupported registry document in {self.path}")
            entries = [RegistryEntry.from_dict(e) for e in document["entries"]]
        except (ValueError, KeyError, TypeError, OverflowError) as e:
            logger.error("registry %s is corrupt: %s", self.path, e)
            raise RegistryCorrupt(f"{self.path}: {e}") from e
        return entries

    def _save(self, entries: List[RegistryEntry]) -> None:
        document = {"v": REGISTRY_VERSION, "entries": [e.to_dict() for e in entries]}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        atomic_write_text(self.path, json.dumps(document, indent=2) + "\n")

    def _lock_is_stale(self) -> bool:
        """The lock file names a process that is no longer running."""
        try:
            pid = int(self.lock_path.read_text(encoding="ascii").strip())
        except (OSError, ValueError):
            # gone, or not written yet
            return False
        return pid != os.getpid() and not psutil.pid_exists(pid)

    @contextlib.contextmanager
    def _locked(self) -> Iterator[None]:
        """Hold the advisory lock file for the duration of a write."""
        self.lock_path.parent.mkdir(parents=True, exist_ok=True)
        deadline = time.monotonic() + REGISTRY_LOCK_TIMEOUT
        while True:
            try:
                fd = os.open(
                    str(self.lock_path), os.O_CREAT | os.O_EXCL | os.O_WRONLY
                )
                break
            except FileExistsError:
                if self._lock_is_stale():
                    logger.warning("removing stale lock %s", self.lock_path)
                    with contextlib.suppress(FileNotFoundError):
                        os.remove(self.lock_path)
                    continue
                if time.monotonic() >= deadline:
                    raise RegistryLocked(
                        f"{self.lock_path} is held; remove it if no spiderforge "
                        "process is running"
                    ) from None
                time.sleep(REGISTRY_LOCK_INTERVAL)
        try:
            os.write(fd, str(os.getpid()).encode())
            os.close(fd)
            yield
        finally:
            try:
                os.remove(self.lock_path)
            except OSError:
                pass

    # --- operations ---
    def record_project(self, entry: RegistryEntry) -> List[RegistryEntry]:
        """Append a new entry.

        Raises
        ------
        DuplicateName
            when an entry already has this name
        RegistryCorrupt
        """
        with self._locked():
            entries = self.load()
            if any(e.name == entry.name for e in entries):
                raise DuplicateName(f"project {entry.name!r} is already registered")
            entries.append(entry)
            self._save(entries)
        logger.info("registered project %s at %s", entry.name, entry.root)
        return entries

    def list_projects(self, pattern: Optional[str] = None) -> List[RegistryEntry]:
        """Entries whose name matches a shell-style glob, creation order."""
        entries = self.load()
        if pattern is None:
            return entries
        return [e for e in entries if fnmatch.fnmatchcase(e.name, pattern)]

    def get(self, name: str) -> RegistryEntry:
        for entry in self.load():
            if entry.name == name:
                return entry
        raise UnknownProject(f"unknown project {name!r}")

    def find_by_root(self, root: PathLike) -> Optional[RegistryEntry]:
        wanted = str(Path(root).resolve())
        return next((e for e in self.load() if e.root == wanted), None)

    def _update(self, name: str, change) -> RegistryEntry:
        with self._locked():
            entries = self.load()
            for entry in entries:
                if entry.name == name:
                    change(entry)
                    self._save(entries)
                    return entry
        raise UnknownProject(f"unknown project {name!r}")

    def log_config_edit(self, name: str, key: str, option: str) -> RegistryEntry:
        """Append ``(key, option, now)`` to a project's config history.

        Raises
        ------
        UnknownProject
        """
        item = ConfigHistoryItem(key=key, option=option, timestamp=utc_now())
        entry = self._update(name, lambda e: e.config_history.append(item))
        logger.debug("logged %s = %s for %s", key, option, name)
        return entry

    def mark_change_once(self, name: str) -> RegistryEntry:
        """Record that the change-once templates were applied."""

        def _mark(entry: RegistryEntry) -> None:
            entry.change_once_applied = True

        return self._update(name, _mark)


#  LocalWords:  isoparse fnmatch
