"""Exceptions for use in spiderforge"""

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


class SpiderForgeException(Exception):
    """Base for every error spiderforge raises on purpose"""

    pass


class NotTextFile(SpiderForgeException):
    """A file that should hold UTF-8 text does not"""

    def __init__(self, path, reason: str) -> None:
        super().__init__(f"{path}: not UTF-8 text ({reason})")
        self.path = path


# --- block tree ---
class BlockTreeException(SpiderForgeException):
    """Error recovering the block structure of a source file"""

    pass


class MixedIndentation(BlockTreeException):
    """Leading whitespace mixes tabs and spaces"""

    pass


class RaggedIndent(BlockTreeException):
    """A line's indentation is not a whole number of indent units"""

    def __init__(self, index: int, width: int, unit_width: int) -> None:
        super().__init__(
            f"line {index}: indent of {width} is not a multiple of {unit_width}"
        )
        self.index = index
        self.width = width
        self.unit_width = unit_width


class BlockNotFound(BlockTreeException):
    """A block path signature matched no header at its level"""

    def __init__(self, signature: str, depth: int) -> None:
        super().__init__(f"no block header {signature!r} at depth {depth}")
        self.signature = signature
        self.depth = depth


# --- codein ---
class CodeinException(SpiderForgeException):
    """Error inserting code or instantiating templates"""

    pass


class IndexOutOfRange(CodeinException):
    """Insertion index outside of the file"""

    pass


class TargetNotFound(CodeinException):
    """Neither the block path nor the single-line fallback resolved"""

    pass


class InvalidInsertion(CodeinException):
    """Insertion request carries malformed code lines"""

    pass


class MissingBinding(CodeinException):
    """A required template placeholder has no binding"""

    def __init__(self, name: str) -> None:
        super().__init__(f"missing binding for placeholder {name!r}")
        self.name = name


class UnknownPlaceholder(CodeinException):
    """Template body uses a placeholder it does not declare"""

    def __init__(self, name: str) -> None:
        super().__init__(f"unknown placeholder {name!r}")
        self.name = name


class TemplateSetNotFound(CodeinException):
    """No template set with this id"""

    def __init__(self, set_id: str) -> None:
        super().__init__(f"template set {set_id!r} not found")
        self.set_id = set_id


class LayoutMismatch(CodeinException):
    """Project tree lacks a file the change-once step rewrites"""

    def __init__(self, missing) -> None:
        super().__init__("missing: " + ", ".join(str(m) for m in missing))
        self.missing = list(missing)


class AlreadyApplied(CodeinException):
    """Change-once templates were already applied to this project"""

    pass


# --- confi ---
class ConfiException(SpiderForgeException):
    """Error editing a settings file"""

    pass


class KeyNotFound(ConfiException):
    """No config line carries this key"""

    def __init__(self, key: str) -> None:
        super().__init__(f"key {key!r} not found")
        self.key = key


class FileWaitTimeout(ConfiException):
    """File did not appear before the timeout"""

    pass


class InvalidOption(ConfiException):
    """Option text that cannot be written"""

    pass


# --- scaffold ---
class ScaffoldException(SpiderForgeException):
    """Error generating a project"""

    pass


class AlreadyExists(ScaffoldException):
    """Target project folder already exists"""

    pass


class InvalidProjectSpec(ScaffoldException):
    """Project spec breaks a naming or shape rule"""

    pass


class ExternalGeneratorError(ScaffoldException):
    """The installed scrapy could not generate the skeleton"""

    pass


# --- registry ---
class RegistryException(SpiderForgeException):
    """Error reading or writing the project registry"""

    pass


class DuplicateName(RegistryException):
    """A project with this name is already registered"""

    pass


class UnknownProject(RegistryException):
    """No registered project with this name"""

    pass


class RegistryCorrupt(RegistryException):
    """Registry file exists but cannot be understood"""

    pass


class RegistryLocked(RegistryException):
    """Registry lock could not be acquired in time"""

    pass


# --- cli ---
class UsageError(SpiderForgeException):
    """Command line arguments or manifest cannot be used"""

    pass
