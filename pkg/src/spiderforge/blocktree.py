"""Indentation-delimited code blocks of a plain-text source file.

Every effective line gets a pair ``[f, b]``: its own indent level and the
indent level of the next effective line, both in indent units. The sign of
``f - b`` drives a single left-to-right pass:

* ``f - b < 0`` enters a block whose header is the current line,
* ``f - b = 0`` neither opens nor closes anything,
* ``f - b > 0`` leaves ``f - b`` levels of blocks.

Blank lines and comment-only lines are kept in the buffer but ignored when
computing transitions, so they never close a block.

Example
-------
>>> tree = build_block_tree(["class A:", "  def b(self):", "    x = 1", "y = 2"])
>>> node = locate_block(tree, BlockPath.of("class A:", "def b(self):"))
>>> (node.header_index, node.start, node.end)
(2, 3, 3)
"""

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


import enum
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from spiderforge.constants import COMMENT_MARKER, DEFAULT_INDENT_WIDTH
from spiderforge.exceptions import BlockNotFound, MixedIndentation, RaggedIndent
from spiderforge.utils import leading_whitespace, setup_logger

logger = setup_logger(__name__)


class IndentStyle(enum.Enum):
    SPACES = "spaces"
    TABS = "tabs"


class TransitionKind(enum.Enum):
    ENTER = "enter"
    SAME = "same"
    LEAVE = "leave"


@dataclass(frozen=True)
class IndentProfile:
    """How one indent level is written in a file.

    Attributes
    ----------
    unit_width : int
        whitespace characters per indent level, at least 1
    style : IndentStyle
    """

    unit_width: int = DEFAULT_INDENT_WIDTH
    style: IndentStyle = IndentStyle.SPACES

    def __post_init__(self) -> None:
        if self.unit_width < 1:
            raise ValueError(f"unit_width must be >= 1, got {self.unit_width}")


@dataclass(frozen=True)
class LineRecord:
    """One effective line and its indent pair.

    Attributes
    ----------
    index : int
        1-based line number in the buffer
    text : str
        line content without terminator
    f : int
        indent units of this line
    b : int
        indent units of the next effective line, 0 for the last one
    """

    index: int
    text: str
    f: int
    b: int


@dataclass(frozen=True)
class Transition:
    kind: TransitionKind
    # number of levels left, only set for LEAVE
    levels: Optional[int] = None


@dataclass
class BlockNode:
    """A block body opened by the header line ``header_index``.

    ``start`` and ``end`` are the first and last effective lines of the body;
    blank or comment lines between them belong to the block too.
    """

    header_index: int
    header: str
    start: int
    end: int
    depth: int
    level: int
    children: List["BlockNode"] = field(default_factory=list)

    def contains(self, index: int) -> bool:
        return self.start <= index <= self.end

    def walk(self) -> Iterator["BlockNode"]:
        """This node, then its descendants in line order."""
        yield self
        for child in self.children:
            yield from child.walk()

    def shape(self) -> Tuple[int, int, int, tuple]:
        """Nested tuples of (header, start, end, children), for comparisons."""
        return (
            self.header_index,
            self.start,
            self.end,
            tuple(c.shape() for c in self.children),
        )


@dataclass
class BlockTree:
    """The forest of top-level blocks of a file, plus what it was built from."""

    lines: List[str]
    profile: IndentProfile
    records: List[LineRecord]
    roots: List[BlockNode] = field(default_factory=list)

    def walk(self) -> Iterator[BlockNode]:
        for root in self.roots:
            yield from root.walk()

    def deepest_block(self, index: int) -> Optional[BlockNode]:
        """Innermost block whose body holds line ``index``, None for file scope."""
        found: Optional[BlockNode] = None
        candidates = self.roots
        while True:
            for node in candidates:
                if node.contains(index):
                    found = node
                    candidates = node.children
                    break
            else:
                return found

    def shape(self) -> tuple:
        return tuple(r.shape() for r in self.roots)


@dataclass(frozen=True)
class BlockPath:
    """Header signatures naming a nested block, outermost first."""

    signatures: Tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.signatures:
            raise ValueError("a block path needs at least one signature")

    @classmethod
    def of(cls, *signatures: str) -> "BlockPath":
        return cls(tuple(signatures))

    def __len__(self) -> int:
        return len(self.signatures)


def _strip_terminator(line: str) -> str:
    return line.rstrip("\r\n")


def is_effective(line: str) -> bool:
    """False for blank lines and comment-only lines."""
    content = line.strip()
    return bool(content) and not content.startswith(COMMENT_MARKER)


def detect_indent_profile(lines: Sequence[str]) -> IndentProfile:
    """Infer the indent unit of a file.

    The unit is the smallest positive change of leading width between
    consecutive effective lines, counting from an implicit level 0 before the
    first line. The style is taken from the first indented line.

    Parameters
    ----------
    lines : Sequence[str]
        raw lines, terminators allowed

    Returns
    -------
    IndentProfile
        4 spaces when nothing is indented

    Raises
    ------
    MixedIndentation
        when a leading run mixes tabs and spaces, or when some lines lead with
        tabs and others with spaces
    """
    style: Optional[IndentStyle] = None
    unit: Optional[int] = None
    previous = 0
    for number, raw in enumerate(lines, start=1):
        line = _strip_terminator(raw)
        if not is_effective(line):
            continue
        run = leading_whitespace(line)
        if run:
            line_style = IndentStyle.TABS if run[0] == "\t" else IndentStyle.SPACES
            other = " " if line_style is IndentStyle.TABS else "\t"
            if other in run:
                raise MixedIndentation(f"line {number} mixes tabs and spaces")
            if style is None:
                style = line_style
            elif style is not line_style:
                raise MixedIndentation(
                    f"line {number} indents with {line_style.value}, "
                    f"earlier lines with {style.value}"
                )
        width = len(run)
        delta = abs(width - previous)
        if delta and (unit is None or delta < unit):
            unit = delta
        previous = width

    if unit is None:
        return IndentProfile()
    if style is IndentStyle.TABS:
        # one tab is one level, whatever the deltas say
        return IndentProfile(unit_width=1, style=IndentStyle.TABS)
    return IndentProfile(unit_width=unit, style=IndentStyle.SPACES)


def measure_lines(lines: Sequence[str], profile: IndentProfile) -> List[LineRecord]:
    """Compute the ``[f, b]`` pair of every effective line.

    Raises
    ------
    RaggedIndent
        when a leading width is not a multiple of ``profile.unit_width``
    """
    levels: List[Tuple[int, str, int]] = []
    for number, raw in enumerate(lines, start=1):
        line = _strip_terminator(raw)
        if not is_effective(line):
            continue
        width = len(leading_whitespace(line))
        if width % profile.unit_width:
            raise RaggedIndent(number, width, profile.unit_width)
        levels.append((number, line, width // profile.unit_width))

    records = []
    for position, (number, line, f) in enumerate(levels):
        b = levels[position + 1][2] if position + 1 < len(levels) else 0
        records.append(LineRecord(index=number, text=line, f=f, b=b))
    return records


def classify_transition(f: int, b: int) -> Transition:
    """Classify the step from a line at level ``f`` to the next at ``b``."""
    if f < 0 or b < 0:
        raise ValueError(f"indent levels must be >= 0, got f={f}, b={b}")
    diff = f - b
    if diff < 0:
        return Transition(TransitionKind.ENTER)
    if diff == 0:
        return Transition(TransitionKind.SAME)
    return Transition(TransitionKind.LEAVE, levels=diff)


def build_block_tree(lines: Sequence[str]) -> BlockTree:
    """Recover the nested blocks of a file in one pass.

    A block opens at every ENTER transition, its header being the line that
    produced it. Blocks close when the following effective line comes back to
    the header's level or above, or at the end of the file. An indent jump of
    several levels opens a single block.

    Parameters
    ----------
    lines : Sequence[str]
        raw lines, terminators allowed

    Returns
    -------
    BlockTree

    Raises
    ------
    MixedIndentation
    RaggedIndent
    """
    buffer = [_strip_terminator(line) for line in lines]
    profile = detect_indent_profile(buffer)
    records = measure_lines(buffer, profile)
    tree = BlockTree(lines=buffer, profile=profile, records=records)

    stack: List[BlockNode] = []
    for position, record in enumerate(records):
        transition = classify_transition(record.f, record.b)
        if transition.kind is TransitionKind.ENTER:
            body_start = records[position + 1].index
            node = BlockNode(
                header_index=record.index,
                header=record.text.strip(),
                start=body_start,
                end=body_start,
                depth=len(stack),
                level=record.f,
            )
            (stack[-1].children if stack else tree.roots).append(node)
            stack.append(node)
        elif transition.kind is TransitionKind.LEAVE:
            while stack and stack[-1].level >= record.b:
                closed = stack.pop()
                closed.end = record.index

    # a well-formed pass leaves nothing open since the last line has b = 0
    for node in stack:
        node.end = records[-1].index
    logger.debug(
        "built block tree: %d lines, %d blocks, unit %d",
        len(buffer),
        sum(1 for _ in tree.walk()),
        profile.unit_width,
    )
    return tree


def locate_block(tree: BlockTree, path: BlockPath) -> BlockNode:
    """Resolve a block path to its innermost block.

    Each signature is compared, after trimming, with the headers of the
    previously matched node's children (the top-level forest for the first
    one). Among matching siblings the first in line order wins.

    Raises
    ------
    BlockNotFound
        when a signature matches nothing at its level
    """
    candidates = tree.roots
    node: Optional[BlockNode] = None
    for depth, signature in enumerate(path.signatures):
        wanted = signature.strip()
        node = next((c for c in candidates if c.header == wanted), None)
        if node is None:
            raise BlockNotFound(signature, depth)
        candidates = node.children
    assert node is not None
    return node


def code_inds_list(lines: Sequence[str], signature: str) -> List[int]:
    """1-based indices of the lines equal to ``signature`` once both are trimmed."""
    wanted = signature.strip()
    return [
        number
        for number, line in enumerate(lines, start=1)
        if line.strip() == wanted
    ]


#  LocalWords:  ind
