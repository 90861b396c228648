"""Indentation control codec.

Four zero-width control bytes replace leading spaces: push enters one
indent level and records the level it came from, pop reverts to the
recorded level (past any boosts), boost raises the level without a stack
frame, and forward materializes the current level where it stands (the
encoder puts one at the start of every logical line, but a decoder honors
it anywhere, so a line prefix can precede the indent). The controls carry
level counts, not widths: decode with any unit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndentError, NonMultipleIndent, Pos, PopUnderflow
from .tree import COLON_NODE, DataAtom, Node, StructTree

_FORBIDDEN = frozenset((0x09, 0x0A, 0x0D))


@dataclass(frozen=True)
class IndentConfig:
    unit: int = 4
    push_byte: int = 0x1C
    pop_byte: int = 0x1D
    boost_byte: int = 0x1E
    forward_byte: int = 0x1F
    strict: bool = False

    def __post_init__(self):
        if self.unit < 1:
            raise IndentError("unit must be a positive number of spaces")
        controls = (self.push_byte, self.pop_byte, self.boost_byte, self.forward_byte)
        if len(set(controls)) != 4:
            raise IndentError("the four control bytes must be distinct")
        for b in controls:
            if b >= 0x20 or b in _FORBIDDEN:
                raise IndentError(
                    "control bytes must be C0 controls other than tab/LF/CR"
                )

    @property
    def control_set(self) -> frozenset[int]:
        return frozenset(
            (self.push_byte, self.pop_byte, self.boost_byte, self.forward_byte)
        )


def encode_indent(data: bytes, cfg: IndentConfig) -> bytes:
    """Replace leading spaces with control bytes: level changes as pushes or
    pops, then one forward byte, on every logical line. The encoder never
    emits boost (space-indented input cannot distinguish it from push).
    In strict mode every line's leading spaces must be a whole number of
    units and must not contain tabs."""
    out = bytearray()
    level = 0
    stack: list[int] = []
    offset = 0
    lineno = 0
    parts = data.split(b"\n")
    for idx, line in enumerate(parts):
        has_lf = idx < len(parts) - 1
        if not has_lf and not line:
            break
        lineno += 1
        spaces = 0
        while spaces < len(line) and line[spaces] == 0x20:
            spaces += 1
        if cfg.strict:
            lead = line[: len(line) - len(line.lstrip(b" \t"))]
            if b"\t" in lead:
                raise NonMultipleIndent(
                    "tab in leading whitespace has no defined width",
                    Pos(offset + lead.find(b"\t"), lineno, lead.find(b"\t") + 1),
                )
            if spaces % cfg.unit:
                raise NonMultipleIndent(
                    f"leading spaces ({spaces}) are not a multiple of the "
                    f"unit ({cfg.unit})",
                    Pos(offset, lineno, 1),
                )
        want = spaces // cfg.unit
        rem = spaces % cfg.unit
        while level > want:
            out.append(cfg.pop_byte)
            level = stack.pop()
        while level < want:
            out.append(cfg.push_byte)
            stack.append(level)
            level += 1
        out.append(cfg.forward_byte)
        out += b" " * rem
        out += line[spaces:]
        if has_lf:
            out.append(0x0A)
        offset += len(line) + 1
    return bytes(out)


def decode_indent(coded: bytes, cfg: IndentConfig) -> bytes:
    """Materialize indentation: forward becomes level*unit spaces, the other
    controls consume zero width and only move the level. The output contains
    none of the four control bytes."""
    out = bytearray()
    level = 0
    stack: list[int] = []
    push, pop, boost, fwd = (
        cfg.push_byte,
        cfg.pop_byte,
        cfg.boost_byte,
        cfg.forward_byte,
    )
    line = 1
    col = 1
    for offset, b in enumerate(coded):
        if b == push:
            stack.append(level)
            level += 1
        elif b == pop:
            if not stack:
                raise PopUnderflow(
                    "pop with no pushed indent level", Pos(offset, line, col)
                )
            level = stack.pop()
        elif b == boost:
            level += 1
        elif b == fwd:
            out += b" " * (level * cfg.unit)
        else:
            out.append(b)
            if b == 0x0A:
                line += 1
                col = 0
        col += 1
    return bytes(out)


def render_outline(tree: StructTree, cfg: IndentConfig) -> bytes:
    """Render a tree as a control-coded outline: one line per node (its data
    atoms joined by single spaces), children one level deeper. Descending
    into a regular node's children uses push..pop; descending into a
    colon-opened node's children uses a single boost, so the enclosing
    group's pop reverts the boost along with its own frame."""
    out = bytearray()

    def line(node: Node):
        out.append(cfg.forward_byte)
        out.extend(b" ".join(a.data for a in node.data_atoms()))
        out.append(0x0A)

    def walk(node: Node):
        line(node)
        kids = node.child_nodes()
        if kids:
            colonish = node.kind == COLON_NODE
            out.append(cfg.boost_byte if colonish else cfg.push_byte)
            for kid in kids:
                walk(kid)
            if not colonish:
                out.append(cfg.pop_byte)

    root = tree.root
    if root.data_atoms():
        line(root)
    for kid in root.child_nodes():
        walk(kid)
    return bytes(out)
