"""Parsing token streams into trees, balance validation, and stream stats.

Parse rules: a Close pops any pending shared-close frames (opened by colons,
or by separators that replaced a colon frame) and then exactly one bracket
frame of the matching kind. An open mark wraps everything accumulated in the
current frame into a new child whose open is shared with the enclosing open.
A separator of depth d closes d plain frames and opens d fresh ones. A comma
stands for an empty plain child between its neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dialect import Dialect
from .errors import (
    ColonAtTopLevel,
    MismatchedCloseKind,
    OpenMarkAtTopLevel,
    ParseError,
    SeparatorUnderflow,
    UnbalancedClose,
    UnclosedOpen,
)
from .stream import (
    CLOSE,
    COLON,
    COMMA,
    DATA,
    OPEN,
    OPEN_MARK,
    SEPARATOR,
    STRUCTURAL_KINDS,
    TYPE_SIGIL,
    TYPED_OPEN,
    WS,
    Token,
    TokenStream,
    make_close,
    make_open,
)

ROOT = "root"
COLON_NODE = "colon"
MARK_NODE = "mark"


@dataclass
class DataAtom:
    data: bytes


@dataclass
class WsRun:
    data: bytes


@dataclass
class TypeAtom:
    name: bytes


@dataclass
class Node:
    """kind is ROOT, a bracket kind index, ("typed", name), COLON_NODE for
    colon-opened children, or MARK_NODE for mark-closed children."""

    kind: object
    items: list = field(default_factory=list)

    def child_nodes(self):
        return [it for it in self.items if isinstance(it, Node)]

    def data_atoms(self):
        return [it for it in self.items if isinstance(it, DataAtom)]


@dataclass
class StructTree:
    root: Node
    dialect: Dialect

    def to_stream(self) -> TokenStream:
        """Unparse into canonical two-symbol bracket form (colon- and
        mark-opened nodes become plain brackets)."""
        d = self.dialect
        toks: list[Token] = []

        def emit(node: Node):
            for it in node.items:
                if isinstance(it, Node):
                    kind = it.kind
                    if kind in (COLON_NODE, MARK_NODE):
                        kind = 0
                    if isinstance(kind, tuple):
                        _, name = kind
                        lex = bytes([d.typed_open]) + name
                        toks.append(Token(TYPED_OPEN, lex, k=d.typed_kind, name=name))
                        emit(it)
                        toks.append(make_close(d, d.typed_kind))
                    else:
                        toks.append(make_open(d, kind))
                        emit(it)
                        toks.append(make_close(d, kind))
                elif isinstance(it, DataAtom):
                    toks.append(Token(DATA, it.data))
                elif isinstance(it, WsRun):
                    toks.append(Token(WS, it.data))
                elif isinstance(it, TypeAtom):
                    toks.append(Token(TYPE_SIGIL, bytes([d.type_sigil]) + it.name, name=it.name))

        emit(self.root)
        return TokenStream(toks, d)


class _Frame:
    __slots__ = ("kind", "shared", "node", "tok")

    def __init__(self, kind, shared, node, tok):
        self.kind = kind  # None=root, int, or ("typed", kind_index)
        self.shared = shared  # close is shared with the enclosing close
        self.node = node
        self.tok = tok


def _scan(stream: TokenStream, collect: list | None):
    """Shared machine for parse (collect=None: raise on first error) and
    validate (collect: record errors and recover)."""

    def fail(exc: ParseError):
        if collect is None:
            raise exc
        collect.append(exc)

    root = Node(ROOT)
    stack = [_Frame(None, False, root, None)]

    for tok in stream.tokens:
        kind = tok.kind
        top = stack[-1]
        if kind == DATA:
            top.node.items.append(DataAtom(tok.lexeme))
        elif kind == WS:
            top.node.items.append(WsRun(tok.lexeme))
        elif kind == OPEN:
            child = Node(tok.k)
            top.node.items.append(child)
            stack.append(_Frame(tok.k, False, child, tok))
        elif kind == TYPED_OPEN:
            child = Node(("typed", tok.name))
            top.node.items.append(child)
            stack.append(_Frame(("typed", tok.k), False, child, tok))
        elif kind == CLOSE:
            while stack[-1].shared:
                stack.pop()
            frame = stack[-1]
            if frame.kind is None:
                fail(UnbalancedClose("unmatched closing bracket", tok.pos))
                continue
            want = frame.kind[1] if isinstance(frame.kind, tuple) else frame.kind
            if want != tok.k:
                fail(
                    MismatchedCloseKind(
                        "closing bracket does not match the open bracket kind",
                        tok.pos,
                    )
                )
            stack.pop()
        elif kind == COLON:
            if top.kind is None and not top.shared:
                fail(ColonAtTopLevel("colon has no enclosing close", tok.pos))
                continue
            child = Node(COLON_NODE)
            top.node.items.append(child)
            stack.append(_Frame(0, True, child, tok))
        elif kind == OPEN_MARK:
            if top.kind is None and not top.shared:
                fail(OpenMarkAtTopLevel("open mark has no enclosing open", tok.pos))
                continue
            wrapped = Node(MARK_NODE, top.node.items)
            top.node.items = [wrapped]
        elif kind == SEPARATOR:
            depth = tok.depth
            if len(stack) - 1 < depth:
                fail(
                    SeparatorUnderflow(
                        f"separator of depth {depth} exceeds nesting depth "
                        f"{len(stack) - 1}",
                        tok.pos,
                    )
                )
                continue
            popped = []
            bad = None
            for _ in range(depth):
                fr = stack[-1]
                if fr.kind != 0:
                    bad = MismatchedCloseKind(
                        "separator closes a non-plain bracket", tok.pos
                    )
                popped.append(stack.pop())
            if bad is not None:
                fail(bad)
            # reopen outermost-first, each level keeping its shared status
            for fr in reversed(popped):
                child = Node(COLON_NODE if fr.shared else 0)
                stack[-1].node.items.append(child)
                stack.append(_Frame(0, fr.shared, child, tok))
        elif kind == COMMA:
            top.node.items.append(Node(0))
        elif kind == TYPE_SIGIL:
            top.node.items.append(TypeAtom(tok.name))

    for frame in stack[1:]:
        if not frame.shared:
            fail(
                UnclosedOpen(
                    "opening bracket is never closed",
                    frame.tok.pos if frame.tok else None,
                )
            )

    return StructTree(root, stream.dialect)


def parse(stream: TokenStream) -> StructTree:
    """Parse a balanced stream into a tree; raises on the first violation."""
    return _scan(stream, None)


def validate(stream: TokenStream) -> list[ParseError]:
    """Collect every balance/nesting violation with positions. Never raises."""
    errors: list[ParseError] = []
    _scan(stream, errors)
    return errors


# -- statistics ----------------------------------------------------------------


@dataclass
class StatsReport:
    byte_count: int
    token_counts: dict[str, int]
    paren_count: int
    structural_fraction: float
    max_depth: int | None
    depth_histogram: dict[int, int] | None

    def to_kv(self) -> str:
        parts = [
            f"byte_count={self.byte_count}",
            f"paren_count={self.paren_count}",
            f"structural_fraction={self.structural_fraction:.6f}",
        ]
        for name in sorted(self.token_counts):
            parts.append(f"count_{name.lower()}={self.token_counts[name]}")
        if self.max_depth is not None:
            parts.append(f"max_depth={self.max_depth}")
            hist = " ".join(
                f"{d}:{c}" for d, c in sorted(self.depth_histogram.items())
            )
            parts.append(f"depth_histogram={hist}")
        return "\n".join(parts)

    def to_text(self) -> str:
        rows = [
            ("bytes", str(self.byte_count)),
            ("parens", str(self.paren_count)),
            ("structural fraction", f"{self.structural_fraction:.4f}"),
        ]
        for name in sorted(self.token_counts):
            rows.append((name.lower() + " tokens", str(self.token_counts[name])))
        if self.max_depth is not None:
            rows.append(("max depth", str(self.max_depth)))
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def _depths(tree: StructTree) -> dict[int, int]:
    hist: dict[int, int] = {}
    work = [(child, 1) for child in tree.root.child_nodes()]
    while work:
        node, depth = work.pop()
        hist[depth] = hist.get(depth, 0) + 1
        for child in node.child_nodes():
            work.append((child, depth + 1))
    return hist


def stats(stream: TokenStream) -> StatsReport:
    """Exact token/byte counts; depth fields are present only when the
    stream is balanced."""
    counts: dict[str, int] = {}
    byte_count = 0
    structural_bytes = 0
    parens = 0
    for tok in stream.tokens:
        counts[tok.kind.name] = counts.get(tok.kind.name, 0) + 1
        byte_count += len(tok.lexeme)
        if tok.kind in STRUCTURAL_KINDS:
            structural_bytes += len(tok.lexeme)
        if tok.kind in (OPEN, CLOSE, TYPED_OPEN):
            parens += 1
    fraction = structural_bytes / byte_count if byte_count else 0.0
    try:
        tree = parse(stream)
    except ParseError:
        max_depth = None
        hist = None
    else:
        hist = _depths(tree)
        max_depth = max(hist) if hist else 0
    return StatsReport(byte_count, counts, parens, fraction, max_depth, hist)


# -- structural comparison -----------------------------------------------------


def _norm_kind(kind):
    return 0 if kind in (COLON_NODE, MARK_NODE) else kind


def structural_equal(a: Node, b: Node, ignore_ws: bool = True) -> bool:
    """Tree isomorphism: colon- and mark-opened nodes count as plain, and
    whitespace runs are skipped when ignore_ws is set (separators move
    whitespace across frame boundaries)."""
    if _norm_kind(a.kind) != _norm_kind(b.kind):
        return False

    def sig(items):
        out = []
        for it in items:
            if isinstance(it, WsRun) and ignore_ws:
                continue
            out.append(it)
        return out

    ia, ib = sig(a.items), sig(b.items)
    if len(ia) != len(ib):
        return False
    for x, y in zip(ia, ib):
        if isinstance(x, Node) != isinstance(y, Node):
            return False
        if isinstance(x, Node):
            if not structural_equal(x, y, ignore_ws):
                return False
        elif type(x) is not type(y):
            return False
        elif isinstance(x, DataAtom) and x.data != y.data:
            return False
        elif isinstance(x, WsRun) and x.data != y.data:
            return False
        elif isinstance(x, TypeAtom) and x.name != y.name:
            return False
    return True
