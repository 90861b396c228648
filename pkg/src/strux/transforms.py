"""Reversible stream rewrites.

Collapse direction: a plain inner bracket whose close lands directly against
the enclosing close (only whitespace between) is replaced by a single colon,
eliminating every run of closing brackets. The mirrored rewrite replaces an
inner open that leans against the enclosing open with an open mark after the
subtree. Separators fold ``close open`` boundaries into one token, and the
universal-close rewrite erases close kinds recoverable by a stack.

Bracket matching inside the colon/open-mark rewrites is blind to separators
and commas: a separator bridges a list, so the colon that replaces a
collapsed frame may come to sit at the head of a list that the separator
continues. Running the separator transform first and the colon transform
second is what makes that blindness correct; the inverse therefore expands
colons first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ColonAtTopLevel,
    MismatchedCloseKind,
    OpenMarkAtTopLevel,
    SeparatorUnderflow,
    TransformError,
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
    TYPE_SIGIL,
    TYPED_OPEN,
    WS,
    Token,
    TokenStream,
    make_close,
    make_colon,
    make_comma,
    make_open,
    make_open_mark,
    make_separator,
)
from .tree import validate

OPS = ("sep", "colon", "opening", "ucb")


@dataclass(frozen=True)
class Profile:
    """Transform configuration.

    ``table`` style renders depth-1 separators with the comma glyph and does
    no null-child rewrite; ``prose`` style renders them with the cousin glyph
    and additionally turns an empty plain pair flanked by data into a comma.
    """

    style: str = "table"
    enabled: frozenset = frozenset()
    fold_depth: int = 1
    colon_only_terminal: bool = False

    def __post_init__(self):
        object.__setattr__(self, "enabled", frozenset(self.enabled))
        if self.style not in ("table", "prose"):
            raise TransformError(f"unknown style {self.style!r}")
        bad = self.enabled - set(OPS)
        if bad:
            raise TransformError(f"unknown ops: {', '.join(sorted(bad))}")
        if "colon" in self.enabled and "opening" in self.enabled:
            raise TransformError("'colon' and 'opening' are mutually exclusive")
        if self.fold_depth < 1:
            raise TransformError("fold_depth must be at least 1")


# -- matching helpers ----------------------------------------------------------


def _forbid(stream: TokenStream, kind, what: str):
    for t in stream.tokens:
        if t.kind == kind:
            raise TransformError(f"{what} token present in input", t.pos)


def _blind_close_opens(stream: TokenStream) -> dict[int, int]:
    """Map each CLOSE index to the index of its bracket open, matching
    blind to separators and commas. Colons open frames that share the next
    enclosing close."""
    opens: dict[int, int] = {}
    stack: list[tuple[str, int]] = []  # ("b"|"c", token index)
    for i, t in enumerate(stream.tokens):
        kind = t.kind
        if kind in (OPEN, TYPED_OPEN):
            stack.append(("b", i))
        elif kind == COLON:
            if not stack:
                raise ColonAtTopLevel("colon has no enclosing close", t.pos)
            stack.append(("c", i))
        elif kind == CLOSE:
            while stack and stack[-1][0] == "c":
                stack.pop()
            if not stack:
                raise UnbalancedClose("unmatched closing bracket", t.pos)
            opens[i] = stack.pop()[1]
    for tag, i in stack:
        if tag == "b":
            raise UnclosedOpen(
                "opening bracket is never closed", stream.tokens[i].pos
            )
    return opens


def _blind_open_closes(stream: TokenStream) -> dict[int, int]:
    """Mirror of _blind_close_opens: map each plain-relevant OPEN index to
    its close, with open marks acting as closes of omitted shared opens."""
    closes: dict[int, int] = {}
    stack: list[int] = []
    for i, t in enumerate(stream.tokens):
        kind = t.kind
        if kind in (OPEN, TYPED_OPEN):
            stack.append(i)
        elif kind == OPEN_MARK:
            if not stack:
                raise OpenMarkAtTopLevel("open mark has no enclosing open", t.pos)
        elif kind == CLOSE:
            if not stack:
                raise UnbalancedClose("unmatched closing bracket", t.pos)
            closes[stack.pop()] = i
    if stack:
        raise UnclosedOpen(
            "opening bracket is never closed", stream.tokens[stack[0]].pos
        )
    return closes


def _next_nonws(tokens: list[Token]) -> list[int]:
    """next_nonws[i] = index of the first non-WS token after i, or -1."""
    out = [-1] * len(tokens)
    nxt = -1
    for i in range(len(tokens) - 1, -1, -1):
        out[i] = nxt
        if tokens[i].kind != WS:
            nxt = i
    return out


def _prev_nonws(tokens: list[Token]) -> list[int]:
    out = [-1] * len(tokens)
    prev = -1
    for i, t in enumerate(tokens):
        out[i] = prev
        if t.kind != WS:
            prev = i
    return out


# -- colon (closing-3) ---------------------------------------------------------


def colon_collapse(stream: TokenStream, *, terminal_only: bool = False) -> TokenStream:
    """Replace every plain inner bracket whose close directly precedes
    another close (whitespace permitted between) with a colon. The result
    contains no run of closing brackets. With ``terminal_only`` the two
    closes must be strictly adjacent."""
    _forbid(stream, OPEN_MARK, "open mark")
    make_colon(stream.dialect)  # fail early if the dialect cannot express it
    toks = stream.tokens
    opens_of = _blind_close_opens(stream)
    nxt = _next_nonws(toks)
    collapse: set[int] = set()
    drop: set[int] = set()
    for ci, oi in opens_of.items():
        t = toks[oi]
        if t.kind != OPEN or t.k != 0:
            continue
        if terminal_only:
            follows = ci + 1 if ci + 1 < len(toks) else -1
        else:
            follows = nxt[ci]
        if follows >= 0 and toks[follows].kind == CLOSE:
            collapse.add(oi)
            drop.add(ci)
    colon = make_colon(stream.dialect)
    out = []
    for i, t in enumerate(toks):
        if i in drop:
            continue
        if i in collapse:
            out.append(Token(COLON, colon.lexeme, pos=t.pos))
        else:
            out.append(t)
    return stream.replaced(out)


def colon_expand(stream: TokenStream) -> TokenStream:
    """Exact inverse of colon_collapse on collapse output: each colon becomes
    a plain open, and its close is re-inserted immediately before the close
    that terminates it (ahead of any whitespace run sitting against that
    close). Separators and commas are opaque."""
    _forbid(stream, OPEN_MARK, "open mark")
    d = stream.dialect
    out: list[Token] = []
    stack: list[tuple[str, Token]] = []
    for t in stream.tokens:
        kind = t.kind
        if kind in (OPEN, TYPED_OPEN):
            stack.append(("b", t))
            out.append(t)
        elif kind == COLON:
            if not stack:
                raise ColonAtTopLevel("colon has no enclosing close", t.pos)
            stack.append(("c", t))
            out.append(Token(OPEN, bytes([d.open_byte(0)]), k=0, pos=t.pos))
        elif kind == CLOSE:
            pending = 0
            while stack and stack[-1][0] == "c":
                stack.pop()
                pending += 1
            if not stack:
                raise UnbalancedClose("unmatched closing bracket", t.pos)
            stack.pop()
            if pending:
                at = len(out)
                while at > 0 and out[at - 1].kind == WS:
                    at -= 1
                out[at:at] = [make_close(d, 0) for _ in range(pending)]
            out.append(t)
        else:
            out.append(t)
    for tag, t in stack:
        if tag == "b":
            raise UnclosedOpen("opening bracket is never closed", t.pos)
    return stream.replaced(out)


# -- mirroring and the opening-3 system ----------------------------------------


def reverse_mirror(stream: TokenStream) -> TokenStream:
    """Reverse the stream and swap directions: opens become closes of the
    same kind, colons become open marks and vice versa, and data/whitespace
    bytes reverse. An involution. Typed opens and type sigils cannot be
    mirrored (their lexemes carry trailing names)."""
    d = stream.dialect
    out: list[Token] = []
    for t in reversed(stream.tokens):
        kind = t.kind
        if kind == OPEN:
            out.append(Token(CLOSE, bytes([d.close_byte(t.k)]), k=t.k, pos=t.pos))
        elif kind == CLOSE:
            out.append(Token(OPEN, bytes([d.open_byte(t.k)]), k=t.k, pos=t.pos))
        elif kind == COLON:
            out.append(Token(OPEN_MARK, make_open_mark(d).lexeme, pos=t.pos))
        elif kind == OPEN_MARK:
            out.append(Token(COLON, make_colon(d).lexeme, pos=t.pos))
        elif kind in (DATA, WS):
            out.append(Token(kind, t.lexeme[::-1], pos=t.pos))
        elif kind in (SEPARATOR, COMMA):
            out.append(t)
        else:
            raise TransformError(
                f"{kind.name} token cannot be mirrored", t.pos
            )
    return stream.replaced(out)


def open_collapse(stream: TokenStream, *, terminal_only: bool = False) -> TokenStream:
    """Mirror of colon_collapse: a plain inner bracket whose open directly
    follows another open is dropped and its close becomes an open mark. The
    result contains no run of opening brackets."""
    _forbid(stream, COLON, "colon")
    make_open_mark(stream.dialect)
    toks = stream.tokens
    closes_of = _blind_open_closes(stream)
    prev = _prev_nonws(toks)
    drop: set[int] = set()
    to_mark: set[int] = set()
    for oi, ci in closes_of.items():
        t = toks[oi]
        if t.kind != OPEN or t.k != 0:
            continue
        if terminal_only:
            before = oi - 1
        else:
            before = prev[oi]
        if before >= 0 and toks[before].kind in (OPEN, TYPED_OPEN):
            drop.add(oi)
            to_mark.add(ci)
    mark = make_open_mark(stream.dialect)
    out = []
    for i, t in enumerate(toks):
        if i in drop:
            continue
        if i in to_mark:
            out.append(Token(OPEN_MARK, mark.lexeme, pos=t.pos))
        else:
            out.append(t)
    return stream.replaced(out)


def open_expand(stream: TokenStream) -> TokenStream:
    """Exact inverse of open_collapse on collapse output: each open mark
    becomes a plain close, and the omitted open is re-inserted immediately
    after the shared enclosing open (behind any whitespace run)."""
    _forbid(stream, COLON, "colon")
    d = stream.dialect
    out: list[Token] = []
    frames: list[list] = []  # [out index of the open, pending mark count]
    inserts: list[tuple[int, int]] = []
    for t in stream.tokens:
        kind = t.kind
        if kind in (OPEN, TYPED_OPEN):
            frames.append([len(out), 0])
            out.append(t)
        elif kind == OPEN_MARK:
            if not frames:
                raise OpenMarkAtTopLevel("open mark has no enclosing open", t.pos)
            frames[-1][1] += 1
            out.append(Token(CLOSE, bytes([d.close_byte(0)]), k=0, pos=t.pos))
        elif kind == CLOSE:
            if not frames:
                raise UnbalancedClose("unmatched closing bracket", t.pos)
            at, marks = frames.pop()
            if marks:
                inserts.append((at, marks))
            out.append(t)
        else:
            out.append(t)
    if frames:
        raise UnclosedOpen(
            "opening bracket is never closed", out[frames[0][0]].pos
        )
    for at, marks in sorted(inserts, reverse=True):
        point = at + 1
        while point < len(out) and out[point].kind == WS:
            point += 1
        out[point:point] = [make_open(d, 0) for _ in range(marks)]
    return stream.replaced(out)


# -- separators and null children -----------------------------------------------


def sep_collapse(stream: TokenStream, profile: Profile) -> TokenStream:
    """Fold plain ``close [ws] open`` boundaries into separator tokens, at
    most ``fold_depth`` pairs per boundary. In prose style an empty plain
    pair with data immediately on both sides becomes a comma (a null
    child)."""
    _forbid(stream, COLON, "colon")
    _forbid(stream, OPEN_MARK, "open mark")
    errors = validate(stream)
    if errors:
        raise errors[0]
    d = stream.dialect
    toks = stream.tokens
    n = len(toks)
    out: list[Token] = []
    i = 0
    while i < n:
        t = toks[i]
        if t.kind == CLOSE and t.k == 0:
            m = 0
            while i + m < n and toks[i + m].kind == CLOSE and toks[i + m].k == 0:
                m += 1
            j = i + m
            w = 0
            while j + w < n and toks[j + w].kind == WS:
                w += 1
            o = 0
            while (
                j + w + o < n
                and toks[j + w + o].kind == OPEN
                and toks[j + w + o].k == 0
            ):
                o += 1
            fold = min(m, o, profile.fold_depth)
            if fold >= 1:
                out.extend(toks[i : i + m - fold])
                if fold == 1 and profile.style == "table":
                    out.append(make_comma(d))
                else:
                    out.append(make_separator(d, fold))
                out.extend(toks[j : j + w])
                out.extend(toks[j + w + fold : j + w + o])
                i = j + w + o
                continue
            out.extend(toks[i:j])
            i = j
            continue
        out.append(t)
        i += 1

    if profile.style == "prose":
        folded = out
        out = []
        i = 0
        while i < len(folded):
            t = folded[i]
            if (
                t.kind == OPEN
                and t.k == 0
                and i + 1 < len(folded)
                and folded[i + 1].kind == CLOSE
                and folded[i + 1].k == 0
                and out
                and out[-1].kind == DATA
                and i + 2 < len(folded)
                and folded[i + 2].kind == DATA
            ):
                out.append(make_comma(d))
                i += 2
                continue
            out.append(t)
            i += 1
    return stream.replaced(out)


def sep_expand(stream: TokenStream, profile: Profile) -> TokenStream:
    """Inverse of sep_collapse: a separator of depth d becomes d plain closes
    followed (after any adjacent whitespace) by d plain opens; a comma
    becomes close+open in table style and an empty plain pair in prose
    style."""
    d = stream.dialect
    toks = stream.tokens
    n = len(toks)
    out: list[Token] = []
    depth = 0
    i = 0

    def burst(count: int, pos):
        nonlocal i
        if depth < count:
            raise SeparatorUnderflow(
                f"separator of depth {count} exceeds nesting depth {depth}", pos
            )
        out.extend(make_close(d, 0) for _ in range(count))
        i += 1
        while i < n and toks[i].kind == WS:
            out.append(toks[i])
            i += 1
        out.extend(make_open(d, 0) for _ in range(count))

    while i < n:
        t = toks[i]
        kind = t.kind
        if kind == SEPARATOR:
            burst(t.depth, t.pos)
            continue
        if kind == COMMA:
            if profile.style == "table":
                burst(1, t.pos)
                continue
            out.append(make_open(d, 0))
            out.append(make_close(d, 0))
            i += 1
            continue
        if kind in (OPEN, TYPED_OPEN, COLON):
            depth += 1
        elif kind == CLOSE:
            depth = max(depth - 1, 0)
        out.append(t)
        i += 1
    return stream.replaced(out)


def both_collapse(stream: TokenStream, profile: Profile) -> TokenStream:
    """Separator fold then colon collapse; the colon pass is blind to the
    separators, which lets a colon migrate to the head of a list."""
    folded = sep_collapse(stream, profile)
    return colon_collapse(folded, terminal_only=profile.colon_only_terminal)


def both_expand(stream: TokenStream, profile: Profile) -> TokenStream:
    """Colon expansion first, then separator expansion; the other order can
    misread a colon that opens the last item of a list."""
    return sep_expand(colon_expand(stream), profile)


# -- universal closing bracket ---------------------------------------------------


def universal_close(stream: TokenStream) -> TokenStream:
    """Render every close with the universal closing glyph. The input must
    be properly nested: misnesting cannot be expressed once close kinds are
    erased, so it is rejected up front."""
    d = stream.dialect
    if d.universal_kind is None:
        raise TransformError(f"dialect {d.name!r} has no universal close glyph")
    errors = validate(stream)
    if errors:
        raise errors[0]
    uk = d.universal_kind
    lex = bytes([d.universal_close_glyph])
    out = [
        Token(CLOSE, lex, k=uk, pos=t.pos) if t.kind == CLOSE else t
        for t in stream.tokens
    ]
    return stream.replaced(out)


def restore_typed_close(stream: TokenStream) -> TokenStream:
    """Inverse of universal_close: rewrite every close to the close byte of
    its matching open's kind, by stack."""
    d = stream.dialect
    out: list[Token] = []
    stack: list[tuple[object, bool]] = []  # (kind, shared_close)
    for t in stream.tokens:
        kind = t.kind
        if kind == OPEN:
            stack.append((t.k, False))
            out.append(t)
        elif kind == TYPED_OPEN:
            stack.append((("typed", t.k), False))
            out.append(t)
        elif kind == COLON:
            if not stack:
                raise ColonAtTopLevel("colon has no enclosing close", t.pos)
            stack.append((0, True))
            out.append(t)
        elif kind == OPEN_MARK:
            if not stack:
                raise OpenMarkAtTopLevel("open mark has no enclosing open", t.pos)
            out.append(t)
        elif kind == SEPARATOR or kind == COMMA:
            if kind == SEPARATOR:
                count = t.depth
                if len(stack) < count:
                    raise SeparatorUnderflow(
                        f"separator of depth {count} exceeds nesting depth "
                        f"{len(stack)}",
                        t.pos,
                    )
                shared = []
                for _ in range(count):
                    fk, s = stack.pop()
                    if fk != 0:
                        raise MismatchedCloseKind(
                            "separator closes a non-plain bracket", t.pos
                        )
                    shared.append(s)
                for s in reversed(shared):
                    stack.append((0, s))
            out.append(t)
        elif kind == CLOSE:
            while stack and stack[-1][1]:
                stack.pop()
            if not stack:
                raise UnbalancedClose("unmatched closing bracket", t.pos)
            fk, _ = stack.pop()
            bk = fk[1] if isinstance(fk, tuple) else fk
            out.append(Token(CLOSE, bytes([d.close_byte(bk)]), k=bk, pos=t.pos))
        else:
            out.append(t)
    for fk, shared in stack:
        if not shared:
            raise UnclosedOpen("opening bracket is never closed")
    return stream.replaced(out)


# -- pipelines --------------------------------------------------------------------


def pipeline(stream: TokenStream, profile: Profile) -> TokenStream:
    """Apply the enabled transforms in canonical order:
    sep, then colon or opening, then ucb."""
    out = stream
    if "sep" in profile.enabled:
        out = sep_collapse(out, profile)
    if "colon" in profile.enabled:
        out = colon_collapse(out, terminal_only=profile.colon_only_terminal)
    if "opening" in profile.enabled:
        out = open_collapse(out, terminal_only=profile.colon_only_terminal)
    if "ucb" in profile.enabled:
        out = universal_close(out)
    return out


def pipeline_inverse(stream: TokenStream, profile: Profile) -> TokenStream:
    """Apply the exact inverses in reverse order."""
    out = stream
    if "ucb" in profile.enabled:
        out = restore_typed_close(out)
    if "colon" in profile.enabled:
        out = colon_expand(out)
    if "opening" in profile.enabled:
        out = open_expand(out)
    if "sep" in profile.enabled:
        out = sep_expand(out, profile)
    return out
