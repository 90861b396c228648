"""Tokens and the byte-faithful tokenizer.

Every byte of input lands in exactly one token and rendering is just the
concatenation of token lexemes, so ``render(tokenize(b, d)) == b`` for any
byte string. Structural glyphs become one-byte tokens (typed opens and
separator depths carry their trailing name/numeral), skip regions become
single Data tokens, and maximal runs of unreserved bytes become Data or
Ws tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import IntEnum

from .dialect import Dialect
from .errors import Pos, UnterminatedSkip


class TokenKind(IntEnum):
    OPEN = 0
    CLOSE = 1
    COLON = 2
    OPEN_MARK = 3
    SEPARATOR = 4
    COMMA = 5
    TYPED_OPEN = 6
    TYPE_SIGIL = 7
    DATA = 8
    WS = 9


OPEN = TokenKind.OPEN
CLOSE = TokenKind.CLOSE
COLON = TokenKind.COLON
OPEN_MARK = TokenKind.OPEN_MARK
SEPARATOR = TokenKind.SEPARATOR
COMMA = TokenKind.COMMA
TYPED_OPEN = TokenKind.TYPED_OPEN
TYPE_SIGIL = TokenKind.TYPE_SIGIL
DATA = TokenKind.DATA
WS = TokenKind.WS

STRUCTURAL_KINDS = frozenset(
    (OPEN, CLOSE, COLON, OPEN_MARK, SEPARATOR, COMMA, TYPED_OPEN, TYPE_SIGIL)
)

_NAME_RE = re.compile(rb"[A-Za-z0-9_]*")
_DEPTH_RE = re.compile(rb"[1-9][0-9]*")


@dataclass(slots=True)
class Token:
    """One lexeme. ``k`` is the bracket kind for OPEN/CLOSE/TYPED_OPEN,
    ``depth`` the cousin depth for SEPARATOR, ``name`` the trailing name for
    TYPED_OPEN/TYPE_SIGIL. Positions are informational and ignored by
    equality; tokens minted by transforms have ``pos=None``."""

    kind: TokenKind
    lexeme: bytes
    k: int = -1
    depth: int = 0
    name: bytes = b""
    pos: Pos | None = None

    def __eq__(self, other):
        if not isinstance(other, Token):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.lexeme == other.lexeme
            and self.k == other.k
            and self.depth == other.depth
            and self.name == other.name
        )

    def __repr__(self):
        return f"Token({self.kind.name}, {self.lexeme!r})"


@dataclass
class TokenStream:
    tokens: list[Token]
    dialect: Dialect

    def render(self) -> bytes:
        return b"".join(t.lexeme for t in self.tokens)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]

    def __eq__(self, other):
        if not isinstance(other, TokenStream):
            return NotImplemented
        return self.tokens == other.tokens

    def replaced(self, tokens: list[Token]) -> "TokenStream":
        return TokenStream(tokens, self.dialect)

    def count(self, kind: TokenKind) -> int:
        return sum(1 for t in self.tokens if t.kind == kind)


# -- token constructors for transform-minted tokens ---------------------------


def make_open(d: Dialect, kind: int = 0) -> Token:
    return Token(OPEN, bytes([d.open_byte(kind)]), k=kind)


def make_close(d: Dialect, kind: int = 0) -> Token:
    return Token(CLOSE, bytes([d.close_byte(kind)]), k=kind)


def make_colon(d: Dialect) -> Token:
    from .errors import TransformError

    if d.colon_glyph is None:
        raise TransformError(f"dialect {d.name!r} has no colon glyph")
    return Token(COLON, bytes([d.colon_glyph]))


def make_open_mark(d: Dialect) -> Token:
    from .errors import TransformError

    if d.open_mark_glyph is None:
        raise TransformError(f"dialect {d.name!r} has no open-mark glyph")
    return Token(OPEN_MARK, bytes([d.open_mark_glyph]))


def make_comma(d: Dialect) -> Token:
    from .errors import TransformError

    if d.comma_glyph is None:
        raise TransformError(f"dialect {d.name!r} has no comma glyph")
    return Token(COMMA, bytes([d.comma_glyph]))


def make_separator(d: Dialect, depth: int) -> Token:
    from .errors import TransformError

    if d.cousin_glyph is None:
        raise TransformError(f"dialect {d.name!r} has no cousin separator glyph")
    lex = bytes([d.cousin_glyph]) + (str(depth).encode() if depth > 1 else b"")
    return Token(SEPARATOR, lex, depth=depth)


# -- tokenizer -----------------------------------------------------------------


def _scan_skip(data: bytes, i: int, end: int, esc: int | None) -> int:
    """Return the index one past the region's end byte, or -1 if unterminated."""
    j = i + 1
    n = len(data)
    if esc is not None and esc == end:
        # doubled-delimiter escaping, e.g. '' inside '...'
        while j < n:
            if data[j] == end:
                if j + 1 < n and data[j + 1] == end:
                    j += 2
                    continue
                return j + 1
            j += 1
        return -1
    while j < n:
        b = data[j]
        if esc is not None and b == esc:
            j += 2
            continue
        if b == end:
            return j + 1
        j += 1
    return -1


def tokenize(data: bytes, dialect: Dialect) -> TokenStream:
    """Tokenize a byte string. Never rejects content; the only error is an
    unterminated skip region."""
    toks: list[Token] = []
    append = toks.append
    n = len(data)
    open_kind = dialect.open_kind
    close_kind = dialect.close_kind
    typed_open = dialect.typed_open
    skip_starts = dialect.skip_starts
    ws_set = dialect.ws_set
    colon = dialect.colon_glyph
    mark = dialect.open_mark_glyph
    comma = dialect.comma_glyph
    cousin = dialect.cousin_glyph
    sigil = dialect.type_sigil

    # data runs stop at reserved glyphs, whitespace and skip starts
    stop = set(dialect.reserved_bytes) | set(ws_set)
    data_re = re.compile(
        b"[^" + re.escape(bytes(sorted(stop))) + b"]+" if stop else b".+",
        re.DOTALL,
    )
    ws_re = re.compile(b"[" + re.escape(bytes(sorted(ws_set))) + b"]+") if ws_set else None

    i = 0
    line = 1
    col = 1

    def advance(lexeme: bytes):
        nonlocal line, col
        nl = lexeme.count(b"\n")
        if nl:
            line += nl
            col = len(lexeme) - lexeme.rfind(b"\n")
        else:
            col += len(lexeme)

    while i < n:
        b = data[i]
        pos = Pos(i, line, col)
        if b in skip_starts:
            end, esc = skip_starts[b]
            j = _scan_skip(data, i, end, esc)
            if j < 0:
                raise UnterminatedSkip(
                    f"unterminated skip region starting with {chr(b)!r}", pos
                )
            lex = data[i:j]
            append(Token(DATA, lex, pos=pos))
        elif b == typed_open:
            m = _NAME_RE.match(data, i + 1)
            lex = data[i : m.end()]
            append(Token(TYPED_OPEN, lex, k=open_kind[b], name=data[i + 1 : m.end()], pos=pos))
        elif b in open_kind:
            lex = data[i : i + 1]
            append(Token(OPEN, lex, k=open_kind[b], pos=pos))
        elif b in close_kind:
            lex = data[i : i + 1]
            append(Token(CLOSE, lex, k=close_kind[b], pos=pos))
        elif b == colon:
            lex = data[i : i + 1]
            append(Token(COLON, lex, pos=pos))
        elif b == mark:
            lex = data[i : i + 1]
            append(Token(OPEN_MARK, lex, pos=pos))
        elif b == comma:
            lex = data[i : i + 1]
            append(Token(COMMA, lex, pos=pos))
        elif b == cousin:
            m = _DEPTH_RE.match(data, i + 1)
            if m:
                lex = data[i : m.end()]
                append(Token(SEPARATOR, lex, depth=int(m.group()), pos=pos))
            else:
                lex = data[i : i + 1]
                append(Token(SEPARATOR, lex, depth=1, pos=pos))
        elif b == sigil:
            m = _NAME_RE.match(data, i + 1)
            lex = data[i : m.end()]
            append(Token(TYPE_SIGIL, lex, name=data[i + 1 : m.end()], pos=pos))
        elif b in ws_set:
            m = ws_re.match(data, i)
            lex = m.group()
            append(Token(WS, lex, pos=pos))
        else:
            m = data_re.match(data, i)
            lex = m.group()
            append(Token(DATA, lex, pos=pos))
        advance(lex)
        i += len(lex)

    return TokenStream(toks, dialect)


def render(stream: TokenStream) -> bytes:
    """Inverse of tokenize: concatenation of the stream's lexemes."""
    return stream.render()
