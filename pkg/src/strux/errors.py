"""Exception hierarchy. Every error that refers to a place in the input
carries a Pos (byte offset plus 1-based line/column)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Pos:
    offset: int
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


class StruxError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, pos: Pos | None = None):
        self.message = message
        self.pos = pos
        super().__init__(f"{message} at {pos}" if pos is not None else message)


class DialectError(StruxError):
    pass


class TokenizeError(StruxError):
    pass


class UnterminatedSkip(TokenizeError):
    pass


class ParseError(StruxError):
    pass


class UnbalancedClose(ParseError):
    pass


class UnclosedOpen(ParseError):
    pass


class ColonAtTopLevel(ParseError):
    pass


class OpenMarkAtTopLevel(ParseError):
    pass


class SeparatorUnderflow(ParseError):
    pass


class MismatchedCloseKind(ParseError):
    pass


class TransformError(StruxError):
    pass


class EscapeError(StruxError):
    pass


class NegativeCount(EscapeError):
    pass


class TruncatedEscape(EscapeError):
    pass


class BlockLiteralShort(EscapeError):
    pass


class IndentError(StruxError):
    pass


class NonMultipleIndent(IndentError):
    pass


class PopUnderflow(IndentError):
    pass
