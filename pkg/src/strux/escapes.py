"""Quantity escapes: decimal run-length escapes and verbatim block escapes.

Grammar (with ``\\`` as the escape glyph):

* ``\\\\``                  one literal backslash
* ``\\<count><byte>``      the byte repeated count times
* ``\\<count>\\<len>\\<literal>``  the next ``len`` bytes, taken verbatim,
  repeated count times

Counts and lengths are unsigned decimal numerals. ``\\0x`` means zero x's
(this codec does not honor the convention of ``\\0`` naming the NUL byte).
A minus sign after the glyph parses as a negative count and is rejected:
nothing in scope assigns it a meaning. Digits, the glyph itself and ``-``
are never the subject of a run escape, so expansion is unambiguous.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BlockLiteralShort, NegativeCount, Pos, TruncatedEscape

ESCAPE = 0x5C  # backslash
_MINUS = 0x2D
_RUN_RE = re.compile(rb"(.)\1*", re.DOTALL)
_INELIGIBLE = frozenset(b"0123456789") | {ESCAPE, _MINUS}


@dataclass(frozen=True)
class EscapeForm:
    """A parsed escape: a run (count copies of one byte) or a block (count
    copies of a literal of exactly ``length`` bytes)."""

    count: int
    subject: int | None = None
    literal: bytes | None = None

    def __post_init__(self):
        if self.count < 0:
            raise NegativeCount("escape count cannot be negative")
        if (self.subject is None) == (self.literal is None):
            raise ValueError("exactly one of subject/literal must be set")
        if self.subject is not None and self.subject in _INELIGIBLE:
            raise ValueError("run subject cannot be a digit, escape glyph or '-'")

    @property
    def length(self) -> int:
        return len(self.literal) if self.literal is not None else 1

    def expanded(self) -> bytes:
        if self.literal is not None:
            return self.literal * self.count
        return bytes([self.subject]) * self.count


def _pos(data: bytes, offset: int) -> Pos:
    line = data.count(b"\n", 0, offset) + 1
    col = offset - data.rfind(b"\n", 0, offset)
    return Pos(offset, line, col)


def _read_count(data: bytes, i: int, start: int) -> tuple[int, int]:
    n = len(data)
    j = i
    while j < n and 0x30 <= data[j] <= 0x39:
        j += 1
    if j == i:
        raise TruncatedEscape("escape lacks a count numeral", _pos(data, start))
    return int(data[i:j]), j


def expand_escapes(data: bytes) -> bytes:
    """Expand every escape; all other bytes are copied through."""
    out = bytearray()
    i = 0
    n = len(data)
    while i < n:
        j = data.find(ESCAPE, i)
        if j < 0:
            out += data[i:]
            break
        out += data[i:j]
        start = j
        i = j + 1
        if i >= n:
            raise TruncatedEscape("escape glyph at end of input", _pos(data, start))
        b = data[i]
        if b == ESCAPE:
            out.append(ESCAPE)
            i += 1
            continue
        if b == _MINUS:
            raise NegativeCount(
                "negative escape counts have no meaning here", _pos(data, start)
            )
        count, i = _read_count(data, i, start)
        if i >= n:
            raise TruncatedEscape(
                "escape is missing its subject", _pos(data, start)
            )
        if data[i] == ESCAPE:
            length, i = _read_count(data, i + 1, start)
            if i >= n or data[i] != ESCAPE:
                raise TruncatedEscape(
                    "block escape is missing the glyph after its length",
                    _pos(data, start),
                )
            i += 1
            literal = data[i : i + length]
            if len(literal) < length:
                raise BlockLiteralShort(
                    f"block literal has {len(literal)} of {length} bytes",
                    _pos(data, start),
                )
            i += length
            out += literal * count
        else:
            out += data[i : i + 1] * count
            i += 1
    return bytes(out)


def compress_runs(data: bytes, min_run: int = 4) -> bytes:
    """Replace maximal runs of one eligible byte (length >= min_run) with
    run escapes. Digits, the escape glyph and '-' are never run-escaped.
    With min_run >= 4 the output is never longer than the input; expansion
    of the output reproduces any input that is itself valid escape text
    (in particular any input free of the escape glyph)."""
    if min_run < 2:
        raise ValueError("min_run must be at least 2")
    out = bytearray()
    for m in _RUN_RE.finditer(data):
        run = m.group()
        b = run[0]
        if len(run) >= min_run and b not in _INELIGIBLE:
            out += b"\\%d%c" % (len(run), b)
        else:
            out += run
    return bytes(out)


def encode_block(count: int, literal: bytes) -> bytes:
    """Emit a verbatim block escape; its expansion is literal*count even when
    the literal contains the escape glyph or other escape sequences."""
    if count < 0:
        raise NegativeCount("block count cannot be negative")
    return b"\\%d\\%d\\%s" % (count, len(literal), literal)
