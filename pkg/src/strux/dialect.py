"""Dialects: which bytes act as structure and which pass through as data.

A dialect names the bracket pairs (kind 0 is the "plain" kind that the
collapse transforms operate on), the one-byte mark glyphs (colon, open
mark, comma, cousin separator), optional typed-bracket and type-sigil
bytes, the universal closing glyph, and skip regions (quoted strings,
comments) that tokenize as opaque data.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DialectError

# canonical whitespace set: space, tab, LF, CR
DEFAULT_WS = frozenset(b" \t\n\r")

_WS_NAMES = {"space": 0x20, "tab": 0x09, "lf": 0x0A, "cr": 0x0D}


@dataclass(frozen=True)
class Dialect:
    """Reserved-symbol configuration. Treat instances as immutable.

    All reserved bytes must be ASCII and mutually distinct, with two
    designation exceptions: ``typed_open`` must equal the open byte of an
    existing bracket kind (that kind becomes the named-bracket kind), and
    ``universal_close_glyph`` must equal the close byte of an existing kind.
    """

    name: str = "custom"
    bracket_kinds: tuple[tuple[int, int], ...] = ((0x28, 0x29),)
    colon_glyph: int | None = None
    open_mark_glyph: int | None = None
    comma_glyph: int | None = None
    cousin_glyph: int | None = None
    escape_glyph: int | None = None
    typed_open: int | None = None
    type_sigil: int | None = None
    universal_close_glyph: int | None = None
    skip_regions: tuple[tuple[int, int, int | None], ...] = ()
    ws_set: frozenset[int] = field(default=DEFAULT_WS)

    def __post_init__(self):
        if not self.bracket_kinds:
            raise DialectError("dialect needs at least one bracket kind")
        reserved: dict[int, str] = {}

        def claim(byte, what):
            if byte is None:
                return
            if not 0 <= byte < 128:
                raise DialectError(f"{what} byte {byte} is not ASCII")
            if byte in reserved:
                raise DialectError(
                    f"{what} byte {byte:#04x} collides with {reserved[byte]}"
                )
            reserved[byte] = what

        for i, pair in enumerate(self.bracket_kinds):
            if len(pair) != 2:
                raise DialectError("bracket kind must be an (open, close) pair")
            claim(pair[0], f"open of kind {i}")
            claim(pair[1], f"close of kind {i}")
        claim(self.colon_glyph, "colon")
        claim(self.open_mark_glyph, "open mark")
        claim(self.comma_glyph, "comma")
        claim(self.cousin_glyph, "cousin separator")
        claim(self.escape_glyph, "escape")
        claim(self.type_sigil, "type sigil")
        if self.typed_open is not None and self.typed_open not in {
            o for o, _ in self.bracket_kinds
        }:
            raise DialectError("typed_open must designate an existing bracket kind")
        if (
            self.universal_close_glyph is not None
            and self.universal_close_glyph not in {c for _, c in self.bracket_kinds}
        ):
            raise DialectError(
                "universal_close_glyph must be the close byte of some bracket kind"
            )
        for start, end, esc in self.skip_regions:
            if not 0 <= start < 128 or not 0 <= end < 128:
                raise DialectError("skip region delimiters must be ASCII")
            if start in reserved:
                raise DialectError(
                    f"skip region start {start:#04x} collides with {reserved[start]}"
                )
            if start in self.ws_set:
                raise DialectError("skip region start collides with whitespace set")
        for b in self.ws_set:
            if b in reserved:
                raise DialectError(
                    f"whitespace byte {b:#04x} collides with {reserved[b]}"
                )

    # -- lookup tables used by the tokenizer ---------------------------------

    @cached_property
    def open_kind(self) -> dict[int, int]:
        return {o: k for k, (o, _) in enumerate(self.bracket_kinds)}

    @cached_property
    def close_kind(self) -> dict[int, int]:
        return {c: k for k, (_, c) in enumerate(self.bracket_kinds)}

    @cached_property
    def typed_kind(self) -> int | None:
        if self.typed_open is None:
            return None
        return self.open_kind[self.typed_open]

    @cached_property
    def universal_kind(self) -> int | None:
        if self.universal_close_glyph is None:
            return None
        return self.close_kind[self.universal_close_glyph]

    @cached_property
    def skip_starts(self) -> dict[int, tuple[int, int | None]]:
        return {s: (e, esc) for s, e, esc in self.skip_regions}

    @cached_property
    def reserved_bytes(self) -> frozenset[int]:
        bits = set()
        for o, c in self.bracket_kinds:
            bits.add(o)
            bits.add(c)
        for g in (
            self.colon_glyph,
            self.open_mark_glyph,
            self.comma_glyph,
            self.cousin_glyph,
            self.type_sigil,
        ):
            if g is not None:
                bits.add(g)
        bits.update(self.skip_starts)
        return frozenset(bits)

    def open_byte(self, kind: int) -> int:
        return self.bracket_kinds[kind][0]

    def close_byte(self, kind: int) -> int:
        return self.bracket_kinds[kind][1]


# -- built-in dialects --------------------------------------------------------


def _default() -> Dialect:
    return Dialect(
        name="default",
        bracket_kinds=((ord("("), ord(")")), (ord("["), ord("]")), (ord("{"), ord("}"))),
        colon_glyph=ord(":"),
        open_mark_glyph=ord("^"),
        comma_glyph=ord(","),
        cousin_glyph=ord(";"),
        escape_glyph=ord("\\"),
        typed_open=ord("{"),
        type_sigil=ord("$"),
        universal_close_glyph=ord("]"),
        skip_regions=((ord('"'), ord('"'), ord("\\")),),
    )


def _sexpr() -> Dialect:
    return Dialect(
        name="sexpr",
        bracket_kinds=((ord("("), ord(")")),),
        colon_glyph=ord(":"),
        open_mark_glyph=ord("^"),
        comma_glyph=ord(","),
        cousin_glyph=ord(";"),
        escape_glyph=ord("\\"),
        universal_close_glyph=ord(")"),
        skip_regions=((ord('"'), ord('"'), ord("\\")),),
    )


def _newick() -> Dialect:
    # Only the parentheses are structural; Newick's commas, semicolons and
    # branch-length colons stay data. Quoted labels double the quote to
    # escape it; square brackets delimit comments.
    return Dialect(
        name="newick",
        bracket_kinds=((ord("("), ord(")")),),
        open_mark_glyph=ord("^"),
        universal_close_glyph=ord(")"),
        skip_regions=(
            (ord("'"), ord("'"), ord("'")),
            (ord("["), ord("]"), None),
        ),
    )


def _dyck() -> Dialect:
    # Square brackets are the only bracket kind; the mark glyphs are kept
    # reserved so collapsed forms re-tokenize faithfully.
    return Dialect(
        name="dyck",
        bracket_kinds=((ord("["), ord("]")),),
        colon_glyph=ord(":"),
        open_mark_glyph=ord("^"),
        comma_glyph=ord(","),
        cousin_glyph=ord(";"),
        universal_close_glyph=ord("]"),
    )


_BUILTINS = {
    "default": _default,
    "sexpr": _sexpr,
    "newick": _newick,
    "dyck": _dyck,
}


def builtin_dialects() -> dict[str, Dialect]:
    return {name: fn() for name, fn in _BUILTINS.items()}


# -- key=value dialect files --------------------------------------------------

ENV_DIALECT_PATH = "STRUX_DIALECT_PATH"


def load_dialect_file(path: str | os.PathLike) -> Dialect:
    """Load a dialect from a plain key=value file.

    Recognized keys: ``name``, ``brackets`` (comma-separated ``open:close``
    pairs), ``colon``, ``open_mark``, ``comma``, ``cousin``, ``escape``,
    ``typed_open``, ``type_sigil``, ``universal_close`` (single literal
    characters), ``skip`` (repeatable; two chars start+end, or three chars
    start+end+escape), ``ws`` (comma-separated names: space, tab, lf, cr).
    Lines starting with ``#`` are comments.
    """
    fields: dict[str, object] = {"name": os.path.splitext(os.path.basename(path))[0]}
    skips: list[tuple[int, int, int | None]] = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            if "=" not in line:
                raise DialectError(f"{path}:{lineno}: expected key=value")
            key, _, value = line.partition("=")
            key = key.strip()
            if key == "name":
                fields["name"] = value.strip()
            elif key == "brackets":
                pairs = []
                for item in value.split(","):
                    if len(item) != 3 or item[1] != ":":
                        raise DialectError(
                            f"{path}:{lineno}: bracket pair must look like (:)"
                        )
                    pairs.append((ord(item[0]), ord(item[2])))
                fields["bracket_kinds"] = tuple(pairs)
            elif key in (
                "colon",
                "open_mark",
                "comma",
                "cousin",
                "escape",
                "typed_open",
                "type_sigil",
                "universal_close",
            ):
                if len(value) != 1:
                    raise DialectError(f"{path}:{lineno}: {key} must be one character")
                attr = {
                    "colon": "colon_glyph",
                    "open_mark": "open_mark_glyph",
                    "comma": "comma_glyph",
                    "cousin": "cousin_glyph",
                    "escape": "escape_glyph",
                    "typed_open": "typed_open",
                    "type_sigil": "type_sigil",
                    "universal_close": "universal_close_glyph",
                }[key]
                fields[attr] = ord(value)
            elif key == "skip":
                if len(value) == 2:
                    skips.append((ord(value[0]), ord(value[1]), None))
                elif len(value) == 3:
                    skips.append((ord(value[0]), ord(value[1]), ord(value[2])))
                else:
                    raise DialectError(
                        f"{path}:{lineno}: skip must be 2 or 3 characters"
                    )
            elif key == "ws":
                try:
                    fields["ws_set"] = frozenset(
                        _WS_NAMES[w.strip()] for w in value.split(",") if w.strip()
                    )
                except KeyError as exc:
                    raise DialectError(
                        f"{path}:{lineno}: unknown whitespace name {exc}"
                    ) from None
            else:
                raise DialectError(f"{path}:{lineno}: unknown key {key!r}")
    if skips:
        fields["skip_regions"] = tuple(skips)
    return Dialect(**fields)  # type: ignore[arg-type]


def dump_dialect(d: Dialect) -> str:
    """Render a dialect in the key=value file format."""
    lines = [f"name={d.name}"]
    lines.append(
        "brackets=" + ",".join(f"{chr(o)}:{chr(c)}" for o, c in d.bracket_kinds)
    )
    for key, val in (
        ("colon", d.colon_glyph),
        ("open_mark", d.open_mark_glyph),
        ("comma", d.comma_glyph),
        ("cousin", d.cousin_glyph),
        ("escape", d.escape_glyph),
        ("typed_open", d.typed_open),
        ("type_sigil", d.type_sigil),
        ("universal_close", d.universal_close_glyph),
    ):
        if val is not None:
            lines.append(f"{key}={chr(val)}")
    for start, end, esc in d.skip_regions:
        entry = chr(start) + chr(end) + (chr(esc) if esc is not None else "")
        lines.append(f"skip={entry}")
    names = {v: k for k, v in _WS_NAMES.items()}
    lines.append("ws=" + ",".join(names[b] for b in sorted(d.ws_set)))
    return "\n".join(lines) + "\n"


def get_dialect(spec: str) -> Dialect:
    """Resolve a dialect by built-in name, file path, or name under the
    directory named by the STRUX_DIALECT_PATH environment variable."""
    if spec in _BUILTINS:
        return _BUILTINS[spec]()
    if os.path.exists(spec):
        return load_dialect_file(spec)
    env_dir = os.environ.get(ENV_DIALECT_PATH)
    if env_dir:
        for candidate in (
            os.path.join(env_dir, spec),
            os.path.join(env_dir, spec + ".dialect"),
        ):
            if os.path.exists(candidate):
                return load_dialect_file(candidate)
    raise DialectError(f"unknown dialect {spec!r}")
