"""strux: transcoder for compact textual structure notations.

Converts interleaved hierarchical text between the plain two-symbol bracket
form and the compact forms (colon, open mark, separators, universal closing
bracket), with exact inverses, plus a quantity-escape codec, an indentation
control-byte codec, and size/compression reporting.
"""

from .adapters import (
    CorpusEntry,
    SizeReport,
    aggregate_depth_histogram,
    newick_dialect,
    scan_corpus,
    size_report,
)
from .dialect import (
    Dialect,
    builtin_dialects,
    dump_dialect,
    get_dialect,
    load_dialect_file,
)
from .errors import (
    BlockLiteralShort,
    ColonAtTopLevel,
    DialectError,
    EscapeError,
    IndentError,
    MismatchedCloseKind,
    NegativeCount,
    NonMultipleIndent,
    OpenMarkAtTopLevel,
    ParseError,
    PopUnderflow,
    Pos,
    SeparatorUnderflow,
    StruxError,
    TokenizeError,
    TransformError,
    TruncatedEscape,
    UnbalancedClose,
    UnclosedOpen,
    UnterminatedSkip,
)
from .escapes import EscapeForm, compress_runs, encode_block, expand_escapes
from .indent import IndentConfig, decode_indent, encode_indent, render_outline
from .stream import Token, TokenKind, TokenStream, render, tokenize
from .transforms import (
    Profile,
    both_collapse,
    both_expand,
    colon_collapse,
    colon_expand,
    open_collapse,
    open_expand,
    pipeline,
    pipeline_inverse,
    restore_typed_close,
    reverse_mirror,
    sep_collapse,
    sep_expand,
    universal_close,
)
from .tree import (
    DataAtom,
    Node,
    StatsReport,
    StructTree,
    TypeAtom,
    WsRun,
    parse,
    stats,
    structural_equal,
    validate,
)

__version__ = "0.1.0"
