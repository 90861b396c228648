import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import strux
from strux import TokenKind, UnterminatedSkip, render, tokenize

K = TokenKind


def kinds(stream):
    return [t.kind for t in stream]


def test_simple_classification(sexpr):
    s = tokenize(b"(a(b))", sexpr)
    assert kinds(s) == [K.OPEN, K.DATA, K.OPEN, K.DATA, K.CLOSE, K.CLOSE]


def test_separator_depth(sexpr):
    s = tokenize(b";3", sexpr)
    assert kinds(s) == [K.SEPARATOR]
    assert s[0].depth == 3
    assert s[0].lexeme == b";3"


def test_mixed_marks(sexpr):
    s = tokenize(b"(p:q;r)", sexpr)
    assert kinds(s) == [K.OPEN, K.DATA, K.COLON, K.DATA, K.SEPARATOR, K.DATA, K.CLOSE]
    assert s[4].depth == 1


def test_ws_and_data_runs_are_maximal(sexpr):
    s = tokenize(b"foo bar\n\tbaz", sexpr)
    assert kinds(s) == [K.DATA, K.WS, K.DATA, K.WS, K.DATA]
    assert s[3].lexeme == b"\n\t"


def test_typed_open_and_sigil(default):
    s = tokenize(b"{ul class} $name x", default)
    assert s[0].kind == K.TYPED_OPEN and s[0].name == b"ul"
    assert s[4].kind == K.TYPE_SIGIL and s[4].name == b"name"
    assert render(s) == b"{ul class} $name x"


def test_typed_open_name_ends_at_non_word_byte(default):
    s = tokenize(b"{a-b}", default)
    assert s[0].name == b"a"
    assert s[1].lexeme == b"-b"


def test_skip_region_is_single_data_token(default):
    s = tokenize(b'("x(y)" z)', default)
    assert kinds(s) == [K.OPEN, K.DATA, K.WS, K.DATA, K.CLOSE]
    assert s[1].lexeme == b'"x(y)"'


def test_skip_region_backslash_escape(default):
    s = tokenize(rb'"a\"b"', default)
    assert kinds(s) == [K.DATA]


def test_skip_region_doubling_escape():
    nw = strux.newick_dialect()
    s = tokenize(b"('x(y)''z',b);", nw)
    assert s[1].lexeme == b"'x(y)''z'"
    assert render(s) == b"('x(y)''z',b);"


def test_unterminated_skip_region(default):
    with pytest.raises(UnterminatedSkip) as exc:
        tokenize(b'ab"cd', default)
    assert exc.value.pos.offset == 2


def test_depth_numeral_requires_nonzero_lead(sexpr):
    s = tokenize(b";03", sexpr)
    assert kinds(s) == [K.SEPARATOR, K.DATA]
    assert s[0].depth == 1
    assert render(s) == b";03"


def test_explicit_depth_one_keeps_its_lexeme(sexpr):
    s = tokenize(b";1", sexpr)
    assert s[0].depth == 1 and s[0].lexeme == b";1"
    assert tokenize(render(s), sexpr) == s


def test_non_ascii_passes_as_data(sexpr):
    raw = "(héllo)".encode("utf-8")
    s = tokenize(raw, sexpr)
    assert kinds(s) == [K.OPEN, K.DATA, K.CLOSE]
    assert render(s) == raw


def test_render_empty(sexpr):
    assert render(tokenize(b"", sexpr)) == b""


def test_render_marks(sexpr):
    assert render(tokenize(b"(:m)", sexpr)) == b"(:m)"
    from strux.stream import make_separator

    assert make_separator(sexpr, 3).lexeme == b";3"
    assert make_separator(sexpr, 1).lexeme == b";"


def test_positions(sexpr):
    s = tokenize(b"(a\nb)", sexpr)
    assert (s[0].pos.line, s[0].pos.col) == (1, 1)
    assert (s[3].pos.line, s[3].pos.col) == (2, 1)
    assert s[3].pos.offset == 3


@settings(max_examples=300, deadline=None)
@given(st.binary(max_size=200))
def test_byte_fidelity_default(data):
    d = strux.get_dialect("default")
    try:
        s = tokenize(data, d)
    except UnterminatedSkip:
        return
    assert render(s) == data
    assert tokenize(render(s), d) == s


@settings(max_examples=300, deadline=None)
@given(st.binary(max_size=200))
def test_byte_fidelity_newick(data):
    d = strux.newick_dialect()
    try:
        s = tokenize(data, d)
    except UnterminatedSkip:
        return
    assert render(s) == data
    assert tokenize(render(s), d) == s
