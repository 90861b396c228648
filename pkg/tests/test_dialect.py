import os

import pytest

import strux
from strux import Dialect, DialectError, dump_dialect, get_dialect, load_dialect_file


def test_builtins_present():
    names = set(strux.builtin_dialects())
    assert names == {"default", "sexpr", "newick", "dyck"}


def test_default_reserves_expected_glyphs(default):
    assert default.open_kind == {ord("("): 0, ord("["): 1, ord("{"): 2}
    assert default.typed_kind == 2
    assert default.universal_kind == 1


def test_newick_keeps_commas_as_data():
    d = strux.newick_dialect()
    assert d.comma_glyph is None
    assert d.colon_glyph is None
    assert set(d.open_kind) == {ord("(")}


def test_reserved_bytes_must_be_ascii():
    with pytest.raises(DialectError):
        Dialect(bracket_kinds=((0x80, 0x81),))


def test_colliding_glyphs_rejected():
    with pytest.raises(DialectError):
        Dialect(bracket_kinds=((ord("("), ord(")")),), colon_glyph=ord("("))


def test_typed_open_must_designate_a_kind():
    with pytest.raises(DialectError):
        Dialect(bracket_kinds=((ord("("), ord(")")),), typed_open=ord("{"))


def test_universal_close_must_be_a_close_byte():
    with pytest.raises(DialectError):
        Dialect(bracket_kinds=((ord("("), ord(")")),), universal_close_glyph=ord("]"))


def test_empty_bracket_kinds_rejected():
    with pytest.raises(DialectError):
        Dialect(bracket_kinds=())


def test_ws_collision_rejected():
    with pytest.raises(DialectError):
        Dialect(bracket_kinds=((ord(" "), ord(")")),))


def test_file_round_trip(tmp_path):
    for name in ("default", "sexpr", "newick", "dyck"):
        d = get_dialect(name)
        path = tmp_path / f"{name}.dialect"
        path.write_text(dump_dialect(d))
        loaded = load_dialect_file(path)
        assert loaded.bracket_kinds == d.bracket_kinds
        assert loaded.colon_glyph == d.colon_glyph
        assert loaded.skip_regions == d.skip_regions
        assert loaded.ws_set == d.ws_set


def test_file_errors(tmp_path):
    bad = tmp_path / "bad.dialect"
    bad.write_text("brackets=(()\n")
    with pytest.raises(DialectError):
        load_dialect_file(bad)
    bad.write_text("nonsense line\n")
    with pytest.raises(DialectError):
        load_dialect_file(bad)
    bad.write_text("mystery=1\n")
    with pytest.raises(DialectError):
        load_dialect_file(bad)


def test_env_dialect_path(tmp_path, monkeypatch):
    path = tmp_path / "mine.dialect"
    path.write_text("brackets=<:>\n")
    monkeypatch.setenv("STRUX_DIALECT_PATH", str(tmp_path))
    d = get_dialect("mine")
    assert d.bracket_kinds == ((ord("<"), ord(">")),)
    monkeypatch.delenv("STRUX_DIALECT_PATH")
    with pytest.raises(DialectError):
        get_dialect("mine")


def test_unknown_dialect():
    with pytest.raises(DialectError):
        get_dialect("no-such-dialect")
