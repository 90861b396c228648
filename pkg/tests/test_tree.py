import pytest

import strux
from strux import (
    ColonAtTopLevel,
    MismatchedCloseKind,
    OpenMarkAtTopLevel,
    SeparatorUnderflow,
    UnbalancedClose,
    UnclosedOpen,
    parse,
    stats,
    tokenize,
    validate,
)
from strux.tree import DataAtom, Node

from conftest import brute_depth, dyck_words, trees_equal


def t(data, d):
    return parse(tokenize(data, d))


def test_single_nesting(sexpr):
    tree = t(b"(a(b)c)", sexpr)
    (node,) = tree.root.child_nodes()
    assert [type(i).__name__ for i in node.items] == ["DataAtom", "Node", "DataAtom"]
    assert node.items[0].data == b"a"
    assert node.items[1].items[0].data == b"b"


def test_colon_parses_like_nested(sexpr):
    assert trees_equal(t(b"(p:q;r)", sexpr).root, t(b"(p(q)(r))", sexpr).root)
    assert trees_equal(t(b"(:m)", sexpr).root, t(b"((m))", sexpr).root)


def test_open_mark_parses_like_nested(sexpr):
    assert trees_equal(t(b"(m^)", sexpr).root, t(b"((m))", sexpr).root)
    assert trees_equal(t(b"(a^b^c)", sexpr).root, t(b"(((a)b)c)", sexpr).root)


def test_comma_is_a_null_child(sexpr):
    assert trees_equal(t(b"(p,q)", sexpr).root, t(b"(p()q)", sexpr).root)
    # runs: n commas produce n empty middles
    assert trees_equal(t(b"(a,,b)", sexpr).root, t(b"(a()()b)", sexpr).root)


def test_separator_depths(sexpr):
    assert trees_equal(t(b"(((a;3b)))", sexpr).root, t(b"(((a)))(((b)))", sexpr).root)


def test_separator_underflow(sexpr):
    with pytest.raises(SeparatorUnderflow) as exc:
        t(b"r;s", sexpr)
    assert exc.value.pos.offset == 1


def test_colon_at_top_level(sexpr):
    with pytest.raises(ColonAtTopLevel):
        t(b"x:y", sexpr)


def test_open_mark_at_top_level(sexpr):
    with pytest.raises(OpenMarkAtTopLevel):
        t(b"a^", sexpr)


def test_unbalanced_close(sexpr):
    with pytest.raises(UnbalancedClose):
        t(b"a)", sexpr)


def test_unclosed_open(sexpr):
    with pytest.raises(UnclosedOpen):
        t(b"(a", sexpr)


def test_mismatched_close_kind(default):
    with pytest.raises(MismatchedCloseKind):
        t(b"[x)", default)


def test_typed_node(default):
    tree = t(b"{ul x}", default)
    (node,) = tree.root.child_nodes()
    assert node.kind == ("typed", b"ul")


def test_validate_misnesting_offset(default):
    errors = validate(tokenize(b"[x(y]z)", default))
    assert errors
    assert isinstance(errors[0], MismatchedCloseKind)
    assert errors[0].pos.offset == 4


def test_validate_clean(default):
    assert validate(tokenize(b"()", default)) == []


def test_validate_unclosed_opens(default):
    errors = validate(tokenize(b"(((", default))
    assert len(errors) == 3
    assert all(isinstance(e, UnclosedOpen) for e in errors)


def test_validate_never_raises(default):
    # pile of violations in one stream
    errors = validate(tokenize(b"):[x;9^", default))
    assert errors and all(e.pos is not None for e in errors)


def test_stats_counts(sexpr):
    r = stats(tokenize(b"((a))", sexpr))
    assert r.paren_count == 4
    assert r.max_depth == 2
    assert r.byte_count == 5
    assert r.token_counts["OPEN"] == 2
    assert 0 <= r.structural_fraction <= 1


def test_stats_depth_absent_when_unbalanced(sexpr):
    r = stats(tokenize(b"(((", sexpr))
    assert r.max_depth is None and r.depth_histogram is None
    assert r.paren_count == 3


def test_stats_structural_fraction_empty(sexpr):
    assert stats(tokenize(b"", sexpr)).structural_fraction == 0.0


def test_random_dyck_paren_count(dyck, rng):
    words = dyck_words(6)
    for word in rng.sample(words, 25):
        r = stats(tokenize(word, dyck))
        assert r.paren_count == len(word)


def test_exhaustive_dyck16_depth_oracle(dyck):
    words = dyck_words(8)
    assert len(words) == 1430
    for word in words:
        r = stats(tokenize(word, dyck))
        assert r.max_depth == brute_depth(word)


def test_parse_render_parse_bijection(sexpr, rng):
    from conftest import random_balanced

    for _ in range(200):
        data = random_balanced(rng)
        tree = t(data, sexpr)
        back = parse(tree.to_stream())
        assert trees_equal(tree.root, back.root, ignore_ws=False)


def test_to_stream_canonicalizes_marks(sexpr):
    tree = t(b"(p:q;r)", sexpr)
    assert tree.to_stream().render() == b"(p(q)(r))"


def test_structural_equal_matches_oracle(sexpr, rng):
    from conftest import random_balanced

    for _ in range(100):
        a = random_balanced(rng)
        b = random_balanced(rng)
        ta, tb = t(a, sexpr), t(b, sexpr)
        assert strux.structural_equal(ta.root, tb.root) == trees_equal(ta.root, tb.root)
