"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own machinery: the Dyck
enumerator and depth counter are plain recursions over byte strings, tree
equality is re-implemented from scratch, and the mirror oracle works on raw
bytes.
"""

import random
import re
from pathlib import Path

import pytest

import strux
from strux.tree import DataAtom, Node, TypeAtom, WsRun

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
GRAFTED = DATA_DIR / "grafted_solution.tre"


# -- Dyck word oracles ----------------------------------------------------------


def dyck_words(n, open_b=b"[", close_b=b"]"):
    """All balanced words with n bracket pairs, by brute-force recursion."""
    out = []

    def gen(prefix, opens, closes):
        if opens == 0 and closes == 0:
            out.append(prefix)
            return
        if opens:
            gen(prefix + open_b, opens - 1, closes)
        if closes > opens:
            gen(prefix + close_b, opens, closes - 1)

    gen(b"", n, n)
    return out


def brute_depth(word, open_b=ord("["), close_b=ord("]")):
    """Maximum nesting depth of a balanced word, by simple counting."""
    depth = best = 0
    for b in word:
        if b == open_b:
            depth += 1
            best = max(best, depth)
        elif b == close_b:
            depth -= 1
    return best


def byte_mirror(data, pairs=((b"[", b"]"), (b"(", b")"), (b"{", b"}"))):
    """Naive reverse+swap on the byte string (mirror oracle)."""
    swap = {}
    for o, c in pairs:
        swap[o[0]] = c[0]
        swap[c[0]] = o[0]
    swap[ord(":")] = ord("^")
    swap[ord("^")] = ord(":")
    return bytes(swap.get(b, b) for b in reversed(data))


# -- independent tree equality ----------------------------------------------------


def trees_equal(a, b, ignore_ws=True):
    """From-scratch structural comparison: any of the plain/colon/mark node
    kinds are interchangeable; whitespace runs are skipped by default."""

    def kind_of(node):
        k = node.kind
        return 0 if k in ("colon", "mark") else k

    def items_of(node):
        keep = []
        for it in node.items:
            if ignore_ws and isinstance(it, WsRun):
                continue
            keep.append(it)
        return keep

    if kind_of(a) != kind_of(b):
        return False
    ia, ib = items_of(a), items_of(b)
    if len(ia) != len(ib):
        return False
    for x, y in zip(ia, ib):
        if isinstance(x, Node) and isinstance(y, Node):
            if not trees_equal(x, y, ignore_ws):
                return False
        elif isinstance(x, DataAtom) and isinstance(y, DataAtom):
            if x.data != y.data:
                return False
        elif isinstance(x, WsRun) and isinstance(y, WsRun):
            if x.data != y.data:
                return False
        elif isinstance(x, TypeAtom) and isinstance(y, TypeAtom):
            if x.name != y.name:
                return False
        else:
            return False
    return True


# -- whitespace normalization for prose comparisons -------------------------------

_GLYPHS = rb"[()\[\]{}:;^,]"


def squeeze_ws(data):
    """Drop spaces/tabs adjacent to structural glyphs (prose listings carry
    cosmetic spaces around them)."""
    out = re.sub(rb"[ \t]*(" + _GLYPHS + rb")[ \t]*", rb"\1", data)
    return out


# -- random balanced streams -------------------------------------------------------


def random_balanced(rng, max_items=6, max_depth=4, ws=True, kinds=1):
    """Random balanced byte string with interleaved data. Whitespace is only
    placed between items, never straight after an open or straight before a
    close: the collapse transforms canonicalize whitespace at those two
    spots, so the exact-round-trip input class excludes them."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    brackets = [(b"(", b")"), (b"[", b"]")][:kinds]

    def atom():
        return "".join(rng.choice(letters) for _ in range(rng.randint(1, 4))).encode()

    def node(depth):
        o, c = brackets[rng.randrange(len(brackets))] if depth else brackets[0]
        return o + seq(depth + 1) + c

    def seq(depth):
        n = rng.randint(0, max_items if depth else max(2, max_items))
        parts = []
        for _ in range(n):
            if depth < max_depth and rng.random() < 0.45:
                parts.append(node(depth))
            else:
                parts.append(atom())
        joined = b""
        for i, p in enumerate(parts):
            if i and ws and rng.random() < 0.3:
                joined += rng.choice([b" ", b"  ", b"\n"])
            joined += p
        return joined

    return seq(0)


@pytest.fixture
def rng():
    return random.Random(20240817)


# -- golden listings ---------------------------------------------------------------

ACKERMANN = (
    b"(define (A x y)\n"
    b"  (cond ((= y 0) 0)\n"
    b"        ((= x 0) (* 2 y))\n"
    b"        ((= y 1) 2)\n"
    b"        (else (A (- x 1)\n"
    b"                 (A x (- y 1))))))"
)

ACKERMANN_CLOSING3 = (
    b"(define (A x y)\n"
    b"  :cond ((= y 0) 0)\n"
    b"        ((= x 0) :* 2 y)\n"
    b"        ((= y 1) 2)\n"
    b"        :else :A (- x 1)\n"
    b"                 :A x :- y 1)"
)

ACKERMANN_BOTH = (
    b"(define :A x y,\n"
    b"  cond :(= y 0) 0,\n"
    b"        (= x 0, * 2 y),\n"
    b"        (= y 1) 2,\n"
    b"        else :A :- x 1,\n"
    b"                 A x :- y 1)"
)

# word, colon form, separator form (table style), both
DYCK8_TABLE = [
    (b"[[[[]]]]", b"[:::]", b"[[[[]]]]", b"[:::]"),
    (b"[][[[]]]", b"[][::]", b"[,[[]]]", b"[,::]"),
    (b"[[][[]]]", b"[[]::]", b"[[,[]]]", b"[:,:]"),
    (b"[[]][[]]", b"[:][:]", b"[[],[]]", b"[[],:]"),
    (b"[[[][]]]", b"[:[]:]", b"[[[,]]]", b"[::,]"),
    (b"[[[]][]]", b"[[:]:]", b"[[[],]]", b"[:[],]"),
    (b"[[[]]][]", b"[::][]", b"[[[]],]", b"[[:],]"),
    (b"[][[][]]", b"[][[]:]", b"[,[,]]", b"[,:,]"),
    (b"[][[]][]", b"[][:][]", b"[,[],]", b"[,[],]"),
    (b"[[][][]]", b"[[][]:]", b"[[,,]]", b"[:,,]"),
    (b"[[][]][]", b"[[]:][]", b"[[,],]", b"[[,],]"),
    (b"[[]][][]", b"[:][][]", b"[[],,]", b"[[],,]"),
    (b"[][][[]]", b"[][][:]", b"[,,[]]", b"[,,:]"),
    (b"[][][][]", b"[][][][]", b"[,,,]", b"[,,,]"),
]


@pytest.fixture
def sexpr():
    return strux.get_dialect("sexpr")


@pytest.fixture
def dyck():
    return strux.get_dialect("dyck")


@pytest.fixture
def default():
    return strux.get_dialect("default")


def tok(data, dialect):
    return strux.tokenize(data, dialect)
