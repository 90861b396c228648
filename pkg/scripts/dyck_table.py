#!/usr/bin/env python3
"""Print the transform table for all 14 balanced bracket words of length 8:
the word, its colon form, its separator form (table style), and both."""

from strux import Profile, both_collapse, colon_collapse, get_dialect, render, sep_collapse, tokenize


def dyck_words(n: int):
    def gen(prefix, opens, closes):
        if opens == 0 and closes == 0:
            yield prefix
            return
        if opens:
            yield from gen(prefix + b"[", opens - 1, closes)
        if closes > opens:
            yield from gen(prefix + b"]", opens, closes - 1)

    yield from gen(b"", n, n)


def main():
    d = get_dialect("dyck")
    profile = Profile(style="table")
    print(f"{'word':<10} {'colon':<10} {'separator':<10} both")
    for i, word in enumerate(dyck_words(4), 1):
        s = tokenize(word, d)
        colon = render(colon_collapse(s)).decode()
        sep = render(sep_collapse(s, profile)).decode()
        both = render(both_collapse(s, profile)).decode()
        print(f"{word.decode():<10} {colon:<10} {sep:<10} {both}")


if __name__ == "__main__":
    main()
