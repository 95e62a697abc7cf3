"""Shared expression corpus and independent oracles for the test-suite."""
from __future__ import annotations

import random
from functools import lru_cache

from katop.syntax import TOP, Alphabet, AtomConst, Dot, Expr, Letter, One, Plus, Star, Top, Zero, parse

# Over letters a, b and the single default atom.
CORPUS_TEXT = [
    "0",
    "1",
    "a",
    "top",
    "a;b",
    "a+b",
    "a*",
    "(a+b)*",
    "(aa)*",
    "(aaa)*",
    "a;top",
    "top;a",
    "a;top;a",
    "top;a;top",
    "top;a;top;b;top",
    "top;b;top;a;top",
    "(a;top)*",
    "a+a;top;a",
    "(a+top)*",
    "a*;top;b*",
    "(aa)*;a;top",
    "b;top;b + a",
    "(a;b)*;top",
    "(aaa)*;top;(aa)* + (aa)*;a;top;(aaa)*",
    "top;top + 1",
]
assert len(CORPUS_TEXT) == 25

STAR_FREE = [t for t in CORPUS_TEXT if "*" not in t]
TOP_FREE = [t for t in CORPUS_TEXT if "top" not in t]


def corpus(alphabet: Alphabet):
    return [parse(t, alphabet) for t in CORPUS_TEXT]


def word_in(e: Expr, word: tuple[str, ...]) -> bool:
    """Plain recursive regular-expression membership over atoms, letters and top."""

    @lru_cache(maxsize=None)
    def m(e, i, j):
        if isinstance(e, Zero):
            return False
        if isinstance(e, One):
            return i == j
        if isinstance(e, Top):
            return j == i + 1 and word[i] == TOP
        if isinstance(e, (Letter, AtomConst)):
            return j == i + 1 and word[i] == e.name
        if isinstance(e, Plus):
            return m(e.left, i, j) or m(e.right, i, j)
        if isinstance(e, Dot):
            return any(m(e.left, i, k) and m(e.right, k, j) for k in range(i, j + 1))
        if isinstance(e, Star):
            return i == j or any(m(e.body, i, k) and m(e, k, j) for k in range(i + 1, j + 1))
        raise TypeError(e)

    return m(e, 0, len(word))


def random_expr(rng: random.Random, alphabet: Alphabet, size: int, top: bool = True) -> Expr:
    """Random expression with at most ``size`` nodes."""
    if size <= 1:
        leaves = [Zero(), One()] + [Letter(a) for a in alphabet.letters] * 3
        if len(alphabet.atoms) > 1:
            leaves += [AtomConst(a) for a in alphabet.atoms]
        if top:
            leaves += [Top()] * 2
        return rng.choice(leaves)
    kind = "star" if size == 2 else rng.choice(["plus", "dot", "dot", "star"])
    if kind == "star":
        return Star(random_expr(rng, alphabet, size - 1, top))
    k = rng.randint(1, size - 2)
    left = random_expr(rng, alphabet, k, top)
    right = random_expr(rng, alphabet, size - 1 - k, top)
    return Plus(left, right) if kind == "plus" else Dot(left, right)


def random_pair(rng: random.Random, alphabet: Alphabet, max_size: int, top: bool = True) -> tuple[Expr, Expr]:
    """Two expressions of at most ``max_size`` nodes each, related by
    construction about half of the time."""
    def draw(n):
        return random_expr(rng, alphabet, rng.randint(1, max(1, n)), top)

    roll = rng.random()
    if roll < 0.25:
        e = draw(max_size - 3)
        return e, Plus(e, draw(2))
    if roll < 0.4:
        e = draw(max_size - 2)
        return Star(e), Star(Star(e))
    if roll < 0.5:
        e = draw((max_size - 2) // 2)
        return Dot(e, Star(e)), Dot(Star(e), e)
    return draw(max_size), draw(max_size)
