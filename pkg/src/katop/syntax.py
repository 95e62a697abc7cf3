"""Expressions over letters, atoms and top.

The concrete grammar::

    expr   := term ('+' term)*
    term   := factor ((';')? factor)*
    factor := base '*'*
    base   := '0' | '1' | 'top' | ident | '@' ident | '[' test ']' | '(' expr ')'
    test   := disj;  disj := conj ('|' conj)*;  conj := neg ('&' neg)*
    neg    := '!' neg | '1' | '0' | ident | '(' test ')'

An identifier that is not a declared letter but spells a sequence of
single-character letters is read as their juxtaposition, so ``aaa`` is
``a;a;a`` when ``a`` is a letter.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import reduce

RESERVED = frozenset({"0", "1", "top"})
TOP = "top"


class KatSyntaxError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownIdentifier(KatSyntaxError):
    def __init__(self, name: str, position: int | None = None):
        super().__init__(f"unknown identifier {name!r}", position)
        self.name = name


@dataclass(frozen=True)
class Alphabet:
    """Letters, atoms and (optionally) the test variables generating the atoms."""

    letters: tuple[str, ...]
    atoms: tuple[str, ...] = ("alpha",)
    tests: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "atoms", tuple(self.atoms))
        if self.tests is not None:
            object.__setattr__(self, "tests", tuple(self.tests))
            expected = tuple(valuation_name(self.tests, v) for v in valuations(self.tests))
            if self.atoms != expected:
                raise ValueError("atoms must be the valuations of the declared tests")
        if not self.atoms:
            raise ValueError("at least one atom is required")
        for group in (self.letters, self.atoms):
            if len(set(group)) != len(group):
                raise ValueError(f"duplicate names in {group}")
        clash = (set(self.letters) & set(self.atoms)) | ((set(self.letters) | set(self.atoms)) & RESERVED)
        if clash:
            raise ValueError(f"names used twice or reserved: {sorted(clash)}")

    @classmethod
    def from_tests(cls, letters, tests) -> Alphabet:
        tests = tuple(tests)
        atoms = tuple(valuation_name(tests, v) for v in valuations(tests))
        return cls(tuple(letters), atoms, tests)

    @property
    def symbols(self) -> tuple[str, ...]:
        """The letters extended with top, in declared order."""
        return self.letters + (TOP,)

    def valuation(self, atom: str) -> dict[str, bool]:
        if self.tests is None:
            raise ValueError("alphabet has no test variables")
        return dict(zip(self.tests, valuations(self.tests)[self.atoms.index(atom)]))


def valuations(tests) -> list[tuple[bool, ...]]:
    return list(itertools.product((False, True), repeat=len(tests)))


def valuation_name(tests, values) -> str:
    if not tests:
        return "alpha"
    return "_".join(t if v else "n" + t for t, v in zip(tests, values))


# -- expressions --------------------------------------------------------------


class Expr:
    __slots__ = ()

    def __add__(self, other: Expr) -> Expr:
        return Plus(self, other)

    def __mul__(self, other: Expr) -> Expr:
        return Dot(self, other)

    def star(self) -> Expr:
        return Star(self)

    def __str__(self):
        return to_string(self)


@dataclass(frozen=True, repr=False)
class Zero(Expr):
    def __repr__(self):
        return "Zero()"


@dataclass(frozen=True, repr=False)
class One(Expr):
    def __repr__(self):
        return "One()"


@dataclass(frozen=True, repr=False)
class Top(Expr):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True)
class AtomConst(Expr):
    name: str


@dataclass(frozen=True)
class Letter(Expr):
    name: str


@dataclass(frozen=True)
class Plus(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Dot(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Star(Expr):
    body: Expr


def size(e: Expr) -> int:
    if isinstance(e, (Plus, Dot)):
        return 1 + size(e.left) + size(e.right)
    if isinstance(e, Star):
        return 1 + size(e.body)
    return 1


def has_top(e: Expr) -> bool:
    if isinstance(e, Top):
        return True
    if isinstance(e, (Plus, Dot)):
        return has_top(e.left) or has_top(e.right)
    if isinstance(e, Star):
        return has_top(e.body)
    return False


def letters_of(e: Expr) -> set[str]:
    if isinstance(e, Letter):
        return {e.name}
    if isinstance(e, (Plus, Dot)):
        return letters_of(e.left) | letters_of(e.right)
    if isinstance(e, Star):
        return letters_of(e.body)
    return set()


def sum_of(terms) -> Expr:
    """Left-nested sum, ``0`` when empty."""
    terms = list(terms)
    return reduce(Plus, terms) if terms else Zero()


def product_of(terms) -> Expr:
    """Left-nested product, ``1`` when empty."""
    terms = list(terms)
    return reduce(Dot, terms) if terms else One()


def full_top(alphabet: Alphabet) -> Expr:
    """Expression for every guarded string over the letters and top."""
    leaves = [Letter(a) for a in alphabet.letters] + [Top()]
    return Star(sum_of(leaves))


def reduce_top(e: Expr, alphabet: Alphabet) -> Expr:
    """Replace every ``top`` leaf by ``(a+b+...+top)*``."""
    if isinstance(e, Top):
        return full_top(alphabet)
    if isinstance(e, Plus):
        return Plus(reduce_top(e.left, alphabet), reduce_top(e.right, alphabet))
    if isinstance(e, Dot):
        return Dot(reduce_top(e.left, alphabet), reduce_top(e.right, alphabet))
    if isinstance(e, Star):
        return Star(reduce_top(e.body, alphabet))
    return e


# -- tests ----------------------------------------------------------------------


class TestExpr:
    __slots__ = ()
    __test__ = False


@dataclass(frozen=True)
class TTrue(TestExpr):
    pass


@dataclass(frozen=True)
class TFalse(TestExpr):
    pass


@dataclass(frozen=True)
class Var(TestExpr):
    name: str


@dataclass(frozen=True)
class Not(TestExpr):
    arg: TestExpr


@dataclass(frozen=True)
class And(TestExpr):
    left: TestExpr
    right: TestExpr


@dataclass(frozen=True)
class Or(TestExpr):
    left: TestExpr
    right: TestExpr


def satisfying_atoms(t: TestExpr, alphabet: Alphabet) -> tuple[str, ...]:
    """Atoms satisfying ``t``, in alphabet order.

    With test variables declared, a variable holds in the atoms whose
    valuation sets it. Without them, a variable must name an atom and holds
    exactly there.
    """

    def holds(t, atom):
        if isinstance(t, TTrue):
            return True
        if isinstance(t, TFalse):
            return False
        if isinstance(t, Var):
            if alphabet.tests is not None:
                if t.name not in alphabet.tests:
                    raise UnknownIdentifier(t.name)
                return alphabet.valuation(atom)[t.name]
            if t.name not in alphabet.atoms:
                raise UnknownIdentifier(t.name)
            return atom == t.name
        if isinstance(t, Not):
            return not holds(t.arg, atom)
        if isinstance(t, And):
            return holds(t.left, atom) and holds(t.right, atom)
        if isinstance(t, Or):
            return holds(t.left, atom) or holds(t.right, atom)
        raise TypeError(t)

    return tuple(atom for atom in alphabet.atoms if holds(t, atom))


def elaborate_test(t: TestExpr, alphabet: Alphabet) -> Expr:
    return sum_of(AtomConst(a) for a in satisfying_atoms(t, alphabet))


# -- printing -------------------------------------------------------------------

_PREC_PLUS, _PREC_DOT, _PREC_STAR = 0, 1, 2


def to_string(e: Expr) -> str:
    return _show(e, _PREC_PLUS)


def _show(e: Expr, ctx: int) -> str:
    if isinstance(e, Zero):
        return "0"
    if isinstance(e, One):
        return "1"
    if isinstance(e, Top):
        return "top"
    if isinstance(e, AtomConst):
        return "@" + e.name
    if isinstance(e, Letter):
        return e.name
    if isinstance(e, Plus):
        s = _show(e.left, _PREC_PLUS) + "+" + _show(e.right, _PREC_DOT)
        prec = _PREC_PLUS
    elif isinstance(e, Dot):
        s = _show(e.left, _PREC_DOT) + ";" + _show(e.right, _PREC_STAR)
        prec = _PREC_DOT
    elif isinstance(e, Star):
        return _show(e.body, _PREC_STAR) + "*"
    else:
        raise TypeError(e)
    return f"({s})" if prec < ctx else s


# -- parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>[01])|(?P<op>[-+;*()@\[\]&|!~]))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text) - len(text[pos:].lstrip())
            raise KatSyntaxError(f"unexpected character {text[stripped]!r}", stripped)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.tokens = tokenize(text)
        self.i = 0
        self.alphabet = alphabet
        self.end = len(text)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end)

    def take(self, value=None):
        kind, val, pos = self.peek()
        if kind is None or (value is not None and val != value):
            want = repr(value) if value else "a token"
            got = repr(val) if val is not None else "end of input"
            raise KatSyntaxError(f"expected {want}, got {got}", pos)
        self.i += 1
        return kind, val, pos

    def done(self):
        kind, val, pos = self.peek()
        if kind is not None:
            raise KatSyntaxError(f"unexpected {val!r}", pos)

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[1] == "+":
            self.take()
            e = Plus(e, self.term())
        return e

    def _starts_factor(self):
        kind, val, _ = self.peek()
        return kind in ("ident", "num") or val in ("(", "@", "[")

    def term(self) -> Expr:
        e = self.factor()
        while True:
            if self.peek()[1] == ";":
                self.take()
                e = Dot(e, self.factor())
            elif self._starts_factor():
                e = Dot(e, self.factor())
            else:
                return e

    def factor(self) -> Expr:
        e = self.base()
        while self.peek()[1] == "*":
            self.take()
            e = Star(e)
        return e

    def base(self) -> Expr:
        kind, val, pos = self.take()
        if kind == "num":
            return Zero() if val == "0" else One()
        if kind == "ident":
            return self.identifier(val, pos)
        if val == "@":
            _, name, npos = self.take()
            if name not in self.alphabet.atoms:
                raise UnknownIdentifier(name, npos)
            return AtomConst(name)
        if val == "[":
            t = self.test()
            self.take("]")
            return elaborate_test(t, self.alphabet)
        if val == "(":
            e = self.expr()
            self.take(")")
            return e
        raise KatSyntaxError(f"unexpected {val!r}", pos)

    def identifier(self, name: str, pos: int) -> Expr:
        if name == TOP:
            return Top()
        if name in self.alphabet.letters:
            return Letter(name)
        if all(c in self.alphabet.letters for c in name):
            return product_of(Letter(c) for c in name)
        raise UnknownIdentifier(name, pos)

    def test(self) -> TestExpr:
        t = self.conj()
        while self.peek()[1] == "|":
            self.take()
            t = Or(t, self.conj())
        return t

    def conj(self) -> TestExpr:
        t = self.neg()
        while self.peek()[1] == "&":
            self.take()
            t = And(t, self.neg())
        return t

    def neg(self) -> TestExpr:
        kind, val, pos = self.take()
        if val in ("!", "~", "-"):
            return Not(self.neg())
        if kind == "num":
            return TTrue() if val == "1" else TFalse()
        if kind == "ident":
            names = self.alphabet.tests if self.alphabet.tests is not None else self.alphabet.atoms
            if val not in names:
                raise UnknownIdentifier(val, pos)
            return Var(val)
        if val == "(":
            t = self.test()
            self.take(")")
            return t
        raise KatSyntaxError(f"unexpected {val!r} in test", pos)


def parse(text: str, alphabet: Alphabet) -> Expr:
    p = _Parser(text, alphabet)
    e = p.expr()
    p.done()
    return e


def parse_test(text: str, alphabet: Alphabet) -> TestExpr:
    p = _Parser(text, alphabet)
    t = p.test()
    p.done()
    return t


def infer_letters(*texts: str) -> tuple[str, ...]:
    """Guess single-character letters from expression texts.

    Every identifier other than ``top`` contributes its characters; atom
    names (after ``@``) and bracketed tests are skipped.
    """
    seen: dict[str, None] = {}
    for text in texts:
        tokens = tokenize(text)
        depth = 0
        for i, (kind, val, _) in enumerate(tokens):
            if val == "[":
                depth += 1
            elif val == "]":
                depth -= 1
            elif kind == "ident" and val != TOP and depth == 0 and not (i and tokens[i - 1][1] == "@"):
                for c in val:
                    seen.setdefault(c)
    return tuple(sorted(seen))
