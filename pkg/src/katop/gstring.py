"""Guarded strings and a bounded denotational semantics used as ground truth."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .syntax import TOP, Alphabet, AtomConst, Dot, Expr, Letter, One, Plus, Star, Top, Zero, KatSyntaxError


@dataclass(frozen=True, order=True)
class GuardedString:
    """``atoms[0] symbols[0] atoms[1] ... symbols[n-1] atoms[n]``."""

    atoms: tuple[str, ...]
    symbols: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(self.atoms) != len(self.symbols) + 1:
            raise ValueError("a guarded string has one more atom than symbols")

    @classmethod
    def of(cls, *items: str) -> GuardedString:
        """Build from the interleaved sequence ``atom, symbol, atom, ...``."""
        return cls(items[0::2], items[1::2])

    @classmethod
    def from_pairs(cls, pairs, last: str) -> GuardedString:
        pairs = list(pairs)
        return cls(tuple(a for a, _ in pairs) + (last,), tuple(x for _, x in pairs))

    def __len__(self):
        return len(self.symbols)

    @property
    def first(self) -> str:
        return self.atoms[0]

    @property
    def last(self) -> str:
        return self.atoms[-1]

    @property
    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(zip(self.atoms, self.symbols))

    def items(self) -> tuple[str, ...]:
        out = [self.atoms[0]]
        for x, a in zip(self.symbols, self.atoms[1:]):
            out += [x, a]
        return tuple(out)

    def segment(self, i: int, j: int) -> GuardedString:
        """The guarded substring between atom positions ``i`` and ``j``."""
        return GuardedString(self.atoms[i:j + 1], self.symbols[i:j])

    def count_top(self) -> int:
        return self.symbols.count(TOP)

    def __str__(self):
        return format_gstring(self)


def coalesce(u: GuardedString, v: GuardedString) -> GuardedString | None:
    """Coalesced product, or ``None`` when the boundary atoms differ."""
    if u.last != v.first:
        return None
    return GuardedString(u.atoms + v.atoms[1:], u.symbols + v.symbols)


def top_chain(u: GuardedString, n: int) -> GuardedString:
    """``(u top)^n u``: ``n+1`` copies of ``u`` separated by top."""
    atoms, symbols = list(u.atoms), list(u.symbols)
    for _ in range(n):
        symbols += [TOP] + list(u.symbols)
        atoms += list(u.atoms)
    return GuardedString(atoms, symbols)


def format_gstring(u: GuardedString) -> str:
    return " ".join("T" if x == TOP else x for x in u.items())


def parse_gstring(text: str, alphabet: Alphabet | None = None) -> GuardedString:
    """Read ``alpha a beta T gamma``.

    ``T`` (or ``top``) is top unless ``T`` is a declared letter. Over a
    single-atom alphabet the atoms may be left out entirely, so ``a a a``
    denotes the guarded string of the word ``aaa``.
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise KatSyntaxError("empty guarded string")

    def symbol(tok):
        if tok in ("top", "⊤") or (tok == "T" and not (alphabet and "T" in alphabet.letters)):
            return TOP
        return tok

    if alphabet is not None and len(alphabet.atoms) == 1:
        if all(t not in alphabet.atoms for t in tokens):
            atom = alphabet.atoms[0]
            return GuardedString((atom,) * (len(tokens) + 1), tuple(symbol(t) for t in tokens))
    if len(tokens) % 2 == 0:
        raise KatSyntaxError("a guarded string must start and end with an atom")
    u = GuardedString(tuple(tokens[0::2]), tuple(symbol(t) for t in tokens[1::2]))
    if alphabet is not None:
        for a in u.atoms:
            if a not in alphabet.atoms:
                raise KatSyntaxError(f"unknown atom {a!r}")
        for x in u.symbols:
            if x not in alphabet.symbols:
                raise KatSyntaxError(f"unknown letter {x!r}")
    return u


def all_gstrings(alphabet: Alphabet, length: int, symbols=None):
    """Every guarded string of exactly ``length`` symbols, in canonical order."""
    symbols = alphabet.symbols if symbols is None else tuple(symbols)
    for syms in itertools.product(symbols, repeat=length):
        for atoms in itertools.product(alphabet.atoms, repeat=length + 1):
            yield GuardedString(atoms, syms)


def gstrings_upto(alphabet: Alphabet, bound: int, symbols=None):
    for n in range(bound + 1):
        yield from all_gstrings(alphabet, n, symbols)


@dataclass(frozen=True)
class GsLang:
    """A finite language holding every member of some language up to ``bound``."""

    elems: tuple[GuardedString, ...]
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "elems", tuple(sorted(set(self.elems))))
        if any(len(u) > self.bound for u in self.elems):
            raise ValueError("element longer than the bound")

    def __contains__(self, u):
        return u in self.as_set()

    def __iter__(self):
        return iter(self.elems)

    def __len__(self):
        return len(self.elems)

    def as_set(self) -> frozenset[GuardedString]:
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(self.elems)
            object.__setattr__(self, "_set", cached)
        return cached

    def truncate(self, bound: int) -> GsLang:
        return GsLang(tuple(u for u in self.elems if len(u) <= bound), min(bound, self.bound))


def _product(left, right, bound):
    by_first: dict[str, list[GuardedString]] = {}
    for v in right:
        by_first.setdefault(v.first, []).append(v)
    out = set()
    for u in left:
        for v in by_first.get(u.last, ()):
            if len(u) + len(v) <= bound:
                out.add(coalesce(u, v))
    return out


def _denote(e: Expr, bound: int, atoms) -> set[GuardedString]:
    if isinstance(e, Zero):
        return set()
    if isinstance(e, One):
        return {GuardedString((a,)) for a in atoms}
    if isinstance(e, AtomConst):
        return {GuardedString((e.name,))}
    if isinstance(e, (Letter, Top)):
        if bound < 1:
            return set()
        x = TOP if isinstance(e, Top) else e.name
        return {GuardedString((a, b), (x,)) for a in atoms for b in atoms}
    if isinstance(e, Plus):
        return _denote(e.left, bound, atoms) | _denote(e.right, bound, atoms)
    if isinstance(e, Dot):
        return _product(_denote(e.left, bound, atoms), _denote(e.right, bound, atoms), bound)
    if isinstance(e, Star):
        body = _denote(e.body, bound, atoms)
        result = {GuardedString((a,)) for a in atoms}
        frontier = set(result)
        while frontier:
            frontier = _product(frontier, body, bound) - result
            result |= frontier
        return result
    raise TypeError(e)


def denote_bounded(e: Expr, bound: int, alphabet: Alphabet) -> GsLang:
    """Every guarded string of ``[e]`` with at most ``bound`` symbols."""
    return GsLang(tuple(_denote(e, bound, alphabet.atoms)), bound)


def gs_matches(word, u: GuardedString) -> bool:
    """Is ``word`` the string ``u`` with each atom repeated zero or more times?"""
    word = list(word)
    pos = 0

    def run(atom):
        nonlocal pos
        while pos < len(word) and word[pos] == atom:
            pos += 1

    run(u.atoms[0])
    for x, atom in zip(u.symbols, u.atoms[1:]):
        if pos >= len(word) or word[pos] != x:
            return False
        pos += 1
        run(atom)
    return pos == len(word)


def as_expr(u: GuardedString) -> Expr:
    """The guarded string read as the product ``alpha;a;beta;...``."""
    e: Expr = AtomConst(u.atoms[0])
    for x, a in zip(u.symbols, u.atoms[1:]):
        e = Dot(Dot(e, Top() if x == TOP else Letter(x)), AtomConst(a))
    return e
