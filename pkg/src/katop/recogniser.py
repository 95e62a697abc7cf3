"""Transition-monoid recognisers for guarded-string languages.

A recogniser maps each pair ``(atom, symbol)`` to a boolean matrix
``h(alpha, x) = D(alpha)* . D(x)`` over the states of an automaton, and
accepts a guarded string ``pairs . alpha`` when the acceptance predicate
holds of ``(product of h over pairs, alpha)``.
"""
from __future__ import annotations

import enum

from .automata import BoolMatrix, Nfa, build_nfa, mat_id, mat_mul, mat_star, vec_mul, vec_star
from .gstring import GuardedString
from .syntax import TOP, Alphabet, Expr


class Mode(enum.Enum):
    BASE = "base"
    ECLOSED = "eclosed"
    SQRT = "sqrt"


class MultipleAtoms(ValueError):
    pass


class Recogniser:
    def __init__(self, nfa: Nfa, alphabet: Alphabet, mode: Mode = Mode.BASE):
        if mode is Mode.SQRT and len(alphabet.atoms) != 1:
            raise MultipleAtoms("the square-root recogniser needs a single-atom alphabet")
        self.nfa = nfa
        self.alphabet = alphabet
        self.mode = mode
        self.atom_star = {a: mat_star(nfa.matrix(a)) for a in alphabet.atoms}
        self.h = {
            (a, x): mat_mul(self.atom_star[a], nfa.matrix(x))
            for a in alphabet.atoms
            for x in alphabet.symbols
        }
        self.top_step = {a: self.h[a, TOP] for a in alphabet.atoms}
        self._cache: dict[tuple[BoolMatrix, str], bool] = {}

    @property
    def dim(self) -> int:
        return self.nfa.size

    def identity(self) -> BoolMatrix:
        return mat_id(self.dim)

    def step(self, x: BoolMatrix, atom: str, symbol: str) -> BoolMatrix:
        return mat_mul(x, self.h[atom, symbol])

    def image(self, u: GuardedString) -> BoolMatrix:
        x = self.identity()
        for atom, symbol in u.pairs:
            x = self.step(x, atom, symbol)
        return x

    def base_accept(self, x: BoolMatrix, atom: str) -> bool:
        v = vec_mul(vec_mul(self.nfa.initial, x), self.atom_star[atom])
        return bool(v & self.nfa.final)

    def accept(self, x: BoolMatrix, atom: str) -> bool:
        key = (x, atom)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._accept(x, atom)
        return hit

    def _accept(self, x: BoolMatrix, atom: str) -> bool:
        if self.mode is Mode.BASE:
            return self.base_accept(x, atom)
        if self.mode is Mode.SQRT:
            return self.base_accept(mat_mul(x, x), atom)
        # (x . T_alpha)* . x . D(alpha)* meets I x F, evaluated from the initial row
        loop = mat_mul(x, self.top_step[atom])
        v = vec_star(self.nfa.initial, loop)
        v = vec_mul(vec_mul(v, x), self.atom_star[atom])
        return bool(v & self.nfa.final)

    def accepts(self, u: GuardedString) -> bool:
        return self.accept(self.image(u), u.last)


def make_base(e: Expr, alphabet: Alphabet) -> Recogniser:
    return Recogniser(build_nfa(e, alphabet), alphabet, Mode.BASE)


def make_eclosed(e: Expr, alphabet: Alphabet) -> Recogniser:
    """Recogniser for ``{w | (w top)^n w in [e] for some n}``."""
    return Recogniser(build_nfa(e, alphabet), alphabet, Mode.ECLOSED)


def make_sqrt(e: Expr, alphabet: Alphabet) -> Recogniser:
    """Recogniser for ``{w | ww in [e]}`` over a single atom."""
    if len(alphabet.atoms) != 1:
        raise MultipleAtoms("the square-root recogniser needs a single-atom alphabet")
    return Recogniser(build_nfa(e, alphabet), alphabet, Mode.SQRT)
