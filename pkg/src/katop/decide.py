"""Deciding KAT, KAT with a top element, and KAT with a full element.

All three reduce to comparing two recognisers. The search walks pairs of
monoid images breadth-first from the identity, guessing an atom and a symbol
at each step, and stops at the first configuration where the two acceptance
predicates disagree on some atom; the path to it is a shortest witness.
"""
from __future__ import annotations

import enum
import time
from collections import deque
from dataclasses import dataclass, field

from .closure import ct_member_expr
from .gstring import GuardedString
from .recogniser import Recogniser, make_base, make_eclosed
from .relmodel import RelModel, eval_expr, word_model
from .syntax import Alphabet, Expr, Plus, letters_of, reduce_top

DEFAULT_CAP = 1 << 20


class Theory(enum.Enum):
    KAT = "kat"
    KAT_T = "katt"
    KAT_F = "katf"


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class ResourceLimit(RuntimeError):
    """The configuration space outgrew the cap; no verdict was reached."""

    def __init__(self, visited: int, cap: int):
        super().__init__(f"inconclusive: visited {visited} configurations (cap {cap})")
        self.visited = visited
        self.cap = cap


class VerificationError(AssertionError):
    pass


@dataclass(frozen=True)
class Limits:
    visited_cap: int = DEFAULT_CAP


@dataclass(frozen=True)
class Countermodel:
    model: RelModel
    pair: tuple[int, int]
    left: bool
    right: bool

    def to_dict(self) -> dict:
        return {**self.model.to_dict(), "pair": list(self.pair), "left": self.left, "right": self.right}


@dataclass(frozen=True)
class Verdict:
    equal: bool
    theory: Theory
    witness: GuardedString | None = None
    holder: Side | None = None
    countermodel: Countermodel | None = None
    visited: int = 0
    millis: float = field(default=0.0, compare=False)

    def __bool__(self):
        return self.equal


def recogniser_for(e: Expr, th: Theory, alphabet: Alphabet) -> Recogniser:
    if th is Theory.KAT:
        return make_base(e, alphabet)
    if th is Theory.KAT_T:
        return make_base(reduce_top(e, alphabet), alphabet)
    return make_eclosed(reduce_top(e, alphabet), alphabet)


def _check_alphabet(alphabet: Alphabet, *exprs: Expr):
    for e in exprs:
        unknown = letters_of(e) - set(alphabet.letters)
        if unknown:
            raise ValueError(f"letters {sorted(unknown)} missing from the alphabet")


def search(r1: Recogniser, r2: Recogniser, limits: Limits = Limits()):
    """Breadth-first search for a disagreement between two recognisers.

    Returns ``(None, visited)`` when they agree, else ``((pairs, atom, left_accepts), visited)``.
    """
    alphabet = r1.alphabet
    start = (r1.identity(), r2.identity())
    parent: dict = {start: None}
    queue = deque([start])
    moves = [(a, x) for a in alphabet.atoms for x in alphabet.symbols]
    while queue:
        config = queue.popleft()
        x, y = config
        for atom in alphabet.atoms:
            px, py = r1.accept(x, atom), r2.accept(y, atom)
            if px != py:
                path = []
                node = config
                while parent[node] is not None:
                    node, move = parent[node]
                    path.append(move)
                return (path[::-1], atom, px), len(parent)
        for atom, symbol in moves:
            nxt = (r1.step(x, atom, symbol), r2.step(y, atom, symbol))
            if nxt not in parent:
                if len(parent) >= limits.visited_cap:
                    raise ResourceLimit(len(parent) + 1, limits.visited_cap)
                parent[nxt] = (config, (atom, symbol))
                queue.append(nxt)
    return None, len(parent)


def word_countermodel(e: Expr, f: Expr, u: GuardedString, alphabet: Alphabet) -> Countermodel:
    model, pair = word_model(u, alphabet.letters)
    i, j = pair
    return Countermodel(model, pair, eval_expr(e, model)[i, j], eval_expr(f, model)[i, j])


def verify_witness(e: Expr, f: Expr, th: Theory, u: GuardedString, holder: Side, alphabet: Alphabet):
    """Re-check a witness by a route that avoids the recognisers.

    Under KAT_F the word model of ``u`` must separate ``e`` and ``f``; under
    the language theories ``u`` must lie in exactly one of the (closed)
    languages, as computed by direct simulation.
    """
    countermodel = None
    if th is Theory.KAT_F:
        countermodel = word_countermodel(e, f, u, alphabet)
        ok = countermodel.left != countermodel.right and countermodel.left == (holder is Side.LEFT)
    else:
        wildcard = th is Theory.KAT_T
        left = ct_member_expr(u, e, alphabet, wildcard)
        right = ct_member_expr(u, f, alphabet, wildcard)
        ok = left != right and left == (holder is Side.LEFT)
    if not ok:
        raise VerificationError(f"witness {u} failed independent verification under {th.value}")
    return countermodel


def decide(e: Expr, f: Expr, th: Theory, alphabet: Alphabet, limits: Limits = Limits()) -> Verdict:
    _check_alphabet(alphabet, e, f)
    t0 = time.perf_counter()
    found, visited = search(recogniser_for(e, th, alphabet), recogniser_for(f, th, alphabet), limits)
    if found is None:
        return Verdict(True, th, visited=visited, millis=(time.perf_counter() - t0) * 1000)
    path, atom, left_holds = found
    u = GuardedString.from_pairs(path, atom)
    holder = Side.LEFT if left_holds else Side.RIGHT
    countermodel = verify_witness(e, f, th, u, holder, alphabet)
    return Verdict(False, th, u, holder, countermodel, visited, (time.perf_counter() - t0) * 1000)


def leq(e: Expr, f: Expr, th: Theory, alphabet: Alphabet, limits: Limits = Limits()) -> Verdict:
    """``e <= f``, i.e. ``e + f = f``."""
    return decide(Plus(e, f), f, th, alphabet, limits)


def member(e: Expr, u: GuardedString, th: Theory, alphabet: Alphabet) -> bool:
    return recogniser_for(e, th, alphabet).accepts(u)

