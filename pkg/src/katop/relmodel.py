"""Finite relational models and the word models of guarded strings."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .automata import BoolMatrix, mat_id, mat_mul, mat_zero
from .graphs import Graph
from .gstring import GuardedString
from .syntax import TOP, Alphabet, AtomConst, Dot, Expr, Letter, One, Plus, Star, Top, Zero


class UninterpretedLetter(KeyError):
    pass


@dataclass(frozen=True)
class RelModel:
    """Relations on ``{0..size-1}``; ``atom_of[x]`` names the partition class of ``x``."""

    size: int
    atom_of: tuple[str, ...]
    valuation: dict[str, frozenset[tuple[int, int]]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "atom_of", tuple(self.atom_of))
        if len(self.atom_of) != self.size or self.size < 1:
            raise ValueError("atom_of must label every element of a nonempty carrier")
        val = {}
        for letter, rel in self.valuation.items():
            rel = frozenset((int(i), int(j)) for i, j in rel)
            if any(not (0 <= i < self.size and 0 <= j < self.size) for i, j in rel):
                raise ValueError(f"relation for {letter!r} leaves the carrier")
            val[letter] = rel
        object.__setattr__(self, "valuation", val)

    def relation(self, letter: str) -> BoolMatrix:
        if letter not in self.valuation:
            raise UninterpretedLetter(letter)
        return BoolMatrix.from_pairs(self.size, self.valuation[letter])

    def to_dict(self) -> dict:
        return {
            "carrier": self.size,
            "atom_of": list(self.atom_of),
            "relations": {a: sorted([i, j] for i, j in rel) for a, rel in sorted(self.valuation.items())},
        }

    def dump(self) -> str:
        lines = [f"carrier {self.size}", "atoms " + " ".join(f"{i}:{a}" for i, a in enumerate(self.atom_of))]
        for a, rel in sorted(self.valuation.items()):
            lines.append(f"{a} " + (" ".join(f"({i},{j})" for i, j in sorted(rel)) or "(empty)"))
        return "\n".join(lines)

    def graph(self, i: int, j: int) -> Graph:
        edges = frozenset((s, a, t) for a, rel in self.valuation.items() for s, t in rel)
        return Graph(self.atom_of, edges, i, j)


def _full(n: int) -> BoolMatrix:
    return BoolMatrix([(1 << n) - 1] * n)


def _closure(r: BoolMatrix) -> BoolMatrix:
    """``(1 + r)`` squared until it stops growing."""
    x = r | mat_id(r.dim)
    while True:
        y = mat_mul(x, x)
        if y == x:
            return x
        x = y


def eval_expr(e: Expr, model: RelModel) -> BoolMatrix:
    n = model.size
    if isinstance(e, Zero):
        return mat_zero(n)
    if isinstance(e, One):
        return mat_id(n)
    if isinstance(e, Top):
        return _full(n)
    if isinstance(e, AtomConst):
        return BoolMatrix.from_pairs(n, [(x, x) for x in range(n) if model.atom_of[x] == e.name])
    if isinstance(e, Letter):
        return model.relation(e.name)
    if isinstance(e, Plus):
        return eval_expr(e.left, model) | eval_expr(e.right, model)
    if isinstance(e, Dot):
        return mat_mul(eval_expr(e.left, model), eval_expr(e.right, model))
    if isinstance(e, Star):
        return _closure(eval_expr(e.body, model))
    raise TypeError(e)


def word_model(u: GuardedString, letters=()) -> tuple[RelModel, tuple[int, int]]:
    """Positions ``0..n`` of ``u``, with ``(i, i+1)`` in ``a`` when the i-th symbol is ``a``."""
    val: dict[str, set] = {a: set() for a in letters}
    for i, x in enumerate(u.symbols):
        if x != TOP:
            val.setdefault(x, set()).add((i, i + 1))
    return RelModel(len(u) + 1, u.atoms, {a: frozenset(r) for a, r in val.items()}), (0, len(u))


def sample_models(alphabet: Alphabet, max_carrier: int, count: int, seed: int, density: float = 0.5):
    """Deterministic stream of random models with independently drawn pairs."""
    if max_carrier < 1:
        raise ValueError("max_carrier must be positive")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_carrier)
        atom_of = tuple(rng.choice(alphabet.atoms) for _ in range(n))
        val = {
            a: frozenset((i, j) for i in range(n) for j in range(n) if rng.random() < density)
            for a in alphabet.letters
        }
        yield RelModel(n, atom_of, val)
