"""Boolean matrices over bitset rows and partial-derivative automata."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .syntax import TOP, Alphabet, AtomConst, Dot, Expr, Letter, One, Plus, Star, Top, Zero


class DimensionMismatch(ValueError):
    pass


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class BoolMatrix:
    """Square 0/1 matrix; row ``i`` is an int whose bit ``j`` is entry ``(i, j)``."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        self.rows = tuple(rows)
        self._hash = hash(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def from_pairs(cls, dim: int, pairs) -> BoolMatrix:
        rows = [0] * dim
        for i, j in pairs:
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError((i, j))
            rows[i] |= 1 << j
        return cls(rows)

    def pairs(self) -> set[tuple[int, int]]:
        return {(i, j) for i, row in enumerate(self.rows) for j in _bits(row)}

    def __getitem__(self, ij) -> bool:
        i, j = ij
        return bool(self.rows[i] >> j & 1)

    def __eq__(self, other):
        return isinstance(other, BoolMatrix) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __or__(self, other: BoolMatrix) -> BoolMatrix:
        _check(self, other)
        return BoolMatrix(a | b for a, b in zip(self.rows, other.rows))

    def __matmul__(self, other: BoolMatrix) -> BoolMatrix:
        return mat_mul(self, other)

    def __le__(self, other: BoolMatrix) -> bool:
        _check(self, other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __repr__(self):
        body = "; ".join(format(r, f"0{self.dim}b")[::-1] for r in self.rows)
        return f"BoolMatrix[{body}]"


def _check(x: BoolMatrix, y: BoolMatrix):
    if x.dim != y.dim:
        raise DimensionMismatch(f"{x.dim} != {y.dim}")


def mat_id(dim: int) -> BoolMatrix:
    return BoolMatrix(1 << i for i in range(dim))


def mat_zero(dim: int) -> BoolMatrix:
    return BoolMatrix([0] * dim)


def vec_mul(v: int, y: BoolMatrix) -> int:
    """Row vector (as a bitset) times matrix."""
    out = 0
    rows = y.rows
    for k in _bits(v):
        out |= rows[k]
    return out


def mat_mul(x: BoolMatrix, y: BoolMatrix) -> BoolMatrix:
    _check(x, y)
    return BoolMatrix(vec_mul(row, y) for row in x.rows)


def mat_star(x: BoolMatrix) -> BoolMatrix:
    """Reflexive-transitive closure (Warshall on bitset rows)."""
    rows = [row | (1 << i) for i, row in enumerate(x.rows)]
    n = len(rows)
    for k in range(n):
        bit, rk = 1 << k, rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rk
    return BoolMatrix(rows)


def vec_star(v: int, y: BoolMatrix) -> int:
    """``v . y*`` by saturation, without forming the closure."""
    seen = frontier = v
    while frontier:
        frontier = vec_mul(frontier, y) & ~seen
        seen |= frontier
    return seen


# -- partial derivatives ----------------------------------------------------------


def _cat(e: Expr, f: Expr) -> Expr:
    if isinstance(e, One):
        return f
    return Dot(e, f)


@lru_cache(maxsize=None)
def nullable(e: Expr) -> bool:
    if isinstance(e, (One, Star)):
        return True
    if isinstance(e, Plus):
        return nullable(e.left) or nullable(e.right)
    if isinstance(e, Dot):
        return nullable(e.left) and nullable(e.right)
    return False


def _leaf_symbol(e: Expr) -> str | None:
    if isinstance(e, Letter):
        return e.name
    if isinstance(e, AtomConst):
        return e.name
    if isinstance(e, Top):
        return TOP
    return None


@lru_cache(maxsize=None)
def derivatives(e: Expr, x: str) -> frozenset[Expr]:
    """Antimirov partial derivatives of ``e`` by the symbol ``x``."""
    if isinstance(e, (Zero, One)):
        return frozenset()
    leaf = _leaf_symbol(e)
    if leaf is not None:
        return frozenset({One()}) if leaf == x else frozenset()
    if isinstance(e, Plus):
        return derivatives(e.left, x) | derivatives(e.right, x)
    if isinstance(e, Dot):
        out = {_cat(d, e.right) for d in derivatives(e.left, x)}
        if nullable(e.left):
            out |= derivatives(e.right, x)
        return frozenset(out)
    if isinstance(e, Star):
        return frozenset(_cat(d, e) for d in derivatives(e.body, x))
    raise TypeError(e)


@dataclass(frozen=True)
class Nfa:
    """Automaton over atoms, letters and top; ``delta`` maps each symbol to a matrix."""

    size: int
    initial: int
    final: int
    delta: dict[str, BoolMatrix]
    labels: tuple[str, ...] = ()

    def matrix(self, x: str) -> BoolMatrix:
        return self.delta.get(x) or mat_zero(self.size)

    def accepts_word(self, word) -> bool:
        v = self.initial
        for x in word:
            v = vec_mul(v, self.matrix(x))
            if not v:
                return False
        return bool(v & self.final)

    def to_text(self) -> str:
        """One ``src symbol dst`` edge per line, then initial and final states."""
        lines = [f"states {self.size}"]
        for x in sorted(self.delta):
            for i, j in sorted(self.delta[x].pairs()):
                lines.append(f"{i} {'T' if x == TOP else x} {j}")
        lines.append("initial " + " ".join(map(str, _bits(self.initial))))
        lines.append("final " + " ".join(map(str, _bits(self.final))))
        return "\n".join(lines)


def build_nfa(e: Expr, alphabet: Alphabet) -> Nfa:
    """Partial-derivative automaton of ``e`` over atoms and letters-with-top.

    State 0 is ``e`` itself; there are at most ``size(e) + 1`` states.
    """
    symbols = alphabet.atoms + alphabet.symbols
    states = {e: 0}
    order = [e]
    edges: dict[str, list[tuple[int, int]]] = {x: [] for x in symbols}
    i = 0
    while i < len(order):
        src = order[i]
        for x in symbols:
            for d in sorted(derivatives(src, x), key=repr):
                if d not in states:
                    states[d] = len(order)
                    order.append(d)
                edges[x].append((i, states[d]))
        i += 1
    n = len(order)
    delta = {x: BoolMatrix.from_pairs(n, edges[x]) for x in symbols}
    final = sum(1 << k for k, s in enumerate(order) if nullable(s))
    return Nfa(n, 1, final, delta, tuple(str(s) for s in order))
