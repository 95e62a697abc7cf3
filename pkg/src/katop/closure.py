"""Brute-force oracles for the top-closure, the full-closure and E.

``u ->T v`` when ``u = l<>w<>r`` and ``v = l top r``; ``u ->F v`` also when
``v`` is ``u`` with a guarded substring ``w`` expanded to ``w top w``.  A
language closes under these by collecting everything that rewrites into it.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .automata import build_nfa, vec_mul, vec_star
from .gstring import GuardedString, GsLang, top_chain
from .syntax import TOP, Alphabet, Expr


class StepKind(enum.Enum):
    T = "T"
    F = "F"


@dataclass(frozen=True)
class RewriteStep:
    """Atom positions ``i <= j`` of the source; a T-step collapses the segment
    between them to top, an F-step duplicates it around a new top."""

    kind: StepKind
    i: int
    j: int

    def apply(self, u: GuardedString) -> GuardedString:
        if self.kind is StepKind.T:
            return GuardedString(u.atoms[: self.i + 1] + u.atoms[self.j:], u.symbols[: self.i] + (TOP,) + u.symbols[self.j:])
        return GuardedString(
            u.atoms[: self.j + 1] + u.atoms[self.i:],
            u.symbols[: self.j] + (TOP,) + u.symbols[self.i:],
        )


def steps(u: GuardedString, kinds=(StepKind.T,)):
    n = len(u)
    for kind in kinds:
        for i in range(n + 1):
            for j in range(i, n + 1):
                yield RewriteStep(kind, i, j)


def rewrites_T(u: GuardedString) -> set[GuardedString]:
    return {s.apply(u) for s in steps(u)}


def rewrites_F(u: GuardedString) -> set[GuardedString]:
    return {s.apply(u) for s in steps(u, (StepKind.T, StepKind.F))}


def ct_member(u: GuardedString, v: GuardedString) -> bool:
    """Is ``u`` obtained from ``v`` by replacing each top with a guarded string?

    Matching runs over pairs (atom position in ``v``, atom position in ``u``).
    """
    n = len(u)
    if v.first != u.first:
        return False
    current = {0}
    for k, x in enumerate(v.symbols):
        nxt = set()
        target = v.atoms[k + 1]
        for i in current:
            if x == TOP:
                nxt.update(j for j in range(i, n + 1) if u.atoms[j] == target)
            elif i < n and u.symbols[i] == x and u.atoms[i + 1] == target:
                nxt.add(i + 1)
        if not nxt:
            return False
        current = nxt
    return n in current


def ct_member_lang(u: GuardedString, V) -> bool:
    return any(ct_member(u, v) for v in V)


def e_ct_member(u: GuardedString, v: GuardedString) -> bool:
    """``u`` in E(C_T{v}); ``n`` copies beyond the number of tops in ``v`` never help."""
    return any(ct_member(top_chain(u, n), v) for n in range(v.count_top() + 1))


def cf_member_search(u: GuardedString, V, maxlen: int, maxdepth: int) -> bool:
    """Breadth-first search for ``u ->F* v`` with ``v`` in ``V``, within budget.

    ``True`` is definite; ``False`` only means nothing was found.
    """
    targets = V.as_set() if isinstance(V, GsLang) else frozenset(V)
    seen = {u}
    queue = deque([(u, 0)])
    while queue:
        w, depth = queue.popleft()
        if w in targets:
            return True
        if depth == maxdepth:
            continue
        for nxt in rewrites_F(w):
            if len(nxt) <= maxlen and nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, depth + 1))
    return False


def closure_steps(u: GuardedString, depth: int, maxlen: int, full: bool = True) -> list[set[GuardedString]]:
    """Layers of strings reachable from ``u`` by 1..depth rewrite steps."""
    rewrite = rewrites_F if full else rewrites_T
    seen = {u}
    layer = {u}
    layers = []
    for _ in range(depth):
        layer = {w for v in layer for w in rewrite(v) if len(w) <= maxlen} - seen
        seen |= layer
        layers.append(layer)
    return layers


def ct_member_expr(u: GuardedString, e: Expr, alphabet: Alphabet, wildcard: bool = True) -> bool:
    """Exact membership of ``u`` in the top-closure of ``[e]`` (or in ``[e]``
    itself with ``wildcard=False``), by running the automaton of ``e`` on ``u``
    and letting each top transition swallow any segment of ``u``.

    Independent of the top reduction and of the monoid construction.
    """
    nfa = build_nfa(e, alphabet)
    n = len(u)
    reach = [0] * (n + 1)
    reach[0] = nfa.initial
    top = nfa.matrix(TOP)
    for i in range(n + 1):
        atom_run = nfa.matrix(u.atoms[i])
        while True:
            here = vec_star(reach[i], atom_run)
            if wildcard:
                jump = vec_mul(here, top)
                if jump & ~reach[i]:
                    reach[i] |= jump
                    continue
                for j in range(i + 1, n + 1):
                    reach[j] |= jump
            break
        if i == n:
            return bool(here & nfa.final)
        reach[i + 1] |= vec_mul(here, nfa.matrix(u.symbols[i]))
    raise AssertionError("unreachable")
