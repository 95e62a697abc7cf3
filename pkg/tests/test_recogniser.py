import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import CORPUS_TEXT
from katop.automata import BoolMatrix, Nfa, mat_id, mat_mul, mat_zero
from katop.closure import ct_member_expr
from katop.gstring import GuardedString, coalesce, denote_bounded, gstrings_upto, parse_gstring, top_chain
from katop.recogniser import Mode, MultipleAtoms, Recogniser, make_base, make_eclosed, make_sqrt
from katop.syntax import TOP, Alphabet, full_top, parse, reduce_top

G = GuardedString.of
AB = Alphabet(("a", "b"))
A = Alphabet(("a",))
TWO = Alphabet(("a", "b"), ("alpha", "beta"))
ABC = Alphabet(("a", "b"), ("alpha", "beta", "gamma"))
STAR_RHS = "(aaa)*;top;(aa)* + (aa)*;a;top;(aaa)*"


def word(i):
    return GuardedString(("alpha",) * (i + 1), ("a",) * i)


def test_base_examples():
    r = make_base(parse("(@alpha;a;@beta + @beta;b;@gamma)*", ABC), ABC)
    assert r.accepts(G("alpha", "a", "beta", "b", "gamma"))
    assert not r.accepts(G("alpha", "a", "gamma"))
    top = make_base(parse("top", TWO), TWO)
    assert top.accepts(G("alpha", TOP, "beta"))
    assert not top.accepts(G("alpha", "a", "beta"))
    one = make_base(parse("1", TWO), TWO)
    assert all(one.accepts(G(x)) for x in TWO.atoms)
    assert not any(one.accepts(u) for u in gstrings_upto(TWO, 2) if len(u) >= 1)


def test_trivial_recognisers():
    zero = make_base(parse("0", TWO), TWO)
    full = make_base(full_top(TWO), TWO)
    for u in gstrings_upto(TWO, 3):
        assert not zero.accepts(u)
        assert full.accepts(u)
    assert zero.accepts(G("alpha")) == zero.accept(mat_id(zero.dim), "alpha")


def test_step():
    r = make_base(parse("a;b", TWO), TWO)
    ident = r.identity()
    assert r.step(ident, "alpha", "a") == r.h["alpha", "a"]
    two = r.step(r.step(ident, "alpha", "a"), "beta", "b")
    assert two == mat_mul(r.h["alpha", "a"], r.h["beta", "b"])
    assert two == r.image(G("alpha", "a", "beta", "b", "alpha"))


def gstrings(atoms=("alpha", "beta"), symbols=("a", "b", TOP), max_len=3):
    return st.integers(0, max_len).flatmap(
        lambda n: st.builds(
            GuardedString,
            st.lists(st.sampled_from(atoms), min_size=n + 1, max_size=n + 1).map(tuple),
            st.lists(st.sampled_from(symbols), min_size=n, max_size=n).map(tuple),
        )
    )


@settings(deadline=None)
@given(st.sampled_from(CORPUS_TEXT), gstrings(), gstrings())
def test_image_is_homomorphism(text, u, v):
    r = make_base(parse(text, TWO), TWO)
    v = GuardedString((u.last,) + v.atoms[1:], v.symbols)
    assert r.image(coalesce(u, v)) == mat_mul(r.image(u), r.image(v))


@pytest.mark.parametrize("text", CORPUS_TEXT)
def test_base_exact_single_atom(text):
    e = parse(text, AB)
    r = make_base(e, AB)
    lang = denote_bounded(e, 6, AB)
    for u in gstrings_upto(AB, 6):
        assert r.accepts(u) == (u in lang), u


@pytest.mark.parametrize("text", CORPUS_TEXT)
def test_base_exact_two_atoms(text):
    e = parse(text, TWO)
    r = make_base(e, TWO)
    lang = denote_bounded(e, 3, TWO)
    for u in gstrings_upto(TWO, 3):
        assert r.accepts(u) == (u in lang), u


def _n_cap(r, u):
    """Number of distinct powers of x.T, found by cycle detection."""
    y = mat_mul(r.image(u), r.top_step[u.last])
    seen, p = set(), mat_id(r.dim)
    while p not in seen:
        seen.add(p)
        p = mat_mul(p, y)
    return len(seen)


@pytest.mark.parametrize("text", CORPUS_TEXT)
def test_eclosed_exact(text):
    e = parse(text, AB)
    r = make_eclosed(e, AB)
    for u in gstrings_upto(AB, 4):
        n_cap = _n_cap(r, u)
        expected = any(ct_member_expr(top_chain(u, n), e, AB, wildcard=False) for n in range(n_cap + 1))
        assert r.accepts(u) == expected, u


def test_eclosed_worked_example():
    e = parse(STAR_RHS, A)
    r = make_eclosed(e, A)
    assert [i for i in range(13) if r.accepts(word(i))] == [0, 3, 6, 9, 12]
    assert r.accepts(parse_gstring("a a a T a a", A))


def test_eclosed_single_letter():
    r = make_eclosed(parse("a", A), A)
    assert r.accepts(G("alpha", "a", "alpha"))
    assert not r.accepts(G("alpha", TOP, "alpha"))


def test_eclosed_after_reduction_is_everything():
    # (aaa)* and (aa)* both contain the empty word, so the top-closure
    # already contains every string
    r = make_eclosed(reduce_top(parse(STAR_RHS, A), A), A)
    assert all(r.accepts(u) for u in gstrings_upto(A, 5))


def _reference_automaton():
    """The ten-state automaton for (aaa)*T(aa)* + (aa)*aT(aaa)*, given by hand."""
    a_edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 3), (5, 6), (6, 5), (7, 8), (8, 9), (9, 7)]
    delta = {
        "alpha": mat_zero(10),
        "a": BoolMatrix.from_pairs(10, a_edges),
        TOP: BoolMatrix.from_pairs(10, [(0, 3), (6, 7)]),
    }
    return Nfa(10, (1 << 0) | (1 << 5), (1 << 3) | (1 << 7), delta)


def test_reference_automaton_powers():
    nfa = _reference_automaton()
    a = nfa.matrix("a")
    powers = [mat_id(10)]
    for _ in range(6):
        powers.append(mat_mul(powers[-1], a))
    assert powers[6] == mat_id(10)
    assert len(set(powers[:6])) == 6


def test_reference_automaton_predicates():
    nfa = _reference_automaton()
    base = Recogniser(nfa, A, Mode.BASE)
    eclosed = Recogniser(nfa, A, Mode.ECLOSED)
    a, t = nfa.matrix("a"), nfa.matrix(TOP)

    def power(i):
        p = mat_id(10)
        for _ in range(i):
            p = mat_mul(p, a)
        return p

    for i in range(6):
        assert not base.accept(power(i), "alpha")
        assert eclosed.accept(power(i), "alpha") == (i % 3 == 0)
        for j in range(6):
            x = mat_mul(mat_mul(power(i), t), power(j))
            expected = (i % 3 == 0 and j % 2 == 0) or (i % 2 == 1 and j % 3 == 0)
            assert base.accept(x, "alpha") == expected
            assert eclosed.accept(x, "alpha") == expected
    assert not eclosed.accept(mat_zero(10), "alpha")


def _square_in(e, al, w):
    return ct_member_expr(coalesce(w, w), e, al, wildcard=False)


@pytest.mark.parametrize("text", ["(aa)*", "a;a*", "1", "(aaa)*"])
def test_sqrt_brute_force(text):
    e = parse(text, A)
    r = make_sqrt(e, A)
    for i in range(9):
        assert r.accepts(word(i)) == _square_in(e, A, word(i))


@pytest.mark.parametrize(
    "text,accepted",
    [("(aa)*", list(range(9))), ("a;a*", list(range(1, 9))), ("1", [0]), ("(aaa)*", [0, 3, 6])],
)
def test_sqrt_examples(text, accepted):
    r = make_sqrt(parse(text, A), A)
    assert [i for i in range(9) if r.accepts(word(i))] == accepted


def test_sqrt_needs_single_atom():
    with pytest.raises(MultipleAtoms):
        make_sqrt(parse("a", TWO), TWO)
