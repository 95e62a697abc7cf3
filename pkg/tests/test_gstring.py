import pytest
from hypothesis import given
from hypothesis import strategies as st

from corpus import CORPUS_TEXT
from katop.closure import ct_member_expr
from katop.gstring import (
    GsLang,
    GuardedString,
    all_gstrings,
    as_expr,
    coalesce,
    denote_bounded,
    format_gstring,
    gs_matches,
    gstrings_upto,
    parse_gstring,
    top_chain,
)
from katop.syntax import TOP, Alphabet, KatSyntaxError, parse

G = GuardedString.of
ABC = Alphabet(("a", "b"), ("alpha", "beta", "gamma"))
TWO = Alphabet(("a", "b"), ("alpha", "beta"))


def test_constructors():
    u = G("alpha", "a", "beta", TOP, "gamma")
    assert u.atoms == ("alpha", "beta", "gamma")
    assert u.symbols == ("a", TOP)
    assert len(u) == 2 and u.first == "alpha" and u.last == "gamma"
    assert u.count_top() == 1
    assert GuardedString.from_pairs(u.pairs, "gamma") == u
    assert u.segment(1, 2) == G("beta", TOP, "gamma")
    with pytest.raises(ValueError):
        GuardedString(("alpha",), ("a",))


@pytest.mark.parametrize(
    "u,v,expected",
    [
        (G("alpha", "a", "beta"), G("beta", "b", "gamma"), G("alpha", "a", "beta", "b", "gamma")),
        (G("alpha", "a", "beta"), G("gamma"), None),
        (G("alpha"), G("alpha"), G("alpha")),
    ],
)
def test_coalesce(u, v, expected):
    assert coalesce(u, v) == expected


def gstrings(atoms=("alpha", "beta"), symbols=("a", TOP), max_len=3):
    return st.integers(0, max_len).flatmap(
        lambda n: st.builds(
            GuardedString,
            st.lists(st.sampled_from(atoms), min_size=n + 1, max_size=n + 1).map(tuple),
            st.lists(st.sampled_from(symbols), min_size=n, max_size=n).map(tuple),
        )
    )


@given(gstrings(), gstrings(), gstrings())
def test_coalesce_associative(u, v, w):
    uv, vw = coalesce(u, v), coalesce(v, w)
    left = coalesce(uv, w) if uv is not None else None
    right = coalesce(u, vw) if vw is not None else None
    if uv is not None and vw is not None:
        assert left == right


@given(gstrings())
def test_atom_units(u):
    assert coalesce(G(u.first), u) == u
    assert coalesce(u, G(u.last)) == u


def test_top_chain():
    u = G("alpha", "a", "beta")
    assert top_chain(u, 0) == u
    assert top_chain(u, 2) == G("alpha", "a", "beta", TOP, "alpha", "a", "beta", TOP, "alpha", "a", "beta")


@pytest.mark.parametrize(
    "text,alphabet,expected",
    [
        ("alpha a beta T gamma", None, G("alpha", "a", "beta", TOP, "gamma")),
        ("alpha ⊤ alpha", None, G("alpha", TOP, "alpha")),
        ("a a a", Alphabet(("a",)), G("alpha", "a", "alpha", "a", "alpha", "a", "alpha")),
        ("alpha", Alphabet(("a",)), G("alpha")),
        ("alpha T alpha", Alphabet(("T",)), G("alpha", "T", "alpha")),
    ],
)
def test_parse_gstring(text, alphabet, expected):
    assert parse_gstring(text, alphabet) == expected


@pytest.mark.parametrize("text,alphabet", [("", None), ("alpha a", None), ("alpha c alpha", ABC), ("delta", ABC)])
def test_parse_gstring_errors(text, alphabet):
    with pytest.raises(KatSyntaxError):
        parse_gstring(text, alphabet)


@given(gstrings())
def test_format_parse_roundtrip(u):
    assert parse_gstring(format_gstring(u)) == u


def test_enumeration_counts():
    assert len(list(all_gstrings(TWO, 2))) == 3**2 * 2**3
    assert len(list(gstrings_upto(TWO, 1))) == 2 + 3 * 4


def test_denote_three_atom_example():
    e = parse("(@alpha;a;@beta + @beta;b;@gamma)*", ABC)
    expected = {G("alpha"), G("beta"), G("gamma"), G("alpha", "a", "beta"), G("beta", "b", "gamma"),
                G("alpha", "a", "beta", "b", "gamma")}
    assert denote_bounded(e, 2, ABC).as_set() == expected


def test_denote_top():
    assert denote_bounded(parse("top", TWO), 1, TWO).as_set() == {
        G(x, TOP, y) for x in TWO.atoms for y in TWO.atoms
    }


@pytest.mark.parametrize("bound", [0, 3, 6])
def test_denote_zero(bound):
    assert len(denote_bounded(parse("0", TWO), bound, TWO)) == 0


@pytest.mark.parametrize("text", CORPUS_TEXT)
def test_truncation_coherent(text):
    e = parse(text, TWO)
    big = denote_bounded(e, 4, TWO)
    for b in range(4):
        assert big.truncate(b) == denote_bounded(e, b, TWO)


@pytest.mark.parametrize("text", CORPUS_TEXT)
def test_denote_matches_automaton_simulation(text):
    e = parse(text, TWO)
    lang = denote_bounded(e, 3, TWO)
    for u in gstrings_upto(TWO, 3):
        assert (u in lang) == ct_member_expr(u, e, TWO, wildcard=False), u


def test_gslang_bound_enforced():
    with pytest.raises(ValueError):
        GsLang((G("alpha", "a", "alpha"),), 0)


@pytest.mark.parametrize(
    "word,expected",
    [
        (["a"], True),
        (["alpha", "alpha", "a", "beta"], True),
        (["beta", "a"], False),
        (["a", "beta", "beta"], True),
        (["a", "a"], False),
    ],
)
def test_gs_matches(word, expected):
    assert gs_matches(word, G("alpha", "a", "beta")) is expected


@given(gstrings(atoms=("alpha", "beta"), symbols=("a", "b", TOP)))
def test_as_expr_denotes_singleton(u):
    assert denote_bounded(as_expr(u), len(u), TWO).as_set() == {u}
