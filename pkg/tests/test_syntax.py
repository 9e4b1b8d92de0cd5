import pytest
from hypothesis import given

from strategies import formulas
from tsc.errors import ParseError
from tsc.ordinal import OMEGA, ZERO, Ordinal, ord_parse
from tsc.syntax import (
    TOP, And, Diamond, NotAWorm, Sequent, Top, Worm, as_worm, conj, conjuncts,
    diamond, format_formula, format_sequent, in_fragment, n_mod, o_mod,
    parse_formula, parse_sequent, replace_at, size, strip_zero, subformula_at,
    worm_prepend,
)

PHI_TEXT = "<0^w^w*2>T /\\ <2^1>T"
PHI = And(Diamond(0, ord_parse("w^w*2"), TOP), Diamond(2, Ordinal.of(1), TOP))


def test_parse_examples():
    assert parse_formula("T") == Top()
    assert parse_formula(PHI_TEXT) == PHI
    assert parse_formula("<1^0>T") == Diamond(1, ZERO, TOP)


def test_precedence_and_nesting():
    assert parse_formula("<1^w>T /\\ T") == And(diamond(1, OMEGA), TOP)
    assert parse_formula("<1^w>(T /\\ T)") == Diamond(1, OMEGA, And(TOP, TOP))
    assert parse_formula("T & T & T") == And(TOP, And(TOP, TOP))
    assert parse_formula("(T /\\ T) /\\ T") == And(And(TOP, TOP), TOP)
    assert parse_formula("<0^1><1^1>" + "(" + PHI_TEXT + ")") == \
        diamond(0, 1, diamond(1, 1, PHI))


def test_unicode_input():
    assert parse_formula("<0^ω>⊤ ∧ ⊤") == And(diamond(0, OMEGA), TOP)


@pytest.mark.parametrize("bad, column", [
    ("", 1), ("<1^w>", 6), ("<^1>T", 2), ("<1 w>T", 4), ("T /\\", 5), ("(T", 3),
    ("T T", 3), ("<1^>T", 4), ("P", 1),
])
def test_parse_errors_have_positions(bad, column):
    with pytest.raises(ParseError) as info:
        parse_formula(bad)
    assert (info.value.line, info.value.column) == (1, column)


def test_multiline_error_position():
    with pytest.raises(ParseError) as info:
        parse_formula("T /\\\n  <1^w+>T")
    assert (info.value.line, info.value.column) == (2, 8)


def test_format_examples():
    assert format_formula(PHI) == PHI_TEXT
    assert format_formula(And(And(TOP, TOP), TOP)) == "(T /\\ T) /\\ T"
    assert format_formula(Diamond(0, ZERO, And(TOP, TOP))) == "<0^0>(T /\\ T)"


@given(formulas())
def test_roundtrip(f):
    text = format_formula(f)
    assert parse_formula(text) == f
    assert format_formula(parse_formula(text)) == text


def test_sequents():
    s = parse_sequent("<2^1>T |- <0^w^w>T")
    assert s == Sequent(diamond(2, 1), diamond(0, ord_parse("w^w")))
    assert parse_sequent(format_sequent(s)) == s
    with pytest.raises(ParseError):
        parse_sequent("T |- ")
    with pytest.raises(ParseError):
        parse_sequent("T")


def test_n_mod_o_mod():
    assert n_mod(TOP) == frozenset() and o_mod(TOP) == frozenset()
    assert n_mod(PHI) == {0, 2}
    assert o_mod(PHI) == {ord_parse("w^w*2"), Ordinal.of(1)}
    assert n_mod(diamond(1, OMEGA, diamond(1, 2))) == {1}
    assert o_mod(diamond(0, OMEGA, diamond(1, OMEGA))) == {OMEGA}


def test_in_fragment():
    assert in_fragment(TOP, 0)
    assert in_fragment(PHI, 3)
    assert not in_fragment(PHI, 2)


def test_worms():
    assert as_worm(TOP) == Worm()
    assert as_worm(diamond(0, 1, diamond(2, 1))) == Worm(((0, 1), (2, 1)))
    assert as_worm(And(TOP, TOP)) == NotAWorm()
    assert worm_prepend(Worm(), PHI) == PHI
    assert worm_prepend(Worm(((0, 1),)), TOP) == diamond(0, 1)
    assert worm_prepend(Worm(((0, 1), (1, 1))), PHI) == parse_formula(
        "<0^1><1^1>(" + PHI_TEXT + ")")
    assert Worm(((0, 1), (2, 1))).formula() == parse_formula("<0^1><2^1>T")


@given(formulas(), formulas())
def test_prepend_mods(f, g):
    w = as_worm(g)
    if isinstance(w, NotAWorm):
        return
    bases = {n for n, _ in w.modalities}
    exps = {a for _, a in w.modalities}
    assert n_mod(worm_prepend(w, f)) == bases | n_mod(f)
    if w.modalities:
        assert o_mod(worm_prepend(w, f)) == exps | o_mod(f)


@given(formulas())
def test_fragment_upward_closed(f):
    for n in range(6):
        if in_fragment(f, n):
            assert all(in_fragment(f, m) for m in range(n, 8))


def test_strip_zero():
    f = parse_formula("<1^0>(<2^0>T /\\ <0^w><3^0>T)")
    assert strip_zero(f) == And(TOP, diamond(0, OMEGA))
    assert strip_zero(PHI) is PHI


def test_conj_and_size():
    assert conj() == TOP
    assert conj(TOP) == TOP
    parts = [diamond(i, 1) for i in range(3)]
    assert conjuncts(conj(*parts)) == parts
    assert size(TOP) == 1 and size(PHI) == 5


def test_paths():
    f = parse_formula("<1^w>(T /\\ <2^1>T)")
    assert subformula_at(f, ("B", "R")) == diamond(2, 1)
    g = replace_at(f, ("B", "L"), diamond(3, 3))
    assert g == parse_formula("<1^w>(<3^3>T /\\ <2^1>T)")


def test_hash_consistent_with_eq():
    a = parse_formula(PHI_TEXT)
    assert a == PHI and hash(a) == hash(PHI)
    assert len({a, PHI, parse_formula("T")}) == 2
