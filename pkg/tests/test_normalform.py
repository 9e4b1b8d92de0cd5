import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import ref, ref_add, ref_e, ref_mul, ref_nat
from strategies import formulas, infs, mnfs, positive_ordinals
from tsc.errors import InvariantViolation, PreconditionViolation
from tsc.normalform import (
    Inf, Mnf, Monomial, check_inf, check_mnf, embed, inf_to_mnf, insert_monomial,
    merge_mnf, mnf_from_formula, mnf_to_inf, normalize, normalize_to_inf,
    normalize_traced, push_modality, truncate_to_threshold,
)
from tsc.ordinal import ONE, Ordinal, hyper_exp, ord_parse
from tsc.syntax import TOP, Worm, parse_formula

P = ord_parse
F = parse_formula
PHI = "(<0^w^w*2>T /\\ <2^1>T)"


def mnf(text):
    return mnf_from_formula(F(text))


# recognition


def test_check_mnf_examples():
    assert check_mnf(TOP) and check_inf(Worm())
    assert check_mnf(F(PHI))
    # w^w*2 = e^2(1)*(2+0), checked with the reference arithmetic
    assert ref(P("w^w*2")) == ref_mul(ref_e(2, ref_nat(1)), ref_nat(2))
    assert not check_mnf(F("<0^w>T /\\ <1^1>T"))
    assert not check_mnf(F("<1^w>T /\\ <0^w^w>T"))     # bases not ascending
    assert not check_mnf(F("<1^0>T"))
    assert not check_mnf(F("<1^w><2^1>T"))              # not a monomial
    assert check_mnf(mnf("<1^w*2>T /\\ <2^1>T"))
    assert check_mnf(F("(<0^w^(w*2)*2>T /\\ <1^w*2>T) /\\ <2^1>T"))


def test_check_inf():
    assert check_inf(Inf(((0, 1), (2, 1))))
    assert not check_inf(Inf(((2, 1), (0, 1))))
    assert not check_inf(Inf(((0, 0), (2, 1))))


def test_monomial_rejects_zero():
    with pytest.raises(InvariantViolation):
        Monomial(0, 0)
    with pytest.raises(InvariantViolation):
        mnf_from_formula(F("<0^w>T /\\ <1^1>T"))


# I and M


def test_mnf_to_inf_examples():
    assert mnf_to_inf(Mnf()) == Inf()
    assert mnf_to_inf(mnf(PHI)) == Inf(((0, 1), (2, 1)))
    assert mnf_to_inf(mnf("<1^w*2>T /\\ <2^1>T")) == Inf(((1, 1), (2, 1)))


def test_inf_to_mnf_examples():
    assert inf_to_mnf(Inf()) == Mnf()
    assert inf_to_mnf(Inf(((0, 1), (2, 1)))) == mnf(PHI)
    assert inf_to_mnf(Inf(((0, 1), (1, 1), (2, 1)))) == \
        mnf("<0^w^(w*2)*2>T /\\ <1^w*2>T /\\ <2^1>T")


def test_inf_to_mnf_uses_mnf_exponent():
    # the exponent of <0^..> is e^1(a1)*(1+b0) with a1 the MNF exponent w*2
    # of base 1, not the INF exponent 1
    psi = inf_to_mnf(Inf(((0, 1), (1, 1), (2, 1))))
    expected = ref_mul(ref_e(1, ref(P("w*2"))), ref_add(ref_nat(1), ref_nat(1)))
    assert ref(psi[0].exponent) == expected


def test_mnf_to_inf_rejects_bad_input():
    with pytest.raises(InvariantViolation):
        mnf_to_inf(Mnf((Monomial(0, P("w")), Monomial(1, 1))))
    with pytest.raises(InvariantViolation):
        mnf_to_inf(Mnf((Monomial(0, P("w+1")), Monomial(1, 1))))
    with pytest.raises(InvariantViolation):
        inf_to_mnf(Inf(((1, 1), (1, 1))))


@given(mnfs())
def test_roundtrip_mnf(psi):
    assert psi.is_valid()
    a = mnf_to_inf(psi)
    assert check_inf(a)
    assert inf_to_mnf(a) == psi


@given(infs())
def test_roundtrip_inf(a):
    psi = inf_to_mnf(a)
    assert psi.is_valid()
    assert mnf_to_inf(psi) == a


@given(mnfs())
def test_head_peeling(psi):
    assert mnf_to_inf(psi.tail()) == mnf_to_inf(psi).tail()


# conjunction


def test_truncate():
    mu = P("w^(w*2)")
    assert truncate_to_threshold(P("w^(w*2)*3+w"), mu) == P("w^(w*2)*4")
    assert truncate_to_threshold(P("w^(w*2)*3"), mu) == P("w^(w*2)*3")


def test_insert_examples():
    psi = mnf("<1^w*2>T /\\ <2^1>T")
    assert insert_monomial(Monomial(0, P("w")), psi) == psi
    assert insert_monomial(Monomial(0, P("w^(w*2)*3+w")), psi) == \
        Mnf((Monomial(0, P("w^(w*2)*4")),) + psi.monomials)
    assert insert_monomial(Monomial(0, 5), Mnf()) == Mnf((Monomial(0, 5),))
    with pytest.raises(PreconditionViolation):
        insert_monomial(Monomial(3, 1), psi)


def test_insert_equal_base_reinserts():
    # the larger head exponent has to be re-fitted to the rest of the MNF
    psi = mnf("<0^w*2>T /\\ <1^1>T")
    out = insert_monomial(Monomial(0, P("w*2+1")), psi)
    assert out.is_valid()
    assert out == mnf("<0^w*3>T /\\ <1^1>T")


def test_merge_examples():
    b = mnf("<1^w*2>T /\\ <2^1>T")
    assert merge_mnf(Mnf(), b) == b
    assert merge_mnf(Mnf((Monomial(0, P("w^w*2+w")),)), b) == b
    assert merge_mnf(b, b) == b


@given(mnfs(), mnfs(), mnfs())
def test_merge_laws(a, b, c):
    ab = merge_mnf(a, b)
    assert ab.is_valid()
    assert ab == merge_mnf(b, a)
    assert merge_mnf(ab, c) == merge_mnf(a, merge_mnf(b, c))
    assert merge_mnf(a, a) == a


# modalities


def test_push_examples():
    assert push_modality(1, ONE, mnf("<2^1>T")) == mnf("<1^w*2>T /\\ <2^1>T")
    assert push_modality(0, P("w*2"), mnf(PHI)) == mnf("<0^w^(w+1)*2>T /\\ <2^1>T")
    assert push_modality(5, P("w"), Mnf()) == mnf("<5^w>T")
    with pytest.raises(PreconditionViolation):
        push_modality(0, Ordinal.of(0), Mnf())


def test_push_value_against_reference():
    # <0^(w*2)> over phi: Schmerl with mu = e^2(1), giving mu*(1 + w*2)
    expected = ref_mul(ref_e(2, ref_nat(1)), ref_add(ref_nat(1), ref(P("w*2"))))
    assert ref(push_modality(0, P("w*2"), mnf(PHI))[0].exponent) == expected


@given(positive_ordinals(2), positive_ordinals(2), st.integers(0, 4))
def test_push_degenerate_coadditive(a0, a, n):
    assert push_modality(n, a, Mnf((Monomial(n, a0),))) == Mnf((Monomial(n, a0 + a),))


@given(st.integers(0, 5), positive_ordinals(2), mnfs())
def test_push_fine_tuning(n, alpha, psi):
    out = push_modality(n, alpha, psi)
    assert out.is_valid()
    bases = set(psi.bases)
    if psi.monomials and n < psi[0].base:
        assert set(out.bases) == {n} | bases
        head = psi[0]
        assert out[0].exponent == hyper_exp(head.base - n, head.exponent) * (1 + alpha)
    elif psi.monomials and n == psi[0].base:
        assert set(out.bases) == bases
    else:
        assert set(out.bases) <= {n} | bases


# normalize


def test_normalize_examples():
    assert normalize(TOP) == Mnf()
    assert normalize(F("<0^1><1^1>" + PHI)) == \
        mnf("<0^w^(w*2)*2>T /\\ <1^w*2>T /\\ <2^1>T")
    assert normalize(F("<0^w*2>" + PHI)) == mnf("<0^w^(w+1)*2>T /\\ <2^1>T")
    assert normalize(F("<1^0>T /\\ T")) == Mnf()
    assert normalize(F("<1^1><2^1>T")) == normalize(F("<1^w*2>T /\\ <2^1>T"))


def test_normalize_to_inf_examples():
    assert normalize_to_inf(TOP) == Inf()
    assert normalize_to_inf(F(PHI)) == Inf(((0, 1), (2, 1)))
    assert normalize_to_inf(F("<0^1><1^1>" + PHI)) == Inf(((0, 1), (1, 1), (2, 1)))


@settings(max_examples=200)
@given(formulas())
def test_normalize_properties(f):
    psi = normalize(f)
    assert psi.is_valid()
    assert normalize(embed(psi)) == psi
    assert check_mnf(embed(psi))


@settings(max_examples=200)
@given(formulas())
def test_traced_matches_plain(f):
    psi, trace = normalize_traced(f)
    assert psi == normalize(f)
    current = f
    for step in trace:
        assert step.before == current
        current = step.after
    assert current == embed(psi)
