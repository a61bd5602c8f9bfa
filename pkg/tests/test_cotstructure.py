from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotstruct import cotstructure as ct
from cotstruct.complexes import (
    Complex,
    algebra_stalk,
    cohomology_dims,
    direct_sum,
    hom_space,
    is_contractible,
    is_null_homotopic,
    suspend,
)
from cotstruct.corpus import random_complex
from conftest import a2, a3, kronecker, trivial, two_term


def stalk(alg, v="1", n=0):
    return Complex.stalk(alg, [v], n)


def cplx(alg, seed, span=5, rank=2):
    return random_complex(alg, np.random.default_rng(seed), span, rank)


def total_coh(X, pred):
    return all(not pred(n) for n in cohomology_dims(X))


# -- approximations and the tower --------------------------------------------------------

def test_r_approximation_examples(k):
    S = stalk(k)
    R, f, pieces = ct.r_approximation(S, [S])
    assert R.is_zero() and f.is_zero_data() and pieces == []
    R, f, pieces = ct.r_approximation(stalk(k, n=1), [S])
    assert R.terms == {1: ("1",)} and pieces == [(0, -1, 1)]
    assert hom_space(R, stalk(k, n=1)).coordinates(f).any()
    R, _, _ = ct.r_approximation(Complex.zero(k), [S])
    assert R.is_zero()


def test_tower_examples(k):
    S = stalk(k)
    t = ct.build_tower(S, [S])
    assert len(t) == 0 and t.terminated
    t = ct.build_tower(stalk(k, n=1), [S])
    assert t.terminated and len(t) == 1 and is_contractible(t.last)
    X, _, _ = direct_sum([stalk(k, n=-1), stalk(k, n=2)])
    t = ct.build_tower(X, [S])
    assert t.terminated and len(t) <= 3
    assert all(n <= 0 for n in cohomology_dims(t.last))
    assert cohomology_dims(t.last) == {-1: 1}


def test_nonterminating_carries_partial_tower(A2):
    X = two_term(A2, "1", "2", "a", lo=2)
    with pytest.raises(ct.NonTerminating) as exc:
        ct.build_tower(X, [algebra_stalk(A2)], max_iter=1)
    assert len(exc.value.tower) == 1
    assert exc.value.tower.trace()[0]["R_summands"] > 0


def test_decompose_degree01_example(k):
    X = two_term(k, "1", "1", "0")
    dec = ct.decompose(X, ct.GeneratorSet([stalk(k)], generating=True))
    assert cohomology_dims(dec.a_part) == {1: 1}
    assert cohomology_dims(dec.b_part) == {0: 1}
    assert all(dec.triangle.check().values())


def test_decompose_member_of_b(k):
    X = two_term(k, "1", "1", "0", lo=-1)
    dec = ct.decompose(X, [stalk(k)])
    assert len(dec.tower) == 0 and is_contractible(dec.a_part)


def test_b_approximation_of_positive_object_vanishes(k):
    # cohomology only in degrees >= 1, so X lies in Σ(A) and its B-part is zero
    X, _, _ = direct_sum([stalk(k, n=1), stalk(k, n=3)])
    B, g = ct.b_approximation(X, [stalk(k)])
    assert is_contractible(B)


def test_a2_arrow_hand_derived(A2):
    gens = ct.GeneratorSet([algebra_stalk(A2)], generating=True)
    # degrees -1, 0: H^1 = 0 so X is already in B
    X = two_term(A2, "1", "2", "a", lo=-1)
    dec = ct.decompose(X, gens)
    assert len(dec.tower) == 0 and is_contractible(dec.a_part)
    # degrees 0, 1: one copy of Σ^{-1}(P1 ⊕ P2) kills H^1 = S_2; B_1 = P1 ⊕ P1 ⊕ P2 -> P2
    Y = two_term(A2, "1", "2", "a", lo=0)
    dec = ct.decompose(Y, gens)
    assert ct.hom_dims(algebra_stalk(A2), Y) == {1: 1}
    assert len(dec.tower) == 1
    assert dec.b_part.terms == {0: ("1", "1", "2"), 1: ("2",)}
    assert cohomology_dims(dec.b_part) == {0: 2}
    assert cohomology_dims(dec.b_part, "1") == {0: 2}
    assert cohomology_dims(dec.a_part) == {1: 3}


# -- membership ---------------------------------------------------------------------------

def test_membership_examples(k):
    S = [stalk(k)]
    assert ct.in_B(stalk(k), S) and ct.in_A_bar(stalk(k), S)
    assert not ct.in_B(stalk(k, n=1), S)
    m = ct.in_A_bar(stalk(k, n=-1), S)
    assert not m and m.witness["shift"] == -1
    assert ct.in_A_bar(stalk(k, n=2), S)
    with pytest.raises(ct.SampleError, match="sample not in B"):
        ct.in_A_sampled(stalk(k), S, [stalk(k, n=1)])


@given(st.integers(0, 2**32 - 1))
def test_membership_matches_cohomology_trivial(seed):
    k = trivial()
    X = cplx(k, seed, 7, 3)
    S = [stalk(k)]
    assert bool(ct.in_B(X, S)) == total_coh(X, lambda n: n > 0)
    assert bool(ct.in_A_bar(X, S)) == total_coh(X, lambda n: n < 0)
    assert bool(ct.in_B(X, S)) <= bool(ct.in_B(suspend(X), S))
    assert bool(ct.in_A_bar(X, S)) <= bool(ct.in_A_bar(suspend(X, -1), S))


# -- decomposition properties over several quivers ----------------------------------------

GEN_CHOICES = {
    "trivial": (trivial(), lambda A: [stalk(A)]),
    "a2-free": (a2(), lambda A: [algebra_stalk(A)]),
    "a2-P1": (a2(), lambda A: [stalk(A, "1")]),
    "a3-P2": (a3(), lambda A: [stalk(A, "2")]),
    "kronecker-free": (kronecker(), lambda A: [algebra_stalk(A)]),
    "a3-two": (a3(), lambda A: [stalk(A, "1"), stalk(A, "3", 1)]),
}


@pytest.mark.parametrize("case", sorted(GEN_CHOICES))
@given(seed=st.integers(0, 2**32 - 1))
def test_decomposition_properties(case, seed):
    A, mk = GEN_CHOICES[case]
    gens = mk(A)
    X = cplx(A, seed)
    dec = ct.decompose(X, gens)
    assert dec.tower.terminated
    assert ct.in_B(dec.b_part, gens)
    assert all(dec.triangle.check().values())
    for step in dec.tower.steps:
        assert all(step.triangle.check().values())
    # Hom(Σ^{-1}A, B') = 0 for B' in B
    for Bp in [dec.b_part, ct.b_approximation(cplx(A, seed + 1), gens)[0]]:
        assert hom_space(suspend(dec.a_part, -1), Bp, 0).dimension == 0
    for n in range(len(dec.tower)):
        assert ct.verify_ses(dec.tower, n, gens).passed
    # A lies in the Hom-vanishing class
    assert ct.in_A_bar(dec.a_part, gens)


@given(st.integers(0, 2**32 - 1))
def test_tower_checks_trivial(seed):
    k = trivial()
    gens = ct.GeneratorSet([stalk(k)], generating=True)
    X = cplx(k, seed, 7, 3)
    dec = ct.decompose(X, gens)
    samples = [ct.b_approximation(cplx(k, seed + j, 5, 2), gens)[0] for j in range(1, 4)]
    for n in range(len(dec.tower)):
        assert ct.verify_approx_maps(dec.tower, n, gens, samples).passed
    assert ct.verify_isom(dec, samples, gens).passed
    assert not ct.check_left_approximation(dec.g_X, samples)
    assert ct.setup2_iso_diagnostic(dec, gens).passed


def test_verify_ses_example_slots(k):
    X = two_term(k, "1", "1", "0")
    dec = ct.decompose(X, [stalk(k)])
    rep = ct.verify_ses(dec.tower, 0, [stalk(k)])
    assert rep.passed and rep.checks
    assert all(c.detail["hom_R"] == 0 for c in rep.checks)


# -- setup conditions and diagnostics ---------------------------------------------------

def test_setup2_verdicts(k):
    S = stalk(k)
    assert ct.check_setup2([S]).passed
    assert ct.check_connected_corigid(S).passed
    rep = ct.check_setup2([S, suspend(S)])
    fails = [c for c in rep.checks if not c.passed]
    assert any(c.name.startswith("(2)") for c in fails)
    w = next(c for c in fails if c.name.startswith("(2)")).witness
    assert not is_null_homotopic(w["map"]) and hom_space(w["source"], w["target"], w["shift"]).dimension
    SS, _, _ = direct_sum([S, suspend(S, 2)])
    rep = ct.check_setup2([SS])
    assert [c.name for c in rep.checks if not c.passed] == ["(1) S0,S0"]
    assert not ct.check_connected_corigid(SS).passed


def test_rigidity(k):
    S = stalk(k)
    assert ct.check_rigidity([S]).passed
    assert not ct.check_rigidity([S, suspend(S, -1)]).passed


def test_generating_diagnostic(A2):
    P1 = stalk(A2, "1")
    X = two_term(A2, "1", "2", "a", lo=-1)
    rep = ct.generating_diagnostic([P1], [X])
    assert not rep.passed and rep.checks[0].witness["probe"] == 0
    assert ct.generating_diagnostic([algebra_stalk(A2)], [X]).passed


def test_nondegeneracy_stalk(k):
    rep = ct.nondegeneracy_window([stalk(k)], stalk(k))
    assert [c.detail["shift"] for c in rep.checks] == [-1, 1]
    assert rep.passed
    with pytest.raises(ValueError):
        ct.nondegeneracy_window([stalk(k)], two_term(k, "1", "1", "e_1"))


def test_membership_suite_trivial(k):
    gens = ct.GeneratorSet([stalk(k)], generating=True)
    objs = [stalk(k, n=n) for n in (-1, 0, 2)]
    rep = ct.membership_equality_suite(gens, objs, ct.default_samples(gens))
    assert rep.passed
    literal = {c.name: c.passed for c in rep.checks if c.informational}
    # the stalk in degree 0 lies in both classes, so its B-part is not zero
    assert literal["object1 Ā ⟺ B(X)=0"] is False


def test_membership_suite_a2_counterexample(A2):
    gens = ct.GeneratorSet([algebra_stalk(A2)], generating=True)
    X = two_term(A2, "1", "2", "a", lo=-1)
    assert ct.check_setup2(gens).passed
    assert ct.in_A_bar(X, gens)
    # Σ^{-1}X -> P1 (identity on P1) is not null-homotopic although P1 lies in B
    assert ct.in_B(stalk(A2, "1"), gens)
    assert hom_space(suspend(X, -1), stalk(A2, "1"), 0).dimension == 1
    rep = ct.membership_equality_suite(gens, [X])
    bad = [c for c in rep.checks if not c.passed and not c.informational]
    assert len(bad) == 1 and bad[0].witness["dimension"] > 0


def test_axioms_and_adjacency(k):
    gens = ct.GeneratorSet([stalk(k)], generating=True)
    objs = [cplx(k, s, 7, 3) for s in range(8)]
    assert ct.verify_axioms(gens, objs).passed
    adj = ct.adjacency_report(gens, objs)
    assert adj.passed and adj.info["adjacency"] == "established"


def test_verify_axioms_records_nontermination(A2):
    X = two_term(A2, "1", "2", "a", lo=2)
    rep = ct.verify_axioms([algebra_stalk(A2)], [X], max_iter=1)
    assert not rep.passed
    assert "trace" in rep.checks[0].detail


def test_default_max_iter(k):
    assert ct.default_max_iter(Complex.zero(k)) == 1
    assert ct.default_max_iter(two_term(k, "1", "1", "0")) == 3
    assert ct.default_max_iter(stalk(k, n=1), [suspend(stalk(k))]) == 3
