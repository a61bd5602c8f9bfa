from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotstruct.complexes import (
    ChainMap,
    Complex,
    ComplexError,
    _unit_entry,
    algebra_stalk,
    cohomology_dims,
    compose,
    cone,
    direct_sum,
    hom_space,
    homotopic,
    identity,
    is_contractible,
    is_null_homotopic,
    minimal_model,
    suspend,
    suspend_map,
)
from cotstruct.corpus import random_complex
from conftest import a2, a3, kronecker, trivial, two_term

ALGEBRAS = {"trivial": trivial(), "a2": a2(), "a3": a3(), "kronecker": kronecker()}


def complexes(alg, span=4, rank=2):
    return st.integers(0, 2**32 - 1).map(lambda s: random_complex(alg, np.random.default_rng(s), span, rank))


algebras = st.sampled_from(sorted(ALGEBRAS)).map(ALGEBRAS.get)


def stalk(alg, v, n=0):
    return Complex.stalk(alg, [v], n)


# -- construction ----------------------------------------------------------------------

def test_rejects_bad_differentials(A2):
    with pytest.raises(ComplexError, match="entry"):
        Complex(A2, {0: ["2"], 1: ["1"]}, {0: [["a"]]})
    with pytest.raises(ComplexError, match="rows"):
        Complex(A2, {0: ["1"], 1: ["2"]}, {0: [["a"], ["a"]]})
    with pytest.raises(ComplexError):
        Complex(A2, {0: ["3"]})
    k = trivial()
    with pytest.raises(ComplexError, match="d\\^1 d\\^0"):
        Complex(k, {0: ["1"], 1: ["1"], 2: ["1"]}, {0: [["e_1"]], 1: [["e_1"]]})


def test_suspension_convention(k):
    X = two_term(k, "1", "1", "2*e_1")
    S = suspend(X)
    assert S.terms == {-1: ("1",), 0: ("1",)}
    assert S.entry(-1, 0, 0) == k.element("3*e_1")
    assert suspend(S, -1) == X
    assert suspend(suspend(X, 2), -3) == suspend(X, -1)


def test_cone_of_zero_map(k):
    f = ChainMap(stalk(k, "1"), stalk(k, "1"), 0, {})
    W = cone(f).W
    assert W.terms == {-1: ("1",), 0: ("1",)} and not W.diffs


def test_cohomology_examples(k, A2):
    assert cohomology_dims(two_term(k, "1", "1", "0")) == {0: 1, 1: 1}
    assert cohomology_dims(two_term(k, "1", "1", "e_1")) == {}
    X = two_term(A2, "1", "2", "a")
    assert cohomology_dims(X) == {1: 1}
    assert cohomology_dims(X, "2") == {1: 1}
    assert cohomology_dims(X, "1") == {}


def test_contractible_two_term(k):
    X = two_term(k, "1", "1", "e_1")
    assert is_contractible(X)
    for n in range(-2, 3):
        assert hom_space(stalk(k, "1"), X, n).dimension == 0


def test_hom_examples(k, A2):
    s = stalk(k, "1")
    assert hom_space(s, s, 0).dimension == 1
    assert hom_space(s, two_term(k, "1", "1", "0"), 1).dimension == 1
    X = two_term(A2, "1", "2", "a")
    f = ChainMap(X, stalk(A2, "1"), 0, {0: [["e_1"]]})
    assert hom_space(X, stalk(A2, "1"), 0).dimension == 1
    assert is_null_homotopic(f) is None
    g = ChainMap(stalk(A2, "1"), stalk(A2, "2"), 0, {0: [["a"]]})
    assert hom_space(stalk(A2, "1"), stalk(A2, "2")).dimension == 1
    assert hom_space(stalk(A2, "2"), stalk(A2, "1")).dimension == 0
    assert not homotopic(g, g.scale(2))


def test_chain_map_validation(A2):
    X = two_term(A2, "1", "2", "a")
    with pytest.raises(ComplexError, match="commute"):
        ChainMap(stalk(A2, "1"), X, 0, {0: [["e_1"]]})
    with pytest.raises(ComplexError):
        ChainMap(stalk(A2, "2"), stalk(A2, "1"), 0, {0: [["a"]]})


def test_direct_sum_injections(A3):
    X = two_term(A3, "1", "3", "b.a")
    Y = stalk(A3, "2", 1)
    S, inj, proj = direct_sum([X, Y])
    for i, p, Z in zip(inj, proj, [X, Y]):
        assert homotopic(compose(p, i), identity(Z))


# -- properties ----------------------------------------------------------------------------

@given(algebras.flatmap(lambda A: st.tuples(st.just(A), complexes(A))), st.integers(-3, 3))
def test_hom_from_stalk_is_cohomology(data, n):
    A, X = data
    for v in A.vertices:
        assert hom_space(stalk(A, v), X, n).dimension == cohomology_dims(X, v).get(n, 0)


@given(algebras.flatmap(lambda A: st.tuples(st.just(A), complexes(A), complexes(A))), st.integers(-2, 2))
def test_hom_shift_invariance(data, n):
    A, X, Y = data
    d = hom_space(X, Y, n).dimension
    assert hom_space(suspend(X), suspend(Y), n).dimension == d
    assert hom_space(suspend(X, -n), Y, 0).dimension == d


@given(algebras.flatmap(lambda A: st.tuples(st.just(A), complexes(A), complexes(A), complexes(A))))
def test_hom_additive(data):
    A, X, Y, Z = data
    S, _, _ = direct_sum([Y, Z])
    for n in (-1, 0, 1):
        assert hom_space(X, S, n).dimension == hom_space(X, Y, n).dimension + hom_space(X, Z, n).dimension


@given(algebras.flatmap(lambda A: st.tuples(st.just(A), complexes(A), complexes(A))), st.integers(0, 2**16))
def test_cone_triangle_composites(data, pick):
    A, X, Y = data
    sp = hom_space(X, Y, 0)
    maps = sp.representatives
    f = maps[pick % len(maps)] if maps else ChainMap(X, Y, 0, {})
    tri = cone(f)
    assert all(tri.check().values())
    # long exact sequence: Euler characteristic of the cone
    chi = lambda C: sum((-1) ** n * h for n, h in cohomology_dims(C).items())
    assert chi(tri.W) == chi(Y) - chi(X)


@given(algebras.flatmap(lambda A: st.tuples(st.just(A), complexes(A))))
def test_cone_of_identity_contractible(data):
    A, X = data
    assert is_contractible(cone(identity(X)).W)


@given(algebras.flatmap(lambda A: st.tuples(st.just(A), complexes(A), complexes(A))), st.integers(-2, 2))
def test_suspend_map_is_chain_map(data, m):
    A, X, Y = data
    for n in (-1, 0, 1):
        for f in hom_space(X, Y, n).representatives:
            g = suspend_map(f, m)
            ChainMap(g.source, g.target, g.shift, g.components)  # validates
            assert hom_space(g.source, g.target, n).coordinates(g).any()


@given(algebras.flatmap(lambda A: st.tuples(st.just(A), complexes(A))))
def test_null_homotopies_verify(data):
    A, X = data
    h = is_null_homotopic(identity(X))
    assert (h is not None) == (cohomology_dims(X) == {})


@given(algebras.flatmap(lambda A: st.tuples(st.just(A), complexes(A, span=5, rank=3))))
def test_minimal_model(data):
    A, X = data
    M = minimal_model(X)
    assert _unit_entry(M) is None
    for v in A.vertices:
        assert cohomology_dims(M, v) == cohomology_dims(X, v)
    assert M.is_zero() == is_contractible(X)
    assert hom_space(M, X, 0).dimension == hom_space(X, X, 0).dimension


def test_key_and_equality(A2):
    X = two_term(A2, "1", "2", "a")
    Y = two_term(A2, "1", "2", "a")
    assert X == Y and hash(X) == hash(Y) and X.key == Y.key
    assert X != two_term(A2, "1", "2", "2*a")
    assert algebra_stalk(A2).terms == {0: ("1", "2")}
