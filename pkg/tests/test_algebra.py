from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotstruct.algebra import (
    AlgebraError,
    Quiver,
    element_to_matrix,
    format_element,
    hom_projectives,
    multiply,
    parse_element,
)
from conftest import a2, a3, kronecker, trivial

ALGEBRAS = [trivial(), a2(), a3(), kronecker()]


def test_quiver_validation():
    with pytest.raises(AlgebraError, match="cycle"):
        Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    with pytest.raises(AlgebraError):
        Quiver(["1"], [("a", "1", "1")])
    with pytest.raises(AlgebraError):
        Quiver(["1", "1"])
    with pytest.raises(AlgebraError):
        Quiver(["1", "2"], [("e_1", "1", "2")])
    with pytest.raises(AlgebraError):
        Quiver(["1"], [("a", "1", "3")])


def test_path_basis():
    assert [p.name for p in a3().paths] == ["e_1", "a", "b.a", "e_2", "b", "e_3"]
    assert kronecker().dim == 4
    assert trivial().dim == 1


def test_hom_projectives_counts_paths():
    A = a3()
    assert [format_element(x) for x in hom_projectives(A, 1, 3)] == ["b.a"]
    assert hom_projectives(A, 3, 1) == []
    assert hom_projectives(a2(), 2, 1) == []
    assert len(hom_projectives(kronecker(), 1, 2)) == 2
    assert [format_element(x) for x in hom_projectives(A, 2, 2)] == ["e_2"]


def test_multiplication_rules():
    A = a3()
    a, b = A.path("a"), A.path("b")
    assert multiply(b, a) == A.path("b.a")
    assert multiply(a, b).is_zero()
    assert multiply(A.idempotent(2), a) == a
    assert multiply(a, A.idempotent(1)) == a
    assert multiply(a, A.idempotent(2)).is_zero()


def test_parse_and_format():
    A = a3()
    x = parse_element(A, "2*b.a + e_1 - a")
    assert format_element(x) == "e_1 + 4*a + 2*b.a"
    assert parse_element(A, format_element(x)) == x
    assert parse_element(A, "0").is_zero()
    assert parse_element(A, "1/2*a") == A.path("a").scale(3)
    with pytest.raises(AlgebraError):
        parse_element(A, "c")
    with pytest.raises(AlgebraError):
        parse_element(A, "2**a")


def test_element_to_matrix_a2():
    A = a2()
    # P_1 has basis {e_1}, P_2 has basis {a, e_2}
    assert [A.paths[k].name for k in A.module_basis["2"]] == ["a", "e_2"]
    assert element_to_matrix(A.path("a"), 1, 2).to_lists() == [["1"], ["0"]]
    assert element_to_matrix(A.idempotent(2), 2, 2).to_lists() == [["1", "0"], ["0", "1"]]
    with pytest.raises(AlgebraError):
        element_to_matrix(A.path("a"), 2, 1)


def elements(A):
    return st.lists(st.integers(0, 4), min_size=A.dim, max_size=A.dim).map(
        lambda v: parse_element(A, " + ".join(f"{c}*{p.name}" for c, p in zip(v, A.paths)) or "0")
    )


@pytest.mark.parametrize("A", ALGEBRAS, ids=["trivial", "a2", "a3", "kronecker"])
@given(data=st.data())
def test_ring_axioms(A, data):
    x, y, z = (data.draw(elements(A)) for _ in range(3))
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
    assert multiply(x, y + z) == multiply(x, y) + multiply(x, z)
    assert multiply(A.one(), x) == x == multiply(x, A.one())


@pytest.mark.parametrize("A", ALGEBRAS, ids=["trivial", "a2", "a3", "kronecker"])
def test_idempotents_orthogonal(A):
    for v, w in itertools.product(A.vertices, repeat=2):
        e = multiply(A.idempotent(v), A.idempotent(w))
        assert e == (A.idempotent(v) if v == w else A.zero())


@pytest.mark.parametrize("A", ALGEBRAS, ids=["trivial", "a2", "a3", "kronecker"])
def test_element_to_matrix_is_functorial(A):
    for h, i, j in itertools.product(A.vertices, repeat=3):
        for x in hom_projectives(A, i, j):
            for y in hom_projectives(A, h, i):
                lhs = element_to_matrix(multiply(x, y), h, j)
                assert lhs == element_to_matrix(x, i, j) @ element_to_matrix(y, h, i)
