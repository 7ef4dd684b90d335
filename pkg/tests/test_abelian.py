from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import B4, DELTA, G1, G2, G3, Z2, w
from garside import (
    BudgetExceeded,
    Element,
    FreeAbelianStructure,
    InputError,
    abelian_basis,
    conj_member,
    dirichlet_approx,
    hnf_complement,
    integer_relation,
    member,
    norm_constants,
    normalize,
    subgroups_conjugate,
    subgroups_equal,
    translation_number,
)
from garside.abelian import iter_shell, presentation
from garside.core import exponent_vector
from garside.hnf import determinant, hermite_normal_form, matmul, identity_matrix

Z3 = FreeAbelianStructure(3)


def z(vec, S=Z2) -> Element:
    word = [i + 1 if v > 0 else -(i + 1) for i, v in enumerate(vec) for _ in range(abs(v))]
    return normalize(word, S)


def product(gens, a):
    e = Element.identity(gens[0].structure)
    for g, k in zip(gens, a):
        e = e * g ** k
    return e


def lattice_member(vectors, u) -> bool:
    """Oracle: is ``u`` an integer combination of ``vectors``?"""
    from sympy import Matrix
    from sympy.matrices.normalforms import hermite_normal_form as hnf

    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return not any(u)
    a = Matrix([list(v) for v in vectors]).T
    return hnf(a) == hnf(a.row_join(Matrix(list(u))))


# ------------------------------------------------------------ numerics


def test_dirichlet_examples():
    assert dirichlet_approx([Fraction(1, 2)], 2) == (2, (1,))
    assert dirichlet_approx([3, -1], 5) == (1, (3, -1))
    assert dirichlet_approx([Fraction(1, 3), Fraction(2, 3)], 3) == (3, (1, 2))


@given(
    st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=30), min_size=1, max_size=3),
    st.integers(1, 6),
)
def test_dirichlet_bounds(x, M):
    k, a = dirichlet_approx(x, M)
    assert 1 <= k <= M ** len(x)
    assert all(abs(k * xi - ai) <= Fraction(1, M) for xi, ai in zip(x, a))


def test_norm_constants():
    assert norm_constants(1, 1, 6) == (144, 1)
    assert norm_constants(2, 1, 6) == (6912, 2)
    assert norm_constants(1, Fraction(1, 2), 6) == (72, Fraction(1, 2))
    with pytest.raises(InputError):
        norm_constants(1, 0, 6)


def test_shells_enumerate_the_sup_sphere():
    for n, m in [(1, 3), (2, 2), (3, 1), (3, 2)]:
        expected = sorted(v for v in itertools.product(range(-m, m + 1), repeat=n) if max(map(abs, v)) == m)
        assert list(iter_shell(n, m)) == expected


# ------------------------------------------------------------ HNF


def test_hnf_complement_examples():
    m = hnf_complement([1, -4])
    assert m == [[1, -4], [0, 1]] and determinant(m) == 1
    assert hnf_complement([0, 1]) == [[0, 1], [1, 0]]
    assert hnf_complement([1]) == [[1]]
    with pytest.raises(InputError):
        hnf_complement([2, 4])
    with pytest.raises(InputError):
        hnf_complement([0, 0])


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=4))
def test_hnf_complement_is_unimodular(a):
    assume(any(a) and math.gcd(*a) == 1)
    m = hnf_complement(a)
    assert m[0] == a
    assert abs(determinant(m)) == 1


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_hermite_normal_form(rows, cols, data):
    a = [[data.draw(st.integers(-9, 9)) for _ in range(cols)] for _ in range(rows)]
    h, u, ui = hermite_normal_form(a)
    assert matmul(u, a) == h
    assert matmul(u, ui) == identity_matrix(rows)
    assert abs(determinant(u)) == 1
    # echelon with positive pivots and reduced entries above them
    last = -1
    for r, row in enumerate(h):
        nz = [j for j, v in enumerate(row) if v]
        if not nz:
            assert all(not any(x) for x in h[r:])
            break
        p = nz[0]
        assert p > last and row[p] > 0
        assert all(0 <= h[i][p] < row[p] for i in range(r))
        last = p


# ------------------------------------------------------------ relations and bases


def test_integer_relation_examples():
    d2 = DELTA ** 2
    a = integer_relation([d2, G1])
    assert a in {(1, -4), (-1, 4)}
    assert integer_relation([w("s1")]) is None
    a_, b_ = z([1, 0]), z([0, 1])
    assert integer_relation([a_ * b_, a_, b_]) == (1, -1, -1)


def test_integer_relation_budget_is_not_independence():
    with pytest.raises(BudgetExceeded):
        integer_relation([w("s1"), w("s3")], budget=50)


def test_basis_examples():
    b = abelian_basis([DELTA ** 2, G1])
    assert list(b.generators) == [G1] and b.is_basis
    assert list(abelian_basis([G1]).generators) == [G1]
    a = z([1, 0])
    b = abelian_basis([a ** 2, a ** 3])
    assert list(b.generators) == [a]
    assert product([a ** 2, a ** 3], b.coordinates[0]) == a


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=3))
def test_free_abelian_basis_against_lattice_oracle(vectors):
    gens = [z(v) for v in vectors]
    b = abelian_basis(gens)
    basis_vecs = [exponent_vector(g) for g in b.generators]
    # same lattice, and the basis is independent
    assert all(lattice_member(basis_vecs, v) for v in vectors)
    assert all(lattice_member(vectors, v) for v in basis_vecs)
    assert integer_relation(b.generators) is None
    for g, c in zip(b.generators, b.coordinates):
        assert product(gens, c) == g
    assert len(abelian_basis(list(b.generators)).generators) == len(b.generators)


@settings(max_examples=40)
@given(
    st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=2),
    st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
)
def test_free_abelian_membership_against_lattice_oracle(vectors, u):
    gens = [z(v) for v in vectors]
    a = member(z(u), gens)
    assert (a is not None) == lattice_member(vectors, u)
    if a is not None:
        assert product(gens, a) == z(u)
    r = conj_member(z(u), gens)
    assert (r is None) == (a is None)


def test_braid_basis_idempotent():
    for gens in ([DELTA ** 2, G1], [w("s1"), w("s3"), w("s1 s3")], [w("s1 s1"), w("s1 s1 s1")]):
        b = abelian_basis(gens)
        b2 = abelian_basis(list(b.generators))
        assert len(b2.generators) == len(b.generators)
        assert subgroups_equal(gens, list(b.generators))


# ------------------------------------------------------------ membership


def test_member_examples():
    assert member(DELTA ** 2, [G1]) == (4,)
    assert member(Element.identity(B4), [G1]) == (0,)
    assert member(w("s1"), [DELTA ** 2]) is None
    assert member(DELTA ** 2, [DELTA ** 2, G1]) == (0, 4)
    assert member(w("s1 s1 s3"), [w("s1"), w("s3")]) == (2, 1)
    assert member(w("s2"), [w("s1"), w("s3")]) is None


def test_conj_member_examples():
    a, x = conj_member(G2, [G1])
    assert a == (1,)
    assert x.inverse() * product([G1], a) * x == G2
    assert conj_member(Element.identity(B4), [G1])[0] == (0,)
    assert conj_member(w("s1"), [DELTA ** 2]) is None
    a, x = conj_member(w("s3 s3 s3"), [w("s1")])
    assert a == (3,) and x.inverse() * w("s1") ** 3 * x == w("s3 s3 s3")


def test_equality_examples():
    assert subgroups_equal([DELTA ** 2, G1], [G1])
    assert subgroups_equal([w("s1")], [w("s1")])
    assert not subgroups_equal([w("s1")], [w("s1 s1")])
    assert subgroups_equal([w("s1"), w("s3")], [w("s1 s3"), w("s3")])


def test_subgroup_conjugacy_examples():
    x = subgroups_conjugate([G1], [G3])
    assert x is not None
    assert subgroups_equal([G1.conjugate(x)], [G3])
    assert subgroups_conjugate([w("s1")], [w("s1"), w("s3")]) is None
    assert subgroups_conjugate([w("s1")], [G1]) is None
    # generator sign does not matter: <s1> and <s3^-1> are conjugate
    x = subgroups_conjugate([w("s1")], [w("s3").inverse()])
    assert x is not None and subgroups_equal([w("s1").conjugate(x)], [w("s3")])


def test_non_commuting_generators_rejected():
    from garside import MathDomainError

    with pytest.raises(MathDomainError):
        abelian_basis([w("s1"), w("s2")])


# ------------------------------------------------------------ norm sandwich


@pytest.mark.parametrize("gens", [[G1], [w("s1"), w("s3")], [w("s1 s3 s2"), DELTA ** 2], [z([1, 0]), z([1, 1])]], ids=str)
def test_translation_norm_sandwich(gens):
    b = abelian_basis(gens)
    D1, D2 = b.constants()
    n = b.rank
    for a in itertools.product(range(-3, 4), repeat=n):
        if not any(a):
            continue
        norm = max(map(abs, a))
        t = translation_number(b.evaluate(a))
        assert norm / D1 <= t <= D2 * norm


def test_presentation_records_translation_numbers():
    p = presentation([G1, DELTA ** 2])
    assert p.translation == (Fraction(1, 2), Fraction(2))
    assert p.K == 2 and not p.is_basis
