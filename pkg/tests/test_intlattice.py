import itertools
import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from gogroups.fixtures import P4
from gogroups.intlattice import (
    DegenerateEdgeError,
    abelianization_invariants,
    coset_decompose,
    coset_representative,
    cyclic_intersection,
    cyclic_membership,
    determinant,
    is_primitive,
    is_smith_form,
    matmul,
    matrix_from_json,
    matrix_to_json,
    smith_normal_form,
)
from gogroups.quotients import FinitePresentation


def determinantal_divisors(A):
    """Independent oracle: d_k = gcd of all k x k minors."""
    rows, cols = len(A), len(A[0])
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for R in itertools.combinations(range(rows), k):
            for C in itertools.combinations(range(cols), k):
                g = gcd(g, abs(determinant([[A[i][j] for j in C] for i in R])))
        out.append(g)
    return out


def invariant_factors(A):
    d = determinantal_divisors(A)
    out, prev = [], 1
    for x in d:
        if x == 0:
            out.append(0)
        else:
            out.append(x // prev)
            prev = x
    return out


def check_snf(A):
    S = smith_normal_form(A)
    assert matmul(matmul(S.U, A), S.V) == S.D
    assert abs(determinant(S.U)) == 1 and abs(determinant(S.V)) == 1
    assert is_smith_form(S.D)
    return S


def test_snf_examples():
    I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert check_snf(I3).D == I3
    assert check_snf([[2, 0], [0, 3]]).diagonal() == [1, 6]
    assert check_snf([[2 - 3]]).D == [[1]]


def test_snf_random_against_minors():
    rng = random.Random(2024)
    for _ in range(500):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        A = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        S = check_snf(A)
        assert S.diagonal() == invariant_factors(A)


def test_snf_deterministic_and_exact_for_large_entries():
    A = [[2**70, 3**50], [5**30, 7**25]]
    S1, S2 = smith_normal_form(A), smith_normal_form(A)
    assert (S1.U, S1.D, S1.V) == (S2.U, S2.D, S2.V)
    check_snf(A)
    assert matrix_from_json(matrix_to_json(S1.U)) == S1.U
    assert '"' in matrix_to_json([[2**70]])


@pytest.mark.parametrize("v,u,k", [((2, 4), (6, 12), 3), ((2, 4), (6, 13), None), ((1, 0), (0, 0), 0)])
def test_cyclic_membership_examples(v, u, k):
    assert cyclic_membership(v, u) == k


def test_zero_vector_is_degenerate():
    for fn in (lambda: cyclic_membership((0, 0), (1, 1)), lambda: coset_representative((0,), (3,)),
               lambda: is_primitive((0, 0))):
        with pytest.raises(DegenerateEdgeError):
            fn()


def test_cyclic_membership_brute_force():
    rng = random.Random(5)
    for _ in range(300):
        v = tuple(rng.randint(-4, 4) for _ in range(2))
        if not any(v):
            continue
        u = tuple(rng.randint(-12, 12) for _ in range(2))
        brute = [k for k in range(-1000, 1001) if tuple(k * x for x in v) == u]
        assert cyclic_membership(v, u) == (brute[0] if brute else None)


def test_coset_representative_examples():
    assert coset_representative((1, 0), (5, 7)) == (0, 7)
    assert coset_representative((2, 0), (5, 7)) == (1, 7)
    assert coset_representative((3, -6), (3, -6)) == (0, 0)


@given(st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)).filter(any),
       st.tuples(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20)),
       st.integers(-10, 10))
def test_coset_representative_is_a_congruence(v, u, k):
    rep, q = coset_decompose(v, u)
    assert tuple(r + q * x for r, x in zip(rep, v)) == u
    assert coset_representative(v, tuple(a + k * b for a, b in zip(u, v))) == rep
    assert coset_representative(v, rep) == rep


def test_coset_representative_separates_classes():
    v = (2, 4)
    pts = [(a, b) for a in range(-4, 5) for b in range(-4, 5)]
    for u in pts:
        for w in pts:
            same = cyclic_membership(v, (u[0] - w[0], u[1] - w[1])) is not None
            assert (coset_representative(v, u) == coset_representative(v, w)) == same


@pytest.mark.parametrize("v,ok", [((2, 3), True), ((2, 4), False), ((1,), True)])
def test_is_primitive(v, ok):
    assert is_primitive(v) is ok


def test_cyclic_intersection():
    assert cyclic_intersection((2,), (3,)) == (6,)
    assert cyclic_intersection((1, 0), (0, 1)) == (0, 0)
    assert cyclic_intersection((2, 4), (-3, -6)) == (6, 12)


def test_abelianization_examples():
    assert abelianization_invariants(FinitePresentation(P4.alphabet, tuple(P4.relators()))) == (4, [])
    bs23 = FinitePresentation.from_strings(["x", "t"], ["t^-1 x^2 t x^-3"])
    bs22 = FinitePresentation.from_strings(["x", "t"], ["t^-1 x^2 t x^-2"])
    assert abelianization_invariants(bs23) == (1, [])
    assert abelianization_invariants(bs22) == (2, [])
    z6 = FinitePresentation.from_strings(["a", "b"], ["a^2", "b^3", "a b a^-1 b^-1"])
    assert abelianization_invariants(z6) == (0, [6])
