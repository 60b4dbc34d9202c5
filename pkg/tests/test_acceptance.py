"""Acceptance gate: one PASS/FAIL line per criterion, with pinned runtime limits."""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from gogroups import bs, fixtures, gog, raag
from gogroups.bs import BSParams
from gogroups.intlattice import abelianization_invariants
from gogroups.quotients import reidemeister_schreier, todd_coxeter
from gogroups.subdirect import Budget, Factor, classify_structure, membership_semidecide, quotient_presentation, \
    verify_membership
from gogroups.words import enumerate_reduced_words, inverse

from oracles import raag_rewrite_key

P4 = fixtures.P4
P4F = Factor(P4)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, limit=None):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - t0
            assert limit is None or elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - t0
            with capsys.disabled():
                print(f"\nACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {title}")
    return run


def test_01_raag_oracle_equivalence(criterion):
    with criterion(1, "P4 normal forms match rewriting closure on the radius-4 ball", limit=60):
        words = list(enumerate_reduced_words(4, 4))
        assert len(words) == 3201
        by_nf, by_oracle = {}, {}
        for w in words:
            by_nf.setdefault(raag.raag_normal_form(P4, w), set()).add(w)
            by_oracle.setdefault(raag_rewrite_key(lambda i, j: P4.commutes[i][j], w), set()).add(w)
        discrepancies = {frozenset(s) for s in by_nf.values()} ^ {frozenset(s) for s in by_oracle.values()}
        assert not discrepancies


def test_02_kernel_basis(criterion):
    with criterion(2, "kernel basis maps to 0 and freely generates up to length 4", limit=30):
        phi = raag.HomToZn(1, ((1,), (1,), (1,), (1,)))
        basis = [P4.parse(w) for w in fixtures.SUM_KERNEL_BASIS]
        assert all(raag.eval_hom(P4, phi, b) == (0,) for b in basis)
        count = 0
        for w in enumerate_reduced_words(3, 4):
            if not w:
                continue
            count += 1
            expanded = [x for i, s in w for x in (basis[i] if s > 0 else inverse(basis[i]))]
            assert not raag.word_problem(P4, expanded)
        assert count == 936


def test_03_quotient_is_infinite_cyclic(criterion):
    with criterion(3, "P4 modulo the kernel basis abelianizes to Z"):
        Q = quotient_presentation(P4F, [P4.parse(w) for w in fixtures.SUM_KERNEL_BASIS])
        assert abelianization_invariants(Q) == (1, [])


def test_04_droms_index_two(criterion):
    with criterion(4, "mod-2 kernel has index 2 and 7 Schreier generators"):
        P = P4F.presentation()
        res = todd_coxeter(P, [P.parse(w) for w in fixtures.DROMS_SUBGROUP], max_cosets=100)
        assert res.status == "closed" and res.index == 2
        assert reidemeister_schreier(P, res).ngens == 7


def test_05_bs_abelianization(criterion):
    with criterion(5, "BS h1 map: relators vanish, Bezout witnesses, additivity", limit=10):
        rng = random.Random(5)
        for m, n in [(2, 3), (3, 5), (2, 5)]:
            p = BSParams(m, n)
            for i in range(-2, 3):
                assert bs.h1_image(p, bs.relator_xi(p, i)).is_zero()
            w1, wn = bs.bezout_witnesses(p)
            assert bs.h1_image(p, w1).value == Fraction(1, m)
            assert bs.h1_image(p, wn).value == Fraction(1, n)
            for _ in range(1000):
                u = tuple((rng.randint(-4, 4), rng.choice((1, -1))) for _ in range(rng.randrange(10)))
                v = tuple((rng.randint(-4, 4), rng.choice((1, -1))) for _ in range(rng.randrange(10)))
                assert bs.h1_image(p, u + v) == bs.h1_image(p, u) + bs.h1_image(p, v)


def test_06_conjugation_power_identities(criterion):
    with criterion(6, "conjugation-power identities hold under Britton reduction", limit=10):
        for m, n in [(2, 3), (3, 2), (-2, 3)]:
            p = BSParams(m, n)
            for M in range(1, 4):
                for k in range(1, M + 1):
                    r = bs.conjugation_power_identity(p, M, k)
                    assert r.holds, (m, n, M, k, r.exponent, r.predicted)


def test_07_power_in_N(criterion):
    with criterion(7, "power_in_N exponent matches direct substitution"):
        p = BSParams(2, 3)
        for M in range(1, 4):
            for k in range(1, M + 1):
                q = bs.power_in_N_exponent(p, M, k)
                assert q != 0
                assert q == 3**M * 2 ** (M - k) * (2**k - 3**k)
                assert bs.power_in_N_witness(p, M, k)[1] == q
        with pytest.raises(ValueError):
            bs.power_in_N_exponent(BSParams(2, 2), 1, 1)


def test_08_membership(criterion):
    with criterion(8, "membership: 20 re-verified witnesses and a degree-2 separation", limit=10):
        H = [P4.parse(x) for x in ("a", "b", "c")]
        rng = random.Random(8)
        budget = Budget(max_length=8, max_degree=2, max_steps=200_000)
        for _ in range(20):
            g = tuple((rng.randrange(3), rng.choice((1, -1))) for _ in range(rng.randrange(1, 7)))
            v = membership_semidecide(P4F, H, g, budget)
            assert v.status == "yes" and verify_membership(P4F, H, g, v)
        d = P4.parse("d")
        v = membership_semidecide(P4F, H, d, budget)
        assert v.status == "no" and v.certificate.assignment.degree == 2
        assert verify_membership(P4F, H, d, v)


def test_09_cross_model_consistency(criterion):
    with criterion(9, "BS normal forms agree with the one-loop graph of groups up to length 8"):
        words = list(enumerate_reduced_words(2, 8))
        for m, n in [(2, 3), (2, 2)]:
            p, G = BSParams(m, n), gog.baumslag_solitar_gog(m, n)
            nf, el = {}, {}
            for w in words:
                nf.setdefault(bs.bs_normal_form(p, w), set()).add(w)
                el.setdefault(gog.element_from_word(G, w), set()).add(w)
                assert bs.bs_word_problem(p, w) == gog.word_problem(G, w)
            assert {frozenset(s) for s in nf.values()} == {frozenset(s) for s in el.values()}


def test_10_wpd_and_kernel(criterion):
    with criterion(10, "WPD candidate verified to radius 4; kernels of the action certified"):
        G = gog.P4_SPLITTING
        g = gog.wpd_candidate(G)
        assert gog.classify_isometry(G, g) == gog.HYPERBOLIC
        res = gog.check_relative_wpd(G, g, 4)
        assert res.status == "verified" and res.radius == 4
        k = gog.kernel_of_action(G)
        assert k.status == "trivial" and gog.verify_kernel(G, k)
        B = gog.baumslag_solitar_gog(2, 2)
        k = gog.kernel_of_action(B)
        assert k.status == "cyclic" and k.generator == gog.parse_element(B, "x^2")
        assert gog.verify_kernel(B, k)


def test_11_structure_classification(criterion):
    with criterion(11, "Z-kernel and finite-index fixtures classified, reports deterministic"):
        S = fixtures.SUBDIRECT["z_kernel_p4xp4"]
        r = classify_structure(S)
        assert r.bucket == "Z-kernel"
        assert r.abelianizations[0][0] == r.abelianizations[1][0] == 1
        assert r.to_json(S) == classify_structure(S).to_json(S)
        F = fixtures.SUBDIRECT["full_product_p4xp4"]
        r = classify_structure(F)
        assert r.bucket == "finite-index" and r.index_in_product == 1
        assert r.to_json(F) == classify_structure(F).to_json(F)
