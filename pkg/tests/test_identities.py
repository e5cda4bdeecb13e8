from fractions import Fraction

import pytest

from genkostka import identities as ids
from genkostka import shapes
from genkostka.errors import UserInputError
from genkostka.qpoly import ONE, Q, qbinom


def test_duality_small():
    for s in range(1, 6):
        for mu in shapes.rect_multisets(s, 3):
            for lam in shapes.partitions(s, max_len=3):
                assert ids.check_duality(lam, mu, method="paths").ok


def test_duality_palindromic_when_self_dual():
    lam = (2, 1)
    mu = ((1, 1), (1, 1), (1, 1))
    mu_alt = ((2, 1), (1, 2))
    for m in (mu, mu_alt):
        assert sorted(shapes.rectlist_dual(m)) == sorted(m)
        k = ids.kostka(lam, m)
        assert k == k.substitute_inverse_q().shift(shapes.rectlist_norm(m))


def test_linear_relations_single_rectangle():
    rep = ids.check_s_as_sum((2, 1), ((3, 1),))
    assert rep.ok and rep.left == ONE
    for s in range(1, 5):
        for mu in shapes.rect_multisets(s, 3):
            for lam in shapes.compositions(s, 3):
                assert ids.check_s_as_sum(lam, mu).ok
            for lam in shapes.partitions(s, max_len=3):
                assert ids.check_ktilde_as_sum(lam, mu, 3).ok


def test_recurrences_small():
    L = ((2, 0), (1, 0), (0, 0))
    for lam in [(3, 1, 0), (2, 1, 1), (2, 2, 0)]:
        assert ids.check_recurrence_S(L, 1, 1, lam).ok
        assert ids.check_recurrence_K(L, 1, 1, lam).ok
        assert ids.check_recurrence_K(L, 1, 1, lam, fermionic_side=True).ok
    with pytest.raises(UserInputError):
        ids.check_recurrence_S(((1,), (0,)), 1, 1, (1, 0))


def test_column_removal_small():
    L = ((1, 1), (1, 0))
    for lam in [(3, 1), (2, 2)]:
        for i in (1, 2):
            assert ids.check_column_removal(L, i, lam, "S").ok
            assert ids.check_column_removal(L, i, lam, "K").ok


def test_a1_closed_form_simple_values():
    assert ids.a1_closed_form((1,), Fraction(1, 2)) == ONE
    assert ids.a1_closed_form((1,), Fraction(-1, 2)) == ONE
    for a in (-1, 0, 1):
        assert ids.a1_closed_form((2,), a) == qbinom(2, a + 1)
        assert ids.a1_paths((2,), a) == qbinom(2, a + 1)
    assert ids.a1_closed_form((2,), Fraction(1, 2)).is_zero()


def test_a1_against_paths():
    for L in [(3,), (1, 1), (0, 2), (2, 1), (1, 0, 1), (1, 1, 1)]:
        lN = ids.ells(L)[-1]
        a = Fraction(-lN, 2)
        while a <= Fraction(lN, 2):
            assert ids.check_a1(L, a).ok
            a += 1


def test_a1_family_reduces():
    L = (1, 1, 0)
    for a in (Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2)):
        assert ids.check_a1_family(L, 1, 1, a).ok
        assert ids.check_a1_family(L, 2, 2, a).ok
    with pytest.raises(UserInputError):
        ids.check_a1_family(L, 1, 2, 0)


def test_rr_single_instance():
    rep = ids.check_rr((2,), 5, 1, 1)
    assert rep.ok and rep.left == ONE


@pytest.mark.parametrize("p", [4, 5, 6])
def test_rr_unit_vectors(p):
    for N in range(1, min(2, p - 3) + 1):
        for i in range(1, N + 1):
            L = tuple(1 if k == i else 0 for k in range(1, N + 1))
            for a in range(1, p):
                for b in range(1, p - N):
                    assert ids.check_rr(L, p, a, b).ok


def test_rr_rejects_bad_parameters():
    with pytest.raises(UserInputError):
        ids.check_rr((1, 1, 1), 5, 1, 1)


@pytest.mark.parametrize("L,p", [((4,), 5), ((6,), 5), ((4, 2), 5), ((0, 4), 6)])
def test_higher_rank_at_rank_one_matches_rr(L, p):
    L2 = (L, (0,) * len(L))
    rep = ids.check_anrr(L2, p)
    assert rep.conjecture
    assert rep.left == ids.check_rr(L, p, 1, 1).left
    assert rep.ok


def test_higher_rank_admissibility():
    assert not ids.anrr_admissible(((1,), (0,), (0,)), 5)
    assert ids.anrr_admissible(((1,), (1,), (0,)), 5)
    with pytest.raises(UserInputError):
        ids.check_anrr(((1,), (0,), (0,)), 5)


def test_report_json():
    rep = ids.check_duality((2, 1), ((1, 1),) * 3, method="paths")
    d = rep.to_json()
    assert d["verdict"] == "pass"
    assert d["left"] == (Q + Q * Q).to_text()
