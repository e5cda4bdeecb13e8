from itertools import product

import pytest
from hypothesis import given, strategies as st

from genkostka import shapes
from genkostka import tableaux as tb
from genkostka.errors import UserInputError

import oracles

words = st.lists(st.integers(1, 4), max_size=8).map(tuple)


def test_insertion_small():
    assert tb.tableau_of_word((2, 1)) == ((1,), (2,))
    assert tb.tableau_of_word((1, 2)) == ((1, 2),)
    assert tb.row_word(((1, 2), (2,))) == (2, 1, 2)


@given(words)
def test_insertion_round_trip(w):
    t = tb.tableau_of_word(w)
    assert tb.is_tableau(t)
    assert tb.tableau_of_word(tb.row_word(t)) == t
    assert sorted(tb.row_word(t)) == sorted(w)


@given(words, words)
def test_product_is_insertion_of_concatenation(u, v):
    s, t = tb.tableau_of_word(u), tb.tableau_of_word(v)
    assert tb.product(s, t) == tb.tableau_of_word(u + v)
    assert tb.product(s, ()) == s


def test_knuth_relation_example():
    assert tb.knuth_equivalent((3, 1, 2), (1, 3, 2))
    assert not tb.knuth_equivalent((1, 2), (2, 1))


@pytest.mark.parametrize("w", [
    (1,), (3, 1, 2), (2, 1, 3, 1), (3, 2, 1), (1, 2, 2, 1, 3), (2, 3, 1, 1, 2, 3),
    ((2, 1), (1, 2), (1, 1), (2, 1)),
])
def test_knuth_class_against_permutation_filter(w):
    expected = oracles.knuth_class_brute(w, tb.tableau_of_word)
    assert list(tb.knuth_class(w)) == expected


@given(st.lists(st.integers(1, 3), max_size=6).map(tuple))
def test_knuth_class_members_share_the_tableau(w):
    t = tb.tableau_of_word(w)
    assert all(tb.tableau_of_word(v) == t for v in tb.knuth_class(w))


def test_longest_k_increasing_against_brute_force():
    for length in range(0, 7):
        for w in product((1, 2, 3), repeat=length):
            for k in (1, 2, 3):
                assert tb.longest_k_increasing(w, k) == oracles.longest_k_increasing_brute(w, k)


def test_longest_k_increasing_simple():
    assert tb.longest_k_increasing((1, 2, 3, 4), 1) == 4
    assert tb.longest_k_increasing((4, 3, 2, 1), 2) == 2


def test_classical_cyclage_chain_example():
    t = tb.tableau_of_word((3, 2, 1, 1, 2))
    chain = tb.classical_cyclage_chain(t)
    assert chain == [
        t,
        tb.tableau_of_word((2, 1, 1, 2, 3)),
        tb.tableau_of_word((3, 1, 1, 2, 2)),
        tb.tableau_of_word((1, 1, 2, 2, 3)),
    ]
    assert tb.classical_cocharge(t) == 3
    assert tb.classical_charge(t) == 1


def test_classical_extremes():
    tmin = tb.tableau_of_word((1, 1, 2, 2, 3))
    tmax = tb.tableau_of_word((3, 2, 2, 1, 1))
    assert tb.classical_cocharge(tmin) == 0
    assert tb.classical_cocharge(tmax) == shapes.content_norm((2, 2, 1)) == 4


@pytest.mark.parametrize("n", range(1, 7))
def test_classical_charge_against_standard_subwords(n):
    for mu in shapes.partitions(n):
        for lam in shapes.partitions(n):
            for t in tb.tableaux_with_content(lam, list(enumerate(mu, 1))):
                assert tb.classical_charge(t) == oracles.lascoux_schutzenberger_charge(tb.row_word(t))


def test_kostka_numbers():
    assert tb.kostka_number((2, 1), (1, 1, 1)) == 2
    for n in range(1, 6):
        for lam in shapes.partitions(n):
            assert tb.kostka_number(lam, lam) == 1
            for mu in shapes.partitions(n):
                k = tb.kostka_number(lam, mu)
                assert k == oracles.kostka_number_brute(lam, mu)
                if not shapes.dominates(lam, mu):
                    assert k == 0


def test_ssyt_sorted_and_valid():
    ts = tb.ssyt((2, 1), 3)
    assert len(ts) == 8
    assert list(ts) == sorted(ts)
    assert all(tb.is_tableau(t) for t in ts)


def test_text_and_json():
    t = ((1, 1, 2), (2, 3))
    assert tb.to_text(t) == "2 3\n1 1 2"
    assert tb.from_json(tb.to_json(t), plain=True) == t
    c = (((1, 1), (1, 2)),)
    assert tb.to_text(c) == "1 1^2"
    assert tb.from_json(tb.to_json(c)) == c
    with pytest.raises(UserInputError):
        tb.from_json([[[2, 1], [1, 1]]], plain=True)
