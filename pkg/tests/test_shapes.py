import pytest
from hypothesis import given, strategies as st

from genkostka import shapes
from genkostka.errors import UserInputError

parts = st.lists(st.integers(1, 6), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_transpose():
    assert shapes.transpose((4, 2, 1)) == (3, 2, 1, 1)
    assert shapes.transpose(()) == ()
    assert shapes.transpose(shapes.transpose((3, 3, 2))) == (3, 3, 2)


@given(parts)
def test_transpose_involution(lam):
    assert shapes.transpose(shapes.transpose(lam)) == lam
    assert sum(shapes.transpose(lam)) == sum(lam)


def test_dominance():
    assert shapes.dominates((3,), (1, 1, 1))
    assert not shapes.dominates((1, 1, 1), (3,))
    assert shapes.dominates((3, 1), (2, 2))


def test_add_and_intersect():
    assert shapes.intersect((4, 2), (3, 2, 1)) == (3, 2)
    assert shapes.add((2, 1), ()) == (2, 1)
    assert shapes.add((2, 1), (2, 1)) == (4, 2)


@pytest.mark.parametrize("mu,norm", [
    (((2, 1), (2, 1), (1, 1)), 4),
    (((2, 1), (2, 1), (1, 2)), 4),
    (((3, 2),), 0),
    ((), 0),
    (((1, 1),) * 4 + ((1, 2),), 10),
])
def test_norm(mu, norm):
    assert shapes.rectlist_norm(mu) == norm


def test_lmatrix_round_trip():
    mu = ((2, 1), (2, 1), (1, 2))
    L = shapes.lmatrix_from_rectlist(mu, 2, 2)
    assert L == ((0, 2), (1, 0))
    assert shapes.lmatrix_entry(L, 2, 1) == 1
    assert shapes.lmatrix_entry(L, 1, 2) == 2
    assert sorted(shapes.rectlist_from_lmatrix(L)) == sorted(mu)
    assert shapes.lmatrix_from_rectlist((), 2, 2) == ((0, 0), (0, 0))


def test_ell_tables():
    L = ((1,),)
    assert [shapes.ell(L, 1, i) for i in range(1, 4)] == [1, 1, 1]
    L = ((1, 0), (0, 0), (0, 0))
    assert [shapes.ellbar(L, a, 1) for a in range(1, 4)] == [1, 1, 1]
    L = ((0, 3),)
    assert shapes.ell(L, 1, 1) == 3
    assert shapes.ell(L, 1, 2) == 6
    assert shapes.ell(((0, 0),), 1, 2) == 0


def test_lmatrix_shift_rejects_negative():
    L = ((0, 2), (1, 0))
    assert shapes.lmatrix_shift(L, {(1, 2): -2}) == ((0, 0), (1, 0))
    assert shapes.lmatrix_shift(L, {(1, 2): -3}) is None


@pytest.mark.parametrize("text,mu", [
    ('[{"w":1,"h":1}]x3', ((1, 1),) * 3),
    ("(2),(2),(1x2)", ((2, 1), (2, 1), (1, 2))),
    ("(3,3),(1)", ((3, 2), (1, 1))),
    ('[{"w":2,"h":3}]', ((2, 3),)),
])
def test_parse_rectlist(text, mu):
    assert shapes.parse_rectlist(text) == mu


@pytest.mark.parametrize("bad", ["(2,1)", "nonsense", "[{\"w\":0,\"h\":1}]", "[{\"w\":1}]"])
def test_parse_rectlist_errors(bad):
    with pytest.raises(UserInputError):
        shapes.parse_rectlist(bad)


def test_rectlists_and_multisets():
    assert list(shapes.rectlists(2)) == [((1, 1), (1, 1)), ((2, 1),), ((1, 2),)]
    assert len(list(shapes.rectlists(3))) == 7
    assert len(list(shapes.rect_multisets(3, 3))) == 5
    for mu in shapes.rect_multisets(5, 3):
        assert list(mu) == sorted(mu, reverse=True)


def test_partitions_count():
    # p(n) for n = 0..8
    assert [len(shapes.partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
