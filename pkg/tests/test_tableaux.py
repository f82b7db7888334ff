from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from cyclic_descents.errors import DomainError, ResourceLimitError
from cyclic_descents.shapes import (
    SkewShape,
    all_skew_shapes,
    rotate_mask,
    straight_shape,
    strip_shape,
)
from cyclic_descents.symfunc import hall_inner, ribbon_schur, skew_schur
from cyclic_descents.tableaux import (
    SemistandardTableau,
    StandardTableau,
    count_ssyt,
    count_syt,
    cylindric_ribbon,
    enumerate_cylindric_tableaux,
    enumerate_ssyt,
    enumerate_syt,
    is_horizontal_strip_sum,
    iter_cylindric_tableaux,
    permutation_to_strip_tableau,
    promotion,
    strip_cdes,
    strip_p,
)

from conftest import skew_shapes
from oracles import brute_syt


def test_syt_counts():
    assert len(enumerate_syt(straight_shape([3, 2, 1]))) == 16
    assert len(enumerate_syt(straight_shape([5]))) == 1
    assert [t.rows() for t in enumerate_syt(straight_shape([2, 2]))] == [
        [[1, 2], [3, 4]],
        [[1, 3], [2, 4]],
    ]


def test_enumeration_is_sorted_and_valid():
    tabs = enumerate_syt(SkewShape((4, 3, 2), (1, 1)))
    assert [t.entries for t in tabs] == sorted(t.entries for t in tabs)
    assert all(t.is_valid() for t in tabs)
    assert len(tabs) == count_syt(SkewShape((4, 3, 2), (1, 1)))


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_brute_force(n):
    for s in all_skew_shapes(n):
        assert [t.entries for t in enumerate_syt(s)] == brute_syt(s)


def test_des_set_examples():
    T = StandardTableau.from_rows(SkewShape((4, 3, 2), (1, 1)), [[1, 2, 7], [3, 5], [4, 6]])
    assert list(T.des_set()) == [2, 3, 5]
    assert T.des() == 3
    row = StandardTableau.from_rows(straight_shape([4]), [[1, 2, 3, 4]])
    assert list(row.des_set()) == []
    col = StandardTableau.from_rows(straight_shape([1] * 4), [[1], [2], [3], [4]])
    assert list(col.des_set()) == [1, 2, 3]


def test_from_rows_rejects_non_standard():
    with pytest.raises(DomainError):
        StandardTableau.from_rows(straight_shape([2, 1]), [[2, 1], [3]])


def test_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_syt(straight_shape([3, 3, 2]), limit=10)


def test_strip_example():
    shape = strip_shape([3, 4, 2])
    T = StandardTableau.from_rows(shape, [[3, 9], [1, 5, 7, 8], [2, 4, 6]])
    assert list(strip_cdes(T)) == [1, 3, 5, 9]
    pT = strip_p(T)
    assert pT.rows() == [[1, 4], [2, 6, 8, 9], [3, 5, 7]]
    assert list(strip_cdes(pT)) == [1, 2, 4, 6]


def test_permutation_embedding():
    T = permutation_to_strip_tableau([5, 3, 1, 4, 2])
    assert T.rows() == [[1], [4], [2], [5], [3]]
    # Cellini: 5>3, 3>1, 4>2, 2>5 fails
    assert list(strip_cdes(T)) == [1, 2, 4]


def test_strip_cdes_needs_strip():
    T = enumerate_syt(straight_shape([2, 1]))[0]
    with pytest.raises(DomainError):
        strip_cdes(T)
    assert not is_horizontal_strip_sum(straight_shape([3]))


@pytest.mark.parametrize("alpha", [(1, 1), (2, 1), (1, 2, 1), (3, 4, 1), (2, 2, 2, 1), (1,) * 6])
def test_strip_equivariance_and_order(alpha):
    n = sum(alpha)
    for T in enumerate_syt(strip_shape(alpha)):
        c = strip_cdes(T)
        assert strip_cdes(strip_p(T)).mask == rotate_mask(c.mask, 1, n)
        assert c.mask & ((1 << (n - 1)) - 1) == T.des_mask
        assert 0 < c.mask < (1 << n) - 1
        U = T
        for _ in range(n):
            U = strip_p(U)
        assert U == T


def test_promotion_two_by_two():
    a, b = enumerate_syt(straight_shape([2, 2]))
    assert promotion(a) == b and promotion(b) == a


@pytest.mark.parametrize("rect", [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)])
def test_promotion_order_and_descent_shift(rect):
    rows, cols = rect
    n = rows * cols
    shape = straight_shape([cols] * rows)
    for T in enumerate_syt(shape):
        U = T
        for _ in range(n):
            U = promotion(U)
            assert U.is_valid()
        assert U == T
        # descents below n - 1 move up by one
        inner = (1 << (n - 2)) - 1
        assert (promotion(T).des_mask >> 1) & inner == T.des_mask & inner


def test_promotion_domain():
    with pytest.raises(DomainError):
        promotion(enumerate_syt(straight_shape([4]))[0])
    with pytest.raises(DomainError):
        promotion(enumerate_syt(straight_shape([3, 1]))[0])


def test_count_ssyt_examples():
    assert count_ssyt(straight_shape([3, 2, 1]), 6, (1,) * 6) == 16
    for n in range(1, 5):
        for m in range(1, 5):
            assert count_ssyt(straight_shape([n]), m) == comb(n + m - 1, n)
    assert count_ssyt(straight_shape([2, 1]), 2) == 2
    assert count_ssyt(straight_shape([1, 1, 1]), 2) == 0


@given(skew_shapes(max_n=5), st.integers(1, 4))
def test_count_ssyt_matches_enumeration_and_contents(s, m):
    total = count_ssyt(s, m)
    assert total == len(enumerate_ssyt(s, m))
    by_content = sum(
        count_ssyt(s, m, c) for c in product(range(s.n + 1), repeat=m) if sum(c) == s.n
    )
    assert total == by_content


def test_semistandard_validity():
    T = SemistandardTableau(straight_shape([2, 1]), (1, 1, 2))
    assert T.is_valid() and T.content(2) == (2, 1)
    assert not SemistandardTableau(straight_shape([2, 1]), (1, 1, 1)).is_valid()


@given(skew_shapes(max_n=6))
def test_gessel_descent_fibers(s):
    n = s.n
    counts = {}
    for T in enumerate_syt(s):
        counts[T.des_mask] = counts.get(T.des_mask, 0) + 1
    f = skew_schur(s)
    for J in range(1 << (n - 1)):
        assert counts.get(J, 0) == hall_inner(f, ribbon_schur(n, J))


def test_cylindric_example_filling():
    shape, a, b = cylindric_ribbon(9, {1, 4, 5, 8})
    assert [e - f for _, f, e in shape.row_intervals()] == [2, 3, 1, 3]
    entries = (3, 7, 2, 2, 5, 3, 1, 4, 4)
    assert (entries[a], entries[b]) == (1, 7)
    listed = enumerate_cylindric_tableaux(9, {1, 4, 5, 8}, 7)
    assert SemistandardTableau(shape, entries) in listed
    assert all(T.is_valid() and T.entries[a] < T.entries[b] for T in listed)


@pytest.mark.parametrize("n", range(1, 7))
def test_cylindric_full_set_is_empty(n):
    for m in range(1, n + 1):
        assert list(iter_cylindric_tableaux(n, (1 << n) - 1, m)) == []


@pytest.mark.parametrize("n", range(2, 7))
def test_cylindric_initial_segment_vanishes(n):
    for t in range(1, n + 1):
        assert list(iter_cylindric_tableaux(n, (1 << t) - 1, t)) == []


def test_cylindric_empty_set_rejected():
    with pytest.raises(DomainError):
        enumerate_cylindric_tableaux(4, 0, 4)


def test_json_shape():
    T = enumerate_syt(SkewShape((3, 2), (1,)))[0]
    js = T.to_json()
    assert js["outer"] == [3, 2] and js["inner"] == [1]
    assert [r["entries"] for r in js["rows"]] == T.rows()
