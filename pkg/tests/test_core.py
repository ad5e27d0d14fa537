import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqlr.core import (
    DomainError,
    all_words,
    conjugate,
    content,
    in_box,
    is_partition,
    is_yamanouchi,
    parse_parts,
    partition,
    partition_to_word,
    partitions_in_box,
    word_to_partition,
)


def test_content_examples():
    assert content([1, 1, 2, 3, 2, 4, 3, 1, 2], 4) == (3, 3, 2, 1)
    assert content([], 3) == (0, 0, 0)
    assert content([2, 2, 2], 2) == (0, 3)
    with pytest.raises(DomainError):
        content([1, 3], 2)


def test_yamanouchi_examples():
    assert is_yamanouchi([1, 1, 2, 3, 2, 4, 3, 1, 2])
    assert not is_yamanouchi([2, 1])
    assert is_yamanouchi([1, 2, 1, 2, 3])
    assert is_yamanouchi([])


def test_words():
    assert word_to_partition("0110001010") == (5, 5, 2, 1)
    assert word_to_partition("001001100") == (4, 2, 2)
    assert word_to_partition("111000") == (3, 3, 3)
    assert partition_to_word((5, 5, 2, 1), 10) == "0110001010"
    assert partition_to_word((4, 3, 1), 9) == "001010010"
    assert partition_to_word((0, 0), 5) == "00011"
    with pytest.raises(DomainError):
        partition_to_word((4, 1), 5)


def test_conjugate_examples():
    assert conjugate((3, 2)) == (2, 2, 1)
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate((3, 3, 1)) == (3, 2, 2)


def test_partition_validation():
    assert partition((2,), 3) == (2, 0, 0)
    with pytest.raises(DomainError):
        partition((1, 2), 2)
    with pytest.raises(DomainError):
        partition((1, 1, 1), 2)
    with pytest.raises(DomainError):
        partition((-1,), 1)
    with pytest.raises(DomainError):
        parse_parts("3,x")
    assert parse_parts("") == ()
    assert parse_parts(" 3, 2 ") == (3, 2)


def test_box_counts():
    # binomial(n, d) partitions fit in a d x (n-d) box
    assert len(list(partitions_in_box(3, 3))) == 20
    assert len(list(all_words(6, 3))) == 20
    assert all(in_box(p, 3, 6) for p in partitions_in_box(3, 3))


words = st.integers(1, 8).flatmap(lambda n: st.integers(0, n).flatmap(
    lambda d: st.permutations(["1"] * d + ["0"] * (n - d)).map("".join)))


@given(words)
def test_word_round_trip(w):
    p = word_to_partition(w)
    assert is_partition(p)
    assert partition_to_word(p, len(w)) == w


@given(st.lists(st.integers(0, 6), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True))))
def test_conjugate_is_an_involution(p):
    q = conjugate(p)
    assert sum(q) == sum(p)
    assert conjugate(q) == tuple(v for v in p if v)


@given(st.lists(st.integers(1, 4), max_size=10))
def test_yamanouchi_iff_prefix_contents_are_partitions(seq):
    expect = all(is_partition(content(seq[:k], 4)) for k in range(len(seq) + 1))
    assert is_yamanouchi(seq) == expect
