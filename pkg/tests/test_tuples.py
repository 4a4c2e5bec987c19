import pytest
from hypothesis import given, strategies as st

from hemicones.errors import InvalidDimension, InvalidPermutation, InvalidTuple
from hemicones.tuples import (
    TupleIndex,
    complement_tuple,
    enumerate_tuples,
    johnson_adjacent,
    permutation_source_map,
    rank_tuple,
    render_tuple,
    tuple_index,
    unrank_tuple,
    validate_tuple,
)

from math import comb


def test_enumerate_tuples_order_and_count():
    ts = enumerate_tuples(5, 3)
    assert len(ts) == comb(5, 3)
    assert ts[0] == (1, 2, 3)
    assert ts[-1] == (3, 4, 5)
    assert ts == sorted(ts)


def test_enumerate_tuples_n5_k3_explicit():
    # lexicographic layout used for every coordinate vector
    assert enumerate_tuples(5, 3) == [
        (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5),
        (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5),
    ]


def test_validate_tuple_rejects_bad_input():
    with pytest.raises(InvalidTuple):
        validate_tuple(5, (1, 1, 2))
    with pytest.raises(InvalidTuple):
        validate_tuple(5, (0, 1, 2))
    with pytest.raises(InvalidTuple):
        validate_tuple(5, (3, 2, 1))
    with pytest.raises(InvalidTuple):
        validate_tuple(4, (2, 3, 5))
    validate_tuple(5, (1, 3, 5))


def test_tuple_index_bounds():
    with pytest.raises(InvalidDimension):
        TupleIndex(5, 1)
    with pytest.raises(InvalidDimension):
        TupleIndex(3, 4)
    idx = TupleIndex(6, 3)
    assert idx.size == 20
    assert idx.n == 6 and idx.k == 3


def test_tuple_index_cache_identity():
    assert tuple_index(6, 3) is tuple_index(6, 3)
    assert tuple_index(6, 3) is not tuple_index(6, 4)


@given(st.integers(2, 8), st.data())
def test_rank_unrank_roundtrip(n, data):
    k = data.draw(st.integers(2, n))
    idx = tuple_index(n, k) if k <= n else None
    if k > n:
        return
    r = data.draw(st.integers(0, idx.size - 1))
    assert rank_tuple(n, k, unrank_tuple(n, k, r)) == r


def test_rank_is_lex_position():
    for pos, t in enumerate(enumerate_tuples(5, 3)):
        assert rank_tuple(5, 3, t) == pos
        assert unrank_tuple(5, 3, pos) == t


def test_johnson_adjacent():
    assert johnson_adjacent((1, 2, 3), (1, 2, 4))
    assert not johnson_adjacent((1, 2, 3), (1, 4, 5))
    assert not johnson_adjacent((1, 2, 3), (1, 2, 3))


def test_complement_tuple():
    assert complement_tuple(6, (1, 2, 3, 4)) == (5, 6)
    assert complement_tuple(5, (1, 2, 3)) == (4, 5)


def test_render_tuple_plain_and_complement():
    assert render_tuple(5, (1, 2, 3)) == "123"
    # complement shorthand only for k = n-2 with k >= 4
    assert render_tuple(7, (1, 2, 3, 4, 5)) == "~67"
    assert render_tuple(6, (1, 2, 3, 4)) == "~56"
    assert render_tuple(5, (1, 2, 3)) != "~45"
    assert render_tuple(12, (1, 2, 10)) == "1,2,10"


def test_permutation_source_map_identity():
    idx = tuple_index(5, 3)
    assert list(permutation_source_map(idx, tuple(range(1, 6)))) == list(range(idx.size))


def test_permutation_source_map_transposition():
    idx = tuple_index(4, 3)
    # swap 1 <-> 2: coordinate at tuple t comes from the sorted preimage
    src = permutation_source_map(idx, (2, 1, 3, 4))
    ts = enumerate_tuples(4, 3)
    # x'_{134} = x_{234} and x'_{234} = x_{134}; 123/124 fixed
    assert [ts[i] for i in src] == [(1, 2, 3), (1, 2, 4), (2, 3, 4), (1, 3, 4)]


def test_permutation_source_map_rejects_non_permutation():
    idx = tuple_index(4, 3)
    with pytest.raises(InvalidPermutation):
        permutation_source_map(idx, (1, 1, 3, 4))
    with pytest.raises(InvalidPermutation):
        permutation_source_map(idx, (1, 2, 3))


@given(st.permutations(list(range(1, 7))))
def test_source_map_composes(perm):
    idx = tuple_index(6, 3)
    perm = tuple(perm)
    src = permutation_source_map(idx, perm)
    # applying a permutation then its inverse is the identity on vectors
    inv = [0] * 6
    for i, p in enumerate(perm):
        inv[p - 1] = i + 1
    src_inv = permutation_source_map(idx, tuple(inv))
    v = list(range(idx.size))
    once = [v[j] for j in src]
    back = [once[j] for j in src_inv]
    assert back == v
